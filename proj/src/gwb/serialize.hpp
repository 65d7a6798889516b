#pragma once

// JSON and CSV encodings. Keys keep insertion order, so identical inputs give
// identical bytes.

#include <string>

#include <json.hpp>

#include "gwb/burnside.hpp"
#include "gwb/cube.hpp"
#include "gwb/epi_cat.hpp"
#include "gwb/fin_coprod.hpp"
#include "gwb/mackey.hpp"
#include "gwb/span_cat.hpp"

namespace gwb::io {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& x);
Json rational_json(const Rational& q);
Rational parse_rational(const Json& j);

Json ring_to_json(const burnside::BurnsideRing& ring);
std::string marks_csv(const burnside::BurnsideRing& ring);
Json element_json(const burnside::Element& x, const std::vector<epi::SliceObject>& basis);

Json mackey_to_json(const mackey::MackeyData& m);
/// Requires ranks for every basis object and one entry per morphism.
mackey::MackeyData mackey_from_json(const Json& j);
Json axiom_report_json(const mackey::AxiomReport& rep);

Json diagram_to_json(const cube::Diagram& f);
cube::Diagram diagram_from_json(const Json& j);
Json shape_json(const cube::Shape& s);
cube::Shape shape_from_json(const Json& j);

Json span_key_json(const span::SpanKey& k);
Json span_combination_json(const span::SpanCombination& c);
Json pullback_json(const coprod::Pullback& p);
Json universal_property_json(const coprod::UniversalPropertyReport& rep);
Json orbitality_json(const epi::OrbitalityReport& rep);
Json segal_json(const burnside::SegalReport& rep);
Json pigeonhole_json(const cube::PigeonholeReport& rep);

}  // namespace gwb::io

#include "gwb/serialize.hpp"

#include <sstream>

namespace gwb::io {

using linalg::QMatrix;

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json rational_json(const Rational& q) {
  if (q.get_den() == 1) return integer_json(q.get_num());
  return Json(q.get_str());
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("bad rational '" + j.get<std::string>() + "'");
    require(q.get_den() != 0, "zero denominator in '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
  }
  throw InvalidInput("matrix entries must be integers or \"p/q\" strings");
}

namespace {

Json tuple_json(const Tuple& t) { return Json(t); }

template <class M, class F>
Json matrix_json(const M& m, F entry) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json int_matrix_json(const linalg::IntMatrix& m) {
  return matrix_json(m, [](std::int64_t x) { return Json(x); });
}

linalg::IntMatrix int_matrix_from(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  require(j.is_array() && j.size() == rows, what + ": expected " + std::to_string(rows) + " rows");
  linalg::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, what + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t k = 0; k < cols; ++k) {
      require(j[i][k].is_number_integer(), what + ": entries must be integers");
      m(i, k) = j[i][k].get<std::int64_t>();
    }
  }
  return m;
}

Tuple tuple_from(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_tuple(j.get<std::string>());
  require(j.is_array(), what + " must be a tuple");
  Tuple t;
  for (const auto& x : j) {
    require(x.is_number_integer(), what + " must contain integers");
    t.push_back(x.get<int>());
  }
  return t;
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  require(v.is_number_integer(), std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json ring_to_json(const burnside::BurnsideRing& ring) {
  Json j;
  j["d"] = ring.d();
  j["r"] = ring.r();
  Json basis = Json::array();
  for (const auto& b : ring.basis()) basis.push_back(tuple_json(b.fibers()));
  j["basis"] = basis;
  Json consts = Json::array();
  const std::size_t n = ring.rank();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        std::int64_t c = ring.constant(u, v, w);
        if (c == 0) continue;
        Json e;
        e["u"] = basis[u];
        e["v"] = basis[v];
        e["w"] = basis[w];
        e["c"] = c;
        consts.push_back(std::move(e));
      }
  j["structure_constants"] = consts;
  j["marks"] = matrix_json(burnside::marks_matrix(ring.d(), ring.r()), integer_json);
  return j;
}

std::string marks_csv(const burnside::BurnsideRing& ring) {
  auto marks = burnside::marks_matrix(ring.d(), ring.r());
  std::ostringstream out;
  out << "u";
  for (const auto& b : ring.basis()) out << ",\"" << b.to_string() << '"';
  out << '\n';
  for (std::size_t i = 0; i < marks.rows(); ++i) {
    out << '"' << ring.basis()[i].to_string() << '"';
    for (std::size_t j = 0; j < marks.cols(); ++j) out << ',' << marks(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

Json element_json(const burnside::Element& x, const std::vector<epi::SliceObject>& basis) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < x.coefficients.size(); ++i) {
    if (x.coefficients[i] == 0) continue;
    terms.push_back(Json{{"class", tuple_json(basis[i].fibers())}, {"coefficient", integer_json(x.coefficients[i])}});
  }
  return terms;
}

Json mackey_to_json(const mackey::MackeyData& m) {
  const auto& s = m.skeleton();
  Json j;
  j["d"] = m.d();
  j["r"] = m.r();
  Json ranks = Json::object();
  for (std::size_t u = 0; u < s.size(); ++u) ranks[s.objects()[u].to_string()] = m.rank(u);
  j["ranks"] = ranks;
  bool any_labels = false;
  for (const auto& l : m.labels) any_labels |= !l.empty();
  if (any_labels) {
    Json labels = Json::object();
    for (std::size_t u = 0; u < s.size(); ++u) labels[s.objects()[u].to_string()] = m.labels[u];
    j["labels"] = labels;
  }
  Json maps = Json::array();
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = 0; v < s.size(); ++v)
      for (std::size_t f = 0; f < s.homs(u, v).size(); ++f) {
        Json e;
        e["source"] = tuple_json(s.objects()[u].fibers());
        e["target"] = tuple_json(s.objects()[v].fibers());
        e["index"] = f;
        e["map"] = s.homs(u, v)[f].values();
        e["restriction"] = int_matrix_json(m.restriction(u, v, f));
        e["transfer"] = int_matrix_json(m.transfer(u, v, f));
        maps.push_back(std::move(e));
      }
  j["maps"] = maps;
  return j;
}

mackey::MackeyData mackey_from_json(const Json& j) {
  const int d = int_field(j, "d");
  const int r = int_field(j, "r");
  require(r >= 1 && r <= d, "Mackey data needs 1 <= r <= d");
  mackey::Skeleton s(d, r);
  const Json& ranks_json = field(j, "ranks");
  require(ranks_json.is_object(), "ranks must be an object keyed by tuple");
  std::vector<int> ranks(s.size(), -1);
  for (const auto& [key, value] : ranks_json.items()) {
    require(value.is_number_integer(), "rank of " + key + " must be an integer");
    ranks[s.index_of(parse_tuple(key))] = value.get<int>();
  }
  for (std::size_t u = 0; u < s.size(); ++u)
    require(ranks[u] >= 0, "missing or negative rank for " + s.objects()[u].to_string());

  mackey::MackeyData m(d, r, ranks);
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items()) {
      std::size_t u = s.index_of(parse_tuple(key));
      m.labels[u] = value.get<std::vector<std::string>>();
      require(m.labels[u].size() == static_cast<std::size_t>(ranks[u]), "label count differs from rank at " + key);
    }
  }

  std::vector<std::vector<bool>> seen(s.size() * s.size());
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = 0; v < s.size(); ++v) seen[u * s.size() + v].assign(s.homs(u, v).size(), false);
  const Json& maps = field(j, "maps");
  require(maps.is_array(), "maps must be an array");
  for (const auto& e : maps) {
    std::size_t u = s.index_of(tuple_from(field(e, "source"), "source"));
    std::size_t v = s.index_of(tuple_from(field(e, "target"), "target"));
    const Json& idx = field(e, "index");
    require(idx.is_number_unsigned() && idx.get<std::size_t>() < s.homs(u, v).size(), "morphism index out of range");
    std::size_t f = idx.get<std::size_t>();
    std::string what = s.objects()[u].to_string() + "->" + s.objects()[v].to_string() + "#" + std::to_string(f);
    if (e.contains("map")) require(tuple_from(e.at("map"), "map") == s.homs(u, v)[f].values(), what + ": map does not match index");
    require(!seen[u * s.size() + v][f], what + " appears twice");
    seen[u * s.size() + v][f] = true;
    auto ru = static_cast<std::size_t>(ranks[u]), rv = static_cast<std::size_t>(ranks[v]);
    m.restriction(u, v, f) = int_matrix_from(field(e, "restriction"), ru, rv, what + " restriction");
    m.transfer(u, v, f) = int_matrix_from(field(e, "transfer"), rv, ru, what + " transfer");
  }
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = 0; v < s.size(); ++v)
      for (std::size_t f = 0; f < s.homs(u, v).size(); ++f)
        require(seen[u * s.size() + v][f], "no matrices given for " + s.objects()[u].to_string() + "->" +
                                               s.objects()[v].to_string() + "#" + std::to_string(f));
  return m;
}

Json axiom_report_json(const mackey::AxiomReport& rep) {
  Json j;
  j["pass"] = rep.pass;
  j["identities_checked"] = rep.identities_checked;
  j["compositions_checked"] = rep.compositions_checked;
  j["cospans_checked"] = rep.cospans_checked;
  if (!rep.pass) j["failure"] = rep.failure;
  if (rep.cospan) {
    const auto& c = *rep.cospan;
    j["cospan"] = Json{{"a", c.a},
                       {"b", c.b},
                       {"e", c.e},
                       {"f_index", c.f_index},
                       {"g_index", c.g_index},
                       {"lhs", int_matrix_json(c.lhs)},
                       {"rhs", int_matrix_json(c.rhs)}};
  }
  return j;
}

Json shape_json(const cube::Shape& s) {
  if (s.kind() == cube::Shape::Kind::truncated) return Json{{"kind", "truncated"}, {"d", s.d()}, {"r", s.r()}};
  return Json{{"kind", "filtered"}, {"bounds", s.bounds()}, {"n", s.n()}};
}

cube::Shape shape_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  require(kind.is_string(), "shape kind must be a string");
  if (kind == "truncated") return cube::Shape::truncated(int_field(j, "d"), int_field(j, "r"));
  if (kind == "filtered") return cube::Shape::filtered(tuple_from(field(j, "bounds"), "bounds"), int_field(j, "n"));
  throw InvalidInput("unknown shape kind '" + kind.get<std::string>() + "'");
}

Json diagram_to_json(const cube::Diagram& f) {
  const auto& s = f.shape();
  Json j;
  j["shape"] = shape_json(s);
  j["support"] = f.on_sub_only() ? "sub" : "full";
  Json dims = Json::object();
  Json maps = Json::array();
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (!f.has(e)) continue;
    const Tuple c = s.element(e);
    dims[to_string(s.to_user(c))] = f.dim(e);
    for (int i = 0; i < s.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0) continue;
      Tuple t = c;
      --t[static_cast<std::size_t>(i)];
      maps.push_back(Json{{"source", s.to_user(c)},
                          {"target", s.to_user(t)},
                          {"matrix", matrix_json(f.map(e, i), rational_json)}});
    }
  }
  j["dims"] = dims;
  j["maps"] = maps;
  return j;
}

cube::Diagram diagram_from_json(const Json& j) {
  cube::Shape s = shape_from_json(field(j, "shape"));
  bool sub = false;
  if (j.contains("support")) {
    const Json& sup = j.at("support");
    require(sup == "sub" || sup == "full", "support must be \"sub\" or \"full\"");
    sub = sup == "sub";
  }
  cube::Diagram f(s, sub);
  std::vector<bool> dim_seen(s.size(), false);
  const Json& dims = field(j, "dims");
  require(dims.is_object(), "dims must be an object keyed by tuple");
  for (const auto& [key, value] : dims.items()) {
    std::size_t e = s.index_of(s.to_internal(parse_tuple(key)));
    require(value.is_number_integer(), "dimension at " + key + " must be an integer");
    f.set_dim(e, value.get<int>());
    dim_seen[e] = true;
  }
  for (std::size_t e = 0; e < s.size(); ++e)
    require(!f.has(e) || dim_seen[e], "missing dimension at " + to_string(s.to_user(s.element(e))));

  std::vector<std::vector<bool>> map_seen(s.size(), std::vector<bool>(static_cast<std::size_t>(s.r()), false));
  const Json& maps = field(j, "maps");
  require(maps.is_array(), "maps must be an array");
  for (const auto& m : maps) {
    Tuple src = s.to_internal(tuple_from(field(m, "source"), "source"));
    Tuple tgt = s.to_internal(tuple_from(field(m, "target"), "target"));
    int dir = -1;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == tgt[i]) continue;
      require(dir == -1 && src[i] == tgt[i] + 1, "maps must run along covering arrows");
      dir = static_cast<int>(i);
    }
    require(dir >= 0, "maps must run along covering arrows");
    std::size_t e = s.index_of(src);
    require(f.has(e), "map outside the diagram's support");
    require(!map_seen[e][static_cast<std::size_t>(dir)], "covering arrow given twice");
    map_seen[e][static_cast<std::size_t>(dir)] = true;
    const Json& mat = field(m, "matrix");
    auto rows = static_cast<std::size_t>(f.dim(s.index_of(tgt)));
    auto cols = static_cast<std::size_t>(f.dim(e));
    require(mat.is_array() && mat.size() == rows, "matrix rows must match the target dimension");
    QMatrix q(rows, cols);
    for (std::size_t a = 0; a < rows; ++a) {
      require(mat[a].is_array() && mat[a].size() == cols, "matrix columns must match the source dimension");
      for (std::size_t b = 0; b < cols; ++b) q(a, b) = parse_rational(mat[a][b]);
    }
    f.set_map(e, dir, std::move(q));
  }
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (!f.has(e)) continue;
    const Tuple c = s.element(e);
    for (int i = 0; i < s.r(); ++i) {
      if (c[static_cast<std::size_t>(i)] == 0 || map_seen[e][static_cast<std::size_t>(i)]) continue;
      // Maps between zero spaces may be omitted.
      Tuple t = c;
      --t[static_cast<std::size_t>(i)];
      std::size_t te = s.index_of(t);
      require(f.dim(e) == 0 || f.dim(te) == 0, "missing map out of " + to_string(s.to_user(c)));
      f.set_map(e, i, QMatrix(static_cast<std::size_t>(f.dim(te)), static_cast<std::size_t>(f.dim(e))));
    }
  }
  f.validate();
  return f;
}

Json span_key_json(const span::SpanKey& k) {
  Json left = Json::array(), right = Json::array();
  for (const auto& [l, r] : k.pairs) {
    left.push_back(l);
    right.push_back(r);
  }
  return Json{{"left_foot", k.left_foot}, {"apex_size", k.apex_size()}, {"right_foot", k.right_foot},
              {"left_leg", left}, {"right_leg", right}};
}

Json span_combination_json(const span::SpanCombination& c) {
  Json terms = Json::array();
  for (const auto& [key, mult] : c) {
    Json t = span_key_json(key);
    t["multiplicity"] = integer_json(mult);
    terms.push_back(std::move(t));
  }
  return terms;
}

Json pullback_json(const coprod::Pullback& p) {
  Json comps = Json::array();
  for (std::size_t i = 0; i < p.apex.components.size(); ++i)
    comps.push_back(Json{{"object", p.apex.components[i].fibers()},
                         {"left_component", p.to_x.component_target[i]},
                         {"left_map", p.to_x.maps[i].values()},
                         {"right_component", p.to_y.component_target[i]},
                         {"right_map", p.to_y.maps[i].values()}});
  return Json{{"components", comps}};
}

Json universal_property_json(const coprod::UniversalPropertyReport& rep) {
  Json j{{"pass", rep.pass}, {"test_objects", rep.test_objects}};
  if (!rep.pass)
    j["failure"] = Json{{"object", rep.failing_object}, {"lhs", integer_json(rep.lhs)}, {"rhs", integer_json(rep.rhs)}};
  return j;
}

Json orbitality_json(const epi::OrbitalityReport& rep) {
  Json j{{"pass", rep.pass},
         {"iso_classes", rep.iso_classes},
         {"endomorphisms_checked", rep.endomorphisms_checked},
         {"retract_pairs_checked", rep.retract_pairs_checked}};
  if (!rep.pass) j["counterexample"] = rep.counterexample;
  return j;
}

Json segal_json(const burnside::SegalReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"k", r.k},
                        {"raw_generator", integer_json(r.raw_generator)},
                        {"generator", integer_json(r.generator)},
                        {"expected", integer_json(r.expected)},
                        {"pass", r.pass}});
  Json wit = Json::array();
  for (const auto& w : rep.witnesses)
    wit.push_back(Json{{"i", w.i}, {"surjections", integer_json(w.surjections)}, {"divisible", w.divisible}});
  return Json{{"p", rep.p}, {"rows", rows}, {"witnesses", wit}, {"pass", rep.pass}};
}

Json pigeonhole_json(const cube::PigeonholeReport& rep) {
  Json wit = Json::array();
  for (const auto& w : rep.witnesses)
    wit.push_back(Json{{"claim", w.claim}, {"profile", w.profile}, {"fibers", w.fibers}, {"result", w.result}});
  Json j{{"d", rep.d},
         {"r", rep.r},
         {"s", rep.s},
         {"pass", rep.pass},
         {"crosseffect_cases", rep.crosseffect_cases},
         {"diagonal_cases", rep.diagonal_cases},
         {"vanishing_cases", rep.vanishing_cases},
         {"generator_cases", rep.generator_cases},
         {"witnesses", wit}};
  if (!rep.pass) j["failure"] = rep.failure;
  return j;
}

}  // namespace gwb::io

#include "gwb.h"

#include <cstring>
#include <memory>
#include <string>

#include "gwb/burnside.hpp"
#include "gwb/cube.hpp"
#include "gwb/epi_cat.hpp"
#include "gwb/fin_coprod.hpp"
#include "gwb/finset.hpp"
#include "gwb/mackey.hpp"
#include "gwb/serialize.hpp"
#include "gwb/span_cat.hpp"
#include "gwb/verify.hpp"

struct gwb_ring {
  gwb::burnside::BurnsideRing ring;
};
struct gwb_mackey {
  gwb::mackey::MackeyData data;
};
struct gwb_diagram {
  gwb::cube::Diagram diagram;
};

namespace {

using gwb::io::Json;

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, translating exceptions into status codes.
template <class F>
gwb_status guard(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gwb::InvalidInput& e) {
    last_error = e.what();
    return GWB_INVALID_INPUT;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return GWB_INVALID_INPUT;
  } catch (const gwb::ConsistencyError& e) {
    last_error = std::string("internal consistency check failed: ") + e.what();
    return GWB_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GWB_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return GWB_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw gwb::InvalidInput(std::string(what) + " is null");
}

gwb_status emit(const Json& j, char** out, gwb_status status = GWB_OK) {
  need(out, "output pointer");
  *out = dup(j.dump(2));
  return status;
}

gwb::Tuple tuple_arg(const char* text, const char* what) {
  need(text, what);
  return gwb::parse_tuple(text);
}

gwb::finset::FinMap map_arg(const char* text, int source, int target, const char* what) {
  gwb::Tuple values = tuple_arg(text, what);
  return gwb::finset::FinMap(source, target, values);
}

gwb::epi::SliceObject object_arg(const char* text, const char* what) {
  return gwb::epi::SliceObject(tuple_arg(text, what));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

gwb::span::Span span_arg(const char* text, const char* what) {
  need(text, what);
  auto parts = split(text, ':');
  if (parts.size() != 5)
    throw gwb::InvalidInput(std::string(what) + " must read LEFTFOOT:APEX:RIGHTFOOT:LEFTLEG:RIGHTLEG");
  gwb::epi::SliceObject left(gwb::parse_tuple(parts[0]));
  gwb::epi::SliceObject apex(gwb::parse_tuple(parts[1]));
  gwb::epi::SliceObject right(gwb::parse_tuple(parts[2]));
  gwb::finset::FinMap l(apex.size(), left.size(), gwb::parse_tuple(parts[3]));
  gwb::finset::FinMap r(apex.size(), right.size(), gwb::parse_tuple(parts[4]));
  return gwb::span::make_connected(left, apex, right, l, r);
}

void check_bounds(int d, int r) {
  gwb::require(d >= 1 && r >= 1 && r <= d, "need 1 <= r <= d");
}

}  // namespace

extern "C" {

const char* gwb_version(void) { return "1.0.0"; }

const char* gwb_last_error(void) { return last_error.c_str(); }

void gwb_string_free(char* s) { std::free(s); }

gwb_status gwb_surjection_count(int k, int i, char** out) {
  return guard([&] {
    gwb::require(k >= 1 && i >= 1, "need k, i >= 1");
    need(out, "output pointer");
    *out = dup(gwb::finset::surjection_count(k, i).get_str());
    return GWB_OK;
  });
}

gwb_status gwb_surj_table_json(int n, char** out) {
  return guard([&] {
    gwb::require(n >= 1, "need n >= 1");
    Json rows = Json::array();
    for (int k = 1; k <= n; ++k) {
      Json row = Json::array();
      for (int i = 1; i <= n; ++i) row.push_back(gwb::io::integer_json(gwb::finset::surjection_count(k, i)));
      rows.push_back(Json{{"k", k}, {"counts", row}});
    }
    return emit(Json{{"n", n}, {"rows", rows}}, out);
  });
}

gwb_status gwb_objects_json(int d, int r, char** out) {
  return guard([&] {
    check_bounds(d, r);
    Json objs = Json::array();
    for (const auto& o : gwb::epi::enumerate_objects(d, r))
      objs.push_back(Json{{"fibers", o.fibers()}, {"size", o.size()}, {"structure_map", o.structure_map().values()}});
    return emit(Json{{"d", d}, {"r", r}, {"objects", objs}}, out);
  });
}

gwb_status gwb_hom_json(const char* u_text, const char* v_text, char** out) {
  return guard([&] {
    auto u = object_arg(u_text, "source");
    auto v = object_arg(v_text, "target");
    gwb::require(u.r() == v.r(), "objects must live over the same [r]");
    Json maps = Json::array();
    for (const auto& f : gwb::epi::hom_set(u, v)) maps.push_back(f.values());
    return emit(Json{{"source", u.fibers()},
                     {"target", v.fibers()},
                     {"count", gwb::io::integer_json(gwb::epi::hom_count(u, v))},
                     {"morphisms", maps}},
                out);
  });
}

gwb_status gwb_orbitality_json(int d, int r, char** out) {
  return guard([&] {
    check_bounds(d, r);
    auto rep = gwb::epi::check_atomic_orbital(d, r);
    return emit(gwb::io::orbitality_json(rep), out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_pullback_json(const char* a_text, const char* b_text, const char* e_text, const char* f_text,
                             const char* g_text, int d, char** out) {
  return guard([&] {
    auto a = object_arg(a_text, "A");
    auto b = object_arg(b_text, "B");
    auto e = object_arg(e_text, "E");
    gwb::require(d >= std::max(a.size(), b.size()), "d must be at least the sizes of A and B");
    auto f = gwb::epi::make_morphism(a, e, map_arg(f_text, a.size(), e.size(), "f"));
    auto g = gwb::epi::make_morphism(b, e, map_arg(g_text, b.size(), e.size(), "g"));
    auto fc = gwb::coprod::connected(f), gc = gwb::coprod::connected(g);
    auto p = gwb::coprod::pullback(fc, gc, d);
    auto rep = gwb::coprod::verify_universal_property(fc, gc, d);
    Json fp = Json::array();
    for (const auto& [x, y] : gwb::coprod::fiber_product_set(f.map, g.map)) fp.push_back(Json::array({x, y}));
    Json j{{"a", a.fibers()}, {"b", b.fibers()}, {"e", e.fibers()}, {"d", d}, {"fiber_product", fp}};
    j["pullback"] = gwb::io::pullback_json(p);
    j["universal_property"] = gwb::io::universal_property_json(rep);
    return emit(j, out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_span_compose_json(const char* s2_text, const char* s1_text, int d, char** out) {
  return guard([&] {
    auto s2 = span_arg(s2_text, "second span");
    auto s1 = span_arg(s1_text, "first span");
    gwb::require(d >= 1, "need d >= 1");
    auto c = gwb::span::compose(s2, s1, d);
    return emit(Json{{"d", d}, {"terms", gwb::io::span_combination_json(c)}}, out);
  });
}

gwb_status gwb_ring_build(int d, int r, gwb_ring** out) {
  return guard([&] {
    check_bounds(d, r);
    need(out, "output pointer");
    *out = new gwb_ring{gwb::burnside::BurnsideRing::build(d, r)};
    return GWB_OK;
  });
}

void gwb_ring_free(gwb_ring* ring) { delete ring; }

size_t gwb_ring_rank(const gwb_ring* ring) { return ring ? ring->ring.rank() : 0; }

gwb_status gwb_ring_structure_constant(const gwb_ring* ring, size_t u, size_t v, size_t w, int64_t* out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output pointer");
    const size_t n = ring->ring.rank();
    gwb::require(u < n && v < n && w < n, "basis index out of range");
    *out = ring->ring.constant(u, v, w);
    return GWB_OK;
  });
}

gwb_status gwb_ring_to_json(const gwb_ring* ring, char** out) {
  return guard([&] {
    need(ring, "ring");
    return emit(gwb::io::ring_to_json(ring->ring), out);
  });
}

gwb_status gwb_ring_marks_csv(const gwb_ring* ring, char** out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output pointer");
    *out = dup(gwb::io::marks_csv(ring->ring));
    return GWB_OK;
  });
}

gwb_status gwb_ideal_image(int d, int k, long p, int allow_composite, char** out) {
  return guard([&] {
    gwb::require(d >= 1 && k >= 1 && k <= d, "need 1 <= k <= d");
    std::optional<long> prime;
    if (p > 0) prime = p;
    auto img = gwb::burnside::ideal_image(d, k, prime, !allow_composite);
    auto gens = gwb::burnside::augmentation_ideal(d);
    auto basis = gwb::epi::enumerate_objects(d, 1);
    Json g = Json::array();
    for (const auto& x : gens) g.push_back(gwb::io::element_json(x, basis));
    Json j{{"d", d}, {"k", k}};
    j["p"] = prime ? Json(*prime) : Json(nullptr);
    j["ideal_generators"] = g;
    j["generator"] = gwb::io::integer_json(img.generator);
    return emit(j, out);
  });
}

gwb_status gwb_segal_report_json(long p, char** out) {
  return guard([&] {
    auto rep = gwb::burnside::segal_report(p);
    return emit(gwb::io::segal_json(rep), out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_mackey_representable(int d, int r, const char* v, gwb_mackey** out) {
  return guard([&] {
    check_bounds(d, r);
    need(out, "output pointer");
    *out = new gwb_mackey{gwb::mackey::representable(d, r, tuple_arg(v, "v"))};
    return GWB_OK;
  });
}

gwb_status gwb_mackey_from_json(const char* json, gwb_mackey** out) {
  return guard([&] {
    need(json, "json");
    need(out, "output pointer");
    *out = new gwb_mackey{gwb::io::mackey_from_json(Json::parse(json))};
    return GWB_OK;
  });
}

void gwb_mackey_free(gwb_mackey* m) { delete m; }

gwb_status gwb_mackey_to_json(const gwb_mackey* m, char** out) {
  return guard([&] {
    need(m, "Mackey data");
    return emit(gwb::io::mackey_to_json(m->data), out);
  });
}

gwb_status gwb_mackey_check(const gwb_mackey* m, char** out) {
  return guard([&] {
    need(m, "Mackey data");
    auto rep = gwb::mackey::check_axioms(m->data);
    Json j{{"d", m->data.d()}, {"r", m->data.r()}};
    j.update(gwb::io::axiom_report_json(rep));
    return emit(j, out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_mackey_restrict(const gwb_mackey* m, int b, int index_only, gwb_mackey** out) {
  return guard([&] {
    need(m, "Mackey data");
    need(out, "output pointer");
    *out = new gwb_mackey{index_only ? gwb::mackey::restrict_index(m->data, b)
                                     : gwb::mackey::restrict_to_cosieve(m->data, b)};
    return GWB_OK;
  });
}

gwb_status gwb_mackey_vanishing_json(const gwb_mackey* m, char** out) {
  return guard([&] {
    need(m, "Mackey data");
    Json objs = Json::array();
    for (const auto& t : gwb::mackey::vanishing_locus(m->data)) objs.push_back(t);
    return emit(Json{{"vanishing_locus", objs}}, out);
  });
}

gwb_status gwb_endomorphism_ring_json(int d, int r, char** out) {
  return guard([&] {
    check_bounds(d, r);
    return emit(gwb::io::ring_to_json(gwb::mackey::endomorphism_ring_of_unit(d, r)), out);
  });
}

gwb_status gwb_diagram_from_json(const char* json, gwb_diagram** out) {
  return guard([&] {
    need(json, "json");
    need(out, "output pointer");
    *out = new gwb_diagram{gwb::io::diagram_from_json(Json::parse(json))};
    return GWB_OK;
  });
}

gwb_status gwb_diagram_random(const char* shape_json, uint64_t seed, int max_dim, int extended, gwb_diagram** out) {
  return guard([&] {
    need(shape_json, "shape");
    need(out, "output pointer");
    auto shape = gwb::io::shape_from_json(Json::parse(shape_json));
    *out = new gwb_diagram{gwb::cube::random_diagram(shape, seed, max_dim, extended != 0)};
    return GWB_OK;
  });
}

void gwb_diagram_free(gwb_diagram* f) { delete f; }

gwb_status gwb_diagram_to_json(const gwb_diagram* f, char** out) {
  return guard([&] {
    need(f, "diagram");
    return emit(gwb::io::diagram_to_json(f->diagram), out);
  });
}

gwb_status gwb_diagram_extend(const gwb_diagram* f, gwb_diagram** out) {
  return guard([&] {
    need(f, "diagram");
    need(out, "output pointer");
    *out = new gwb_diagram{gwb::cube::pointwise_rke(f->diagram)};
    return GWB_OK;
  });
}

gwb_status gwb_cube_check(const gwb_diagram* f, char** out) {
  return guard([&] {
    need(f, "diagram");
    const auto& dg = f->diagram;
    gwb::require(!dg.on_sub_only(), "cube-check needs a diagram on the full poset");
    auto rep = gwb::cube::is_rke_from(dg);
    auto lim = gwb::cube::truncated_limit(dg);
    Json j{{"shape", gwb::io::shape_json(dg.shape())}, {"extended_from_sub", rep.pass}};
    j["failing_cube"] = rep.failing ? Json(*rep.failing) : Json(nullptr);
    j["sub_limit_dimension"] = lim.dimension;
    return emit(j, out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_pigeonhole_json(int d, int r, int s, char** out) {
  return guard([&] {
    auto rep = gwb::cube::verify_pigeonhole(d, r, s);
    return emit(gwb::io::pigeonhole_json(rep), out, rep.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

gwb_status gwb_crosseffect_degrees_json(const char* profile, const char* map, char** out) {
  return guard([&] {
    auto p = tuple_arg(profile, "profile");
    auto f = tuple_arg(map, "map");
    return emit(Json{{"profile", p}, {"map", f}, {"degrees", gwb::cube::crosseffect_degrees(p, f)}}, out);
  });
}

gwb_status gwb_diagonal_degrees_json(const char* profile, const char* map, char** out) {
  return guard([&] {
    auto p = tuple_arg(profile, "profile");
    auto f = tuple_arg(map, "map");
    return emit(Json{{"profile", p}, {"map", f}, {"degrees", gwb::cube::diagonal_degrees(p, f)}}, out);
  });
}

gwb_status gwb_degenerate_direction_json(int d, const char* profile, const char* excisiveness, char** out) {
  return guard([&] {
    auto l = tuple_arg(profile, "profile");
    auto k = tuple_arg(excisiveness, "excisiveness");
    auto j = gwb::cube::degenerate_direction(d, l, k);
    return emit(Json{{"d", d}, {"profile", l}, {"excisiveness", k}, {"direction", j ? Json(*j) : Json(nullptr)}}, out);
  });
}

gwb_status gwb_verify_all_json(int d, unsigned per_shape, char** out) {
  return guard([&] {
    auto sum = gwb::verify::verify_all(d, per_shape);
    Json suites = Json::array();
    // Timings are left out so the output is reproducible byte for byte.
    for (const auto& s : sum.suites) suites.push_back(Json{{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    return emit(Json{{"d", d}, {"pass", sum.pass}, {"suites", suites}}, out,
                sum.pass ? GWB_OK : GWB_VERIFICATION_FAILED);
  });
}

}  // extern "C"

// Command-line front end. Talks to the library only through gwb.h.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwb.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_invalid = 2;
constexpr int exit_internal = 3;

constexpr int ring_cap = 7;
constexpr int mackey_cap = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  gwb_status status = GWB_OK;
  std::string text;
};

Output call(const std::function<gwb_status(char**)>& fn) {
  char* raw = nullptr;
  Output out;
  out.status = fn(&raw);
  if (raw) {
    out.text = raw;
    gwb_string_free(raw);
  }
  if (out.status != GWB_OK && out.status != GWB_VERIFICATION_FAILED) {
    std::string msg = gwb_last_error();
    if (out.status == GWB_INVALID_INPUT) throw UsageError(msg);
    throw std::runtime_error(msg);
  }
  return out;
}

void cap(int value, int limit, bool unsafe, const std::string& what) {
  if (!unsafe && value > limit)
    throw UsageError(what + " = " + std::to_string(value) + " exceeds the default cap " + std::to_string(limit) +
                     "; pass --unsafe-large to run anyway");
}

std::string cell(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "pass" : "FAIL";
  if (j.is_null()) return "-";
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_number_integer(); })) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + j[i].dump();
    return s + ")";
  }
  return j.dump();
}

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_csv(const Table& t, std::ostream& os) {
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_field(r[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void print_pretty(const Table& t, std::ostream& os) {
  if (!t.title.empty()) os << t.title << '\n';
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << "  ";
      os << std::string(width[i] - r[i].size(), ' ') << r[i];
    }
    os << '\n';
  };
  line(t.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
  for (const auto& r : t.rows) line(r);
}

struct Context {
  std::string format = "pretty";
  bool unsafe = false;
};

// Prints in the selected format and maps the library status to an exit code.
int render(const Context& ctx, const Output& out, const std::vector<Table>& tables, const std::string& summary = "") {
  if (ctx.format == "json") {
    std::cout << out.text << '\n';
  } else if (ctx.format == "csv") {
    if (!tables.empty()) print_csv(tables.front(), std::cout);
  } else {
    if (!summary.empty()) std::cout << summary << '\n';
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i || !summary.empty()) std::cout << '\n';
      print_pretty(tables[i], std::cout);
    }
  }
  return out.status == GWB_OK ? exit_ok : exit_failed;
}

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse(const Output& out) { return Json::parse(out.text); }

std::string verdict(const Json& j) { return j.value("pass", false) ? "pass" : "FAIL"; }

// Handles that free themselves.
struct Mackey {
  gwb_mackey* p = nullptr;
  ~Mackey() { gwb_mackey_free(p); }
};
struct Diagram {
  gwb_diagram* p = nullptr;
  ~Diagram() { gwb_diagram_free(p); }
};
struct Ring {
  gwb_ring* p = nullptr;
  ~Ring() { gwb_ring_free(p); }
};

std::vector<Table> mackey_tables(const Json& data) {
  Table ranks{"values", {"object", "rank", "basis"}, {}};
  for (const auto& [key, rank] : data.at("ranks").items()) {
    std::string labels;
    if (data.contains("labels"))
      for (const auto& l : data.at("labels").at(key)) labels += (labels.empty() ? "" : " ") + l.get<std::string>();
    ranks.rows.push_back({key, rank.dump(), labels});
  }
  Table maps{"maps", {"source", "target", "index", "map", "restriction", "transfer"}, {}};
  for (const auto& m : data.at("maps"))
    maps.rows.push_back({cell(m["source"]), cell(m["target"]), m["index"].dump(), cell(m["map"]),
                         m["restriction"].dump(), m["transfer"].dump()});
  return {ranks, maps};
}

Table check_table(const Json& rep) {
  Table t{"axiom check", {"check", "count"}, {}};
  t.rows.push_back({"identities", rep["identities_checked"].dump()});
  t.rows.push_back({"compositions", rep["compositions_checked"].dump()});
  t.rows.push_back({"cospans", rep["cospans_checked"].dump()});
  return t;
}

const char* dictionary_text = R"(Equivariant side                     Calculus side
-----------------------------------  --------------------------------------------------
finite group G                       degree d
subgroup chain e <= H <= G           sets [d] ->> [r] ->> [1]
orbit category O_G                   Epi_d (sets of size <= d, surjections)
O_H as the slice over G/H            slice Epi_{d,r} over [r]
genuine H-spectra                    subdiagonal r-variable functors, level (d, r)
restriction G to H                   cross-effect along [r] ->> [1]
induction H to G                     diagonal restriction along [r] ->> [1]
ind -| res -| ind                    diagonal -| cross-effect -| diagonal
geometric fixed points for K <= H    truncated approximation at level b, r <= b <= d
geometric fixed points Phi^G         first excisive approximation P_1
sphere spectrum S_G                  unit 1_d = P_d of Sigma^infty Omega^infty
Burnside ring A(H)                   Goodwillie-Burnside ring A(d, r); A(d) = A(d, 1)
underlying Borel spectrum            d-th derivative with its Sigma_d action
categorical fixed points (-)^G       evaluation at the sphere
family of subgroups                  range of sizes [d] >= [r]

In this program: `ring` builds A(d, r), `marks` its table of marks (the
geometric fixed point ring maps), `mackey-*` handles Mackey functors on
Epi_{d,r}, and `segal` checks the augmentation ideal arithmetic.
)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with surjection categories, Goodwillie-Burnside rings, Mackey functors and cube "
               "diagrams"};
  app.set_version_flag("--version", std::string(gwb_version()));
  Context ctx;
  bool dictionary = false;
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_flag("--unsafe-large", ctx.unsafe, "Lift the default size caps");
  app.add_flag("--dictionary", dictionary, "Print the equivariant/calculus dictionary and exit");
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::function<int()> action;

  // surj-table
  int surj_n = 6;
  auto* surj = app.add_subcommand("surj-table", "Table of |Epi(k, i)| for k, i <= n");
  surj->add_option("--n", surj_n, "Largest k and i")->capture_default_str()->check(CLI::PositiveNumber);
  surj->callback([&] {
    action = [&] {
      auto out = call([&](char** o) { return gwb_surj_table_json(surj_n, o); });
      auto j = parse(out);
      Table t{"|Epi(k,i)|", {"k"}, {}};
      for (int i = 1; i <= surj_n; ++i) t.header.push_back("i=" + std::to_string(i));
      for (const auto& row : j["rows"]) {
        std::vector<std::string> r{row["k"].dump()};
        for (const auto& c : row["counts"]) r.push_back(cell(c));
        t.rows.push_back(r);
      }
      return render(ctx, out, {t});
    };
  });

  // objects
  int obj_d = 3, obj_r = 1;
  auto* objects = app.add_subcommand("objects", "Iso classes of Epi_{d,r} in basis order");
  objects->add_option("--d", obj_d)->capture_default_str();
  objects->add_option("--r", obj_r)->capture_default_str();
  objects->callback([&] {
    action = [&] {
      cap(obj_d, ring_cap, ctx.unsafe, "d");
      auto out = call([&](char** o) { return gwb_objects_json(obj_d, obj_r, o); });
      auto j = parse(out);
      Table t{"objects of Epi_{" + std::to_string(obj_d) + "," + std::to_string(obj_r) + "}",
              {"index", "fibers", "size", "structure map"},
              {}};
      std::size_t i = 0;
      for (const auto& o : j["objects"])
        t.rows.push_back({std::to_string(i++), cell(o["fibers"]), o["size"].dump(), cell(o["structure_map"])});
      return render(ctx, out, {t});
    };
  });

  // hom
  std::string hom_u, hom_v;
  auto* hom = app.add_subcommand("hom", "Morphisms u -> v over [r], lexicographic");
  hom->add_option("--u", hom_u, "Source fiber sizes, e.g. 2,1")->required();
  hom->add_option("--v", hom_v, "Target fiber sizes, e.g. 1,1")->required();
  hom->callback([&] {
    action = [&] {
      auto out = call([&](char** o) { return gwb_hom_json(hom_u.c_str(), hom_v.c_str(), o); });
      auto j = parse(out);
      Table t{"Hom(" + cell(j["source"]) + ", " + cell(j["target"]) + "): " + cell(j["count"]) + " maps",
              {"index", "values"},
              {}};
      std::size_t i = 0;
      for (const auto& m : j["morphisms"]) t.rows.push_back({std::to_string(i++), cell(m)});
      return render(ctx, out, {t});
    };
  });

  // pullback
  std::string pb_a, pb_b, pb_e, pb_f, pb_g;
  int pb_d = 4;
  auto* pullback = app.add_subcommand("pullback", "Pullback of connected objects A ->> E <<- B in Fin_{Epi_{d,r}}");
  pullback->add_option("--a", pb_a, "Fiber sizes of A")->required();
  pullback->add_option("--b", pb_b, "Fiber sizes of B")->required();
  pullback->add_option("--e", pb_e, "Fiber sizes of E")->required();
  pullback->add_option("--f", pb_f, "Values of f: A ->> E")->required();
  pullback->add_option("--g", pb_g, "Values of g: B ->> E")->required();
  pullback->add_option("--d", pb_d, "Size bound")->capture_default_str();
  pullback->callback([&] {
    action = [&] {
      cap(pb_d, mackey_cap, ctx.unsafe, "d");
      auto out = call([&](char** o) {
        return gwb_pullback_json(pb_a.c_str(), pb_b.c_str(), pb_e.c_str(), pb_f.c_str(), pb_g.c_str(), pb_d, o);
      });
      auto j = parse(out);
      Table t{"good subsets", {"component", "object", "to A", "to B"}, {}};
      std::size_t i = 0;
      for (const auto& c : j["pullback"]["components"])
        t.rows.push_back({std::to_string(i++), cell(c["object"]), cell(c["left_map"]), cell(c["right_map"])});
      std::string summary = "fiber product has " + std::to_string(j["fiber_product"].size()) +
                            " elements; universal property: " + verdict(j["universal_property"]);
      return render(ctx, out, {t}, summary);
    };
  });

  // span-compose
  std::string span2, span1;
  int span_d = 4;
  auto* compose = app.add_subcommand("span-compose", "Compose spans given as LEFTFOOT:APEX:RIGHTFOOT:LEFTLEG:RIGHTLEG");
  compose->add_option("--second", span2, "The span applied second, e.g. 1:2:1:1,1:1,1")->required();
  compose->add_option("--first", span1, "The span applied first")->required();
  compose->add_option("--d", span_d, "Size bound")->capture_default_str();
  compose->callback([&] {
    action = [&] {
      cap(span_d, ring_cap, ctx.unsafe, "d");
      auto out = call([&](char** o) { return gwb_span_compose_json(span2.c_str(), span1.c_str(), span_d, o); });
      auto j = parse(out);
      Table t{"composite", {"multiplicity", "left foot", "apex size", "right foot", "left leg", "right leg"}, {}};
      for (const auto& term : j["terms"])
        t.rows.push_back({cell(term["multiplicity"]), cell(term["left_foot"]), term["apex_size"].dump(),
                          cell(term["right_foot"]), cell(term["left_leg"]), cell(term["right_leg"])});
      return render(ctx, out, {t});
    };
  });

  // ring / marks
  int ring_d = 3, ring_r = 1;
  auto ring_tables = [&](const Json& j) {
    std::vector<std::string> names;
    for (const auto& b : j["basis"]) names.push_back(cell(b));
    Table consts{"structure constants c(u,v -> w)", {"u", "v", "w", "c"}, {}};
    for (const auto& c : j["structure_constants"])
      consts.rows.push_back({cell(c["u"]), cell(c["v"]), cell(c["w"]), c["c"].dump()});
    Table marks{"marks |Hom(u, v)|", {"u \\ v"}, {}};
    for (const auto& n : names) marks.header.push_back(n);
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::vector<std::string> row{names[i]};
      for (const auto& x : j["marks"][i]) row.push_back(cell(x));
      marks.rows.push_back(row);
    }
    return std::vector<Table>{consts, marks};
  };
  auto* ring = app.add_subcommand("ring", "Goodwillie-Burnside ring A(d, r)");
  ring->add_option("--d", ring_d)->capture_default_str();
  ring->add_option("--r", ring_r)->capture_default_str();
  ring->callback([&] {
    action = [&] {
      cap(ring_d, ring_cap, ctx.unsafe, "d");
      Ring handle;
      call([&](char**) { return gwb_ring_build(ring_d, ring_r, &handle.p); });
      auto out = call([&](char** o) { return gwb_ring_to_json(handle.p, o); });
      auto j = parse(out);
      std::string summary = "A(" + std::to_string(ring_d) + "," + std::to_string(ring_r) + ") has rank " +
                            std::to_string(gwb_ring_rank(handle.p));
      return render(ctx, out, ring_tables(j), summary);
    };
  });
  auto* marks = app.add_subcommand("marks", "Table of marks of A(d, r)");
  marks->add_option("--d", ring_d)->capture_default_str();
  marks->add_option("--r", ring_r)->capture_default_str();
  marks->callback([&] {
    action = [&] {
      cap(ring_d, ring_cap, ctx.unsafe, "d");
      Ring handle;
      call([&](char**) { return gwb_ring_build(ring_d, ring_r, &handle.p); });
      if (ctx.format == "csv") {
        std::cout << call([&](char** o) { return gwb_ring_marks_csv(handle.p, o); }).text;
        return exit_ok;
      }
      auto out = call([&](char** o) { return gwb_ring_to_json(handle.p, o); });
      auto j = parse(out);
      if (ctx.format == "json") {
        Json m{{"d", j["d"]}, {"r", j["r"]}, {"basis", j["basis"]}, {"marks", j["marks"]}};
        std::cout << m.dump(2) << '\n';
        return exit_ok;
      }
      return render(ctx, out, {ring_tables(j)[1]});
    };
  });

  // ideal
  int id_d = 3, id_k = 1;
  long id_p = 0;
  bool id_composite = false;
  auto* ideal = app.add_subcommand("ideal", "Generator of (p, Phi^[k](I(d))) in the integers");
  ideal->add_option("--d", id_d)->capture_default_str();
  ideal->add_option("--k", id_k)->capture_default_str();
  ideal->add_option("--p", id_p, "Prime to adjoin; omit for the image alone");
  ideal->add_flag("--allow-composite", id_composite, "Accept a composite --p");
  ideal->callback([&] {
    action = [&] {
      cap(id_d, ring_cap, ctx.unsafe, "d");
      auto out = call([&](char** o) { return gwb_ideal_image(id_d, id_k, id_p, id_composite ? 1 : 0, o); });
      auto j = parse(out);
      Table t{"", {"d", "k", "p", "generator"}, {{j["d"].dump(), j["k"].dump(), cell(j["p"]), cell(j["generator"])}}};
      std::string summary = "I(" + std::to_string(id_d) + ") generators:";
      for (const auto& g : j["ideal_generators"]) {
        std::string term;
        for (const auto& x : g)
          term += (term.empty() ? "" : " + ") + cell(x["coefficient"]) + "[" + cell(x["class"]) + "]";
        summary += "\n  " + term;
      }
      return render(ctx, out, {t}, summary);
    };
  });

  // segal
  long segal_p = 3;
  auto* segal = app.add_subcommand("segal", "Augmentation ideal arithmetic at a prime p");
  segal->add_option("--p", segal_p)->capture_default_str();
  segal->callback([&] {
    action = [&] {
      cap(static_cast<int>(std::min<long>(segal_p, 1 << 20)), ring_cap, ctx.unsafe, "p");
      auto out = call([&](char** o) { return gwb_segal_report_json(segal_p, o); });
      auto j = parse(out);
      Table t{"(p, Phi^[k](I(p)))", {"k", "raw", "generator", "expected", "verdict"}, {}};
      for (const auto& r : j["rows"])
        t.rows.push_back({r["k"].dump(), cell(r["raw_generator"]), cell(r["generator"]), cell(r["expected"]),
                          cell(r["pass"])});
      Table w{"divisibility of |Epi(p, i)|", {"i", "|Epi(p,i)|", "divisible by p"}, {}};
      for (const auto& x : j["witnesses"]) w.rows.push_back({x["i"].dump(), cell(x["surjections"]), cell(x["divisible"])});
      return render(ctx, out, {t, w}, "p = " + std::to_string(segal_p) + ": " + verdict(j));
    };
  });

  // Mackey functors
  int mk_d = 2, mk_r = 1, mk_restrict = 0;
  std::string mk_v = "1", mk_input;
  bool mk_check = false, mk_index_only = false;
  auto finish_mackey = [&](Mackey& m, bool check) {
    Mackey cut;
    gwb_mackey* use = m.p;
    if (mk_restrict > 0) {
      call([&](char**) { return gwb_mackey_restrict(m.p, mk_restrict, mk_index_only ? 1 : 0, &cut.p); });
      use = cut.p;
    }
    auto data = call([&](char** o) { return gwb_mackey_to_json(use, o); });
    auto tables = mackey_tables(parse(data));
    if (!check) return render(ctx, data, tables);
    auto rep = call([&](char** o) { return gwb_mackey_check(use, o); });
    auto rj = parse(rep);
    if (ctx.format == "json") {
      Json j{{"data", parse(data)}, {"check", rj}};
      std::cout << j.dump(2) << '\n';
      return rep.status == GWB_OK ? exit_ok : exit_failed;
    }
    tables.push_back(check_table(rj));
    std::string summary = "axioms: " + verdict(rj);
    if (rj.contains("failure")) summary += "\n" + rj["failure"].get<std::string>();
    return render(ctx, rep, tables, summary);
  };
  auto* mrep = app.add_subcommand("mackey-representable", "The representable Mackey functor at v");
  mrep->add_option("--d", mk_d)->capture_default_str();
  mrep->add_option("--r", mk_r)->capture_default_str();
  mrep->add_option("--v", mk_v, "Representing object")->capture_default_str();
  mrep->add_flag("--check", mk_check, "Also check the Mackey axioms");
  mrep->add_option("--restrict", mk_restrict, "Restrict to objects of size <= B");
  mrep->add_flag("--index-only", mk_index_only, "With --restrict: keep values unchanged instead of passing to sections");
  mrep->callback([&] {
    action = [&] {
      cap(mk_d, mackey_cap, ctx.unsafe, "d");
      Mackey m;
      call([&](char**) { return gwb_mackey_representable(mk_d, mk_r, mk_v.c_str(), &m.p); });
      return finish_mackey(m, mk_check);
    };
  });
  auto* mcheck = app.add_subcommand("mackey-check", "Check the Mackey axioms of JSON Mackey data");
  mcheck->add_option("--input", mk_input, "JSON file, or - for stdin")->required();
  mcheck->add_option("--restrict", mk_restrict, "Restrict to objects of size <= B first");
  mcheck->add_flag("--index-only", mk_index_only, "With --restrict: keep values unchanged");
  mcheck->callback([&] {
    action = [&] {
      std::string text = read_input(mk_input);
      Json j = Json::parse(text, nullptr, false);
      if (j.is_discarded()) throw UsageError("input is not valid JSON");
      if (j.contains("d") && j["d"].is_number_integer()) cap(j["d"].get<int>(), mackey_cap, ctx.unsafe, "d");
      Mackey m;
      call([&](char**) { return gwb_mackey_from_json(text.c_str(), &m.p); });
      return finish_mackey(m, true);
    };
  });

  // cube-check
  std::string cube_input, cube_truncated, cube_filtered;
  int cube_n = 1, cube_max_dim = 4;
  std::uint64_t cube_seed = 1;
  bool cube_extended = false, cube_emit_failing = false, cube_emit_diagram = false;
  auto* cube = app.add_subcommand("cube-check", "Is a cube diagram right Kan extended from its threshold sub-poset?");
  auto* src = cube->add_option("--input", cube_input, "Diagram JSON file, or - for stdin");
  cube->add_option("--truncated", cube_truncated, "Random diagram on Q(d, r), given as d,r")->excludes(src);
  cube->add_option("--filtered", cube_filtered, "Random diagram on the box with these bounds, filtered at --n")
      ->excludes(src);
  cube->add_option("--n", cube_n, "Threshold for --filtered")->capture_default_str();
  cube->add_option("--seed", cube_seed, "Seed for random diagrams")->capture_default_str();
  cube->add_option("--max-dim", cube_max_dim, "Largest dimension in random diagrams")->capture_default_str();
  cube->add_flag("--extended", cube_extended, "Random diagram built as an extension (so the check passes)");
  cube->add_flag("--emit-failing-cube", cube_emit_failing, "Print the tuple of the first failing unit cube");
  cube->add_flag("--emit-diagram", cube_emit_diagram, "Include the checked diagram in the output");
  cube->callback([&] {
    action = [&] {
      Diagram f;
      if (!cube_input.empty()) {
        std::string text = read_input(cube_input);
        call([&](char**) { return gwb_diagram_from_json(text.c_str(), &f.p); });
      } else {
        Json shape;
        if (!cube_truncated.empty()) {
          std::vector<int> dr;
          std::stringstream in(cube_truncated);
          for (std::string x; std::getline(in, x, ',');) dr.push_back(std::stoi(x));
          if (dr.size() != 2) throw UsageError("--truncated takes d,r");
          cap(dr[0], ring_cap, ctx.unsafe, "d");
          shape = Json{{"kind", "truncated"}, {"d", dr[0]}, {"r", dr[1]}};
        } else if (!cube_filtered.empty()) {
          std::vector<int> bounds;
          std::stringstream in(cube_filtered);
          for (std::string x; std::getline(in, x, ',');) bounds.push_back(std::stoi(x));
          shape = Json{{"kind", "filtered"}, {"bounds", bounds}, {"n", cube_n}};
        } else {
          throw UsageError("give --input, --truncated or --filtered");
        }
        std::string s = shape.dump();
        call([&](char**) {
          return gwb_diagram_random(s.c_str(), cube_seed, cube_max_dim, cube_extended ? 1 : 0, &f.p);
        });
      }
      Json probe = parse(call([&](char** o) { return gwb_diagram_to_json(f.p, o); }));
      Diagram full;
      gwb_diagram* use = f.p;
      if (probe["support"] == "sub") {
        call([&](char**) { return gwb_diagram_extend(f.p, &full.p); });
        use = full.p;
      }
      auto out = call([&](char** o) { return gwb_cube_check(use, o); });
      auto j = parse(out);
      if (cube_emit_diagram) {
        j["diagram"] = parse(call([&](char** o) { return gwb_diagram_to_json(use, o); }));
        out.text = j.dump(2);
      }
      if (cube_emit_failing && !j["failing_cube"].is_null()) std::cerr << "failing cube: " << cell(j["failing_cube"]) << '\n';
      Table t{"", {"extended from sub-poset", "failing cube", "limit over sub-poset"},
              {{cell(j["extended_from_sub"]), cell(j["failing_cube"]), j["sub_limit_dimension"].dump()}}};
      return render(ctx, out, {t});
    };
  });

  // pigeonhole
  int ph_d = 3, ph_r = 1;
  std::optional<int> ph_s;
  std::string ph_cross, ph_diag, ph_map, ph_degenerate, ph_exc;
  auto* pig = app.add_subcommand("pigeonhole", "Exhaustive check of the degree arithmetic for cross-effects and diagonals");
  pig->add_option("--d", ph_d)->capture_default_str();
  pig->add_option("--r", ph_r)->capture_default_str();
  pig->add_option("--s", ph_s, "Number of variables after the cross-effect; all r <= s <= d when omitted");
  pig->add_option("--crosseffect", ph_cross, "Only compute the cross-effect degrees of this profile over [r]");
  pig->add_option("--diagonal", ph_diag, "Only compute the diagonal degrees of this profile over [s]");
  pig->add_option("--map", ph_map, "Surjection [s] ->> [r] as values, for --crosseffect or --diagonal");
  pig->add_option("--degenerate", ph_degenerate, "Only find a degenerate direction for this profile");
  pig->add_option("--excisiveness", ph_exc, "Excisiveness tuple for --degenerate");
  pig->callback([&] {
    action = [&] {
      cap(ph_d, ring_cap, ctx.unsafe, "d");
      auto single = [&](const Output& out, const std::string& key) {
        auto j = parse(out);
        Table t{"", {key}, {{cell(j[key])}}};
        return render(ctx, out, {t});
      };
      if (!ph_cross.empty() || !ph_diag.empty()) {
        if (ph_map.empty()) throw UsageError("--map is required");
        auto out = call([&](char** o) {
          return ph_cross.empty() ? gwb_diagonal_degrees_json(ph_diag.c_str(), ph_map.c_str(), o)
                                  : gwb_crosseffect_degrees_json(ph_cross.c_str(), ph_map.c_str(), o);
        });
        return single(out, "degrees");
      }
      if (!ph_degenerate.empty()) {
        if (ph_exc.empty()) throw UsageError("--excisiveness is required");
        auto out = call([&](char** o) { return gwb_degenerate_direction_json(ph_d, ph_degenerate.c_str(), ph_exc.c_str(), o); });
        return single(out, "direction");
      }
      std::vector<int> ss;
      if (ph_s) {
        ss.push_back(*ph_s);
      } else {
        for (int s = ph_r; s <= ph_d; ++s) ss.push_back(s);
      }
      Json all = Json::array();
      bool pass = true;
      Table t{"", {"d", "r", "s", "cross-effects", "diagonals", "vanishing", "generators", "verdict"}, {}};
      for (int s : ss) {
        auto out = call([&](char** o) { return gwb_pigeonhole_json(ph_d, ph_r, s, o); });
        auto j = parse(out);
        pass = pass && out.status == GWB_OK;
        t.rows.push_back({j["d"].dump(), j["r"].dump(), j["s"].dump(), j["crosseffect_cases"].dump(),
                          j["diagonal_cases"].dump(), j["vanishing_cases"].dump(), j["generator_cases"].dump(),
                          verdict(j)});
        all.push_back(j);
      }
      Output combined{pass ? GWB_OK : GWB_VERIFICATION_FAILED, ph_s ? all[0].dump(2) : all.dump(2)};
      return render(ctx, combined, {t});
    };
  });

  // verify-all
  int va_d = 4;
  unsigned va_diagrams = 20;
  auto* va = app.add_subcommand("verify-all", "Run every module's exhaustive suite at bound d");
  va->add_option("--d", va_d)->capture_default_str();
  va->add_option("--diagrams", va_diagrams, "Random diagrams per cube shape")->capture_default_str();
  va->callback([&] {
    action = [&] {
      cap(va_d, ring_cap, ctx.unsafe, "d");
      auto out = call([&](char** o) { return gwb_verify_all_json(va_d, va_diagrams, o); });
      auto j = parse(out);
      Table t{"", {"suite", "verdict", "detail"}, {}};
      for (const auto& s : j["suites"]) t.rows.push_back({cell(s["name"]), cell(s["pass"]), cell(s["detail"])});
      return render(ctx, out, {t}, "verify-all at d = " + std::to_string(va_d) + ": " + verdict(j));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  if (dictionary) {
    std::cout << dictionary_text;
    return exit_ok;
  }
  if (!action) {
    std::cerr << app.help();
    return exit_invalid;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

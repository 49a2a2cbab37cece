#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ccloops/amalgam.hpp"
#include "ccloops/cli.hpp"
#include "ccloops/cohomology.hpp"
#include "ccloops/dsl.hpp"
#include "ccloops/errors.hpp"
#include "ccloops/loop.hpp"
#include "json.hpp"

namespace ccl {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"parse", "group", "loop", "aut",
                                                 "cohomology", "amalgams", "verify"};
  return names;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

// A report section: a JSON object whose "checks" array decides pass/fail.
struct Section {
  Json body = Json::object();
  Json checks = Json::array();
  bool pass = true;

  void check(const std::string& name, bool ok, Json witness = nullptr,
             const std::string& detail = {}) {
    Json c = {{"name", name}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    if (!ok && !witness.is_null()) c["witness"] = std::move(witness);
    checks.push_back(std::move(c));
    pass = pass && ok;
  }
  Json finish() {
    Json out = body;
    out["checks"] = checks;
    out["status"] = pass ? "pass" : "fail";
    return out;
  }
};

Json label_json(int m) { return m == kInfinity ? Json("inf") : Json(m); }

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) + ")";
}

Json edge_list(const Graph& g) {
  Json out = Json::array();
  for (const Edge& e : g.edges()) out.push_back({e.a + 1, e.b + 1});
  return out;
}

std::optional<std::string> type_name(const SphericalClassification& c) {
  if (!c.spherical) return std::nullopt;
  std::string s;
  for (const auto& t : c.components) s += (s.empty() ? "" : " x ") + t.name();
  return s.empty() ? std::string("trivial") : s;
}

Json identity_witness(const IdentityReport& r,
                      const std::function<std::string(Elem)>& label) {
  Json values = Json::array();
  Json labels = Json::array();
  for (Elem x : r.counterexample) {
    values.push_back(x);
    labels.push_back(label(x));
  }
  return {{"statement", r.statement}, {"variables", r.variables}, {"indices", values},
          {"labels", labels}};
}

void add_identity(Section& s, const IdentityReport& r,
                  const std::function<std::string(Elem)>& label) {
  s.check(r.name, r.holds, r.holds ? Json(nullptr) : identity_witness(r, label));
}

// The group to work with for group-level commands.
struct GroupInput {
  GroupTable group;
  std::string origin;
};

GroupInput group_of(const ParsedInput& in, const RunConfig& cfg) {
  if (const auto* d = std::get_if<CoxeterDiagram>(&in)) {
    const auto cls = recognize_spherical(*d);
    if (!d->all_finite()) throw PreconditionError("W is infinite: some m_ij = inf");
    if (!cls.spherical)
      throw PreconditionError("W is infinite: diagram is not spherical (" + cls.reason + ")");
    return {enumerate_group(*d, cfg.cap), "coxeter"};
  }
  if (const auto* l = std::get_if<LoopTable>(&in)) {
    if (!is_associative(*l).holds) throw PreconditionError("table is not associative");
    return {as_group(*l, greedy_generators(*l)), "table"};
  }
  throw PreconditionError("command needs a coxeter or table input");
}

// ---------------------------------------------------------------------------

Json parse_section(const ParsedInput& in) {
  Section s;
  if (const auto* d = std::get_if<CoxeterDiagram>(&in)) {
    s.body["rank"] = d->rank();
    Json matrix = Json::array();
    for (const auto& row : d->matrix()) {
      Json r = Json::array();
      for (int m : row) r.push_back(label_json(m));
      matrix.push_back(r);
    }
    s.body["matrix"] = matrix;
    const Graph g = underlying_graph(*d);
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.a + 1, e.b + 1, label_json(d->label(e.a, e.b))});
    s.body["edges"] = edges;
    const auto cls = recognize_spherical(*d);
    s.body["spherical"] = cls.spherical;
    s.body["type"] = type_name(cls) ? Json(*type_name(cls)) : Json(nullptr);
    s.body["two_spherical"] = d->all_finite();
  } else if (const auto* g = std::get_if<Graph>(&in)) {
    s.body["vertices"] = g->vertex_count();
    s.body["edges"] = edge_list(*g);
    s.body["components"] = g->component_count();
  } else {
    const auto& l = std::get<LoopTable>(in);
    s.body["order"] = l.order();
    s.body["identity"] = kIdentity;
    s.body["associative"] = is_associative(l).holds;
    s.body["commutative"] = is_commutative(l).holds;
  }
  return s.finish();
}

Json group_section(const ParsedInput& in, const RunConfig& cfg) {
  Section s;
  const GroupInput gi = group_of(in, cfg);
  const GroupTable& g = gi.group;
  s.body["order"] = g.order();
  Json gens = Json::array();
  for (Elem x : g.generators()) gens.push_back(g.label(x));
  s.body["generators"] = gens;
  s.body["abelian"] = g.is_abelian();
  if (const auto* d = std::get_if<CoxeterDiagram>(&in)) {
    const auto cls = recognize_spherical(*d);
    s.body["type"] = *type_name(cls);
    s.body["predicted_order"] = *cls.predicted_order;
    s.check("order_matches_classification",
            static_cast<std::uint64_t>(g.order()) == *cls.predicted_order,
            {{"enumerated", g.order()}, {"predicted", *cls.predicted_order}});
    Json bad = Json::array();
    for (int i = 0; i < d->rank(); ++i)
      for (int j = i; j < d->rank(); ++j) {
        const Elem p = g.mul(g.generators()[i], g.generators()[j]);
        if (g.element_order(p) != d->label(i, j)) bad.push_back({i + 1, j + 1});
      }
    s.check("coxeter_relations", bad.empty(), {{"pairs", bad}},
            "order of s_i s_j equals m_ij for every pair");
  }
  Json orders = Json::object();
  std::map<int, int> hist;
  for (Elem x = 0; x < g.order(); ++x) ++hist[g.element_order(x)];
  for (auto [k, v] : hist) orders[std::to_string(k)] = v;
  s.body["element_orders"] = orders;
  return s.finish();
}

Json loop_section(const ParsedInput& in, const RunConfig& cfg) {
  Section s;
  std::optional<GroupTable> g;
  LoopTable l;
  if (const auto* t = std::get_if<LoopTable>(&in); t && !is_associative(*t).holds) {
    l = *t;
    s.body["construction"] = "input loop";
  } else {
    g = group_of(in, cfg).group;
    l = chein_loop(*g);
    s.body["construction"] = "M(G,2)";
    s.body["group_order"] = g->order();
  }
  s.body["loop_order"] = l.order();
  auto label = [&](Elem x) { return l.label(x); };
  s.check("is_loop", is_loop(l));
  for (const auto& r : is_moufang(l)) add_identity(s, r, label);
  if (g) {
    for (const auto& r : verify_chein_identities(l)) add_identity(s, r, label);
    std::set<std::string> seen;
    for (const Json& c : s.checks) seen.insert(c["name"].get<std::string>());
    for (const auto& r : verify_chein_consequences(*g))
      if (!seen.count(r.name)) add_identity(s, r, label);
  }
  const IdentityReport assoc = is_associative(l);
  s.body["associative"] = assoc.holds;
  if (!assoc.holds) s.body["associativity_counterexample"] = identity_witness(assoc, label);
  s.body["commutative"] = is_commutative(l).holds;
  if (g) s.body["nonassociative_iff_nonabelian"] = (assoc.holds == g->is_abelian());
  if (g) s.check("nonassociative_iff_nonabelian", assoc.holds == g->is_abelian());
  return s.finish();
}

GroupTable subgroup_table(const GroupTable& g, const std::vector<Elem>& elements) {
  const int n = static_cast<int>(elements.size());
  std::vector<Elem> index(g.order(), -1);
  for (int k = 0; k < n; ++k) index[elements[k]] = k;
  std::vector<Elem> data;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(g.label(elements[a]));
    for (int b = 0; b < n; ++b) data.push_back(index[g.mul(elements[a], elements[b])]);
  }
  CayleyTable t(n, std::move(data));
  return GroupTable::FromCayley(t, greedy_generators(t), labels);
}

void add_theorem(Section& s, const TheoremReport& r) {
  Json t = {{"name", r.name},
            {"constructed_order", r.constructed_order},
            {"brute_force_order", r.brute_force_order},
            {"formula_order", r.formula_order}};
  s.body["theorem"] = t;
  for (const Check& c : r.checks)
    s.check(c.name, c.pass, c.detail.empty() ? Json(nullptr) : Json(c.detail), c.pass ? c.detail : "");
}

Json aut_section(const ParsedInput& in, const RunConfig& cfg) {
  Section s;
  const GroupTable g = group_of(in, cfg).group;
  const Trichotomy t = classify_trichotomy(g);
  s.body["group_order"] = g.order();
  s.body["case"] = to_string(t);
  if (t == Trichotomy::kElementaryAbelian) {
    int k = 0;
    while ((1 << k) < 2 * g.order()) ++k;
    const AutGroup aut = automorphism_group(chein_loop(g), cfg.budget);
    s.body["rank"] = k;
    s.body["aut_order"] = aut.order();
    s.body["formula_order"] = gl2_order(k);
    s.body["search_nodes"] = aut.nodes;
    s.check("aut_order_is_gl", aut.order() == gl2_order(k),
            {{"brute_force", aut.order()}, {"formula", gl2_order(k)}});
  } else if (t == Trichotomy::kNoDecomposition) {
    add_theorem(s, verify_theorem_case2(g, cfg.budget));
  } else {
    const CheinDecomposition dec = *recognize_chein_decomposition(g);
    const GroupTable h = subgroup_table(g, dec.subgroup);
    Json hj = Json::array();
    for (Elem x : dec.subgroup) hj.push_back(g.label(x));
    s.body["decomposition"] = {{"H", hj}, {"u", g.label(dec.involution)}};
    const TheoremReport r = verify_theorem_case3(h, cfg.budget);
    add_theorem(s, r);
    const AutGroup direct = automorphism_group(chein_loop(g), cfg.budget);
    s.body["aut_order"] = direct.order();
    s.check("input_numbering_order", direct.order() == r.formula_order,
            {{"brute_force", direct.order()}, {"formula", r.formula_order}});
  }
  return s.finish();
}

Json bit_rows(const BitMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) out.push_back(m.row_string(r));
  return out;
}

Json cohomology_section(const ParsedInput& in, const RunConfig& cfg) {
  Section s;
  Graph g;
  if (const auto* d = std::get_if<CoxeterDiagram>(&in)) g = underlying_graph(*d);
  else if (const auto* gr = std::get_if<Graph>(&in)) g = *gr;
  else throw PreconditionError("cohomology needs a coxeter or graph input");
  const CohomologyResult r = cohomology(g, cfg.strict);
  const SimplicialComplex c = build_complex(g);
  s.body["vertices"] = r.vertices;
  s.body["edges"] = edge_list(g);
  s.body["components"] = r.components;
  s.body["connected"] = r.connected;
  s.body["dims"] = {{"C0", r.c_dims[0]}, {"C1", r.c_dims[1]}, {"C2", r.c_dims[2]},
                    {"Z1", r.z1},        {"B1", r.b1},        {"H1", r.h1}};
  Json coords = Json::array();
  for (const Simplex& p : c.pointed[1]) {
    std::string name;
    for (int e : p) name += (name.empty() ? "" : ",") + edge_text(g.edges()[e]);
    coords.push_back("{" + name + "}");
  }
  s.body["c1_coordinates"] = coords;
  Json tree = Json::array();
  for (int e : r.forest.tree_edges) tree.push_back({g.edges()[e].a + 1, g.edges()[e].b + 1});
  s.body["spanning_tree"] = tree;
  Json nontree = Json::array();
  for (std::size_t j = 0; j < r.forest.non_tree.size(); ++j) {
    const NonTreeEdge& nt = r.forest.non_tree[j];
    nontree.push_back({{"j", j + 1},
                       {"edge", {g.edges()[nt.edge].a + 1, g.edges()[nt.edge].b + 1}},
                       {"o", nt.origin + 1},
                       {"t", nt.target + 1}});
  }
  s.body["non_tree_edges"] = nontree;
  s.body["bases"] = {{"Z", bit_rows(r.z_basis)}, {"B", bit_rows(r.b_basis)}, {"H", bit_rows(r.h_basis)}};
  s.check("d1_d0_zero", r.d1d0_zero);
  s.check("z_closed_form_basis", r.z_matches,
          {{"closed_form_rows", r.z_basis.rows()}, {"kernel_dim", r.z1}});
  s.check("b_closed_form_basis", r.b_matches,
          {{"closed_form_rows", r.b_basis.rows()}, {"image_dim", r.b1}});
  s.check("h_representatives_independent", r.h_independent,
          {{"representatives", r.h_basis.rows()}, {"h1", r.h1}});
  s.check("vertex_decomposition", r.decomposition);
  s.check("dimension_formulas", r.formulas_hold,
          {{"Z1", r.z1}, {"B1", r.b1}, {"H1", r.h1}, {"E", r.edges}, {"I", r.vertices},
           {"components", r.components}});
  return s.finish();
}

Json delta_json(const std::vector<int>& delta) {
  Json out = Json::array();
  for (int j : delta) out.push_back(j + 1);
  return out;
}

Json amalgams_section(const ParsedInput& in, const RunConfig& cfg) {
  Section s;
  const auto* d = std::get_if<CoxeterDiagram>(&in);
  if (!d) throw PreconditionError("amalgams needs a coxeter input");
  const Amalgam a = standard_amalgam(*d);
  Json simplices = Json::array();
  for (std::size_t k = 0; k < a.simplices.size(); ++k) {
    Json apex = Json::array();
    for (int v : a.apex[k]) apex.push_back(v + 1);
    simplices.push_back({{"simplex", simplex_name(a, static_cast<int>(k))},
                         {"apex", apex},
                         {"loop_order", a.loop(static_cast<int>(k)).order()}});
  }
  s.body["simplices"] = simplices;
  s.body["connections"] = a.connections.size();
  const AmalgamReport std_report = verify_amalgam(a);
  s.check("standard_amalgam_valid", std_report.ok, std_report.violations);

  const auto cls = recognize_spherical(*d);
  if (cls.spherical && *cls.predicted_order <= static_cast<std::uint64_t>(cfg.cap)) {
    const StandardCompletion comp = standard_completion(a, cfg.cap);
    const CompletionReport cr = verify_completion(a, comp.target, comp.maps);
    s.body["completion"] = {{"target_order", comp.target.order()}, {"non_collapsing", cr.non_collapsing}};
    s.check("standard_completion", cr.ok && cr.non_collapsing, cr.violations);
  } else {
    s.body["completion"] = cls.spherical ? "skipped: |W| exceeds cap" : "skipped: W is infinite";
  }

  Json coeffs = Json::array();
  Json mismatches = Json::array();
  Json uncovered = Json::array();
  bool gammas_ok = true;
  for (std::size_t k = 0; k < a.simplices.size(); ++k) {
    const CoefficientGroup cg =
        coefficient_group(a, static_cast<int>(k), cfg.cross_check, 48, cfg.budget);
    Json e = {{"simplex", simplex_name(a, static_cast<int>(k))},
              {"generator", cg.generator_name},
              {"closed_form_order", cg.closed_form.size()}};
    e["brute_force_order"] = cg.brute_force ? Json(cg.brute_force->size()) : Json(nullptr);
    e["cofaces_cover_apex"] = cg.cofaces_cover_apex;
    e["agree"] = cg.agree();
    coeffs.push_back(e);
    gammas_ok = gammas_ok && cg.generator_is_automorphism;
    if (!cg.agree()) (cg.cofaces_cover_apex ? mismatches : uncovered).push_back(e["simplex"]);
  }
  s.body["coefficients"] = coeffs;
  s.check("gamma_automorphisms", gammas_ok);
  if (cfg.cross_check) {
    s.check("coefficient_closed_form", mismatches.empty(), mismatches,
            "simplices whose cofaces cover the apex");
    s.body["closed_form_differs_without_cofaces"] = uncovered;
  }

  const AmalgamClassification cls_result = classify_amalgams(*d, cfg.budget);
  const int n = cls_result.n;
  s.body["n"] = n;
  Json classes = Json::array();
  for (const auto& delta : cls_result.representatives) classes.push_back({{"delta", delta_json(delta)}});
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> delta;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) delta.push_back(j);
    if (delta != cls_result.representatives[cls_result.class_of[mask]])
      classes[cls_result.class_of[mask]]["members"].push_back(delta_json(delta));
  }
  Json twist_bad = Json::array(), cocycle_bad = Json::array();
  for (const auto& delta : cls_result.invalid_twists) twist_bad.push_back(delta_json(delta));
  for (const auto& delta : cls_result.cocycle_mismatches) cocycle_bad.push_back(delta_json(delta));
  const int class_count = cls_result.class_count();
  const std::int64_t nodes = cls_result.nodes;
  s.body["classes"] = classes;
  s.body["class_count"] = class_count;
  s.body["search_nodes"] = nodes;
  s.check("twisted_amalgams_valid", twist_bad.empty(), twist_bad);
  s.check("cocycle_amalgams_match_twists", cocycle_bad.empty(), cocycle_bad);
  s.check("class_count_is_2_pow_n", class_count == (1 << n),
          {{"classes", class_count}, {"expected", 1 << n}});
  return s.finish();
}

using Builder = std::function<Json(const ParsedInput&, const RunConfig&)>;

Builder builder_for(const std::string& command) {
  if (command == "parse") return [](const ParsedInput& in, const RunConfig&) { return parse_section(in); };
  if (command == "group") return group_section;
  if (command == "loop") return loop_section;
  if (command == "aut") return aut_section;
  if (command == "cohomology") return cohomology_section;
  if (command == "amalgams") return amalgams_section;
  return nullptr;
}

// Runs one section, turning precondition failures into a failed check.
Json guarded(const Builder& b, const ParsedInput& in, const RunConfig& cfg) {
  try {
    return b(in, cfg);
  } catch (const PreconditionError& e) {
    Section s;
    s.check("precondition", false, Json(e.what()));
    return s.finish();
  }
}

Json verify_sections(const ParsedInput& in, const RunConfig& cfg) {
  Json sections = Json::object();
  auto skip = [](const std::string& why) { return Json{{"skipped", why}, {"status", "pass"}}; };
  sections["parse"] = parse_section(in);
  if (const auto* d = std::get_if<CoxeterDiagram>(&in)) {
    const auto cls = recognize_spherical(*d);
    const Graph g = underlying_graph(*d);
    if (cls.spherical) {
      for (const char* c : {"group", "loop", "aut"}) sections[c] = guarded(builder_for(c), in, cfg);
    } else {
      for (const char* c : {"group", "loop", "aut"}) sections[c] = skip("W is infinite");
    }
    sections["cohomology"] = guarded(cohomology_section, in, cfg);
    if (g.edge_count() == 0) sections["amalgams"] = skip("underlying graph has no edges");
    else if (!d->all_finite()) sections["amalgams"] = skip("diagram is not 2-spherical");
    else sections["amalgams"] = guarded(amalgams_section, in, cfg);
  } else if (std::holds_alternative<Graph>(in)) {
    sections["cohomology"] = guarded(cohomology_section, in, cfg);
  } else {
    sections["loop"] = guarded(loop_section, in, cfg);
    if (is_associative(std::get<LoopTable>(in)).holds) {
      sections["group"] = guarded(group_section, in, cfg);
      sections["aut"] = guarded(aut_section, in, cfg);
    }
  }
  return sections;
}

// ---------------------------------------------------------------------------
// Text rendering

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return false;
  return std::all_of(v.begin(), v.end(), [](const Json& x) {
    return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                                  return y.is_primitive();
                                }));
  });
}

void render(std::ostringstream& out, const Json& obj, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const Json& v = it.value();
    if (it.key() == "checks") {
      out << pad << "checks:" << (v.empty() ? " []" : "") << "\n";
      for (const Json& c : v) {
        out << pad << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
            << c["name"].get<std::string>();
        if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
        if (c.contains("witness")) out << "  witness: " << c["witness"].dump();
        out << "\n";
      }
    } else if (v.is_primitive()) {
      out << pad << it.key() << ": " << scalar_text(v) << "\n";
    } else if (is_flat(v)) {
      out << pad << it.key() << ": " << v.dump() << "\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const Json& item : v) {
        if (item.is_object()) {
          std::ostringstream inner;
          render(inner, item, indent + 4);
          std::string text = inner.str();
          text.replace(indent + 2, 2, "- ");
          out << text;
        } else {
          out << pad << "  - " << item.dump() << "\n";
        }
      }
    } else {
      out << pad << it.key() << ":\n";
      render(out, v, indent + 2);
    }
  }
}

bool all_pass(const Json& report) {
  if (report.contains("status") && report["status"] == "fail") return false;
  if (report.contains("sections"))
    for (const auto& [k, v] : report["sections"].items())
      if (v["status"] == "fail") return false;
  return true;
}

}  // namespace

RunResult run(const RunConfig& config, std::string_view input) {
  Json report;
  report["schema"] = 1;
  report["command"] = config.command;
  report["input"] = {{"name", config.input_name}, {"sha256", sha256_hex(input)}};
  report["config"] = {{"cap", config.cap},
                      {"budget", config.budget},
                      {"strict", config.strict},
                      {"cross_check", config.cross_check}};
  RunResult result;
  auto emit = [&](Json r) {
    if (config.json) {
      result.output = r.dump(2) + "\n";
    } else {
      std::ostringstream out;
      render(out, r, 0);
      result.output = out.str();
    }
  };
  auto error = [&](int code, const std::string& kind, const std::string& message, Json extra) {
    report["status"] = "error";
    Json e = {{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) e[k] = v;
    report["error"] = e;
    result.exit_code = code;
    emit(report);
    return result;
  };

  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), config.command) == names.end())
    return error(kExitUsage, "usage", "unknown command '" + config.command + "'", Json::object());
  if (config.cap < 1 || config.budget < 1)
    return error(kExitUsage, "usage", "cap and budget must be >= 1", Json::object());

  try {
    const ParsedInput in = parse_input(input);
    report["input"]["kind"] = input_kind(in);
    if (config.command == "verify") {
      report["sections"] = verify_sections(in, config);
      report["status"] = all_pass(report) ? "pass" : "fail";
    } else {
      Json section = guarded(builder_for(config.command), in, config);
      for (auto& [k, v] : section.items()) report[k] = v;
    }
  } catch (const ParseError& e) {
    return error(kExitParseError, "parse", e.what(), {{"line", e.line()}, {"column", e.column()}});
  } catch (const DiagramError& e) {
    return error(kExitParseError, "diagram", e.what(), {{"row", e.row() + 1}, {"col", e.col() + 1}});
  } catch (const ResourceLimitError& e) {
    return error(kExitResourceLimit, "resource_limit", e.what(), {{"partial", e.partial()}});
  } catch (const Error& e) {
    return error(kExitCheckFailed, "error", e.what(), Json::object());
  }
  result.exit_code = all_pass(report) ? kExitOk : kExitCheckFailed;
  emit(report);
  return result;
}

}  // namespace ccl

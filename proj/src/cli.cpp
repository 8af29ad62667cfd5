#include "steinberg/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace steinberg::cli {

namespace {

/// Rejection that carries structured detail (e.g. a list of axiom violations).
class Rejected : public std::runtime_error {
 public:
  Rejected(const std::string& what, Json extra) : std::runtime_error(what), extra(std::move(extra)) {}
  Json extra;
};

struct Documents {
  std::map<std::string, Json> json;
  const Command* cmd = nullptr;

  const Json& get(const std::string& flag) const {
    auto it = json.find(flag);
    if (it == json.end()) throw DocumentError("missing required option --" + flag);
    return it->second;
  }
};

bool integer_mode(const Command& c) { return c.ring == "int"; }

Json violations_json(const Groupoid& g, const ValidationReport& v) {
  Json out = Json::array();
  for (const auto& viol : v.violations) {
    Json ms = Json::array();
    for (MorphismId x : viol.morphisms) ms.push_back(g.label(x));
    out.push_back({{"kind", viol.kind}, {"morphisms", ms}});
  }
  return out;
}

GroupoidPtr valid_groupoid(const Documents& docs) {
  auto g = groupoid_from_json(docs.get("input"));
  const auto v = validate(*g);
  if (!v.ok())
    throw Rejected("groupoid document violates " + std::to_string(v.violations.size()) + " axiom condition(s)",
                   {{"violations", violations_json(*g, v)}});
  return g;
}

const std::string& text_option(const std::string& value, const char* flag) {
  if (value.empty()) throw DocumentError(std::string("missing required option --") + flag);
  return value;
}

LpaElement<Rational> lpa_operand(const GraphPtr& g, const Command& c, const std::string& text) {
  auto x = parse_lpa(g, text);
  if (integer_mode(c))
    for (const auto& [t, q] : x.terms())
      if (boost::multiprecision::denominator(q) != 1)
        throw DocumentError("non-integral coefficient in '" + text + "' in integer mode");
  return x;
}

Json path_names(const Graph& g, const std::vector<Path>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(format_path(g, p));
  return out;
}

Json conditions_json(const Graph& g, const PConditionReport& r) {
  Json out = Json::array();
  for (std::size_t i = 0; i < r.conditions.size(); ++i) {
    const auto& c = r.conditions[i];
    out.push_back({{"condition", i + 1},
                   {"pass", c.pass},
                   {"counterexample", c.counterexample ? Json(format_path(g, *c.counterexample)) : Json()},
                   {"detail", c.detail}});
  }
  return out;
}

// Verbs. Each fills r.details and r.status.

void do_validate(const Documents& docs, Report& r) {
  const auto g = groupoid_from_json(docs.get("input"));
  const auto v = validate(*g);
  r.details["morphisms"] = g->size();
  r.details["units"] = g->units().size();
  r.details["violations"] = violations_json(*g, v);
  if (!v.ok()) {
    r.status = Status::rejected;
    r.details["error"] = "groupoid axioms violated";
  }
}

void do_center(const Documents& docs, Report& r) {
  const auto g = valid_groupoid(docs);
  const auto b = center_basis(g);
  r.details["dim"] = b.dim();
  r.details["center"] = basis_to_json(b, integer_mode(*docs.cmd));
}

void do_centralizer(const Documents& docs, Report& r) {
  const auto g = valid_groupoid(docs);
  const Json& list = docs.get("elements");
  if (!list.is_array()) throw DocumentError("elements: /: expected a list of elements");
  const auto full = SubspaceBasis::full(g);
  SubspaceBasis c = SubspaceBasis::zero(g);
  if (integer_mode(*docs.cmd)) {
    std::vector<Element<Integer>> s;
    for (std::size_t i = 0; i < list.size(); ++i) s.push_back(element_from_json<Integer>(g, list[i], "/" + std::to_string(i)));
    c = centralizer_basis(s, full);
  } else {
    std::vector<Element<Rational>> s;
    for (std::size_t i = 0; i < list.size(); ++i) s.push_back(element_from_json<Rational>(g, list[i], "/" + std::to_string(i)));
    c = centralizer_basis(s, full);
  }
  r.details["generators"] = list.size();
  r.details["dim"] = c.dim();
  r.details["centralizer"] = basis_to_json(c, integer_mode(*docs.cmd));
}

void do_derive(const Documents& docs, Report& r) {
  const auto g = valid_groupoid(docs);
  const auto p = partition_from_json(*g, docs.get("partition"));
  const auto dp = derive(*g, p);
  const auto lemma = check_interior_lemma(*g, dp);
  const auto prime = prime_hypothesis_failure(*g, true);
  r.details["U11"] = morphism_set_to_json(*g, dp.u11);
  r.details["U12"] = morphism_set_to_json(*g, dp.u12);
  r.details["U21"] = morphism_set_to_json(*g, dp.u21);
  r.details["U22"] = morphism_set_to_json(*g, dp.u22);
  r.details["V"] = morphism_set_to_json(*g, dp.v);
  r.details["W"] = morphism_set_to_json(*g, dp.w);
  r.details["prime_hypothesis"] = prime ? *prime : std::string("holds");
  r.details["v_empty"] = lemma.v_empty;
  r.details["w_stable"] = lemma.w_stable;
  if (lemma.counterexample)
    r.details["counterexample"] = {g->label(lemma.counterexample->first), g->label(lemma.counterexample->second)};
  if (!lemma.v_empty || !lemma.w_stable) r.status = Status::fail;
}

void do_verify(const Documents& docs, Report& r) {
  const auto g = valid_groupoid(docs);
  const auto p = partition_from_json(*g, docs.get("partition"));
  r.details["U1"] = morphism_set_to_json(*g, p.u1);
  r.details["U2"] = morphism_set_to_json(*g, p.u2);
  try {
    const auto m = verify_main_theorem(g, p, true);
    r.details["dim_center"] = m.dim_center;
    r.details["dim_a21"] = m.dim_a21;
    r.details["dim_T"] = m.maximality.dim_subalgebra;
    r.details["dim_centralizer"] = m.maximality.dim_centralizer;
    r.details["maximal"] = m.maximal();
    r.details["witness"] = m.maximality.witness ? element_to_json(*m.maximality.witness) : Json();
    if (!m.maximal()) r.status = Status::fail;
  } catch (const NonCommutativeError& e) {
    r.status = Status::fail;
    r.details["commutative"] = false;
    r.details["witness"] = {element_to_json(e.first), element_to_json(e.second)};
  }
}

GraphPtr input_graph(const Documents& docs) { return graph_from_json(docs.get("input")); }

void do_lpa_mul(const Documents& docs, Report& r) {
  const auto g = input_graph(docs);
  const auto x = lpa_operand(g, *docs.cmd, text_option(docs.cmd->lhs, "lhs"));
  const auto y = lpa_operand(g, *docs.cmd, text_option(docs.cmd->rhs, "rhs"));
  r.details["lhs"] = format_lpa(x);
  r.details["rhs"] = format_lpa(y);
  r.details["product"] = format_lpa(lpa_mul(x, y));
}

void do_lpa_normal(const Documents& docs, Report& r) {
  const auto g = input_graph(docs);
  const auto& text = text_option(docs.cmd->expr, "expr");
  const auto x = lpa_operand(g, *docs.cmd, text);
  r.details["expr"] = text;
  r.details["normal_form"] = format_lpa(x);
  r.details["terms"] = x.terms().size();
}

void do_lpa_verify(const Documents& docs, Report& r) {
  const auto g = input_graph(docs);
  const auto p1 = pathset_from_json(*g, docs.get("pset1"));
  const auto p2 = pathset_from_json(*g, docs.get("pset2"));
  const auto& cmd = *docs.cmd;
  const auto rep = build_T_lpa(g, p1, p2, true);
  r.details["conditions"] = conditions_json(*g, rep.conditions);
  if (rep.deferred) {
    const auto c = commutes_up_to_degree(g, p1, p2, cmd.degree);
    r.details["case"] = "cyclic";
    r.details["degree"] = cmd.degree;
    r.details["generators"] = c.generators;
    r.details["pairs_checked"] = c.pairs_checked;
    r.details["all_commute"] = c.all_commute;
    r.details["a_part_square_zero"] = c.a_part_square_zero;
    if (c.failure) {
      const auto gens = t_generators(g, p1, p2, cmd.degree);
      r.details["failure"] = {format_lpa(gens[c.failure->first]), format_lpa(gens[c.failure->second])};
    }
    r.details["maximality"] = "not decided; commutation checked to the degree bound only";
    if (!c.all_commute) r.status = Status::fail;
  } else {
    const auto gg = graph_groupoid(g);
    std::vector<Path> u1, u2;
    for (std::size_t i = 0; i < gg.boundary.size(); ++i)
      (rep.partition->u1.contains(gg.unit(i)) ? u1 : u2).push_back(gg.boundary[i]);
    r.details["case"] = "acyclic";
    r.details["U1"] = path_names(*g, u1);
    r.details["U2"] = path_names(*g, u2);
    r.details["dim_center"] = rep.main->dim_center;
    r.details["dim_a12"] = rep.main->dim_a21;
    r.details["dim_T"] = rep.dim_t;
    r.details["dim_s_image"] = rep.dim_s_image;
    r.details["s_image_is_a12"] = rep.s_image_is_a12;
    r.details["maximal"] = rep.main->maximal();
    r.details["witness"] = rep.main->maximality.witness ? element_to_json(*rep.main->maximality.witness) : Json();
    if (!rep.verified()) r.status = Status::fail;
  }
  if (!cmd.expr.empty()) {
    const auto candidate = lpa_operand(g, cmd, cmd.expr);
    const auto w = witness_noncommuting(candidate, p1, p2, cmd.degree);
    Json c{{"expr", format_lpa(candidate)}, {"witness", w ? Json(format_lpa(*w)) : Json()}};
    if (w) c["commutator"] = format_lpa(commutator(*w, candidate));
    r.details["candidate"] = c;
  }
}

void do_groupoid_of_graph(const Documents& docs, Report& r) {
  const auto g = input_graph(docs);
  const auto gg = graph_groupoid(g);
  r.details["boundary_paths"] = path_names(*g, gg.boundary);
  r.details["morphisms"] = gg.groupoid->size();
  r.details["transitive"] = is_topologically_transitive(*gg.groupoid);
  r.details["groupoid"] = groupoid_to_json(*gg.groupoid);
}

void do_disjointify(const Documents& docs, Report& r) {
  const auto g = input_graph(docs);
  const auto in = cylinders_from_json(*g, docs.get("cylinders"));
  const auto out = disjointify(*g, in);
  Json list = Json::array();
  for (const auto& c : out) list.push_back(cylinder_to_json(*g, c));
  r.details["input_count"] = in.size();
  r.details["output_count"] = out.size();
  r.details["cylinders"] = list;
}

using Handler = void (*)(const Documents&, Report&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", do_validate},           {"center", do_center},
      {"centralizer", do_centralizer},     {"maxcomm-derive", do_derive},
      {"maxcomm-verify", do_verify},       {"lpa-mul", do_lpa_mul},
      {"lpa-normal", do_lpa_normal},       {"lpa-verify", do_lpa_verify},
      {"groupoid-of-graph", do_groupoid_of_graph}, {"disjointify", do_disjointify},
  };
  return table;
}

void reject(Report& r, const std::string& kind, const std::string& message) {
  r.status = Status::rejected;
  r.details["error_kind"] = kind;
  r.details["error"] = message;
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> list{"validate",       "center",  "centralizer", "maxcomm-derive",
                                             "maxcomm-verify", "lpa-mul", "lpa-normal",  "lpa-verify",
                                             "groupoid-of-graph", "disjointify"};
  return list;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::rejected:
      return "rejected-hypothesis";
  }
  return "";
}

Json Report::to_json() const {
  return {{"tool", tool_name},         {"version", tool_version}, {"verb", verb},
          {"status", status_name(status)}, {"input_digest", input_digest}, {"details", details}};
}

std::string Report::to_text() const {
  std::string out = verb + ": " + status_name(status) + "\n";
  for (const auto& [key, value] : details.items())
    out += "  " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  return out;
}

Report run(const Command& command) {
  Report r;
  r.verb = command.verb;
  Documents docs;
  docs.cmd = &command;
  try {
    auto handler = handlers().find(command.verb);
    if (handler == handlers().end()) throw DocumentError("unknown verb '" + command.verb + "'");
    if (command.ring != "int" && command.ring != "rat")
      throw DocumentError("--ring must be int or rat, not '" + command.ring + "'");

    // Read and parse every document before any computation.
    std::string digest_input;
    const std::pair<const char*, const std::string*> files[] = {
        {"input", &command.input}, {"partition", &command.partition}, {"pset1", &command.pset1},
        {"pset2", &command.pset2}, {"elements", &command.elements},   {"cylinders", &command.cylinders}};
    std::vector<std::tuple<std::string, std::string, std::string>> texts;  // flag, path, contents
    for (const auto& [flag, path] : files) {
      if (path->empty()) continue;
      texts.emplace_back(flag, *path, read_file(*path));
      digest_input += std::string(flag) + '\0' + std::get<2>(texts.back()) + '\0';
    }
    for (const auto& [flag, text] : {std::pair{"lhs", &command.lhs}, {"rhs", &command.rhs}, {"expr", &command.expr}})
      if (!text->empty()) digest_input += std::string(flag) + '\0' + *text + '\0';
    r.input_digest = sha256_hex(digest_input);
    for (const auto& [flag, path, text] : texts) {
      try {
        docs.json.emplace(flag, parse_json(text, path));
      } catch (const DocumentError& e) {
        throw DocumentError("--" + flag + " " + e.what());
      }
    }

    handler->second(docs, r);
  } catch (const Rejected& e) {
    reject(r, "hypothesis", e.what());
    for (const auto& [k, v] : e.extra.items()) r.details[k] = v;
  } catch (const DocumentError& e) {
    reject(r, "parse", e.what());
  } catch (const HypothesisError& e) {
    reject(r, "hypothesis", e.what());
  } catch (const GraphError& e) {
    reject(r, "input", e.what());
  } catch (const std::invalid_argument& e) {
    reject(r, "input", e.what());
  }
  return r;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Steinberg algebras of finite groupoids and Leavitt path algebras", tool_name};
  app.set_version_flag("--version", tool_version);
  Command cmd;
  bool json = false;
  app.add_option("verb", cmd.verb, "Operation to run")->required()->check(CLI::IsMember(verbs()));
  app.add_option("--input", cmd.input, "Groupoid or graph document");
  app.add_option("--partition", cmd.partition, "Unit partition document {U1, U2}");
  app.add_option("--pset1", cmd.pset1, "Generators of P1 (list of paths)");
  app.add_option("--pset2", cmd.pset2, "Generators of P2 (list of paths)");
  app.add_option("--elements", cmd.elements, "List of algebra elements (centralizer)");
  app.add_option("--cylinders", cmd.cylinders, "List of cylinders (disjointify)");
  app.add_option("--lhs", cmd.lhs, "Left factor (lpa-mul)");
  app.add_option("--rhs", cmd.rhs, "Right factor (lpa-mul)");
  app.add_option("--expr", cmd.expr, "Expression (lpa-normal) or candidate (lpa-verify)");
  app.add_option("--degree", cmd.degree, "Degree bound L for graphs with cycles")->capture_default_str();
  app.add_option("--ring", cmd.ring, "Scalar ring")->check(CLI::IsMember({"int", "rat"}))->capture_default_str();
  app.add_option("--seed", cmd.seed, "Seed for randomized sweeps")->capture_default_str();
  app.add_flag("--json", json, "Print the full JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    Report r;
    r.verb = argc > 1 && argv[1][0] != '-' ? argv[1] : cmd.verb;
    reject(r, "parse", e.what());
    out << (json ? r.to_json().dump(2) + "\n" : r.to_text());
    return r.exit_code();
  }

  const Report r = run(cmd);
  out << (json ? r.to_json().dump(2) + "\n" : r.to_text());
  return r.exit_code();
}

}  // namespace steinberg::cli

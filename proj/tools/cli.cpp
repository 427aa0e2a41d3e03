#include "cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "twuality/errors.hpp"
#include "twuality/multimatroid.hpp"
#include "twuality/orbit.hpp"
#include "twuality/ribbon.hpp"
#include "twuality/serialize.hpp"

namespace twual {

using namespace twuality;

namespace {

struct Globals {
  std::string format = "json";
  int threads = 1;
  std::optional<int> max_n;
};

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ValidationError(path + ": malformed JSON: " + e.what());
  }
}

// --- text rendering -------------------------------------------------------

bool is_set_system(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("n") && j.contains("feasible");
}

bool is_scalar_row(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_scalar_row(e)) return false;
  }
  return true;
}

void render(const Json& j, std::ostream& out, int indent);

void render_value(const Json& j, std::ostream& out, int indent) {
  if (is_set_system(j)) {
    out << ' ' << decode_set_system(j).to_string() << '\n';
  } else if (j.is_object() || (j.is_array() && !is_scalar_row(j))) {
    out << '\n';
    render(j, out, indent + 2);
  } else if (j.is_string()) {
    out << ' ' << j.get<std::string>() << '\n';
  } else {
    out << ' ' << j.dump() << '\n';
  }
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << pad << key << ':';
      render_value(value, out, indent);
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      out << pad << '-';
      render_value(value, out, indent);
    }
  } else {
    out << pad << j.dump() << '\n';
  }
}

void emit(const Json& j, const Globals& g, std::ostream& out) {
  if (g.format == "text" && is_set_system(j)) {
    out << decode_set_system(j).to_string() << '\n';
  } else if (g.format == "text") {
    render(j, out, 0);
  } else {
    out << dump(j);
  }
}

// --- the --ops grammar ----------------------------------------------------

struct Op {
  std::optional<Perm> perm;
  Flip flip = Flip::Identity;
  ElementSet target;
};

ElementSet parse_target(std::string_view text, std::size_t& pos) {
  if (pos < text.size() && text[pos] == '{') {
    const auto close = text.find('}', pos);
    if (close == std::string_view::npos) throw ValidationError("unbalanced '{' in --ops");
    std::vector<int> members;
    std::string body(text.substr(pos + 1, close - pos - 1));
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream in(body);
    int v = 0;
    while (in >> v) members.push_back(v);
    if (!in.eof()) throw ValidationError("bad element list in --ops: {" + body + "}");
    pos = close + 1;
    return ElementSet::of(members);
  }
  std::size_t end = pos;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  if (end == pos) throw ValidationError("flip in --ops needs an element or {set} target");
  const int i = std::stoi(std::string(text.substr(pos, end - pos)));
  pos = end;
  if (i < 1 || i > kMaxGround) throw ValidationError("element " + std::to_string(i) + " out of range");
  return ElementSet::singleton(i);
}

// Operations are applied left to right. Flips are single letters followed by
// a target; permutations are cycle or one-line tokens.
std::vector<Op> parse_ops(std::string_view text, int n) {
  std::vector<Op> ops;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '(' || c == '[') {
      std::size_t end = pos;
      if (c == '[') {
        end = text.find(']', pos);
        if (end == std::string_view::npos) throw ValidationError("unbalanced '[' in --ops");
        ++end;
      } else {
        while (end < text.size() && text[end] == '(') {
          const auto close = text.find(')', end);
          if (close == std::string_view::npos) throw ValidationError("unbalanced '(' in --ops");
          end = close + 1;
        }
      }
      ops.push_back({parse_perm(text.substr(pos, end - pos), n), Flip::Identity, {}});
      pos = end;
      continue;
    }
    Flip f = Flip::Identity;
    switch (c) {
    case '*': f = Flip::Star; break;
    case '+': f = Flip::Plus; break;
    case '~': f = Flip::StarBar; break;
    default: throw ValidationError(std::string("unexpected '") + c + "' in --ops");
    }
    ++pos;
    if (pos < text.size() && (text[pos] == '*' || text[pos] == '+' || text[pos] == '~')) {
      throw ValidationError("--ops takes one flip letter per operation; write \"+1 *1\" for + then *");
    }
    ops.push_back({std::nullopt, f, parse_target(text, pos)});
  }
  return ops;
}

// --- subcommands ----------------------------------------------------------

Json check_report(const SetSystem& d, const Globals& g) {
  Json out{{"system", encode(d)}, {"proper", d.is_proper()}, {"normal", d.is_normal()}};
  const auto w = is_delta_matroid(d);
  out["delta_matroid"] = encode(w);
  VfSafeOptions vf;
  if (g.max_n) vf.max_n = *g.max_n;
  const auto r = vf_safe_report(d, vf);
  Json vj{{"value", r.vf_safe}, {"states", r.states}};
  if (!r.vf_safe) {
    Json path = Json::array();
    for (auto [f, i] : r.path) path.push_back(std::string(to_token(f)) + std::to_string(i));
    vj["path"] = path;
    vj["counterexample"] = encode(r.counterexample);
  }
  out["vf_safe"] = vj;
  if (w.valid) {
    Json loops = Json::array();
    for (int i = 1; i <= d.n(); ++i) loops.push_back(std::string(to_string(classify_element(d, i))));
    out["ribbon_loops"] = loops;
  }
  return out;
}

TransversalTriple triple_or_reference(const std::string& text, int n) {
  if (text.empty()) return TransversalTriple::reference(n);
  auto t = parse_triple(text);
  if (t.size() != n) throw ValidationError("--tau has " + std::to_string(t.size()) + " classes, expected " + std::to_string(n));
  return t;
}

Projection projection_or_identity(const std::string& text, int n) {
  if (text.empty()) return Projection::identity(n);
  return Projection{parse_perm(text, n)};
}

const char* kUsageFooter =
    "Exit codes: 0 ok, 1 invalid input, 2 budget exceeded, 3 verification counterexample.";

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted-duality toolkit for set systems, multimatroids and ribbon graphs", "twual"};
  app.footer(kUsageFooter);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", g.threads, "Worker threads for orbit expansion")->check(CLI::Range(1, 256));
  app.add_option_function<int>("--max-n", [&](int v) { g.max_n = v; }, "Override the ground-size budget");

  std::string file;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "Input JSON file ('-' for stdin)")->required();
    sub->fallthrough();
  };

  auto* check = app.add_subcommand("check", "Delta-matroid and vf-safe report");
  add_file(check);

  std::string ops;
  auto* apply = app.add_subcommand("apply", "Apply flips and relabelings left to right");
  add_file(apply);
  apply->add_option("--ops", ops, "e.g. \"*{1,2} +3 (1 2)\"")->required();

  bool iota = false;
  auto* orb = app.add_subcommand("orbit", "Orbit under the full group or its iota subgroup");
  add_file(orb);
  orb->add_flag("--iota", iota, "Flip vectors only");

  bool uniform_only = false;
  auto* self = app.add_subcommand("selftwual", "Stabilizer search");
  add_file(self);
  self->add_flag("--uniform-only", uniform_only, "Only uniform flip vectors");

  std::string gvec_text, mu_text, g_text;
  auto* uni = app.add_subcommand("uniformize", "Conjugate a stabilizer to a uniform one");
  add_file(uni);
  uni->add_option("--gvec", gvec_text, "Flip vector, e.g. \"*,+,+\"")->required();
  uni->add_option("--mu", mu_text, "Permutation, e.g. \"(1 2)\" or \"[2,1,3]\"")->required();
  uni->add_option("--g", g_text, "Target flip token")->required();

  std::string tau_text, sigma_text;
  auto* lift_cmd = app.add_subcommand("lift", "Tight 3-matroid lift of a vf-safe delta-matroid");
  add_file(lift_cmd);
  lift_cmd->add_option("--tau", tau_text, "Transversal triple");
  lift_cmd->add_option("--sigma", sigma_text, "Projection permutation");

  auto* extract_cmd = app.add_subcommand("extract", "Set system of a multimatroid at (tau, sigma)");
  add_file(extract_cmd);
  extract_cmd->add_option("--tau", tau_text, "Transversal triple")->required();
  extract_cmd->add_option("--sigma", sigma_text, "Projection permutation")->required();

  auto* mm = app.add_subcommand("mm-check", "Multimatroid axioms and tightness");
  add_file(mm);

  auto* ovl = app.add_subcommand("orbit-via-lift", "Orbit through extractions of the lift");
  add_file(ovl);
  ovl->add_flag("--iota", iota, "Fix the projection");
  ovl->add_option("--tau", tau_text, "Transversal triple");
  ovl->add_option("--sigma", sigma_text, "Projection permutation");

  auto* ribbon = app.add_subcommand("ribbon", "Ribbon-graph commands");
  ribbon->require_subcommand(1);
  ribbon->fallthrough();
  auto* rdm = ribbon->add_subcommand("dm", "Delta-matroid of spanning quasi-trees");
  add_file(rdm);
  auto* rmed = ribbon->add_subcommand("medial", "Medial graph with its transitions");
  add_file(rmed);
  auto* rver = ribbon->add_subcommand("verify-t63", "Compare the medial transition matroid with the lift");
  add_file(rver);

  std::vector<std::string> argv_store{"twual"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kValidation;
  }

  try {
    if (check->parsed()) {
      emit(check_report(decode_set_system(read_json(file)), g), g, out);
    } else if (apply->parsed()) {
      SetSystem d = decode_set_system(read_json(file));
      for (const auto& op : parse_ops(ops, d.n())) {
        d = op.perm ? relabel(d, *op.perm) : apply_flip(d, op.flip, op.target);
      }
      emit(encode(d), g, out);
    } else if (orb->parsed()) {
      const auto d = decode_set_system(read_json(file));
      OrbitOptions opts;
      opts.threads = g.threads;
      if (g.max_n) opts.max_n_full = opts.max_n_iota = *g.max_n;
      emit(encode(orbit(d, iota ? OrbitMode::Iota : OrbitMode::Full, opts)), g, out);
    } else if (self->parsed()) {
      const auto d = decode_set_system(read_json(file));
      StabilizerOptions opts;
      if (g.max_n) opts.max_n_all = opts.max_n_uniform = *g.max_n;
      const auto hits = stabilizer_search(d, uniform_only ? StabilizerMode::Uniform : StabilizerMode::All, opts);
      Json list = Json::array();
      bool self_twual = false;
      bool canonical = false;
      for (const auto& h : hits) {
        list.push_back(encode(h));
        if (h.uniform) {
          self_twual = true;
          canonical = canonical || h.element.perm.is_identity();
        }
      }
      emit({{"system", encode(d)},
            {"mode", uniform_only ? "uniform" : "all"},
            {"hits", list},
            {"self_twual", self_twual},
            {"canonically_self_twual", canonical}},
           g, out);
    } else if (uni->parsed()) {
      const auto d = decode_set_system(read_json(file));
      const auto gvec = parse_flip_vector(gvec_text);
      const auto flip = parse_flip_token(g_text);
      if (!flip) throw ValidationError("unknown flip token \"" + g_text + "\"");
      emit(encode(uniformize(d, gvec, parse_perm(mu_text, d.n()), *flip)), g, out);
    } else if (lift_cmd->parsed()) {
      const auto d = decode_set_system(read_json(file));
      VfSafeOptions vf;
      if (g.max_n) vf.max_n = *g.max_n;
      emit(encode(lift(d, triple_or_reference(tau_text, d.n()), projection_or_identity(sigma_text, d.n()), vf)),
           g, out);
    } else if (extract_cmd->parsed()) {
      const auto z = decode_multimatroid(read_json(file));
      emit(encode(extract(z, triple_or_reference(tau_text, z.n()), projection_or_identity(sigma_text, z.n()))),
           g, out);
    } else if (mm->parsed()) {
      const auto z = decode_multimatroid(read_json(file));
      MultimatroidOptions opts;
      if (g.max_n) opts.max_n = *g.max_n;
      Json report{{"multimatroid", encode(is_multimatroid(z, opts))}};
      const bool transversal_bases = std::all_of(z.bases().begin(), z.bases().end(),
                                                 [&](Subtransversal b) { return b.is_transversal(z.n()); });
      report["tight"] = transversal_bases ? encode(is_tight(z, opts)) : Json(nullptr);
      emit(report, g, out);
    } else if (ovl->parsed()) {
      const auto d = decode_set_system(read_json(file));
      LiftOrbitOptions opts;
      if (g.max_n) opts.max_n_full = opts.max_n_iota = *g.max_n;
      const auto elems = orbit_via_lift(d, triple_or_reference(tau_text, d.n()),
                                        projection_or_identity(sigma_text, d.n()),
                                        iota ? OrbitMode::Iota : OrbitMode::Full, opts);
      Json list = Json::array();
      for (const auto& e : elems) list.push_back(encode(e));
      emit({{"size", elems.size()}, {"elements", list}}, g, out);
    } else if (rdm->parsed()) {
      RibbonOptions opts;
      if (g.max_n) opts.max_edges = *g.max_n;
      emit(encode(delta_matroid_of(decode_ribbon_graph(read_json(file)), opts)), g, out);
    } else if (rmed->parsed()) {
      const auto graph = decode_ribbon_graph(read_json(file));
      const auto f = medial(graph);
      Json j = encode(f);
      j["components"] = components(f);
      emit(j, g, out);
    } else if (rver->parsed()) {
      const auto graph = decode_ribbon_graph(read_json(file));
      const auto r = verify_medial_lift(graph, g.max_n.value_or(6));
      Json a = Json::array();
      Json b = Json::array();
      for (auto s : r.only_in_medial) a.push_back(encode(s));
      for (auto s : r.only_in_lift) b.push_back(encode(s));
      emit({{"equal", r.equal},
            {"from_medial", encode(r.from_medial)},
            {"from_lift", encode(r.from_lift)},
            {"only_in_medial", a},
            {"only_in_lift", b}},
           g, out);
      if (!r.equal) {
        err << "counterexample: base sets differ\n";
        return kVerification;
      }
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const ConsistencyError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerification;
  }
  return kOk;
}

} // namespace twual

#include "twuality/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

Json tokens(const FlipVector& g) {
  Json out = Json::array();
  for (Flip f : g.entries) out.push_back(std::string(to_token(f)));
  return out;
}

Json encode(ElementSet s) { return s.members(); }

Json encode(const std::array<Pairing, 3>& t) {
  Json out = Json::array();
  for (const auto& p : t) {
    out.push_back({{p.pairs[0][0], p.pairs[0][1]}, {p.pairs[1][0], p.pairs[1][1]}});
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace

Json encode(const SetSystem& d) {
  Json feasible = Json::array();
  for (ElementSet x : d.family()) feasible.push_back(encode(x));
  return {{"n", d.n()}, {"feasible", feasible}};
}

SetSystem decode_set_system(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxGround) fail("n must lie in 0.." + std::to_string(kMaxGround));
  std::vector<ElementSet> family;
  for (const auto& x : as_array(field(j, "feasible"), "feasible")) {
    std::vector<int> members;
    for (const auto& e : as_array(x, "feasible set")) members.push_back(as_int(e, "element"));
    const ElementSet s = ElementSet::of(members);
    if (!s.within(n)) fail("feasible set " + s.to_string() + " is not a subset of [" + std::to_string(n) + "]");
    family.push_back(s);
  }
  return SetSystem::from_distinct(n, std::move(family));
}

Json encode(Subtransversal s) {
  Json out = Json::array();
  for (const auto& e : s.elements()) out.push_back({e.index, e.role});
  return out;
}

Json encode(const Multimatroid& z) {
  Json bases = Json::array();
  for (auto b : z.bases()) bases.push_back(encode(b));
  return {{"n", z.n()}, {"bases", bases}};
}

Multimatroid decode_multimatroid(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > kMaxGround) fail("n must lie in 0.." + std::to_string(kMaxGround));
  std::vector<Subtransversal> bases;
  std::set<Subtransversal> seen;
  for (const auto& b : as_array(field(j, "bases"), "bases")) {
    std::vector<CarrierElement> elems;
    for (const auto& e : as_array(b, "basis")) {
      if (!e.is_array() || e.size() != 2) fail("carrier element must be [index, role]");
      elems.push_back({as_int(e[0], "index"), as_int(e[1], "role")});
    }
    const auto s = Subtransversal::of(elems);
    for (const auto& e : elems) {
      if (e.index > n) fail("carrier element index " + std::to_string(e.index) + " exceeds n");
    }
    if (!seen.insert(s).second) fail("duplicate basis");
    bases.push_back(s);
  }
  return Multimatroid(n, std::move(bases));
}

Json encode(const TransversalTriple& t) {
  Json roles = Json::array();
  for (const auto& p : t.slot_of_role) roles.push_back({p[0] + 1, p[1] + 1, p[2] + 1});
  return {{"roles", roles}};
}

TransversalTriple decode_triple(const Json& j) {
  TransversalTriple t;
  for (const auto& row : as_array(field(j, "roles"), "roles")) {
    if (!row.is_array() || row.size() != 3) fail("each class needs three slots");
    SymbolPerm p{};
    for (int r = 0; r < 3; ++r) {
      const int slot = as_int(row[r], "slot");
      if (slot < 1 || slot > 3) fail("slot must lie in 1..3");
      p[r] = static_cast<std::uint8_t>(slot - 1);
    }
    t.slot_of_role.push_back(p);
  }
  if (t.size() > kMaxGround) fail("too many classes");
  if (!t.is_valid()) fail("each class must place one element in every slot");
  return t;
}

Json encode(const Perm& p) { return p.one_line(); }

Perm decode_perm(const Json& j) {
  std::vector<int> images;
  for (const auto& e : as_array(j, "permutation")) images.push_back(as_int(e, "image"));
  if (images.size() > static_cast<std::size_t>(kMaxGround)) fail("permutation too large");
  return Perm::from_one_line(images);
}

Json encode(const FlipVector& g) { return tokens(g); }

FlipVector decode_flip_vector(const Json& j) {
  FlipVector g;
  for (const auto& e : as_array(j, "flip vector")) {
    if (!e.is_string()) fail("flip tokens must be strings");
    const auto f = parse_flip_token(e.get<std::string>());
    if (!f) fail("unknown flip token \"" + e.get<std::string>() + "\"");
    g.entries.push_back(*f);
  }
  if (g.size() > kMaxGround) fail("flip vector too long");
  return g;
}

Json encode(const RibbonGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"ends", {e.ends[0], e.ends[1]}}, {"sign", e.sign}, {"label", e.label}});
  }
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

RibbonGraph decode_ribbon_graph(const Json& j) {
  std::vector<std::vector<int>> vertices;
  for (const auto& rot : as_array(field(j, "vertices"), "vertices")) {
    std::vector<int> hs;
    for (const auto& h : as_array(rot, "rotation")) hs.push_back(as_int(h, "half-edge"));
    vertices.push_back(std::move(hs));
  }
  std::vector<RibbonEdge> edges;
  for (const auto& e : as_array(field(j, "edges"), "edges")) {
    const auto& ends = as_array(field(e, "ends"), "ends");
    if (ends.size() != 2) fail("an edge has exactly two ends");
    RibbonEdge edge;
    edge.ends = {as_int(ends[0], "half-edge"), as_int(ends[1], "half-edge")};
    edge.sign = e.contains("sign") ? as_int(e.at("sign"), "sign") : 1;
    edge.label = e.contains("label") ? as_int(e.at("label"), "label")
                                     : static_cast<int>(edges.size()) + 1;
    edges.push_back(edge);
  }
  return RibbonGraph(std::move(vertices), std::move(edges));
}

Json encode(const FourRegularGraph& f) {
  Json transitions = Json::array();
  for (const auto& t : f.transitions) transitions.push_back(encode(t));
  return {{"vertex_labels", f.vertex_labels},
          {"corner_edges", f.corner_edges},
          {"transitions", transitions},
          {"free_loops", f.free_loops}};
}

Json encode(const DeltaMatroidWitness& w) {
  Json out{{"valid", w.valid}};
  switch (w.failure) {
  case DeltaMatroidWitness::Failure::None:
    break;
  case DeltaMatroidWitness::Failure::NotProper:
    out["failure"] = "not_proper";
    break;
  case DeltaMatroidWitness::Failure::Exchange:
    out["failure"] = "exchange";
    out["x"] = encode(w.x);
    out["y"] = encode(w.y);
    out["u"] = w.u;
    break;
  }
  return out;
}

Json encode(const MultimatroidWitness& w) {
  Json out{{"valid", w.valid}};
  using A = MultimatroidWitness::Axiom;
  switch (w.axiom) {
  case A::None:
    break;
  case A::NoBases:
    out["axiom"] = "no_bases";
    break;
  case A::NotSubtransversal:
    out["axiom"] = "not_subtransversal";
    break;
  case A::Matroid:
    out["axiom"] = "matroid";
    out["transversal"] = encode(w.transversal);
    out["smaller"] = encode(w.smaller);
    out["larger"] = encode(w.larger);
    break;
  case A::SkewPair:
    out["axiom"] = "skew_pair";
    out["independent"] = encode(w.smaller);
    out["class"] = w.index;
    out["roles"] = w.pair;
    break;
  case A::NotTight:
    out["axiom"] = "not_tight";
    out["basis"] = encode(w.transversal);
    out["class"] = w.index;
    out["non_bases"] = w.count;
    break;
  }
  return out;
}

Json encode(const OrbitReport& r) {
  Json elements = Json::array();
  Json paths = Json::array();
  for (std::size_t k = 0; k < r.size(); ++k) {
    elements.push_back(encode(r.elements[k]));
    Json path = Json::array();
    for (const auto& g : r.paths[k]) path.push_back(g.token());
    paths.push_back(path);
  }
  return {{"size", r.size()}, {"elements", elements}, {"paths", paths}};
}

Json encode(const TwualityElement& a) { return {{"gvec", tokens(a.gvec)}, {"perm", encode(a.perm)}}; }

Json encode(const StabilizerHit& h) {
  Json out = encode(h.element);
  out["uniform"] = h.uniform ? Json(std::string(to_token(*h.uniform))) : Json(nullptr);
  return out;
}

Json encode(const UniformizationResult& u) {
  return {{"h", tokens(u.hvec)},
          {"target", encode(u.target)},
          {"g", std::string(to_token(u.g))},
          {"mu", encode(u.mu)}};
}

Perm parse_perm(std::string_view text, int n) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    Perm p = decode_perm(parse_json(text));
    if (p.size() != n) fail("permutation has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
    return p;
  }
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("permutation must be cycle notation \"(1 2)\" or one-line \"[2,1]\"");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) fail("unbalanced parenthesis in permutation");
    std::string body(text.substr(pos + 1, close - pos - 1));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::vector<int> cycle;
    std::size_t k = 0;
    while (k < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[k]))) {
        ++k;
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(body.substr(k), &used);
      } catch (const std::exception&) {
        fail("bad number in permutation cycle \"" + body + "\"");
      }
      cycle.push_back(v);
      k += used;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return Perm::from_cycles(n, cycles);
}

FlipVector parse_flip_vector(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') return decode_flip_vector(parse_json(text));
  FlipVector g;
  if (text.empty()) return g;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto f = parse_flip_token(token);
    if (!f) fail("unknown flip token \"" + std::string(token) + "\"");
    g.entries.push_back(*f);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (g.size() > kMaxGround) fail("flip vector too long");
  return g;
}

TransversalTriple parse_triple(std::string_view text) {
  const Json j = parse_json(text);
  if (j.is_array()) return decode_triple(Json{{"roles", j}});
  return decode_triple(j);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

} // namespace twuality

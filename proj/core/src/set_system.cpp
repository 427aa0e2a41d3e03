#include "twuality/set_system.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround) {
    throw ValidationError("ground size " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxGround));
  }
}

void check_subset(ElementSet s, int n, const char* what) {
  if (!s.within(n)) {
    throw ValidationError(std::string(what) + " " + s.to_string() + " is not a subset of [" +
                          std::to_string(n) + "]");
  }
}

void check_element(int i, int n) {
  if (i < 1 || i > n) {
    throw ValidationError("element " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
  }
}

// Parity transforms on the membership table; each pass touches one coordinate.
void subset_parity(std::vector<std::uint8_t>& ind, ElementSet over) {
  for (int i : over.members()) {
    const std::uint32_t bit = 1u << (i - 1);
    for (std::uint32_t x = 0; x < ind.size(); ++x) {
      if (x & bit) ind[x] ^= ind[x ^ bit];
    }
  }
}

void superset_parity(std::vector<std::uint8_t>& ind, ElementSet over) {
  for (int i : over.members()) {
    const std::uint32_t bit = 1u << (i - 1);
    for (std::uint32_t x = 0; x < ind.size(); ++x) {
      if (!(x & bit)) ind[x] ^= ind[x | bit];
    }
  }
}

} // namespace

SetSystem::SetSystem(int n, std::vector<ElementSet> family) : n_(n), family_(std::move(family)) {
  check_ground(n);
  for (ElementSet s : family_) check_subset(s, n, "feasible set");
  std::sort(family_.begin(), family_.end());
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

SetSystem SetSystem::from_distinct(int n, std::vector<ElementSet> family) {
  const std::size_t before = family.size();
  SetSystem d(n, std::move(family));
  if (d.size() != before) throw ValidationError("duplicate feasible set");
  return d;
}

SetSystem SetSystem::from_indicator(int n, std::span<const std::uint8_t> indicator) {
  check_ground(n);
  if (indicator.size() != (std::size_t{1} << n)) {
    throw ValidationError("indicator length does not match ground size");
  }
  SetSystem d;
  d.n_ = n;
  for (std::uint32_t x = 0; x < indicator.size(); ++x) {
    if (indicator[x] & 1u) d.family_.emplace_back(x);
  }
  return d;
}

bool SetSystem::contains(ElementSet x) const {
  return std::binary_search(family_.begin(), family_.end(), x);
}

bool SetSystem::is_normal() const { return !family_.empty() && family_.front().empty(); }

std::vector<std::uint8_t> SetSystem::indicator() const {
  std::vector<std::uint8_t> ind(std::size_t{1} << n_, 0);
  for (ElementSet s : family_) ind[s.bits()] = 1;
  return ind;
}

std::string SetSystem::to_string() const {
  std::string s = "([" + std::to_string(n_) + "], {";
  for (std::size_t k = 0; k < family_.size(); ++k) {
    if (k) s += ',';
    s += family_[k].to_string();
  }
  s += "})";
  return s;
}

std::size_t hash_value(const SetSystem& d) {
  std::size_t h = std::hash<int>{}(d.n());
  for (ElementSet s : d.family()) {
    h ^= std::hash<std::uint32_t>{}(s.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

SetSystem twist(const SetSystem& d, ElementSet i) {
  check_subset(i, d.n(), "twist set");
  std::vector<ElementSet> out;
  out.reserve(d.size());
  for (ElementSet x : d.family()) out.push_back(x ^ i);
  return SetSystem(d.n(), std::move(out));
}

SetSystem loop_complement(const SetSystem& d, ElementSet i) {
  check_subset(i, d.n(), "loop complementation set");
  auto ind = d.indicator();
  subset_parity(ind, i);
  return SetSystem::from_indicator(d.n(), ind);
}

SetSystem dual_twist(const SetSystem& d, ElementSet i) {
  check_subset(i, d.n(), "dual-twist set");
  auto ind = d.indicator();
  superset_parity(ind, i);
  return SetSystem::from_indicator(d.n(), ind);
}

SetSystem apply_flip(const SetSystem& d, Flip g, ElementSet i) {
  switch (g) {
  case Flip::Identity: check_subset(i, d.n(), "flip set"); return d;
  case Flip::Star: return twist(d, i);
  case Flip::Plus: return loop_complement(d, i);
  case Flip::StarBar: return dual_twist(d, i);
  case Flip::StarPlus: return twist(loop_complement(d, i), i);
  case Flip::PlusStar: return loop_complement(twist(d, i), i);
  }
  return d;
}

SetSystem apply_flip(const SetSystem& d, Flip g, int i) {
  check_element(i, d.n());
  return apply_flip(d, g, ElementSet::singleton(i));
}

DeltaMatroidWitness is_delta_matroid(const SetSystem& d) {
  DeltaMatroidWitness w;
  if (!d.is_proper()) return w;
  const auto ind = d.indicator();
  for (ElementSet x : d.family()) {
    for (ElementSet y : d.family()) {
      const ElementSet diff = x ^ y;
      for (int u : diff.members()) {
        const ElementSet xu = x ^ ElementSet::singleton(u);
        bool found = false;
        for (int v : diff.members()) {
          const ElementSet cand = v == u ? xu : xu ^ ElementSet::singleton(v);
          if (ind[cand.bits()]) {
            found = true;
            break;
          }
        }
        if (!found) {
          w.failure = DeltaMatroidWitness::Failure::Exchange;
          w.x = x;
          w.y = y;
          w.u = u;
          return w;
        }
      }
    }
  }
  w.valid = true;
  w.failure = DeltaMatroidWitness::Failure::None;
  return w;
}

std::pair<SetSystem, SetSystem> min_max_matroids(const SetSystem& d) {
  if (!d.is_proper()) throw ValidationError("set system is not proper");
  int lo = kMaxGround + 1;
  int hi = -1;
  for (ElementSet s : d.family()) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
  }
  std::vector<ElementSet> lower;
  std::vector<ElementSet> upper;
  for (ElementSet s : d.family()) {
    if (s.size() == lo) lower.push_back(s);
    if (s.size() == hi) upper.push_back(s);
  }
  return {SetSystem(d.n(), std::move(lower)), SetSystem(d.n(), std::move(upper))};
}

std::string_view to_string(RibbonLoopClass c) {
  switch (c) {
  case RibbonLoopClass::NotRibbonLoop: return "not-ribbon-loop";
  case RibbonLoopClass::OrientableLoop: return "orientable";
  case RibbonLoopClass::NonOrientableLoop: return "non-orientable";
  }
  return "";
}

namespace {

bool is_ribbon_loop(const SetSystem& d, int i) {
  const auto lower = min_max_matroids(d).first;
  return std::none_of(lower.family().begin(), lower.family().end(),
                      [i](ElementSet s) { return s.contains(i); });
}

} // namespace

RibbonLoopClass classify_element(const SetSystem& d, int i) {
  check_element(i, d.n());
  if (!is_delta_matroid(d).valid) throw ValidationError("classification requires a delta-matroid");
  if (!is_ribbon_loop(d, i)) return RibbonLoopClass::NotRibbonLoop;
  return is_ribbon_loop(twist(d, ElementSet::singleton(i)), i) ? RibbonLoopClass::NonOrientableLoop
                                                               : RibbonLoopClass::OrientableLoop;
}

VfSafeReport vf_safe_report(const SetSystem& d, const VfSafeOptions& opts) {
  if (d.n() > opts.max_n) {
    throw BudgetExceeded("vf-safe search: n = " + std::to_string(d.n()) + " exceeds cap " +
                         std::to_string(opts.max_n));
  }
  struct Node {
    SetSystem system;
    std::size_t parent;
    Flip flip;
    int element;
  };
  std::vector<Node> nodes;
  std::unordered_map<SetSystem, std::size_t> seen;
  nodes.push_back({d, 0, Flip::Identity, 0});
  seen.emplace(d, 0);

  VfSafeReport report;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (!is_delta_matroid(nodes[head].system).valid) {
      report.counterexample = nodes[head].system;
      for (std::size_t k = head; k != 0; k = nodes[k].parent) {
        report.path.emplace_back(nodes[k].flip, nodes[k].element);
      }
      std::reverse(report.path.begin(), report.path.end());
      report.states = nodes.size();
      return report;
    }
    for (int i = 1; i <= d.n(); ++i) {
      for (Flip g : {Flip::Star, Flip::Plus}) {
        SetSystem next = apply_flip(nodes[head].system, g, i);
        if (seen.contains(next)) continue;
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), head, g, i});
      }
    }
  }
  report.vf_safe = true;
  report.states = nodes.size();
  return report;
}

bool is_vf_safe(const SetSystem& d, const VfSafeOptions& opts) {
  return vf_safe_report(d, opts).vf_safe;
}

} // namespace twuality

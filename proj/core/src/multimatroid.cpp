#include "twuality/multimatroid.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <unordered_set>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

constexpr int kMaxLiftGround = 8;

std::uint32_t role_bits(int index, int role) {
  return static_cast<std::uint32_t>(role) << (2 * (index - 1));
}

// Calls f(transversal) for all 3^n transversals in increasing code order of
// the base-3 counter, class 1 fastest.
template <typename F>
void for_each_transversal(int n, F&& f) {
  std::vector<int> roles(n, 1);
  while (true) {
    std::uint32_t code = 0;
    for (int i = 1; i <= n; ++i) code |= role_bits(i, roles[i - 1]);
    f(Subtransversal(code));
    int k = 0;
    while (k < n && roles[k] == 3) roles[k++] = 1;
    if (k == n) return;
    ++roles[k];
  }
}

void check_index(int i, int n) {
  if (i < 1 || i > n) {
    throw ValidationError("class " + std::to_string(i) + " outside [" + std::to_string(n) + "]");
  }
}

} // namespace

Subtransversal Subtransversal::of(const std::vector<CarrierElement>& elements) {
  Subtransversal s;
  for (const auto& e : elements) {
    if (e.index < 1 || e.index > kMaxGround || e.role < 1 || e.role > 3) {
      throw ValidationError("carrier element (" + std::to_string(e.index) + "," +
                            std::to_string(e.role) + ") out of range");
    }
    if (s.covers(e.index)) {
      throw ValidationError("skew class " + std::to_string(e.index) + " used twice");
    }
    s = s.with(e.index, e.role);
  }
  return s;
}

Subtransversal Subtransversal::from_roles(const std::vector<int>& roles) {
  Subtransversal s;
  for (std::size_t k = 0; k < roles.size(); ++k) {
    if (roles[k] < 0 || roles[k] > 3) throw ValidationError("role out of range");
    s = s.with(static_cast<int>(k) + 1, roles[k]);
  }
  return s;
}

Subtransversal Subtransversal::with(int index, int role) const {
  const std::uint32_t mask = 3u << (2 * (index - 1));
  return Subtransversal((code_ & ~mask) | role_bits(index, role));
}

int Subtransversal::size() const {
  int k = 0;
  for (std::uint32_t c = code_; c != 0; c >>= 2) k += (c & 3u) != 0;
  return k;
}

bool Subtransversal::is_transversal(int n) const {
  if (n < kMaxGround && (code_ >> (2 * n)) != 0) return false;
  for (int i = 1; i <= n; ++i) {
    if (!covers(i)) return false;
  }
  return true;
}

bool Subtransversal::subset_of(Subtransversal other) const {
  for (int i = 1; i <= kMaxGround; ++i) {
    const int r = role(i);
    if (r != 0 && other.role(i) != r) return false;
  }
  return true;
}

std::vector<CarrierElement> Subtransversal::elements() const {
  std::vector<CarrierElement> out;
  for (int i = 1; i <= kMaxGround; ++i) {
    if (covers(i)) out.push_back({i, role(i)});
  }
  return out;
}

bool CarrierSubset::contains(Subtransversal s) const {
  for (int i = 1; i <= kMaxGround; ++i) {
    const int r = s.role(i);
    if (r == 0) continue;
    if (i > static_cast<int>(role_masks.size())) return false;
    if (!((role_masks[i - 1] >> (r - 1)) & 1u)) return false;
  }
  return true;
}

Multimatroid::Multimatroid(int n, std::vector<Subtransversal> bases)
    : n_(n), bases_(std::move(bases)) {
  if (n < 0 || n > kMaxGround) throw ValidationError("carrier size out of range");
  for (auto b : bases_) {
    for (const auto& e : b.elements()) check_index(e.index, n);
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool Multimatroid::is_basis(Subtransversal s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

TransversalTriple TransversalTriple::reference(int n) {
  return {std::vector<SymbolPerm>(n, SymbolPerm{0, 1, 2})};
}

int TransversalTriple::role_in_slot(int index, int slot) const {
  const auto& p = slot_of_role[index - 1];
  for (int r = 0; r < 3; ++r) {
    if (p[r] == slot - 1) return r + 1;
  }
  throw ValidationError("malformed transversal triple");
}

Subtransversal TransversalTriple::transversal(int slot) const {
  Subtransversal s;
  for (int i = 1; i <= size(); ++i) s = s.with(i, role_in_slot(i, slot));
  return s;
}

bool TransversalTriple::is_valid() const {
  return std::all_of(slot_of_role.begin(), slot_of_role.end(), [](const SymbolPerm& p) {
    return std::is_permutation(p.begin(), p.end(), SymbolPerm{0, 1, 2}.begin());
  });
}

std::vector<TransversalTriple> all_triples(int n) {
  std::vector<TransversalTriple> out;
  std::vector<int> digits(n, 0);
  while (true) {
    TransversalTriple t;
    for (int d : digits) t.slot_of_role.push_back(symbol_perm(kAllFlips[d]));
    out.push_back(std::move(t));
    int k = n - 1;
    while (k >= 0 && digits[k] == 5) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

TransversalTriple triple_flip(const TransversalTriple& tau, Flip g, int i) {
  check_index(i, tau.size());
  // Letters act left to right, so the slot permutation applied is that of g^-1.
  const SymbolPerm s = symbol_perm(flip_inverse(g));
  TransversalTriple out = tau;
  auto& p = out.slot_of_role[i - 1];
  for (auto& slot : p) slot = s[slot];
  return out;
}

TransversalTriple triple_apply(const TransversalTriple& tau, const FlipVector& g) {
  if (g.size() != tau.size()) throw ValidationError("triple_apply: size mismatch");
  TransversalTriple out = tau;
  for (int i = 1; i <= g.size(); ++i) out = triple_flip(out, g.at(i), i);
  return out;
}

namespace {

// Down-closure of the bases as a membership table over all 4^n codes.
std::vector<std::uint8_t> independents(const Multimatroid& z) {
  std::vector<std::uint8_t> indep(std::size_t{1} << (2 * z.n()), 0);
  for (auto b : z.bases()) {
    const auto elems = b.elements();
    const std::uint32_t count = 1u << elems.size();
    for (std::uint32_t m = 0; m < count; ++m) {
      std::uint32_t code = 0;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if ((m >> k) & 1u) code |= role_bits(elems[k].index, elems[k].role);
      }
      indep[code] = 1;
    }
  }
  return indep;
}

void check_cap(int n, const MultimatroidOptions& opts, const char* what) {
  if (n > opts.max_n) {
    throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(opts.max_n));
  }
}

} // namespace

MultimatroidWitness is_multimatroid(const Multimatroid& z, const MultimatroidOptions& opts) {
  check_cap(z.n(), opts, "multimatroid check");
  MultimatroidWitness w;
  if (z.bases().empty()) {
    w.valid = false;
    w.axiom = MultimatroidWitness::Axiom::NoBases;
    return w;
  }
  const int n = z.n();
  const auto indep = independents(z);

  // Axiom (1): each transversal carries a matroid given by independent sets.
  std::optional<MultimatroidWitness> fail;
  for_each_transversal(n, [&](Subtransversal t) {
    if (fail) return;
    auto code_of = [&](std::uint32_t mask) {
      std::uint32_t code = 0;
      for (int i = 1; i <= n; ++i) {
        if ((mask >> (i - 1)) & 1u) code |= role_bits(i, t.role(i));
      }
      return code;
    };
    std::vector<std::uint32_t> members;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (indep[code_of(m)]) members.push_back(m);
    }
    auto report = [&](std::uint32_t small, std::uint32_t large) {
      MultimatroidWitness f;
      f.valid = false;
      f.axiom = MultimatroidWitness::Axiom::Matroid;
      f.transversal = t;
      f.smaller = Subtransversal(code_of(small));
      f.larger = Subtransversal(code_of(large));
      fail = f;
    };
    if (members.empty()) {
      report(0, 0);
      return;
    }
    for (std::uint32_t m : members) {
      for (std::uint32_t b = m; b != 0; b &= b - 1) {
        if (!indep[code_of(m & ~(b & -b))]) {
          report(m & ~(b & -b), m);
          return;
        }
      }
    }
    for (std::uint32_t small : members) {
      for (std::uint32_t large : members) {
        if (std::popcount(small) >= std::popcount(large)) continue;
        bool ok = false;
        for (std::uint32_t rest = large & ~small; rest != 0; rest &= rest - 1) {
          if (indep[code_of(small | (rest & -rest))]) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          report(small, large);
          return;
        }
      }
    }
  });
  if (fail) return *fail;

  // Axiom (2): skew pairs of classes disjoint from an independent set.
  static constexpr std::array<std::array<int, 2>, 3> kPairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (std::uint32_t code = 0; code < indep.size(); ++code) {
    if (!indep[code]) continue;
    const Subtransversal s(code);
    for (int i = 1; i <= n; ++i) {
      if (s.covers(i)) continue;
      for (const auto& p : kPairs) {
        if (indep[s.with(i, p[0]).code()] || indep[s.with(i, p[1]).code()]) continue;
        w.valid = false;
        w.axiom = MultimatroidWitness::Axiom::SkewPair;
        w.smaller = s;
        w.index = i;
        w.pair = p;
        return w;
      }
    }
  }
  return w;
}

MultimatroidWitness is_tight(const Multimatroid& z, const MultimatroidOptions& opts) {
  check_cap(z.n(), opts, "tightness check");
  for (auto b : z.bases()) {
    if (!b.is_transversal(z.n())) throw ValidationError("tightness requires transversal bases");
  }
  MultimatroidWitness w;
  for (auto b : z.bases()) {
    for (int i = 1; i <= z.n(); ++i) {
      int non_bases = 0;
      for (int r = 1; r <= 3; ++r) non_bases += !z.is_basis(b.with(i, r));
      if (non_bases != 1) {
        w.valid = false;
        w.axiom = MultimatroidWitness::Axiom::NotTight;
        w.transversal = b;
        w.index = i;
        w.count = non_bases;
        return w;
      }
    }
  }
  return w;
}

Restriction restrict(const Multimatroid& z, const CarrierSubset& x) {
  if (static_cast<int>(x.role_masks.size()) != z.n()) {
    throw ValidationError("restriction subset does not match the carrier");
  }
  for (auto m : x.role_masks) {
    if (m > 7) throw ValidationError("restriction subset has an invalid role mask");
  }
  const auto indep = independents(z);
  Restriction out{x, {}};
  for (std::uint32_t code = 0; code < indep.size(); ++code) {
    if (!indep[code]) continue;
    const Subtransversal s(code);
    if (!x.contains(s)) continue;
    bool maximal = true;
    for (int i = 1; i <= z.n() && maximal; ++i) {
      if (s.covers(i)) continue;
      for (int r = 1; r <= 3; ++r) {
        if (((x.role_masks[i - 1] >> (r - 1)) & 1u) && indep[s.with(i, r).code()]) {
          maximal = false;
          break;
        }
      }
    }
    if (maximal) out.bases.push_back(s);
  }
  return out;
}

Multimatroid lift_unchecked(const SetSystem& d, const TransversalTriple& tau,
                            const Projection& sigma) {
  const int n = d.n();
  if (n > kMaxLiftGround) {
    throw BudgetExceeded("lift: n = " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxLiftGround));
  }
  if (tau.size() != n || sigma.rho.size() != n || !tau.is_valid()) {
    throw ValidationError("lift: triple or projection does not match the ground set");
  }
  // D ~ S for every S, computed on demand.
  std::vector<std::optional<std::vector<std::uint8_t>>> memo(std::size_t{1} << n);
  std::vector<Subtransversal> bases;
  for_each_transversal(n, [&](Subtransversal b) {
    std::uint32_t f2 = 0;
    std::uint32_t s3 = 0;
    for (int i = 1; i <= n; ++i) {
      const int slot = tau.slot(i, b.role(i));
      const std::uint32_t bit = 1u << (sigma(i) - 1);
      if (slot == 2) f2 |= bit;
      if (slot == 3) s3 |= bit;
    }
    auto& cached = memo[s3];
    if (!cached) cached = dual_twist(d, ElementSet(s3)).indicator();
    if ((*cached)[f2]) bases.push_back(b);
  });
  return Multimatroid(n, std::move(bases));
}

Multimatroid lift(const SetSystem& d, const TransversalTriple& tau, const Projection& sigma,
                  const VfSafeOptions& opts) {
  const auto report = vf_safe_report(d, opts);
  if (!report.vf_safe) {
    throw ValidationError("lift: " + d.to_string() + " is not vf-safe; " +
                          report.counterexample.to_string() + " is not a delta-matroid");
  }
  return lift_unchecked(d, tau, sigma);
}

SetSystem extract(const Multimatroid& z, const TransversalTriple& tau, const Projection& sigma) {
  if (tau.size() != z.n() || sigma.rho.size() != z.n() || !tau.is_valid()) {
    throw ValidationError("extract: triple or projection does not match the carrier");
  }
  std::vector<ElementSet> family;
  for (auto b : z.bases()) {
    if (!b.is_transversal(z.n())) throw ValidationError("extract requires transversal bases");
    std::uint32_t f = 0;
    bool inside = true;
    for (int i = 1; i <= z.n(); ++i) {
      const int slot = tau.slot(i, b.role(i));
      if (slot == 3) {
        inside = false;
        break;
      }
      if (slot == 2) f |= 1u << (sigma(i) - 1);
    }
    if (inside) family.emplace_back(f);
  }
  return SetSystem(z.n(), std::move(family));
}

std::vector<SetSystem> orbit_via_lift(const SetSystem& d, const TransversalTriple& tau,
                                      const Projection& sigma, OrbitMode mode,
                                      const LiftOrbitOptions& opts) {
  const int cap = mode == OrbitMode::Full ? opts.max_n_full : opts.max_n_iota;
  if (d.n() > cap) {
    throw BudgetExceeded("orbit via lift: n = " + std::to_string(d.n()) + " exceeds cap " +
                         std::to_string(cap));
  }
  const Multimatroid z = lift(d, tau, sigma, opts.vf_safe);
  const std::vector<Perm> projections =
      mode == OrbitMode::Full ? all_perms(d.n()) : std::vector<Perm>{sigma.rho};
  std::unordered_set<SetSystem> found;
  for (const auto& t : all_triples(d.n())) {
    for (const auto& p : projections) found.insert(extract(z, t, Projection{p}));
  }
  std::vector<SetSystem> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace twuality

#include "twuality/group.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

void check_same_size(int a, int b, const char* what) {
  if (a != b) {
    throw ValidationError(std::string(what) + ": size mismatch (" + std::to_string(a) + " vs " +
                          std::to_string(b) + ")");
  }
}

} // namespace

Perm::Perm(int n) {
  if (n < 0 || n > kMaxGround) throw ValidationError("permutation size out of range");
  images_.resize(n);
  for (int k = 0; k < n; ++k) images_[k] = static_cast<std::uint8_t>(k);
}

Perm Perm::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Perm p(n);
  std::vector<bool> hit(n, false);
  for (int k = 0; k < n; ++k) {
    const int v = images[k];
    if (v < 1 || v > n || hit[v - 1]) {
      throw ValidationError("not a permutation of 1.." + std::to_string(n));
    }
    hit[v - 1] = true;
    p.images_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Perm p(n);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (v < 1 || v > n || used[v - 1]) throw ValidationError("invalid cycle notation");
      used[v - 1] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      p.images_[cyc[k] - 1] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()] - 1);
    }
  }
  return p;
}

Perm Perm::transposition(int n, int i, int j) { return from_cycles(n, {{i, j}}); }

ElementSet Perm::operator()(ElementSet s) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = s.bits(); b != 0; b &= b - 1) {
    out |= 1u << images_[std::countr_zero(b)];
  }
  return ElementSet(out);
}

Perm Perm::inverse() const {
  Perm q(size());
  for (int k = 0; k < size(); ++k) q.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return q;
}

bool Perm::is_identity() const {
  for (int k = 0; k < size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = images_[k] + 1;
  return out;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int k = start; !seen[k]; k = images_[k]) {
      seen[k] = true;
      cyc.push_back(k + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  for (const auto& cyc : cycles()) {
    s += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(cyc[k]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

bool Perm::next() { return std::next_permutation(images_.begin(), images_.end()); }

Perm operator*(const Perm& p, const Perm& q) {
  check_same_size(p.size(), q.size(), "permutation product");
  std::vector<int> images(p.size());
  for (int i = 1; i <= p.size(); ++i) images[i - 1] = p(q(i));
  return Perm::from_one_line(images);
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p(n);
  do {
    out.push_back(p);
  } while (p.next());
  return out;
}

bool FlipVector::is_identity() const {
  return std::all_of(entries.begin(), entries.end(), [](Flip g) { return g == Flip::Identity; });
}

std::optional<Flip> FlipVector::uniform_entry() const {
  if (entries.empty() || entries.front() == Flip::Identity) return std::nullopt;
  const Flip g = entries.front();
  if (!std::all_of(entries.begin(), entries.end(), [g](Flip x) { return x == g; })) {
    return std::nullopt;
  }
  return g;
}

FlipVector compose(const FlipVector& g, const FlipVector& h) {
  check_same_size(g.size(), h.size(), "flip vector product");
  FlipVector out = g;
  for (int k = 0; k < g.size(); ++k) out.entries[k] = flip_mul(g.entries[k], h.entries[k]);
  return out;
}

FlipVector inverse(const FlipVector& g) {
  FlipVector out = g;
  for (Flip& x : out.entries) x = flip_inverse(x);
  return out;
}

FlipVector vec_reindex(const FlipVector& g, const Perm& p) {
  check_same_size(g.size(), p.size(), "reindex");
  const Perm inv = p.inverse();
  FlipVector out = g;
  for (int i = 1; i <= g.size(); ++i) out.at(i) = g.at(inv(i));
  return out;
}

SetSystem relabel(const SetSystem& d, const Perm& p) {
  check_same_size(d.n(), p.size(), "relabel");
  std::vector<ElementSet> fam;
  fam.reserve(d.size());
  for (ElementSet s : d.family()) fam.push_back(p(s));
  return SetSystem(d.n(), std::move(fam));
}

SetSystem apply_vector(const SetSystem& d, const FlipVector& g) {
  check_same_size(d.n(), g.size(), "flip vector action");
  // Group equal entries; flips at distinct elements commute.
  SetSystem out = d;
  for (Flip f : kAllFlips) {
    if (f == Flip::Identity) continue;
    std::uint32_t bits = 0;
    for (int i = 1; i <= g.size(); ++i) {
      if (g.at(i) == f) bits |= 1u << (i - 1);
    }
    if (bits) out = apply_flip(out, f, ElementSet(bits));
  }
  return out;
}

TwualityElement sd_mul(const TwualityElement& a, const TwualityElement& b) {
  check_same_size(a.size(), b.size(), "semidirect product");
  return {compose(a.gvec, vec_reindex(b.gvec, a.perm)), a.perm * b.perm};
}

TwualityElement sd_inv(const TwualityElement& a) {
  const Perm inv = a.perm.inverse();
  return {vec_reindex(inverse(a.gvec), inv), inv};
}

SetSystem act(const TwualityElement& a, const SetSystem& d) {
  check_same_size(a.size(), d.n(), "action");
  check_same_size(a.perm.size(), d.n(), "action");
  return apply_vector(relabel(d, a.perm), a.gvec);
}

} // namespace twuality

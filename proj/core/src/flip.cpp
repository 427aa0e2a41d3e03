#include "twuality/flip.hpp"

#include <array>

#include "twuality/errors.hpp"

namespace twuality {

namespace {

// Index order matches the Flip enumerators.
constexpr std::array<SymbolPerm, 6> kPerms = {{
    {0, 1, 2}, // 1
    {1, 0, 2}, // *   = (0 1)
    {0, 2, 1}, // +   = (1 2)
    {1, 2, 0}, // *+  = * o +
    {2, 0, 1}, // +*  = + o *
    {2, 1, 0}, // ~   = (0 2)
}};

constexpr std::array<std::string_view, 6> kTokens = {"1", "*", "+", "*+", "+*", "~"};

constexpr std::size_t idx(Flip g) { return static_cast<std::size_t>(g); }

} // namespace

SymbolPerm symbol_perm(Flip g) { return kPerms[idx(g)]; }

Flip flip_from_symbol_perm(const SymbolPerm& p) {
  for (std::size_t k = 0; k < kPerms.size(); ++k) {
    if (kPerms[k] == p) return static_cast<Flip>(k);
  }
  throw ValidationError("not a permutation of three symbols");
}

Flip flip_mul(Flip g, Flip h) {
  const auto& pg = kPerms[idx(g)];
  const auto& ph = kPerms[idx(h)];
  return flip_from_symbol_perm({pg[ph[0]], pg[ph[1]], pg[ph[2]]});
}

Flip flip_inverse(Flip g) {
  const auto& p = kPerms[idx(g)];
  SymbolPerm inv{};
  for (std::uint8_t s = 0; s < 3; ++s) inv[p[s]] = s;
  return flip_from_symbol_perm(inv);
}

int flip_order(Flip g) {
  int k = 1;
  for (Flip x = g; x != Flip::Identity; x = flip_mul(g, x)) ++k;
  return k;
}

Flip flip_pow(Flip g, int k) {
  k %= 6;
  if (k < 0) k += 6;
  Flip out = Flip::Identity;
  for (int i = 0; i < k; ++i) out = flip_mul(g, out);
  return out;
}

Flip reduce_word(std::span<const Flip> word) {
  Flip out = Flip::Identity;
  for (Flip letter : word) out = flip_mul(out, letter);
  return out;
}

Flip reduce_word(std::string_view word) {
  Flip out = Flip::Identity;
  for (char c : word) {
    switch (c) {
    case '*': out = flip_mul(out, Flip::Star); break;
    case '+': out = flip_mul(out, Flip::Plus); break;
    default: throw ValidationError(std::string("invalid letter '") + c + "' in flip word");
    }
  }
  return out;
}

std::vector<Flip> reduced_word(Flip g) {
  switch (g) {
  case Flip::Identity: return {};
  case Flip::Star: return {Flip::Star};
  case Flip::Plus: return {Flip::Plus};
  case Flip::StarPlus: return {Flip::Star, Flip::Plus};
  case Flip::PlusStar: return {Flip::Plus, Flip::Star};
  case Flip::StarBar: return {Flip::Plus, Flip::Star, Flip::Plus};
  }
  return {};
}

std::string_view to_token(Flip g) { return kTokens[idx(g)]; }

std::optional<Flip> parse_flip_token(std::string_view token) {
  for (std::size_t k = 0; k < kTokens.size(); ++k) {
    if (kTokens[k] == token) return static_cast<Flip>(k);
  }
  return std::nullopt;
}

} // namespace twuality

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twuality {

/// An invertible vertex flip: one of the six elements of the group generated
/// by twist (*) and loop complementation (+) at a single element.
///
/// Internally each flip is a permutation of three symbols with * acting as
/// the transposition (0 1) and + as (1 2). Products follow the word
/// convention: in g*h the factor h acts on a set system first.
enum class Flip : std::uint8_t {
  Identity = 0, ///< "1"
  Star,         ///< "*"   twist
  Plus,         ///< "+"   loop complementation
  StarPlus,     ///< "*+"  apply + then *
  PlusStar,     ///< "+*"  apply * then +
  StarBar,      ///< "~"   dual-twist, equal to +*+ and *+*
};

/// All six flips in the fixed enumeration order used for tie-breaking.
inline constexpr std::array<Flip, 6> kAllFlips = {
    Flip::Identity, Flip::Star, Flip::Plus, Flip::StarPlus, Flip::PlusStar, Flip::StarBar};

using SymbolPerm = std::array<std::uint8_t, 3>;

/// Image of symbols 0,1,2 under the flip's permutation.
SymbolPerm symbol_perm(Flip g);
/// The flip whose permutation is p. p must be a permutation of {0,1,2}.
Flip flip_from_symbol_perm(const SymbolPerm& p);

/// Group product g*h (h first).
Flip flip_mul(Flip g, Flip h);
Flip flip_inverse(Flip g);
/// Element order: 1, 2 or 3.
int flip_order(Flip g);
Flip flip_pow(Flip g, int k);

/// Product of a word of letters, leftmost factor outermost.
Flip reduce_word(std::span<const Flip> word);
/// Same, for an ASCII word over '*' and '+'. Throws ValidationError on other characters.
Flip reduce_word(std::string_view word);

/// Shortest word over {Star, Plus} equal to g, in product order (the last
/// letter acts first). The identity yields an empty word.
std::vector<Flip> reduced_word(Flip g);

/// Text tokens: "1", "*", "+", "*+", "+*", "~".
std::string_view to_token(Flip g);
std::optional<Flip> parse_flip_token(std::string_view token);

} // namespace twuality

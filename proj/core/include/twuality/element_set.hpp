#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace twuality {

/// Largest supported ground set.
inline constexpr int kMaxGround = 16;

/// A subset of [n] stored as a bit mask; element i (1-based) is bit i-1.
class ElementSet {
public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  /// Builds a set from 1-based members. Throws ValidationError on members
  /// outside 1..kMaxGround or on duplicates.
  static ElementSet of(std::initializer_list<int> members);
  static ElementSet of(std::span<const int> members);

  /// The full set [n].
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static constexpr ElementSet singleton(int i) { return ElementSet(1u << (i - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  int size() const;
  /// Largest member, or 0 for the empty set.
  int max_element() const;
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool within(int n) const { return subset_of(full(n)); }

  std::vector<int> members() const;

  constexpr ElementSet operator^(ElementSet o) const { return ElementSet(bits_ ^ o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const ElementSet&) const = default;
  // Colex order: the set holding the largest differing element is larger.
  // This coincides with comparing the masks as integers.
  constexpr auto operator<=>(const ElementSet& o) const { return bits_ <=> o.bits_; }

  /// "{1,3}" style rendering; "{}" for the empty set.
  std::string to_string() const;

private:
  std::uint32_t bits_ = 0;
};

} // namespace twuality

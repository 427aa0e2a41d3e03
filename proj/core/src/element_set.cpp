#include "twuality/element_set.hpp"

#include <bit>
#include <string>

#include "twuality/errors.hpp"

namespace twuality {

ElementSet ElementSet::of(std::initializer_list<int> members) {
  return of(std::span<const int>(members.begin(), members.size()));
}

ElementSet ElementSet::of(std::span<const int> members) {
  std::uint32_t bits = 0;
  for (int m : members) {
    if (m < 1 || m > kMaxGround) {
      throw ValidationError("element " + std::to_string(m) + " out of range");
    }
    const std::uint32_t bit = 1u << (m - 1);
    if (bits & bit) {
      throw ValidationError("duplicate element " + std::to_string(m));
    }
    bits |= bit;
  }
  return ElementSet(bits);
}

int ElementSet::size() const { return std::popcount(bits_); }

int ElementSet::max_element() const { return 32 - std::countl_zero(bits_); }

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) s += ',';
    s += std::to_string(m);
    first = false;
  }
  s += '}';
  return s;
}

} // namespace twuality

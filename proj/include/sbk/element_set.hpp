#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace sbk {

using Elem = int;

/// Largest supported order; one machine word per subset.
inline constexpr int kMaxOrder = 64;

/// Subset of {0, ..., n-1} packed into a 64-bit mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Elem x) { return ElementSet(std::uint64_t{1} << x); }
  static ElementSet of(const std::vector<Elem>& xs) {
    ElementSet s;
    for (Elem x : xs) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Elem x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Elem x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Elem x) { bits_ &= ~(std::uint64_t{1} << x); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Elem>(std::countr_zero(b)));
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Elem x) { out.push_back(x); });
    return out;
  }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Ordering used for every subset listing: by size, then by mask value.
inline bool size_then_bits_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace sbk

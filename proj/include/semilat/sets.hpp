#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace semilat {

// Index of an element inside one model. Models are small by design; every
// subset fits in a single machine word.
using ElementId = std::uint32_t;

inline constexpr std::size_t kWordCapacity = 64;
inline constexpr std::size_t kDefaultElementCap = 24;

// Subset of a model's elements, backed by a 64-bit word.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }

  static constexpr ElementSet single(ElementId e) { return from_bits(std::uint64_t{1} << e); }

  static constexpr ElementSet universe(std::size_t n) {
    return from_bits(n >= kWordCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr ElementSet of(std::initializer_list<ElementId> ids) {
    ElementSet s;
    for (ElementId e : ids) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(ElementId e) const { return (bits_ >> e) & 1; }

  constexpr void insert(ElementId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(ElementId e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr ElementSet with(ElementId e) const { return from_bits(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(ElementId e) const { return from_bits(bits_ & ~(std::uint64_t{1} << e)); }

  constexpr ElementSet operator|(ElementSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

  // Lowest element; only valid on a nonempty set.
  constexpr ElementId first() const { return static_cast<ElementId>(std::countr_zero(bits_)); }

  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ElementId operator*() const { return static_cast<ElementId>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace semilat

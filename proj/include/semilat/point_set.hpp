#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace semilat {

/// Largest ground set supported by the bit-level point-set representation.
inline constexpr std::size_t kMaxPoints = 16;

using point_t = std::uint8_t;

/// A subset of the ground set [0, n), stored as a bit mask.
class PointSet {
 public:
  using mask_type = std::uint32_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(mask_type bits) : bits_(bits) {}

  static constexpr PointSet singleton(std::size_t x) {
    return PointSet(mask_type{1} << x);
  }
  static constexpr PointSet full(std::size_t n) {
    return PointSet((mask_type{1} << n) - 1);
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(PointSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr void insert(std::size_t x) { bits_ |= mask_type{1} << x; }
  constexpr void erase(std::size_t x) { bits_ &= ~(mask_type{1} << x); }

  constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
  constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
  constexpr PointSet without(PointSet o) const { return PointSet(bits_ & ~o.bits_); }

  constexpr bool operator==(const PointSet&) const = default;
  constexpr auto operator<=>(const PointSet&) const = default;

  /// Iterates the members in increasing order.
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(mask_type rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    mask_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr std::size_t min() const {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

 private:
  mask_type bits_ = 0;
};

}  // namespace semilat

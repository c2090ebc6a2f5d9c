#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilat/point_set.hpp"

namespace semilat {

/// A full transformation of the ground set [0, n).
///
/// Maps are written on the right and composed left to right, so
/// `compose(a, b)` applies `a` first. Entries past `n` are kept at zero so
/// that defaulted comparison is equality and lexicographic order of the
/// image tables.
class Transformation {
 public:
  Transformation() = default;

  /// Validates an image table; throws std::invalid_argument on a bad entry.
  template <typename Int>
  static Transformation make(std::size_t n, std::span<const Int> images) {
    check_size(n);
    if (images.size() != n) {
      throw std::invalid_argument("transformation on " + std::to_string(n) +
                                  " points needs " + std::to_string(n) +
                                  " images, got " +
                                  std::to_string(images.size()));
    }
    Transformation r;
    r.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto y = images[x];
      if (y < 0 || static_cast<std::size_t>(y) >= n) {
        throw std::invalid_argument("image " + std::to_string(y) + " of point " +
                                    std::to_string(x) + " is outside [0, " +
                                    std::to_string(n) + ")");
      }
      r.images_[x] = static_cast<point_t>(y);
    }
    return r;
  }

  static Transformation make(std::size_t n, std::initializer_list<int> images) {
    return make(n, std::span<const int>(images.begin(), images.size()));
  }

  /// Shorthand taking n from the table length.
  static Transformation of(std::initializer_list<int> images) {
    return make(images.size(), images);
  }

  static Transformation identity(std::size_t n) {
    check_size(n);
    Transformation r;
    r.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t x = 0; x < std::min(n, kMaxPoints); ++x) r.images_[x] = static_cast<point_t>(x);
    return r;
  }

  static Transformation constant(std::size_t n, std::size_t value) {
    check_size(n);
    if (value >= n) throw std::invalid_argument("constant value out of range");
    Transformation r;
    r.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t x = 0; x < r.n_; ++x) r.images_[x] = static_cast<point_t>(value);
    return r;
  }

  std::size_t n() const { return n_; }
  std::size_t operator[](std::size_t x) const { return images_[x]; }
  std::span<const point_t> images() const { return {images_.data(), n_}; }

  PointSet image() const {
    PointSet s;
    for (std::size_t x = 0; x < n_; ++x) s.insert(images_[x]);
    return s;
  }

  /// The image of a point set.
  PointSet apply(PointSet points) const {
    PointSet s;
    for (auto x : points) s.insert(images_[x]);
    return s;
  }

  /// All points mapped to `y`.
  PointSet preimage(std::size_t y) const {
    PointSet s;
    for (std::size_t x = 0; x < n_; ++x)
      if (images_[x] == y) s.insert(x);
    return s;
  }

  bool is_constant() const {
    return std::all_of(images_.begin(), images_.begin() + n_,
                       [&](point_t y) { return y == images_[0]; });
  }

  bool operator==(const Transformation&) const = default;
  auto operator<=>(const Transformation&) const = default;

  static void check_size(std::size_t n) {
    if (n == 0 || n > kMaxPoints) {
      throw std::invalid_argument("ground set size " + std::to_string(n) +
                                  " outside [1, " + std::to_string(kMaxPoints) +
                                  "]");
    }
  }

 private:
  friend Transformation compose_unchecked(const Transformation&,
                                          const Transformation&);
  friend class TransformationBuilder;

  std::uint8_t n_ = 0;
  std::array<point_t, kMaxPoints> images_{};
};

/// Mutable scratch table for algorithms that build a map point by point.
/// The caller guarantees every entry ends up in range.
class TransformationBuilder {
 public:
  explicit TransformationBuilder(std::size_t n) {
    Transformation::check_size(n);
    t_.n_ = static_cast<std::uint8_t>(n);
  }
  explicit TransformationBuilder(const Transformation& from) : t_(from) {}

  void set(std::size_t x, std::size_t y) { t_.images_[x] = static_cast<point_t>(y); }
  std::size_t get(std::size_t x) const { return t_.images_[x]; }
  std::size_t n() const { return t_.n_; }
  Transformation build() const { return t_; }

 private:
  Transformation t_;
};

inline Transformation compose_unchecked(const Transformation& a,
                                        const Transformation& b) {
  Transformation r;
  r.n_ = a.n_;
  for (std::size_t x = 0; x < a.n_; ++x) r.images_[x] = b.images_[a.images_[x]];
  return r;
}

inline void check_same_n(const Transformation& a, const Transformation& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("ground set mismatch: " + std::to_string(a.n()) +
                                " vs " + std::to_string(b.n()));
  }
}

/// x(ab) = (xa)b.
inline Transformation compose(const Transformation& a, const Transformation& b) {
  check_same_n(a, b);
  return compose_unchecked(a, b);
}

inline Transformation operator*(const Transformation& a, const Transformation& b) {
  return compose(a, b);
}

inline bool is_idempotent(const Transformation& a) {
  for (std::size_t x = 0; x < a.n(); ++x)
    if (a[a[x]] != a[x]) return false;
  return true;
}

/// Naive test: compares both products.
inline bool commutes(const Transformation& a, const Transformation& b) {
  check_same_n(a, b);
  for (std::size_t x = 0; x < a.n(); ++x)
    if (b[a[x]] != a[b[x]]) return false;
  return true;
}

struct KernelImage {
  /// Preimage classes, ordered by least member.
  std::vector<PointSet> kernel;
  PointSet image;
};

inline KernelImage kernel_image(const Transformation& a) {
  KernelImage r;
  r.image = a.image();
  for (auto y : r.image) r.kernel.push_back(a.preimage(y));
  std::sort(r.kernel.begin(), r.kernel.end(),
            [](PointSet l, PointSet r) { return l.min() < r.min(); });
  return r;
}

/// An idempotent written as blocks (A_i, x_i): every point of A_i maps to x_i.
class IdempotentDecomposition {
 public:
  struct Block {
    PointSet members;
    point_t rep;
    bool operator==(const Block&) const = default;
  };

  IdempotentDecomposition() = default;

  /// Checks the block invariants; throws std::invalid_argument.
  IdempotentDecomposition(std::size_t n, std::vector<Block> blocks)
      : n_(n), blocks_(std::move(blocks)) {
    Transformation::check_size(n);
    PointSet seen;
    PointSet reps;
    for (const auto& b : blocks_) {
      if (!b.members.contains(b.rep))
        throw std::invalid_argument("block representative outside its block");
      if (!(b.members & seen).empty())
        throw std::invalid_argument("blocks overlap");
      if (reps.contains(b.rep))
        throw std::invalid_argument("duplicate block representative");
      seen = seen | b.members;
      reps.insert(b.rep);
    }
    if (seen != PointSet::full(n))
      throw std::invalid_argument("blocks do not cover the ground set");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& l, const Block& r) { return l.rep < r.rep; });
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (auto y : blocks_[i].members) block_of_[y] = static_cast<point_t>(i);
  }

  std::size_t n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t x) const { return block_of_[x]; }

  Transformation reconstitute() const {
    TransformationBuilder b(n_);
    for (const auto& blk : blocks_)
      for (auto y : blk.members) b.set(y, blk.rep);
    return b.build();
  }

  bool operator==(const IdempotentDecomposition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
  std::array<point_t, kMaxPoints> block_of_{};
};

/// Blocks sorted by representative; throws for a non-idempotent input.
inline IdempotentDecomposition orbit_decomposition(const Transformation& e) {
  if (!is_idempotent(e))
    throw std::invalid_argument("orbit_decomposition needs an idempotent");
  std::vector<IdempotentDecomposition::Block> blocks;
  for (auto x : e.image())
    blocks.push_back({e.preimage(x), static_cast<point_t>(x)});
  return IdempotentDecomposition(e.n(), std::move(blocks));
}

/// Block criterion: a commutes with e iff every block (A_i, x_i) is sent
/// into a single block A_j with x_i a = x_j.
inline bool commutes_with_idempotent(const IdempotentDecomposition& e,
                                     const Transformation& a) {
  if (e.n() != a.n())
    throw std::invalid_argument("ground set mismatch in commutes_with_idempotent");
  const auto& blocks = e.blocks();
  for (const auto& blk : blocks) {
    const auto& target = blocks[e.block_of(a[blk.rep])];
    if (target.rep != a[blk.rep]) return false;
    if (!a.apply(blk.members).subset_of(target.members)) return false;
  }
  return true;
}

/// Every idempotent of T(n), lexicographic on image tables.
///
/// Built from image sets: points of the image are fixed and every other
/// point is sent to some image point.
inline std::vector<Transformation> enumerate_idempotents(std::size_t n) {
  Transformation::check_size(n);
  std::vector<Transformation> out;
  const auto full = PointSet::full(n).bits();
  for (PointSet::mask_type mask = 1; mask <= full; ++mask) {
    const auto image = PointSet(mask).to_vector();
    const auto moved = PointSet(full & ~mask).to_vector();
    std::vector<std::size_t> choice(moved.size(), 0);
    while (true) {
      TransformationBuilder b(n);
      for (auto x : image) b.set(x, x);
      for (std::size_t i = 0; i < moved.size(); ++i) b.set(moved[i], image[choice[i]]);
      out.push_back(b.build());
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == image.size()) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semilat

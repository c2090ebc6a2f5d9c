#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semilat/point_set.hpp"
#include "semilat/transformation.hpp"

namespace semilat {

/// Why a candidate set is not a semilattice. `first`/`second` carry the
/// offending element(s); for a closure failure `second` is the partner and
/// `product` the missing product.
struct Violation {
  enum class Kind { Empty, Idempotence, Commutativity, Closure };

  Kind kind;
  std::optional<Transformation> first;
  std::optional<Transformation> second;
  std::optional<Transformation> product;

  std::string axiom() const {
    switch (kind) {
      case Kind::Empty: return "nonempty";
      case Kind::Idempotence: return "idempotence";
      case Kind::Commutativity: return "commutativity";
      case Kind::Closure: return "closure";
    }
    return "?";
  }
};

/// A nonempty, product-closed set of pairwise commuting idempotents of T(n),
/// held in canonical (lexicographic) order. Only obtainable through
/// verify_semilattice.
class Semilattice {
 public:
  std::size_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const Transformation& a) const {
    return std::binary_search(elements_.begin(), elements_.end(), a);
  }

  std::optional<std::size_t> index_of(const Transformation& a) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), a);
    if (it == elements_.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  /// Product of all elements; the least element of the natural order.
  Transformation bottom() const {
    auto acc = elements_.front();
    for (const auto& e : elements_) acc = compose_unchecked(acc, e);
    return acc;
  }

  bool operator==(const Semilattice&) const = default;
  auto operator<=>(const Semilattice&) const = default;

 private:
  friend std::variant<Semilattice, Violation> verify_semilattice(
      std::size_t, std::vector<Transformation>);

  Semilattice(std::size_t n, std::vector<Transformation> elements)
      : n_(n), elements_(std::move(elements)) {}

  std::size_t n_ = 0;
  std::vector<Transformation> elements_;
};

inline std::variant<Semilattice, Violation> verify_semilattice(
    std::size_t n, std::vector<Transformation> candidate) {
  using K = Violation::Kind;
  Transformation::check_size(n);
  if (candidate.empty()) return Violation{K::Empty, {}, {}, {}};
  for (const auto& a : candidate) {
    if (a.n() != n)
      throw std::invalid_argument("candidate element on " + std::to_string(a.n()) +
                                  " points in a set over " + std::to_string(n));
  }
  std::sort(candidate.begin(), candidate.end());
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());

  for (const auto& a : candidate)
    if (!is_idempotent(a)) return Violation{K::Idempotence, a, {}, {}};
  for (std::size_t i = 0; i < candidate.size(); ++i)
    for (std::size_t j = i + 1; j < candidate.size(); ++j)
      if (!commutes(candidate[i], candidate[j]))
        return Violation{K::Commutativity, candidate[i], candidate[j], {}};
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    for (std::size_t j = i + 1; j < candidate.size(); ++j) {
      auto p = compose_unchecked(candidate[i], candidate[j]);
      if (!std::binary_search(candidate.begin(), candidate.end(), p))
        return Violation{K::Closure, candidate[i], candidate[j], p};
    }
  }
  return Semilattice(n, std::move(candidate));
}

/// verify_semilattice for inputs known to be valid; throws std::logic_error
/// with the violated axiom otherwise.
inline Semilattice make_semilattice(std::size_t n, std::vector<Transformation> elements) {
  auto r = verify_semilattice(n, std::move(elements));
  if (auto* v = std::get_if<Violation>(&r))
    throw std::logic_error("not a semilattice: " + v->axiom() + " fails");
  return std::get<Semilattice>(std::move(r));
}

/// A relation on an indexed carrier; leq(i, j) means carrier[i] <= carrier[j].
template <typename T>
class PosetRelation {
 public:
  PosetRelation() = default;
  explicit PosetRelation(std::vector<T> carrier)
      : carrier_(std::move(carrier)), leq_(carrier_.size() * carrier_.size(), 0) {}

  std::size_t size() const { return carrier_.size(); }
  const std::vector<T>& carrier() const { return carrier_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { leq_[i * size() + j] = v ? 1 : 0; }

  bool is_partial_order() const {
    const auto k = size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!leq(i, i)) return false;
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && leq(i, j) && leq(j, i)) return false;
        if (!leq(i, j)) continue;
        for (std::size_t l = 0; l < k; ++l)
          if (leq(j, l) && !leq(i, l)) return false;
      }
    }
    return true;
  }

  /// Indices with no other element strictly above them.
  std::vector<std::size_t> maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool top = true;
      for (std::size_t j = 0; j < size() && top; ++j)
        if (j != i && leq(i, j)) top = false;
      if (top) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> minimal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      bool low = true;
      for (std::size_t j = 0; j < size() && low; ++j)
        if (j != i && leq(j, i)) low = false;
      if (low) out.push_back(i);
    }
    return out;
  }

 private:
  std::vector<T> carrier_;
  std::vector<std::uint8_t> leq_;
};

/// a <= b iff a = ab.
inline PosetRelation<Transformation> natural_order(const Semilattice& s) {
  PosetRelation<Transformation> rel(s.elements());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      rel.set(i, j, compose_unchecked(s[i], s[j]) == s[i]);
  return rel;
}

/// The greatest lower bound, realised by composition.
inline Transformation meet(const Semilattice& s, const Transformation& a,
                           const Transformation& b) {
  if (!s.contains(a) || !s.contains(b))
    throw std::invalid_argument("meet of elements outside the semilattice");
  return compose_unchecked(a, b);
}

/// Points fixed by e_A are A; everything else goes to t.
inline Transformation epsilon(std::size_t n, std::size_t t, PointSet a) {
  TransformationBuilder b(n);
  for (std::size_t x = 0; x < n; ++x) b.set(x, a.contains(x) ? x : t);
  return b.build();
}

/// E_t: all e_A with A a subset of [0, n) - {t}.
inline Semilattice make_Et(std::size_t n, std::size_t t) {
  Transformation::check_size(n);
  if (t >= n) throw std::invalid_argument("t out of range");
  const auto others = PointSet::full(n).without(PointSet::singleton(t));
  std::vector<Transformation> elems;
  elems.reserve(std::size_t{1} << (n - 1));
  // Sub-mask walk over `others`.
  for (auto sub = others.bits();; sub = (sub - 1) & others.bits()) {
    elems.push_back(epsilon(n, t, PointSet(sub)));
    if (sub == 0) break;
  }
  return make_semilattice(n, std::move(elems));
}

/// Membership in the inverse semigroup of maps fixing t that are injective
/// away from t.
inline bool is_in_It(std::size_t t, const Transformation& a) {
  if (t >= a.n()) throw std::invalid_argument("t out of range");
  if (a[t] != t) return false;
  for (auto x : a.image()) {
    if (x != t && a.preimage(x).size() != 1) return false;
  }
  return true;
}

struct MaximalityVerdict {
  bool maximal = false;
  std::optional<Transformation> witness;
};

/// S is non-maximal iff some idempotent outside S commutes with all of S.
inline MaximalityVerdict is_maximal(const Semilattice& s,
                                    const std::vector<Transformation>& all_idempotents) {
  std::vector<IdempotentDecomposition> decs;
  decs.reserve(s.size());
  for (const auto& e : s) decs.push_back(orbit_decomposition(e));
  for (const auto& f : all_idempotents) {
    if (f.n() != s.n()) throw std::invalid_argument("idempotent list for another n");
    if (s.contains(f)) continue;
    bool all = std::all_of(decs.begin(), decs.end(), [&](const auto& d) {
      return commutes_with_idempotent(d, f);
    });
    if (all) return {false, f};
  }
  return {true, std::nullopt};
}

struct BooleanVerdict {
  bool is_boolean = false;
  /// Elements covering the bottom, in canonical order.
  std::vector<Transformation> atoms;
  /// For each element of S (canonical order), the atoms below it as a bit
  /// mask over `atoms`. Filled only when is_boolean.
  std::vector<std::uint64_t> atom_sets;
};

/// Recognises S as isomorphic to the power set of its atoms.
inline BooleanVerdict is_boolean_lattice(const Semilattice& s) {
  BooleanVerdict v;
  const auto bottom = s.bottom();
  const auto k = s.size();
  auto below = [&](const Transformation& a, const Transformation& b) {
    return compose_unchecked(a, b) == a;
  };
  for (const auto& a : s) {
    if (a == bottom) continue;
    bool covers = true;
    for (const auto& c : s) {
      if (c == bottom || c == a) continue;
      if (below(c, a)) {
        covers = false;
        break;
      }
    }
    if (covers) v.atoms.push_back(a);
  }
  if (v.atoms.size() >= 63 || k != (std::size_t{1} << v.atoms.size())) {
    v.atoms.clear();
    return v;
  }
  std::vector<std::uint64_t> sets(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.atoms.size(); ++j)
      if (below(v.atoms[j], s[i])) sets[i] |= std::uint64_t{1} << j;
  auto sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < k; ++i)
    if (sorted[i] != i) return v;  // not a bijection onto the power set
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      auto p = *s.index_of(compose_unchecked(s[i], s[j]));
      if (sets[p] != (sets[i] & sets[j])) return v;
    }
  }
  v.is_boolean = true;
  v.atom_sets = std::move(sets);
  return v;
}

/// x <= y iff x = y or x = ye for some e in S.
inline PosetRelation<std::size_t> transitivity_order(const Semilattice& s) {
  std::vector<std::size_t> points(s.n());
  for (std::size_t x = 0; x < s.n(); ++x) points[x] = x;
  PosetRelation<std::size_t> rel(std::move(points));
  for (std::size_t x = 0; x < s.n(); ++x) rel.set(x, x, true);
  for (const auto& e : s)
    for (std::size_t y = 0; y < s.n(); ++y) rel.set(e[y], y, true);
  return rel;
}

/// A subsemilattice of E_t with exactly m elements, obtained by deleting a
/// largest e_A (ties: lexicographically least A) until m remain.
inline Semilattice semilattice_of_size(std::size_t n, std::size_t t, std::size_t m) {
  Transformation::check_size(n);
  if (t >= n) throw std::invalid_argument("t out of range");
  const std::size_t full_size = std::size_t{1} << (n - 1);
  if (m < 1 || m > full_size)
    throw std::invalid_argument("m = " + std::to_string(m) + " outside [1, " +
                                std::to_string(full_size) + "]");
  const auto others = PointSet::full(n).without(PointSet::singleton(t));
  std::vector<PointSet> kept;
  for (auto sub = others.bits();; sub = (sub - 1) & others.bits()) {
    kept.emplace_back(sub);
    if (sub == 0) break;
  }
  auto removal_order = [](PointSet l, PointSet r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l.to_vector() < r.to_vector();
  };
  std::sort(kept.begin(), kept.end(), removal_order);
  kept.erase(kept.begin(), kept.begin() + static_cast<std::ptrdiff_t>(full_size - m));
  std::vector<Transformation> elems;
  for (auto a : kept) elems.push_back(epsilon(n, t, a));
  return make_semilattice(n, std::move(elems));
}

}  // namespace semilat

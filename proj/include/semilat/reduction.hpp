#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilat/semilattice.hpp"
#include "semilat/transformation.hpp"

namespace semilat {

/// A common fixed point t of S and a point u != t that every element sends
/// to u or t.
struct Anchor {
  std::size_t t = 0;
  std::size_t u = 0;
  bool operator==(const Anchor&) const = default;
};

inline bool is_anchor(const Semilattice& s, Anchor a) {
  if (a.t >= s.n() || a.u >= s.n() || a.t == a.u) return false;
  return std::all_of(s.begin(), s.end(), [&](const Transformation& e) {
    return e[a.t] == a.t && (e[a.u] == a.u || e[a.u] == a.t);
  });
}

/// Thrown when no anchor exists; only possible if the input was not a
/// semilattice.
class AnchorNotFound : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Smallest qualifying t, then smallest qualifying u.
inline Anchor find_anchor(const Semilattice& s) {
  if (s.n() < 2) throw std::invalid_argument("find_anchor needs n >= 2");
  for (std::size_t t = 0; t < s.n(); ++t) {
    if (!std::all_of(s.begin(), s.end(),
                     [&](const Transformation& e) { return e[t] == t; }))
      continue;
    for (std::size_t u = 0; u < s.n(); ++u)
      if (u != t && is_anchor(s, {t, u})) return {t, u};
  }
  throw AnchorNotFound("no anchor (t, u) for a set of " + std::to_string(s.size()) +
                       " maps on " + std::to_string(s.n()) + " points");
}

/// Redirects every output equal to u to t.
inline Transformation star(const Transformation& g, Anchor a) {
  TransformationBuilder b(g);
  for (std::size_t x = 0; x < g.n(); ++x)
    if (g[x] == a.u) b.set(x, a.t);
  return b.build();
}

/// Restriction of a map that never outputs `removed` to [0, n) - {removed},
/// renumbered so that points above `removed` shift down by one.
inline Transformation restrict_away(const Transformation& g, std::size_t removed) {
  auto relabel = [removed](std::size_t x) { return x > removed ? x - 1 : x; };
  TransformationBuilder b(g.n() - 1);
  for (std::size_t x = 0; x < g.n(); ++x) {
    if (x == removed) continue;
    if (g[x] == removed)
      throw std::invalid_argument("restriction target hits the removed point");
    b.set(relabel(x), relabel(g[x]));
  }
  return b.build();
}

struct ReductionResult {
  Anchor anchor;
  std::size_t source_size;
  Semilattice star_image;  // S* on [0, n)
  Semilattice restricted;  // S*_u on [0, n - 1)
};

/// Reduction at a caller-chosen anchor; throws std::invalid_argument if the
/// anchor does not hold for S.
inline ReductionResult reduce(const Semilattice& s, Anchor anchor) {
  if (!is_anchor(s, anchor)) throw std::invalid_argument("anchor not valid for this semilattice");
  std::vector<Transformation> stars;
  stars.reserve(s.size());
  for (const auto& g : s) stars.push_back(star(g, anchor));
  auto star_image = make_semilattice(s.n(), stars);
  std::vector<Transformation> restricted;
  restricted.reserve(star_image.size());
  for (const auto& g : star_image) restricted.push_back(restrict_away(g, anchor.u));
  return {anchor, s.size(), std::move(star_image),
          make_semilattice(s.n() - 1, std::move(restricted))};
}

inline ReductionResult reduce(const Semilattice& s) { return reduce(s, find_anchor(s)); }

/// Names the element and point where some x outside {u, t} has two or more
/// preimages.
class LambdaHypothesisViolation : public std::invalid_argument {
 public:
  LambdaHypothesisViolation(const Transformation& e, std::size_t x)
      : std::invalid_argument("point " + std::to_string(x) +
                              " has more than one preimage under an element"),
        element(e),
        point(x) {}

  Transformation element;
  std::size_t point;
};

inline bool lambda_hypothesis_holds(const Semilattice& s, Anchor a) {
  for (const auto& e : s)
    for (std::size_t x = 0; x < s.n(); ++x)
      if (x != a.u && x != a.t && e.preimage(x).size() > 1) return false;
  return true;
}

struct LambdaEmbedding {
  Anchor anchor;
  /// images[i] is the image of s[i].
  std::vector<Transformation> images;
  bool injective = false;
  bool onto = false;
  /// Some f in S with at least two preimages of u, if any.
  std::optional<Transformation> collapsing;
};

/// The embedding of S into E_t that keeps u's image and redirects every
/// other arrival at u to t.
inline LambdaEmbedding lambda_embed(const Semilattice& s, Anchor a) {
  if (!is_anchor(s, a)) throw std::invalid_argument("anchor not valid for this semilattice");
  for (const auto& e : s)
    for (std::size_t x = 0; x < s.n(); ++x)
      if (x != a.u && x != a.t && e.preimage(x).size() > 1)
        throw LambdaHypothesisViolation(e, x);

  LambdaEmbedding r;
  r.anchor = a;
  const auto et = make_Et(s.n(), a.t);
  for (const auto& e : s) {
    TransformationBuilder b(e);
    for (std::size_t x = 0; x < s.n(); ++x)
      if (x != a.u && e[x] == a.u) b.set(x, a.t);
    auto img = b.build();
    if (!et.contains(img))
      throw std::logic_error("lambda image left E_t");
    r.images.push_back(img);
    if (!r.collapsing && e.preimage(a.u).size() >= 2) r.collapsing = e;
  }
  auto sorted = r.images;
  std::sort(sorted.begin(), sorted.end());
  r.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  r.onto = sorted.size() == et.size();
  return r;
}

}  // namespace semilat

#pragma once

// Brute-force references for the test suites. Nothing here calls into the
// block criterion, the commuting graph or the clique search.

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "semilat/transformation.hpp"

namespace semilat::oracle {

/// All n^n maps, lexicographic.
inline std::vector<Transformation> all_transformations(std::size_t n) {
  std::vector<Transformation> out;
  std::vector<int> img(n, 0);
  while (true) {
    out.push_back(Transformation::make(n, std::span<const int>(img)));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++img[i] < static_cast<int>(n)) break;
      img[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Idempotents by filtering every map with e*e == e.
inline std::vector<Transformation> idempotents_by_filter(std::size_t n) {
  std::vector<Transformation> out;
  for (const auto& a : all_transformations(n))
    if (compose(a, a) == a) out.push_back(a);
  return out;
}

inline bool naive_commute(const Transformation& a, const Transformation& b) {
  return compose(a, b) == compose(b, a);
}

inline Transformation random_transformation(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, static_cast<int>(n) - 1);
  std::vector<int> img(n);
  for (auto& y : img) y = d(rng);
  return Transformation::make(n, std::span<const int>(img));
}

/// Random idempotent: random nonempty image set, other points sent into it.
inline Transformation random_idempotent(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> mask_d(1, (1U << n) - 1);
  const auto mask = mask_d(rng);
  std::vector<int> image;
  for (std::size_t x = 0; x < n; ++x)
    if ((mask >> x) & 1U) image.push_back(static_cast<int>(x));
  std::uniform_int_distribution<std::size_t> pick(0, image.size() - 1);
  std::vector<int> img(n);
  for (std::size_t x = 0; x < n; ++x)
    img[x] = ((mask >> x) & 1U) ? static_cast<int>(x) : image[pick(rng)];
  return Transformation::make(n, std::span<const int>(img));
}

/// Subsets of `items` (as index lists) whose members pairwise satisfy
/// `related`, kept only if no other such subset strictly contains them.
template <typename T, typename Rel>
std::vector<std::vector<T>> maximal_pairwise_subsets(const std::vector<T>& items, Rel related) {
  const auto k = items.size();
  std::vector<std::size_t> good;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if (((mask >> i) & 1U) && ((mask >> j) & 1U) && !related(items[i], items[j])) ok = false;
    if (ok) good.push_back(mask);
  }
  std::vector<std::vector<T>> out;
  for (auto m : good) {
    bool dominated = std::any_of(good.begin(), good.end(),
                                 [&](std::size_t o) { return o != m && (o & m) == m; });
    if (dominated) continue;
    std::vector<T> s;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1U) s.push_back(items[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semilat::oracle

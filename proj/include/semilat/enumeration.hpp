#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "semilat/bitset.hpp"
#include "semilat/clique.hpp"
#include "semilat/semilattice.hpp"
#include "semilat/transformation.hpp"

namespace semilat {

/// Hard ceiling on exhaustive enumeration; idempotent counts grow too fast
/// beyond it.
inline constexpr std::size_t kHardEnumerationCap = 6;
inline constexpr std::size_t kDefaultEnumerationCap = 5;
/// Largest n accepted by the subset-filtering oracle.
inline constexpr std::size_t kBruteForceCap = 3;
/// Largest n for listing every (not only maximal) subsemilattice.
inline constexpr std::size_t kAllSubsemilatticesCap = 4;

class CapExceeded : public std::out_of_range {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : std::out_of_range("n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                          std::to_string(cap)),
        n(n),
        cap(cap) {}
  std::size_t n;
  std::size_t cap;
};

struct SearchOptions {
  std::size_t cap = kDefaultEnumerationCap;
  unsigned workers = 1;
};

inline void check_cap(std::size_t n, const SearchOptions& opts) {
  if (opts.cap > kHardEnumerationCap)
    throw std::invalid_argument("enumeration cap " + std::to_string(opts.cap) +
                                " above the hard maximum of " +
                                std::to_string(kHardEnumerationCap));
  Transformation::check_size(n);
  if (n > opts.cap) throw CapExceeded(n, opts.cap);
}

/// Graph on the canonical idempotent list; i ~ j iff i != j and they commute.
struct CommutingGraph {
  std::size_t n = 0;
  std::vector<Transformation> vertices;
  std::vector<Bitset> adjacency;

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i].test(j); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adjacency) twice += row.count();
    return twice / 2;
  }
};

inline CommutingGraph build_commuting_graph(std::size_t n) {
  CommutingGraph g;
  g.n = n;
  g.vertices = enumerate_idempotents(n);
  const auto k = g.vertices.size();
  std::vector<IdempotentDecomposition> decs;
  decs.reserve(k);
  for (const auto& e : g.vertices) decs.push_back(orbit_decomposition(e));
  g.adjacency.assign(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (commutes_with_idempotent(decs[i], g.vertices[j])) {
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

/// Size descending, then lexicographic on the sorted element list.
inline bool canonical_less(const Semilattice& a, const Semilattice& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.elements() < b.elements();
}

inline void sort_canonical(std::vector<Semilattice>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
}

inline std::vector<Semilattice> cliques_to_semilattices(
    const CommutingGraph& g, const std::vector<std::vector<std::size_t>>& cliques) {
  std::vector<Semilattice> out;
  out.reserve(cliques.size());
  for (const auto& c : cliques) {
    std::vector<Transformation> elems;
    elems.reserve(c.size());
    for (auto v : c) elems.push_back(g.vertices[v]);
    out.push_back(make_semilattice(g.n, std::move(elems)));
  }
  return out;
}

/// Every maximal subsemilattice of T(n), as the maximal cliques of the
/// commuting graph. A product of two commuting idempotents commutes with
/// every common neighbour, so maximal cliques are closed under composition.
/// Each result is re-verified, including maximality.
inline std::vector<Semilattice> enumerate_maximal_semilattices(std::size_t n,
                                                               const SearchOptions& opts = {}) {
  check_cap(n, opts);
  const auto g = build_commuting_graph(n);
  auto result = cliques_to_semilattices(g, maximal_cliques(g.adjacency, opts.workers));
  for (const auto& s : result) {
    if (!is_maximal(s, g.vertices).maximal)
      throw std::logic_error("maximal clique is not a maximal semilattice");
  }
  sort_canonical(result);
  return result;
}

/// The maximal semilattices of largest size.
inline std::vector<Semilattice> max_size_semilattices(std::size_t n,
                                                      const SearchOptions& opts = {}) {
  auto all = enumerate_maximal_semilattices(n, opts);
  const auto top = all.front().size();
  std::erase_if(all, [top](const Semilattice& s) { return s.size() != top; });
  return all;
}

struct SpectrumEntry {
  std::size_t count = 0;
  /// Canonically least maximal semilattice of this size.
  Semilattice witness;
};

/// Cardinalities of the maximal semilattices of T(n).
struct SpectrumReport {
  std::size_t n = 0;
  std::map<std::size_t, SpectrumEntry> entries;
  std::size_t total = 0;
  std::size_t max_size = 0;
};

inline SpectrumReport spectrum_of(std::size_t n, const std::vector<Semilattice>& maximal) {
  SpectrumReport r;
  r.n = n;
  for (const auto& s : maximal) {
    auto it = r.entries.find(s.size());
    if (it == r.entries.end()) {
      r.entries.emplace(s.size(), SpectrumEntry{1, s});
    } else {
      ++it->second.count;
      if (canonical_less(s, it->second.witness)) it->second.witness = s;
    }
    ++r.total;
    r.max_size = std::max(r.max_size, s.size());
  }
  return r;
}

inline SpectrumReport spectrum(std::size_t n, const SearchOptions& opts = {}) {
  return spectrum_of(n, enumerate_maximal_semilattices(n, opts));
}

/// Oracle: filters every nonempty subset of idempotents through
/// verify_semilattice. Independent of the commuting graph.
inline std::vector<Semilattice> brute_force_subsemilattices(std::size_t n) {
  if (n > kBruteForceCap) throw CapExceeded(n, kBruteForceCap);
  const auto idem = enumerate_idempotents(n);
  std::vector<Semilattice> out;
  const std::size_t subsets = std::size_t{1} << idem.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    std::vector<Transformation> cand;
    for (std::size_t i = 0; i < idem.size(); ++i)
      if ((mask >> i) & 1U) cand.push_back(idem[i]);
    auto r = verify_semilattice(n, std::move(cand));
    if (auto* s = std::get_if<Semilattice>(&r)) out.push_back(std::move(*s));
  }
  sort_canonical(out);
  return out;
}

/// Members of `family` not strictly contained in another member.
inline std::vector<Semilattice> maximal_under_inclusion(const std::vector<Semilattice>& family) {
  std::vector<Semilattice> out;
  for (const auto& s : family) {
    bool dominated = std::any_of(family.begin(), family.end(), [&](const Semilattice& o) {
      return o.size() > s.size() &&
             std::includes(o.begin(), o.end(), s.begin(), s.end());
    });
    if (!dominated) out.push_back(s);
  }
  sort_canonical(out);
  return out;
}

/// Every subsemilattice of T(n): the product-closed subsets of the maximal
/// cliques, deduplicated.
inline std::vector<Semilattice> enumerate_subsemilattices(std::size_t n) {
  if (n > kAllSubsemilatticesCap) throw CapExceeded(n, kAllSubsemilatticesCap);
  std::set<std::vector<Transformation>> seen;
  for (const auto& m : enumerate_maximal_semilattices(n)) {
    const auto k = m.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Transformation> sub;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1U) sub.push_back(m[i]);
      bool closed = true;
      for (std::size_t i = 0; i < sub.size() && closed; ++i)
        for (std::size_t j = i + 1; j < sub.size() && closed; ++j)
          closed = std::binary_search(sub.begin(), sub.end(),
                                      compose_unchecked(sub[i], sub[j]));
      if (closed) seen.insert(std::move(sub));
    }
  }
  std::vector<Semilattice> out;
  out.reserve(seen.size());
  for (const auto& elems : seen) out.push_back(make_semilattice(n, elems));
  sort_canonical(out);
  return out;
}

}  // namespace semilat

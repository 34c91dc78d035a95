#pragma once

// Brute-force ground truth: exhaustive hom-set enumeration and catalogues of
// small sets and quivers. Nothing here is clever on purpose; the universal
// properties are certified against these lists.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct SizeCaps {
  std::uint64_t max_vertex_maps = 1'000'000;
  std::uint64_t max_edge_maps = 1'000'000;
  std::uint64_t max_total_pairs = 1'000'000;
};

/// Number of (vertex map, edge map) candidate pairs from g to h, saturating.
std::uint64_t hom_search_space(const Quiver& g, const Quiver& h) noexcept;

/// Every quiver map g -> h, ordered by vertex map then edge map (each
/// lexicographic by image over the sorted domain). Throws CapExceeded
/// instead of truncating.
std::vector<QuiverMorphism> enumerate_homs(const Quiver& g, const Quiver& h, const SizeCaps& caps = {});

/// Every labeled quiver with vertices v0..v{n-1} (n <= max_vertices) and
/// edges e0..e{m-1} (m <= max_edges), ordered by n, then m, then the
/// source/target assignment. No isomorphism reduction.
std::vector<Quiver> quiver_catalogue(std::size_t max_vertices, std::size_t max_edges);

/// {}, {s0}, {s0,s1}, ... up to max_size elements.
std::vector<FiniteSet> set_catalogue(std::size_t max_size);

}  // namespace quiverlab

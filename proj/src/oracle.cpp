#include "quiverlab/oracle.hpp"

#include <limits>
#include <string>

#include "morphism_access.hpp"

namespace quiverlab {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

// Advances an odometer over [0, base)^n, first digit most significant.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
  for (std::size_t pos = digits.size(); pos > 0; --pos) {
    if (++digits[pos - 1] < base) return true;
    digits[pos - 1] = 0;
  }
  return false;
}

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

}  // namespace

std::uint64_t hom_search_space(const Quiver& g, const Quiver& h) noexcept {
  return saturating_mul(function_count(g.vertices(), h.vertices()), function_count(g.edges(), h.edges()));
}

std::vector<QuiverMorphism> enumerate_homs(const Quiver& g, const Quiver& h, const SizeCaps& caps) {
  if (caps.max_vertex_maps == 0 || caps.max_edge_maps == 0 || caps.max_total_pairs == 0) {
    throw ConstraintError("size caps must be positive");
  }
  const std::uint64_t vertex_maps = function_count(g.vertices(), h.vertices());
  const std::uint64_t edge_maps = function_count(g.edges(), h.edges());
  if (vertex_maps > caps.max_vertex_maps) throw CapExceeded("vertex map", vertex_maps, caps.max_vertex_maps);
  if (edge_maps > caps.max_edge_maps) throw CapExceeded("edge map", edge_maps, caps.max_edge_maps);
  const std::uint64_t pairs = saturating_mul(vertex_maps, edge_maps);
  if (pairs > caps.max_total_pairs) throw CapExceeded("candidate pair", pairs, caps.max_total_pairs);

  std::vector<QuiverMorphism> out;
  if (pairs == 0) return out;

  const std::size_t nv = g.vertices().size();
  const std::size_t ne = g.edges().size();
  const auto src = g.source().image_indices();
  const auto tgt = g.target().image_indices();
  const auto src_h = h.source().image_indices();
  const auto tgt_h = h.target().image_indices();

  std::vector<std::size_t> fv(nv, 0);
  do {
    std::vector<std::size_t> fe(ne, 0);
    do {
      bool ok = true;
      for (std::size_t e = 0; e < ne && ok; ++e) {
        ok = fv[src[e]] == src_h[fe[e]] && fv[tgt[e]] == tgt_h[fe[e]];
      }
      if (ok) {
        out.push_back(detail::MorphismAccess::unchecked(g, h, SetFunction(g.vertices(), h.vertices(), fv),
                                                        SetFunction(g.edges(), h.edges(), fe)));
      }
    } while (advance(fe, h.edges().size()));
  } while (advance(fv, h.vertices().size()));
  return out;
}

std::vector<Quiver> quiver_catalogue(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Quiver> out;
  for (std::size_t n = 0; n <= max_vertices; ++n) {
    const FiniteSet vertices(numbered("v", n));
    const auto vertex_labels = numbered("v", n);
    for (std::size_t m = 0; m <= max_edges; ++m) {
      if (n == 0 && m > 0) break;
      const auto edge_labels = numbered("e", m);
      // Digits: source(e0), target(e0), source(e1), target(e1), ...
      std::vector<std::size_t> ends(2 * m, 0);
      do {
        std::vector<EdgeSpec> edges;
        edges.reserve(m);
        for (std::size_t e = 0; e < m; ++e) {
          edges.push_back({edge_labels[e], vertex_labels[ends[2 * e]], vertex_labels[ends[2 * e + 1]]});
        }
        out.push_back(Quiver::from_edges(vertices, edges));
      } while (advance(ends, n));
    }
  }
  return out;
}

std::vector<FiniteSet> set_catalogue(std::size_t max_size) {
  std::vector<FiniteSet> out;
  out.reserve(max_size + 1);
  for (std::size_t n = 0; n <= max_size; ++n) out.emplace_back(numbered("s", n));
  return out;
}

}  // namespace quiverlab

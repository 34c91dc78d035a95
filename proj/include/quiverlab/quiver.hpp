#pragma once

// The category of quivers: objects, validated homomorphisms, identities,
// composition, and the vertex and edge functors to finite sets.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiverlab/error.hpp"
#include "quiverlab/setmodel.hpp"

namespace quiverlab {

namespace detail {
struct MorphismAccess;
}

/// An edge given as (label, source label, target label).
struct EdgeSpec {
  std::string label;
  std::string source;
  std::string target;
};

/// A directed multigraph (V, E, source, target). Loops and parallel edges
/// are allowed.
class Quiver {
public:
  /// The quiver with no vertices and no edges.
  Quiver();

  /// source and target must both be maps edges -> vertices.
  Quiver(FiniteSet vertices, FiniteSet edges, SetFunction source, SetFunction target);

  static Quiver from_edges(FiniteSet vertices, std::span<const EdgeSpec> edges);

  const FiniteSet& vertices() const noexcept { return vertices_; }
  const FiniteSet& edges() const noexcept { return edges_; }
  const SetFunction& source() const noexcept { return source_; }
  const SetFunction& target() const noexcept { return target_; }

  /// Edge list in canonical order.
  std::vector<EdgeSpec> edge_list() const;

  /// "V={..} E={e:a->b,..}"
  std::string to_string() const;

  friend bool operator==(const Quiver& a, const Quiver& b) noexcept;

private:
  FiniteSet vertices_;
  FiniteSet edges_;
  SetFunction source_;
  SetFunction target_;
};

/// Strict structural equality: same carriers, same source and target maps.
inline bool quiver_equal(const Quiver& a, const Quiver& b) noexcept { return a == b; }

/// A quiver homomorphism. Instances only exist once both commuting squares
/// have been checked.
class QuiverMorphism {
public:
  const Quiver& dom() const noexcept { return dom_; }
  const Quiver& cod() const noexcept { return cod_; }
  const SetFunction& vertex_map() const noexcept { return vertex_map_; }
  const SetFunction& edge_map() const noexcept { return edge_map_; }

  /// "(vertex {..}, edge {..})"
  std::string to_string() const;

  friend bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) noexcept;

private:
  friend struct detail::MorphismAccess;

  QuiverMorphism(Quiver dom, Quiver cod, SetFunction vertex_map, SetFunction edge_map)
      : dom_(std::move(dom)), cod_(std::move(cod)), vertex_map_(std::move(vertex_map)),
        edge_map_(std::move(edge_map)) {}

  Quiver dom_;
  Quiver cod_;
  SetFunction vertex_map_;
  SetFunction edge_map_;
};

/// First failing square in canonical edge order, or nullopt if both commute.
/// The maps must already have the right carriers.
std::optional<SquareViolation> find_square_violation(const Quiver& dom, const Quiver& cod,
                                                     const SetFunction& vertex_map,
                                                     const SetFunction& edge_map);

/// Throws DomainMismatch on wrong carriers and SquareViolation on the first
/// edge (sorted order, source square before target square) that breaks a square.
QuiverMorphism validate_morphism(const Quiver& dom, const Quiver& cod, const SetFunction& vertex_map,
                                 const SetFunction& edge_map);

QuiverMorphism identity_morphism(const Quiver& g);

/// psi after phi. Requires cod(phi) == dom(psi).
QuiverMorphism compose_morphism(const QuiverMorphism& psi, const QuiverMorphism& phi);

inline const FiniteSet& vertex_functor(const Quiver& g) noexcept { return g.vertices(); }
inline const SetFunction& vertex_functor(const QuiverMorphism& phi) noexcept { return phi.vertex_map(); }
inline const FiniteSet& edge_functor(const Quiver& g) noexcept { return g.edges(); }
inline const SetFunction& edge_functor(const QuiverMorphism& phi) noexcept { return phi.edge_map(); }

}  // namespace quiverlab

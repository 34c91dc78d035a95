#include "quiverlab/quiver.hpp"

#include <map>

#include "morphism_access.hpp"

namespace quiverlab {

Quiver::Quiver() = default;

Quiver::Quiver(FiniteSet vertices, FiniteSet edges, SetFunction source, SetFunction target)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), source_(std::move(source)),
      target_(std::move(target)) {
  for (const auto* map : {&source_, &target_}) {
    const char* name = map == &source_ ? "source" : "target";
    if (!(map->domain() == edges_)) {
      throw DomainMismatch(std::string(name) + " map domain " + map->domain().to_string() +
                           " is not the edge set " + edges_.to_string());
    }
    if (!(map->codomain() == vertices_)) {
      throw DomainMismatch(std::string(name) + " map codomain " + map->codomain().to_string() +
                           " is not the vertex set " + vertices_.to_string());
    }
  }
}

Quiver Quiver::from_edges(FiniteSet vertices, std::span<const EdgeSpec> edges) {
  std::vector<std::string> labels;
  std::map<std::string, std::string, std::less<>> source;
  std::map<std::string, std::string, std::less<>> target;
  labels.reserve(edges.size());
  for (const auto& edge : edges) {
    labels.push_back(edge.label);
    source[edge.label] = edge.source;
    target[edge.label] = edge.target;
  }
  FiniteSet edge_set(std::move(labels));
  SetFunction source_map(edge_set, vertices, source);
  SetFunction target_map(edge_set, vertices, target);
  return Quiver(std::move(vertices), std::move(edge_set), std::move(source_map), std::move(target_map));
}

std::vector<EdgeSpec> Quiver::edge_list() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out.push_back({edges_[i], vertices_[source_.image_index(i)], vertices_[target_.image_index(i)]});
  }
  return out;
}

std::string Quiver::to_string() const {
  std::string out = "V=" + vertices_.to_string() + " E={";
  bool first = true;
  for (const auto& edge : edge_list()) {
    if (!first) out += ',';
    first = false;
    out += edge.label + ":" + edge.source + "->" + edge.target;
  }
  out += '}';
  return out;
}

bool operator==(const Quiver& a, const Quiver& b) noexcept {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.source_ == b.source_ &&
         a.target_ == b.target_;
}

std::string QuiverMorphism::to_string() const {
  return "(vertex " + vertex_map_.to_string() + ", edge " + edge_map_.to_string() + ")";
}

bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) noexcept {
  return a.vertex_map_ == b.vertex_map_ && a.edge_map_ == b.edge_map_ && a.dom_ == b.dom_ &&
         a.cod_ == b.cod_;
}

std::optional<SquareViolation> find_square_violation(const Quiver& dom, const Quiver& cod,
                                                     const SetFunction& vertex_map,
                                                     const SetFunction& edge_map) {
  const auto& edges = dom.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t image_edge = edge_map.image_index(e);
    for (Side side : {Side::Source, Side::Target}) {
      const SetFunction& here = side == Side::Source ? dom.source() : dom.target();
      const SetFunction& there = side == Side::Source ? cod.source() : cod.target();
      const std::size_t lhs = vertex_map.image_index(here.image_index(e));
      const std::size_t rhs = there.image_index(image_edge);
      if (lhs != rhs) {
        return SquareViolation(edges[e], side, cod.vertices()[lhs], cod.vertices()[rhs]);
      }
    }
  }
  return std::nullopt;
}

QuiverMorphism validate_morphism(const Quiver& dom, const Quiver& cod, const SetFunction& vertex_map,
                                 const SetFunction& edge_map) {
  if (!(vertex_map.domain() == dom.vertices()) || !(vertex_map.codomain() == cod.vertices())) {
    throw DomainMismatch("vertex map " + vertex_map.domain().to_string() + " -> " +
                         vertex_map.codomain().to_string() + " does not go from " +
                         dom.vertices().to_string() + " to " + cod.vertices().to_string());
  }
  if (!(edge_map.domain() == dom.edges()) || !(edge_map.codomain() == cod.edges())) {
    throw DomainMismatch("edge map " + edge_map.domain().to_string() + " -> " +
                         edge_map.codomain().to_string() + " does not go from " +
                         dom.edges().to_string() + " to " + cod.edges().to_string());
  }
  if (auto violation = find_square_violation(dom, cod, vertex_map, edge_map)) throw *violation;
  return detail::MorphismAccess::unchecked(dom, cod, vertex_map, edge_map);
}

QuiverMorphism identity_morphism(const Quiver& g) {
  return detail::MorphismAccess::unchecked(g, g, identity_fn(g.vertices()), identity_fn(g.edges()));
}

QuiverMorphism compose_morphism(const QuiverMorphism& psi, const QuiverMorphism& phi) {
  if (!(phi.cod() == psi.dom())) {
    throw DomainMismatch("cannot compose: codomain quiver " + phi.cod().to_string() +
                         " differs from domain quiver " + psi.dom().to_string());
  }
  return validate_morphism(phi.dom(), psi.cod(), compose_fn(psi.vertex_map(), phi.vertex_map()),
                           compose_fn(psi.edge_map(), phi.edge_map()));
}

}  // namespace quiverlab

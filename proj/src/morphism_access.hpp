#pragma once

// Library-internal: builds QuiverMorphism values without re-checking the
// squares. Callers must have established validity themselves.

#include "quiverlab/quiver.hpp"

namespace quiverlab::detail {

struct MorphismAccess {
  static QuiverMorphism unchecked(Quiver dom, Quiver cod, SetFunction vertex_map, SetFunction edge_map) {
    return QuiverMorphism(std::move(dom), std::move(cod), std::move(vertex_map), std::move(edge_map));
  }
};

}  // namespace quiverlab::detail

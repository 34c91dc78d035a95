#include "quiverlab/constructions.hpp"

namespace quiverlab {

std::string_view to_string(Construction which) noexcept {
  switch (which) {
    case Construction::I: return "I";
    case Construction::M: return "M";
    case Construction::K: return "K";
    case Construction::B: return "B";
  }
  return "?";
}

std::string_view to_string(StructureMap which) noexcept {
  switch (which) {
    case StructureMap::Eta: return "eta";
    case StructureMap::Theta: return "theta";
    case StructureMap::Zeta: return "zeta";
    case StructureMap::Epsilon: return "epsilon";
  }
  return "?";
}

Quiver empty_quiver(const FiniteSet& s) {
  return Quiver(s, FiniteSet{}, empty_fn(s), empty_fn(s));
}

Quiver independent_edges(const FiniteSet& s) {
  return Quiver(tagged_double(s), s, inclusion(0, s), inclusion(1, s));
}

Quiver complete_quiver(const FiniteSet& s) {
  return Quiver(s, square(s), projection(1, s), projection(2, s));
}

Quiver bouquet(const FiniteSet& s) {
  return Quiver(singleton_set(), s, constant_fn(s), constant_fn(s));
}

Quiver construct(Construction which, const FiniteSet& s) {
  switch (which) {
    case Construction::I: return empty_quiver(s);
    case Construction::M: return independent_edges(s);
    case Construction::K: return complete_quiver(s);
    case Construction::B: return bouquet(s);
  }
  throw ConstraintError("unknown construction");
}

QuiverMorphism functor_on_morphism(Construction which, const SetFunction& f) {
  const Quiver dom = construct(which, f.domain());
  const Quiver cod = construct(which, f.codomain());
  switch (which) {
    case Construction::I:
      return validate_morphism(dom, cod, f, empty_fn(FiniteSet{}));
    case Construction::M:
      return validate_morphism(dom, cod, tagged_map(f), f);
    case Construction::K:
      return validate_morphism(dom, cod, f, square_map(f));
    case Construction::B:
      return validate_morphism(dom, cod, identity_fn(singleton_set()), f);
  }
  throw ConstraintError("unknown construction");
}

SetFunction unit_or_counit(StructureMap which, const FiniteSet& s) {
  switch (which) {
    case StructureMap::Eta:      // S -> V(I_S)
    case StructureMap::Theta:    // S -> E(M_S)
    case StructureMap::Zeta:     // V(K_S) -> S
    case StructureMap::Epsilon:  // E(B_S) -> S
      return identity_fn(s);
  }
  throw ConstraintError("unknown structure map");
}

}  // namespace quiverlab

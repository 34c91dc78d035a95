#pragma once

// The four quiver constructions on a finite set S and their functorial
// actions on set maps:
//
//   I_S  independent vertices   (S, {}, 0, 0)              left adjoint of V
//   M_S  independent edges      ({0,1}xS, S, i0, i1)       left adjoint of E
//   K_S  complete digraph       (S, SxS, p1, p2)           right adjoint of V
//   B_S  bouquet                ({1}, S, !, !)             right adjoint of E
//
// together with the structure maps eta_S: S -> V(I_S), theta_S: S -> E(M_S),
// zeta_S: V(K_S) -> S and epsilon_S: E(B_S) -> S, all identities.

#include <string_view>

#include "quiverlab/quiver.hpp"
#include "quiverlab/setmodel.hpp"

namespace quiverlab {

enum class Construction { I, M, K, B };

enum class StructureMap { Eta, Theta, Zeta, Epsilon };

std::string_view to_string(Construction which) noexcept;
std::string_view to_string(StructureMap which) noexcept;

Quiver empty_quiver(const FiniteSet& s);
Quiver independent_edges(const FiniteSet& s);
Quiver complete_quiver(const FiniteSet& s);
Quiver bouquet(const FiniteSet& s);

Quiver construct(Construction which, const FiniteSet& s);

/// The morphism action of I, M, K or B on f: S -> T, a quiver map from the
/// construction on S to the construction on T.
///
///   I(f) = (f, empty)        M(f) = ((j,s) -> (j,f(s)), f)
///   K(f) = (f, f x f)        B(f) = (id_{1}, f)
QuiverMorphism functor_on_morphism(Construction which, const SetFunction& f);

SetFunction unit_or_counit(StructureMap which, const FiniteSet& s);

}  // namespace quiverlab

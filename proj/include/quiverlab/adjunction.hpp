#pragma once

// Universal-property factorizations for the four adjunctions
//
//   I -| V     M -| E     V -| K     E -| B
//
// and exhaustive law checking against the brute-force oracle.
//
// For the reflections (I, M) a set map phi: S -> U(G) factors as
// U(phi_hat) . unit_S with phi_hat: F(S) -> G. For the coreflections (K, B)
// a set map phi: U(G) -> S factors as counit_S . U(phi_hat) with
// phi_hat: G -> F(S). Here U is the vertex or edge functor and F the
// construction.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiverlab/constructions.hpp"
#include "quiverlab/oracle.hpp"
#include "quiverlab/quiver.hpp"

namespace quiverlab {

enum class Adjunction { IV, ME, VK, EB };

inline constexpr Adjunction kAllAdjunctions[] = {Adjunction::IV, Adjunction::ME, Adjunction::VK,
                                                 Adjunction::EB};

/// "I-|V", "M-|E", "V-|K", "E-|B"
std::string_view to_string(Adjunction which) noexcept;

Construction construction_of(Adjunction which) noexcept;
StructureMap structure_map_of(Adjunction which) noexcept;

/// True for I -| V and M -| E, where the construction is the left adjoint.
bool is_reflection(Adjunction which) noexcept;

/// The forgetful side: V for I -| V and V -| K, E otherwise.
const FiniteSet& forget(Adjunction which, const Quiver& g) noexcept;
const SetFunction& forget(Adjunction which, const QuiverMorphism& phi) noexcept;

struct FactorizationResult {
  QuiverMorphism mediating;
  /// The triangle equation of the universal property holds for `mediating`.
  bool identity_witness = false;
  /// Number of morphisms in the full hom-set satisfying the triangle; only
  /// filled in when certification ran, and then always 1.
  std::optional<std::size_t> uniqueness_witness;
};

/// phi: S -> V(g). mediating = (phi, empty): I_S -> g.
FactorizationResult reflect_vertices(const Quiver& g, const SetFunction& phi,
                                     const std::optional<SizeCaps>& certify = std::nullopt);

/// phi: S -> E(g). mediating: M_S -> g sends (0,s) to source(phi(s)),
/// (1,s) to target(phi(s)) and edges by phi.
FactorizationResult reflect_edges(const Quiver& g, const SetFunction& phi,
                                  const std::optional<SizeCaps>& certify = std::nullopt);

/// phi: V(g) -> S. mediating: g -> K_S sends e to (phi(source e), phi(target e)).
FactorizationResult coreflect_vertices(const Quiver& g, const SetFunction& phi,
                                       const std::optional<SizeCaps>& certify = std::nullopt);

/// phi: E(g) -> S. mediating = (constant, phi): g -> B_S.
FactorizationResult coreflect_edges(const Quiver& g, const SetFunction& phi,
                                    const std::optional<SizeCaps>& certify = std::nullopt);

/// Dispatches to one of the four factorizations above. When `certify` is
/// given, the whole hom-set is enumerated and LawViolation is thrown unless
/// exactly one morphism satisfies the triangle and it is the mediating one.
FactorizationResult factorize(Adjunction which, const Quiver& g, const SetFunction& phi,
                              const std::optional<SizeCaps>& certify = std::nullopt);

/// The hom-set holding the mediating morphisms for a set S: Quiv(F(S), g)
/// for reflections, Quiv(g, F(S)) for coreflections.
std::vector<QuiverMorphism> mediating_hom_set(Adjunction which, const Quiver& g, const FiniteSet& s,
                                              const SizeCaps& caps = {});

/// U(psi) . unit_S, or counit_S . U(psi) for coreflections.
SetFunction triangle_image(Adjunction which, const QuiverMorphism& psi);

/// Whether psi factors phi, i.e. triangle_image(psi) == phi.
bool satisfies_triangle(Adjunction which, const QuiverMorphism& psi, const SetFunction& phi);

/// The structure map the named components do not cover, obtained by
/// factorizing the identity of U(g): the counit F(U g) -> g for
/// reflections, the unit g -> F(U g) for coreflections.
QuiverMorphism derived_structure_map(Adjunction which, const Quiver& g);

// ---------------------------------------------------------------------------
// Law reports

struct LawFailure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct LawResult {
  std::string subject;  // adjunction or "Quiv"
  std::string law;
  std::size_t instances = 0;
  std::size_t failed = 0;
  std::vector<LawFailure> failures;  // first few only

  bool passed() const noexcept { return failed == 0; }
};

struct LawReport {
  std::vector<LawResult> results;

  bool passed() const noexcept;
  std::size_t total_instances() const noexcept;
  const LawResult* find(std::string_view subject, std::string_view law) const noexcept;
  /// Throws LawViolation for the first recorded failure.
  void require() const;
  void append(const LawReport& other);
};

/// Law names used by check_adjunction_laws, in report order.
inline constexpr std::string_view kAdjunctionLaws[] = {
    "retraction",              // U(F S) = S and U(F f) = f
    "functoriality",           // F preserves identities and composition
    "structure-naturality",    // the named unit/counit is natural
    "existence",               // the mediating map is valid and factors phi
    "uniqueness",              // exactly one morphism factors phi
    "hom-bijection",           // transposition is a bijection with the closed-form count
    "naturality-set",          // transposition is natural in the set argument
    "naturality-quiver",       // transposition is natural in the quiver argument
    "derived-naturality",      // the derived structure map is natural
    "triangle-set",            // triangle identity at F(S)
    "triangle-quiver",         // triangle identity at U(G)
};

/// Runs every adjunction law for `which` over all sets and quivers given.
LawReport check_adjunction_laws(Adjunction which, std::span<const FiniteSet> sets,
                                std::span<const Quiver> quivers, const SizeCaps& caps = {});

/// Identity and associativity laws of Quiv, plus functor laws of V and E.
/// Identity laws run on every hom-set and the functor laws on every
/// composable pair. Associativity runs on composable morphism triples,
/// exhaustively when there are at most `max_triples` of them and otherwise
/// on a fixed-seed sample of that size.
LawReport check_category_laws(std::span<const Quiver> quivers, const SizeCaps& caps = {},
                              std::size_t max_triples = 200000);

}  // namespace quiverlab

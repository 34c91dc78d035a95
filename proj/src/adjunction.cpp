#include "quiverlab/adjunction.hpp"

#include <algorithm>
#include <random>

namespace quiverlab {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

void require_equal_sets(const FiniteSet& actual, const FiniteSet& expected, const char* what) {
  if (!(actual == expected)) {
    throw DomainMismatch(std::string(what) + " " + actual.to_string() + " must equal " + expected.to_string());
  }
}

FactorizationResult finish(Adjunction which, QuiverMorphism mediating, const SetFunction& phi,
                           const std::optional<SizeCaps>& certify) {
  const bool factors = satisfies_triangle(which, mediating, phi);
  FactorizationResult result{std::move(mediating), factors, std::nullopt};
  if (!certify) return result;

  const Quiver& g = is_reflection(which) ? result.mediating.cod() : result.mediating.dom();
  const FiniteSet& s = is_reflection(which) ? phi.domain() : phi.codomain();
  const auto candidates = mediating_hom_set(which, g, s, *certify);
  std::size_t count = 0;
  bool mediating_found = false;
  for (const auto& psi : candidates) {
    if (satisfies_triangle(which, psi, phi)) {
      ++count;
      mediating_found = mediating_found || psi == result.mediating;
    }
  }
  if (count != 1 || !mediating_found || !factors) {
    throw LawViolation(std::string(to_string(which)) + " uniqueness", "phi = " + phi.to_string(),
                       std::to_string(count) + " factoring morphism(s)" +
                           (mediating_found ? "" : ", constructed map not among them"),
                       "exactly 1");
  }
  result.uniqueness_witness = count;
  return result;
}

std::uint64_t power(std::size_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Accumulates the outcome of one law over many instances.
class Recorder {
public:
  Recorder(std::string subject, std::string_view law) {
    result_.subject = std::move(subject);
    result_.law = std::string(law);
  }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++result_.instances;
    if (ok) return;
    fail(describe());
  }

  void fail(LawFailure failure) {
    ++result_.failed;
    if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(std::move(failure));
  }

  // Runs body, turning library errors (other than cap overruns) into failures.
  template <class Body>
  void guarded(Body&& body) {
    try {
      body();
    } catch (const CapExceeded&) {
      throw;
    } catch (const Error& e) {
      fail({"exception", e.what(), "no exception"});
    }
  }

  LawResult take() { return std::move(result_); }

private:
  LawResult result_;
};

LawFailure describe_equal(std::string instance, const auto& lhs, const auto& rhs) {
  return {std::move(instance), lhs.to_string(), rhs.to_string()};
}

std::string set_instance(const FiniteSet& s) { return "S=" + s.to_string(); }
std::string pair_instance(const FiniteSet& s, const Quiver& g) {
  return "S=" + s.to_string() + " G=" + g.to_string();
}

// Every law of one adjunction, sharing the enumerations between laws.
class AdjunctionChecker {
public:
  AdjunctionChecker(Adjunction which, std::span<const FiniteSet> sets, std::span<const Quiver> quivers,
                    const SizeCaps& caps)
      : which_(which), construction_(construction_of(which)), left_(is_reflection(which)), sets_(sets),
        quivers_(quivers), caps_(caps), name_(to_string(which)) {
    for (const auto& s : sets_) built_.push_back(construct(construction_, s));
  }

  LawReport run() {
    LawReport report;
    report.results.push_back(retraction());
    report.results.push_back(functoriality());
    report.results.push_back(structure_naturality());
    auto [existence, uniqueness] = existence_and_uniqueness();
    report.results.push_back(std::move(existence));
    report.results.push_back(std::move(uniqueness));
    report.results.push_back(hom_bijection());
    report.results.push_back(naturality_set());
    report.results.push_back(naturality_quiver());
    report.results.push_back(derived_naturality());
    report.results.push_back(triangle_set());
    report.results.push_back(triangle_quiver());
    return report;
  }

private:
  SetFunction unit(const FiniteSet& s) const { return unit_or_counit(structure_map_of(which_), s); }

  QuiverMorphism transpose(const Quiver& g, const SetFunction& phi) const {
    return factorize(which_, g, phi).mediating;
  }

  // Set-side maps for (S, G): S -> U(G) or U(G) -> S.
  std::vector<SetFunction> set_side(const FiniteSet& s, const Quiver& g) const {
    return left_ ? enumerate_functions(s, forget(which_, g)) : enumerate_functions(forget(which_, g), s);
  }

  const std::vector<QuiverMorphism>& homs(std::size_t a, std::size_t b) {
    if (quiver_homs_.empty()) {
      quiver_homs_.resize(quivers_.size() * quivers_.size());
      computed_.assign(quiver_homs_.size(), false);
    }
    const std::size_t index = a * quivers_.size() + b;
    if (!computed_[index]) {
      quiver_homs_[index] = enumerate_homs(quivers_[a], quivers_[b], caps_);
      computed_[index] = true;
    }
    return quiver_homs_[index];
  }

  LawResult retraction() {
    Recorder rec(name_, "retraction");
    rec.guarded([&] {
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const FiniteSet& s = sets_[i];
        rec.check(forget(which_, built_[i]) == s, [&] { return describe_equal(set_instance(s), forget(which_, built_[i]), s); });
        for (const auto& t : sets_) {
          for (const auto& f : enumerate_functions(s, t)) {
            const auto image = functor_on_morphism(construction_, f);
            rec.check(forget(which_, image) == f,
                      [&] { return describe_equal("f=" + f.to_string(), forget(which_, image), f); });
          }
        }
      }
    });
    return rec.take();
  }

  LawResult functoriality() {
    Recorder rec(name_, "functoriality");
    rec.guarded([&] {
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto image = functor_on_morphism(construction_, identity_fn(sets_[i]));
        const auto expected = identity_morphism(built_[i]);
        rec.check(image == expected, [&] { return describe_equal("id on " + sets_[i].to_string(), image, expected); });
      }
      for (const auto& a : sets_) {
        for (const auto& b : sets_) {
          const auto fs = enumerate_functions(a, b);
          for (const auto& c : sets_) {
            const auto gs = enumerate_functions(b, c);
            for (const auto& f : fs) {
              const auto ff = functor_on_morphism(construction_, f);
              for (const auto& g : gs) {
                const auto lhs = functor_on_morphism(construction_, compose_fn(g, f));
                const auto rhs = compose_morphism(functor_on_morphism(construction_, g), ff);
                rec.check(lhs == rhs, [&] {
                  return describe_equal("f=" + f.to_string() + " g=" + g.to_string(), lhs, rhs);
                });
              }
            }
          }
        }
      }
    });
    return rec.take();
  }

  LawResult structure_naturality() {
    Recorder rec(name_, "structure-naturality");
    rec.guarded([&] {
      for (const auto& s : sets_) {
        for (const auto& t : sets_) {
          for (const auto& f : enumerate_functions(s, t)) {
            const SetFunction u_f = forget(which_, functor_on_morphism(construction_, f));
            const SetFunction unit_s = unit(s);
            const SetFunction unit_t = unit(t);
            // Reflection: U(F f) . unit_S = unit_T . f
            // Coreflection: counit_T . U(F f) = f . counit_S
            const SetFunction lhs = left_ ? compose_fn(u_f, unit_s) : compose_fn(unit_t, u_f);
            const SetFunction rhs = left_ ? compose_fn(unit_t, f) : compose_fn(f, unit_s);
            rec.check(lhs == rhs, [&] { return describe_equal("f=" + f.to_string(), lhs, rhs); });
          }
        }
      }
    });
    return rec.take();
  }

  std::pair<LawResult, LawResult> existence_and_uniqueness() {
    Recorder exist(name_, "existence");
    Recorder unique(name_, "uniqueness");
    exist.guarded([&] {
      for (const auto& s : sets_) {
        for (const auto& g : quivers_) {
          const auto candidates = mediating_hom_set(which_, g, s, caps_);
          for (const auto& phi : set_side(s, g)) {
            const auto result = factorize(which_, g, phi);
            const auto& m = result.mediating;
            const bool valid = !find_square_violation(m.dom(), m.cod(), m.vertex_map(), m.edge_map());
            const SetFunction image = triangle_image(which_, m);
            exist.check(valid && result.identity_witness && image == phi, [&] {
              return describe_equal(pair_instance(s, g) + " phi=" + phi.to_string(), image, phi);
            });
            std::size_t count = 0;
            bool matches = false;
            for (const auto& psi : candidates) {
              if (satisfies_triangle(which_, psi, phi)) {
                ++count;
                matches = matches || psi == m;
              }
            }
            unique.check(count == 1 && matches, [&] {
              return LawFailure{pair_instance(s, g) + " phi=" + phi.to_string(),
                                std::to_string(count) + " factoring morphism(s)" +
                                    (matches ? "" : ", constructed map not among them"),
                                "exactly 1, the constructed map"};
            });
          }
        }
      }
    });
    return {exist.take(), unique.take()};
  }

  LawResult hom_bijection() {
    Recorder rec(name_, "hom-bijection");
    rec.guarded([&] {
      for (const auto& s : sets_) {
        for (const auto& g : quivers_) {
          const auto hom = mediating_hom_set(which_, g, s, caps_);
          const auto maps = set_side(s, g);
          const std::size_t u = forget(which_, g).size();
          const std::uint64_t expected = left_ ? power(u, s.size()) : power(s.size(), u);
          std::string problem;
          if (hom.size() != expected) problem = "hom-set size " + std::to_string(hom.size());
          if (problem.empty() && maps.size() != hom.size()) problem = "set-side size " + std::to_string(maps.size());
          std::vector<bool> hit(hom.size(), false);
          for (std::size_t k = 0; problem.empty() && k < maps.size(); ++k) {
            const auto psi = transpose(g, maps[k]);
            auto it = std::find(hom.begin(), hom.end(), psi);
            if (it == hom.end()) {
              problem = "transpose of " + maps[k].to_string() + " not in hom-set";
            } else if (hit[static_cast<std::size_t>(it - hom.begin())]) {
              problem = "transpose of " + maps[k].to_string() + " repeats";
            } else {
              hit[static_cast<std::size_t>(it - hom.begin())] = true;
            }
          }
          for (std::size_t k = 0; problem.empty() && k < hom.size(); ++k) {
            if (!(transpose(g, triangle_image(which_, hom[k])) == hom[k])) {
              problem = "round trip moves " + hom[k].to_string();
            }
          }
          rec.check(problem.empty(), [&] {
            return LawFailure{pair_instance(s, g), problem, "bijection of size " + std::to_string(expected)};
          });
        }
      }
    });
    return rec.take();
  }

  LawResult naturality_set() {
    Recorder rec(name_, "naturality-set");
    rec.guarded([&] {
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        for (std::size_t j = 0; j < sets_.size(); ++j) {
          // Reflections: f: S' -> S precomposed; coreflections: f: S -> S' postcomposed.
          for (const auto& f : enumerate_functions(sets_[i], sets_[j])) {
            const auto ff = functor_on_morphism(construction_, f);
            const FiniteSet& s = left_ ? sets_[j] : sets_[i];
            for (const auto& g : quivers_) {
              for (const auto& phi : set_side(s, g)) {
                const auto lhs = left_ ? transpose(g, compose_fn(phi, f)) : transpose(g, compose_fn(f, phi));
                const auto rhs = left_ ? compose_morphism(transpose(g, phi), ff) : compose_morphism(ff, transpose(g, phi));
                rec.check(lhs == rhs, [&] {
                  return describe_equal("f=" + f.to_string() + " G=" + g.to_string() + " phi=" + phi.to_string(), lhs, rhs);
                });
              }
            }
          }
        }
      }
    });
    return rec.take();
  }

  LawResult naturality_quiver() {
    Recorder rec(name_, "naturality-quiver");
    rec.guarded([&] {
      for (const auto& s : sets_) {
        for (std::size_t a = 0; a < quivers_.size(); ++a) {
          for (std::size_t b = 0; b < quivers_.size(); ++b) {
            const auto& hs = homs(a, b);
            if (hs.empty()) continue;
            // Reflections: h: G -> G' postcomposed with phi: S -> U(G).
            // Coreflections: h: G' -> G precomposed with phi: U(G) -> S.
            const Quiver& g = left_ ? quivers_[a] : quivers_[b];
            const auto phis = set_side(s, g);
            for (const auto& h : hs) {
              const SetFunction& uh = forget(which_, h);
              for (const auto& phi : phis) {
                const auto lhs = left_ ? transpose(quivers_[b], compose_fn(uh, phi))
                                       : transpose(quivers_[a], compose_fn(phi, uh));
                const auto rhs = left_ ? compose_morphism(h, transpose(g, phi)) : compose_morphism(transpose(g, phi), h);
                rec.check(lhs == rhs, [&] {
                  return describe_equal("S=" + s.to_string() + " h=" + h.to_string() + " phi=" + phi.to_string(), lhs, rhs);
                });
              }
            }
          }
        }
      }
    });
    return rec.take();
  }

  LawResult derived_naturality() {
    Recorder rec(name_, "derived-naturality");
    rec.guarded([&] {
      std::vector<QuiverMorphism> derived;
      derived.reserve(quivers_.size());
      for (const auto& g : quivers_) derived.push_back(derived_structure_map(which_, g));
      for (std::size_t a = 0; a < quivers_.size(); ++a) {
        for (std::size_t b = 0; b < quivers_.size(); ++b) {
          for (const auto& h : homs(a, b)) {
            const auto fuh = functor_on_morphism(construction_, forget(which_, h));
            // Counit: h . c_G = c_G' . F(U h).  Unit: F(U h) . u_G = u_G' . h.
            const auto lhs = left_ ? compose_morphism(h, derived[a]) : compose_morphism(fuh, derived[a]);
            const auto rhs = left_ ? compose_morphism(derived[b], fuh) : compose_morphism(derived[b], h);
            rec.check(lhs == rhs, [&] { return describe_equal("h=" + h.to_string(), lhs, rhs); });
          }
        }
      }
    });
    return rec.take();
  }

  LawResult triangle_set() {
    Recorder rec(name_, "triangle-set");
    rec.guarded([&] {
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        const auto f_unit = functor_on_morphism(construction_, unit(sets_[i]));
        const auto derived = derived_structure_map(which_, built_[i]);
        const auto lhs = left_ ? compose_morphism(derived, f_unit) : compose_morphism(f_unit, derived);
        const auto rhs = identity_morphism(built_[i]);
        rec.check(lhs == rhs, [&] { return describe_equal(set_instance(sets_[i]), lhs, rhs); });
      }
    });
    return rec.take();
  }

  LawResult triangle_quiver() {
    Recorder rec(name_, "triangle-quiver");
    rec.guarded([&] {
      for (const auto& g : quivers_) {
        const FiniteSet& ug = forget(which_, g);
        const auto derived = derived_structure_map(which_, g);
        const SetFunction& u_derived = forget(which_, derived);
        const SetFunction lhs = left_ ? compose_fn(u_derived, unit(ug)) : compose_fn(unit(ug), u_derived);
        const SetFunction rhs = identity_fn(ug);
        rec.check(lhs == rhs, [&] { return describe_equal("G=" + g.to_string(), lhs, rhs); });
      }
    });
    return rec.take();
  }

  Adjunction which_;
  Construction construction_;
  bool left_;
  std::span<const FiniteSet> sets_;
  std::span<const Quiver> quivers_;
  SizeCaps caps_;
  std::string name_;
  std::vector<Quiver> built_;
  std::vector<std::vector<QuiverMorphism>> quiver_homs_;
  std::vector<bool> computed_;
};

}  // namespace

std::string_view to_string(Adjunction which) noexcept {
  switch (which) {
    case Adjunction::IV: return "I-|V";
    case Adjunction::ME: return "M-|E";
    case Adjunction::VK: return "V-|K";
    case Adjunction::EB: return "E-|B";
  }
  return "?";
}

Construction construction_of(Adjunction which) noexcept {
  switch (which) {
    case Adjunction::IV: return Construction::I;
    case Adjunction::ME: return Construction::M;
    case Adjunction::VK: return Construction::K;
    case Adjunction::EB: return Construction::B;
  }
  return Construction::I;
}

StructureMap structure_map_of(Adjunction which) noexcept {
  switch (which) {
    case Adjunction::IV: return StructureMap::Eta;
    case Adjunction::ME: return StructureMap::Theta;
    case Adjunction::VK: return StructureMap::Zeta;
    case Adjunction::EB: return StructureMap::Epsilon;
  }
  return StructureMap::Eta;
}

bool is_reflection(Adjunction which) noexcept {
  return which == Adjunction::IV || which == Adjunction::ME;
}

const FiniteSet& forget(Adjunction which, const Quiver& g) noexcept {
  return which == Adjunction::IV || which == Adjunction::VK ? vertex_functor(g) : edge_functor(g);
}

const SetFunction& forget(Adjunction which, const QuiverMorphism& phi) noexcept {
  return which == Adjunction::IV || which == Adjunction::VK ? vertex_functor(phi) : edge_functor(phi);
}

FactorizationResult reflect_vertices(const Quiver& g, const SetFunction& phi,
                                     const std::optional<SizeCaps>& certify) {
  require_equal_sets(phi.codomain(), g.vertices(), "codomain of phi");
  auto mediating = validate_morphism(empty_quiver(phi.domain()), g, phi, empty_fn(g.edges()));
  return finish(Adjunction::IV, std::move(mediating), phi, certify);
}

FactorizationResult reflect_edges(const Quiver& g, const SetFunction& phi,
                                  const std::optional<SizeCaps>& certify) {
  require_equal_sets(phi.codomain(), g.edges(), "codomain of phi");
  const FiniteSet& s = phi.domain();
  auto vertex_map = SetFunction::tabulate(tagged_double(s), g.vertices(), [&](const std::string& js) {
    auto parts = split_pair(js);
    const std::string& edge = phi(parts->second);
    return parts->first == "0" ? g.source()(edge) : g.target()(edge);
  });
  auto mediating = validate_morphism(independent_edges(s), g, vertex_map, phi);
  return finish(Adjunction::ME, std::move(mediating), phi, certify);
}

FactorizationResult coreflect_vertices(const Quiver& g, const SetFunction& phi,
                                       const std::optional<SizeCaps>& certify) {
  require_equal_sets(phi.domain(), g.vertices(), "domain of phi");
  const FiniteSet& s = phi.codomain();
  auto edge_map = SetFunction::tabulate(g.edges(), square(s), [&](const std::string& e) {
    return pair_label(phi(g.source()(e)), phi(g.target()(e)));
  });
  auto mediating = validate_morphism(g, complete_quiver(s), phi, edge_map);
  return finish(Adjunction::VK, std::move(mediating), phi, certify);
}

FactorizationResult coreflect_edges(const Quiver& g, const SetFunction& phi,
                                    const std::optional<SizeCaps>& certify) {
  require_equal_sets(phi.domain(), g.edges(), "domain of phi");
  auto mediating = validate_morphism(g, bouquet(phi.codomain()), constant_fn(g.vertices()), phi);
  return finish(Adjunction::EB, std::move(mediating), phi, certify);
}

FactorizationResult factorize(Adjunction which, const Quiver& g, const SetFunction& phi,
                              const std::optional<SizeCaps>& certify) {
  switch (which) {
    case Adjunction::IV: return reflect_vertices(g, phi, certify);
    case Adjunction::ME: return reflect_edges(g, phi, certify);
    case Adjunction::VK: return coreflect_vertices(g, phi, certify);
    case Adjunction::EB: return coreflect_edges(g, phi, certify);
  }
  throw ConstraintError("unknown adjunction");
}

std::vector<QuiverMorphism> mediating_hom_set(Adjunction which, const Quiver& g, const FiniteSet& s,
                                              const SizeCaps& caps) {
  const Quiver built = construct(construction_of(which), s);
  return is_reflection(which) ? enumerate_homs(built, g, caps) : enumerate_homs(g, built, caps);
}

SetFunction triangle_image(Adjunction which, const QuiverMorphism& psi) {
  const StructureMap structure = structure_map_of(which);
  if (is_reflection(which)) {
    return compose_fn(forget(which, psi), unit_or_counit(structure, forget(which, psi.dom())));
  }
  return compose_fn(unit_or_counit(structure, forget(which, psi.cod())), forget(which, psi));
}

bool satisfies_triangle(Adjunction which, const QuiverMorphism& psi, const SetFunction& phi) {
  return triangle_image(which, psi) == phi;
}

QuiverMorphism derived_structure_map(Adjunction which, const Quiver& g) {
  return factorize(which, g, identity_fn(forget(which, g))).mediating;
}

// ---------------------------------------------------------------------------

bool LawReport::passed() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed(); });
}

std::size_t LawReport::total_instances() const noexcept {
  std::size_t total = 0;
  for (const auto& r : results) total += r.instances;
  return total;
}

const LawResult* LawReport::find(std::string_view subject, std::string_view law) const noexcept {
  for (const auto& r : results) {
    if (r.subject == subject && r.law == law) return &r;
  }
  return nullptr;
}

void LawReport::require() const {
  for (const auto& r : results) {
    if (r.passed()) continue;
    if (r.failures.empty()) throw LawViolation(r.subject + " " + r.law, "unrecorded", "?", "?");
    const auto& f = r.failures.front();
    throw LawViolation(r.subject + " " + r.law, f.instance, f.lhs, f.rhs);
  }
}

void LawReport::append(const LawReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

LawReport check_adjunction_laws(Adjunction which, std::span<const FiniteSet> sets,
                                std::span<const Quiver> quivers, const SizeCaps& caps) {
  return AdjunctionChecker(which, sets, quivers, caps).run();
}

LawReport check_category_laws(std::span<const Quiver> quivers, const SizeCaps& caps,
                              std::size_t max_triples) {
  const std::size_t n = quivers.size();
  std::vector<std::vector<QuiverMorphism>> homs(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) homs[a * n + b] = enumerate_homs(quivers[a], quivers[b], caps);
  }
  auto hom = [&](std::size_t a, std::size_t b) -> const std::vector<QuiverMorphism>& { return homs[a * n + b]; };

  Recorder identity("Quiv", "identity");
  Recorder vertex("Quiv", "vertex-functor");
  Recorder edge("Quiv", "edge-functor");
  Recorder assoc("Quiv", "associativity");

  identity.guarded([&] {
    for (std::size_t a = 0; a < n; ++a) {
      const auto id_a = identity_morphism(quivers[a]);
      vertex.check(vertex_functor(id_a) == identity_fn(vertex_functor(quivers[a])),
                   [&] { return describe_equal("id at " + quivers[a].to_string(), vertex_functor(id_a), identity_fn(quivers[a].vertices())); });
      edge.check(edge_functor(id_a) == identity_fn(edge_functor(quivers[a])),
                 [&] { return describe_equal("id at " + quivers[a].to_string(), edge_functor(id_a), identity_fn(quivers[a].edges())); });
      for (std::size_t b = 0; b < n; ++b) {
        const auto id_b = identity_morphism(quivers[b]);
        for (const auto& h : hom(a, b)) {
          const auto left = compose_morphism(id_b, h);
          const auto right = compose_morphism(h, id_a);
          identity.check(left == h && right == h, [&] {
            return LawFailure{"h=" + h.to_string(), left.to_string() + " / " + right.to_string(), h.to_string()};
          });
        }
      }
    }
  });

  vertex.guarded([&] {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (const auto& f : hom(a, b)) {
            for (const auto& g : hom(b, c)) {
              const auto gf = compose_morphism(g, f);
              const auto v = compose_fn(vertex_functor(g), vertex_functor(f));
              const auto e = compose_fn(edge_functor(g), edge_functor(f));
              vertex.check(vertex_functor(gf) == v, [&] { return describe_equal("g.f=" + gf.to_string(), vertex_functor(gf), v); });
              edge.check(edge_functor(gf) == e, [&] { return describe_equal("g.f=" + gf.to_string(), edge_functor(gf), e); });
            }
          }
        }
      }
    }
  });

  assoc.guarded([&] {
    auto check_triple = [&](const QuiverMorphism& f, const QuiverMorphism& g, const QuiverMorphism& h) {
      const auto lhs = compose_morphism(compose_morphism(h, g), f);
      const auto rhs = compose_morphism(h, compose_morphism(g, f));
      assoc.check(lhs == rhs, [&] {
        return describe_equal("f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string(), lhs, rhs);
      });
    };
    // Number of composable morphism triples, to decide between exhaustive and sampled runs.
    std::vector<std::uint64_t> into(n, 0), out_of(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        into[b] += hom(a, b).size();
        out_of[a] += hom(a, b).size();
      }
    }
    std::uint64_t triples = 0;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) triples += into[b] * hom(b, c).size() * out_of[c];
    }
    if (triples <= max_triples) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d)
              for (const auto& f : hom(a, b))
                for (const auto& g : hom(b, c))
                  for (const auto& h : hom(c, d)) check_triple(f, g, h);
      return;
    }
    // Fixed-seed walk: a random morphism, then random morphisms out of its codomain.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    auto pick_from = [&](std::size_t a, std::size_t& target) -> const QuiverMorphism& {
      std::uint64_t r = rng() % out_of[a];
      for (std::size_t b = 0; b < n; ++b) {
        if (r < hom(a, b).size()) {
          target = b;
          return hom(a, b)[r];
        }
        r -= hom(a, b).size();
      }
      throw ConstraintError("sampling ran past the hom-sets");
    };
    for (std::size_t k = 0; k < max_triples; ++k) {
      std::size_t a = rng() % n, b = 0, c = 0, d = 0;
      const auto& f = pick_from(a, b);
      const auto& g = pick_from(b, c);
      const auto& h = pick_from(c, d);
      check_triple(f, g, h);
    }
  });

  LawReport report;
  report.results.push_back(identity.take());
  report.results.push_back(assoc.take());
  report.results.push_back(vertex.take());
  report.results.push_back(edge.take());
  return report;
}

}  // namespace quiverlab

// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Certification criteria (2-4) are re-derived from the table-based reference
// in support/brute_force.hpp, not from the library's own law report.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiverlab/adjunction.hpp"
#include "quiverlab/cli.hpp"
#include "quiverlab/io.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace quiverlab;

namespace {

// Pinned limits.
constexpr double kCategoryLawSeconds = 60.0;
constexpr double kCertificationSeconds = 120.0;
constexpr std::size_t kMaxSet = 2;
constexpr std::size_t kMaxRetractionSet = 3;
constexpr std::size_t kMaxVertices = 2;
constexpr std::size_t kMaxEdges = 2;
constexpr std::size_t kAssociativityTriples = 200000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!outcome.ok) ++failures;
  std::printf("%s  [%d] %s (%.2fs)%s%s\n", outcome.ok ? "PASS" : "FAIL", number, title, seconds,
              outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string tables(const brute::Table& fv, const brute::Table& fe) {
  std::ostringstream out;
  out << "vmap{";
  for (const auto& [x, y] : fv) out << x << "->" << y << ";";
  out << "} emap{";
  for (const auto& [x, y] : fe) out << x << "->" << y << ";";
  out << "}";
  return out.str();
}

// Criteria 2 and 3: enumerate the hom-set with the reference, keep the
// morphisms whose forgotten component equals phi, expect exactly the
// library's mediating morphism.
Outcome certify(std::initializer_list<Adjunction> which_list) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  const auto sets = set_catalogue(kMaxSet);
  const auto quivers = quiver_catalogue(kMaxVertices, kMaxEdges);
  std::size_t instances = 0;
  for (Adjunction which : which_list) {
    const bool vertex_side = which == Adjunction::IV || which == Adjunction::VK;
    for (const auto& s : sets) {
      const Quiver fs = construct(construction_of(which), s);
      for (const auto& g : quivers) {
        const auto raw_fs = fixtures::to_raw(fs);
        const auto raw_g = fixtures::to_raw(g);
        const auto homs = is_reflection(which) ? brute::homs(raw_fs, raw_g) : brute::homs(raw_g, raw_fs);
        const FiniteSet& ug = forget(which, g);
        const auto phis = is_reflection(which) ? enumerate_functions(s, ug) : enumerate_functions(ug, s);
        for (const auto& phi : phis) {
          ++instances;
          const auto r = factorize(which, g, phi, SizeCaps{});
          const auto witness = std::string(to_string(which)) + " S=" + s.to_string() + " G=" + g.to_string() +
                               " phi=" + phi.to_string();
          const auto& m = r.mediating;
          if (!r.identity_witness || !r.uniqueness_witness || *r.uniqueness_witness != 1) {
            outcome.fail("library certificate missing at " + witness);
          }
          if (!satisfies_triangle(which, m, phi)) outcome.fail("triangle fails at " + witness);
          const auto mv = fixtures::to_table(m.vertex_map());
          const auto me = fixtures::to_table(m.edge_map());
          const bool valid = is_reflection(which) ? brute::is_hom(raw_fs, raw_g, mv, me)
                                                  : brute::is_hom(raw_g, raw_fs, mv, me);
          if (!valid) outcome.fail("mediating morphism invalid at " + witness);

          // With every unit and counit an identity, the triangle says that
          // the forgotten component of psi is phi itself.
          const auto target = fixtures::to_table(phi);
          std::size_t matching = 0;
          bool equal = false;
          for (const auto& [fv, fe] : homs) {
            if ((vertex_side ? fv : fe) != target) continue;
            ++matching;
            equal = equal || (fv == mv && fe == me);
          }
          if (matching != 1 || !equal) {
            outcome.fail(std::to_string(matching) + " factoring morphism(s) at " + witness + ", mediating " +
                         tables(mv, me));
          }
        }
      }
    }
  }
  const double seconds = elapsed_since(start);
  if (seconds >= kCertificationSeconds) outcome.fail("took " + std::to_string(seconds) + "s");
  if (outcome.ok) outcome.detail = std::to_string(instances) + " instances, exactly one factoring morphism each";
  return outcome;
}

Outcome category_laws() {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  const auto quivers = quiver_catalogue(kMaxVertices, kMaxEdges);
  const auto report = check_category_laws(quivers, {}, kAssociativityTriples);
  for (const auto& r : report.results) {
    if (!r.passed()) outcome.fail(r.subject + " " + r.law + " failed " + std::to_string(r.failed) + " time(s)");
  }
  for (const char* law : {"identity", "associativity"}) {
    const auto* r = report.find("Quiv", law);
    if (!r || r->instances == 0) outcome.fail(std::string("law '") + law + "' did not run");
  }
  const double seconds = elapsed_since(start);
  if (seconds >= kCategoryLawSeconds) outcome.fail("took " + std::to_string(seconds) + "s");
  if (outcome.ok) {
    outcome.detail = std::to_string(quivers.size()) + " quivers, identity " +
                     std::to_string(report.find("Quiv", "identity")->instances) + ", associativity " +
                     std::to_string(report.find("Quiv", "associativity")->instances) + " instances";
  }
  return outcome;
}

Outcome cardinalities() {
  Outcome outcome;
  const auto sets = set_catalogue(kMaxSet);
  const auto quivers = quiver_catalogue(kMaxVertices, kMaxEdges);
  std::size_t instances = 0;
  for (Adjunction which : kAllAdjunctions) {
    for (const auto& s : sets) {
      const Quiver fs = construct(construction_of(which), s);
      for (const auto& g : quivers) {
        ++instances;
        const std::size_t u = forget(which, g).size();
        const std::size_t expected = is_reflection(which) ? brute::ipow(u, s.size()) : brute::ipow(s.size(), u);
        const auto raw = is_reflection(which) ? brute::homs(fixtures::to_raw(fs), fixtures::to_raw(g))
                                              : brute::homs(fixtures::to_raw(g), fixtures::to_raw(fs));
        const auto enumerated = is_reflection(which) ? enumerate_homs(fs, g) : enumerate_homs(g, fs);
        if (raw.size() != expected || enumerated.size() != expected) {
          outcome.fail(std::string(to_string(which)) + " S=" + s.to_string() + " G=" + g.to_string() + ": expected " +
                       std::to_string(expected) + ", reference " + std::to_string(raw.size()) + ", library " +
                       std::to_string(enumerated.size()));
        }
      }
    }
  }
  if (outcome.ok) outcome.detail = std::to_string(instances) + " hom-sets";
  return outcome;
}

Outcome retractions() {
  Outcome outcome;
  const auto sets = set_catalogue(kMaxRetractionSet);
  std::size_t morphisms = 0;
  for (Adjunction which : kAllAdjunctions) {
    const Construction c = construction_of(which);
    for (const auto& s : sets) {
      if (!(forget(which, construct(c, s)) == s)) outcome.fail(std::string(to_string(which)) + " on " + s.to_string());
      for (const auto& t : sets) {
        for (const auto& f : enumerate_functions(s, t)) {
          ++morphisms;
          if (!(forget(which, functor_on_morphism(c, f)) == f)) {
            outcome.fail(std::string(to_string(which)) + " on " + f.to_string());
          }
        }
      }
    }
  }
  if (outcome.ok) outcome.detail = std::to_string(morphisms) + " functions, 4 composites";
  return outcome;
}

Outcome naturality_and_triangles() {
  Outcome outcome;
  const auto sets = set_catalogue(kMaxSet);
  const auto quivers = quiver_catalogue(kMaxVertices, kMaxEdges);
  std::size_t instances = 0;
  for (Adjunction which : kAllAdjunctions) {
    const auto report = check_adjunction_laws(which, sets, quivers);
    for (const char* law : {"structure-naturality", "naturality-set", "naturality-quiver", "derived-naturality",
                            "triangle-set", "triangle-quiver"}) {
      const auto* r = report.find(to_string(which), law);
      if (!r) {
        outcome.fail(std::string(to_string(which)) + " " + law + " missing");
      } else if (!r->passed() || r->instances == 0) {
        outcome.fail(std::string(to_string(which)) + " " + law + " failed " + std::to_string(r->failed) + " of " +
                     std::to_string(r->instances));
      } else {
        instances += r->instances;
      }
    }
  }
  if (outcome.ok) outcome.detail = std::to_string(instances) + " instances over 4 adjunctions";
  return outcome;
}

Outcome worked_examples() {
  Outcome outcome;
  const Quiver g = fixtures::worked_g();
  const Quiver h = fixtures::worked_h();
  try {
    validate_morphism(g, h, fixtures::fn(g.vertices(), h.vertices(), {{"0", "2"}, {"1", "2"}}),
                      fixtures::fn(g.edges(), h.edges(), {{"e", "h"}, {"f", "i"}, {"g", "i"}}));
  } catch (const Error& e) {
    outcome.fail(std::string("G -> H rejected: ") + e.what());
  }
  if (!(load_quiver(QUIVERLAB_TEST_DATA "/gG.qv") == g)) outcome.fail("G document does not parse to G");

  const Quiver k = complete_quiver(FiniteSet{"0", "1"});
  std::set<std::tuple<std::string, std::string, std::string>> drawn = {
      {"(0,0)", "0", "0"}, {"(0,1)", "0", "1"}, {"(1,0)", "1", "0"}, {"(1,1)", "1", "1"}};
  std::set<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : k.edge_list()) edges.insert({e.label, e.source, e.target});
  if (edges != drawn || k.vertices() != FiniteSet{"0", "1"}) outcome.fail("K_{0,1} is " + k.to_string());

  const Quiver b = bouquet(FiniteSet{"e", "f", "g", "h"});
  bool loops = b.vertices().size() == 1 && b.edges().size() == 4;
  for (const auto& e : b.edge_list()) loops = loops && e.source == e.target;
  if (!loops) outcome.fail("B_{e,f,g,h} is " + b.to_string());
  return outcome;
}

Outcome cli() {
  Outcome outcome;
  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    args.insert(args.begin(), "quiverlab");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
  };
  std::string laws_out;
  const int laws = run({"laws", "--max-set", "2", "--max-v", "2", "--max-e", "2"}, &laws_out);
  if (laws != 0) outcome.fail("laws exited " + std::to_string(laws));

  std::size_t round_trips = 0;
  for (const auto& q : quiver_catalogue(kMaxVertices, kMaxEdges)) {
    ++round_trips;
    const auto text = serialize_quiver(q);
    if (serialize_quiver(parse_quiver(text)) != text) outcome.fail("round trip differs for " + q.to_string());
  }

  std::string validate_out;
  const int validate = run({"validate", QUIVERLAB_TEST_DATA "/broken.qm"}, &validate_out);
  if (validate != 1) outcome.fail("validate on a broken square exited " + std::to_string(validate));
  if (validate_out.find("edge 'e'") == std::string::npos) outcome.fail("validate did not name edge e: " + validate_out);

  if (outcome.ok) outcome.detail = "laws exit 0, " + std::to_string(round_trips) + " round trips, validate exit 1 at edge e";
  return outcome;
}

}  // namespace

int main() {
  criterion(1, "category laws over the catalogue", category_laws);
  criterion(2, "reflection certification (I-|V, M-|E)", [] { return certify({Adjunction::IV, Adjunction::ME}); });
  criterion(3, "coreflection certification (V-|K, E-|B)", [] { return certify({Adjunction::VK, Adjunction::EB}); });
  criterion(4, "hom-set cardinalities", cardinalities);
  criterion(5, "V.I, E.M, V.K, E.B are identities", retractions);
  criterion(6, "naturality and triangle identities", naturality_and_triangles);
  criterion(7, "worked examples", worked_examples);
  criterion(8, "command line", cli);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}

#include "quiverlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>

#include "quiverlab/constructions.hpp"
#include "quiverlab/io.hpp"
#include "quiverlab/oracle.hpp"

namespace quiverlab {

namespace {

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

void print_maps(std::ostream& out, const QuiverMorphism& phi) {
  const auto& fv = phi.vertex_map();
  for (std::size_t i = 0; i < fv.domain().size(); ++i) {
    out << "vmap " << fv.domain()[i] << " -> " << fv.codomain()[fv.image_index(i)] << "\n";
  }
  const auto& fe = phi.edge_map();
  for (std::size_t i = 0; i < fe.domain().size(); ++i) {
    out << "emap " << fe.domain()[i] << " -> " << fe.codomain()[fe.image_index(i)] << "\n";
  }
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const auto loaded = load_morphism(file);
  try {
    validate_morphism(loaded.dom, loaded.cod, loaded.vertex_map, loaded.edge_map);
  } catch (const SquareViolation& e) {
    out << "invalid: " << e.what() << "\n";
    return kExitLawFailure;
  } catch (const DomainMismatch& e) {
    out << "invalid: " << e.what() << "\n";
    return kExitLawFailure;
  }
  out << "valid: " << loaded.dom.edges().size() << " edge(s) checked, both squares commute\n";
  return kExitOk;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& elements, std::ostream& out) {
  static const std::map<std::string, Construction> kinds = {
      {"empty", Construction::I}, {"matching", Construction::M}, {"complete", Construction::K}, {"bouquet", Construction::B}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw ConstraintError("unknown construction '" + kind + "'");
  for (const auto& element : elements) {
    if (!is_valid_label(element)) throw ConstraintError("invalid element label '" + element + "'");
  }
  const Quiver q = construct(it->second, FiniteSet(elements));
  out << serialize_quiver(q, std::string(to_string(it->second)));
  return kExitOk;
}

int cmd_hom(const std::string& g_file, const std::string& h_file, bool count_only, std::ostream& out) {
  const Quiver g = load_quiver(g_file);
  const Quiver h = load_quiver(h_file);
  const auto homs = enumerate_homs(g, h);
  if (count_only) {
    out << homs.size() << "\n";
    return kExitOk;
  }
  for (std::size_t k = 0; k < homs.size(); ++k) {
    if (k) out << "\n";
    out << "# morphism " << (k + 1) << "\n";
    print_maps(out, homs[k]);
  }
  out << "# " << homs.size() << " morphism(s)\n";
  return kExitOk;
}

int cmd_factorize(const std::string& kind, const std::string& quiver_file, const std::string& map_file,
                  std::ostream& out) {
  static const std::map<std::string, Adjunction> kinds = {{"reflect-v", Adjunction::IV},
                                                          {"reflect-e", Adjunction::ME},
                                                          {"coreflect-v", Adjunction::VK},
                                                          {"coreflect-e", Adjunction::EB}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw ConstraintError("unknown factorization '" + kind + "'");
  const Adjunction which = it->second;
  const Quiver g = load_quiver(quiver_file);
  FunctionDocument doc;
  try {
    doc = parse_function_document(read_file(map_file));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), map_file);
  }
  const FiniteSet& fixed = forget(which, g);
  const SetFunction phi = is_reflection(which) ? doc.to_function(std::nullopt, fixed) : doc.to_function(fixed);

  const SizeCaps caps;
  const auto result = factorize(which, g, phi, caps);
  const FiniteSet& s = is_reflection(which) ? phi.domain() : phi.codomain();
  const std::size_t hom_size = mediating_hom_set(which, g, s, caps).size();
  out << "# " << to_string(which) << " factorization of " << phi.to_string() << "\n";
  out << serialize_morphism(result.mediating);
  out << "# triangle: " << (result.identity_witness ? "holds" : "FAILS") << "\n";
  out << "# factoring morphisms: " << *result.uniqueness_witness << " of " << hom_size << "\n";
  return kExitOk;
}

int cmd_laws(std::size_t max_set, std::size_t max_v, std::size_t max_e, bool verbose, std::ostream& out) {
  const auto sets = set_catalogue(max_set);
  const auto quivers = quiver_catalogue(max_v, max_e);
  out << "# catalogue: " << sets.size() << " set(s) up to size " << max_set << ", " << quivers.size()
      << " quiver(s) up to " << max_v << " vertices and " << max_e << " edges\n";
  LawReport report = check_category_laws(quivers);
  for (Adjunction which : kAllAdjunctions) report.append(check_adjunction_laws(which, sets, quivers));
  out << format_law_report(report, verbose);
  return report.passed() ? kExitOk : kExitLawFailure;
}

int cmd_export_dot(const std::string& file, std::ostream& out) {
  QuiverDocument doc;
  try {
    doc = parse_quiver_document(read_file(file));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), file);
  }
  out << export_dot(doc.to_quiver(), doc.name.value_or("quiver"));
  return kExitOk;
}

}  // namespace

std::string format_law_report(const LawReport& report, bool verbose) {
  std::string text;
  std::size_t failed_laws = 0;
  for (const auto& r : report.results) {
    text += r.passed() ? "PASS  " : "FAIL  ";
    text += pad(r.subject, 6) + pad(r.law, 22) + std::to_string(r.instances) + " instance(s)";
    if (!r.passed()) {
      ++failed_laws;
      text += ", " + std::to_string(r.failed) + " failed";
    }
    text += "\n";
    const std::size_t shown = verbose ? r.failures.size() : std::min<std::size_t>(r.failures.size(), 1);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& f = r.failures[i];
      text += "      at " + f.instance + ": " + f.lhs + " != " + f.rhs + "\n";
    }
  }
  text += "summary: " + std::to_string(report.results.size()) + " law(s), " +
          std::to_string(report.total_instances()) + " instance(s), " + std::to_string(failed_laws) + " failed\n";
  return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quivers, their adjunctions with finite sets, and exhaustive law checks", "quiverlab"};
  app.require_subcommand(1);

  std::string morphism_file;
  auto* validate = app.add_subcommand("validate", "Check both commuting squares of a morphism file");
  validate->add_option("morphism-file", morphism_file)->required();

  std::string kind;
  std::vector<std::string> elements;
  auto* construct_cmd = app.add_subcommand("construct", "Print I_S, M_S, K_S or B_S");
  construct_cmd->add_option("kind", kind, "empty | matching | complete | bouquet")->required();
  construct_cmd->add_option("elements", elements, "Elements of S");

  std::string g_file, h_file;
  bool count_only = false;
  auto* hom = app.add_subcommand("hom", "Enumerate all quiver maps G -> H");
  hom->add_option("G", g_file)->required();
  hom->add_option("H", h_file)->required();
  hom->add_flag("--count", count_only, "Print only the number of maps");

  std::string factor_kind, quiver_file, map_file;
  auto* factor = app.add_subcommand("factorize", "Mediating morphism of a universal property, certified unique");
  factor->add_option("kind", factor_kind, "reflect-v | reflect-e | coreflect-v | coreflect-e")->required();
  factor->add_option("quiver-file", quiver_file)->required();
  factor->add_option("map-file", map_file)->required();

  std::size_t max_set = 2, max_v = 2, max_e = 2;
  bool verbose = false;
  auto* laws = app.add_subcommand("laws", "Run every category and adjunction law over generated catalogues");
  laws->add_option("--max-set", max_set, "Largest set size")->capture_default_str();
  laws->add_option("--max-v", max_v, "Largest vertex count")->capture_default_str();
  laws->add_option("--max-e", max_e, "Largest edge count")->capture_default_str();
  laws->add_flag("--verbose", verbose, "List every recorded failure");

  std::string dot_file;
  auto* dot = app.add_subcommand("export-dot", "Render a quiver file as Graphviz DOT");
  dot->add_option("quiver-file", dot_file)->required();

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(morphism_file, out);
    if (*construct_cmd) return cmd_construct(kind, elements, out);
    if (*hom) return cmd_hom(g_file, h_file, count_only, out);
    if (*factor) return cmd_factorize(factor_kind, quiver_file, map_file, out);
    if (*laws) return cmd_laws(max_set, max_v, max_e, verbose, out);
    if (*dot) return cmd_export_dot(dot_file, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const LawViolation& e) {
    err << "error: " << e.what() << "\n";
    return kExitLawFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace quiverlab

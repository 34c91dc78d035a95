#pragma once

// Line-oriented text formats.
//
// Quiver document (.qv):
//
//   # comment (anywhere; runs to end of line)
//   quiver <name>              optional, at most once
//   vertex <label>
//   edge <label> <source> <target>
//
// Morphism document (.qm):
//
//   dom <path>                 or an inline block:  dom {  ...quiver lines...  }
//   cod <path>                 likewise
//   vmap <label> -> <label>
//   emap <label> -> <label>
//
// Paths are resolved relative to the directory of the morphism file.
//
// Function document (.qf), used for the set map given to a factorization:
//
//   domain <label>...          optional; otherwise the keys of the map lines
//   codomain <label>...        optional; otherwise supplied by the caller
//   map <label> -> <label>
//
// Tokens are separated by blanks. Labels follow the grammar in setmodel.hpp.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct QuiverDocument {
  std::optional<std::string> name;
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;

  /// Throws ConstraintError for duplicate labels or undeclared endpoints.
  Quiver to_quiver() const;
  static QuiverDocument from_quiver(const Quiver& q, std::optional<std::string> name = std::nullopt);
};

using QuiverRef = std::variant<std::filesystem::path, QuiverDocument>;

struct MorphismDocument {
  QuiverRef dom;
  QuiverRef cod;
  std::vector<std::pair<std::string, std::string>> vertex_map;
  std::vector<std::pair<std::string, std::string>> edge_map;
};

struct FunctionDocument {
  std::optional<std::vector<std::string>> domain;
  std::optional<std::vector<std::string>> codomain;
  std::vector<std::pair<std::string, std::string>> mapping;

  /// Builds the function. Missing declarations fall back to the keys (domain)
  /// and to `default_codomain`, then to the set of values.
  SetFunction to_function(const std::optional<FiniteSet>& default_domain = std::nullopt,
                          const std::optional<FiniteSet>& default_codomain = std::nullopt) const;
};

QuiverDocument parse_quiver_document(std::string_view text);
Quiver parse_quiver(std::string_view text);

/// Canonical text: optional name line, vertices then edges, both sorted.
std::string serialize_quiver(const Quiver& q, const std::optional<std::string>& name = std::nullopt);

MorphismDocument parse_morphism_document(std::string_view text);
FunctionDocument parse_function_document(std::string_view text);

/// Canonical morphism text with inline dom/cod blocks.
std::string serialize_morphism(const QuiverMorphism& phi);

/// Graphviz digraph: one node per vertex, one labeled arrow per edge, sorted.
std::string export_dot(const Quiver& q, std::string_view graph_name = "quiver");

std::string read_file(const std::filesystem::path& path);
Quiver load_quiver(const std::filesystem::path& path);

/// Resolves dom/cod and builds the two maps; does not check the squares.
struct LoadedMorphism {
  Quiver dom;
  Quiver cod;
  SetFunction vertex_map;
  SetFunction edge_map;
};
LoadedMorphism load_morphism(const std::filesystem::path& path);
LoadedMorphism resolve_morphism(const MorphismDocument& doc, const std::filesystem::path& base_dir);

}  // namespace quiverlab

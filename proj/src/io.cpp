#include "quiverlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace quiverlab {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, std::size_t column, const std::string& message) {
  throw ParseError(line.number, column, message);
}

void expect_arity(const Line& line, std::size_t arity, const char* usage) {
  if (line.tokens.size() == arity) return;
  const std::size_t column =
      line.tokens.size() > arity ? line.tokens[arity].column : line.tokens.back().column + line.tokens.back().text.size();
  fail(line, column, std::string("expected '") + usage + "'");
}

std::string label_at(const Line& line, std::size_t index) {
  const Token& token = line.tokens[index];
  if (!is_valid_label(token.text)) fail(line, token.column, "invalid label '" + std::string(token.text) + "'");
  return std::string(token.text);
}

// `<directive> <a> -> <b>`
std::pair<std::string, std::string> arrow_at(const Line& line, const char* usage) {
  expect_arity(line, 4, usage);
  if (line.tokens[2].text != "->") fail(line, line.tokens[2].column, "expected '->'");
  return {label_at(line, 1), label_at(line, 3)};
}

// Consumes quiver directives; returns false for anything else.
bool quiver_line(const Line& line, QuiverDocument& doc) {
  const std::string_view directive = line.tokens.front().text;
  if (directive == "quiver") {
    expect_arity(line, 2, "quiver <name>");
    if (doc.name) fail(line, line.tokens.front().column, "second 'quiver' line");
    if (!is_atom(line.tokens[1].text)) fail(line, line.tokens[1].column, "invalid quiver name");
    doc.name = std::string(line.tokens[1].text);
  } else if (directive == "vertex") {
    expect_arity(line, 2, "vertex <label>");
    doc.vertices.push_back(label_at(line, 1));
  } else if (directive == "edge") {
    expect_arity(line, 4, "edge <label> <source> <target>");
    doc.edges.push_back({label_at(line, 1), label_at(line, 2), label_at(line, 3)});
  } else {
    return false;
  }
  return true;
}

std::vector<std::string> labels_from(const Line& line) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) out.push_back(label_at(line, i));
  return out;
}

std::string render_quiver_lines(const Quiver& q, std::string_view indent) {
  std::string out;
  for (const auto& v : q.vertices()) {
    out += indent;
    out += "vertex " + v + "\n";
  }
  for (const auto& e : q.edge_list()) {
    out += indent;
    out += "edge " + e.label + " " + e.source + " " + e.target + "\n";
  }
  return out;
}

}  // namespace

Quiver QuiverDocument::to_quiver() const {
  FiniteSet vertex_set(vertices);
  for (const auto& edge : edges) {
    for (const auto* end : {&edge.source, &edge.target}) {
      if (!vertex_set.contains(*end)) {
        throw ConstraintError("edge '" + edge.label + "' names undeclared vertex '" + *end + "'");
      }
    }
  }
  return Quiver::from_edges(std::move(vertex_set), edges);
}

QuiverDocument QuiverDocument::from_quiver(const Quiver& q, std::optional<std::string> name) {
  return {std::move(name), q.vertices().labels(), q.edge_list()};
}

QuiverDocument parse_quiver_document(std::string_view text) {
  QuiverDocument doc;
  for (const auto& line : tokenize(text)) {
    if (!quiver_line(line, doc)) {
      fail(line, line.tokens.front().column, "unknown directive '" + std::string(line.tokens.front().text) + "'");
    }
  }
  return doc;
}

Quiver parse_quiver(std::string_view text) { return parse_quiver_document(text).to_quiver(); }

std::string serialize_quiver(const Quiver& q, const std::optional<std::string>& name) {
  std::string out;
  if (name) out += "quiver " + *name + "\n";
  out += render_quiver_lines(q, "");
  return out;
}

MorphismDocument parse_morphism_document(std::string_view text) {
  const auto lines = tokenize(text);
  std::optional<QuiverRef> dom;
  std::optional<QuiverRef> cod;
  MorphismDocument doc;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string_view directive = line.tokens.front().text;
    if (directive == "dom" || directive == "cod") {
      auto& slot = directive == "dom" ? dom : cod;
      expect_arity(line, 2, directive == "dom" ? "dom <path> | dom {" : "cod <path> | cod {");
      if (slot) fail(line, line.tokens.front().column, "second '" + std::string(directive) + "' line");
      if (line.tokens[1].text != "{") {
        slot = std::filesystem::path(std::string(line.tokens[1].text));
        continue;
      }
      QuiverDocument inline_doc;
      std::size_t j = i + 1;
      for (; j < lines.size(); ++j) {
        if (lines[j].tokens.front().text == "}") {
          expect_arity(lines[j], 1, "}");
          break;
        }
        if (!quiver_line(lines[j], inline_doc)) {
          fail(lines[j], lines[j].tokens.front().column,
               "unknown directive '" + std::string(lines[j].tokens.front().text) + "' in quiver block");
        }
      }
      if (j == lines.size()) fail(line, line.tokens[1].column, "unterminated quiver block");
      slot = std::move(inline_doc);
      i = j;
    } else if (directive == "vmap") {
      doc.vertex_map.push_back(arrow_at(line, "vmap <label> -> <label>"));
    } else if (directive == "emap") {
      doc.edge_map.push_back(arrow_at(line, "emap <label> -> <label>"));
    } else {
      fail(line, line.tokens.front().column, "unknown directive '" + std::string(directive) + "'");
    }
  }
  if (!dom) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'dom' line");
  if (!cod) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing 'cod' line");
  doc.dom = std::move(*dom);
  doc.cod = std::move(*cod);
  return doc;
}

FunctionDocument parse_function_document(std::string_view text) {
  FunctionDocument doc;
  for (const auto& line : tokenize(text)) {
    const std::string_view directive = line.tokens.front().text;
    if (directive == "domain" || directive == "codomain") {
      auto& slot = directive == "domain" ? doc.domain : doc.codomain;
      if (slot) fail(line, line.tokens.front().column, "second '" + std::string(directive) + "' line");
      slot = labels_from(line);
    } else if (directive == "map") {
      doc.mapping.push_back(arrow_at(line, "map <label> -> <label>"));
    } else {
      fail(line, line.tokens.front().column, "unknown directive '" + std::string(directive) + "'");
    }
  }
  return doc;
}

namespace {

std::map<std::string, std::string, std::less<>> to_table(const std::vector<std::pair<std::string, std::string>>& pairs,
                                                        const char* what) {
  std::map<std::string, std::string, std::less<>> table;
  for (const auto& [x, y] : pairs) {
    if (!table.emplace(x, y).second) throw ConstraintError(std::string(what) + " maps '" + x + "' twice");
  }
  return table;
}

}  // namespace

SetFunction FunctionDocument::to_function(const std::optional<FiniteSet>& default_domain,
                                          const std::optional<FiniteSet>& default_codomain) const {
  const auto table = to_table(mapping, "function");
  FiniteSet dom_set = [&] {
    if (domain) return FiniteSet(*domain);
    if (default_domain) return *default_domain;
    std::vector<std::string> keys;
    for (const auto& [x, y] : table) keys.push_back(x);
    return FiniteSet(std::move(keys));
  }();
  FiniteSet cod_set = [&] {
    if (codomain) return FiniteSet(*codomain);
    if (default_codomain) return *default_codomain;
    std::set<std::string> values;
    for (const auto& [x, y] : table) values.insert(y);
    return FiniteSet(std::vector<std::string>(values.begin(), values.end()));
  }();
  return SetFunction(std::move(dom_set), std::move(cod_set), table);
}

std::string serialize_morphism(const QuiverMorphism& phi) {
  std::string out = "dom {\n" + render_quiver_lines(phi.dom(), "  ") + "}\n";
  out += "cod {\n" + render_quiver_lines(phi.cod(), "  ") + "}\n";
  const auto& fv = phi.vertex_map();
  for (std::size_t i = 0; i < fv.domain().size(); ++i) {
    out += "vmap " + fv.domain()[i] + " -> " + fv.codomain()[fv.image_index(i)] + "\n";
  }
  const auto& fe = phi.edge_map();
  for (std::size_t i = 0; i < fe.domain().size(); ++i) {
    out += "emap " + fe.domain()[i] + " -> " + fe.codomain()[fe.image_index(i)] + "\n";
  }
  return out;
}

std::string export_dot(const Quiver& q, std::string_view graph_name) {
  std::string out = "digraph \"" + std::string(graph_name) + "\" {\n";
  for (const auto& v : q.vertices()) out += "  \"" + v + "\";\n";
  for (const auto& e : q.edge_list()) {
    out += "  \"" + e.source + "\" -> \"" + e.target + "\" [label=\"" + e.label + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Quiver load_quiver(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_quiver(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
}

LoadedMorphism resolve_morphism(const MorphismDocument& doc, const std::filesystem::path& base_dir) {
  auto resolve = [&](const QuiverRef& ref) {
    if (const auto* path = std::get_if<std::filesystem::path>(&ref)) {
      return load_quiver(path->is_absolute() ? *path : base_dir / *path);
    }
    return std::get<QuiverDocument>(ref).to_quiver();
  };
  Quiver dom = resolve(doc.dom);
  Quiver cod = resolve(doc.cod);
  SetFunction vertex_map(dom.vertices(), cod.vertices(), to_table(doc.vertex_map, "vertex map"));
  SetFunction edge_map(dom.edges(), cod.edges(), to_table(doc.edge_map, "edge map"));
  return {std::move(dom), std::move(cod), std::move(vertex_map), std::move(edge_map)};
}

LoadedMorphism load_morphism(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  MorphismDocument doc;
  try {
    doc = parse_morphism_document(text);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path.string());
  }
  return resolve_morphism(doc, path.parent_path());
}

}  // namespace quiverlab

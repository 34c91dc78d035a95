#include "quiverlab/setmodel.hpp"

#include <algorithm>
#include <limits>

namespace quiverlab {

namespace {

bool is_atom_char(char c) noexcept {
  switch (c) {
    case '(':
    case ')':
    case ',':
    case '#':
    case ' ':
    case '\t':
    case '\n':
    case '\r':
    case '\v':
    case '\f':
      return false;
    default:
      return true;
  }
}

// Consumes one label starting at pos; returns the position after it or npos.
std::size_t scan_label(std::string_view text, std::size_t pos) noexcept {
  if (pos >= text.size()) return std::string_view::npos;
  if (text[pos] != '(') {
    std::size_t end = pos;
    while (end < text.size() && is_atom_char(text[end])) ++end;
    return end == pos ? std::string_view::npos : end;
  }
  std::size_t mid = scan_label(text, pos + 1);
  if (mid == std::string_view::npos || mid >= text.size() || text[mid] != ',') {
    return std::string_view::npos;
  }
  std::size_t end = scan_label(text, mid + 1);
  if (end == std::string_view::npos || end >= text.size() || text[end] != ')') {
    return std::string_view::npos;
  }
  return end + 1;
}

const std::shared_ptr<const std::vector<std::string>>& empty_storage() {
  static const auto storage = std::make_shared<const std::vector<std::string>>();
  return storage;
}

}  // namespace

bool is_atom(std::string_view label) noexcept {
  return !label.empty() && std::all_of(label.begin(), label.end(), is_atom_char);
}

bool is_valid_label(std::string_view label) noexcept {
  return scan_label(label, 0) == label.size();
}

std::string pair_label(std::string_view first, std::string_view second) {
  std::string out;
  out.reserve(first.size() + second.size() + 3);
  out += '(';
  out += first;
  out += ',';
  out += second;
  out += ')';
  return out;
}

std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view label) {
  if (label.empty() || label.front() != '(' || !is_valid_label(label)) return std::nullopt;
  const std::size_t mid = scan_label(label, 1);
  return std::pair{label.substr(1, mid - 1), label.substr(mid + 1, label.size() - mid - 2)};
}

// ---------------------------------------------------------------------------
// FiniteSet

FiniteSet::FiniteSet() : labels_(empty_storage()) {}

FiniteSet::FiniteSet(std::vector<std::string> labels) {
  for (const auto& label : labels) {
    if (!is_valid_label(label)) throw ConstraintError("invalid element label '" + label + "'");
  }
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw ConstraintError("duplicate element label '" + *dup + "'");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FiniteSet::FiniteSet(std::initializer_list<std::string> labels)
    : FiniteSet(std::vector<std::string>(labels)) {}

std::optional<std::size_t> FiniteSet::index_of(std::string_view label) const noexcept {
  auto it = std::lower_bound(labels_->begin(), labels_->end(), label,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == labels_->end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

std::string FiniteSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += (*labels_)[i];
  }
  out += '}';
  return out;
}

bool operator==(const FiniteSet& a, const FiniteSet& b) noexcept {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

// ---------------------------------------------------------------------------
// SetFunction

SetFunction::SetFunction() = default;

SetFunction::SetFunction(FiniteSet domain, FiniteSet codomain,
                         const std::map<std::string, std::string, std::less<>>& mapping)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  image_.reserve(domain_.size());
  for (const auto& x : domain_) {
    auto it = mapping.find(x);
    if (it == mapping.end()) throw ConstraintError("function is not total: no image for '" + x + "'");
    auto index = codomain_.index_of(it->second);
    if (!index) {
      throw ConstraintError("image '" + it->second + "' of '" + x + "' is not in codomain " +
                            codomain_.to_string());
    }
    image_.push_back(*index);
  }
  for (const auto& [x, y] : mapping) {
    if (!domain_.contains(x)) {
      throw ConstraintError("mapping for '" + x + "' which is not in domain " + domain_.to_string());
    }
  }
}

SetFunction::SetFunction(FiniteSet domain, FiniteSet codomain, std::vector<std::size_t> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_.size()) {
    throw ConstraintError("image table has " + std::to_string(image_.size()) +
                          " entries for a domain of size " + std::to_string(domain_.size()));
  }
  for (auto index : image_) {
    if (index >= codomain_.size()) throw ConstraintError("image index out of codomain range");
  }
}

const std::string& SetFunction::operator()(std::string_view x) const {
  auto index = domain_.index_of(x);
  if (!index) {
    throw DomainMismatch("'" + std::string(x) + "' is not in domain " + domain_.to_string());
  }
  return codomain_[image_[*index]];
}

std::string SetFunction::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (i) out += ',';
    out += domain_[i];
    out += "->";
    out += codomain_[image_[i]];
  }
  out += '}';
  return out;
}

bool operator==(const SetFunction& a, const SetFunction& b) noexcept {
  return a.image_ == b.image_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
}

// ---------------------------------------------------------------------------
// Operations

SetFunction identity_fn(const FiniteSet& s) {
  std::vector<std::size_t> image(s.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
  return SetFunction(s, s, std::move(image));
}

SetFunction compose_fn(const SetFunction& g, const SetFunction& f) {
  if (!(f.codomain() == g.domain())) {
    throw DomainMismatch("cannot compose: codomain " + f.codomain().to_string() +
                         " differs from domain " + g.domain().to_string());
  }
  std::vector<std::size_t> image(f.domain().size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.image_index(f.image_index(i));
  return SetFunction(f.domain(), g.codomain(), std::move(image));
}

SetFunction empty_fn(const FiniteSet& s) { return SetFunction(FiniteSet{}, s, std::vector<std::size_t>{}); }

const FiniteSet& singleton_set() {
  static const FiniteSet one{"1"};
  return one;
}

SetFunction constant_fn(const FiniteSet& s) {
  return SetFunction(s, singleton_set(), std::vector<std::size_t>(s.size(), 0));
}

const FiniteSet& two_point_set() {
  static const FiniteSet two{"0", "1"};
  return two;
}

std::string tag_label(int tag, std::string_view element) {
  if (tag != 0 && tag != 1) throw ConstraintError("tag must be 0 or 1, got " + std::to_string(tag));
  return pair_label(tag == 0 ? "0" : "1", element);
}

FiniteSet tagged_double(const FiniteSet& s) {
  std::vector<std::string> labels;
  labels.reserve(2 * s.size());
  for (int tag : {0, 1}) {
    for (const auto& x : s) labels.push_back(tag_label(tag, x));
  }
  return FiniteSet(std::move(labels));
}

SetFunction inclusion(int tag, const FiniteSet& s) {
  return SetFunction::tabulate(s, tagged_double(s), [tag](const std::string& x) { return tag_label(tag, x); });
}

FiniteSet square(const FiniteSet& s) {
  std::vector<std::string> labels;
  labels.reserve(s.size() * s.size());
  for (const auto& x : s) {
    for (const auto& y : s) labels.push_back(pair_label(x, y));
  }
  return FiniteSet(std::move(labels));
}

SetFunction projection(int coordinate, const FiniteSet& s) {
  if (coordinate != 1 && coordinate != 2) {
    throw ConstraintError("projection coordinate must be 1 or 2, got " + std::to_string(coordinate));
  }
  return SetFunction::tabulate(square(s), s, [coordinate](const std::string& xy) {
    auto parts = split_pair(xy);
    return std::string(coordinate == 1 ? parts->first : parts->second);
  });
}

SetFunction pairing(const SetFunction& f, const SetFunction& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw DomainMismatch("pairing needs maps with a common domain and codomain");
  }
  return SetFunction::tabulate(f.domain(), square(f.codomain()),
                               [&](const std::string& x) { return pair_label(f(x), g(x)); });
}

SetFunction tagged_map(const SetFunction& f) {
  return SetFunction::tabulate(tagged_double(f.domain()), tagged_double(f.codomain()),
                               [&](const std::string& jx) {
                                 auto parts = split_pair(jx);
                                 return pair_label(parts->first, f(parts->second));
                               });
}

SetFunction square_map(const SetFunction& f) {
  return SetFunction::tabulate(square(f.domain()), square(f.codomain()), [&](const std::string& xy) {
    auto parts = split_pair(xy);
    return pair_label(f(parts->first), f(parts->second));
  });
}

std::uint64_t function_count(const FiniteSet& s, const FiniteSet& t) noexcept {
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  const std::uint64_t base = t.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (base == 0) return 0;
    if (count > max / base) return max;
    count *= base;
  }
  return count;
}

std::vector<SetFunction> enumerate_functions(const FiniteSet& s, const FiniteSet& t) {
  std::vector<SetFunction> out;
  if (t.empty() && !s.empty()) return out;
  std::vector<std::size_t> image(s.size(), 0);
  while (true) {
    out.emplace_back(s, t, image);
    // Odometer with the first domain element most significant.
    std::size_t pos = image.size();
    while (pos > 0) {
      --pos;
      if (++image[pos] < t.size()) break;
      image[pos] = 0;
      if (pos == 0) return out;
    }
    if (image.empty()) return out;
  }
}

}  // namespace quiverlab

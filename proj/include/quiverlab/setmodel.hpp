#pragma once

// Finite sets of string labels and total functions between them.
//
// Labels follow a small term grammar:
//
//   label := atom | "(" label "," label ")"
//
// where an atom is a non-empty run of characters other than "(", ")", ",",
// "#" and whitespace. Constructed sets ({0,1} x S, S x S) use the tuple form,
// so encoding and decoding of structured labels is bijective.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quiverlab/error.hpp"

namespace quiverlab {

bool is_atom(std::string_view label) noexcept;
bool is_valid_label(std::string_view label) noexcept;

/// "(a,b)". Both components must already be valid labels.
std::string pair_label(std::string_view first, std::string_view second);

/// Inverse of pair_label; nullopt for atoms and malformed text.
std::optional<std::pair<std::string_view, std::string_view>> split_pair(std::string_view label);

/// Immutable finite set of distinct labels, stored in lexicographic order.
/// Copies share storage.
class FiniteSet {
public:
  FiniteSet();
  explicit FiniteSet(std::vector<std::string> labels);
  FiniteSet(std::initializer_list<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  bool empty() const noexcept { return labels_->empty(); }

  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& operator[](std::size_t index) const { return (*labels_)[index]; }
  auto begin() const noexcept { return labels_->cbegin(); }
  auto end() const noexcept { return labels_->cend(); }

  std::optional<std::size_t> index_of(std::string_view label) const noexcept;
  bool contains(std::string_view label) const noexcept { return index_of(label).has_value(); }

  /// "{a,b,c}"
  std::string to_string() const;

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) noexcept;

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Total function between finite sets, stored as one codomain index per
/// domain element (in domain order).
class SetFunction {
public:
  /// The empty function on the empty set.
  SetFunction();

  /// Every domain element must be a key and every value must lie in the
  /// codomain; extra keys are rejected.
  SetFunction(FiniteSet domain, FiniteSet codomain,
              const std::map<std::string, std::string, std::less<>>& mapping);

  SetFunction(FiniteSet domain, FiniteSet codomain, std::vector<std::size_t> image);

  /// Builds x -> rule(x) for every x in the domain.
  template <class Rule>
  static SetFunction tabulate(FiniteSet domain, FiniteSet codomain, Rule&& rule) {
    std::vector<std::size_t> image;
    image.reserve(domain.size());
    for (const auto& x : domain) {
      const std::string y = rule(x);
      auto index = codomain.index_of(y);
      if (!index) {
        throw ConstraintError("image '" + y + "' of '" + x + "' is not in codomain " +
                              codomain.to_string());
      }
      image.push_back(*index);
    }
    return SetFunction(std::move(domain), std::move(codomain), std::move(image));
  }

  const FiniteSet& domain() const noexcept { return domain_; }
  const FiniteSet& codomain() const noexcept { return codomain_; }

  /// Image of a domain label; throws DomainMismatch for foreign labels.
  const std::string& operator()(std::string_view x) const;

  std::size_t image_index(std::size_t domain_index) const { return image_[domain_index]; }
  std::span<const std::size_t> image_indices() const noexcept { return image_; }

  /// "{a->x,b->y}"
  std::string to_string() const;

  friend bool operator==(const SetFunction& a, const SetFunction& b) noexcept;

private:
  FiniteSet domain_;
  FiniteSet codomain_;
  std::vector<std::size_t> image_;
};

SetFunction identity_fn(const FiniteSet& s);

/// g after f. Requires codomain(f) == domain(g).
SetFunction compose_fn(const SetFunction& g, const SetFunction& f);

/// The empty function from the empty set into s.
SetFunction empty_fn(const FiniteSet& s);

/// The terminal set {1}.
const FiniteSet& singleton_set();

/// The unique map s -> {1}.
SetFunction constant_fn(const FiniteSet& s);

/// {0,1}.
const FiniteSet& two_point_set();

std::string tag_label(int tag, std::string_view element);

/// {0,1} x s, labels "(j,x)".
FiniteSet tagged_double(const FiniteSet& s);

/// x -> (tag,x) from s into tagged_double(s). tag must be 0 or 1.
SetFunction inclusion(int tag, const FiniteSet& s);

/// s x s, labels "(x,y)".
FiniteSet square(const FiniteSet& s);

/// Coordinate projection square(s) -> s; coordinate 1 is the first
/// component, 2 the second.
SetFunction projection(int coordinate, const FiniteSet& s);

/// x -> (f(x), g(x)). f and g must share domain and codomain.
SetFunction pairing(const SetFunction& f, const SetFunction& g);

/// (j,x) -> (j,f(x)) from tagged_double(dom f) to tagged_double(cod f).
SetFunction tagged_map(const SetFunction& f);

/// (x,y) -> (f(x),f(y)) from square(dom f) to square(cod f).
SetFunction square_map(const SetFunction& f);

/// |t|^|s|, saturating at UINT64_MAX.
std::uint64_t function_count(const FiniteSet& s, const FiniteSet& t) noexcept;

/// Every total function s -> t, ordered lexicographically by the image
/// sequence over the sorted domain.
std::vector<SetFunction> enumerate_functions(const FiniteSet& s, const FiniteSet& t);

}  // namespace quiverlab

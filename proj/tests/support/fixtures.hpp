#pragma once

#include <map>
#include <string>

#include "brute_force.hpp"
#include "quiverlab/quiver.hpp"

namespace fixtures {

inline quiverlab::Quiver to_quiver(const brute::RawQuiver& raw) {
  std::vector<quiverlab::EdgeSpec> edges;
  for (const auto& [e, s, t] : raw.edges) edges.push_back({e, s, t});
  return quiverlab::Quiver::from_edges(quiverlab::FiniteSet(raw.vertices), edges);
}

inline brute::RawQuiver to_raw(const quiverlab::Quiver& q) {
  brute::RawQuiver raw{q.vertices().labels(), {}};
  for (const auto& e : q.edge_list()) raw.edges.emplace_back(e.label, e.source, e.target);
  return raw;
}

inline quiverlab::SetFunction fn(const quiverlab::FiniteSet& dom, const quiverlab::FiniteSet& cod,
                                 const std::map<std::string, std::string, std::less<>>& table) {
  return quiverlab::SetFunction(dom, cod, table);
}

inline brute::Table to_table(const quiverlab::SetFunction& f) {
  brute::Table out;
  for (const auto& x : f.domain()) out[x] = f(x);
  return out;
}

inline quiverlab::Quiver worked_g() { return to_quiver(brute::example_g()); }
inline quiverlab::Quiver worked_h() { return to_quiver(brute::example_h()); }

}  // namespace fixtures

#pragma once
// Exhaustive bispan corpus: every T <- U -> V -> X with U, V drawn from the
// isomorphism-class representatives up to a size bound and all equivariant
// legs. Compares canonical-form equality with brute-force isomorphism.

#include <cstdint>
#include <map>

#include "oracles.hpp"
#include "tamb/bispan.hpp"

namespace corpus {

struct Tally {
  std::uint64_t diagrams = 0;
  std::uint64_t pairs = 0;
  std::uint64_t disagreements = 0;
};

inline Tally canonical_vs_bruteforce(const tamb::GroupPtr& g, const tamb::GSet& T, const tamb::GSet& X, int max_u,
                                     int max_v) {
  Tally tally;
  auto us = tamb::gsets_up_to(g, max_u);
  auto vs = tamb::gsets_up_to(g, max_v);
  for (const auto& V : vs) {
    auto cs = oracle::equivariant_maps(V, X);
    auto vbij = oracle::equivariant_bijections(V, V);
    for (const auto& U : us) {
      auto bs = oracle::equivariant_maps(U, V);
      auto as = oracle::equivariant_maps(U, T);
      auto ubij = oracle::equivariant_bijections(U, U);
      std::vector<tamb::Bispan> diagrams;
      for (const auto& c : cs)
        for (const auto& b : bs)
          for (const auto& a : as) diagrams.push_back(tamb::Bispan{T, U, V, X, a, b, c});
      std::vector<tamb::BispanClass> keys;
      for (const auto& d : diagrams) keys.push_back(tamb::bispan_canonical(d));
      tally.diagrams += diagrams.size();
      auto iso = [&](const tamb::Bispan& x, const tamb::Bispan& y) {
        for (const auto& fv : vbij) {
          bool ok = true;
          for (int v = 0; v < V.size() && ok; ++v)
            if (y.c[fv[v]] != x.c[v]) ok = false;
          if (!ok) continue;
          for (const auto& fu : ubij) {
            bool good = true;
            for (int u = 0; u < U.size() && good; ++u)
              if (y.a[fu[u]] != x.a[u] || y.b[fu[u]] != fv[x.b[u]]) good = false;
            if (good) return true;
          }
        }
        return false;
      };
      for (std::size_t i = 0; i < diagrams.size(); ++i)
        for (std::size_t j = i; j < diagrams.size(); ++j) {
          ++tally.pairs;
          if ((keys[i] == keys[j]) != iso(diagrams[i], diagrams[j])) ++tally.disagreements;
        }
    }
    // Diagrams over non-isomorphic (U, V) are never isomorphic; their
    // classes must differ too.
  }
  return tally;
}

// Distinct (U, V) representative pairs must never share a canonical class.
inline std::uint64_t cross_shape_collisions(const tamb::GroupPtr& g, const tamb::GSet& T, const tamb::GSet& X,
                                            int max_u, int max_v) {
  std::map<std::vector<tamb::OrbitKey>, std::pair<int, int>> seen;
  std::uint64_t bad = 0;
  auto us = tamb::gsets_up_to(g, max_u);
  auto vs = tamb::gsets_up_to(g, max_v);
  for (int vi = 0; vi < static_cast<int>(vs.size()); ++vi)
    for (int ui = 0; ui < static_cast<int>(us.size()); ++ui)
      for (const auto& c : oracle::equivariant_maps(vs[vi], X))
        for (const auto& b : oracle::equivariant_maps(us[ui], vs[vi]))
          for (const auto& a : oracle::equivariant_maps(us[ui], T)) {
            auto k = tamb::bispan_canonical(tamb::Bispan{T, us[ui], vs[vi], X, a, b, c}).components;
            auto [it, fresh] = seen.emplace(k, std::make_pair(ui, vi));
            if (!fresh && it->second != std::make_pair(ui, vi)) ++bad;
          }
  return bad;
}

}  // namespace corpus

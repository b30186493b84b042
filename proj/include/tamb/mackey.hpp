#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamb/config.hpp"
#include "tamb/gset.hpp"

namespace tamb {

using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major, acts on column vectors
using Coeffs = std::map<std::vector<int>, std::int64_t>;

// One level per subgroup conjugacy class, evaluated at the orbit G/H of
// the class representative H (coset_space ordering).
struct MackeyLevel {
  Subgroup subgroup;
  std::vector<std::vector<int>> keys;  // basis elements, canonical keys of the source
  std::vector<std::string> labels;
  int rank() const { return static_cast<int>(keys.size()); }
};

// The orbit map G/K -> G/H sending eK to the coset with index `coset`
// (which K fixes), with its structure matrices.
struct OrbitMapData {
  int from = 0;   // level of K
  int to = 0;     // level of H
  int coset = 0;  // image of eK in coset_space(G, H)
  IntMatrix restriction;  // rank(K) x rank(H)
  IntMatrix transfer;     // rank(H) x rank(K)
};

struct MackeyTable {
  GroupPtr group;
  std::vector<MackeyLevel> levels;
  std::vector<OrbitMapData> maps;  // sorted by (from, to, coset)
  bool semi = true;

  int find_map(int from, int to, int coset) const;  // index into maps, or -1
};

struct MackeyTableMap {
  std::vector<IntMatrix> components;  // per level, rank(target) x rank(source)
};

// The representative orbit maps between levels: (from, to, coset) triples.
std::vector<std::array<int, 3>> orbit_maps(const GroupPtr& g);
// The orbit map as a G-map between coset spaces.
GMap orbit_map_gmap(const GroupPtr& g, int from, int to, int coset);

// A functor presented on orbits: basis keys at a representative orbit and
// the images of a basis key under restriction/transfer along an orbit map.
struct FunctorSource {
  std::function<std::vector<std::vector<int>>(const GSet& orbit)> basis;
  std::function<Coeffs(const GMap& f, const std::vector<int>& key)> restrict;  // key at f.target
  std::function<Coeffs(const GMap& f, const std::vector<int>& key)> transfer;  // key at f.source
  std::function<std::string(const std::vector<int>& key)> label;
};

// Throws InternalError when an image leaves the enumerated basis.
MackeyTable build_table(const GroupPtr& g, const FunctorSource& src, bool semi, ExecPolicy policy = ExecPolicy::serial);

// Spans X <- V -> T with V an orbit, canonicalized independently of the
// bispan engine: the least [|K|, K..., c(v), t(v)] over v in V.
std::vector<int> span_key(const GSet& v, const std::vector<int>& c, const std::vector<int>& t, int point);
// Burnside: orbits over X (t absent). Represented: spans into T.
FunctorSource burnside_source(const GroupPtr& g);
FunctorSource represented_source(const GSet& t);

MackeyTable burnside_table(const GroupPtr& g);
MackeyTable represented_table(const GSet& t);
MackeyTable completion(const MackeyTable& t);

// Levelwise basis permutations commuting with every structure matrix.
std::optional<MackeyTableMap> table_iso(const MackeyTable& a, const MackeyTable& b);
// Checks that m commutes with all structure matrices of a -> b.
bool is_table_map(const MackeyTable& a, const MackeyTable& b, const MackeyTableMap& m, std::string* why = nullptr);
bool is_permutation_iso(const MackeyTableMap& m);

struct AxiomReport {
  bool ok() const { return failures.empty(); }
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

// Composition, conjugations as permutations, the pullback relation for all
// pairs of orbit maps into a common orbit, additivity of evaluation, and
// nonnegativity when semi.
AxiomReport check_mackey_axioms(const MackeyTable& t);

// Restriction / transfer matrix of an arbitrary map f : X -> Y, in the
// bases obtained by decomposing X and Y into orbits (orbit_decompose order,
// each orbit identified with its representative level).
IntMatrix evaluate_restriction(const MackeyTable& t, const GMap& f);
IntMatrix evaluate_transfer(const MackeyTable& t, const GMap& f);
int evaluate_rank(const MackeyTable& t, const GSet& x);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);

}  // namespace tamb

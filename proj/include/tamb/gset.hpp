#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamb/group.hpp"

namespace tamb {

// A finite G-set: points 0..size-1 and action(g, x) = g.x. Immutable;
// copies share the action table.
class GSet {
 public:
  GSet() = default;
  // Validates that every row is a permutation, the identity acts trivially
  // and action(gh) = action(g) o action(h). Throws InputError(BadAction).
  GSet(GroupPtr group, int size, std::vector<int> action);

  static GSet empty(const GroupPtr& g);
  static GSet point(const GroupPtr& g);
  static GSet trivial(const GroupPtr& g, int size);  // size fixed points

  const GroupPtr& group() const { return group_; }
  int size() const { return size_; }
  int act(int g, int x) const { return (*action_)[g * size_ + x]; }
  std::vector<std::vector<int>> action_rows() const;

  bool operator==(const GSet& o) const;

 private:
  struct Unchecked {};
  GSet(GroupPtr group, int size, std::vector<int> flat, Unchecked);
  friend GSet gset_from_trusted(GroupPtr group, int size, std::vector<int> flat);

  GroupPtr group_;
  int size_ = 0;
  std::shared_ptr<const std::vector<int>> action_;
};

// Flat action table indexed [g * size + x]; no validation.
GSet gset_from_trusted(GroupPtr group, int size, std::vector<int> flat);

// An equivariant map.
struct GMap {
  GSet source;
  GSet target;
  std::vector<int> values;

  int operator()(int x) const { return values[x]; }
  bool operator==(const GMap& o) const {
    return source == o.source && target == o.target && values == o.values;
  }
};

// Validates range and equivariance (InputError NotEquivariant / BadMap).
GMap make_map(GSet source, GSet target, std::vector<int> values);
GMap identity_map(const GSet& x);
GMap compose(const GMap& g, const GMap& f);  // g o f; TargetMismatch unless f.target == g.source
GMap to_point(const GSet& x);
bool is_equivariant(const GSet& source, const GSet& target, const std::vector<int>& values);

// Sorted element list of the stabilizer of x.
std::vector<int> stabilizer(const GSet& x, int point);

struct Orbit {
  std::vector<int> points;  // ascending
  Subgroup stabilizer;      // of the representative
  int representative;       // least point
};

// Orbits ordered by representative.
std::vector<Orbit> orbit_decompose(const GSet& x);
// orbit_id[x] = index of x's orbit in orbit_decompose order.
std::vector<int> orbit_ids(const GSet& x);

// G/H with point 0 = eH. Points are cosets in order of first appearance
// when scanning e, then the group elements in index order.
struct CosetSpace {
  GSet set;
  Subgroup subgroup;
  std::vector<int> reps;      // reps[i] is a representative of coset i
  std::vector<int> coset_of;  // coset_of[g] = index of gH
};

CosetSpace coset_space(const GroupPtr& g, const Subgroup& h);
GSet make_orbit(const GroupPtr& g, const Subgroup& h);

struct Pullback {
  GSet object;
  GMap p1;  // to the source of f
  GMap p2;  // to the source of g
  std::vector<std::pair<int, int>> pairs;
};

// {(x, y) : f(x) = g(y)} in lexicographic order with the diagonal action.
Pullback pullback(const GMap& f, const GMap& g);

struct Coproduct {
  GSet object;
  GMap in1;
  GMap in2;
};

Coproduct coproduct(const GSet& x, const GSet& y);
GSet product(const GSet& x, const GSet& y);  // point (a, b) has index a * |y| + b
GMap fold_map(const GSet& x);                // x + x -> x
GMap coproduct_map(const GMap& f, const GMap& g);  // f + g : X + X' -> Y + Y'
GMap copair(const GMap& f, const GMap& g);          // [f, g] : X + X' -> Y

// The exponential diagram of a composable pair i : X -> Y, j : Y -> Z:
//
//   A = Y x_Z Pi --pi2--> Pi
//     | e                  | p
//     X ---i---> Y ---j--> Z
//
// Pi is the set of pairs (z, s) with s a section of i over j^-1(z), ordered
// by z and then by the tuple of section values over the ascending fiber.
struct ExponentialDiagram {
  GMap i;
  GMap j;
  GSet pi;
  GSet a;
  GMap p;    // Pi -> Z
  GMap e;    // A -> X
  GMap pi2;  // A -> Pi
  GMap a_to_y;
  std::vector<int> section_base;                // Pi point -> its z
  std::vector<std::vector<int>> section_values;  // Pi point -> s over ascending j^-1(z)
};

// Throws InputError(NotComposable) or ResourceBound(section_cap).
ExponentialDiagram dependent_product(const GMap& i, const GMap& j);

struct ExponentialCheck {
  bool exponential = false;
  std::string reason;
  std::optional<GMap> b_to_pi;  // iso B -> Pi over Z
  std::optional<GMap> a_to_a;   // iso A -> Y x_Z Pi
};

// Decides whether (f : A -> X, g : A -> B, h : B -> Z) is a distributor for
// (i, j). Throws InputError(ShapeError) if the maps do not fit together or
// the square does not commute.
ExponentialCheck is_exponential(const GMap& i, const GMap& j, const GMap& f, const GMap& g, const GMap& h);

// G x_H X for an H-set X (over h.as_group()). The point with index
// c * |X| + x is [reps[c], x].
struct InducedSet {
  GSet set;
  GSet base;
  Subgroup subgroup;
  std::vector<int> reps;
  std::vector<int> coset_of;
  int base_size = 0;

  int point(int g, int x) const;                    // [g, x]
  std::pair<int, int> split(int p) const { return {reps[p / base_size], p % base_size}; }
};

InducedSet induce(const GroupPtr& g, const Subgroup& h, const GSet& x);
// G x_H f, using the given inductions of source and target.
GMap induce_map(const InducedSet& src, const InducedSet& dst, const GMap& f);
// The adjoint G x_H X -> Y of an H-map X -> res Y: [g, x] |-> g.f(x).
GMap induce_adjoint(const InducedSet& src, const GSet& y, const std::vector<int>& values);

GSet restrict(const Subgroup& h, const GSet& x);
GMap restrict_map(const Subgroup& h, const GMap& f);

// Canonical form: sorted list of (conjugacy-class index, multiplicity) of
// orbit stabilizers.
std::vector<std::pair<int, int>> gset_canonical_form(const GSet& x);
std::optional<GMap> gset_iso(const GSet& x, const GSet& y);

// All equivariant maps x -> y, enumerated orbit by orbit (images of orbit
// representatives in ascending order). Throws ResourceBound(enum_cap).
std::vector<GMap> all_gmaps(const GSet& x, const GSet& y);
std::uint64_t count_gmaps(const GSet& x, const GSet& y);

// Extends rep_images (one target per orbit of x, orbit_decompose order) to
// an equivariant map; nullopt when some image is not fixed by the
// corresponding stabilizer.
std::optional<GMap> extend_from_orbit_reps(const GSet& x, const GSet& y, const std::vector<int>& rep_images);

// One representative per isomorphism class of G-sets of size <= k, built
// as coproducts of orbits G/H (H over conjugacy-class representatives),
// ordered by size and then by orbit-type multiset.
std::vector<GSet> gsets_up_to(const GroupPtr& g, int k);
GSet disjoint_union_of_orbits(const GroupPtr& g, const std::vector<Subgroup>& stabs);

}  // namespace tamb

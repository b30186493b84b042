#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamb/bispan.hpp"
#include "tamb/config.hpp"
#include "tamb/mackey.hpp"

namespace tamb {

// Basis of F_T at X: isomorphism classes of T <- U -> V -> X with V an
// orbit, in canonical key order. With n set, only uniform fiber size n;
// otherwise every degree up to max_degree. Enumerated directly from
// (K, x in X^K, multiset of K-orbit types (L, t in T^L) of total size n)
// over conjugacy-class representatives K. Throws ResourceBound(enum_cap).
std::vector<OrbitKey> ft_basis(const GSet& T, const GSet& X, std::optional<int> n, int max_degree = 2);

// F_T restricted to G-sets of size <= k, graded up to max_degree.
struct FreeTambaraWindow {
  GSet T;
  int k = 0;
  int max_degree = 0;
  std::vector<GSet> objects;                          // gsets_up_to(G, k)
  std::vector<std::map<int, std::vector<OrbitKey>>> basis;  // per object, per degree

  int object_index(const GSet& x) const;  // -1 if not a window object
};

FreeTambaraWindow build_window(const GSet& T, int k, int max_degree, ExecPolicy policy = ExecPolicy::serial);

enum class StructureKind { restriction, transfer };

// Matrix of restriction/transfer along f in the degree-`degree` bases of
// the window; rows index the codomain of the operation. Throws
// InputError(WindowMiss) when f's endpoints are not window objects.
IntMatrix ft_structure(const FreeTambaraWindow& w, const GMap& f, StructureKind kind, int degree);

// Norm of an effective element: the sum is merged into one bispan first.
EffectiveElement ft_norm(const GSet& T, const GMap& f, const EffectiveElement& e);

// F_T[n] as a Mackey table over the orbit levels.
MackeyTable ft_table(const GSet& T, int n, ExecPolicy policy = ExecPolicy::serial);

struct VerifyOptions {
  int k = 4;
  int max_degree = 2;
  bool corrupt_norm = false;  // negative control: perturb non-bijective norms
  ExecPolicy policy = ExecPolicy::serial;
};

struct TambaraReport {
  bool ok() const { return failures.empty(); }
  std::map<std::string, std::uint64_t> checks;  // per axiom family
  std::vector<std::string> failures;
};

// Checks on the window (all objects, all maps among them, all basis
// elements up to max_degree):
//   functoriality of r, t, n for composable X -> Y -> Z with Z an orbit;
//   additivity: restriction to the summands of X + Y is a bijection of bases;
//   both pullback relations r_g t_f = t_q r_p and r_g n_f = n_q r_p with
//   g : Z -> Y from an orbit Z;
//   the distributive law n_j t_i = t_h n_g r_f for every exponential
//   diagram of i : X -> Y, j : Y -> Z with Z an orbit.
// Targets may be taken to be orbits because every operation splits over
// the orbits of its target, which the additivity check certifies.
TambaraReport verify_semi_tambara(const GSet& T, const VerifyOptions& opt = {});

struct GradedIso {
  MackeyTable source;  // Burnside or represented
  MackeyTable target;  // F_T[0] or F_T[1]
  MackeyTableMap map;
};

// Explicit isomorphisms: an orbit V -> X goes to T <- 0 -> V -> X, a span
// X <- V -> T to T <- V = V -> X. Verified against every structure matrix;
// throws InternalError(IsoNotFound) if the map is not an isomorphism.
GradedIso ft0_iso(const GSet& T, ExecPolicy policy = ExecPolicy::serial);
GradedIso ft1_iso(const GSet& T, ExecPolicy policy = ExecPolicy::serial);

// Induction of an H-bispan along H <= G, the left leg replaced by its
// adjoint into T (T a G-set, the H-bispan has generator restrict(H, T)).
Bispan induce_bispan(const Subgroup& h, const GSet& T, const Bispan& b);

struct CompatReport {
  bool ok() const { return failures.empty(); }
  std::uint64_t basis_pairs = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

// Compares F_{res T} over H with the restriction of F_T: for every H-set Y
// of size <= k and degree <= max_degree, induction sends the basis of
// F_{res T}[n](Y) bijectively onto the basis of F_T[n](G x_H Y), commutes
// with r, t, n along all H-maps among window objects, and sends theta to
// the restriction of theta along the counit G x_H res T -> T.
CompatReport restriction_compat(const Subgroup& h, const GSet& T, int k = 2, int max_degree = 2,
                                ExecPolicy policy = ExecPolicy::serial);

// For x in F_{T'}(T), the map F_T -> F_{T'} sending the basis diagram
// (a, b, c) to t_c n_b r_a(x); checks that theta goes to x and that r, t
// and n commute with the map on window basis elements.
CompatReport universal_map_check(const GSet& T, const EffectiveElement& x, int k = 2, int max_degree = 2,
                                 ExecPolicy policy = ExecPolicy::serial);
EffectiveElement universal_map_apply(const EffectiveElement& x, const EffectiveElement& e);

// Trivial group: F_T(pt) against the polynomial semiring on |T|
// generators. Basis of degree d must be the monomials of degree d, and
// products of basis elements must be the products of monomials.
struct PolyReport {
  bool ok() const { return failures.empty(); }
  std::vector<std::uint64_t> basis_counts;     // per degree
  std::vector<std::uint64_t> monomial_counts;  // per degree
  std::uint64_t products_checked = 0;
  std::vector<std::string> failures;
};
PolyReport trivial_group_check(int t_size, int max_degree);

}  // namespace tamb

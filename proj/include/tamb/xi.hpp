#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamb/bispan.hpp"
#include "tamb/config.hpp"

namespace tamb {

// A subgroup H of G with phi : H -> Sigma_n; its graph is a subgroup of
// G x Sigma_n meeting 1 x Sigma_n trivially.
struct PhiSubgroup {
  Subgroup H;
  GroupHom phi;  // values are Sigma_n element indices (symmetric_group ranks)
  int n = 1;

  // phi(h) as a permutation vector of {0..n-1}; h is a G-element in H.
  std::vector<int> perm(int h) const;
};

// Validates the homomorphism property and the trivial intersection.
PhiSubgroup make_phi_subgroup(const Subgroup& h, const GroupHom& phi, int n);

// Every (H, phi) with H a subgroup of G and phi in homs_to_sym(H, n); no
// quotient by conjugation. Ordered by H (all_subgroups order), then phi.
std::vector<PhiSubgroup> family_FGn(const GroupPtr& g, int n);

// Functions {0..n-1} -> T as an H-set over H.as_group():
// (h.f)(j) = h.f(phi(h)^-1 j). Point index is sum f(j) |T|^j.
// Throws ResourceBound(exp_cap) when |T|^n is over the cap.
GSet exp_phi(const GSet& T, const PhiSubgroup& p);
std::vector<int> exp_point(int index, int t_size, int n);
int exp_index(const std::vector<int>& f, int t_size);

// The generator T <- G x_H (T^n x {0..n-1}) -> G x_H T^n = G x_H T^n with
// legs induced from evaluation and projection.
struct XiDiagram {
  InducedSet E;  // G x_H (T^n)^phi
  InducedSet W;  // G x_H ((T^n)^phi x n), base point index f * n + m
  Bispan bispan;
};
XiDiagram xi_diagram(const PhiSubgroup& p, const GSet& T);
BispanClass xi_generator(const PhiSubgroup& p, const GSet& T);

// L subset g H g^-1 and lambda(l) = sigma phi(g^-1 l g) sigma^-1 for l in L.
bool orbit_map_condition(const PhiSubgroup& l, const PhiSubgroup& h, int g, const std::vector<int>& sigma);

struct XiNaturalityReport {
  bool ok() const { return failures.empty(); }
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

// Builds [k, f, m] |-> [kg, j |-> g^-1 f(sigma(j)), sigma^-1(m)] from the L
// generator to the H generator and checks well-definedness, equivariance,
// the eval triangle, the proj square, that the square is a pullback, and
// that the H generator restricts to the L generator. With omit_sigma the
// twist is replaced by the identity (negative control).
XiNaturalityReport xi_naturality_check(const PhiSubgroup& l, const PhiSubgroup& h, int g, const std::vector<int>& sigma,
                                       const GSet& T, bool omit_sigma = false);

struct XiSweepReport {
  bool ok() const { return failures.empty(); }
  std::uint64_t pairs = 0;        // ordered pairs of family members
  std::uint64_t connections = 0;  // (L, H, g, sigma) satisfying the condition
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
};

// xi_naturality_check over every connecting (g, sigma) between members
// of family_FGn(G, n).
XiSweepReport xi_naturality_sweep(const GSet& T, int n, bool omit_sigma = false,
                                  ExecPolicy policy = ExecPolicy::serial);

struct XiWitness {
  OrbitKey basis;           // degree-n basis class at the point
  PhiSubgroup phi;          // K with its action on the chosen fiber
  std::vector<int> f;       // the K-fixed point of (T^n)^phi
  std::vector<int> adjoint; // f' : G/K -> G x_K (T^n)^phi
  bool verified = false;
};

// One witness per degree-n basis class of F_T[n](pt): the fiber over eK,
// numbered in increasing order, gives phi and f; applying Xi along
// pt <- G/K -> G x_K (T^n)^phi must give back the class. Throws
// InternalError(WitnessFailed) naming the class otherwise.
std::vector<XiWitness> xi_surjectivity(const GSet& T, int n, ExecPolicy policy = ExecPolicy::serial);

}  // namespace tamb

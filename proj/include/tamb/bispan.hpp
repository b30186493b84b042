#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tamb/gset.hpp"

namespace tamb {

// A diagram T <-a- U -b-> V -c-> X of G-sets. T and X are the ports;
// canonicalization never relabels them.
struct Bispan {
  GSet T, U, V, X;
  std::vector<int> a, b, c;
};

// Validates ports and equivariance of the three legs.
Bispan make_bispan(GSet T, GSet U, GSet V, GSet X, std::vector<int> a, std::vector<int> b, std::vector<int> c);

Bispan theta_bispan(const GSet& T);                    // T = T = T = T
Bispan unit_bispan(const GSet& T, const GSet& X);      // T <- 0 -> X = X
Bispan zero_bispan(const GSet& T, const GSet& X);      // T <- 0 -> 0 -> X

// Canonical encoding of a bispan whose V is a single orbit:
//
//   [|K|, K..., c(v), m, (|L_1|, L_1..., a(u_1)), ..., (|L_m|, L_m..., a(u_m))]
//
// for a base point v with stabilizer K, listing the K-orbits of the fiber
// over v by (stabilizer, T-value), each minimized over its K-orbit and the
// list sorted. The key is the minimum of this over all v in the orbit.
using OrbitKey = std::vector<int>;

struct OrbitKeyView {
  std::vector<int> stabilizer;  // K
  int x = 0;                    // c(v)
  std::vector<std::pair<std::vector<int>, int>> fiber;  // (L_i, a(u_i))
};

OrbitKeyView parse_key(const OrbitKey& key);
OrbitKey make_key(const OrbitKeyView& view);  // fiber entries are sorted; no minimization over v
int key_degree(const OrbitKey& key);          // sum of [K : L_i] = |b^-1(v)|
std::string key_to_string(const OrbitKey& key);

// Isomorphism class of a bispan fixing T and X: its orbit components,
// sorted, with repetition.
struct BispanClass {
  GSet T, X;
  std::vector<OrbitKey> components;

  bool operator==(const BispanClass& o) const { return T == o.T && X == o.X && components == o.components; }
};

BispanClass bispan_canonical(const Bispan& b);
// The canonical representative: each component realized as
// G/L_i -> G/K -> X with U the disjoint union over the fiber entries.
Bispan realize(const BispanClass& cls);
Bispan realize_key(const GSet& T, const GSet& X, const OrbitKey& key);

// A nonnegative combination of basis diagrams (V an orbit) with fixed ports.
class EffectiveElement {
 public:
  EffectiveElement(GSet T, GSet X) : T_(std::move(T)), X_(std::move(X)) {}
  static EffectiveElement from_bispan(const Bispan& b);
  static EffectiveElement from_class(const BispanClass& cls);
  static EffectiveElement basis(const GSet& T, const GSet& X, const OrbitKey& key);

  const GSet& T() const { return T_; }
  const GSet& X() const { return X_; }
  const std::map<OrbitKey, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint64_t component_count() const;

  void add_term(const OrbitKey& key, std::uint64_t count = 1);
  Bispan realize() const;
  BispanClass to_class() const;

  bool operator==(const EffectiveElement& o) const { return T_ == o.T_ && X_ == o.X_ && terms_ == o.terms_; }

 private:
  GSet T_, X_;
  std::map<OrbitKey, std::uint64_t> terms_;
};

// An integer combination of basis diagrams; coefficients nonzero.
class VirtualElement {
 public:
  VirtualElement(GSet T, GSet X) : T_(std::move(T)), X_(std::move(X)) {}
  static VirtualElement from_effective(const EffectiveElement& e);

  const GSet& T() const { return T_; }
  const GSet& X() const { return X_; }
  const std::map<OrbitKey, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const OrbitKey& key, std::int64_t coeff);

  bool operator==(const VirtualElement& o) const { return T_ == o.T_ && X_ == o.X_ && terms_ == o.terms_; }

 private:
  GSet T_, X_;
  std::map<OrbitKey, std::int64_t> terms_;
};

// Diagram-level operations. Each throws InputError(PortMismatch) when f
// does not attach to the relevant port.
Bispan bispan_transfer(const Bispan& b, const GMap& f);
Bispan bispan_restrict(const Bispan& b, const GMap& f);
// Exponential diagram of (c, f), then pullback of b along its evaluation.
// Propagates ResourceBound from dependent_product.
Bispan bispan_norm(const Bispan& b, const GMap& f);
// Disjoint union of U and V.
Bispan bispan_sum(const Bispan& x, const Bispan& y);

EffectiveElement transfer(const EffectiveElement& e, const GMap& f);
EffectiveElement restrict(const EffectiveElement& e, const GMap& f);
EffectiveElement norm(const EffectiveElement& e, const GMap& f);
EffectiveElement bispan_add(const EffectiveElement& x, const EffectiveElement& y);
// Norm of the pair along the fold map X + X -> X.
EffectiveElement bispan_mul(const EffectiveElement& x, const EffectiveElement& y);
EffectiveElement unit_element(const GSet& T, const GSet& X);
EffectiveElement theta_element(const GSet& T);

VirtualElement transfer(const VirtualElement& e, const GMap& f);
VirtualElement restrict(const VirtualElement& e, const GMap& f);
VirtualElement add(const VirtualElement& x, const VirtualElement& y);
VirtualElement negate(const VirtualElement& x);
VirtualElement mul(const VirtualElement& x, const VirtualElement& y);

std::map<int, EffectiveElement> degree_split(const EffectiveElement& e);
std::map<int, VirtualElement> degree_split(const VirtualElement& e);

}  // namespace tamb

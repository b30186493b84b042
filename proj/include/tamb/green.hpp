#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tamb/config.hpp"

namespace tamb {

// A polynomial over Z/p in s variables, truncated above total degree D.
// Coefficients are reduced and nonzero.
class TruncPoly {
 public:
  TruncPoly() : TruncPoly(2, 0, 0) {}  // zero in F_2
  TruncPoly(int p, int s, int D);

  static TruncPoly constant(int p, int s, int D, int c);
  static TruncPoly variable(int p, int s, int D, int i);  // x_{i+1}
  // Throws InputError(DegreeOverflow) when the monomial is beyond D.
  static TruncPoly monomial(int p, int s, int D, const std::vector<int>& exponents, int c = 1);

  int p() const { return p_; }
  int vars() const { return s_; }
  int cap() const { return D_; }
  const std::map<std::vector<int>, int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for zero

  // Adds c * monomial; dropped (and flagged) beyond the cap.
  void add_term(const std::vector<int>& exponents, int c, bool* overflow = nullptr);

  // "x1^2 + x1*x2"; single-variable rings print "x".
  std::string to_string() const;

  bool operator==(const TruncPoly& o) const {
    return p_ == o.p_ && s_ == o.s_ && D_ == o.D_ && coeffs_ == o.coeffs_;
  }
  bool operator<(const TruncPoly& o) const { return coeffs_ < o.coeffs_; }

 private:
  int p_, s_, D_;
  std::map<std::vector<int>, int> coeffs_;
};

// Results beyond the cap are dropped and reported through *overflow.
// Throws InputError(RingMismatch) on different (p, s, D).
TruncPoly poly_add(const TruncPoly& a, const TruncPoly& b);
TruncPoly poly_mul(const TruncPoly& a, const TruncPoly& b, bool* overflow = nullptr);
TruncPoly poly_pow(const TruncPoly& a, int k, bool* overflow = nullptr);
// Replaces x_i by images[i]; images and the result live in the ring of
// target (only its ring parameters are used).
TruncPoly poly_substitute(const TruncPoly& f, const std::vector<TruncPoly>& images, const TruncPoly& target,
                          bool* overflow = nullptr);

// Every exponent vector of total degree <= D in graded lex order.
std::vector<std::vector<int>> monomials_up_to(int s, int D);

bool is_prime(int p);

// A Green functor on C_p with bottom ring Z/p[x] (one variable, cap D), top
// ring Z/p[x_1..x_s] (s = 0: constants only), restriction a ring map given
// by generator images, zero transfer and trivial conjugations.
struct GreenCpPresentation {
  int p = 2;
  int D = 2;
  int top_vars = 0;
  std::vector<TruncPoly> restriction_images;  // in the bottom ring, one per top variable
  bool transfer_zero = true;
  bool conjugation_trivial = true;

  TruncPoly bottom_x() const;  // the generator x
  TruncPoly restrict_top(const TruncPoly& f, bool* overflow = nullptr) const;
};

// Throws InputError(NotPrime) / InputError(BadCap) when D < p.
GreenCpPresentation build_R61(int p, int D);
GreenCpPresentation build_R63(int p, int s, int D);
// Top ring Z/p[x] with identity restriction; used as a negative control.
GreenCpPresentation build_identity_presentation(int p, int D);

struct CandidateCheck {
  TruncPoly candidate;     // proposed image of x under the norm
  TruncPoly restriction;   // its restriction to the bottom
  bool frobenius = false;  // restriction == x^p
  std::string reason;
};

// Every top-ring element whose restriction is x^p, found by exhaustive
// enumeration of coefficient vectors. all_candidates lists every tested
// element with its verdict when record_all is set.
struct FrobeniusSearch {
  std::uint64_t tested = 0;
  std::vector<TruncPoly> solutions;
  std::vector<CandidateCheck> all_candidates;
};
// Throws ResourceBound(coeff_cap) when the coefficient space is too large.
FrobeniusSearch frobenius_search(const GreenCpPresentation& g, bool record_all, ExecPolicy policy = ExecPolicy::serial);

struct Certificate {
  int p = 0;
  int D = 0;
  std::string target;  // x^p
  bool target_nonconstant = false;
  std::vector<CandidateCheck> candidates;
  bool no_tambara_structure = false;
};

// Exhausts the top ring of build_R61(p, D).
Certificate obstruction_61(int p, int D);

struct NormCandidate {
  TruncPoly image;  // n(x) in the top ring
  std::uint64_t multiplicative_checks = 0;
  std::uint64_t skipped_overflow = 0;
};

// All candidates for build_R63(p, s, D), sorted; each validated as a ring
// map with the Frobenius composite on monomials below the cap.
std::vector<NormCandidate> enumerate_63(int p, int s, int D, ExecPolicy policy = ExecPolicy::serial);

struct DistinctReport {
  bool ok() const { return distinct && meets_bound; }
  std::size_t count = 0;
  bool distinct = true;
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
  std::uint64_t monomial_bound = 0;  // C(s + p - 1, p)
  bool meets_bound = false;
};

DistinctReport check_distinct(const std::vector<NormCandidate>& candidates, int p, int s);

}  // namespace tamb

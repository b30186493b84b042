#include "tamb/green.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tamb/error.hpp"
#include "tamb/parallel.hpp"

namespace tamb {

namespace {

int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

int total(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

void same_ring(const TruncPoly& a, const TruncPoly& b) {
  if (a.p() != b.p() || a.vars() != b.vars() || a.cap() != b.cap())
    throw InputError("RingMismatch", "polynomials from different rings");
}

}  // namespace

TruncPoly::TruncPoly(int p, int s, int D) : p_(p), s_(s), D_(D) {
  if (p < 2) throw InputError("NotPrime", "modulus must be at least 2");
  if (s < 0 || D < 0) throw InputError("BadCap", "variable count and cap must be nonnegative");
}

TruncPoly TruncPoly::constant(int p, int s, int D, int c) {
  TruncPoly f(p, s, D);
  f.add_term(std::vector<int>(s, 0), c);
  return f;
}

TruncPoly TruncPoly::variable(int p, int s, int D, int i) {
  if (i < 0 || i >= s) throw InputError("BadVariable", "variable index out of range");
  std::vector<int> e(s, 0);
  e[i] = 1;
  return monomial(p, s, D, e);
}

TruncPoly TruncPoly::monomial(int p, int s, int D, const std::vector<int>& exponents, int c) {
  if (static_cast<int>(exponents.size()) != s) throw InputError("BadVariable", "exponent vector has the wrong length");
  if (total(exponents) > D) throw InputError("DegreeOverflow", "monomial beyond the degree cap");
  TruncPoly f(p, s, D);
  f.add_term(exponents, c);
  return f;
}

bool TruncPoly::is_constant() const {
  for (const auto& [e, c] : coeffs_)
    if (total(e) > 0) return false;
  return true;
}

int TruncPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) d = std::max(d, total(e));
  return d;
}

void TruncPoly::add_term(const std::vector<int>& exponents, int c, bool* overflow) {
  c = mod(c, p_);
  if (c == 0) return;
  if (total(exponents) > D_) {
    if (overflow) *overflow = true;
    return;
  }
  int& slot = coeffs_[exponents];
  slot = mod(slot + c, p_);
  if (slot == 0) coeffs_.erase(exponents);
}

std::string TruncPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, int>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = total(a.first), db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::ostringstream o;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) o << " + ";
    const auto& [e, c] = terms[t];
    std::vector<std::string> factors;
    for (int i = 0; i < s_; ++i) {
      if (e[i] == 0) continue;
      std::string v = s_ == 1 ? "x" : "x" + std::to_string(i + 1);
      if (e[i] > 1) v += "^" + std::to_string(e[i]);
      factors.push_back(v);
    }
    if (factors.empty()) {
      o << c;
      continue;
    }
    if (c != 1) o << c << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) o << (i ? "*" : "") << factors[i];
  }
  return o.str();
}

TruncPoly poly_add(const TruncPoly& a, const TruncPoly& b) {
  same_ring(a, b);
  TruncPoly r = a;
  for (const auto& [e, c] : b.coeffs()) r.add_term(e, c);
  return r;
}

TruncPoly poly_mul(const TruncPoly& a, const TruncPoly& b, bool* overflow) {
  same_ring(a, b);
  TruncPoly r(a.p(), a.vars(), a.cap());
  for (const auto& [ea, ca] : a.coeffs())
    for (const auto& [eb, cb] : b.coeffs()) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb, overflow);
    }
  return r;
}

TruncPoly poly_pow(const TruncPoly& a, int k, bool* overflow) {
  if (k < 0) throw InputError("BadExponent", "negative power");
  TruncPoly r = TruncPoly::constant(a.p(), a.vars(), a.cap(), 1);
  for (int i = 0; i < k; ++i) r = poly_mul(r, a, overflow);
  return r;
}

TruncPoly poly_substitute(const TruncPoly& f, const std::vector<TruncPoly>& images, const TruncPoly& target,
                          bool* overflow) {
  if (static_cast<int>(images.size()) != f.vars()) throw InputError("BadVariable", "one image per variable required");
  if (f.p() != target.p()) throw InputError("RingMismatch", "substitution changes the characteristic");
  for (const auto& im : images) same_ring(im, target);
  TruncPoly r(target.p(), target.vars(), target.cap());
  for (const auto& [e, c] : f.coeffs()) {
    TruncPoly term = TruncPoly::constant(target.p(), target.vars(), target.cap(), c);
    for (int i = 0; i < f.vars(); ++i) term = poly_mul(term, poly_pow(images[i], e[i], overflow), overflow);
    r = poly_add(r, term);
  }
  return r;
}

std::vector<std::vector<int>> monomials_up_to(int s, int D) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(s, 0);
  for (int d = 0; d <= D; ++d) {
    // exponent vectors of total degree d, lexicographically descending
    std::vector<std::vector<int>> level;
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == s - 1) {
        e[i] = left;
        level.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (s == 0) {
      if (d == 0) level.push_back({});
    } else {
      rec(rec, 0, d);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

TruncPoly GreenCpPresentation::bottom_x() const { return TruncPoly::variable(p, 1, D, 0); }

TruncPoly GreenCpPresentation::restrict_top(const TruncPoly& f, bool* overflow) const {
  return poly_substitute(f, restriction_images, TruncPoly(p, 1, D), overflow);
}

namespace {

void check_params(int p, int D) {
  if (!is_prime(p)) throw InputError("NotPrime", std::to_string(p) + " is not prime");
  if (D < p) throw InputError("BadCap", "degree cap must be at least p");
}

}  // namespace

GreenCpPresentation build_R61(int p, int D) {
  check_params(p, D);
  GreenCpPresentation g;
  g.p = p;
  g.D = D;
  g.top_vars = 0;
  return g;
}

GreenCpPresentation build_R63(int p, int s, int D) {
  check_params(p, D);
  if (s < 1) throw InputError("BadVariable", "need at least one top variable");
  GreenCpPresentation g;
  g.p = p;
  g.D = D;
  g.top_vars = s;
  g.restriction_images.assign(s, g.bottom_x());
  return g;
}

GreenCpPresentation build_identity_presentation(int p, int D) {
  auto g = build_R63(p, 1, D);
  return g;
}

FrobeniusSearch frobenius_search(const GreenCpPresentation& g, bool record_all, ExecPolicy policy) {
  auto monos = monomials_up_to(g.top_vars, g.D);
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    space *= static_cast<std::uint64_t>(g.p);
    if (space > limits().coeff_cap) throw ResourceBound("coeff_cap", "coefficient space of the top ring is too large");
  }
  TruncPoly target = poly_pow(g.bottom_x(), g.p);
  auto checks = indexed_map<CandidateCheck>(space, policy, [&](std::size_t idx) {
    TruncPoly f(g.p, g.top_vars, g.D);
    std::size_t rest = idx;
    for (const auto& m : monos) {
      f.add_term(m, static_cast<int>(rest % g.p));
      rest /= g.p;
    }
    bool over = false;
    auto r = g.restrict_top(f, &over);
    CandidateCheck c{f, r, false, ""};
    if (over) {
      c.reason = "restriction overflows the degree cap";
    } else if (r == target) {
      c.frobenius = true;
      c.reason = "restricts to " + target.to_string();
    } else {
      c.reason = "restricts to " + r.to_string() + (r.is_constant() ? ", a constant," : "") + " not " + target.to_string();
    }
    return c;
  });
  FrobeniusSearch out;
  out.tested = space;
  for (auto& c : checks) {
    if (c.frobenius) out.solutions.push_back(c.candidate);
    if (record_all) out.all_candidates.push_back(std::move(c));
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

Certificate obstruction_61(int p, int D) {
  auto g = build_R61(p, D);
  auto search = frobenius_search(g, true);
  Certificate cert;
  cert.p = p;
  cert.D = D;
  auto target = poly_pow(g.bottom_x(), p);
  cert.target = target.to_string();
  cert.target_nonconstant = !target.is_constant();
  cert.candidates = std::move(search.all_candidates);
  bool all_constant = true;
  for (const auto& c : cert.candidates)
    if (!c.restriction.is_constant()) all_constant = false;
  cert.no_tambara_structure = search.solutions.empty() && all_constant && cert.target_nonconstant &&
                              cert.candidates.size() == static_cast<std::size_t>(p);
  return cert;
}

std::vector<NormCandidate> enumerate_63(int p, int s, int D, ExecPolicy policy) {
  auto g = build_R63(p, s, D);
  auto search = frobenius_search(g, false, policy);
  std::vector<NormCandidate> out;
  const TruncPoly x = g.bottom_x();
  for (const auto& f : search.solutions) {
    NormCandidate nc{f, 0, 0};
    // N(x^k) = f^k; check N(x^i) N(x^j) = N(x^{i+j}) and r N(x^k) = x^{pk}
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) {
        bool over = false;
        auto lhs = poly_mul(poly_pow(f, i, &over), poly_pow(f, j, &over), &over);
        auto rhs = poly_pow(f, i + j, &over);
        if (over) {
          ++nc.skipped_overflow;
          continue;
        }
        ++nc.multiplicative_checks;
        if (!(lhs == rhs)) throw InternalError("norm candidate is not multiplicative: " + f.to_string());
      }
    for (int k = 0; p * k <= D; ++k) {
      bool over = false;
      auto r = g.restrict_top(poly_pow(f, k, &over), &over);
      if (over) {
        ++nc.skipped_overflow;
        continue;
      }
      ++nc.multiplicative_checks;
      if (!(r == poly_pow(x, p * k))) throw InternalError("Frobenius composite fails for " + f.to_string());
    }
    out.push_back(std::move(nc));
  }
  return out;
}

DistinctReport check_distinct(const std::vector<NormCandidate>& candidates, int p, int s) {
  DistinctReport r;
  r.count = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (candidates[i].image == candidates[j].image) {
        r.distinct = false;
        r.duplicates.emplace_back(i, j);
      }
  std::uint64_t b = 1;
  for (int i = 1; i <= p; ++i) b = b * static_cast<std::uint64_t>(s + i - 1) / static_cast<std::uint64_t>(i);
  r.monomial_bound = b;
  std::size_t distinct_count = candidates.size() - r.duplicates.size();
  r.meets_bound = r.distinct && distinct_count >= b;
  return r;
}

}  // namespace tamb

#pragma once

#include <map>
#include <set>
#include <vector>

#include "hyperoct/charrules.hpp"
#include "hyperoct/shapes.hpp"

namespace hyperoct {

// Degree-n elements of Lambda(x) (resp. Lambda(x) (x) Lambda(y)) in Schur
// coordinates, finitely supported with exact rational coefficients.
struct SchurVecA {
  int degree = 0;
  std::map<Partition, Rat> coeffs;

  static SchurVecA unit(const Partition& p);
  void add(const Partition& p, const Rat& c);
  void prune();  // drop zero coefficients
  bool operator==(const SchurVecA&) const = default;
};

struct SchurVecB {
  int degree = 0;
  std::map<Bipartition, Rat> coeffs;

  static SchurVecB unit(const Bipartition& bp);
  void add(const Bipartition& bp, const Rat& c);
  void prune();
  bool operator==(const SchurVecB&) const = default;
};

SchurVecB operator+(const SchurVecB& a, const SchurVecB& b);
SchurVecA operator+(const SchurVecA& a, const SchurVecA& b);

struct DescentDistributionA {
  int degree = 0;
  std::map<std::set<int>, long long> counts;
  bool operator==(const DescentDistributionA&) const = default;
};

struct DescentDistributionB {
  int degree = 0;
  std::map<SignedSet, long long> counts;
  bool operator==(const DescentDistributionB&) const = default;
};

// Frobenius characteristic: coefficient of s_lambda(x)s_mu(y) is the inner
// product with the irreducible character, computed from the class sums.
SchurVecB frobenius_b(const ClassFunctionB& chi);
SchurVecA frobenius_a(const ClassFunctionA& chi);

enum class SolveStatus { ok, not_in_span, not_nonneg_integral };

// Result of expressing a descent distribution over the per-shape SYT
// distributions.  The SYT distributions are linearly independent, so the
// solution is unique whenever it exists; coeffs is meaningful unless the
// status is not_in_span.
struct SchurSolveB {
  SolveStatus status = SolveStatus::not_in_span;
  SchurVecB coeffs;
};
struct SchurSolveA {
  SolveStatus status = SolveStatus::not_in_span;
  SchurVecA coeffs;
};

SchurSolveB dist_to_schur_b(const DescentDistributionB& d);
SchurSolveA dist_to_schur_a(const DescentDistributionA& d);

// Pieri products and the x-side involution.
SchurVecB mul_h_x(const SchurVecB& v, int k);   // horizontal strips on lambda
SchurVecB mul_e_x(const SchurVecB& v, int k);   // vertical strips on lambda
SchurVecB mul_s1_xy(const SchurVecB& v);        // one box on lambda or mu
SchurVecB omega_x(const SchurVecB& v);          // conjugate lambda

// Exact truncated polynomial model: exponents of x_1..x_m then y_1..y_m.
using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rat>;

Poly eval_poly_b(const DescentDistributionB& d, int m);
Poly eval_schur_b(const SchurVecB& v, int m);

std::string to_string(const SchurVecB& v);
std::string to_string(const SchurVecA& v);

}  // namespace hyperoct

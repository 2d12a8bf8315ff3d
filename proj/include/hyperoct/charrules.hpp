#pragma once

#include <map>
#include <set>

#include "hyperoct/numeric.hpp"
#include "hyperoct/shapes.hpp"

namespace hyperoct {

struct ClassFunctionA {
  int degree = 0;
  std::map<Partition, Rat> values;  // defined on every partition of degree
};

struct ClassFunctionB {
  int degree = 0;
  std::map<Bipartition, Rat> values;  // defined on every bipartition of degree
};

// S intersected with each open block {r_{i-1}+1,...,r_i - 1} of alpha is a
// prefix of that block.
bool is_unimodal(const std::set<int>& s, const Composition& alpha);

// The {-1,0,1} weight of a signed set with respect to a signed composition:
// 0 unless S(sigma) is unimodal for the underlying composition and the sign
// vector of sigma is constant on every closed block {r_{i-1}+1,...,r_i};
// otherwise (-1)^(|S \ S(gamma)| + #blocks negative in both sigma and gamma).
int weight(const SignedComposition& gamma, const SignedSet& sigma);

// Irreducible S_n character values: descent-set rule and the
// Murnaghan-Nakayama rule as an independent oracle.
Int chi_a(const Partition& lambda, const Composition& alpha);
Int chi_a_mn(const Partition& lambda, const Composition& alpha);

// Irreducible B_n character values: weighted sum over the signed descent
// sets of SYT(lambda,mu), and the power-sum splitting formula as an
// independent oracle (which evaluates chi_a_mn only).
Int chi_b(const Bipartition& shape, const SignedComposition& gamma);
Int chi_b_oracle(const Bipartition& shape, const Bipartition& cls);

Int class_size(const Bipartition& cls);    // in B_n
Int class_size_a(const Partition& cls);    // in S_n

// Sum of count(sigma) * weight(gamma, sigma) over a descent multiset.
Int evaluate_fine_sum(const std::map<SignedSet, long long>& counts,
                      const SignedComposition& gamma);

// Memoized full tables; rows are shapes, columns classes, canonical order.
const std::map<Bipartition, std::map<Bipartition, Int>>& character_table_b(int n);
const std::map<Partition, std::map<Partition, Int>>& character_table_a(int n);

// Signed composition with the parts of alpha unbarred followed by the parts
// of beta barred.
SignedComposition class_composition(const Bipartition& cls);

}  // namespace hyperoct

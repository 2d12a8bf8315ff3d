#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperoct/rsk.hpp"
#include "hyperoct/signed_perm.hpp"
#include "hyperoct/symring.hpp"

namespace hyperoct {

struct FineSetReport {
  std::string family;
  int n = 0;
  std::string params;
  bool pass = false;
  std::string detail;
  std::optional<SchurVecB> schur_b;
  std::optional<SchurVecA> schur_a;
  std::optional<SchurVecB> expected_b;
  std::optional<SchurVecA> expected_a;
  std::optional<DescentDistributionB> dist_b;
  std::optional<DescentDistributionA> dist_a;
  double seconds = 0.0;
};

// Descent multisets of explicit sets of (signed) permutations.
DescentDistributionB sdes_distribution(int n, const std::vector<SignedPerm>& set);
DescentDistributionA des_distribution(int n, const std::vector<SignedPerm>& set);

std::vector<SignedPerm> involutions(int n);
std::vector<SignedPerm> inverse_sdes_class(const SignedSet& sigma);
std::vector<SignedPerm> fmaj_inverse_level(int n, long long k);
std::vector<SignedPerm> finv_inverse_level(int n, long long k);
std::vector<SignedPerm> fmaj_level(int n, long long k);
std::vector<SignedPerm> finv_level(int n, long long k);
std::vector<SignedPerm> length_b_level(int n, long long k);
std::vector<SignedPerm> conjugacy_class(int n, const Bipartition& cls);
std::vector<SignedPerm> derangements_b(int n);
std::vector<SignedPerm> desarrangements_b(int n);
std::vector<SignedPerm> k_roots_of_identity(int n, int k);
std::vector<SignedPerm> k_roots_of_identity_a(int n, int k);

// Graded coinvariant-algebra character: coefficient of (lambda,mu) is the
// number of bitableaux of that shape with flag-major index k.
SchurVecB coinvariant_character_b(int n, long long k);

// Number of bitableaux of the given shape whose maximal initial segment
// 1..k in the first column of the plus tableau has even length.
long long first_column_coefficient(const Bipartition& shape);

// omega_x ch(psi_n) through the recursion v_n = s_1(x,y)*v_{n-1} + (-1)^n e_n(x).
SchurVecB psi_character(int n);
// The same vector through the alternating sum, as an independent route.
SchurVecB derangement_sum_vector(int n);

ClassFunctionB kroot_class_function(int n, int k);
ClassFunctionA kroot_class_function_a(int n, int k);

struct ArcFamilies {
  std::vector<SignedPerm> arc;            // arc permutations in S_n
  std::vector<SignedPerm> left_unimodal;
  std::vector<SignedPerm> right_unimodal;
  std::vector<SignedPerm> b_arc;          // suffix intervals in Z_2n
  std::vector<SignedPerm> signed_arc;
};
ArcFamilies arc_families(int n);

// Named theorem checks; throws on unknown names.
FineSetReport verify_theorem(const std::string& name, int n);

// CLI-facing suites, each a bundle of verify_theorem runs.
std::vector<std::string> suite_names();
std::vector<FineSetReport> run_suite(const std::string& suite, int n);

}  // namespace hyperoct

#pragma once

#include <vector>

#include "hyperoct/numeric.hpp"
#include "hyperoct/shapes.hpp"

namespace hyperoct {

// Square weight matrix of order 2*3^(n-1): rows indexed by signed
// compositions, columns by signed sets, both in lexicographic word order
// with 0 < 1 < *.  Entries lie in {-1,0,1}.
struct WeightMatrix {
  int n = 0;
  std::vector<SignedComposition> rows;
  std::vector<SignedSet> cols;
  std::vector<std::vector<int>> entries;

  int dim() const { return static_cast<int>(cols.size()); }
  bool operator==(const WeightMatrix&) const = default;
};

// Builders; n is capped by the matrix bound (default 6, HYPEROCT_MAX_N
// raises it).
WeightMatrix build_a(int n);
WeightMatrix build_a_hat(int n);      // zero where the row word's leading *-run is longer
WeightMatrix build_a_part(int n, char letter);  // keep columns whose first non-* letter is `letter`

// Fraction-free Bareiss elimination; exact.
Int det_bareiss(std::vector<std::vector<Int>> m);
Rat det_exact(const WeightMatrix& m);
// Determinant of alpha*A + (1-alpha)*Ahat.
Rat det_exact_mix(const WeightMatrix& a, const WeightMatrix& a_hat, const Rat& alpha);

// Closed-form signed value: -prod over signed compositions gamma of
// 2^(k/2) * (alpha*gamma_1 + (1-alpha)) * prod_{i>=2} gamma_i, with the
// square-root factors aggregated over the whole product (their total
// exponent is even).
Rat det_closed_form(int n, const Rat& alpha);

// Checks that level n+1 matrices equal their block assemblies from level n.
bool verify_block_recursion(int n);

}  // namespace hyperoct

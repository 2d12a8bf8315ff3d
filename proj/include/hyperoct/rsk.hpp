#pragma once

#include <utility>
#include <vector>

#include "hyperoct/signed_perm.hpp"
#include "hyperoct/tableaux.hpp"

namespace hyperoct {

// Robinson-Schensted for S_n; throws on barred input.
std::pair<Tableau, Tableau> rsk_a(const SignedPerm& w);

// Type-B analogue: the unbarred subsequence is row-inserted against its
// positions to give (P+,Q+), the absolute values of the barred subsequence
// against their positions to give (P-,Q-).
std::pair<Bitableau, Bitableau> rsk_b(const SignedPerm& w);

// All w in B_n with insertion bitableau P^B(w) = t.
std::vector<SignedPerm> knuth_class(const Bitableau& t);

}  // namespace hyperoct

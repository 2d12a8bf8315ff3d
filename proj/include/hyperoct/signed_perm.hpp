#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hyperoct/shapes.hpp"

namespace hyperoct {

// Element of B_n stored by its window (w(1),...,w(n)): nonzero integers
// whose absolute values form a permutation of [n]; a negative entry is a
// barred letter.  All-positive windows double as elements of S_n.
class SignedPerm {
 public:
  explicit SignedPerm(std::vector<int> window);
  static SignedPerm identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  int entry(int i) const { return window_[i - 1]; }   // w(i), 1 <= i <= n
  int image(int a) const;                              // extends to +-[n]
  const std::vector<int>& window() const { return window_; }
  bool is_unsigned() const;                            // no barred letters

  bool operator==(const SignedPerm&) const = default;
  bool operator<(const SignedPerm& other) const { return window_ < other.window_; }

 private:
  std::vector<int> window_;
};

struct SignedCycleType {
  Partition positive;
  Partition negative;
  Bipartition as_bipartition() const { return Bipartition(positive, negative); }
  bool operator==(const SignedCycleType&) const = default;
};

SignedPerm compose(const SignedPerm& u, const SignedPerm& v);  // (u.v)(i) = u(v(i))
SignedPerm inverse(const SignedPerm& w);
SignedPerm power(const SignedPerm& w, long long k);

// Comparison of window letters in the order 1b < 2b < ... < nb < 1 < ... < n.
bool less_r(int a, int b);

std::set<int> des(const SignedPerm& w);
SignedSet sdes(const SignedPerm& w);

long long inv(const SignedPerm& w);   // inversions w.r.t. less_r
long long maj(const SignedPerm& w);
long long bar(const SignedPerm& w);   // number of barred letters
long long finv(const SignedPerm& w);  // 2*inv + bar
long long fmaj(const SignedPerm& w);  // 2*maj + bar
long long length_b(const SignedPerm& w);

SignedCycleType cycle_type(const SignedPerm& w);

// All of B_n (resp. S_n) in lexicographic window order under the natural
// integer order.  Throws when n exceeds the enumeration bound
// (HYPEROCT_MAX_N, default 8).
std::vector<SignedPerm> enumerate_bn(int n);
std::vector<SignedPerm> enumerate_sn(int n);
void for_each_bn(int n, const std::function<void(const SignedPerm&)>& fn);

std::string to_string(const SignedPerm& w);

}  // namespace hyperoct

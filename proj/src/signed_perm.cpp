#include "hyperoct/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

SignedPerm::SignedPerm(std::vector<int> window) : window_(std::move(window)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("window must be nonempty");
  std::vector<bool> seen(n + 1, false);
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("window absolute values must be a permutation of [n]");
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

int SignedPerm::image(int a) const {
  const int v = window_[std::abs(a) - 1];
  return a > 0 ? v : -v;
}

bool SignedPerm::is_unsigned() const {
  return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
}

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
  std::vector<int> w(u.size());
  for (int i = 1; i <= v.size(); ++i) w[i - 1] = u.image(v.entry(i));
  return SignedPerm(std::move(w));
}

SignedPerm inverse(const SignedPerm& w) {
  std::vector<int> res(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    const int a = w.entry(i);
    if (a > 0)
      res[a - 1] = i;
    else
      res[-a - 1] = -i;
  }
  return SignedPerm(std::move(res));
}

SignedPerm power(const SignedPerm& w, long long k) {
  if (k < 0) return power(inverse(w), -k);
  SignedPerm result = SignedPerm::identity(w.size());
  SignedPerm base = w;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

bool less_r(int a, int b) {
  const bool neg_a = a < 0, neg_b = b < 0;
  if (neg_a != neg_b) return neg_a;
  return std::abs(a) < std::abs(b);
}

std::set<int> des(const SignedPerm& w) {
  std::set<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (less_r(w.entry(i + 1), w.entry(i))) d.insert(i);
  return d;
}

SignedSet sdes(const SignedPerm& w) {
  const int n = w.size();
  std::vector<int> elems;
  std::vector<bool> negative;
  for (int s = 1; s < n; ++s) {
    const int a = w.entry(s), b = w.entry(s + 1);
    if (less_r(b, a) || (a < 0 && b > 0)) {
      elems.push_back(s);
      negative.push_back(a < 0);
    }
  }
  elems.push_back(n);
  negative.push_back(w.entry(n) < 0);
  return SignedSet::from_parts(n, elems, negative);
}

long long inv(const SignedPerm& w) {
  long long count = 0;
  for (int i = 1; i < w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (less_r(w.entry(j), w.entry(i))) ++count;
  return count;
}

long long maj(const SignedPerm& w) {
  long long total = 0;
  for (int i : des(w)) total += i;
  return total;
}

long long bar(const SignedPerm& w) {
  return std::count_if(w.window().begin(), w.window().end(), [](int v) { return v < 0; });
}

long long finv(const SignedPerm& w) { return 2 * inv(w) + bar(w); }

long long fmaj(const SignedPerm& w) { return 2 * maj(w) + bar(w); }

long long length_b(const SignedPerm& w) {
  long long total = 0;
  for (int i = 1; i < w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w.entry(i) > w.entry(j)) ++total;
  for (int v : w.window())
    if (v < 0) total += -v;
  return total;
}

SignedCycleType cycle_type(const SignedPerm& w) {
  const int n = w.size();
  std::vector<bool> visited(n + 1, false);
  std::vector<int> positive, negative;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    int len = 0, sign = 1, cur = start;
    do {
      visited[cur] = true;
      const int v = w.entry(cur);
      if (v < 0) sign = -sign;
      cur = std::abs(v);
      ++len;
    } while (cur != start);
    (sign > 0 ? positive : negative).push_back(len);
  }
  std::sort(positive.rbegin(), positive.rend());
  std::sort(negative.rbegin(), negative.rend());
  return SignedCycleType{Partition(std::move(positive)), Partition(std::move(negative))};
}

namespace {

void check_bound(int n) {
  const int bound = enumeration_bound();
  if (n < 1 || n > bound)
    throw std::out_of_range("enumeration bound exceeded (n must be in [1," +
                            std::to_string(bound) + "])");
}

// Recursion emits windows in lexicographic order under the natural integer
// order: candidate first letters run -n,...,-1,1,...,n.
void gen_bn(int n, bool signs, std::vector<int>& acc, std::vector<bool>& used,
            const std::function<void(const SignedPerm&)>& fn) {
  if (static_cast<int>(acc.size()) == n) {
    fn(SignedPerm(acc));
    return;
  }
  if (signs) {
    for (int v = -n; v <= -1; ++v)
      if (!used[-v]) {
        used[-v] = true;
        acc.push_back(v);
        gen_bn(n, signs, acc, used, fn);
        acc.pop_back();
        used[-v] = false;
      }
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) {
      used[v] = true;
      acc.push_back(v);
      gen_bn(n, signs, acc, used, fn);
      acc.pop_back();
      used[v] = false;
    }
}

}  // namespace

void for_each_bn(int n, const std::function<void(const SignedPerm&)>& fn) {
  check_bound(n);
  std::vector<int> acc;
  std::vector<bool> used(n + 1, false);
  gen_bn(n, true, acc, used, fn);
}

std::vector<SignedPerm> enumerate_bn(int n) {
  std::vector<SignedPerm> out;
  for_each_bn(n, [&out](const SignedPerm& w) { out.push_back(w); });
  return out;
}

std::vector<SignedPerm> enumerate_sn(int n) {
  check_bound(n);
  std::vector<SignedPerm> out;
  std::vector<int> acc;
  std::vector<bool> used(n + 1, false);
  gen_bn(n, false, acc, used,
         [&out](const SignedPerm& w) { out.push_back(w); });
  return out;
}

std::string to_string(const SignedPerm& w) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1) os << ',';
    os << w.entry(i);
  }
  os << ')';
  return os.str();
}

}  // namespace hyperoct

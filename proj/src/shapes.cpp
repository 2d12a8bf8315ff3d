#include "hyperoct/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts.empty()) return Partition{};
  std::vector<int> conj(parts[0], 0);
  for (int part : parts)
    for (int c = 0; c < part; ++c) conj[c]++;
  return Partition(std::move(conj));
}

Int Partition::syt_count() const {
  const int n = size();
  Int hooks = 1;
  const Partition conj = conjugate();
  for (int r = 0; r < length(); ++r)
    for (int c = 0; c < parts[r]; ++c)
      hooks *= (parts[r] - c) + (conj.parts[c] - r) - 1;
  return factorial(n) / hooks;
}

Int Bipartition::syt_count() const {
  return binomial(size(), lambda.size()) * lambda.syt_count() * mu.syt_count();
}

bool Bipartition::operator<(const Bipartition& other) const {
  if (lambda.size() != other.lambda.size()) return lambda.size() > other.lambda.size();
  if (!(lambda == other.lambda)) return lambda < other.lambda;
  return mu < other.mu;
}

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> sums;
  int acc = 0;
  for (int p : parts) sums.push_back(acc += p);
  return sums;
}

SignedSet::SignedSet(std::string word) : word_(std::move(word)) {
  if (word_.empty()) throw std::invalid_argument("signed set word must be nonempty");
  for (char c : word_)
    if (c != '0' && c != '1' && c != '*')
      throw std::invalid_argument("signed set word letters must be 0, 1 or *");
  if (word_.back() == '*')
    throw std::invalid_argument("signed set word must not end with *");
}

SignedSet SignedSet::from_parts(int n, const std::vector<int>& elems,
                                const std::vector<bool>& negative) {
  if (elems.size() != negative.size())
    throw std::invalid_argument("element/sign length mismatch");
  std::string w(n, '*');
  for (size_t i = 0; i < elems.size(); ++i) {
    const int s = elems[i];
    if (s < 1 || s > n) throw std::invalid_argument("signed set element out of range");
    w[s - 1] = negative[i] ? '1' : '0';
  }
  return SignedSet(std::move(w));
}

std::vector<int> SignedSet::elements() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (word_[i] != '*') s.push_back(i + 1);
  return s;
}

bool SignedSet::contains(int s) const {
  return s >= 1 && s <= n() && word_[s - 1] != '*';
}

bool SignedSet::is_negative(int s) const {
  if (!contains(s)) throw std::out_of_range("not an element of the signed set");
  return word_[s - 1] == '1';
}

std::vector<int> SignedSet::sign_vector() const {
  std::vector<int> eps(n(), 0);
  int sign = 0;
  for (int i = n() - 1; i >= 0; --i) {
    if (word_[i] == '0') sign = +1;
    if (word_[i] == '1') sign = -1;
    eps[i] = sign;
  }
  return eps;
}

std::set<int> SignedSet::wdes() const {
  const std::vector<int> s = elements();
  std::set<int> result;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    const bool neg = is_negative(s[i]);
    const bool neg_next = is_negative(s[i + 1]);
    if (neg == neg_next || (!neg && neg_next)) result.insert(s[i]);
  }
  return result;
}

namespace {
int letter_rank(char c) { return c == '0' ? 0 : (c == '1' ? 1 : 2); }
}  // namespace

bool SignedSet::operator<(const SignedSet& other) const {
  const std::string& a = word_;
  const std::string& b = other.word_;
  const size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i)
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  return a.size() < b.size();
}

SignedComposition::SignedComposition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x == 0) throw std::invalid_argument("signed composition parts must be nonzero");
}

int SignedComposition::size() const {
  int acc = 0;
  for (int p : parts) acc += std::abs(p);
  return acc;
}

Composition SignedComposition::underlying() const {
  std::vector<int> u;
  u.reserve(parts.size());
  for (int p : parts) u.push_back(std::abs(p));
  return Composition(std::move(u));
}

SignedSet sigset_from_comp(const SignedComposition& gamma) {
  std::vector<int> elems;
  std::vector<bool> negative;
  int acc = 0;
  for (int p : gamma.parts) {
    acc += std::abs(p);
    elems.push_back(acc);
    negative.push_back(p < 0);
  }
  return SignedSet::from_parts(acc, elems, negative);
}

SignedComposition comp_from_sigset(const SignedSet& sigma) {
  std::vector<int> parts;
  int prev = 0;
  for (int s : sigma.elements()) {
    const int size = s - prev;
    parts.push_back(sigma.is_negative(s) ? -size : size);
    prev = s;
  }
  return SignedComposition(std::move(parts));
}

SignedSet word_decode(const std::string& word) { return SignedSet(word); }

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& l : partitions_of(k))
      for (const Partition& m : partitions_of(n - k)) out.emplace_back(l, m);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) return out;
  // One composition per subset of break points {1,...,n-1}.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int prev = 0;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) {
        parts.push_back(i - prev);
        prev = i;
      }
    parts.push_back(n - prev);
    out.push_back(Composition(std::move(parts)));
  }
  return out;
}

namespace {

void gen_words(int n, std::string& acc, std::vector<SignedSet>& out) {
  if (static_cast<int>(acc.size()) == n - 1) {
    for (char c : {'0', '1'}) {
      acc.push_back(c);
      out.push_back(SignedSet(acc));
      acc.pop_back();
    }
    return;
  }
  for (char c : {'0', '1', '*'}) {
    acc.push_back(c);
    gen_words(n, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SignedSet> signed_sets_of(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<SignedSet> out;
  size_t count = 2;
  for (int i = 1; i < n; ++i) count *= 3;
  out.reserve(count);
  std::string acc;
  gen_words(n, acc, out);
  return out;
}

std::vector<SignedComposition> signed_compositions_of(int n) {
  std::vector<SignedComposition> out;
  for (const SignedSet& s : signed_sets_of(n)) out.push_back(comp_from_sigset(s));
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ',';
    os << p.parts[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const Bipartition& bp) {
  return "(" + to_string(bp.lambda) + "," + to_string(bp.mu) + ")";
}

std::string to_string(const SignedComposition& g) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < g.parts.size(); ++i) {
    if (i) os << ',';
    os << g.parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace hyperoct

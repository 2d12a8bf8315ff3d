#include "hyperoct/charrules.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hyperoct/tableaux.hpp"

namespace hyperoct {

bool is_unimodal(const std::set<int>& s, const Composition& alpha) {
  int prev = 0;
  for (int r : alpha.partial_sums()) {
    bool gap = false;
    for (int j = prev + 1; j <= r - 1; ++j) {
      if (s.count(j)) {
        if (gap) return false;
      } else {
        gap = true;
      }
    }
    prev = r;
  }
  return true;
}

int weight(const SignedComposition& gamma, const SignedSet& sigma) {
  if (gamma.size() != sigma.n()) throw std::invalid_argument("size mismatch");
  const std::vector<int> elems = sigma.elements();
  const std::set<int> s(elems.begin(), elems.end());
  if (!is_unimodal(s, gamma.underlying())) return 0;

  // eps[j-1] is the sign of position j.
  const std::vector<int> eps = sigma.sign_vector();
  int exponent = 0;
  int prev = 0;
  std::set<int> s_gamma;
  for (int p : gamma.parts) {
    const int r = prev + std::abs(p);
    s_gamma.insert(r);
    for (int j = prev + 1; j < r; ++j)
      if (eps[j] != eps[prev]) return 0;  // sign vector not constant on the block
    if (eps[prev] < 0 && p < 0) ++exponent;  // block negative in both sigma and gamma
    prev = r;
  }
  for (int e : elems)
    if (!s_gamma.count(e)) ++exponent;
  return exponent % 2 == 0 ? 1 : -1;
}

Int chi_a(const Partition& lambda, const Composition& alpha) {
  if (lambda.size() != alpha.size()) throw std::invalid_argument("size mismatch");
  const std::vector<int> sums = alpha.partial_sums();
  const std::set<int> s_alpha(sums.begin(), sums.end());
  Int total = 0;
  for (const Tableau& q : enumerate_syt(lambda)) {
    const std::set<int> d = des_tableau(q);
    if (!is_unimodal(d, alpha)) continue;
    int outside = 0;
    for (int i : d)
      if (!s_alpha.count(i)) ++outside;
    total += outside % 2 == 0 ? 1 : -1;
  }
  return total;
}

namespace {

// Murnaghan-Nakayama by beta-sets: removing a border strip of size k is
// replacing b in the beta-set by b-k; the height is the number of beta
// elements jumped over.
Int mn_rec(const std::vector<int>& lambda, const std::vector<int>& parts, size_t idx,
           std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
  if (idx == parts.size()) return lambda.empty() ? Int(1) : Int(0);
  std::vector<int> rest(parts.begin() + idx, parts.end());
  const auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = parts[idx];
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  // beta is strictly decreasing

  Int total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = target;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nlambda;
    const int nlen = static_cast<int>(nbeta.size());
    for (int j = 0; j < nlen; ++j) {
      const int part = nbeta[j] - (nlen - 1 - j);
      if (part > 0) nlambda.push_back(part);
    }
    const Int sub = mn_rec(nlambda, parts, idx + 1, memo);
    total += height % 2 == 0 ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& mn_memo() {
  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
  return memo;
}

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int chi_a_mn(const Partition& lambda, const Composition& alpha) {
  if (lambda.size() != alpha.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> parts = alpha.parts;
  std::sort(parts.rbegin(), parts.rend());
  std::lock_guard<std::mutex> lock(table_mutex());
  return mn_rec(lambda.parts, parts, 0, mn_memo());
}

Int chi_b(const Bipartition& shape, const SignedComposition& gamma) {
  if (shape.size() != gamma.size()) throw std::invalid_argument("size mismatch");
  return evaluate_fine_sum(sdes_distribution_of_shape(shape), gamma);
}

Int chi_b_oracle(const Bipartition& shape, const Bipartition& cls) {
  if (shape.size() != cls.size()) throw std::invalid_argument("size mismatch");
  const std::vector<int>& alpha = cls.lambda.parts;
  const std::vector<int>& beta = cls.mu.parts;
  const int la = static_cast<int>(alpha.size());
  const int lb = static_cast<int>(beta.size());
  Int total = 0;
  for (unsigned ea = 0; ea < (1u << la); ++ea) {
    for (unsigned zb = 0; zb < (1u << lb); ++zb) {
      std::vector<int> nu, xi;
      for (int i = 0; i < la; ++i)
        ((ea >> i) & 1 ? xi : nu).push_back(alpha[i]);
      int minus_count = 0;
      for (int j = 0; j < lb; ++j) {
        if ((zb >> j) & 1) {
          xi.push_back(beta[j]);
          ++minus_count;
        } else {
          nu.push_back(beta[j]);
        }
      }
      int nu_size = 0, xi_size = 0;
      for (int p : nu) nu_size += p;
      for (int p : xi) xi_size += p;
      if (nu_size != shape.lambda.size() || xi_size != shape.mu.size()) continue;
      Int term = chi_a_mn(shape.lambda, Composition(nu));
      if (term == 0) continue;
      term *= chi_a_mn(shape.mu, Composition(xi));
      total += minus_count % 2 == 0 ? term : -term;
    }
  }
  return total;
}

namespace {

Int cycle_centralizer(const Partition& p) {
  // z_lambda = prod_i i^{m_i} m_i!
  Int z = 1;
  std::map<int, int> mult;
  for (int part : p.parts) mult[part]++;
  for (const auto& [part, m] : mult) {
    for (int i = 0; i < m; ++i) z *= part;
    z *= factorial(m);
  }
  return z;
}

}  // namespace

Int class_size(const Bipartition& cls) {
  const int n = cls.size();
  Int z = cycle_centralizer(cls.lambda) * cycle_centralizer(cls.mu);
  for (int i = 0; i < cls.lambda.length() + cls.mu.length(); ++i) z *= 2;
  Int order = factorial(n);
  for (int i = 0; i < n; ++i) order *= 2;
  return order / z;
}

Int class_size_a(const Partition& cls) {
  return factorial(cls.size()) / cycle_centralizer(cls);
}

Int evaluate_fine_sum(const std::map<SignedSet, long long>& counts,
                      const SignedComposition& gamma) {
  Int total = 0;
  for (const auto& [sigma, count] : counts) total += Int(count) * weight(gamma, sigma);
  return total;
}

SignedComposition class_composition(const Bipartition& cls) {
  std::vector<int> parts;
  for (int p : cls.lambda.parts) parts.push_back(p);
  for (int p : cls.mu.parts) parts.push_back(-p);
  return SignedComposition(std::move(parts));
}

const std::map<Bipartition, std::map<Bipartition, Int>>& character_table_b(int n) {
  static std::map<int, std::map<Bipartition, std::map<Bipartition, Int>>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<Bipartition, std::map<Bipartition, Int>> table;
  const std::vector<Bipartition> shapes = bipartitions_of(n);
  for (const Bipartition& shape : shapes)
    for (const Bipartition& cls : shapes)
      table[shape][cls] = chi_b_oracle(shape, cls);
  return cache.emplace(n, std::move(table)).first->second;
}

const std::map<Partition, std::map<Partition, Int>>& character_table_a(int n) {
  static std::map<int, std::map<Partition, std::map<Partition, Int>>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<Partition, std::map<Partition, Int>> table;
  for (const Partition& shape : partitions_of(n))
    for (const Partition& cls : partitions_of(n))
      table[shape][cls] = chi_a_mn(shape, Composition(cls.parts));
  return cache.emplace(n, std::move(table)).first->second;
}

}  // namespace hyperoct

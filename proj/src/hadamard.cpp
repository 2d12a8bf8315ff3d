#include "hyperoct/hadamard.hpp"

#include <stdexcept>

#include "hyperoct/charrules.hpp"

namespace hyperoct {

namespace {

void check_matrix_bound(int n) {
  const int bound = enumeration_bound(6);
  if (n < 1 || n > bound)
    throw std::out_of_range("matrix bound exceeded (n must be in [1," +
                            std::to_string(bound) + "])");
}

size_t leading_stars(const std::string& w) {
  size_t i = 0;
  while (i < w.size() && w[i] == '*') ++i;
  return i;
}

char first_letter(const std::string& w) { return w[leading_stars(w)]; }

WeightMatrix build_full(int n) {
  WeightMatrix m;
  m.n = n;
  m.cols = signed_sets_of(n);
  for (const SignedSet& s : m.cols) m.rows.push_back(comp_from_sigset(s));
  m.entries.assign(m.cols.size(), std::vector<int>(m.cols.size(), 0));
  for (size_t r = 0; r < m.rows.size(); ++r)
    for (size_t c = 0; c < m.cols.size(); ++c)
      m.entries[r][c] = weight(m.rows[r], m.cols[c]);
  return m;
}

}  // namespace

WeightMatrix build_a(int n) {
  check_matrix_bound(n);
  return build_full(n);
}

WeightMatrix build_a_hat(int n) {
  check_matrix_bound(n);
  WeightMatrix m = build_full(n);
  for (size_t r = 0; r < m.rows.size(); ++r) {
    const size_t row_stars = leading_stars(sigset_from_comp(m.rows[r]).word());
    for (size_t c = 0; c < m.cols.size(); ++c)
      if (row_stars > leading_stars(m.cols[c].word())) m.entries[r][c] = 0;
  }
  return m;
}

WeightMatrix build_a_part(int n, char letter) {
  check_matrix_bound(n);
  if (letter != '0' && letter != '1')
    throw std::invalid_argument("letter must be '0' or '1'");
  WeightMatrix m = build_full(n);
  for (size_t c = 0; c < m.cols.size(); ++c)
    if (first_letter(m.cols[c].word()) != letter)
      for (size_t r = 0; r < m.rows.size(); ++r) m.entries[r][c] = 0;
  return m;
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix must be square");
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Rat det_exact(const WeightMatrix& m) {
  std::vector<std::vector<Int>> w(m.entries.size());
  for (size_t r = 0; r < m.entries.size(); ++r)
    w[r].assign(m.entries[r].begin(), m.entries[r].end());
  return Rat(det_bareiss(std::move(w)));
}

Rat det_exact_mix(const WeightMatrix& a, const WeightMatrix& a_hat, const Rat& alpha) {
  if (a.n != a_hat.n) throw std::invalid_argument("level mismatch");
  const Int p = boost::multiprecision::numerator(alpha);
  const Int q = boost::multiprecision::denominator(alpha);
  const size_t d = a.entries.size();
  // q * (alpha*A + (1-alpha)*Ahat) is integral.
  std::vector<std::vector<Int>> w(d, std::vector<Int>(d));
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      w[r][c] = p * a.entries[r][c] + (q - p) * a_hat.entries[r][c];
  Rat det(det_bareiss(std::move(w)));
  Rat scale = 1;
  for (size_t i = 0; i < d; ++i) scale *= Rat(q);
  return det / scale;
}

Rat det_closed_form(int n, const Rat& alpha) {
  long long star_exponent = 0;  // total count of 2^(1/2) factors
  Rat prod = 1;
  for (const SignedComposition& gamma : signed_compositions_of(n)) {
    star_exponent += gamma.length();
    const std::vector<int>& parts = gamma.parts;
    Rat factor = alpha * std::abs(parts[0]) + (Rat(1) - alpha);
    for (size_t i = 1; i < parts.size(); ++i) factor *= std::abs(parts[i]);
    prod *= factor;
  }
  if (star_exponent % 2 != 0)
    throw std::logic_error("aggregate square-root exponent must be even");
  Rat pow2 = 1;
  for (long long i = 0; i < star_exponent / 2; ++i) pow2 *= 2;
  return -pow2 * prod;
}

bool verify_block_recursion(int n) {
  const WeightMatrix a = build_a(n);
  const WeightMatrix a_hat = build_a_hat(n);
  const WeightMatrix a0 = build_a_part(n, '0');
  const WeightMatrix a1 = build_a_part(n, '1');
  const WeightMatrix big = build_a(n + 1);
  const WeightMatrix big_hat = build_a_hat(n + 1);
  const int d = a.dim();

  auto block_value = [&](size_t br, size_t bc, size_t r, size_t c, bool hat) -> int {
    const int av = a.entries[r][c];
    switch (br * 3 + bc) {
      case 0: case 1: case 2: return av;                      // (0,*): A A A
      case 3: return av;                                      // (1,0): A
      case 4: return -av;                                     // (1,1): -A
      case 5: return a0.entries[r][c] - a1.entries[r][c];     // (1,*): A0 - A1
      case 6: return hat ? 0 : -a0.entries[r][c];             // (*,0)
      case 7: return hat ? 0 : -a1.entries[r][c];             // (*,1)
      default: return a_hat.entries[r][c];                    // (*,*): Ahat
    }
  };

  for (int br = 0; br < 3; ++br)
    for (int bc = 0; bc < 3; ++bc)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const int R = br * d + r, C = bc * d + c;
          if (big.entries[R][C] != block_value(br, bc, r, c, false)) return false;
          if (big_hat.entries[R][C] != block_value(br, bc, r, c, true)) return false;
        }
  return true;
}

}  // namespace hyperoct

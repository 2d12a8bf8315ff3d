#include "hyperoct/symring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hyperoct/tableaux.hpp"

namespace hyperoct {

SchurVecA SchurVecA::unit(const Partition& p) {
  SchurVecA v;
  v.degree = p.size();
  v.coeffs[p] = 1;
  return v;
}

void SchurVecA::add(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

void SchurVecA::prune() {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

SchurVecB SchurVecB::unit(const Bipartition& bp) {
  SchurVecB v;
  v.degree = bp.size();
  v.coeffs[bp] = 1;
  return v;
}

void SchurVecB::add(const Bipartition& bp, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.emplace(bp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

void SchurVecB::prune() {
  for (auto it = coeffs.begin(); it != coeffs.end();)
    it = it->second == 0 ? coeffs.erase(it) : std::next(it);
}

SchurVecB operator+(const SchurVecB& a, const SchurVecB& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  SchurVecB r = a;
  for (const auto& [bp, c] : b.coeffs) r.add(bp, c);
  return r;
}

SchurVecA operator+(const SchurVecA& a, const SchurVecA& b) {
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  SchurVecA r = a;
  for (const auto& [p, c] : b.coeffs) r.add(p, c);
  return r;
}

SchurVecB frobenius_b(const ClassFunctionB& chi) {
  const int n = chi.degree;
  Int order = factorial(n);
  for (int i = 0; i < n; ++i) order *= 2;
  const auto& table = character_table_b(n);
  SchurVecB result;
  result.degree = n;
  for (const Bipartition& shape : bipartitions_of(n)) {
    Rat acc = 0;
    for (const Bipartition& cls : bipartitions_of(n)) {
      const auto it = chi.values.find(cls);
      if (it == chi.values.end())
        throw std::invalid_argument("class function missing a class value");
      acc += Rat(class_size(cls)) * it->second * Rat(table.at(shape).at(cls));
    }
    result.add(shape, acc / Rat(order));
  }
  return result;
}

SchurVecA frobenius_a(const ClassFunctionA& chi) {
  const int n = chi.degree;
  const Int order = factorial(n);
  const auto& table = character_table_a(n);
  SchurVecA result;
  result.degree = n;
  for (const Partition& shape : partitions_of(n)) {
    Rat acc = 0;
    for (const Partition& cls : partitions_of(n)) {
      const auto it = chi.values.find(cls);
      if (it == chi.values.end())
        throw std::invalid_argument("class function missing a class value");
      acc += Rat(class_size_a(cls)) * it->second * Rat(table.at(shape).at(cls));
    }
    result.add(shape, acc / Rat(order));
  }
  return result;
}

namespace {

// Exact Gaussian elimination for M x = b where the columns of M are known to
// be linearly independent.  Returns false when the system is inconsistent.
bool solve_exact(std::vector<std::vector<Rat>> m, std::vector<Rat> b,
                 std::vector<Rat>& x) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<size_t> pivot_row(cols);
  size_t rank = 0;
  for (size_t c = 0; c < cols; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows)
      throw std::logic_error("columns expected to be linearly independent");
    std::swap(m[piv], m[rank]);
    std::swap(b[piv], b[rank]);
    const Rat inv = Rat(1) / m[rank][c];
    for (size_t j = c; j < cols; ++j) m[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
      b[r] -= f * b[rank];
    }
    pivot_row[c] = rank;
    ++rank;
  }
  for (size_t r = rank; r < rows; ++r)
    if (b[r] != 0) return false;
  x.assign(cols, Rat(0));
  for (size_t c = 0; c < cols; ++c) x[c] = b[pivot_row[c]];
  return true;
}

bool is_nonneg_integer(const Rat& r) {
  return r >= 0 && boost::multiprecision::denominator(r) == 1;
}

}  // namespace

SchurSolveB dist_to_schur_b(const DescentDistributionB& d) {
  const int n = d.degree;
  const std::vector<SignedSet> sigmas = signed_sets_of(n);
  const std::vector<Bipartition> shapes = bipartitions_of(n);
  std::map<SignedSet, size_t> row_of;
  for (size_t i = 0; i < sigmas.size(); ++i) row_of[sigmas[i]] = i;

  std::vector<std::vector<Rat>> m(sigmas.size(), std::vector<Rat>(shapes.size(), Rat(0)));
  for (size_t c = 0; c < shapes.size(); ++c)
    for (const auto& [sigma, count] : sdes_distribution_of_shape(shapes[c]))
      m[row_of.at(sigma)][c] = count;

  std::vector<Rat> b(sigmas.size(), Rat(0));
  for (const auto& [sigma, count] : d.counts) {
    if (sigma.n() != n) throw std::invalid_argument("distribution key of wrong degree");
    b[row_of.at(sigma)] = count;
  }

  SchurSolveB result;
  std::vector<Rat> x;
  if (!solve_exact(std::move(m), std::move(b), x)) {
    result.status = SolveStatus::not_in_span;
    return result;
  }
  result.coeffs.degree = n;
  bool nonneg_integral = true;
  for (size_t c = 0; c < shapes.size(); ++c) {
    if (!is_nonneg_integer(x[c])) nonneg_integral = false;
    result.coeffs.add(shapes[c], x[c]);
  }
  result.status = nonneg_integral ? SolveStatus::ok : SolveStatus::not_nonneg_integral;
  return result;
}

SchurSolveA dist_to_schur_a(const DescentDistributionA& d) {
  const int n = d.degree;
  const std::vector<Partition> shapes = partitions_of(n);
  // Rows are subsets of [n-1] encoded as bitmasks.
  const size_t nrows = size_t(1) << (n - 1);
  auto mask_of = [](const std::set<int>& s) {
    unsigned mask = 0;
    for (int i : s) mask |= 1u << (i - 1);
    return mask;
  };

  std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(shapes.size(), Rat(0)));
  for (size_t c = 0; c < shapes.size(); ++c)
    for (const auto& [s, count] : des_distribution_of_shape(shapes[c]))
      m[mask_of(s)][c] = count;

  std::vector<Rat> b(nrows, Rat(0));
  for (const auto& [s, count] : d.counts) b[mask_of(s)] = count;

  SchurSolveA result;
  std::vector<Rat> x;
  if (!solve_exact(std::move(m), std::move(b), x)) {
    result.status = SolveStatus::not_in_span;
    return result;
  }
  result.coeffs.degree = n;
  bool nonneg_integral = true;
  for (size_t c = 0; c < shapes.size(); ++c) {
    if (!is_nonneg_integer(x[c])) nonneg_integral = false;
    result.coeffs.add(shapes[c], x[c]);
  }
  result.status = nonneg_integral ? SolveStatus::ok : SolveStatus::not_nonneg_integral;
  return result;
}

namespace {

// Partitions obtained from p by adding a horizontal strip of size k.
std::vector<Partition> add_horizontal_strips(const Partition& p, int k) {
  std::vector<Partition> out;
  const int rows = p.length() + 1;
  std::vector<int> np(rows);
  auto lower = [&](int i) { return i < p.length() ? p.parts[i] : 0; };
  // Row i of the result lies between p_i and p_{i-1}.
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (i == rows) {
      if (remaining == 0) {
        std::vector<int> parts;
        for (int v : np)
          if (v > 0) parts.push_back(v);
        out.push_back(Partition(std::move(parts)));
      }
      return;
    }
    const int hi = i == 0 ? lower(0) + remaining : lower(i - 1);
    for (int v = lower(i); v <= hi; ++v) {
      if (v - lower(i) > remaining) break;
      np[i] = v;
      rec(i + 1, remaining - (v - lower(i)));
    }
  };
  rec(0, k);
  return out;
}

std::vector<Partition> add_vertical_strips(const Partition& p, int k) {
  std::vector<Partition> out;
  for (const Partition& q : add_horizontal_strips(p.conjugate(), k))
    out.push_back(q.conjugate());
  return out;
}

}  // namespace

SchurVecB mul_h_x(const SchurVecB& v, int k) {
  SchurVecB result;
  result.degree = v.degree + k;
  for (const auto& [bp, c] : v.coeffs)
    for (const Partition& l : add_horizontal_strips(bp.lambda, k))
      result.add(Bipartition(l, bp.mu), c);
  return result;
}

SchurVecB mul_e_x(const SchurVecB& v, int k) {
  SchurVecB result;
  result.degree = v.degree + k;
  for (const auto& [bp, c] : v.coeffs)
    for (const Partition& l : add_vertical_strips(bp.lambda, k))
      result.add(Bipartition(l, bp.mu), c);
  return result;
}

SchurVecB mul_s1_xy(const SchurVecB& v) {
  SchurVecB result;
  result.degree = v.degree + 1;
  for (const auto& [bp, c] : v.coeffs) {
    for (const Partition& l : add_horizontal_strips(bp.lambda, 1))
      result.add(Bipartition(l, bp.mu), c);
    for (const Partition& m : add_horizontal_strips(bp.mu, 1))
      result.add(Bipartition(bp.lambda, m), c);
  }
  return result;
}

SchurVecB omega_x(const SchurVecB& v) {
  SchurVecB result;
  result.degree = v.degree;
  for (const auto& [bp, c] : v.coeffs)
    result.add(Bipartition(bp.lambda.conjugate(), bp.mu), c);
  return result;
}

namespace {

void add_chains(const SignedSet& sigma, long long count, int m, Poly& out) {
  const int n = sigma.n();
  const std::set<int> strict = sigma.wdes();
  const std::vector<int> eps = sigma.sign_vector();
  Monomial expo(2 * m, 0);
  // Position j takes a variable index in [prev, m]; a strict rise is forced
  // after each element of wDes.
  std::function<void(int, int)> rec = [&](int j, int min_index) {
    if (j > n) {
      out[expo] += count;
      return;
    }
    for (int i = min_index; i <= m; ++i) {
      const int slot = eps[j - 1] > 0 ? i - 1 : m + i - 1;
      expo[slot]++;
      rec(j + 1, strict.count(j) ? i + 1 : i);
      expo[slot]--;
    }
  };
  rec(1, 1);
}

// Sum of x^T over semistandard tableaux of the given shape with entries <= m,
// written into exponent slots [base, base+m).
Poly ssyt_poly(const Partition& shape, int m, int base, int width) {
  Poly out;
  Monomial expo(width, 0);
  const int rows = shape.length();
  std::vector<std::vector<int>> t(rows);
  for (int r = 0; r < rows; ++r) t[r].assign(shape.parts[r], 0);
  std::function<void(int, int)> rec = [&](int r, int c) {
    if (r == rows) {
      out[expo] += 1;
      return;
    }
    const auto [nr, nc] = c + 1 < shape.parts[r] ? std::pair(r, c + 1) : std::pair(r + 1, 0);
    const int lo = std::max(c > 0 ? t[r][c - 1] : 1, r > 0 ? t[r - 1][c] + 1 : 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      expo[base + v - 1]++;
      rec(nr, nc);
      expo[base + v - 1]--;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

Poly eval_poly_b(const DescentDistributionB& d, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  Poly out;
  for (const auto& [sigma, count] : d.counts) add_chains(sigma, count, m, out);
  return out;
}

Poly eval_schur_b(const SchurVecB& v, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  Poly out;
  for (const auto& [bp, c] : v.coeffs) {
    const Poly px = ssyt_poly(bp.lambda, m, 0, 2 * m);
    const Poly py = ssyt_poly(bp.mu, m, m, 2 * m);
    for (const auto& [ex, cx] : px)
      for (const auto& [ey, cy] : py) {
        Monomial e(2 * m);
        for (int i = 0; i < 2 * m; ++i) e[i] = ex[i] + ey[i];
        out[e] += c * cx * cy;
      }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::string to_string(const SchurVecB& v) {
  if (v.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [bp, c] : v.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*s" << to_string(bp.lambda) << "(x)s"
       << to_string(bp.mu) << "(y)";
  }
  return os.str();
}

std::string to_string(const SchurVecA& v) {
  if (v.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : v.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*s" << to_string(p) << "(x)";
  }
  return os.str();
}

}  // namespace hyperoct

#include <doctest.h>

#include <random>

#include "hyperoct/famsets.hpp"
#include "hyperoct/symring.hpp"
#include "hyperoct/tableaux.hpp"

using namespace hyperoct;

namespace {

ClassFunctionB constant_one(int n) {
  ClassFunctionB chi;
  chi.degree = n;
  for (const Bipartition& cls : bipartitions_of(n)) chi.values[cls] = 1;
  return chi;
}

// Rank of a set of polynomials over Q, by elimination on their coefficient
// vectors.
size_t poly_rank(std::vector<Poly> polys) {
  std::set<Monomial> monos;
  for (const Poly& p : polys)
    for (const auto& [m, c] : p) monos.insert(m);
  std::vector<Monomial> basis(monos.begin(), monos.end());
  std::vector<std::vector<Rat>> rows;
  for (const Poly& p : polys) {
    std::vector<Rat> row(basis.size(), Rat(0));
    for (size_t i = 0; i < basis.size(); ++i) {
      const auto it = p.find(basis[i]);
      if (it != p.end()) row[i] = it->second;
    }
    rows.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rat f = rows[r][c] / rows[rank][c];
      for (size_t j = c; j < basis.size(); ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("frobenius of the trivial character") {
  for (int n = 1; n <= 4; ++n) {
    SchurVecB v = frobenius_b(constant_one(n));
    v.prune();
    CHECK(v == SchurVecB::unit(Bipartition(Partition({n}), Partition{})));
  }
}

TEST_CASE("frobenius of irreducibles and of the regular character") {
  for (int n = 1; n <= 4; ++n) {
    const auto& table = character_table_b(n);
    for (const Bipartition& shape : bipartitions_of(n)) {
      ClassFunctionB chi;
      chi.degree = n;
      for (const Bipartition& cls : bipartitions_of(n))
        chi.values[cls] = Rat(table.at(shape).at(cls));
      SchurVecB v = frobenius_b(chi);
      v.prune();
      CHECK(v == SchurVecB::unit(shape));
    }
  }
  for (int n = 1; n <= 4; ++n) {
    ClassFunctionB reg;
    reg.degree = n;
    Int order = factorial(n);
    for (int i = 0; i < n; ++i) order *= 2;
    for (const Bipartition& cls : bipartitions_of(n)) reg.values[cls] = 0;
    reg.values[Bipartition(Partition(std::vector<int>(n, 1)), Partition{})] = Rat(order);
    const SchurVecB v = frobenius_b(reg);
    for (const Bipartition& shape : bipartitions_of(n))
      CHECK(v.coeffs.at(shape) == Rat(shape.syt_count()));
  }
}

TEST_CASE("distribution solving: units and linearity") {
  const Bipartition shape(Partition({2}), Partition({1}));
  DescentDistributionB d;
  d.degree = 3;
  d.counts = sdes_distribution_of_shape(shape);
  const SchurSolveB solved = dist_to_schur_b(d);
  REQUIRE(solved.status == SolveStatus::ok);
  SchurVecB got = solved.coeffs;
  got.prune();
  CHECK(got == SchurVecB::unit(shape));
}

TEST_CASE("distribution solving: involutions of B_2") {
  std::vector<SignedPerm> inv = involutions(2);
  const SchurSolveB solved = dist_to_schur_b(sdes_distribution(2, inv));
  REQUIRE(solved.status == SolveStatus::ok);
  for (const Bipartition& shape : bipartitions_of(2))
    CHECK(solved.coeffs.coeffs.at(shape) == 1);
}

TEST_CASE("round trip through random nonnegative vectors") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 4; ++n) {
    std::uniform_int_distribution<int> coeff(0, 4);
    for (int trial = 0; trial < 5; ++trial) {
      DescentDistributionB d;
      d.degree = n;
      std::map<Bipartition, long long> chosen;
      for (const Bipartition& shape : bipartitions_of(n)) {
        const int a = coeff(rng);
        chosen[shape] = a;
        if (a == 0) continue;
        for (const auto& [sigma, count] : sdes_distribution_of_shape(shape))
          d.counts[sigma] += a * count;
      }
      const SchurSolveB solved = dist_to_schur_b(d);
      REQUIRE(solved.status == SolveStatus::ok);
      for (const auto& [shape, a] : chosen) {
        const auto it = solved.coeffs.coeffs.find(shape);
        const Rat got = it == solved.coeffs.coeffs.end() ? Rat(0) : it->second;
        CHECK(got == a);
      }
    }
  }
}

TEST_CASE("type A solving") {
  for (int n = 1; n <= 5; ++n) {
    DescentDistributionA d;
    d.degree = n;
    for (const SignedPerm& w : enumerate_sn(n)) d.counts[des(w)]++;
    const SchurSolveA solved = dist_to_schur_a(d);
    REQUIRE(solved.status == SolveStatus::ok);
    for (const Partition& shape : partitions_of(n))
      CHECK(solved.coeffs.coeffs.at(shape) == Rat(shape.syt_count()));
  }
  DescentDistributionA point;
  point.degree = 4;
  point.counts[{}] = 1;
  SchurVecA got = dist_to_schur_a(point).coeffs;
  got.prune();
  CHECK(got == SchurVecA::unit(Partition({4})));
}

TEST_CASE("Pieri products") {
  SchurVecB empty = SchurVecB::unit(Bipartition{});
  SchurVecB one = mul_s1_xy(empty);
  CHECK(one.coeffs.size() == 2);
  CHECK(one.coeffs.at(Bipartition(Partition({1}), Partition{})) == 1);
  CHECK(one.coeffs.at(Bipartition(Partition{}, Partition({1}))) == 1);

  for (int n = 1; n <= 4; ++n) {
    SchurVecB en = mul_e_x(SchurVecB::unit(Bipartition{}), n);
    en.prune();
    CHECK(en == SchurVecB::unit(Bipartition(Partition(std::vector<int>(n, 1)), Partition{})));
  }

  for (int n = 1; n <= 4; ++n) {
    SchurVecB v = SchurVecB::unit(Bipartition{});
    for (int t = 0; t < n; ++t) v = mul_s1_xy(v);
    for (const Bipartition& shape : bipartitions_of(n))
      CHECK(v.coeffs.at(shape) == Rat(shape.syt_count()));
  }
}

TEST_CASE("omega_x") {
  CHECK(omega_x(SchurVecB::unit(Bipartition(Partition({3}), Partition{}))) ==
        SchurVecB::unit(Bipartition(Partition({1, 1, 1}), Partition{})));
  for (int n = 1; n <= 4; ++n)
    for (const Bipartition& shape : bipartitions_of(n)) {
      const SchurVecB v = SchurVecB::unit(shape);
      CHECK(omega_x(omega_x(v)) == v);
    }
  // omega_x swaps the h- and e-Pieri rules.
  for (int k = 1; k <= 3; ++k) {
    const SchurVecB v = SchurVecB::unit(Bipartition(Partition({2, 1}), Partition({1})));
    SchurVecB lhs = omega_x(mul_h_x(v, k));
    SchurVecB rhs = mul_e_x(omega_x(v), k);
    lhs.prune();
    rhs.prune();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("quasisymmetric evaluation") {
  // No strict rises: the complete homogeneous sum in x.
  DescentDistributionB d;
  d.degree = 3;
  d.counts[SignedSet("**0")] = 1;
  const Poly h3 = eval_poly_b(d, 3);
  CHECK(h3.size() == 10);  // monomials of degree 3 in 3 variables
  for (const auto& [m, c] : h3) CHECK(c == 1);

  // The 6-letter example with sign vector (+,+,-,-,-,+) at m = 3, against a
  // direct six-fold summation.
  DescentDistributionB ex;
  ex.degree = 6;
  ex.counts[SignedSet("*01*10")] = 1;
  const Poly got = eval_poly_b(ex, 3);
  Poly expected;
  const int m = 3;
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1; i2 <= m; ++i2)
      for (int i3 = i2 + 1; i3 <= m; ++i3)
        for (int i4 = i3 + 1; i4 <= m; ++i4)
          for (int i5 = i4; i5 <= m; ++i5)
            for (int i6 = i5; i6 <= m; ++i6) {
              Monomial mono(2 * m, 0);
              mono[i1 - 1]++;
              mono[i2 - 1]++;
              mono[m + i3 - 1]++;
              mono[m + i4 - 1]++;
              mono[m + i5 - 1]++;
              mono[i6 - 1]++;
              expected[mono] += 1;
            }
  CHECK(got == expected);
}

TEST_CASE("the F polynomials at n=2, m=2 have full rank") {
  std::vector<Poly> polys;
  for (const SignedSet& sigma : signed_sets_of(2)) {
    DescentDistributionB d;
    d.degree = 2;
    d.counts[sigma] = 1;
    polys.push_back(eval_poly_b(d, 2));
  }
  CHECK(polys.size() == 6);
  CHECK(poly_rank(polys) == 6);
}

TEST_CASE("schur evaluation") {
  Poly s1 = eval_schur_b(SchurVecB::unit(Bipartition(Partition({1}), Partition{})), 2);
  CHECK(s1.size() == 2);
  CHECK(s1.at(Monomial{1, 0, 0, 0}) == 1);
  CHECK(s1.at(Monomial{0, 1, 0, 0}) == 1);

  Poly s11 = eval_schur_b(SchurVecB::unit(Bipartition(Partition({1, 1}), Partition{})), 2);
  CHECK(s11.size() == 1);
  CHECK(s11.at(Monomial{1, 1, 0, 0}) == 1);
}

TEST_CASE("virtual characters are flagged, not rejected") {
  // dist(3,1) + dist(2,1,1) - dist(2,2) is pointwise nonnegative at n=4, so
  // it is a legitimate distribution, but its unique expansion has a negative
  // coefficient.
  DescentDistributionA d;
  d.degree = 4;
  d.counts[{1}] = 1;
  d.counts[{3}] = 1;
  d.counts[{1, 2}] = 1;
  d.counts[{2, 3}] = 1;
  const SchurSolveA solved = dist_to_schur_a(d);
  CHECK(solved.status == SolveStatus::not_nonneg_integral);
  CHECK(solved.coeffs.coeffs.at(Partition({3, 1})) == 1);
  CHECK(solved.coeffs.coeffs.at(Partition({2, 2})) == -1);
  CHECK(solved.coeffs.coeffs.at(Partition({2, 1, 1})) == 1);

  // The same triple on the x-side of the signed model.
  DescentDistributionB db;
  db.degree = 4;
  for (const auto& [s, k] :
       sdes_distribution_of_shape(Bipartition(Partition({3, 1}), Partition{})))
    db.counts[s] += k;
  for (const auto& [s, k] :
       sdes_distribution_of_shape(Bipartition(Partition({2, 1, 1}), Partition{})))
    db.counts[s] += k;
  for (const auto& [s, k] :
       sdes_distribution_of_shape(Bipartition(Partition({2, 2}), Partition{})))
    db.counts[s] -= k;
  for (auto it = db.counts.begin(); it != db.counts.end();) {
    REQUIRE(it->second >= 0);
    it = it->second == 0 ? db.counts.erase(it) : std::next(it);
  }
  const SchurSolveB solved_b = dist_to_schur_b(db);
  CHECK(solved_b.status == SolveStatus::not_nonneg_integral);
  CHECK(solved_b.coeffs.coeffs.at(Bipartition(Partition({2, 2}), Partition{})) == -1);
}

TEST_CASE("solve additivity when both sides succeed") {
  for (int n = 2; n <= 3; ++n) {
    DescentDistributionB d1, d2, sum;
    d1.degree = d2.degree = sum.degree = n;
    d1.counts = sdes_distribution_of_shape(bipartitions_of(n)[0]);
    d2.counts = sdes_distribution_of_shape(bipartitions_of(n)[2]);
    sum.counts = d1.counts;
    for (const auto& [s, k] : d2.counts) sum.counts[s] += k;
    const SchurSolveB a = dist_to_schur_b(d1);
    const SchurSolveB b = dist_to_schur_b(d2);
    const SchurSolveB c = dist_to_schur_b(sum);
    REQUIRE(a.status == SolveStatus::ok);
    REQUIRE(b.status == SolveStatus::ok);
    REQUIRE(c.status == SolveStatus::ok);
    SchurVecB lhs = a.coeffs + b.coeffs;
    lhs.prune();
    SchurVecB rhs = c.coeffs;
    rhs.prune();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("two pipelines agree on the B_2 involutions") {
  const std::vector<SignedPerm> inv = involutions(2);
  const DescentDistributionB d = sdes_distribution(2, inv);
  const SchurSolveB solved = dist_to_schur_b(d);
  REQUIRE(solved.status == SolveStatus::ok);
  CHECK(eval_poly_b(d, 2) == eval_schur_b(solved.coeffs, 2));
}

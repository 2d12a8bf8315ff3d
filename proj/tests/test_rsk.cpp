#include <doctest.h>

#include <numeric>
#include <set>

#include "hyperoct/rsk.hpp"

using namespace hyperoct;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

Tableau row_tab(int n) {
  std::vector<int> row(n);
  std::iota(row.begin(), row.end(), 1);
  return tab({row});
}

Tableau col_tab(int n) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= n; ++i) rows.push_back({i});
  return Tableau(std::move(rows));
}

}  // namespace

TEST_CASE("type A insertion basics") {
  const auto [p_id, q_id] = rsk_a(SignedPerm::identity(4));
  CHECK(p_id == row_tab(4));
  CHECK(q_id == row_tab(4));

  const auto [p_rev, q_rev] = rsk_a(SignedPerm({4, 3, 2, 1}));
  CHECK(p_rev == col_tab(4));
  CHECK(q_rev == col_tab(4));

  CHECK_THROWS_AS(rsk_a(SignedPerm({-1, 2})), std::invalid_argument);
}

TEST_CASE("type A descent preservation and bijectivity") {
  std::set<std::pair<Tableau, Tableau>> pairs;
  for (const SignedPerm& w : enumerate_sn(4)) pairs.insert(rsk_a(w));
  CHECK(pairs.size() == 24);

  for (int n = 1; n <= 6; ++n)
    for (const SignedPerm& w : enumerate_sn(n)) {
      const auto [p, q] = rsk_a(w);
      CHECK(p.shape() == q.shape());
      CHECK(des(w) == des_tableau(q));
    }
}

TEST_CASE("type B insertion basics") {
  const auto [p, q] = rsk_b(SignedPerm::identity(3));
  CHECK(p == Bitableau{row_tab(3), Tableau{}});
  CHECK(q == Bitableau{row_tab(3), Tableau{}});

  const auto [pm, qm] = rsk_b(SignedPerm({-1, -2, -3}));
  CHECK(pm == Bitableau{Tableau{}, row_tab(3)});
  CHECK(qm == Bitableau{Tableau{}, row_tab(3)});
}

TEST_CASE("type B properties at small rank") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::pair<Bitableau, Bitableau>> pairs;
    for_each_bn(n, [&](const SignedPerm& w) {
      const auto [p, q] = rsk_b(w);
      CHECK(p.shape() == q.shape());
      CHECK(sdes(w) == sdes_bitableau(q));
      CHECK(rsk_b(inverse(w)).first == q);
      pairs.emplace(p, q);
    });
    Int order = factorial(n);
    for (int i = 0; i < n; ++i) order *= 2;
    CHECK(Int(pairs.size()) == order);
  }
}

TEST_CASE("Knuth classes") {
  const Bitableau t{row_tab(3), Tableau{}};
  const auto cls = knuth_class(t);
  CHECK(std::count(cls.begin(), cls.end(), SignedPerm::identity(3)) == 1);

  // Fibration: class sizes sum to the group order, and each class of shape
  // (lambda,mu) has #SYT(lambda,mu) elements.
  size_t total = 0;
  for (const Bipartition& shape : bipartitions_of(3))
    for (const Bitableau& t3 : enumerate_bitableaux(shape)) {
      const auto members = knuth_class(t3);
      CHECK(Int(members.size()) == shape.syt_count());
      total += members.size();
    }
  CHECK(total == 48);

  const Bitableau t11{tab({{1}}), tab({{2}})};
  CHECK(knuth_class(t11).size() == 2);
}

#include <doctest.h>

#include <map>

#include "hyperoct/charrules.hpp"
#include "hyperoct/signed_perm.hpp"
#include "hyperoct/tableaux.hpp"

using namespace hyperoct;

namespace {

// Literal re-implementation of the weight definition, kept independent of
// the library code path: builds the sign vector by blocks and checks the
// conditions one by one.
int weight_oracle(const SignedComposition& gamma, const SignedSet& sigma) {
  const int n = gamma.size();
  std::vector<int> sums = gamma.underlying().partial_sums();
  std::vector<int> gamma_sign(n + 1, 0);
  {
    int prev = 0;
    for (size_t i = 0; i < gamma.parts.size(); ++i) {
      for (int j = prev + 1; j <= sums[i]; ++j) gamma_sign[j] = gamma.parts[i] < 0 ? -1 : 1;
      prev = sums[i];
    }
  }
  std::vector<int> sigma_sign(n + 1, 0);
  {
    const std::vector<int> sv = sigma.sign_vector();
    for (int j = 1; j <= n; ++j) sigma_sign[j] = sv[j - 1];
  }
  const std::vector<int> elems = sigma.elements();
  const std::set<int> s(elems.begin(), elems.end());

  // gamma-unimodality of S
  int prev = 0;
  for (int r : sums) {
    bool gap_seen = false;
    for (int j = prev + 1; j <= r - 1; ++j) {
      if (!s.count(j))
        gap_seen = true;
      else if (gap_seen)
        return 0;
    }
    prev = r;
  }
  // constant signs on closed blocks
  prev = 0;
  for (int r : sums) {
    for (int j = prev + 1; j <= r; ++j)
      if (sigma_sign[j] != sigma_sign[prev + 1]) return 0;
    prev = r;
  }
  int expo = 0;
  for (int e : elems)
    if (std::find(sums.begin(), sums.end(), e) == sums.end()) ++expo;
  prev = 0;
  for (int r : sums) {
    if (sigma_sign[prev + 1] == -1 && gamma_sign[prev + 1] == -1) ++expo;
    prev = r;
  }
  return expo % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("alpha-unimodality") {
  const Composition alpha({3, 1, 4, 2});
  CHECK(is_unimodal({1, 3, 5, 6}, alpha));
  CHECK_FALSE(is_unimodal({1, 3, 5, 7}, alpha));
  const Composition ones({1, 1, 1, 1, 1});
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::set<int> s;
    for (int i = 1; i <= 4; ++i)
      if (mask & (1u << (i - 1))) s.insert(i);
    CHECK(is_unimodal(s, ones));
  }
}

TEST_CASE("weight examples") {
  CHECK(weight(SignedComposition({-1, -1}), sigset_from_comp(SignedComposition({-1, -1}))) == 1);
  CHECK(weight(SignedComposition({2}), SignedSet("10")) == 0);
  CHECK(weight(SignedComposition({2}), SignedSet("*0")) == 1);
}

TEST_CASE("weight against a literal oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const SignedComposition& gamma : signed_compositions_of(n))
      for (const SignedSet& sigma : signed_sets_of(n))
        CHECK(weight(gamma, sigma) == weight_oracle(gamma, sigma));
}

TEST_CASE("descent rule for S_n characters") {
  for (const Composition& alpha : compositions_of(4))
    CHECK(chi_a(Partition({4}), alpha) == 1);
  for (int n = 1; n <= 5; ++n) {
    const Int expected = n % 2 == 1 ? 1 : -1;
    CHECK(chi_a(Partition(std::vector<int>(n, 1)), Composition({n})) == expected);
  }
  CHECK(chi_a(Partition({2, 1}), Composition({1, 1, 1})) == 2);
}

TEST_CASE("Murnaghan-Nakayama values") {
  CHECK(chi_a_mn(Partition({4}), Composition({4})) == 1);
  // (2,2) contains a 2x2 square, so no border strip of size 4 exists.
  CHECK(chi_a_mn(Partition({2, 2}), Composition({4})) == 0);
  CHECK(chi_a_mn(Partition({3, 1}), Composition({4})) == -1);
  CHECK(chi_a_mn(Partition({2, 1, 1}), Composition({4})) == 1);
  CHECK(chi_a_mn(Partition{}, Composition{}) == 1);
}

TEST_CASE("the two S_n rules agree") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Composition& alpha : compositions_of(n))
        CHECK(chi_a(lambda, alpha) == chi_a_mn(lambda, alpha));
}

TEST_CASE("trivial B_n character") {
  for (int n = 1; n <= 4; ++n) {
    const Bipartition shape(Partition({n}), Partition{});
    for (const SignedComposition& gamma : signed_compositions_of(n))
      CHECK(chi_b(shape, gamma) == 1);
  }
}

TEST_CASE("degrees at the identity class") {
  for (int n = 1; n <= 4; ++n) {
    const Bipartition id_class(Partition(std::vector<int>(n, 1)), Partition{});
    for (const Bipartition& shape : bipartitions_of(n))
      CHECK(chi_b(shape, class_composition(id_class)) == shape.syt_count());
  }
}

TEST_CASE("oracle values") {
  CHECK(chi_b_oracle(Bipartition(Partition({3}), Partition{}),
                     Bipartition(Partition({3}), Partition{})) == 1);
  for (int n = 1; n <= 4; ++n)
    CHECK(chi_b_oracle(Bipartition(Partition{}, Partition({n})),
                       Bipartition(Partition{}, Partition({n}))) == -1);
}

TEST_CASE("B_2 character table") {
  // Hand-evaluated from the power-sum splitting formula; shapes and classes
  // in canonical order ((2),-),((11),-),((1),(1)),(-,(2)),(-,(11)).
  const std::vector<std::vector<long long>> expected = {
      {1, 1, 1, 1, 1},
      {-1, 1, 1, -1, 1},
      {0, 2, 0, 0, -2},
      {1, 1, -1, -1, 1},
      {-1, 1, -1, 1, 1},
  };
  const auto shapes = bipartitions_of(2);
  for (size_t i = 0; i < shapes.size(); ++i)
    for (size_t j = 0; j < shapes.size(); ++j) {
      CHECK(chi_b_oracle(shapes[i], shapes[j]) == expected[i][j]);
      CHECK(chi_b(shapes[i], class_composition(shapes[j])) == expected[i][j]);
    }
}

TEST_CASE("class sizes") {
  CHECK(class_size(Bipartition(Partition({1, 1, 1}), Partition{})) == 1);
  CHECK(class_size(Bipartition(Partition{}, Partition({1}))) == 1);
  for (int n = 1; n <= 4; ++n) {
    // Direct enumeration oracle.
    std::map<Bipartition, long long> counts;
    for_each_bn(n, [&](const SignedPerm& w) {
      counts[cycle_type(w).as_bipartition()]++;
    });
    Int total = 0;
    for (const Bipartition& cls : bipartitions_of(n)) {
      CHECK(class_size(cls) == counts[cls]);
      total += class_size(cls);
    }
    Int order = factorial(n);
    for (int i = 0; i < n; ++i) order *= 2;
    CHECK(total == order);
  }
}

TEST_CASE("row orthogonality of the character table") {
  for (int n = 1; n <= 4; ++n) {
    const auto& table = character_table_b(n);
    Int order = factorial(n);
    for (int i = 0; i < n; ++i) order *= 2;
    const auto shapes = bipartitions_of(n);
    for (const Bipartition& a : shapes)
      for (const Bipartition& b : shapes) {
        Int acc = 0;
        for (const Bipartition& cls : shapes)
          acc += class_size(cls) * table.at(a).at(cls) * table.at(b).at(cls);
        CHECK(acc == (a == b ? order : Int(0)));
      }
  }
}

TEST_CASE("evaluate_fine_sum") {
  CHECK(evaluate_fine_sum({}, SignedComposition({1, 1})) == 0);
  std::map<SignedSet, long long> counts;
  for_each_bn(2, [&](const SignedPerm& w) {
    if (compose(w, w) == SignedPerm::identity(2)) counts[sdes(w)]++;
  });
  CHECK(evaluate_fine_sum(counts, SignedComposition({1, 1})) == 6);
}

TEST_CASE("size mismatches throw") {
  CHECK_THROWS_AS(chi_a(Partition({2}), Composition({3})), std::invalid_argument);
  CHECK_THROWS_AS(chi_b(Bipartition(Partition({2}), Partition{}),
                        SignedComposition({1})), std::invalid_argument);
  CHECK_THROWS_AS(weight(SignedComposition({2}), SignedSet("0")), std::invalid_argument);
}

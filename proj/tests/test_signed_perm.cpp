#include <doctest.h>

#include <map>
#include <queue>
#include <random>

#include "hyperoct/signed_perm.hpp"

using namespace hyperoct;

namespace {

// Distances in the Cayley graph of B_n with generators s_0 (negate the first
// window entry) and s_1..s_{n-1} (swap adjacent window entries), acting on
// positions.  Independent oracle for length_b.
std::map<SignedPerm, long long> coxeter_lengths(int n) {
  const SignedPerm id = SignedPerm::identity(n);
  std::map<SignedPerm, long long> dist{{id, 0}};
  std::queue<SignedPerm> queue;
  queue.push(id);
  while (!queue.empty()) {
    const SignedPerm w = queue.front();
    queue.pop();
    const long long d = dist.at(w);
    std::vector<std::vector<int>> nexts;
    std::vector<int> flip = w.window();
    flip[0] = -flip[0];
    nexts.push_back(flip);
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<int> swapped = w.window();
      std::swap(swapped[i], swapped[i + 1]);
      nexts.push_back(swapped);
    }
    for (auto& v : nexts) {
      SignedPerm next(v);
      if (dist.emplace(next, d + 1).second) queue.push(next);
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("construction and identity") {
  CHECK(SignedPerm::identity(3).window() == std::vector<int>({1, 2, 3}));
  CHECK(SignedPerm::identity(1).window() == std::vector<int>({1}));
  CHECK_THROWS_AS(SignedPerm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm({3, 1}), std::invalid_argument);
}

TEST_CASE("inverse against brute force over B_2") {
  // Independent oracle: the inverse is the unique v with w v = e.
  for (const SignedPerm& w : enumerate_bn(2)) {
    const SignedPerm v = inverse(w);
    CHECK(compose(w, v) == SignedPerm::identity(2));
    for (const SignedPerm& u : enumerate_bn(2))
      if (compose(w, u) == SignedPerm::identity(2)) CHECK(u == v);
  }
  CHECK(inverse(SignedPerm({2, 1})) == SignedPerm({2, 1}));
  CHECK(inverse(SignedPerm({-2, 1})) == SignedPerm({2, -1}));
}

TEST_CASE("powers") {
  CHECK(power(SignedPerm({-1}), 2) == SignedPerm::identity(1));
  CHECK(power(SignedPerm({-2, 1}), 0) == SignedPerm::identity(2));
  const SignedPerm w({3, -1, 2});
  CHECK(power(w, 5) == compose(w, compose(w, compose(w, compose(w, w)))));
  CHECK(compose(power(w, 3), power(w, -3)) == SignedPerm::identity(3));
}

TEST_CASE("group axioms on random triples") {
  std::mt19937 rng(20240817);
  for (int n = 1; n <= 6; ++n) {
    const auto bn = enumerate_bn(n);
    std::uniform_int_distribution<size_t> pick(0, bn.size() - 1);
    for (int t = 0; t < 40; ++t) {
      const SignedPerm& u = bn[pick(rng)];
      const SignedPerm& v = bn[pick(rng)];
      const SignedPerm& w = bn[pick(rng)];
      CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
      CHECK(compose(u, SignedPerm::identity(n)) == u);
      CHECK(compose(inverse(u), u) == SignedPerm::identity(n));
    }
  }
}

TEST_CASE("descents under the r-order") {
  CHECK(des(SignedPerm({-1, -2, -3})).empty());
  CHECK(des(SignedPerm({2, 1})) == std::set<int>({1}));
  CHECK(des(SignedPerm({1, -2, 3})) == std::set<int>({1}));  // 1 >_r barred 2
}

TEST_CASE("signed descent set") {
  const SignedSet s = sdes(SignedPerm({-5, -2, -8, 1, 3, 9, 4, -6, -7}));
  CHECK(s.elements() == std::vector<int>({1, 3, 6, 7, 9}));
  CHECK(s.is_negative(1));
  CHECK(s.is_negative(3));
  CHECK_FALSE(s.is_negative(6));
  CHECK_FALSE(s.is_negative(7));
  CHECK(s.is_negative(9));

  CHECK(sdes(SignedPerm::identity(4)).word() == "***0");
  CHECK(sdes(SignedPerm({-1, -2})).word() == "*1");
}

TEST_CASE("wdes of sdes recovers des") {
  for (int n = 1; n <= 5; ++n)
    for_each_bn(n, [&](const SignedPerm& w) {
      const SignedSet s = sdes(w);
      CHECK(s.contains(n));
      CHECK(s.wdes() == des(w));
    });
}

TEST_CASE("flag statistics") {
  CHECK(finv(SignedPerm({-1, -2, -3})) == 3);
  CHECK(fmaj(SignedPerm({-1, -2, -3})) == 3);
  CHECK(fmaj(SignedPerm::identity(4)) == 0);
  for_each_bn(4, [&](const SignedPerm& w) {
    CHECK(finv(w) == 2 * inv(w) + bar(w));
    CHECK(fmaj(w) == 2 * maj(w) + bar(w));
  });
}

TEST_CASE("length function against Coxeter word search") {
  CHECK(length_b(SignedPerm::identity(5)) == 0);
  CHECK(length_b(SignedPerm({-1})) == 1);
  CHECK(length_b(SignedPerm({-2, -1})) == 3);
  CHECK(length_b(SignedPerm({-1, -2})) == 4);
  for (int n = 1; n <= 3; ++n) {
    const auto oracle = coxeter_lengths(n);
    for_each_bn(n, [&](const SignedPerm& w) { CHECK(length_b(w) == oracle.at(w)); });
  }
}

TEST_CASE("signed cycle type") {
  CHECK(cycle_type(SignedPerm::identity(3)) ==
        SignedCycleType{Partition({1, 1, 1}), Partition{}});
  CHECK(cycle_type(SignedPerm({-1})) == SignedCycleType{Partition{}, Partition({1})});
  CHECK(cycle_type(SignedPerm({2, -1})) == SignedCycleType{Partition{}, Partition({2})});
}

TEST_CASE("cycle type is a class invariant") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const auto bn = enumerate_bn(n);
    std::uniform_int_distribution<size_t> pick(0, bn.size() - 1);
    for (int t = 0; t < 60; ++t) {
      const SignedPerm& u = bn[pick(rng)];
      const SignedPerm& w = bn[pick(rng)];
      CHECK(cycle_type(compose(compose(u, w), inverse(u))) == cycle_type(w));
    }
  }
}

TEST_CASE("enumeration sizes and order") {
  CHECK(enumerate_bn(1).size() == 2);
  CHECK(enumerate_bn(2).size() == 8);
  CHECK(enumerate_bn(3).size() == 48);
  CHECK(enumerate_sn(3).size() == 6);
  const auto b2 = enumerate_bn(2);
  CHECK(std::is_sorted(b2.begin(), b2.end()));
  CHECK(b2.front() == SignedPerm({-2, -1}));
  CHECK(b2.back() == SignedPerm({2, 1}));
  CHECK(enumerate_bn(1) ==
        std::vector<SignedPerm>({SignedPerm({-1}), SignedPerm({1})}));
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_bn(99), std::out_of_range);
}

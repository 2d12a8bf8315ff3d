#include "hyperoct/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperoct {

namespace {

// Row-inserts value into p; records position in q at the new cell.
void insert_pair(std::vector<std::vector<int>>& p, std::vector<std::vector<int>>& q,
                 int value, int position) {
  size_t r = 0;
  while (true) {
    if (r == p.size()) {
      p.push_back({value});
      q.push_back({position});
      return;
    }
    auto it = std::upper_bound(p[r].begin(), p[r].end(), value);
    if (it == p[r].end()) {
      p[r].push_back(value);
      q[r].push_back(position);
      return;
    }
    std::swap(value, *it);
    ++r;
  }
}

std::pair<Tableau, Tableau> schensted(const std::vector<std::pair<int, int>>& two_line) {
  std::vector<std::vector<int>> p, q;
  for (const auto& [pos, val] : two_line) insert_pair(p, q, val, pos);
  return {Tableau(std::move(p)), Tableau(std::move(q))};
}

}  // namespace

std::pair<Tableau, Tableau> rsk_a(const SignedPerm& w) {
  if (!w.is_unsigned()) throw std::invalid_argument("rsk_a requires an unsigned permutation");
  std::vector<std::pair<int, int>> arr;
  for (int i = 1; i <= w.size(); ++i) arr.emplace_back(i, w.entry(i));
  return schensted(arr);
}

std::pair<Bitableau, Bitableau> rsk_b(const SignedPerm& w) {
  std::vector<std::pair<int, int>> unbarred, barred;
  for (int i = 1; i <= w.size(); ++i) {
    const int v = w.entry(i);
    if (v > 0)
      unbarred.emplace_back(i, v);
    else
      barred.emplace_back(i, -v);
  }
  auto [pp, qp] = schensted(unbarred);
  auto [pm, qm] = schensted(barred);
  return {Bitableau{std::move(pp), std::move(pm)}, Bitableau{std::move(qp), std::move(qm)}};
}

std::vector<SignedPerm> knuth_class(const Bitableau& t) {
  const int n = t.size();
  std::vector<SignedPerm> out;
  for_each_bn(n, [&](const SignedPerm& w) {
    if (rsk_b(w).first == t) out.push_back(w);
  });
  return out;
}

}  // namespace hyperoct

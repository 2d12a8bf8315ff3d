#include "hyperoct/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

Tableau::Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) throw std::invalid_argument("empty tableau row");
    if (i > 0 && rows[i].size() > rows[i - 1].size())
      throw std::invalid_argument("row lengths must weakly decrease");
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] <= 0) throw std::invalid_argument("entries must be positive");
      if (j > 0 && rows[i][j] <= rows[i][j - 1])
        throw std::invalid_argument("rows must strictly increase");
      if (i > 0 && j < rows[i - 1].size() && rows[i][j] <= rows[i - 1][j])
        throw std::invalid_argument("columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows) total += static_cast<int>(row.size());
  return total;
}

int Tableau::row_of(int value) const {
  for (size_t i = 0; i < rows.size(); ++i)
    if (std::binary_search(rows[i].begin(), rows[i].end(), value))
      return static_cast<int>(i);
  return -1;
}

std::vector<int> Tableau::content() const {
  std::vector<int> values;
  for (const auto& row : rows) values.insert(values.end(), row.begin(), row.end());
  std::sort(values.begin(), values.end());
  return values;
}

bool Bitableau::operator<(const Bitableau& other) const {
  if (!(plus == other.plus)) return plus < other.plus;
  return minus < other.minus;
}

namespace {

void require_standard_content(const std::vector<int>& content) {
  for (size_t i = 0; i < content.size(); ++i)
    if (content[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("content must be exactly [n]");
}

}  // namespace

std::set<int> des_tableau(const Tableau& q) {
  require_standard_content(q.content());
  std::set<int> d;
  for (int i = 1; i < q.size(); ++i)
    if (q.row_of(i + 1) > q.row_of(i)) d.insert(i);
  return d;
}

std::set<int> des_bitableau(const Bitableau& q) {
  const int n = q.size();
  std::vector<int> merged = q.plus.content();
  const std::vector<int> mc = q.minus.content();
  merged.insert(merged.end(), mc.begin(), mc.end());
  std::sort(merged.begin(), merged.end());
  require_standard_content(merged);

  std::set<int> d;
  for (int i = 1; i < n; ++i) {
    const int rp = q.plus.row_of(i), rp1 = q.plus.row_of(i + 1);
    if (rp >= 0 && rp1 >= 0 && rp1 > rp) d.insert(i);
    const int rm = q.minus.row_of(i), rm1 = q.minus.row_of(i + 1);
    if (rm >= 0 && rm1 >= 0 && rm1 > rm) d.insert(i);
    if (rp >= 0 && rm1 >= 0) d.insert(i);  // i in Q+, i+1 in Q-
  }
  return d;
}

SignedSet sdes_bitableau(const Bitableau& q) {
  const int n = q.size();
  std::vector<int> elems;
  std::vector<bool> negative;
  for (int s = 1; s < n; ++s) {
    const bool s_plus = q.plus.contains(s);
    const bool s1_plus = q.plus.contains(s + 1);
    bool in_set = false;
    if (s_plus != s1_plus) {
      in_set = true;
    } else {
      const Tableau& t = s_plus ? q.plus : q.minus;
      in_set = t.row_of(s + 1) > t.row_of(s);
    }
    if (in_set) {
      elems.push_back(s);
      negative.push_back(!s_plus);
    }
  }
  elems.push_back(n);
  negative.push_back(!q.plus.contains(n));
  return SignedSet::from_parts(n, elems, negative);
}

long long fmaj_bitableau(const Bitableau& q) {
  long long total = 0;
  for (int i : des_bitableau(q)) total += i;
  return 2 * total + q.minus.size();
}

namespace {

// Fillings are generated by placing the content values in increasing order,
// each at a cell whose left and upper neighbours are already filled.
void gen_syt(const Partition& shape, const std::vector<int>& content, size_t idx,
             std::vector<std::vector<int>>& rows, std::vector<int>& rowlen,
             std::vector<Tableau>& out) {
  if (idx == content.size()) {
    std::vector<std::vector<int>> trimmed;
    for (size_t r = 0; r < rows.size(); ++r)
      if (rowlen[r] > 0)
        trimmed.emplace_back(rows[r].begin(), rows[r].begin() + rowlen[r]);
    out.push_back(Tableau(std::move(trimmed)));
    return;
  }
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rowlen[r] >= shape.parts[r]) continue;
    if (r > 0 && rowlen[r - 1] <= rowlen[r]) continue;
    rows[r][rowlen[r]++] = content[idx];
    gen_syt(shape, content, idx + 1, rows, rowlen, out);
    rowlen[r]--;
  }
}

}  // namespace

std::vector<Tableau> syt_with_content(const Partition& shape,
                                      const std::vector<int>& content) {
  if (shape.size() != static_cast<int>(content.size()))
    throw std::invalid_argument("content size must match shape size");
  std::vector<int> sorted = content;
  std::sort(sorted.begin(), sorted.end());
  if (shape.empty()) return {Tableau{}};
  std::vector<std::vector<int>> rows;
  for (int part : shape.parts) rows.emplace_back(part, 0);
  std::vector<int> rowlen(shape.length(), 0);
  std::vector<Tableau> out;
  gen_syt(shape, sorted, 0, rows, rowlen, out);
  return out;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  std::vector<int> content(shape.size());
  std::iota(content.begin(), content.end(), 1);
  return syt_with_content(shape, content);
}

namespace {

void gen_subsets(int n, int k, int start, std::vector<int>& acc,
                 const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(acc.size()) == k) {
    fn(acc);
    return;
  }
  for (int v = start; v <= n - (k - static_cast<int>(acc.size())) + 1; ++v) {
    acc.push_back(v);
    gen_subsets(n, k, v + 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

namespace {
std::mutex& dist_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

const std::map<SignedSet, long long>& sdes_distribution_of_shape(const Bipartition& shape) {
  static std::map<Bipartition, std::map<SignedSet, long long>> cache;
  std::lock_guard<std::mutex> lock(dist_mutex());
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  std::map<SignedSet, long long> dist;
  for (const Bitableau& q : enumerate_bitableaux(shape)) dist[sdes_bitableau(q)]++;
  return cache.emplace(shape, std::move(dist)).first->second;
}

const std::map<std::set<int>, long long>& des_distribution_of_shape(const Partition& shape) {
  static std::map<Partition, std::map<std::set<int>, long long>> cache;
  std::lock_guard<std::mutex> lock(dist_mutex());
  auto it = cache.find(shape);
  if (it != cache.end()) return it->second;
  std::map<std::set<int>, long long> dist;
  for (const Tableau& q : enumerate_syt(shape)) dist[des_tableau(q)]++;
  return cache.emplace(shape, std::move(dist)).first->second;
}

std::vector<Bitableau> enumerate_bitableaux(const Bipartition& shape) {
  const int n = shape.size();
  const int k = shape.lambda.size();
  std::vector<Bitableau> out;
  std::vector<int> acc;
  gen_subsets(n, k, 1, acc, [&](const std::vector<int>& plus_content) {
    std::vector<int> minus_content;
    size_t p = 0;
    for (int v = 1; v <= n; ++v) {
      if (p < plus_content.size() && plus_content[p] == v)
        ++p;
      else
        minus_content.push_back(v);
    }
    for (const Tableau& tp : syt_with_content(shape.lambda, plus_content))
      for (const Tableau& tm : syt_with_content(shape.mu, minus_content))
        out.push_back(Bitableau{tp, tm});
  });
  return out;
}

}  // namespace hyperoct

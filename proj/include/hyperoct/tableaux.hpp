#pragma once

#include <map>
#include <set>
#include <vector>

#include "hyperoct/shapes.hpp"

namespace hyperoct {

// Standard Young tableau: rows and columns strictly increasing.  Content is
// an arbitrary set of distinct positive integers (intermediate insertion
// states need not be filled with 1..k).
struct Tableau {
  std::vector<std::vector<int>> rows;

  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> r);

  Partition shape() const;
  int size() const;
  int row_of(int value) const;  // 0-based row index, -1 if absent
  bool contains(int value) const { return row_of(value) >= 0; }
  std::vector<int> content() const;  // sorted values

  bool operator==(const Tableau&) const = default;
  bool operator<(const Tableau& other) const { return rows < other.rows; }
};

struct Bitableau {
  Tableau plus;
  Tableau minus;

  Bipartition shape() const { return Bipartition(plus.shape(), minus.shape()); }
  int size() const { return plus.size() + minus.size(); }

  bool operator==(const Bitableau&) const = default;
  bool operator<(const Bitableau& other) const;
};

// Descent sets; both require content exactly [n].
std::set<int> des_tableau(const Tableau& q);
std::set<int> des_bitableau(const Bitableau& q);
SignedSet sdes_bitableau(const Bitableau& q);

long long fmaj_bitableau(const Bitableau& q);  // 2*sum(Des) + |mu|

std::vector<Tableau> enumerate_syt(const Partition& shape);  // content [n]
std::vector<Tableau> syt_with_content(const Partition& shape,
                                      const std::vector<int>& content);
std::vector<Bitableau> enumerate_bitableaux(const Bipartition& shape);

// Descent-set multisets over SYT of a fixed shape, memoized.
const std::map<SignedSet, long long>& sdes_distribution_of_shape(const Bipartition& shape);
const std::map<std::set<int>, long long>& des_distribution_of_shape(const Partition& shape);

}  // namespace hyperoct

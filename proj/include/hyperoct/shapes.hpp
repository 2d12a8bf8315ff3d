#pragma once

#include <set>
#include <string>
#include <vector>

#include "hyperoct/numeric.hpp"

namespace hyperoct {

// Weakly decreasing positive parts; the empty partition has size 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;

  // Number of standard Young tableaux, by the hook length formula.
  Int syt_count() const;

  bool operator==(const Partition&) const = default;
  // Canonical order: (n) first, (1,...,1) last.
  bool operator<(const Partition& other) const { return parts > other.parts; }
};

struct Bipartition {
  Partition lambda;  // x-side
  Partition mu;      // y-side

  Bipartition() = default;
  Bipartition(Partition l, Partition m) : lambda(std::move(l)), mu(std::move(m)) {}

  int size() const { return lambda.size() + mu.size(); }
  Int syt_count() const;  // C(n,|lambda|) * f^lambda * f^mu

  bool operator==(const Bipartition&) const = default;
  // |lambda| descending, then partition order on lambda, then on mu.
  bool operator<(const Bipartition& other) const;
};

struct Composition {
  std::vector<int> parts;  // all >= 1

  Composition() = default;
  explicit Composition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::vector<int> partial_sums() const;  // r_1 < ... < r_k = n
};

// A pair (S, eps) with n = max(S) in S and eps: S -> {+,-}, stored as its
// word over {0,1,*}: letter i is 0 if i in S with eps +, 1 if i in S with
// eps -, and * otherwise.  The last letter is never *.
class SignedSet {
 public:
  SignedSet() = default;
  explicit SignedSet(std::string word);
  static SignedSet from_parts(int n, const std::vector<int>& elems,
                              const std::vector<bool>& negative);

  const std::string& word() const { return word_; }
  int n() const { return static_cast<int>(word_.size()); }

  std::vector<int> elements() const;  // S, increasing, ends with n
  bool contains(int s) const;
  bool is_negative(int s) const;      // requires s in S
  std::vector<int> sign_vector() const;  // per-position +1/-1, length n
  std::set<int> wdes() const;

  bool operator==(const SignedSet&) const = default;
  // Lexicographic on words with 0 < 1 < *.
  bool operator<(const SignedSet& other) const;

 private:
  std::string word_;
};

// Composition with barred parts (negative entries): -k is a barred part k.
struct SignedComposition {
  std::vector<int> parts;  // nonzero

  SignedComposition() = default;
  explicit SignedComposition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  Composition underlying() const;

  bool operator==(const SignedComposition&) const = default;
};

SignedSet sigset_from_comp(const SignedComposition& gamma);
SignedComposition comp_from_sigset(const SignedSet& sigma);

SignedSet word_decode(const std::string& word);  // throws on malformed words
inline std::string word_encode(const SignedSet& sigma) { return sigma.word(); }

std::vector<Partition> partitions_of(int n);        // (n) first
std::vector<Bipartition> bipartitions_of(int n);    // canonical order
std::vector<Composition> compositions_of(int n);
std::vector<SignedSet> signed_sets_of(int n);       // lex word order, 0<1<*
std::vector<SignedComposition> signed_compositions_of(int n);  // same order

std::string to_string(const Partition& p);
std::string to_string(const Bipartition& bp);
std::string to_string(const SignedComposition& g);

}  // namespace hyperoct

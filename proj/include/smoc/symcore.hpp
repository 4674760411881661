#pragma once

// Symmetric-group arithmetic and the combinatorics of pairs of self-gluings.
//
// Permutations are written in one-line notation with 1-based images:
// images()[k-1] is the image of k. Composition reads right to left,
// (p * q)(k) = p(q(k)).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace smoc {

class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // The transposition (a b) in S_n.
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  // +1 for even permutations, -1 for odd ones.
  int sign() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Lexicographic rank of a permutation among all of S_n, and its inverse.
std::uint64_t permutation_rank(const Permutation& p);
Permutation permutation_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

// Offset function: 0 if c < a, 1 if a < c < b, 2 if b < c.
int epsilon(int a, int b, int c);

// The permutation of S_n sending i to n-1, j to n and preserving the order
// of the remaining points.
Permutation rho(int n, int i, int j);

// The (n,m)-shuffle: adds m to 1..n and subtracts n from n+1..n+m.
Permutation shuffle(int n, int m);

// p acting on 1..n and q acting on n+1..n+m.
Permutation block_embed(const Permutation& p, const Permutation& q);

// Restriction of a permutation fixing every point above n.
Permutation restrict_to(const Permutation& p, int n);

struct CosetDecomposition {
  Permutation sigma_hat;  // degree n-2
  int k = 0;
  int l = 0;
  int eps = 0;

  bool operator==(const CosetDecomposition&) const = default;
};

// Unique factorisation t = (n-1 n)^eps * block_embed(sigma_hat, id_2) * rho(n,k,l)
// with k < l. The factor (n-1 n) commutes with block_embed(sigma_hat, id_2).
CosetDecomposition coset_decompose(const Permutation& t);
Permutation coset_compose(const CosetDecomposition& d);

struct Quad {
  int a = 0, b = 0, c = 0, d = 0;
  auto operator<=>(const Quad&) const = default;
};

// (rho_{k,l}(i), rho_{k,l}(j), rho_{i,j}(k), rho_{i,j}(l)); the tuple is
// returned in that order as (i', j', k', l').
Quad reindex_primes(int n, int i, int j, int k, int l);

// An ordered pair of self-gluings: first glue (a,b) on n legs, then (c,d)
// on the n-2 survivors.
class OrderedGluingPair {
 public:
  OrderedGluingPair(int n, int a, int b, int c, int d);

  int n() const { return n_; }
  const Quad& quad() const { return q_; }
  int a() const { return q_.a; }
  int b() const { return q_.b; }
  int c() const { return q_.c; }
  int d() const { return q_.d; }

  auto operator<=>(const OrderedGluingPair&) const = default;

 private:
  int n_;
  Quad q_;
};

// Orbit of a 4-tuple of distinct points under the centraliser of (12)(34)
// in S_4, stored as its lexicographically least member.
class UnorderedGluingClass {
 public:
  UnorderedGluingClass(int n, int i, int j, int k, int l);

  int n() const { return n_; }
  const std::array<int, 4>& representative() const { return rep_; }

  auto operator<=>(const UnorderedGluingClass&) const = default;

 private:
  int n_;
  std::array<int, 4> rep_;
};

UnorderedGluingClass phi(const OrderedGluingPair& o);
OrderedGluingPair iota(const OrderedGluingPair& o);
OrderedGluingPair pair_shift(int n, const OrderedGluingPair& o);

// All of O_n in lexicographic order; empty for n < 4.
std::vector<OrderedGluingPair> ordered_gluing_pairs(int n);

std::uint64_t binomial(int n, int k);

}  // namespace smoc

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "smoc/symcore.hpp"

using namespace smoc;

namespace {

// rho built directly from its description: i and j go to the top two slots,
// everything else keeps its relative order.
Permutation rho_oracle(int n, int i, int j) {
  std::vector<int> img(n);
  int next = 1;
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      img[k - 1] = n - 1;
    } else if (k == j) {
      img[k - 1] = n;
    } else {
      img[k - 1] = next++;
    }
  }
  return Permutation(img);
}

std::vector<Permutation> all_perms(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Least member of the orbit of (i,j,k,l) under swapping inside each pair
// and swapping the two pairs.
std::array<int, 4> orbit_min(int i, int j, int k, int l) {
  std::vector<std::array<int, 4>> orbit;
  for (int swap_pairs = 0; swap_pairs < 2; ++swap_pairs)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        std::array<int, 2> p{i, j};
        std::array<int, 2> q{k, l};
        if (s1) std::swap(p[0], p[1]);
        if (s2) std::swap(q[0], q[1]);
        if (swap_pairs) std::swap(p, q);
        orbit.push_back({p[0], p[1], q[0], q[1]});
      }
  return *std::min_element(orbit.begin(), orbit.end());
}

}  // namespace

TEST_CASE("permutation construction and errors") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({3, 1}), std::invalid_argument);
  CHECK(Permutation::identity(0).degree() == 0);
  CHECK(Permutation::identity(3).is_identity());
  CHECK(Permutation::transposition(4, 1, 3) == Permutation({3, 2, 1, 4}));
  CHECK(Permutation({2, 3, 1}).to_string() == "[2,3,1]");
}

TEST_CASE("composition reads right to left") {
  const Permutation p({2, 3, 1});
  const Permutation q({2, 1, 3});
  // (p*q)(1) = p(q(1)) = p(2) = 3
  CHECK((p * q)(1) == 3);
  CHECK((p * q) == Permutation({3, 2, 1}));
}

TEST_CASE("group laws hold exhaustively up to degree 5") {
  for (int n = 0; n <= 5; ++n) {
    const auto perms = all_perms(n);
    const auto id = Permutation::identity(n);
    for (const auto& p : perms) {
      CHECK(p * id == p);
      CHECK(id * p == p);
      CHECK(p * p.inverse() == id);
      CHECK(p.inverse() * p == id);
    }
    if (n <= 4) {
      for (const auto& p : perms)
        for (const auto& q : perms)
          for (const auto& r : perms) REQUIRE((p * q) * r == p * (q * r));
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + trial % 6;
    auto random = [&] {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      return Permutation(img);
    };
    const auto p = random();
    const auto q = random();
    const auto r = random();
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).inverse() == q.inverse() * p.inverse());
    CHECK((p * q).sign() == p.sign() * q.sign());
  }
}

TEST_CASE("rank and unrank are inverse and lexicographic") {
  for (int n = 0; n <= 6; ++n) {
    const auto perms = all_perms(n);  // next_permutation order is lexicographic
    for (std::size_t r = 0; r < perms.size(); ++r) {
      REQUIRE(permutation_rank(perms[r]) == r);
      REQUIRE(permutation_unrank(n, r) == perms[r]);
    }
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon(2, 5, 1) == 0);
  CHECK(epsilon(2, 5, 3) == 1);
  CHECK(epsilon(2, 5, 7) == 2);
  CHECK_THROWS_AS(epsilon(2, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(5, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(epsilon(0, 2, 3), std::invalid_argument);
}

TEST_CASE("rho") {
  CHECK(rho(4, 1, 3) == Permutation({3, 1, 4, 2}));
  CHECK(rho(4, 1, 2) == Permutation({3, 4, 1, 2}));
  for (int n = 2; n <= 12; ++n) {
    CHECK(rho(n, n - 1, n).is_identity());
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) REQUIRE(rho(n, i, j) == rho_oracle(n, i, j));
  }
  CHECK_THROWS_AS(rho(4, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(rho(4, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(rho(4, 1, 5), std::invalid_argument);
}

TEST_CASE("shuffle and block_embed") {
  CHECK(shuffle(2, 3) == Permutation({4, 5, 1, 2, 3}));
  for (int m = 0; m <= 4; ++m) CHECK(shuffle(0, m).is_identity());
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) CHECK((shuffle(n, m) * shuffle(m, n)).is_identity());
  CHECK_THROWS_AS(shuffle(-1, 2), std::invalid_argument);

  CHECK(block_embed(Permutation::identity(2), Permutation({2, 1})) == Permutation({1, 2, 4, 3}));
  CHECK(block_embed(Permutation::identity(3), Permutation::identity(2)).is_identity());
  CHECK(block_embed(Permutation({2, 1}), Permutation({2, 1})) == Permutation({2, 1, 4, 3}));
}

TEST_CASE("coset decomposition examples") {
  const auto r = rho(4, 1, 3);
  CHECK(coset_decompose(r) == CosetDecomposition{Permutation::identity(2), 1, 3, 0});

  // k = t^-1(3), l = t^-1(4), sigma_hat solved from t * rho^-1
  const Permutation t({2, 1, 3, 4});
  CHECK(coset_decompose(t) == CosetDecomposition{Permutation({2, 1}), 3, 4, 0});

  const auto swapped = Permutation::transposition(4, 3, 4) * r;
  CHECK(coset_decompose(swapped) == CosetDecomposition{Permutation::identity(2), 1, 3, 1});
  // the swap placed on the right lands in a different coset representative
  CHECK(coset_decompose(r * Permutation::transposition(4, 3, 4)) ==
        CosetDecomposition{Permutation::identity(2), 1, 4, 0});
}

TEST_CASE("coset decomposition is a bijection up to degree 7") {
  for (int n = 2; n <= 7; ++n) {
    std::set<Permutation> images;
    for (const auto& sh : all_perms(n - 2))
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int eps = 0; eps < 2; ++eps) {
            const CosetDecomposition d{sh, k, l, eps};
            const auto t = coset_compose(d);
            REQUIRE(coset_decompose(t) == d);
            images.insert(t);
            // sigma_hat fixes the top two points when embedded
            const auto emb = block_embed(sh, Permutation::identity(2));
            CHECK(emb(n - 1) == n - 1);
            CHECK(emb(n) == n);
          }
    CHECK(images.size() == factorial(n));
    for (const auto& t : all_perms(n)) REQUIRE(coset_compose(coset_decompose(t)) == t);
  }
}

TEST_CASE("reindex_primes") {
  CHECK(reindex_primes(4, 1, 2, 3, 4) == Quad{1, 2, 1, 2});
  // rho_{5,6} on 6 points is the identity, rho_{1,2} sends 5,6 to 3,4
  CHECK(reindex_primes(6, 1, 2, 5, 6) == Quad{1, 2, 3, 4});
  CHECK_THROWS_AS(reindex_primes(6, 1, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(reindex_primes(6, 2, 1, 3, 4), std::invalid_argument);
  // swapping the roles of the two pairs swaps the two halves of the result
  for (int n = 4; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            const auto q = reindex_primes(n, i, j, k, l);
            const auto back = reindex_primes(n, k, l, i, j);
            REQUIRE(back == Quad{q.c, q.d, q.a, q.b});
            CHECK(q.a == rho_oracle(n, k, l)(i));
            CHECK(q.d == rho_oracle(n, i, j)(l));
          }
}

TEST_CASE("reindexing identity up to n = 9") {
  for (int n = 4; n <= 9; ++n) {
    const auto swap = Permutation::transposition(n, n - 1, n - 3) * Permutation::transposition(n, n - 2, n);
    const auto id2 = Permutation::identity(2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            const int kp = rho_oracle(n, i, j)(k);
            const int lp = rho_oracle(n, i, j)(l);
            const int ip = rho_oracle(n, k, l)(i);
            const int jp = rho_oracle(n, k, l)(j);
            REQUIRE(block_embed(rho(n - 2, kp, lp), id2) * rho(n, i, j) ==
                    swap * block_embed(rho(n - 2, ip, jp), id2) * rho(n, k, l));
          }
  }
}

TEST_CASE("gluing pairs: phi and iota") {
  CHECK_THROWS_AS(OrderedGluingPair(4, 1, 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGluingPair(4, 2, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(UnorderedGluingClass(4, 1, 1, 2, 3), std::invalid_argument);

  const OrderedGluingPair a(4, 1, 2, 1, 2);
  CHECK(phi(a).representative() == std::array<int, 4>{1, 2, 3, 4});
  CHECK(phi(OrderedGluingPair(4, 3, 4, 1, 2)).representative() == std::array<int, 4>{1, 2, 3, 4});
  CHECK(iota(a) == OrderedGluingPair(4, 3, 4, 1, 2));

  CHECK(UnorderedGluingClass(6, 6, 5, 2, 1).representative() == std::array<int, 4>{1, 2, 5, 6});
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
          if (std::set<int>{i, j, k, l}.size() < 4) continue;
          REQUIRE(UnorderedGluingClass(5, i, j, k, l).representative() == orbit_min(i, j, k, l));
        }

  std::set<UnorderedGluingClass> image;
  const auto o5 = ordered_gluing_pairs(5);
  for (const auto& o : o5) image.insert(phi(o));
  CHECK(o5.size() == binomial(5, 2) * binomial(3, 2));
  CHECK(image.size() == o5.size() / 2);

  for (const auto& o : ordered_gluing_pairs(6)) {
    CHECK(iota(iota(o)) == o);
    CHECK(iota(o) != o);
    CHECK(phi(iota(o)) == phi(o));
  }
  CHECK(ordered_gluing_pairs(3).empty());
}

TEST_CASE("pair_shift") {
  const OrderedGluingPair o(4, 1, 2, 1, 2);
  CHECK(pair_shift(0, o) == o);
  CHECK(pair_shift(2, o) == OrderedGluingPair(6, 3, 4, 3, 4));
  for (int m = 4; m <= 6; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& p : ordered_gluing_pairs(m)) REQUIRE(pair_shift(n, iota(p)) == iota(pair_shift(n, p)));
}

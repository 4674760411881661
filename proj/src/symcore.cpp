#include "smoc/symcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smoc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation: " + to_string());
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) {
    throw std::invalid_argument("bad transposition");
  }
  auto t = identity(n);
  std::swap(t.images_[a - 1], t.images_[b - 1]);
  return t;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) {
    throw std::invalid_argument("degree mismatch in composition");
  }
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    out.images_[k] = images_[rhs.images_[k] - 1];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    out.images_[images_[k] - 1] = static_cast<int>(k) + 1;
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

int Permutation::sign() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int x = s; !seen[x]; x = images_[x] - 1) {
      seen[x] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2) ? -1 : 1;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) os << ',';
    os << images_[k];
  }
  os << ']';
  return os.str();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t permutation_rank(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < n; ++k) {
    const int v = p.images()[k] - 1;
    const int smaller_unused = v - __builtin_popcount(used & ((1u << v) - 1));
    rank = rank * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << v;
  }
  return rank;
}

Permutation permutation_unrank(int n, std::uint64_t rank) {
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    const auto base = static_cast<std::uint64_t>(n - k);
    digits[k] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) {
    img[k] = avail[digits[k]];
    avail.erase(avail.begin() + digits[k]);
  }
  return Permutation(std::move(img));
}

int epsilon(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("epsilon: non-positive argument");
  if (a >= b) throw std::invalid_argument("epsilon: requires a < b");
  if (c == a || c == b) throw std::invalid_argument("epsilon: c must differ from a and b");
  if (c < a) return 0;
  if (c < b) return 1;
  return 2;
}

Permutation rho(int n, int i, int j) {
  if (n < 2 || i < 1 || i >= j || j > n) {
    throw std::invalid_argument("rho: requires 1 <= i < j <= n");
  }
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      img[k - 1] = n - 1;
    } else if (k == j) {
      img[k - 1] = n;
    } else {
      img[k - 1] = k - epsilon(i, j, k);
    }
  }
  return Permutation(std::move(img));
}

Permutation shuffle(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("shuffle: negative block");
  std::vector<int> img(n + m);
  for (int k = 1; k <= n; ++k) img[k - 1] = k + m;
  for (int k = n + 1; k <= n + m; ++k) img[k - 1] = k - n;
  return Permutation(std::move(img));
}

Permutation block_embed(const Permutation& p, const Permutation& q) {
  const int n = p.degree();
  std::vector<int> img(p.images());
  img.reserve(n + q.degree());
  for (int v : q.images()) img.push_back(v + n);
  return Permutation(std::move(img));
}

Permutation restrict_to(const Permutation& p, int n) {
  for (int k = n + 1; k <= p.degree(); ++k) {
    if (p(k) != k) throw std::invalid_argument("restrict_to: permutation moves a point above n");
  }
  return Permutation(std::vector<int>(p.images().begin(), p.images().begin() + n));
}

CosetDecomposition coset_decompose(const Permutation& t) {
  const int n = t.degree();
  if (n < 2) throw std::invalid_argument("coset_decompose: degree < 2");
  const auto inv = t.inverse();
  const int a = inv(n - 1);
  const int b = inv(n);
  CosetDecomposition d;
  d.eps = a < b ? 0 : 1;
  d.k = std::min(a, b);
  d.l = std::max(a, b);
  auto u = d.eps ? Permutation::transposition(n, n - 1, n) * t : t;
  d.sigma_hat = restrict_to(u * rho(n, d.k, d.l).inverse(), n - 2);
  return d;
}

Permutation coset_compose(const CosetDecomposition& d) {
  const int n = d.sigma_hat.degree() + 2;
  auto t = block_embed(d.sigma_hat, Permutation::identity(2)) * rho(n, d.k, d.l);
  return d.eps ? Permutation::transposition(n, n - 1, n) * t : t;
}

Quad reindex_primes(int n, int i, int j, int k, int l) {
  if (i >= j || k >= l) throw std::invalid_argument("reindex_primes: requires i < j and k < l");
  if (i == k || i == l || j == k || j == l) {
    throw std::invalid_argument("reindex_primes: entries must be distinct");
  }
  const auto rkl = rho(n, k, l);
  const auto rij = rho(n, i, j);
  return {rkl(i), rkl(j), rij(k), rij(l)};
}

OrderedGluingPair::OrderedGluingPair(int n, int a, int b, int c, int d) : n_(n), q_{a, b, c, d} {
  if (!(1 <= a && a < b && b <= n && 1 <= c && c < d && d <= n - 2)) {
    throw std::invalid_argument("invalid ordered gluing pair");
  }
}

UnorderedGluingClass::UnorderedGluingClass(int n, int i, int j, int k, int l) : n_(n) {
  std::array<int, 4> v{i, j, k, l};
  for (int x : v) {
    if (x < 1 || x > n) throw std::invalid_argument("gluing class entry out of range");
  }
  if (i == j || i == k || i == l || j == k || j == l || k == l) {
    throw std::invalid_argument("gluing class entries must be distinct");
  }
  std::array<int, 2> p{std::min(i, j), std::max(i, j)};
  std::array<int, 2> q{std::min(k, l), std::max(k, l)};
  if (q < p) std::swap(p, q);
  rep_ = {p[0], p[1], q[0], q[1]};
}

UnorderedGluingClass phi(const OrderedGluingPair& o) {
  const auto inv = rho(o.n(), o.a(), o.b()).inverse();
  return UnorderedGluingClass(o.n(), o.a(), o.b(), inv(o.c()), inv(o.d()));
}

OrderedGluingPair iota(const OrderedGluingPair& o) {
  const auto inv = rho(o.n(), o.a(), o.b()).inverse();
  const int k = inv(o.c());
  const int l = inv(o.d());
  const auto rkl = rho(o.n(), k, l);
  return OrderedGluingPair(o.n(), k, l, rkl(o.a()), rkl(o.b()));
}

OrderedGluingPair pair_shift(int n, const OrderedGluingPair& o) {
  if (n < 0) throw std::invalid_argument("pair_shift: negative shift");
  return OrderedGluingPair(o.n() + n, o.a() + n, o.b() + n, o.c() + n, o.d() + n);
}

std::vector<OrderedGluingPair> ordered_gluing_pairs(int n) {
  std::vector<OrderedGluingPair> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = 1; c <= n - 2; ++c)
        for (int d = c + 1; d <= n - 2; ++d) out.emplace_back(n, a, b, c, d);
  return out;
}

}  // namespace smoc

#include "smoc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <array>
#include <deque>
#include <functional>
#include <numeric>

#include "smoc/errors.hpp"

namespace smoc {

std::size_t default_limit() {
  if (const char* env = std::getenv("SMOC_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultLimit;
}

// ---------------------------------------------------------------- enumeration

namespace {

int mask_color(const std::vector<int>& inputs, unsigned mask) {
  int c = 0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (mask >> k & 1u) c += inputs[k];
  }
  return c;
}

bool bigrade_possible(const TreeType& type, const Bigrade& bigrade) {
  const int r = static_cast<int>(type.inputs.size());
  if (r < 1 || r > 16 || bigrade.s < 0 || bigrade.m != r - 1) return false;
  for (int v : type.inputs) {
    if (v < 0) return false;
  }
  const int n = std::accumulate(type.inputs.begin(), type.inputs.end(), 0);
  return type.output == n - 2 * bigrade.s && type.output >= 0;
}

class PureGenerator {
 public:
  explicit PureGenerator(const std::vector<int>& inputs) : inputs_(inputs) {}

  const std::vector<PureTree>& get(unsigned mask, int s) {
    const auto key = std::make_pair(mask, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<PureTree> out;
    const int color = mask_color(inputs_, mask) - 2 * s;
    if (color >= 0) {
      if (std::popcount(mask) == 1 && s == 0) {
        const int idx = std::countr_zero(mask);
        out.push_back(PureTree::leaf(idx + 1, inputs_[idx]));
      }
      if (s >= 1) {
        for (const auto& child : get(mask, s - 1)) {
          const int c = color + 2;
          for (int i = 1; i <= c; ++i)
            for (int j = i + 1; j <= c; ++j) out.push_back(PureTree::xi(i, j, child));
        }
      }
      if (std::popcount(mask) >= 2) {
        const unsigned low = mask & (~mask + 1);
        const unsigned rest = mask ^ low;
        // first branch = low plus a proper subset of rest
        for (unsigned sub = 0;; sub = (sub - rest) & rest) {
          const unsigned a = low | sub;
          if (a != mask) {
            const unsigned b = mask ^ a;
            for (int s1 = 0; s1 <= s; ++s1) {
              const auto& xs = get(a, s1);
              const auto& ys = get(b, s - s1);
              for (const auto& x : xs)
                for (const auto& y : ys) out.push_back(PureTree::merge(x, y));
            }
          }
          if (sub == rest) break;
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::vector<int> inputs_;
  std::map<std::pair<unsigned, int>, std::vector<PureTree>> memo_;
};

}  // namespace

std::vector<PureTree> enumerate_pure(const TreeType& type, const Bigrade& bigrade) {
  if (!bigrade_possible(type, bigrade)) return {};
  const unsigned full = (1u << type.inputs.size()) - 1;
  PureGenerator gen(type.inputs);
  return gen.get(full, bigrade.s);
}

// ---------------------------------------------------------------- closure

namespace {

class SignedUnionFind {
 public:
  explicit SignedUnionFind(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::pair<std::uint32_t, std::uint8_t> find(std::uint32_t x) {
    std::uint32_t root = x;
    std::uint8_t p = 0;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // compress, fixing parities along the way
    std::uint8_t q = p;
    while (parent_[x] != root) {
      const std::uint32_t next = parent_[x];
      const std::uint8_t px = parity_[x];
      parent_[x] = root;
      parity_[x] = q;
      q ^= px;
      x = next;
    }
    return {root, p};
  }

  // Records x = (-1)^odd * y; returns false on a contradiction.
  bool unite(std::uint32_t x, std::uint32_t y, std::uint8_t odd) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) return (px ^ py) == odd;
    if (size_[rx] < size_[ry]) {
      std::swap(rx, ry);
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ odd;
    size_[rx] += size_[ry];
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint32_t> size_;
};

void check_limit(std::size_t trees, std::uint64_t perms, std::size_t limit) {
  const long double size = static_cast<long double>(trees) * static_cast<long double>(perms);
  if (size > static_cast<long double>(limit) || size > 4.0e9L) {
    throw ResourceLimitError(static_cast<std::size_t>(std::min<long double>(size, 1.8e19L)), limit);
  }
}

}  // namespace

Element ClassPartition::element(std::size_t index) const {
  const auto t = index / perms;
  const auto s = index % perms;
  return Element(permutation_unrank(type.output, s), trees.at(t));
}

std::size_t ClassPartition::index_of(const Element& e) const {
  const auto it = tree_index_.find(e.tree());
  if (it == tree_index_.end()) throw ValidationError("element is not in this component");
  return it->second * perms + permutation_rank(e.sigma());
}

ClassPartition closure(const TreeType& type, const Bigrade& bigrade, Mode mode, std::size_t limit) {
  ClassPartition cp;
  cp.type = type;
  cp.bigrade = bigrade;
  cp.mode = mode;
  cp.trees = enumerate_pure(type, bigrade);
  cp.perms = factorial(std::max(type.output, 0));
  check_limit(cp.trees.size(), cp.perms, limit);
  for (std::size_t t = 0; t < cp.trees.size(); ++t) cp.tree_index_.emplace(cp.trees[t], t);

  const std::size_t n = cp.trees.size() * cp.perms;
  const auto F = static_cast<std::uint32_t>(cp.perms);
  const int v0 = type.output;
  std::vector<Permutation> all;
  all.reserve(F);
  for (std::uint32_t s = 0; s < F; ++s) all.push_back(permutation_unrank(v0, s));

  std::map<Permutation, std::vector<std::uint32_t>> rank_after;  // rank(sigma * pi) by rank(sigma)
  auto ranks_for = [&](const Permutation& pi) -> const std::vector<std::uint32_t>& {
    auto it = rank_after.find(pi);
    if (it != rank_after.end()) return it->second;
    std::vector<std::uint32_t> r(F);
    for (std::uint32_t s = 0; s < F; ++s) r[s] = static_cast<std::uint32_t>(permutation_rank(all[s] * pi));
    return rank_after.emplace(pi, std::move(r)).first->second;
  };

  SignedUnionFind uf(n);
  bool consistent = true;
  const auto id = Permutation::identity(v0);
  for (std::size_t t = 0; t < cp.trees.size(); ++t) {
    const Element e(id, cp.trees[t]);
    for (int edge : cp.trees[t].internal_edges()) {
      auto r = local_rewrite(e, edge);
      if (!r) continue;
      const std::size_t u = cp.tree_index_.at(r->element.tree());
      const auto& ranks = ranks_for(r->element.sigma());
      const std::uint8_t odd = (mode == Mode::Odd && r->sign < 0) ? 1 : 0;
      const auto base_t = static_cast<std::uint32_t>(t * F);
      const auto base_u = static_cast<std::uint32_t>(u * F);
      for (std::uint32_t s = 0; s < F; ++s) {
        if (!uf.unite(base_t + s, base_u + ranks[s], odd)) consistent = false;
      }
    }
  }

  cp.class_of_.assign(n, 0);
  cp.sign_.assign(n, 0);
  std::vector<std::uint32_t> dense(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    auto [root, p] = uf.find(static_cast<std::uint32_t>(x));
    if (dense[root] == UINT32_MAX) dense[root] = next++;
    cp.class_of_[x] = dense[root];
    cp.sign_[x] = p;
  }
  cp.class_count_ = next;
  cp.consistent_ = consistent;
  return cp;
}

ClassPartition closure_naive(const TreeType& type, const Bigrade& bigrade, Mode mode, std::size_t limit) {
  ClassPartition cp;
  cp.type = type;
  cp.bigrade = bigrade;
  cp.mode = mode;
  cp.trees = enumerate_pure(type, bigrade);
  cp.perms = factorial(std::max(type.output, 0));
  check_limit(cp.trees.size(), cp.perms, limit);
  for (std::size_t t = 0; t < cp.trees.size(); ++t) cp.tree_index_.emplace(cp.trees[t], t);

  const std::size_t n = cp.trees.size() * cp.perms;
  // Rewrites are not all involutions, so search the undirected graph.
  std::vector<std::vector<std::pair<std::size_t, std::uint8_t>>> adj(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& r : neighbors(cp.element(x))) {
      const std::size_t y = cp.index_of(r.element);
      const std::uint8_t odd = (mode == Mode::Odd && r.sign < 0) ? 1 : 0;
      adj[x].emplace_back(y, odd);
      adj[y].emplace_back(x, odd);
    }
  }
  cp.class_of_.assign(n, UINT32_MAX);
  cp.sign_.assign(n, 0);
  std::uint32_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (cp.class_of_[start] != UINT32_MAX) continue;
    const std::uint32_t cls = next++;
    cp.class_of_[start] = cls;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (auto [y, odd] : adj[x]) {
        const std::uint8_t p = cp.sign_[x] ^ odd;
        if (cp.class_of_[y] == UINT32_MAX) {
          cp.class_of_[y] = cls;
          cp.sign_[y] = p;
          queue.push_back(y);
        } else if (cp.sign_[y] != p) {
          cp.consistent_ = false;
        }
      }
    }
  }
  cp.class_count_ = next;
  return cp;
}

// ---------------------------------------------------------------- counts

std::uint64_t count_expected(const TreeType& type, const Bigrade& bigrade) {
  if (!bigrade_possible(type, bigrade)) return 0;
  const int n = std::accumulate(type.inputs.begin(), type.inputs.end(), 0);
  const int s = bigrade.s;
  // C(n,2s) * (2s-1)!! * v0!
  std::uint64_t matchings = binomial(n, 2 * s);
  for (int k = 2 * s - 1; k > 1; k -= 2) matchings *= static_cast<std::uint64_t>(k);
  return matchings * factorial(type.output);
}

std::vector<NormalForm> enumerate_normal_forms(const TreeType& type, int s, Mode mode) {
  const int n = std::accumulate(type.inputs.begin(), type.inputs.end(), 0);
  std::vector<NormalForm> out;
  if (type.inputs.empty() || s < 0 || type.output != n - 2 * s || type.output < 0) return out;
  std::vector<Matching> matchings;
  Matching current;
  std::vector<char> used(n + 1, 0);
  // Pairs are chosen with increasing first entries, so each matching comes
  // out lex-sorted exactly once.
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(current.size()) == s) {
      matchings.push_back(current);
      return;
    }
    for (int a = from; a <= n; ++a) {
      if (used[a]) continue;
      used[a] = 1;
      for (int b = a + 1; b <= n; ++b) {
        if (used[b]) continue;
        used[b] = 1;
        current.emplace_back(a, b);
        self(self, a + 1);
        current.pop_back();
        used[b] = 0;
      }
      used[a] = 0;
    }
  };
  rec(rec, 1);
  const std::uint64_t F = factorial(type.output);
  for (const auto& m : matchings) {
    for (std::uint64_t r = 0; r < F; ++r) {
      NormalForm nf;
      nf.mode = mode;
      nf.inputs = type.inputs;
      nf.output = type.output;
      nf.sign = 1;
      nf.sigma = permutation_unrank(type.output, r);
      nf.matching = m;
      out.push_back(std::move(nf));
    }
  }
  return out;
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int big_factorial(int n) {
  cpp_int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

class ShapeCounter {
 public:
  explicit ShapeCounter(const std::vector<int>& inputs) : inputs_(inputs) {}

  // Sum over unordered shapes rooted at a labelled vertex.
  cpp_rational internal(unsigned mask, int s) {
    const auto key = std::make_pair(mask, s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    cpp_rational total = 0;
    const int color = mask_color(inputs_, mask) - 2 * s;
    if (color >= 0) {
      if (s >= 1) {
        const int c = color + 2;
        total += cpp_rational(big_factorial(c) / 2) * child(mask, s - 1, c);
      }
      if (std::popcount(mask) >= 2) {
        const unsigned low = mask & (~mask + 1);
        const unsigned rest = mask ^ low;
        for (unsigned sub = 0;; sub = (sub - rest) & rest) {
          const unsigned a = low | sub;
          if (a != mask) {
            const unsigned b = mask ^ a;
            for (int s1 = 0; s1 <= s; ++s1) {
              const int ca = mask_color(inputs_, a) - 2 * s1;
              const int cb = mask_color(inputs_, b) - 2 * (s - s1);
              if (ca < 0 || cb < 0) continue;
              total += cpp_rational(big_factorial(color)) * child(a, s1, ca) * child(b, s - s1, cb);
            }
          }
          if (sub == rest) break;
        }
      }
    }
    memo_.emplace(key, total);
    return total;
  }

  // Contribution of a subtree hanging below an internal edge of colour c.
  cpp_rational child(unsigned mask, int s, int c) {
    cpp_rational w = internal(mask, s) / cpp_rational(big_factorial(c));
    if (std::popcount(mask) == 1 && s == 0) w += 1;
    return w;
  }

 private:
  std::vector<int> inputs_;
  std::map<std::pair<unsigned, int>, cpp_rational> memo_;
};

}  // namespace

cpp_int count_free(const TreeType& type, const Bigrade& bigrade) {
  if (!bigrade_possible(type, bigrade)) return 0;
  const unsigned full = (1u << type.inputs.size()) - 1;
  ShapeCounter counter(type.inputs);
  cpp_rational total = counter.internal(full, bigrade.s);
  // a bare edge contributes its automorphisms
  if (type.inputs.size() == 1 && bigrade.s == 0) total += cpp_rational(big_factorial(type.inputs[0]));
  if (denominator(total) != 1) throw Error("non-integral shape count");
  return numerator(total);
}

// ---------------------------------------------------------------- linear algebra

void RationalMatrix::reduce(Row& row) const {
  auto it = row.begin();
  while (it != row.end()) {
    const auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    const std::size_t col = it->first;
    const Rational factor = it->second;
    for (const auto& [c, v] : p->second) {
      auto& entry = row[c];
      entry -= factor * v;
      if (entry == 0) row.erase(c);
    }
    it = row.upper_bound(col);
  }
}

bool RationalMatrix::add_row(Row row) {
  reduce(row);
  if (row.empty()) return false;
  const Rational lead = row.begin()->second;
  for (auto& [c, v] : row) v /= lead;
  const std::size_t col = row.begin()->first;
  pivots_.emplace(col, std::move(row));
  return true;
}

bool RationalMatrix::in_span(Row row) const {
  reduce(row);
  return row.empty();
}

// ---------------------------------------------------------------- relations

namespace {

RawTree act_on_leaf(const RawTree& t, int input, const Permutation& tau) {
  auto decos = t.decorations();
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).kind == NodeKind::Leaf && t.node(v).a == input) decos[v] = decos[v] * tau;
  }
  return RawTree::from_nodes(t.nodes(), std::move(decos));
}

void add_term(Vector& v, const RawTree& t, long long coeff) {
  auto e = purify(t);
  auto& c = v[e];
  c += coeff;
  if (c == 0) v.erase(e);
}

// Every tuple (tau_1..tau_r) with tau_k in S_{inputs[k]}.
void for_each_right(const std::vector<int>& inputs, const std::function<void(const std::vector<Permutation>&)>& f) {
  std::vector<Permutation> cur(inputs.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == inputs.size()) {
      f(cur);
      return;
    }
    const auto total = factorial(inputs[k]);
    for (std::uint64_t r = 0; r < total; ++r) {
      cur[k] = permutation_unrank(inputs[k], r);
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

struct RelationSeed {
  RawTree lhs;
  RawTree rhs;
};

TreeType family_type(RelationFamily family, const std::vector<int>& p) {
  switch (family) {
    case RelationFamily::XiXi:
      if (p.size() != 1 || p[0] < 4) throw ValidationError("xi-xi relations need one colour n >= 4");
      return {{p[0]}, p[0] - 4};
    case RelationFamily::XiMerge:
      if (p.size() != 2 || p[0] < 0 || p[1] < 0 || p[0] + p[1] < 2) {
        throw ValidationError("xi-merge relations need colours n, m with n + m >= 2");
      }
      return {{p[0], p[1]}, p[0] + p[1] - 2};
    case RelationFamily::MergeMerge:
      if (p.size() != 3 || p[0] < 0 || p[1] < 0 || p[2] < 0) {
        throw ValidationError("merge-merge relations need three colours");
      }
      return {{p[0], p[1], p[2]}, p[0] + p[1] + p[2]};
  }
  return {};
}

Bigrade family_bigrade(RelationFamily family) {
  switch (family) {
    case RelationFamily::XiXi:
      return {2, 0};
    case RelationFamily::XiMerge:
      return {1, 1};
    case RelationFamily::MergeMerge:
      return {0, 2};
  }
  return {};
}

std::vector<RelationSeed> family_seeds(RelationFamily family, const std::vector<int>& p) {
  std::vector<RelationSeed> seeds;
  switch (family) {
    case RelationFamily::XiXi: {
      const int n = p[0];
      auto x = RawTree::leaf(1, n);
      auto lhs = RawTree::xi(n - 3, n - 2, RawTree::xi(n - 1, n, x));
      auto tau = Permutation::transposition(n, n - 1, n - 3) * Permutation::transposition(n, n - 2, n);
      seeds.push_back({lhs, act_on_leaf(lhs, 1, tau)});
      break;
    }
    case RelationFamily::XiMerge: {
      const int n = p[0];
      const int m = p[1];
      if (m >= 2) {
        auto x1 = RawTree::leaf(1, n);
        auto x2 = RawTree::leaf(2, m);
        seeds.push_back({RawTree::xi(n + m - 1, n + m, RawTree::merge(x1, x2)),
                         RawTree::merge(x1, RawTree::xi(m - 1, m, x2))});
      }
      if (n >= 2) {
        // the same relation for colours (m, n), then the inputs swapped
        auto y1 = RawTree::leaf(1, m);
        auto y2 = RawTree::leaf(2, n);
        auto swap = Permutation::transposition(2, 1, 2);
        seeds.push_back({RawTree::xi(n + m - 1, n + m, RawTree::merge(y1, y2)).relabel_inputs(swap),
                         RawTree::merge(y1, RawTree::xi(n - 1, n, y2)).relabel_inputs(swap)});
      }
      break;
    }
    case RelationFamily::MergeMerge: {
      for (std::uint64_t r = 0; r < 6; ++r) {
        const auto pi = permutation_unrank(3, r);
        // input k of the seed carries the colour that input pi(k) needs
        std::array<int, 3> c{};
        for (int k = 1; k <= 3; ++k) c[k - 1] = p[pi(k) - 1];
        auto x1 = RawTree::leaf(1, c[0]);
        auto x2 = RawTree::leaf(2, c[1]);
        auto x3 = RawTree::leaf(3, c[2]);
        seeds.push_back({RawTree::merge(RawTree::merge(x1, x2), x3).relabel_inputs(pi),
                         RawTree::merge(x1, RawTree::merge(x2, x3)).relabel_inputs(pi)});
      }
      break;
    }
  }
  return seeds;
}

}  // namespace

RationalMatrix::Row RelationSpan::to_row(const Vector& v) const {
  RationalMatrix::Row row;
  for (const auto& [e, c] : v) {
    const auto it = column_of.find(e);
    if (it == column_of.end()) throw ValidationError("vector outside the ambient component");
    row[it->second] = c;
  }
  return row;
}

RelationSpan relation_span(RelationFamily family, const std::vector<int>& params, std::size_t limit) {
  const auto type = family_type(family, params);
  const auto bigrade = family_bigrade(family);
  RelationSpan span;
  const auto trees = enumerate_pure(type, bigrade);
  const auto F = factorial(type.output);
  check_limit(trees.size(), F, limit);
  for (const auto& t : trees) {
    for (std::uint64_t r = 0; r < F; ++r) {
      span.column_of.emplace(Element(permutation_unrank(type.output, r), t), span.column_of.size());
    }
  }
  span.columns = span.column_of.size();

  std::uint64_t orbit = F;
  for (int v : type.inputs) orbit *= factorial(v);
  check_limit(orbit, 2 * family_seeds(family, params).size(), limit);

  for (const auto& seed : family_seeds(family, params)) {
    for_each_right(type.inputs, [&](const std::vector<Permutation>& taus) {
      auto lhs = seed.lhs;
      auto rhs = seed.rhs;
      for (std::size_t k = 0; k < taus.size(); ++k) {
        if (taus[k].is_identity()) continue;
        lhs = act_on_leaf(lhs, static_cast<int>(k) + 1, taus[k]);
        rhs = act_on_leaf(rhs, static_cast<int>(k) + 1, taus[k]);
      }
      for (std::uint64_t r = 0; r < F; ++r) {
        const auto sigma = permutation_unrank(type.output, r);
        Vector v;
        add_term(v, RawTree::decorated(sigma, lhs), 1);
        add_term(v, RawTree::decorated(sigma, rhs), -1);
        ++span.rows;
        if (!v.empty()) span.matrix.add_row(span.to_row(v));
      }
    });
  }
  span.rank = span.matrix.rank();
  return span;
}

std::size_t relation_span_rank(RelationFamily family, const std::vector<int>& params, std::size_t limit) {
  return relation_span(family, params, limit).rank;
}

std::vector<Vector> basis_vectors(RelationFamily family, const std::vector<int>& params) {
  const auto type = family_type(family, params);
  const auto F = factorial(type.output);
  std::vector<Vector> out;
  auto emit = [&](const Element& a, const Element& b) {
    for (std::uint64_t r = 0; r < F; ++r) {
      const auto sigma = permutation_unrank(type.output, r);
      Vector v;
      v[Element(sigma * a.sigma(), a.tree())] += 1;
      v[Element(sigma * b.sigma(), b.tree())] -= 1;
      out.push_back(std::move(v));
    }
  };
  const auto id = Permutation::identity(type.output);
  switch (family) {
    case RelationFamily::XiXi: {
      const int n = params[0];
      for (const auto& o : ordered_gluing_pairs(n)) {
        // first glued pair (a,b); second pair in original leg labels (k,l)
        const auto inv = rho(n, o.a(), o.b()).inverse();
        const int l = std::max(inv(o.c()), inv(o.d()));
        if (o.b() < l) continue;
        const auto other = iota(o);
        auto leaf = PureTree::leaf(1, n);
        emit(Element(id, PureTree::xi(o.c(), o.d(), PureTree::xi(o.a(), o.b(), leaf))),
             Element(id, PureTree::xi(other.c(), other.d(), PureTree::xi(other.a(), other.b(), leaf))));
      }
      break;
    }
    case RelationFamily::XiMerge:
    case RelationFamily::MergeMerge: {
      for (const auto& t : enumerate_pure(type, family_bigrade(family))) {
        const Element e(id, t);
        const int below = t.node(0).kind == NodeKind::Merge && family == RelationFamily::XiMerge;
        const bool comb = family == RelationFamily::MergeMerge && t.node(t.node(0).child[0]).kind == NodeKind::Merge &&
                          t.node(t.node(t.node(0).child[0]).child[1]).a == 2;
        if (family == RelationFamily::XiMerge && !below) continue;
        if (family == RelationFamily::MergeMerge && comb) continue;
        const int edge = t.internal_edges().front();
        auto r = local_rewrite(e, edge);
        emit(e, r->element);
      }
      break;
    }
  }
  return out;
}

std::uint64_t expected_relation_rank(RelationFamily family, const std::vector<int>& p) {
  switch (family) {
    case RelationFamily::XiXi:
      return factorial(p[0]) / 8;
    case RelationFamily::XiMerge:
      return factorial(p[0] + p[1] - 2) * (binomial(p[0], 2) + binomial(p[1], 2));
    case RelationFamily::MergeMerge:
      return 2 * factorial(p[0] + p[1] + p[2]);
  }
  return 0;
}

}  // namespace smoc

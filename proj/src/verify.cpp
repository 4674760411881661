#include "smoc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

#include "smoc/errors.hpp"

namespace smoc {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(Report& r) : report_(r), start_(Clock::now()) {}
  ~Timer() {
    report_.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  Report& report_;
  Clock::time_point start_;
};

std::string bigrade_string(const Bigrade& b) {
  return "(" + std::to_string(b.s) + "," + std::to_string(b.m) + ")";
}

void record(Report& report, const TreeType& type, const Bigrade& bigrade, const nlohmann::ordered_json& lhs,
            const nlohmann::ordered_json& rhs) {
  const bool ok = lhs == rhs;
  report.pass = report.pass && ok;
  report.details.push_back({type.to_string(), bigrade_string(bigrade), lhs, rhs});
}

enum class Where { Above, First, Second };

// Position of v relative to the merger mg: above it, or in one of its branches.
Where locate(const RawTree& t, int v, int mg) {
  for (int x = mg; x >= 0; x = t.node(x).parent) {
    if (x == v) return Where::Above;
  }
  int c = v;
  while (t.node(c).parent != mg) c = t.node(c).parent;
  return t.node(mg).child[0] == c ? Where::First : Where::Second;
}

void require_bigrade(const RawTree& t, Bigrade want) {
  const auto info = infer_type(t);
  if (info.bigrade != want) {
    throw ValidationError("shadow needs bigrade " + bigrade_string(want) + ", got " + bigrade_string(info.bigrade));
  }
}

int total_inputs(const RawTree& t) {
  int n = 0;
  for (const auto& node : t.nodes()) {
    if (node.kind == NodeKind::Leaf) n += node.b;
  }
  return n;
}

}  // namespace

Shadow21 shadow21(const Permutation& sigma, const RawTree& t, Mutation mutation) {
  require_bigrade(t, {2, 1});
  std::vector<int> xs;
  int mg = -1;
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).kind == NodeKind::Xi) xs.push_back(v);
    if (t.node(v).kind == NodeKind::Merge) mg = v;
  }
  const Where wa = locate(t, xs[0], mg);
  const Where wb = locate(t, xs[1], mg);
  int u = xs[1];
  int w = xs[0];
  if (wa != wb) {
    if (wa == Where::Above) {
      u = xs[1];
      w = xs[0];
    } else if (wb == Where::Above) {
      u = xs[0];
      w = xs[1];
    } else {
      u = wa == Where::First ? xs[0] : xs[1];
      w = wa == Where::First ? xs[1] : xs[0];
    }
  }
  const Where wu = locate(t, u, mg);
  const Where ww = locate(t, w, mg);
  // input colour of the first branch, before any gluing inside it
  int n1 = 0;
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).kind == NodeKind::Leaf && locate(t, v, mg) == Where::First) n1 += t.node(v).b;
  }
  int chi_u = wu == Where::Second ? n1 : 0;
  if (mutation == Mutation::ChiShift && chi_u > 0) chi_u -= 1;
  const int chi_w = ww == Where::Second ? (wu == Where::First ? n1 - 2 : n1) : 0;
  const OrderedGluingPair o(total_inputs(t), t.node(u).a + chi_u, t.node(u).b + chi_u, t.node(w).a + chi_w,
                            t.node(w).b + chi_w);
  return {sigma, phi(o)};
}

Shadow21 shadow21(const Element& e) { return shadow21(e.sigma(), RawTree::from_pure(e.tree())); }

Shadow12 shadow12(const Permutation& sigma, const RawTree& t, Mutation mutation) {
  require_bigrade(t, {1, 2});
  int u = -1;
  for (int v = 0; v < t.size(); ++v) {
    if (t.node(v).kind == NodeKind::Xi) u = v;
  }
  int chi = 0;
  for (int c = u, p = t.node(u).parent; p >= 0; c = p, p = t.node(p).parent) {
    if (t.node(p).kind == NodeKind::Merge && t.node(p).child[1] == c) chi += t.node(t.node(p).child[0]).color;
  }
  if (mutation == Mutation::ChiShift && chi > 0) chi -= 1;
  return {sigma, t.node(u).a + chi, t.node(u).b + chi};
}

Shadow12 shadow12(const Element& e) { return shadow12(e.sigma(), RawTree::from_pure(e.tree())); }

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["anchor"] = anchor;
  j["params"] = params;
  j["pass"] = pass;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& d : details) {
    nlohmann::ordered_json x;
    x["type"] = d.type;
    x["bigrade"] = d.bigrade;
    x["lhs"] = d.lhs;
    x["rhs"] = d.rhs;
    arr.push_back(std::move(x));
  }
  j["details"] = std::move(arr);
  j["elapsed_ms"] = static_cast<std::int64_t>(elapsed_ms + 0.5);
  return j;
}

std::vector<std::vector<int>> colour_tuples(int inputs, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(inputs, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == inputs) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[k] = c;
      self(self, k + 1, left - c);
    }
  };
  if (inputs > 0 && max_total >= 0) rec(rec, 0, max_total);
  return out;
}

// ---------------------------------------------------------------- rho / iota

Report check_rho_identity(int max_n, Mutation mutation) {
  Report report;
  report.check = "rho";
  report.anchor = "reindexing identity for two self-gluings";
  report.params = {{"max_n", max_n}};
  Timer timer(report);
  if (max_n < 4) throw ValidationError("max_n must be at least 4");
  for (int n = 4; n <= max_n; ++n) {
    std::uint64_t tested = 0;
    std::uint64_t held = 0;
    auto swap = Permutation::transposition(n, n - 1, n - 3) * Permutation::transposition(n, n - 2, n);
    if (mutation == Mutation::RhoTransposition) {
      swap = Permutation::transposition(n, n - 1, n - 2) * Permutation::transposition(n, n - 3, n);
    }
    const auto id2 = Permutation::identity(2);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) {
            if (k == i || k == j || l == i || l == j) continue;
            const auto q = reindex_primes(n, i, j, k, l);
            const auto lhs = block_embed(rho(n - 2, q.c, q.d), id2) * rho(n, i, j);
            const auto rhs = swap * block_embed(rho(n - 2, q.a, q.b), id2) * rho(n, k, l);
            ++tested;
            held += lhs == rhs;
          }
    record(report, TreeType{{n}, n - 4}, {2, 0}, tested, held);
  }
  return report;
}

Report check_iota(int max_n) {
  Report report;
  report.check = "iota";
  report.anchor = "fibre-swapping involution on ordered pairs of self-gluings";
  report.params = {{"max_n", max_n}};
  Timer timer(report);
  for (int n = 4; n <= max_n; ++n) {
    const auto pairs = ordered_gluing_pairs(n);
    std::uint64_t involutive = 0;
    std::uint64_t fixed = 0;
    std::uint64_t same_class = 0;
    std::uint64_t shift_ok = 0;
    std::uint64_t shift_tested = 0;
    std::set<UnorderedGluingClass> classes;
    for (const auto& o : pairs) {
      const auto io = iota(o);
      involutive += iota(io) == o;
      fixed += io == o;
      same_class += phi(io) == phi(o);
      classes.insert(phi(o));
      for (int s = 0; s + n <= max_n; ++s) {
        ++shift_tested;
        shift_ok += pair_shift(s, io) == iota(pair_shift(s, o));
      }
    }
    const std::uint64_t expected = binomial(n, 2) * binomial(n - 2, 2);
    nlohmann::ordered_json lhs = {{"pairs", pairs.size()},
                                  {"involutive", involutive},
                                  {"fixed_points", fixed},
                                  {"same_class", same_class},
                                  {"classes", classes.size()},
                                  {"shift_commutes", shift_ok}};
    nlohmann::ordered_json rhs = {{"pairs", expected},
                                  {"involutive", pairs.size()},
                                  {"fixed_points", 0},
                                  {"same_class", pairs.size()},
                                  {"classes", expected / 2},
                                  {"shift_commutes", shift_tested}};
    record(report, TreeType{{n}, n - 4}, {2, 0}, lhs, rhs);
  }
  return report;
}

// ---------------------------------------------------------------- purification

namespace {

RawTree swapped_raw(const PureTree& t, int v, unsigned swaps) {
  const auto& n = t.node(v);
  switch (n.kind) {
    case NodeKind::Leaf:
      return RawTree::leaf(n.a, n.b);
    case NodeKind::Xi:
      return RawTree::xi(n.a, n.b, swapped_raw(t, n.child[0], swaps));
    case NodeKind::Merge: {
      auto x = swapped_raw(t, n.child[0], swaps);
      auto y = swapped_raw(t, n.child[1], swaps);
      return (swaps >> v & 1u) ? RawTree::merge(y, x) : RawTree::merge(x, y);
    }
  }
  throw Error("unreachable");
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

void push_orders(const RawTree& t, std::vector<int>& cur, std::vector<char>& done,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == t.size() - 1) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v < t.size(); ++v) {
    if (done[v]) continue;
    bool ready = true;
    for (int c : t.node(v).child) {
      if (c >= 0 && !done[c]) ready = false;
    }
    if (!ready) continue;
    done[v] = 1;
    cur.push_back(v);
    push_orders(t, cur, done, out);
    cur.pop_back();
    done[v] = 0;
  }
}

Matching sorted_word(Matching w) {
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

Report check_pure_bijection(int max_total, std::uint64_t seed) {
  Report report;
  report.check = "pure";
  report.anchor = "free elements are output permutations times pure trees";
  report.params = {{"max_total", max_total}, {"max_inputs", 4}, {"seed", seed}};
  Timer timer(report);

  for (int r = 1; r <= 4; ++r) {
    for (const auto& colours : colour_tuples(r, max_total)) {
      const int n = std::accumulate(colours.begin(), colours.end(), 0);
      for (int s = 0; 2 * s <= n; ++s) {
        const TreeType type{colours, n - 2 * s};
        const Bigrade bg{s, r - 1};
        const auto trees = enumerate_pure(type, bg);
        const boost::multiprecision::cpp_int lhs =
            boost::multiprecision::cpp_int(factorial(type.output)) * trees.size();
        const auto rhs = count_free(type, bg);
        const bool ok = lhs == rhs;
        report.pass = report.pass && ok;
        if (!ok || r <= 2) report.details.push_back({type.to_string(), bigrade_string(bg), lhs.str(), rhs.str()});
      }
    }
  }

  // Every admissible push order on small decorated trees, including
  // branch orders that break the least-leaf rule.
  std::mt19937_64 rng(seed);
  std::uint64_t trees_tested = 0;
  std::uint64_t agreeing = 0;
  const int max_small = std::min(max_total, 6);
  for (int r = 1; r <= 3; ++r) {
    for (const auto& colours : colour_tuples(r, max_small)) {
      const int n = std::accumulate(colours.begin(), colours.end(), 0);
      for (int s = 0; 2 * s <= n && r + s + (r - 1) <= 5; ++s) {
        for (const auto& pure : enumerate_pure(TreeType{colours, n - 2 * s}, {s, r - 1})) {
          for (unsigned swaps = 0; swaps < (1u << pure.size()); ++swaps) {
            bool relevant = true;
            for (int v = 0; v < pure.size(); ++v) {
              if ((swaps >> v & 1u) && pure.node(v).kind != NodeKind::Merge) relevant = false;
            }
            if (!relevant) continue;
            const auto shape = swapped_raw(pure, 0, swaps);
            for (int trial = 0; trial < 4; ++trial) {
              auto decos = shape.decorations();
              for (auto& d : decos) d = random_permutation(rng, d.degree());
              const auto raw = RawTree::from_nodes(shape.nodes(), decos);
              std::vector<std::vector<int>> orders;
              std::vector<int> cur;
              std::vector<char> done(raw.size(), 0);
              push_orders(raw, cur, done, orders);
              const auto first = purify_signed(raw, orders.front());
              bool ok = true;
              for (const auto& order : orders) {
                const auto other = purify_signed(raw, order);
                ok = ok && other.sign == first.sign && other.element == first.element;
              }
              // the purified element routes every leg exactly as the raw tree
              const auto a = trace_legs(raw);
              const auto b = trace_legs(first.element);
              ok = ok && a.out == b.out && sorted_word(a.word) == sorted_word(b.word) &&
                   word_sign(a.word) == first.sign * word_sign(b.word);
              // a left decoration at the root only changes sigma
              const auto tau = random_permutation(rng, raw.output_color());
              const auto moved = purify_signed(RawTree::decorated(tau, raw));
              ok = ok && moved.sign == first.sign && moved.element.tree() == first.element.tree() &&
                   moved.element.sigma() == tau * first.element.sigma();
              ++trees_tested;
              agreeing += ok;
            }
          }
        }
      }
    }
  }
  record(report, TreeType{{}, 0}, {0, 0}, nlohmann::ordered_json{{"order_independent", agreeing}},
         nlohmann::ordered_json{{"order_independent", trees_tested}});
  report.details.back().type = "decorated trees with at most 5 vertices";
  report.details.back().bigrade = "all";
  return report;
}

// ---------------------------------------------------------------- class counts

Report check_class_counts(int max_n, int max_s, int max_merger_total, std::size_t limit) {
  Report report;
  report.check = "classes";
  report.anchor = "class counts of self-gluing-only and merger-only components";
  report.params = {{"max_n", max_n}, {"max_s", max_s}, {"max_merger_total", max_merger_total}, {"max_inputs", 5}};
  Timer timer(report);
  for (int n = 0; n <= max_n; ++n) {
    for (int s = 0; s <= max_s && 2 * s <= n; ++s) {
      const TreeType type{{n}, n - 2 * s};
      const auto cp = closure(type, {s, 0}, Mode::Even, limit);
      std::uint64_t expected = factorial(n);
      for (int k = 1; k <= s; ++k) expected /= 2 * static_cast<std::uint64_t>(k);
      record(report, type, {s, 0}, cp.class_count(), expected);
    }
  }
  for (int r = 2; r <= 5; ++r) {
    for (const auto& colours : colour_tuples(r, max_merger_total)) {
      const int n = std::accumulate(colours.begin(), colours.end(), 0);
      const TreeType type{colours, n};
      const auto cp = closure(type, {0, r - 1}, Mode::Even, limit);
      record(report, type, {0, r - 1}, cp.class_count(), factorial(n));
    }
  }
  return report;
}

// ---------------------------------------------------------------- shadows

Report check_shadows(int max_total, Mutation mutation) {
  Report report;
  report.check = "shadows";
  report.anchor = "shadow maps are unchanged by single edge rewrites";
  report.params = {{"max_color", max_total}};
  Timer timer(report);
  if (max_total < 4) throw ValidationError("bound must be at least 4");
  for (const Bigrade bg : {Bigrade{2, 1}, Bigrade{1, 2}}) {
    const int r = bg.m + 1;
    for (const auto& colours : colour_tuples(r, max_total)) {
      const int n = std::accumulate(colours.begin(), colours.end(), 0);
      if (n - 2 * bg.s < 0) continue;
      const TreeType type{colours, n - 2 * bg.s};
      std::uint64_t tested = 0;
      std::uint64_t held = 0;
      for (const auto& t : enumerate_pure(type, bg)) {
        const Element e(Permutation::identity(type.output), t);
        const auto raw = RawTree::from_pure(t);
        for (int edge : t.internal_edges()) {
          const auto moved = planar_rewrite(e, edge);
          if (!moved) continue;
          ++tested;
          try {
            bool same = false;
            if (bg.s == 2) {
              same = shadow21(e.sigma(), raw, mutation) == shadow21(moved->sigma, moved->tree, mutation);
            } else {
              same = shadow12(e.sigma(), raw, mutation) == shadow12(moved->sigma, moved->tree, mutation);
            }
            held += same;
          } catch (const std::invalid_argument&) {
            // a mutated shift can leave the index range
          }
        }
      }
      if (tested) record(report, type, bg, held, tested);
    }
  }
  return report;
}

// ---------------------------------------------------------------- diamond / odd

namespace {

std::vector<std::pair<TreeType, Bigrade>> components(int max_total, const std::vector<Bigrade>& bigrades) {
  std::vector<std::pair<TreeType, Bigrade>> out;
  for (const auto& bg : bigrades) {
    for (const auto& colours : colour_tuples(bg.m + 1, max_total)) {
      const int n = std::accumulate(colours.begin(), colours.end(), 0);
      if (n - 2 * bg.s < 0) continue;
      out.push_back({TreeType{colours, n - 2 * bg.s}, bg});
    }
  }
  return out;
}

std::vector<Bigrade> bigrades_up_to(int max_weight) {
  std::vector<Bigrade> out;
  for (int w = 0; w <= max_weight; ++w)
    for (int m = 0; m <= w; ++m) out.push_back({w - m, m});
  return out;
}

}  // namespace

Report check_diamond(int max_total, std::size_t limit) {
  Report report;
  report.check = "diamond";
  report.anchor = "weight-3 classes match matching normal forms";
  report.params = {{"max_color", max_total}};
  Timer timer(report);
  if (max_total < 4) throw ValidationError("bound must be at least 4");
  for (const auto& [type, bg] : components(max_total, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})) {
    const auto cp = closure(type, bg, Mode::Even, limit);
    const auto nfs = enumerate_normal_forms(type, bg.s, Mode::Even);
    record(report, type, bg, cp.class_count(), nfs.size());
  }
  return report;
}

Report check_odd(int max_total, std::size_t limit) {
  Report report;
  report.check = "odd";
  report.anchor = "odd self-gluings: signed classes are consistent and as many as even ones";
  report.params = {{"max_color", max_total}, {"max_weight", 3}};
  Timer timer(report);
  for (const auto& [type, bg] : components(max_total, bigrades_up_to(3))) {
    const auto even = closure(type, bg, Mode::Even, limit);
    const auto odd = closure(type, bg, Mode::Odd, limit);
    record(report, type, bg, nlohmann::ordered_json{{"classes", odd.class_count()}, {"consistent", odd.consistent()}},
           nlohmann::ordered_json{{"classes", even.class_count()}, {"consistent", true}});
  }
  return report;
}

// ---------------------------------------------------------------- ranks

Report check_relation_ranks(int max_xixi, int max_ximerge, int max_mergemerge, std::size_t limit) {
  Report report;
  report.check = "ranks";
  report.anchor = "ranks of the quadratic relation spans and their explicit bases";
  report.params = {{"max_xixi", max_xixi}, {"max_ximerge", max_ximerge}, {"max_mergemerge", max_mergemerge}};
  Timer timer(report);
  auto run = [&](RelationFamily family, const std::vector<int>& p, const std::string& type, const Bigrade& bg) {
    const auto span = relation_span(family, p, limit);
    const auto basis = basis_vectors(family, p);
    RationalMatrix independent;
    std::size_t inside = 0;
    for (const auto& v : basis) {
      const auto row = span.to_row(v);
      inside += span.matrix.in_span(row);
      independent.add_row(row);
    }
    const auto expected = expected_relation_rank(family, p);
    nlohmann::ordered_json lhs = {{"rank", span.rank}, {"basis_in_span", inside}, {"basis_rank", independent.rank()}};
    nlohmann::ordered_json rhs = {{"rank", expected}, {"basis_in_span", basis.size()}, {"basis_rank", expected}};
    const bool ok = lhs == rhs;
    report.pass = report.pass && ok;
    report.details.push_back({type, bigrade_string(bg), lhs, rhs});
  };
  for (int n = 4; n <= max_xixi; ++n) run(RelationFamily::XiXi, {n}, TreeType{{n}, n - 4}.to_string(), {2, 0});
  for (const auto& c : colour_tuples(2, max_ximerge)) {
    if (c[0] + c[1] < 2) continue;
    run(RelationFamily::XiMerge, c, TreeType{c, c[0] + c[1] - 2}.to_string(), {1, 1});
  }
  for (const auto& c : colour_tuples(3, max_mergemerge)) {
    run(RelationFamily::MergeMerge, c, TreeType{c, c[0] + c[1] + c[2]}.to_string(), {0, 2});
  }
  return report;
}

// ---------------------------------------------------------------- normalizer

Report check_normalizer(int max_total, int max_weight, std::size_t limit) {
  Report report;
  report.check = "normalizer";
  report.anchor = "normal forms are in bijection with classes";
  report.params = {{"max_color", max_total}, {"max_weight", max_weight}};
  Timer timer(report);
  std::mt19937_64 rng(7);
  for (const auto& [type, bg] : components(max_total, bigrades_up_to(max_weight))) {
    for (Mode mode : {Mode::Even, Mode::Odd}) {
      const auto cp = closure(type, bg, mode, limit);
      const auto id = Permutation::identity(type.output);
      std::uint64_t edges = 0;
      std::uint64_t sound = 0;
      std::uint64_t equivariant = 0;
      std::set<Matching> matchings;
      for (const auto& t : cp.trees) {
        const Element e(id, t);
        const auto nf = normalize(e, mode);
        matchings.insert(nf.matching);
        const auto sigma = random_permutation(rng, type.output);
        equivariant += normalize(Element(sigma, t), mode) == act_left(nf, sigma);
        for (int edge : t.internal_edges()) {
          const auto r = local_rewrite(e, edge);
          if (!r) continue;
          ++edges;
          sound += normalize(SignedElement{r->sign, r->element}, mode) == nf;
        }
      }
      const auto nfs = enumerate_normal_forms(type, bg.s, mode);
      std::uint64_t round_trips = 0;
      const std::size_t stride = std::max<std::size_t>(1, nfs.size() / 2000);
      std::uint64_t sampled = 0;
      for (std::size_t k = 0; k < nfs.size(); k += stride) {
        ++sampled;
        auto nf = nfs[k];
        if (mode == Mode::Odd && (k / stride) % 2) nf.sign = -1;
        round_trips += normalize(denote(nf), mode) == nf;
      }
      const std::uint64_t image = matchings.size() * factorial(type.output);
      nlohmann::ordered_json lhs = {{"classes", cp.class_count()},
                                    {"image", image},
                                    {"consistent", cp.consistent()},
                                    {"sound_edges", sound},
                                    {"equivariant_trees", equivariant},
                                    {"round_trips", round_trips}};
      nlohmann::ordered_json rhs = {{"classes", nfs.size()},
                                    {"image", nfs.size()},
                                    {"consistent", true},
                                    {"sound_edges", edges},
                                    {"equivariant_trees", cp.trees.size()},
                                    {"round_trips", sampled}};
      const bool ok = lhs == rhs;
      report.pass = report.pass && ok;
      report.details.push_back({type.to_string(), bigrade_string(bg) + (mode == Mode::Odd ? " odd" : " even"), lhs, rhs});
    }
  }
  return report;
}

// ---------------------------------------------------------------- composition

namespace {

NormalForm build_normal_form(std::mt19937_64& rng, Mode mode, std::vector<int> inputs, int s) {
  NormalForm nf;
  nf.mode = mode;
  nf.inputs = std::move(inputs);
  const int n = nf.total_color();
  std::vector<int> legs(n);
  std::iota(legs.begin(), legs.end(), 1);
  std::shuffle(legs.begin(), legs.end(), rng);
  for (int k = 0; k < s; ++k) {
    nf.matching.emplace_back(std::min(legs[2 * k], legs[2 * k + 1]), std::max(legs[2 * k], legs[2 * k + 1]));
  }
  std::sort(nf.matching.begin(), nf.matching.end());
  nf.output = n - 2 * s;
  nf.sigma = random_permutation(rng, nf.output);
  nf.sign = mode == Mode::Odd && std::uniform_int_distribution<int>(0, 1)(rng) ? -1 : 1;
  return nf;
}

// A random form of the given output colour with up to two gluings.
NormalForm random_with_output(std::mt19937_64& rng, Mode mode, int output, int max_inputs) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int s = uniform(0, 2);
  std::vector<int> inputs(uniform(1, max_inputs), 0);
  for (int k = 0; k < output + 2 * s; ++k) ++inputs[uniform(0, static_cast<int>(inputs.size()) - 1)];
  return build_normal_form(rng, mode, std::move(inputs), s);
}

}  // namespace

NormalForm random_normal_form(std::mt19937_64& rng, Mode mode, int max_inputs, int max_color) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<int> inputs(uniform(1, max_inputs));
  int n = 0;
  for (int& c : inputs) n += c = uniform(0, max_color);
  return build_normal_form(rng, mode, std::move(inputs), uniform(0, n / 2));
}

namespace {

RawTree raw_of(const NormalForm& nf) { return to_raw(denote(nf).element); }

NormalForm with_sign(NormalForm nf, int sign) {
  if (nf.mode == Mode::Odd) nf.sign *= sign;
  return nf;
}

int bigrade_weight(const NormalForm& nf) {
  return static_cast<int>(nf.matching.size()) + static_cast<int>(nf.inputs.size()) - 1;
}

}  // namespace

Report check_composition(int samples, std::uint64_t seed) {
  Report report;
  report.check = "composition";
  report.anchor = "composition and actions agree with graft-then-normalize";
  report.params = {{"samples", samples}, {"seed", seed}};
  Timer timer(report);
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally;  // op -> (held, tested)
  for (int k = 0; k < samples; ++k) {
    const Mode mode = uniform(0, 1) ? Mode::Odd : Mode::Even;
    const auto nf = random_normal_form(rng, mode, 3, 3);
    const int sign = denote(nf).sign;
    switch (k % 5) {
      case 0:
      case 1: {
        const int i = uniform(1, static_cast<int>(nf.inputs.size()));
        const auto inner = random_with_output(rng, mode, nf.inputs[i - 1], 2);
        const auto got = compose_at(nf, i, inner);
        const auto want = with_sign(normalize(raw_of(nf).graft(i, raw_of(inner)), mode), sign * denote(inner).sign);
        const bool additive = bigrade_weight(got) == bigrade_weight(nf) + bigrade_weight(inner);
        auto& t = tally["compose"];
        ++t.second;
        t.first += got == want && additive;
        if (k % 5 == 1) {
          // associativity against a third form grafted into the inner one
          const int j = uniform(1, static_cast<int>(inner.inputs.size()));
          const auto third = random_with_output(rng, mode, inner.inputs[j - 1], 2);
          const auto left = compose_at(compose_at(nf, i, inner), i + j - 1, third);
          const auto right = compose_at(nf, i, compose_at(inner, j, third));
          auto& a = tally["associativity"];
          ++a.second;
          a.first += left == right;
        }
        break;
      }
      case 2: {
        const auto sigma = random_permutation(rng, nf.output);
        const auto want = with_sign(normalize(RawTree::decorated(sigma, raw_of(nf)), mode), sign);
        auto& t = tally["left"];
        ++t.second;
        t.first += act_left(nf, sigma) == want;
        break;
      }
      case 3: {
        const int i = uniform(1, static_cast<int>(nf.inputs.size()));
        const auto tau = random_permutation(rng, nf.inputs[i - 1]);
        auto raw = raw_of(nf);
        auto decos = raw.decorations();
        for (int v = 0; v < raw.size(); ++v) {
          if (raw.node(v).kind == NodeKind::Leaf && raw.node(v).a == i) decos[v] = decos[v] * tau;
        }
        const auto want = with_sign(normalize(RawTree::from_nodes(raw.nodes(), decos), mode), sign);
        auto& t = tally["right"];
        ++t.second;
        t.first += act_right(nf, i, tau) == want;
        break;
      }
      case 4: {
        const auto pi = random_permutation(rng, static_cast<int>(nf.inputs.size()));
        const auto want = with_sign(normalize(raw_of(nf).relabel_inputs(pi), mode), sign);
        auto& t = tally["relabel"];
        ++t.second;
        t.first += act_relabel(nf, pi) == want;
        break;
      }
    }
  }
  for (const auto& [op, counts] : tally) {
    record(report, TreeType{{}, 0}, {0, 0}, counts.first, counts.second);
    report.details.back().type = op;
    report.details.back().bigrade = "random";
  }
  return report;
}

}  // namespace smoc

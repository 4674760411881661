#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "smoc/errors.hpp"
#include "smoc/normalform.hpp"
#include "smoc/oracle.hpp"
#include "smoc/verify.hpp"

using namespace smoc;

namespace {

PureTree leaf(int i, int c) { return PureTree::leaf(i, c); }
PureTree xi(int i, int j, const PureTree& t) { return PureTree::xi(i, j, t); }
PureTree mer(const PureTree& a, const PureTree& b) { return PureTree::merge(a, b); }
Element id_el(const PureTree& t) { return Element(Permutation::identity(t.output_color()), t); }

NormalForm make(Mode mode, std::vector<int> inputs, int output, Permutation sigma, Matching matching, int sign = 1) {
  NormalForm nf;
  nf.mode = mode;
  nf.inputs = std::move(inputs);
  nf.output = output;
  nf.sign = sign;
  nf.sigma = std::move(sigma);
  nf.matching = std::move(matching);
  return nf;
}

// The raw tree of a normal form with its sign, so that actions can be
// applied to the tree and renormalized.
std::pair<int, RawTree> raw_of(const NormalForm& nf) {
  const auto d = denote(nf);
  return {d.sign, to_raw(d.element)};
}

NormalForm normalize_signed(int sign, const RawTree& t, Mode mode) {
  auto nf = normalize(t, mode);
  nf.sign *= sign;
  return nf;
}

RawTree with_leaf_decoration(const RawTree& t, int input, const Permutation& tau) {
  auto nodes = t.nodes();
  auto decos = t.decorations();
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].kind == NodeKind::Leaf && nodes[v].a == input) decos[v] = decos[v] * tau;
  }
  return RawTree::from_nodes(nodes, decos);
}

Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(make(Mode::Even, {4}, 0, Permutation::identity(0), {{1, 2}, {3, 4}}).validate());
  CHECK_THROWS_AS(make(Mode::Even, {4}, 0, Permutation::identity(0), {{3, 4}, {1, 2}}).validate(), ValidationError);
  CHECK_THROWS_AS(make(Mode::Even, {4}, 0, Permutation::identity(0), {{1, 2}, {2, 4}}).validate(), ValidationError);
  CHECK_THROWS_AS(make(Mode::Even, {4}, 2, Permutation::identity(2), {{1, 5}}).validate(), ValidationError);
  CHECK_THROWS_AS(make(Mode::Even, {4}, 2, Permutation::identity(2), {{1, 2}}, -1).validate(), ValidationError);
  CHECK_THROWS_AS(make(Mode::Even, {4}, 2, Permutation::identity(4), {{1, 2}}).validate(), ValidationError);
  CHECK_NOTHROW(make(Mode::Odd, {4}, 2, Permutation::identity(2), {{1, 2}}, -1).validate());
}

TEST_CASE("word sign") {
  CHECK(word_sign({}) == 1);
  CHECK(word_sign({{1, 2}, {3, 4}}) == 1);
  CHECK(word_sign({{3, 4}, {1, 2}}) == -1);
  CHECK(word_sign({{5, 6}, {3, 4}, {1, 2}}) == -1);
  CHECK(word_sign({{3, 4}, {5, 6}, {1, 2}}) == 1);
}

TEST_CASE("denote") {
  const auto bare = make(Mode::Even, {3}, 3, Permutation::identity(3), {});
  CHECK(denote(bare).element == id_el(leaf(1, 3)));

  const auto two = make(Mode::Even, {4}, 0, Permutation::identity(0), {{1, 2}, {3, 4}});
  const auto d = denote(two);
  CHECK(d.element == id_el(xi(1, 2, xi(3, 4, leaf(1, 4)))));
  CHECK(normalize(d.element, Mode::Even) == two);

  const Permutation s({4, 3, 2, 1});
  CHECK(denote(make(Mode::Even, {2, 2}, 4, s, {})).element == Element(s, mer(leaf(1, 2), leaf(2, 2))));
}

TEST_CASE("normalize examples") {
  const auto a = id_el(xi(1, 2, xi(1, 2, leaf(1, 4))));
  const auto b = id_el(xi(1, 2, xi(3, 4, leaf(1, 4))));
  const auto na = normalize(a, Mode::Even);
  CHECK(na.matching == Matching{{1, 2}, {3, 4}});
  CHECK(na.sigma.is_identity());
  CHECK(na.sign == 1);
  CHECK(normalize(b, Mode::Even) == na);

  const auto oa = normalize(a, Mode::Odd);
  const auto ob = normalize(b, Mode::Odd);
  CHECK(oa.matching == ob.matching);
  CHECK(oa.sign == -ob.sign);

  // the output records where each survivor went
  const auto c = Element(Permutation({2, 1}), xi(2, 3, leaf(1, 4)));
  const auto nc = normalize(c, Mode::Even);
  CHECK(nc.matching == Matching{{2, 3}});
  CHECK(nc.sigma == Permutation({2, 1}));
  CHECK(nc.inputs == std::vector<int>{4});
  CHECK(nc.output == 2);
}

TEST_CASE("normal form counts for self-gluing-only types") {
  for (int n = 0; n <= 8; ++n)
    for (int s = 0; s <= 3 && 2 * s <= n; ++s) {
      // n! / (2^s s!)
      std::uint64_t expected = factorial(n);
      for (int k = 0; k < s; ++k) expected /= 2;
      expected /= factorial(s);
      const auto nfs = enumerate_normal_forms(TreeType{{n}, n - 2 * s}, s, Mode::Even);
      REQUIRE(nfs.size() == expected);
      std::set<NormalForm> distinct(nfs.begin(), nfs.end());
      REQUIRE(distinct.size() == nfs.size());
    }
}

TEST_CASE("round trip through denote, both modes") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Mode mode = trial % 2 ? Mode::Odd : Mode::Even;
    const auto nf = random_normal_form(rng, mode, 3, 4);
    REQUIRE_NOTHROW(nf.validate());
    const auto d = denote(nf);
    REQUIRE(normalize(d, mode) == nf);
    if (mode == Mode::Even) REQUIRE(nf.sign == 1);
  }
}

TEST_CASE("compose_at") {
  const auto m22 = make(Mode::Even, {2, 2}, 4, Permutation::identity(4), {});
  const auto m11 = make(Mode::Even, {1, 1}, 2, Permutation::identity(2), {});
  const auto c = compose_at(m22, 1, m11);
  CHECK(c == make(Mode::Even, {1, 1, 2}, 4, Permutation::identity(4), {}));

  // units on both sides
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Mode mode = trial % 2 ? Mode::Odd : Mode::Even;
    const auto nf = random_normal_form(rng, mode, 3, 4);
    const auto unit_out = make(mode, {nf.output}, nf.output, Permutation::identity(nf.output), {});
    REQUIRE(compose_at(unit_out, 1, nf) == nf);
    for (std::size_t i = 0; i < nf.inputs.size(); ++i) {
      const int v = nf.inputs[i];
      const auto unit_in = make(mode, {v}, v, Permutation::identity(v), {});
      REQUIRE(compose_at(nf, static_cast<int>(i) + 1, unit_in) == nf);
    }
  }
  CHECK_THROWS_AS(compose_at(m22, 1, make(Mode::Even, {3}, 3, Permutation::identity(3), {})), ColorError);
}

TEST_CASE("compose_at against graft and normalize") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const Mode mode = trial % 2 ? Mode::Odd : Mode::Even;
    const auto outer = random_normal_form(rng, mode, 3, 4);
    const int i = 1 + static_cast<int>(rng() % outer.inputs.size());
    const auto inner = random_normal_form(rng, mode, 2, 3);
    if (inner.output != outer.inputs[i - 1]) continue;
    ++checked;
    const auto [so, ro] = raw_of(outer);
    const auto [si, ri] = raw_of(inner);
    const auto expected = normalize_signed(so * si, ro.graft(i, ri), mode);
    REQUIRE(compose_at(outer, i, inner) == expected);
    // bigrades add
    const auto bo = infer_type(denote(outer).element.tree()).bigrade;
    const auto bi = infer_type(denote(inner).element.tree()).bigrade;
    const auto bc = infer_type(denote(expected).element.tree()).bigrade;
    REQUIRE(bc == Bigrade{bo.s + bi.s, bo.m + bi.m});
  }
  CHECK(checked >= 100);
}

TEST_CASE("actions against the tree oracle") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const Mode mode = trial % 2 ? Mode::Odd : Mode::Even;
    const auto nf = random_normal_form(rng, mode, 3, 4);
    const auto [sign, raw] = raw_of(nf);

    CHECK(act_left(nf, Permutation::identity(nf.output)) == nf);
    const auto sigma = random_perm(rng, nf.output);
    auto left = nf;
    left.sigma = sigma * nf.sigma;
    REQUIRE(act_left(nf, sigma) == left);
    REQUIRE(act_left(nf, sigma) == normalize_signed(sign, RawTree::decorated(sigma, raw), mode));

    const int i = 1 + static_cast<int>(rng() % nf.inputs.size());
    const auto tau = random_perm(rng, nf.inputs[i - 1]);
    REQUIRE(act_right(nf, i, tau) == normalize_signed(sign, with_leaf_decoration(raw, i, tau), mode));

    const auto pi = random_perm(rng, static_cast<int>(nf.inputs.size()));
    REQUIRE(act_relabel(nf, pi) == normalize_signed(sign, raw.relabel_inputs(pi), mode));
  }
  const auto m22 = make(Mode::Even, {2, 2}, 4, Permutation::identity(4), {});
  CHECK_THROWS(act_left(m22, Permutation::identity(3)));
  CHECK_THROWS(act_right(m22, 1, Permutation::identity(3)));
}

TEST_CASE("right action example and relabelling of a merger") {
  // m(x1:2, xi[1,2](x2:4)) with (1 2) on input 2
  const auto nf = normalize(id_el(mer(leaf(1, 2), xi(1, 2, leaf(2, 4)))), Mode::Even);
  const auto acted = act_right(nf, 2, Permutation({2, 1, 3, 4}));
  CHECK(acted == nf);  // swapping the two glued legs changes nothing
  const auto acted2 = act_right(nf, 2, Permutation({1, 3, 2, 4}));
  CHECK(acted2.matching == Matching{{3, 5}});

  const auto m = make(Mode::Even, {2, 3}, 5, Permutation::identity(5), {});
  const auto r = act_relabel(m, Permutation({2, 1}));
  CHECK(r.inputs == std::vector<int>{3, 2});
  CHECK(r.sigma == shuffle(3, 2));
}

TEST_CASE("json") {
  const auto nf = make(Mode::Odd, {4}, 2, Permutation({2, 1}), {{1, 3}}, -1);
  CHECK(to_json(nf).dump() ==
        R"({"mode":"odd","inputs":[4],"output":2,"sign":-1,"sigma":[2,1],"matching":[[1,3]]})");
}

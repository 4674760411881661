#include "smoc/normalform.hpp"

#include <algorithm>
#include <numeric>

#include "smoc/errors.hpp"

namespace smoc {

namespace {

std::vector<int> offsets(const std::vector<int>& inputs) {
  std::vector<int> off(inputs.size() + 1, 0);
  for (std::size_t k = 0; k < inputs.size(); ++k) off[k + 1] = off[k] + inputs[k];
  return off;
}

// Builds the normal form of the term whose output position p carries leg
// out[p-1] and which glues the pairs of word in that order.
NormalForm from_legs(Mode mode, std::vector<int> inputs, const std::vector<int>& out, Matching word, int sign) {
  NormalForm nf;
  nf.mode = mode;
  nf.inputs = std::move(inputs);
  nf.output = static_cast<int>(out.size());
  for (auto& [a, b] : word) {
    if (a > b) std::swap(a, b);
  }
  nf.sign = mode == Mode::Odd ? sign * word_sign(word) : 1;
  nf.matching = std::move(word);
  std::sort(nf.matching.begin(), nf.matching.end());

  std::vector<int> survivors(out);
  std::sort(survivors.begin(), survivors.end());
  std::vector<int> img(out.size());
  for (std::size_t p = 0; p < out.size(); ++p) {
    const auto r = std::lower_bound(survivors.begin(), survivors.end(), out[p]) - survivors.begin();
    img[r] = static_cast<int>(p) + 1;
  }
  nf.sigma = Permutation(std::move(img));
  return nf;
}

std::vector<int> out_legs(const NormalForm& nf) {
  std::vector<char> glued(nf.total_color() + 1, 0);
  for (auto [a, b] : nf.matching) glued[a] = glued[b] = 1;
  std::vector<int> out(nf.output);
  int r = 0;
  for (int leg = 1; leg <= nf.total_color(); ++leg) {
    if (!glued[leg]) out[nf.sigma(++r) - 1] = leg;
  }
  return out;
}

NormalForm rename(const NormalForm& nf, std::vector<int> inputs, const std::vector<int>& leg_map) {
  auto out = out_legs(nf);
  for (int& leg : out) leg = leg_map[leg];
  Matching word = nf.matching;
  for (auto& [a, b] : word) {
    a = leg_map[a];
    b = leg_map[b];
  }
  return from_legs(nf.mode, std::move(inputs), out, std::move(word), nf.sign);
}

}  // namespace

int NormalForm::total_color() const { return std::accumulate(inputs.begin(), inputs.end(), 0); }

void NormalForm::validate() const {
  if (inputs.empty()) throw ValidationError("normal form needs at least one input");
  for (int v : inputs) {
    if (v < 0) throw ValidationError("input colours must be non-negative");
  }
  const int n = total_color();
  if (output != n - 2 * static_cast<int>(matching.size())) {
    throw ValidationError("output colour must equal total input colour minus twice the matched pairs");
  }
  if (sigma.degree() != output) throw ValidationError("sigma must have degree equal to the output colour");
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  if (mode == Mode::Even && sign != 1) throw ValidationError("even normal forms carry sign +1");
  std::vector<char> used(n + 1, 0);
  for (std::size_t k = 0; k < matching.size(); ++k) {
    auto [a, b] = matching[k];
    if (!(1 <= a && a < b && b <= n)) throw ValidationError("matched pair out of range");
    if (used[a] || used[b]) throw ValidationError("matched pairs must be disjoint");
    used[a] = used[b] = 1;
    if (k && !(matching[k - 1] < matching[k])) throw ValidationError("matching must be lex-sorted");
  }
}

int word_sign(const Matching& word) {
  int inversions = 0;
  for (std::size_t x = 0; x < word.size(); ++x)
    for (std::size_t y = x + 1; y < word.size(); ++y)
      if (word[y] < word[x]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

SignedElement denote(const NormalForm& nf) {
  nf.validate();
  auto tree = PureTree::leaf(1, nf.inputs[0]);
  for (std::size_t k = 1; k < nf.inputs.size(); ++k) {
    tree = PureTree::merge(tree, PureTree::leaf(static_cast<int>(k) + 1, nf.inputs[k]));
  }
  std::vector<int> legs(nf.total_color());
  std::iota(legs.begin(), legs.end(), 1);
  for (auto it = nf.matching.rbegin(); it != nf.matching.rend(); ++it) {
    const auto pa = std::find(legs.begin(), legs.end(), it->first);
    const auto pb = std::find(legs.begin(), legs.end(), it->second);
    const int i = static_cast<int>(pa - legs.begin()) + 1;
    const int j = static_cast<int>(pb - legs.begin()) + 1;
    tree = PureTree::xi(i, j, tree);
    legs.erase(pb);
    legs.erase(pa);
  }
  return SignedElement{nf.sign, Element(nf.sigma, std::move(tree))};
}

NormalForm normalize(const Element& e, Mode mode) { return normalize(SignedElement{1, e}, mode); }

NormalForm normalize(const SignedElement& e, Mode mode) {
  auto trace = trace_legs(e.element);
  auto info = infer_type(e.element.tree());
  return from_legs(mode, std::move(info.type.inputs), trace.out, std::move(trace.word), e.sign);
}

NormalForm normalize(const RawTree& t, Mode mode) { return normalize(purify_signed(t), mode); }

NormalForm compose_at(const NormalForm& outer, int i, const NormalForm& inner) {
  if (outer.mode != inner.mode) throw ValidationError("cannot compose normal forms of different modes");
  const int r = static_cast<int>(outer.inputs.size());
  if (i < 1 || i > r) throw ColorError(0, "no input " + std::to_string(i));
  if (outer.inputs[i - 1] != inner.output) {
    throw ColorError(0, "input " + std::to_string(i) + " has colour " + std::to_string(outer.inputs[i - 1]) +
                            " but the inner output colour is " + std::to_string(inner.output));
  }
  const auto off = offsets(outer.inputs);
  const int width = inner.total_color();
  const int shift = width - outer.inputs[i - 1];
  const auto inner_out = out_legs(inner);

  std::vector<int> inputs(outer.inputs.begin(), outer.inputs.begin() + (i - 1));
  inputs.insert(inputs.end(), inner.inputs.begin(), inner.inputs.end());
  inputs.insert(inputs.end(), outer.inputs.begin() + i, outer.inputs.end());

  std::vector<int> leg_map(outer.total_color() + 1, 0);
  for (int leg = 1; leg <= outer.total_color(); ++leg) {
    if (leg <= off[i - 1]) {
      leg_map[leg] = leg;
    } else if (leg <= off[i]) {
      leg_map[leg] = off[i - 1] + inner_out[leg - off[i - 1] - 1];
    } else {
      leg_map[leg] = leg + shift;
    }
  }
  auto out = out_legs(outer);
  for (int& leg : out) leg = leg_map[leg];
  Matching word = outer.matching;
  for (auto& [a, b] : word) {
    a = leg_map[a];
    b = leg_map[b];
  }
  for (auto [a, b] : inner.matching) word.emplace_back(a + off[i - 1], b + off[i - 1]);
  return from_legs(outer.mode, std::move(inputs), out, std::move(word), outer.sign * inner.sign);
}

NormalForm act_left(const NormalForm& nf, const Permutation& sigma) {
  if (sigma.degree() != nf.output) throw ValidationError("left action of the wrong degree");
  NormalForm out = nf;
  out.sigma = sigma * nf.sigma;
  return out;
}

NormalForm act_right(const NormalForm& nf, int i, const Permutation& tau) {
  const int r = static_cast<int>(nf.inputs.size());
  if (i < 1 || i > r) throw ValidationError("no input " + std::to_string(i));
  if (tau.degree() != nf.inputs[i - 1]) throw ValidationError("right action of the wrong degree");
  const auto off = offsets(nf.inputs);
  const auto inv = tau.inverse();
  std::vector<int> leg_map(nf.total_color() + 1);
  std::iota(leg_map.begin(), leg_map.end(), 0);
  for (int q = 1; q <= tau.degree(); ++q) leg_map[off[i - 1] + q] = off[i - 1] + inv(q);
  return rename(nf, nf.inputs, leg_map);
}

NormalForm act_relabel(const NormalForm& nf, const Permutation& pi) {
  const int r = static_cast<int>(nf.inputs.size());
  if (pi.degree() != r) throw ValidationError("relabelling of the wrong degree");
  std::vector<int> inputs(r);
  for (int k = 1; k <= r; ++k) inputs[pi(k) - 1] = nf.inputs[k - 1];
  const auto old_off = offsets(nf.inputs);
  const auto new_off = offsets(inputs);
  std::vector<int> leg_map(nf.total_color() + 1, 0);
  for (int k = 1; k <= r; ++k) {
    for (int q = 1; q <= nf.inputs[k - 1]; ++q) leg_map[old_off[k - 1] + q] = new_off[pi(k) - 1] + q;
  }
  return rename(nf, std::move(inputs), leg_map);
}

nlohmann::ordered_json to_json(const Permutation& p) { return nlohmann::ordered_json(p.images()); }

nlohmann::ordered_json to_json(const NormalForm& nf) {
  nlohmann::ordered_json j;
  j["mode"] = nf.mode == Mode::Even ? "even" : "odd";
  j["inputs"] = nf.inputs;
  j["output"] = nf.output;
  j["sign"] = nf.sign;
  j["sigma"] = to_json(nf.sigma);
  auto pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : nf.matching) pairs.push_back({a, b});
  j["matching"] = pairs;
  return j;
}

}  // namespace smoc

#pragma once

// Canonical representatives of classes: an output permutation, a set of
// glued leg pairs, and (in odd mode) a sign.

#include <utility>
#include <vector>

#include <json.hpp>

#include "smoc/trees.hpp"

namespace smoc {

using Matching = std::vector<std::pair<int, int>>;

struct NormalForm {
  Mode mode = Mode::Even;
  std::vector<int> inputs;
  int output = 0;
  int sign = 1;
  Permutation sigma;
  Matching matching;  // lex-sorted pairs (a,b) with a < b

  // Throws ValidationError if any invariant fails.
  void validate() const;
  int total_color() const;

  auto operator<=>(const NormalForm&) const = default;
};

// Parity of the permutation sorting a word of leg pairs into ascending order.
int word_sign(const Matching& word);

// The class of the element sigma applied to the pairs glued, in order, after
// a left comb of mergers over inputs 1..r. sign is the odd-mode coefficient.
SignedElement denote(const NormalForm& nf);

NormalForm normalize(const Element& e, Mode mode);
NormalForm normalize(const SignedElement& e, Mode mode);
// Purifies first; the purification sign is folded in.
NormalForm normalize(const RawTree& t, Mode mode);

// Partial composition outer o_i inner; inner's inputs take positions
// i..i+s-1. Throws ColorError on a colour mismatch.
NormalForm compose_at(const NormalForm& outer, int i, const NormalForm& inner);

// sigma applied on the output.
NormalForm act_left(const NormalForm& nf, const Permutation& sigma);
// tau applied on the legs of input i (a decoration on leaf i).
NormalForm act_right(const NormalForm& nf, int i, const Permutation& tau);
// Input i becomes input pi(i).
NormalForm act_relabel(const NormalForm& nf, const Permutation& pi);

nlohmann::ordered_json to_json(const NormalForm& nf);
nlohmann::ordered_json to_json(const Permutation& p);

}  // namespace smoc

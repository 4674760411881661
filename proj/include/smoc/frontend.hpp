#pragma once

// Surface syntax for decorated trees.
//
//   expr := "x" INT ":" INT
//         | "xi" "[" INT "," INT "]" "(" expr ")"
//         | "m" "(" expr "," expr ")"
//         | "p" "[" INT { INT } "]" "(" expr ")"
//
// Whitespace is ignored between tokens. Permutations are one-line and
// 1-based; p applies on the output of its argument.

#include <string>
#include <string_view>
#include <vector>

#include "smoc/normalform.hpp"
#include "smoc/trees.hpp"

namespace smoc {

struct Expr {
  enum class Kind { Leaf, Xi, Merge, Perm };

  Kind kind = Kind::Leaf;
  int index = 0;  // Leaf
  int color = 0;  // Leaf
  int i = 0;      // Xi
  int j = 0;      // Xi
  Permutation perm;
  std::vector<Expr> args;

  static Expr leaf(int index, int color);
  static Expr xi(int i, int j, Expr arg);
  static Expr merge(Expr first, Expr second);
  static Expr apply(Permutation p, Expr arg);

  bool operator==(const Expr&) const = default;
};

// Syntax only; throws ParseError with the byte offset of the problem.
Expr parse_syntax(std::string_view text);
// Throws ValidationError naming the violated rule.
void validate(const Expr& e);
// parse_syntax followed by validate.
Expr parse(std::string_view text);

std::string print(const Expr& e);

RawTree to_raw(const Expr& e);
Expr to_expr(const RawTree& t);
Expr to_expr(const Element& e);

}  // namespace smoc

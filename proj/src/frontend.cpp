#include "smoc/frontend.hpp"

#include <algorithm>
#include <cctype>

#include "smoc/errors.hpp"

namespace smoc {

Expr Expr::leaf(int index, int color) {
  Expr e;
  e.kind = Kind::Leaf;
  e.index = index;
  e.color = color;
  return e;
}

Expr Expr::xi(int i, int j, Expr arg) {
  Expr e;
  e.kind = Kind::Xi;
  e.i = i;
  e.j = j;
  e.args.push_back(std::move(arg));
  return e;
}

Expr Expr::merge(Expr first, Expr second) {
  Expr e;
  e.kind = Kind::Merge;
  e.args.push_back(std::move(first));
  e.args.push_back(std::move(second));
  return e;
}

Expr Expr::apply(Permutation p, Expr arg) {
  Expr e;
  e.kind = Kind::Perm;
  e.perm = std::move(p);
  e.args.push_back(std::move(arg));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_word(std::string_view w) {
    skip();
    return text_.substr(pos_, w.size()) == w;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Expr expr() {
    skip();
    if (pos_ >= text_.size()) fail("expected an expression");
    if (peek_word("xi")) {
      pos_ += 2;
      expect('[');
      const int i = integer();
      expect(',');
      const int j = integer();
      expect(']');
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::xi(i, j, std::move(arg));
    }
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      const int index = integer();
      expect(':');
      const int color = integer();
      return Expr::leaf(index, color);
    }
    if (c == 'm') {
      ++pos_;
      expect('(');
      Expr a = expr();
      expect(',');
      Expr b = expr();
      expect(')');
      return Expr::merge(std::move(a), std::move(b));
    }
    if (c == 'p') {
      ++pos_;
      expect('[');
      const std::size_t start = pos_;
      std::vector<int> images;
      skip();
      while (pos_ < text_.size() && text_[pos_] != ']') {
        images.push_back(integer());
        skip();
      }
      expect(']');
      Permutation p;
      try {
        p = Permutation(std::move(images));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("not a permutation in one-line notation");
      }
      expect('(');
      Expr arg = expr();
      expect(')');
      return Expr::apply(std::move(p), std::move(arg));
    }
    fail("expected 'x', 'xi', 'm' or 'p'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int check(const Expr& e, std::vector<int>& leaves) {
  switch (e.kind) {
    case Expr::Kind::Leaf:
      if (e.index < 1) throw ValidationError("leaf indices start at 1");
      leaves.push_back(e.index);
      return e.color;
    case Expr::Kind::Xi: {
      const int c = check(e.args.at(0), leaves);
      if (!(e.i < e.j)) {
        throw ValidationError("xi[" + std::to_string(e.i) + "," + std::to_string(e.j) + "] needs i < j");
      }
      if (e.i < 1 || e.j > c) {
        throw ValidationError("xi[" + std::to_string(e.i) + "," + std::to_string(e.j) +
                              "] needs indices within the colour " + std::to_string(c) + " of its argument");
      }
      return c - 2;
    }
    case Expr::Kind::Merge:
      return check(e.args.at(0), leaves) + check(e.args.at(1), leaves);
    case Expr::Kind::Perm: {
      const int c = check(e.args.at(0), leaves);
      if (e.perm.degree() != c) {
        throw ValidationError("permutation of degree " + std::to_string(e.perm.degree()) +
                              " applied to colour " + std::to_string(c));
      }
      return c;
    }
  }
  return 0;
}

}  // namespace

Expr parse_syntax(std::string_view text) { return Parser(text).run(); }

void validate(const Expr& e) {
  std::vector<int> leaves;
  check(e, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (leaves[k] != static_cast<int>(k) + 1) {
      throw ValidationError("leaf indices must be 1..r, each used exactly once");
    }
  }
}

Expr parse(std::string_view text) {
  Expr e = parse_syntax(text);
  validate(e);
  return e;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Leaf:
      return "x" + std::to_string(e.index) + ":" + std::to_string(e.color);
    case Expr::Kind::Xi:
      return "xi[" + std::to_string(e.i) + "," + std::to_string(e.j) + "](" + print(e.args[0]) + ")";
    case Expr::Kind::Merge:
      return "m(" + print(e.args[0]) + ", " + print(e.args[1]) + ")";
    case Expr::Kind::Perm: {
      std::string s = "p[";
      for (int k = 1; k <= e.perm.degree(); ++k) {
        if (k > 1) s += ' ';
        s += std::to_string(e.perm(k));
      }
      return s + "](" + print(e.args[0]) + ")";
    }
  }
  return {};
}

RawTree to_raw(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Leaf:
      return RawTree::leaf(e.index, e.color);
    case Expr::Kind::Xi:
      return RawTree::xi(e.i, e.j, to_raw(e.args[0]));
    case Expr::Kind::Merge:
      return RawTree::merge(to_raw(e.args[0]), to_raw(e.args[1]));
    case Expr::Kind::Perm:
      return RawTree::decorated(e.perm, to_raw(e.args[0]));
  }
  throw Error("unreachable");
}

namespace {

Expr expr_at(const RawTree& t, int v) {
  const auto& n = t.node(v);
  Expr e;
  switch (n.kind) {
    case NodeKind::Leaf:
      e = Expr::leaf(n.a, n.b);
      break;
    case NodeKind::Xi:
      e = Expr::xi(n.a, n.b, expr_at(t, n.child[0]));
      break;
    case NodeKind::Merge:
      e = Expr::merge(expr_at(t, n.child[0]), expr_at(t, n.child[1]));
      break;
  }
  const auto& d = t.decorations()[v];
  if (!d.is_identity()) e = Expr::apply(d, std::move(e));
  return e;
}

}  // namespace

Expr to_expr(const RawTree& t) { return expr_at(t, 0); }
Expr to_expr(const Element& e) { return to_expr(to_raw(e)); }

}  // namespace smoc

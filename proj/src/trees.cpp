#include "smoc/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "smoc/errors.hpp"

namespace smoc {

namespace {

struct MNode {
  NodeKind kind = NodeKind::Leaf;
  int a = 0;
  int b = 0;
  std::array<int, 2> child{-1, -1};
  Permutation deco;
};

struct Linear {
  std::vector<Node> nodes;
  std::vector<Permutation> decos;
  std::vector<int> new_id;  // old index -> pre-order index
};

// Lays the subtree at root out in pre-order and recomputes every derived
// field, checking colours on the way.
Linear linearize(const std::vector<MNode>& m, int root, bool with_decorations) {
  Linear out;
  out.new_id.assign(m.size(), -1);
  std::function<int(int, int)> visit = [&](int old, int parent) -> int {
    if (old < 0 || old >= static_cast<int>(m.size()) || out.new_id[old] != -1) {
      throw ColorError(static_cast<int>(out.nodes.size()), "malformed tree structure");
    }
    const int id = static_cast<int>(out.nodes.size());
    out.new_id[old] = id;
    out.nodes.emplace_back();
    out.decos.emplace_back();
    Node n;
    n.kind = m[old].kind;
    n.a = m[old].a;
    n.b = m[old].b;
    n.parent = parent;
    switch (n.kind) {
      case NodeKind::Leaf:
        if (n.a < 1) throw ColorError(id, "leaf index must be positive");
        if (n.b < 0) throw ColorError(id, "leaf colour must be non-negative");
        n.color = n.b;
        n.min_leaf = n.a;
        n.xi_count = 0;
        break;
      case NodeKind::Xi: {
        const int c = visit(m[old].child[0], id);
        const Node& ch = out.nodes[c];
        if (ch.color < 2) throw ColorError(id, "self-gluing on colour < 2");
        if (!(1 <= n.a && n.a < n.b && n.b <= ch.color)) {
          throw ColorError(id, "self-gluing indices must satisfy 1 <= i < j <= " +
                                   std::to_string(ch.color));
        }
        n.child = {c, -1};
        n.color = ch.color - 2;
        n.min_leaf = ch.min_leaf;
        n.xi_count = ch.xi_count + 1;
        n.a = m[old].a;
        n.b = m[old].b;
        break;
      }
      case NodeKind::Merge: {
        const int c0 = visit(m[old].child[0], id);
        const int c1 = visit(m[old].child[1], id);
        const Node& x = out.nodes[c0];
        const Node& y = out.nodes[c1];
        n.child = {c0, c1};
        n.color = x.color + y.color;
        n.min_leaf = std::min(x.min_leaf, y.min_leaf);
        n.xi_count = x.xi_count + y.xi_count;
        n.a = 0;
        n.b = 0;
        break;
      }
    }
    if (with_decorations) {
      const Permutation& d = m[old].deco;
      if (d.degree() != n.color) {
        throw ColorError(id, "decoration of degree " + std::to_string(d.degree()) +
                                 " on colour " + std::to_string(n.color));
      }
      out.decos[id] = d;
    } else {
      out.decos[id] = Permutation::identity(n.color);
    }
    out.nodes[id] = n;
    return id;
  };
  visit(root, -1);
  std::vector<int> seen;
  for (const auto& n : out.nodes) {
    if (n.kind == NodeKind::Leaf) seen.push_back(n.a);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ColorError(0, "leaf index used twice");
  }
  return out;
}

std::vector<MNode> to_mutable(const std::vector<Node>& nodes, const std::vector<Permutation>* decos) {
  std::vector<MNode> m(nodes.size());
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    m[v].kind = nodes[v].kind;
    m[v].a = nodes[v].a;
    m[v].b = nodes[v].b;
    m[v].child = nodes[v].child;
    m[v].deco = decos ? (*decos)[v] : Permutation::identity(nodes[v].color);
  }
  return m;
}

void check_complete_leaves(const std::vector<Node>& nodes) {
  std::vector<int> idx;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Leaf) idx.push_back(n.a);
  }
  std::sort(idx.begin(), idx.end());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] != static_cast<int>(k) + 1) {
      throw ColorError(0, "leaf indices must be exactly 1..r");
    }
  }
}

void check_pure_order(const std::vector<Node>& nodes) {
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto& n = nodes[v];
    if (n.kind == NodeKind::Merge &&
        nodes[n.child[0]].min_leaf > nodes[n.child[1]].min_leaf) {
      throw ColorError(static_cast<int>(v), "first branch must hold the least leaf");
    }
  }
}

std::vector<Node> append_child_nodes(Node top, std::initializer_list<const std::vector<Node>*> kids) {
  std::vector<Node> out;
  out.push_back(top);
  int k = 0;
  for (const auto* kid : kids) {
    const int shift = static_cast<int>(out.size());
    out[0].child[k++] = shift;
    for (Node n : *kid) {
      for (int& c : n.child) {
        if (c >= 0) c += shift;
      }
      n.parent = n.parent < 0 ? 0 : n.parent + shift;
      out.push_back(n);
    }
  }
  return out;
}

}  // namespace

std::string TreeType::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    if (k) os << ',';
    os << inputs[k];
  }
  os << ';' << output << ')';
  return os.str();
}

// ---------------------------------------------------------------- PureTree

PureTree PureTree::leaf(int index, int color) {
  std::vector<MNode> m(1);
  m[0].kind = NodeKind::Leaf;
  m[0].a = index;
  m[0].b = color;
  PureTree t;
  t.nodes_ = linearize(m, 0, false).nodes;
  return t;
}

PureTree PureTree::xi(int i, int j, const PureTree& child) {
  const Node& below = child.nodes_[0];
  if (below.color < 2) throw ColorError(0, "self-gluing on colour < 2");
  if (!(1 <= i && i < j && j <= below.color)) {
    throw ColorError(0, "self-gluing indices must satisfy 1 <= i < j <= " + std::to_string(below.color));
  }
  Node top;
  top.kind = NodeKind::Xi;
  top.a = i;
  top.b = j;
  top.color = below.color - 2;
  top.min_leaf = below.min_leaf;
  top.xi_count = below.xi_count + 1;
  PureTree t;
  t.nodes_ = append_child_nodes(top, {&child.nodes_});
  return t;
}

PureTree PureTree::merge(const PureTree& first, const PureTree& second) {
  const Node& x = first.nodes_[0];
  const Node& y = second.nodes_[0];
  if (x.min_leaf > y.min_leaf) throw ColorError(0, "first branch must hold the least leaf");
  for (const auto& p : first.nodes_) {
    if (p.kind != NodeKind::Leaf) continue;
    for (const auto& q : second.nodes_) {
      if (q.kind == NodeKind::Leaf && q.a == p.a) throw ColorError(0, "leaf index used twice");
    }
  }
  Node top;
  top.kind = NodeKind::Merge;
  top.color = x.color + y.color;
  top.min_leaf = x.min_leaf;
  top.xi_count = x.xi_count + y.xi_count;
  PureTree t;
  t.nodes_ = append_child_nodes(top, {&first.nodes_, &second.nodes_});
  return t;
}

PureTree PureTree::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty()) throw ColorError(0, "empty tree");
  auto lin = linearize(to_mutable(nodes, nullptr), 0, false);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (lin.new_id[v] != static_cast<int>(v)) {
      throw ColorError(static_cast<int>(v), "nodes are not in pre-order");
    }
  }
  if (lin.nodes.size() != nodes.size()) throw ColorError(0, "unreachable nodes");
  check_pure_order(lin.nodes);
  PureTree t;
  t.nodes_ = std::move(lin.nodes);
  return t;
}

GenLabel PureTree::label(int v) const {
  const auto& n = nodes_.at(v);
  if (n.kind == NodeKind::Xi) return SelfGluing{nodes_[n.child[0]].color, n.a, n.b};
  if (n.kind == NodeKind::Merge) {
    return Merger{nodes_[n.child[0]].color, nodes_[n.child[1]].color};
  }
  throw EdgeError("leaf " + std::to_string(v) + " carries no label");
}

std::vector<int> PureTree::internal_edges() const {
  std::vector<int> out;
  for (int v = 1; v < size(); ++v) {
    if (nodes_[v].kind != NodeKind::Leaf) out.push_back(v);
  }
  return out;
}

std::size_t PureTree::hash() const {
  std::size_t h = nodes_.size();
  for (const auto& n : nodes_) {
    h = h * 1000003u ^ (static_cast<std::size_t>(n.kind) * 131u + static_cast<std::size_t>(n.a) * 31u +
                        static_cast<std::size_t>(n.b) + (static_cast<std::size_t>(n.child[0] + 1) << 20));
  }
  return h;
}

// ---------------------------------------------------------------- RawTree

RawTree RawTree::leaf(int index, int color) {
  std::vector<MNode> m(1);
  m[0].kind = NodeKind::Leaf;
  m[0].a = index;
  m[0].b = color;
  m[0].deco = Permutation::identity(std::max(color, 0));
  auto lin = linearize(m, 0, true);
  RawTree t;
  t.nodes_ = std::move(lin.nodes);
  t.decorations_ = std::move(lin.decos);
  return t;
}

RawTree RawTree::xi(int i, int j, const RawTree& child) {
  Node top;
  top.kind = NodeKind::Xi;
  top.a = i;
  top.b = j;
  auto nodes = append_child_nodes(top, {&child.nodes_});
  std::vector<Permutation> decos;
  decos.emplace_back();
  decos.insert(decos.end(), child.decorations_.begin(), child.decorations_.end());
  const int c = child.output_color();
  decos[0] = Permutation::identity(std::max(c - 2, 0));
  return from_nodes(std::move(nodes), std::move(decos));
}

RawTree RawTree::merge(const RawTree& first, const RawTree& second) {
  Node top;
  top.kind = NodeKind::Merge;
  auto nodes = append_child_nodes(top, {&first.nodes_, &second.nodes_});
  std::vector<Permutation> decos;
  decos.push_back(Permutation::identity(first.output_color() + second.output_color()));
  decos.insert(decos.end(), first.decorations_.begin(), first.decorations_.end());
  decos.insert(decos.end(), second.decorations_.begin(), second.decorations_.end());
  return from_nodes(std::move(nodes), std::move(decos));
}

RawTree RawTree::decorated(const Permutation& p, const RawTree& t) {
  if (p.degree() != t.output_color()) {
    throw ColorError(0, "decoration of degree " + std::to_string(p.degree()) + " on colour " +
                            std::to_string(t.output_color()));
  }
  RawTree out = t;
  out.decorations_[0] = p * t.decorations_[0];
  return out;
}

RawTree RawTree::from_pure(const PureTree& t) {
  RawTree out;
  out.nodes_ = t.nodes();
  out.decorations_.reserve(t.nodes().size());
  for (const auto& n : t.nodes()) out.decorations_.push_back(Permutation::identity(n.color));
  return out;
}

RawTree RawTree::from_nodes(std::vector<Node> nodes, std::vector<Permutation> decorations) {
  if (nodes.empty() || nodes.size() != decorations.size()) {
    throw ColorError(0, "node and decoration counts differ");
  }
  auto lin = linearize(to_mutable(nodes, &decorations), 0, true);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (lin.new_id[v] != static_cast<int>(v)) {
      throw ColorError(static_cast<int>(v), "nodes are not in pre-order");
    }
  }
  if (lin.nodes.size() != nodes.size()) throw ColorError(0, "unreachable nodes");
  RawTree t;
  t.nodes_ = std::move(lin.nodes);
  t.decorations_ = std::move(lin.decos);
  return t;
}

RawTree RawTree::relabel_inputs(const Permutation& pi) const {
  auto nodes = nodes_;
  for (auto& n : nodes) {
    if (n.kind == NodeKind::Leaf) {
      if (n.a > pi.degree()) throw ColorError(0, "relabelling of the wrong degree");
      n.a = pi(n.a);
    }
  }
  return from_nodes(std::move(nodes), decorations_);
}

RawTree RawTree::graft(int i, const RawTree& inner) const {
  int r = 0;
  int target = -1;
  for (int v = 0; v < size(); ++v) {
    if (nodes_[v].kind == NodeKind::Leaf) {
      ++r;
      if (nodes_[v].a == i) target = v;
    }
  }
  if (target < 0) throw ColorError(0, "no input " + std::to_string(i));
  if (inner.output_color() != nodes_[target].color) {
    throw ColorError(target, "grafted output colour " + std::to_string(inner.output_color()) +
                                 " does not match input colour " + std::to_string(nodes_[target].color));
  }
  int s = 0;
  for (const auto& n : inner.nodes_) s += n.kind == NodeKind::Leaf;

  auto m = to_mutable(nodes_, &decorations_);
  const int shift = static_cast<int>(m.size());
  for (auto& mn : m) {
    if (mn.kind == NodeKind::Leaf && mn.a > i) mn.a += s - 1;
  }
  auto inner_m = to_mutable(inner.nodes_, &inner.decorations_);
  for (auto& mn : inner_m) {
    for (int& c : mn.child) {
      if (c >= 0) c += shift;
    }
    if (mn.kind == NodeKind::Leaf) mn.a += i - 1;
  }
  // The leaf's decoration acts on the input, i.e. after the inner root's.
  inner_m[0].deco = m[target].deco * inner_m[0].deco;
  m.insert(m.end(), inner_m.begin(), inner_m.end());
  int root = 0;
  if (target == 0) {
    root = shift;
  } else {
    auto& parent = m[nodes_[target].parent];
    for (int& c : parent.child) {
      if (c == target) c = shift;
    }
  }
  auto lin = linearize(m, root, true);
  RawTree t;
  t.nodes_ = std::move(lin.nodes);
  t.decorations_ = std::move(lin.decos);
  return t;
}

// ---------------------------------------------------------------- Element

Element::Element(Permutation sigma, PureTree tree) : sigma_(std::move(sigma)), tree_(std::move(tree)) {
  if (sigma_.degree() != tree_.output_color()) {
    throw ColorError(0, "root permutation of degree " + std::to_string(sigma_.degree()) +
                            " on output colour " + std::to_string(tree_.output_color()));
  }
  check_complete_leaves(tree_.nodes());
}

RawTree to_raw(const Element& e) { return RawTree::decorated(e.sigma(), RawTree::from_pure(e.tree())); }

namespace {

TypeInfo infer_nodes(const std::vector<Node>& nodes) {
  check_complete_leaves(nodes);
  TypeInfo info;
  int r = 0;
  for (const auto& n : nodes) r += n.kind == NodeKind::Leaf;
  info.type.inputs.assign(r, 0);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const auto& n = nodes[v];
    switch (n.kind) {
      case NodeKind::Leaf:
        info.type.inputs[n.a - 1] = n.b;
        break;
      case NodeKind::Xi:
        ++info.bigrade.s;
        if (nodes[n.child[0]].color != n.color + 2) {
          throw ColorError(static_cast<int>(v), "self-gluing colours inconsistent");
        }
        break;
      case NodeKind::Merge:
        ++info.bigrade.m;
        if (nodes[n.child[0]].color + nodes[n.child[1]].color != n.color) {
          throw ColorError(static_cast<int>(v), "merger colours inconsistent");
        }
        break;
    }
  }
  info.type.output = nodes[0].color;
  return info;
}

}  // namespace

TypeInfo infer_type(const PureTree& t) { return infer_nodes(t.nodes()); }
TypeInfo infer_type(const RawTree& t) { return infer_nodes(t.nodes()); }

// ---------------------------------------------------------------- legs

LegTrace trace_legs(const RawTree& t) {
  const auto& nodes = t.nodes();
  std::vector<int> colors;
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Leaf) {
      if (static_cast<int>(colors.size()) < n.a) colors.resize(n.a, 0);
      colors[n.a - 1] = n.b;
    }
  }
  std::vector<int> offset(colors.size() + 1, 0);
  for (std::size_t k = 0; k < colors.size(); ++k) offset[k + 1] = offset[k] + colors[k];

  LegTrace trace;
  std::function<std::vector<int>(int)> visit = [&](int v) -> std::vector<int> {
    const auto& n = nodes[v];
    std::vector<int> out;
    switch (n.kind) {
      case NodeKind::Leaf:
        out.resize(n.b);
        std::iota(out.begin(), out.end(), offset[n.a - 1] + 1);
        break;
      case NodeKind::Xi: {
        const std::size_t slot = trace.word.size();
        trace.word.emplace_back();
        auto below = visit(n.child[0]);
        int x = below[n.a - 1];
        int y = below[n.b - 1];
        trace.word[slot] = {std::min(x, y), std::max(x, y)};
        for (int k = 0; k < static_cast<int>(below.size()); ++k) {
          if (k != n.a - 1 && k != n.b - 1) out.push_back(below[k]);
        }
        break;
      }
      case NodeKind::Merge: {
        out = visit(n.child[0]);
        auto second = visit(n.child[1]);
        out.insert(out.end(), second.begin(), second.end());
        break;
      }
    }
    const auto& d = t.decorations()[v];
    if (!d.is_identity()) {
      std::vector<int> moved(out.size());
      for (int k = 1; k <= d.degree(); ++k) moved[d(k) - 1] = out[k - 1];
      out.swap(moved);
    }
    return out;
  };
  trace.out = visit(0);
  return trace;
}

LegTrace trace_legs(const Element& e) { return trace_legs(to_raw(e)); }

// ---------------------------------------------------------------- purify

namespace {

struct Purified {
  SignedElement result;
  std::vector<int> new_id;
  bool resorted = false;
};

Purified purify_impl(const RawTree& raw, std::span<const int> order) {
  const auto& nodes = raw.nodes();
  const int size = raw.size();
  auto m = to_mutable(nodes, &raw.decorations());
  int sign = 1;
  bool resorted = false;

  for (int v = 0; v < size; ++v) {
    const auto& n = nodes[v];
    if (n.kind != NodeKind::Merge) continue;
    const auto& x = nodes[n.child[0]];
    const auto& y = nodes[n.child[1]];
    if (x.min_leaf > y.min_leaf) {
      // *_{x,y}(X,Y) = sigma_{y,x} *_{y,x}(Y,X)
      std::swap(m[v].child[0], m[v].child[1]);
      m[v].deco = m[v].deco * shuffle(y.color, x.color);
      if ((x.xi_count * y.xi_count) % 2) sign = -sign;
      resorted = true;
    }
  }

  std::vector<int> default_order;
  if (order.empty() && size > 1) {
    for (int v = size - 1; v >= 1; --v) default_order.push_back(v);
    order = default_order;
  }
  if (static_cast<int>(order.size()) != size - 1) {
    throw EdgeError("push order must list every non-root node once");
  }
  std::vector<char> pushed(size, 0);
  for (int v : order) {
    if (v < 1 || v >= size || pushed[v]) throw EdgeError("invalid push order entry " + std::to_string(v));
    for (int c : nodes[v].child) {
      if (c >= 0 && !pushed[c]) {
        throw EdgeError("node " + std::to_string(v) + " pushed before node " + std::to_string(c) + " above it");
      }
    }
    pushed[v] = 1;
    const Permutation d = m[v].deco;
    if (d.is_identity()) continue;
    const int u = nodes[v].parent;
    auto& pu = m[u];
    if (pu.kind == NodeKind::Xi) {
      auto dec = coset_decompose(rho(d.degree(), pu.a, pu.b) * d);
      pu.a = dec.k;
      pu.b = dec.l;
      pu.deco = pu.deco * dec.sigma_hat;
    } else {
      const int c0 = nodes[pu.child[0]].color;
      const int c1 = nodes[pu.child[1]].color;
      if (pu.child[0] == v) {
        pu.deco = pu.deco * block_embed(d, Permutation::identity(c1));
      } else {
        pu.deco = pu.deco * block_embed(Permutation::identity(c0), d);
      }
    }
    m[v].deco = Permutation::identity(d.degree());
  }

  auto lin = linearize(m, 0, true);
  Permutation sigma = lin.decos[0];
  PureTree tree = PureTree::from_nodes(std::move(lin.nodes));
  return Purified{SignedElement{sign, Element(std::move(sigma), std::move(tree))}, std::move(lin.new_id), resorted};
}

}  // namespace

Element purify(const RawTree& raw) { return purify_impl(raw, {}).result.element; }
SignedElement purify_signed(const RawTree& raw) { return purify_impl(raw, {}).result; }
SignedElement purify_signed(const RawTree& raw, std::span<const int> push_order) {
  return purify_impl(raw, push_order).result;
}

// ---------------------------------------------------------------- rewrites

std::optional<PlanarRewrite> planar_rewrite(const Element& e, int edge) {
  const auto& nodes = e.tree().nodes();
  if (edge < 1 || edge >= e.tree().size() || nodes[edge].kind == NodeKind::Leaf) {
    throw EdgeError("edge " + std::to_string(edge) + " is not internal");
  }
  auto m = to_mutable(nodes, nullptr);
  const int w = edge;
  const int u = nodes[w].parent;
  const auto& nw = nodes[w];
  const auto& nu = nodes[u];
  int sign = 1;

  if (nu.kind == NodeKind::Xi && nw.kind == NodeKind::Xi) {
    const int n = nodes[nw.child[0]].color;
    const auto inv = rho(n, nw.a, nw.b).inverse();
    const int k = inv(nu.a);
    const int l = inv(nu.b);
    const auto rkl = rho(n, k, l);
    m[w].a = k;
    m[w].b = l;
    m[u].a = rkl(nw.a);
    m[u].b = rkl(nw.b);
    sign = -1;
  } else if (nu.kind == NodeKind::Merge && nw.kind == NodeKind::Xi) {
    const int slot = nu.child[0] == w ? 0 : 1;
    const int c = nw.child[0];
    const int other = nu.child[1 - slot];
    m[u].kind = NodeKind::Xi;
    m[u].child = {w, -1};
    m[w].kind = NodeKind::Merge;
    m[w].a = m[w].b = 0;
    if (slot == 0) {
      m[u].a = nw.a;
      m[u].b = nw.b;
      m[w].child = {c, other};
    } else {
      const int shift = nodes[other].color;
      m[u].a = nw.a + shift;
      m[u].b = nw.b + shift;
      m[w].child = {other, c};
      if (nodes[other].xi_count % 2) sign = -1;
    }
  } else if (nu.kind == NodeKind::Xi && nw.kind == NodeKind::Merge) {
    const int x = nw.child[0];
    const int y = nw.child[1];
    const int n = nodes[x].color;
    m[u].kind = NodeKind::Merge;
    m[w].kind = NodeKind::Xi;
    if (nu.b <= n) {
      m[w].a = nu.a;
      m[w].b = nu.b;
      m[w].child = {x, -1};
      m[u].child = {w, y};
    } else if (nu.a > n) {
      m[w].a = nu.a - n;
      m[w].b = nu.b - n;
      m[w].child = {y, -1};
      m[u].child = {x, w};
      if (nodes[x].xi_count % 2) sign = -1;
    } else {
      return std::nullopt;
    }
    m[u].a = m[u].b = 0;
  } else {
    // Both binary: the middle of the three branches (in planar order)
    // changes sides.
    if (nu.child[0] == w) {
      const int p = nw.child[0];
      const int q = nw.child[1];
      const int r = nu.child[1];
      m[w].child = {q, r};
      m[u].child = {p, w};
    } else {
      const int p = nu.child[0];
      const int q = nw.child[0];
      const int r = nw.child[1];
      m[w].child = {p, q};
      m[u].child = {w, r};
    }
  }

  // The root stays the root and keeps its colour, so sigma carries over.
  auto lin = linearize(m, 0, false);
  const int new_edge = lin.new_id[w];
  return PlanarRewrite{e.sigma(), RawTree::from_nodes(std::move(lin.nodes), std::move(lin.decos)), sign, new_edge};
}

std::optional<RewriteResult> local_rewrite(const Element& e, int edge) {
  auto planar = planar_rewrite(e, edge);
  if (!planar) return std::nullopt;
  auto purified = purify_impl(RawTree::decorated(planar->sigma, planar->tree), {});
  return RewriteResult{std::move(purified.result.element), planar->sign * purified.result.sign,
                       purified.new_id[planar->edge], purified.resorted};
}

std::vector<RewriteResult> neighbors(const Element& e) {
  std::vector<RewriteResult> out;
  for (int edge : e.tree().internal_edges()) {
    if (auto r = local_rewrite(e, edge)) out.push_back(std::move(*r));
  }
  return out;
}

// ---------------------------------------------------------------- render

std::string render(const RawTree& t) {
  const auto& nodes = t.nodes();
  std::function<std::string(int)> visit = [&](int v) -> std::string {
    const auto& n = nodes[v];
    std::string s;
    switch (n.kind) {
      case NodeKind::Leaf:
        s = "x" + std::to_string(n.a) + ":" + std::to_string(n.b);
        break;
      case NodeKind::Xi:
        s = "xi[" + std::to_string(n.a) + "," + std::to_string(n.b) + "](" + visit(n.child[0]) + ")";
        break;
      case NodeKind::Merge:
        s = "m(" + visit(n.child[0]) + ", " + visit(n.child[1]) + ")";
        break;
    }
    const auto& d = t.decorations()[v];
    if (!d.is_identity()) {
      std::string p = "p[";
      for (int k = 0; k < d.degree(); ++k) {
        if (k) p += ' ';
        p += std::to_string(d.images()[k]);
      }
      s = p + "](" + s + ")";
    }
    return s;
  };
  return visit(0);
}

std::string render(const Element& e) { return render(to_raw(e)); }

}  // namespace smoc

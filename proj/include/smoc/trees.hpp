#pragma once

// Term model: generator labels, pure trees, decorated ("raw") trees,
// purification, and the local rewrite moves that generate the equivalence
// relation on pure trees.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "smoc/symcore.hpp"

namespace smoc {

enum class Mode { Even, Odd };

// xi_{i,j} on an input of colour n (output n-2).
struct SelfGluing {
  int n = 0, i = 0, j = 0;
  bool operator==(const SelfGluing&) const = default;
};

// *_{n,m}: first branch of colour n, second of colour m.
struct Merger {
  int n = 0, m = 0;
  bool operator==(const Merger&) const = default;
};

using GenLabel = std::variant<SelfGluing, Merger>;

enum class NodeKind : std::uint8_t { Leaf, Xi, Merge };

// One node of a tree stored in pre-order (root first, then the first
// branch, then the second). Derived fields are filled in by the builders.
struct Node {
  NodeKind kind = NodeKind::Leaf;
  int a = 0;  // leaf: input index; xi: i
  int b = 0;  // leaf: input colour; xi: j
  std::array<int, 2> child{-1, -1};
  int parent = -1;
  int color = 0;     // output colour
  int min_leaf = 0;  // least input index in the subtree
  int xi_count = 0;  // unary vertices in the subtree

  auto operator<=>(const Node&) const = default;
};

struct TreeType {
  std::vector<int> inputs;  // colours of inputs 1..r
  int output = 0;

  auto operator<=>(const TreeType&) const = default;
  std::string to_string() const;
};

struct Bigrade {
  int s = 0;  // unary (self-gluing) vertices
  int m = 0;  // binary (merger) vertices

  auto operator<=>(const Bigrade&) const = default;
  int weight() const { return s + m; }
};

struct TypeInfo {
  TreeType type;
  Bigrade bigrade;
};

// A tree with no decorations whose binary vertices list the branch holding
// the least input index first.
class PureTree {
 public:
  static PureTree leaf(int index, int color);
  static PureTree xi(int i, int j, const PureTree& child);
  // Throws ColorError unless first.min_leaf < second.min_leaf.
  static PureTree merge(const PureTree& first, const PureTree& second);
  // Rebuilds the derived fields from kind/a/b/child and checks every invariant.
  static PureTree from_nodes(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int v) const { return nodes_[v]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int output_color() const { return nodes_[0].color; }
  GenLabel label(int v) const;

  // Edge ids: the vertex above the edge. Only edges joining two labelled
  // vertices are listed.
  std::vector<int> internal_edges() const;

  std::size_t hash() const;

  auto operator<=>(const PureTree&) const = default;

 private:
  std::vector<Node> nodes_;
};

// Pure tree plus a left permutation decoration on every node; branch order
// at binary vertices is arbitrary. A decoration on a leaf is a right action
// on that input.
class RawTree {
 public:
  static RawTree leaf(int index, int color);
  static RawTree xi(int i, int j, const RawTree& child);
  static RawTree merge(const RawTree& first, const RawTree& second);
  // Left-multiplies the root decoration by p.
  static RawTree decorated(const Permutation& p, const RawTree& t);
  static RawTree from_pure(const PureTree& t);
  static RawTree from_nodes(std::vector<Node> nodes, std::vector<Permutation> decorations);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int v) const { return nodes_[v]; }
  const std::vector<Permutation>& decorations() const { return decorations_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int output_color() const { return nodes_[0].color; }

  // Leaf i becomes leaf pi(i).
  RawTree relabel_inputs(const Permutation& pi) const;
  // Graft inner onto leaf i; inputs are renumbered as for the i-th partial
  // composition (inner inputs take positions i..i+s-1).
  RawTree graft(int i, const RawTree& inner) const;

  bool operator==(const RawTree&) const = default;

 private:
  std::vector<Node> nodes_;
  std::vector<Permutation> decorations_;
};

class Element {
 public:
  Element(Permutation sigma, PureTree tree);

  const Permutation& sigma() const { return sigma_; }
  const PureTree& tree() const { return tree_; }

  auto operator<=>(const Element&) const = default;

 private:
  Permutation sigma_;
  PureTree tree_;
};

// An element together with a coefficient +-1 (only meaningful in odd mode).
struct SignedElement {
  int sign = 1;
  Element element;
};

RawTree to_raw(const Element& e);

TypeInfo infer_type(const PureTree& t);
TypeInfo infer_type(const RawTree& t);

// Where every leg ends up. Inputs are numbered consecutively: input 1 owns
// legs 1..v_1, input 2 the next v_2, and so on.
struct LegTrace {
  std::vector<int> out;                     // out[k-1] = leg at output position k
  std::vector<std::pair<int, int>> word;    // glued leg pairs in pre-order
};

LegTrace trace_legs(const RawTree& t);
LegTrace trace_legs(const Element& e);

// Moves every decoration to the root. The default order pushes children
// before parents in pre-order position; any order listing each non-root
// node after all nodes above it yields the same result. The sign is the
// Koszul sign picked up when reordering branches in odd mode.
Element purify(const RawTree& raw);
SignedElement purify_signed(const RawTree& raw);
SignedElement purify_signed(const RawTree& raw, std::span<const int> push_order);

struct PlanarRewrite {
  Permutation sigma;
  RawTree tree;  // undecorated; branch order may violate the least-leaf rule
  int sign = 1;  // odd-mode coefficient
  int edge = 0;  // the rewritten edge in tree
};

struct RewriteResult {
  Element element;
  int sign = 1;
  int edge = 0;           // the rewritten edge in element.tree()
  bool resorted = false;  // branch order had to be repaired afterwards
};

// The relation at one internal edge, before branch order is repaired.
// Returns nullopt when no relation applies: a self-gluing below a merger
// whose two legs come from different branches. Throws EdgeError for a leaf,
// the root, or an out-of-range id.
std::optional<PlanarRewrite> planar_rewrite(const Element& e, int edge);
std::optional<RewriteResult> local_rewrite(const Element& e, int edge);
std::vector<RewriteResult> neighbors(const Element& e);

// Canonical text in the expression grammar.
std::string render(const RawTree& t);
std::string render(const Element& e);

}  // namespace smoc

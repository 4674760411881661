#pragma once

// Brute-force ground truth: enumeration of pure trees, rewrite closure into
// classes, independent counts, and exact ranks of relation spans.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "smoc/normalform.hpp"
#include "smoc/trees.hpp"

namespace smoc {

inline constexpr std::size_t kDefaultLimit = 1'000'000;

// Reads SMOC_LIMIT if set, else kDefaultLimit.
std::size_t default_limit();

// Every pure tree of the given type and bigrade, once each, in a fixed order.
std::vector<PureTree> enumerate_pure(const TreeType& type, const Bigrade& bigrade);

// Elements are indexed as tree_index * output! + rank(sigma).
class ClassPartition {
 public:
  TreeType type;
  Bigrade bigrade;
  Mode mode = Mode::Even;
  std::vector<PureTree> trees;
  std::uint64_t perms = 1;  // output!

  std::size_t universe_size() const { return class_of_.size(); }
  std::size_t class_count() const { return class_count_; }
  // False if some element is identified with its own negative (odd mode).
  bool consistent() const { return consistent_; }
  std::uint32_t class_of(std::size_t index) const { return class_of_[index]; }
  // Sign relative to the class representative (odd mode; +1 in even mode).
  int relative_sign(std::size_t index) const { return sign_[index] ? -1 : 1; }
  Element element(std::size_t index) const;
  std::size_t index_of(const Element& e) const;

 private:
  friend ClassPartition closure(const TreeType&, const Bigrade&, Mode, std::size_t);
  friend ClassPartition closure_naive(const TreeType&, const Bigrade&, Mode, std::size_t);
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint8_t> sign_;
  std::size_t class_count_ = 0;
  bool consistent_ = true;
  std::map<PureTree, std::size_t> tree_index_;
};

// Union-find over every element via the rewrite moves. Throws
// ResourceLimitError if the universe exceeds limit.
ClassPartition closure(const TreeType& type, const Bigrade& bigrade, Mode mode,
                       std::size_t limit = default_limit());
// Same partition computed element by element through neighbors(); slow.
ClassPartition closure_naive(const TreeType& type, const Bigrade& bigrade, Mode mode,
                             std::size_t limit = default_limit());

// output! * (number of ways to glue s disjoint leg pairs). Zero when the
// bigrade is impossible for the type.
std::uint64_t count_expected(const TreeType& type, const Bigrade& bigrade);

// All normal forms of the type with s matched pairs, built from matchings
// and output permutations (sign +1).
std::vector<NormalForm> enumerate_normal_forms(const TreeType& type, int s, Mode mode);

// |F(E)(type)| in the given bigrade from a sum over unordered tree shapes of
// vertex group sizes divided by internal edge automorphisms.
boost::multiprecision::cpp_int count_free(const TreeType& type, const Bigrade& bigrade);

// Sparse exact matrix whose rank is maintained incrementally.
class RationalMatrix {
 public:
  using Rational = boost::multiprecision::cpp_rational;
  using Row = std::map<std::size_t, Rational>;

  // Returns true if the row was independent of the rows added so far.
  bool add_row(Row row);
  std::size_t rank() const { return pivots_.size(); }
  bool in_span(Row row) const;

 private:
  void reduce(Row& row) const;
  std::map<std::size_t, Row> pivots_;  // pivot column -> row with leading 1
};

// Linear combinations of elements, keyed by element.
using Vector = std::map<Element, long long>;

enum class RelationFamily { XiXi, XiMerge, MergeMerge };

struct RelationSpan {
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t columns = 0;  // dimension of the ambient weight-2 component
  RationalMatrix matrix;
  std::map<Element, std::size_t> column_of;

  RationalMatrix::Row to_row(const Vector& v) const;
};

// The span of the defining relation of a family and all its images under
// the left action, the right actions on inputs and input relabelling.
// params: {n} for XiXi, {n, m} for XiMerge, {n, m, l} for MergeMerge.
RelationSpan relation_span(RelationFamily family, const std::vector<int>& params,
                           std::size_t limit = default_limit());
std::size_t relation_span_rank(RelationFamily family, const std::vector<int>& params,
                               std::size_t limit = default_limit());

// The explicit spanning set of the family: one vector per non-normal tree
// shape and output permutation (for XiXi one per unordered pair class with
// the second glued pair ending below the first).
std::vector<Vector> basis_vectors(RelationFamily family, const std::vector<int>& params);

std::uint64_t expected_relation_rank(RelationFamily family, const std::vector<int>& params);

}  // namespace smoc

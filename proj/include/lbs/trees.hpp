#pragma once

#include <compare>
#include <stdexcept>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lbs {

// Planar rooted tree. children() is the true left-to-right order, index 0
// being the leftmost child. Labels are bookkeeping for labeled oracles and
// default to 0 everywhere else.
class PlanarTree {
 public:
  PlanarTree() = default;
  explicit PlanarTree(std::vector<PlanarTree> children, int label = 0);

  const std::vector<PlanarTree>& children() const { return children_; }
  int label() const { return label_; }
  std::size_t vertex_count() const { return size_; }
  bool is_leaf() const { return children_.empty(); }

  PlanarTree with_label(int label) const;
  PlanarTree without_labels() const;

  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);
  friend bool operator==(const PlanarTree& a, const PlanarTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<PlanarTree> children_;
  int label_ = 0;
  std::size_t size_ = 1;
};

class OrderedForest {
 public:
  OrderedForest() = default;
  explicit OrderedForest(std::vector<PlanarTree> trees);
  explicit OrderedForest(PlanarTree tree);

  const std::vector<PlanarTree>& trees() const { return trees_; }
  std::size_t vertex_count() const { return size_; }
  std::size_t size() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }
  const PlanarTree& operator[](std::size_t i) const { return trees_[i]; }

  OrderedForest without_labels() const;

  friend OrderedForest operator*(const OrderedForest& a, const OrderedForest& b);
  friend std::strong_ordering operator<=>(const OrderedForest& a, const OrderedForest& b);
  friend bool operator==(const OrderedForest& a, const OrderedForest& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<PlanarTree> trees_;
  std::size_t size_ = 0;
};

// Non-planar tree stored as the representative whose child lists are
// sorted ascending under the PlanarTree order.
class NonPlanarTree {
 public:
  NonPlanarTree() = default;
  explicit NonPlanarTree(const PlanarTree& t);

  const PlanarTree& planar() const { return t_; }
  std::size_t vertex_count() const { return t_.vertex_count(); }

  friend auto operator<=>(const NonPlanarTree&, const NonPlanarTree&) = default;
  friend bool operator==(const NonPlanarTree&, const NonPlanarTree&) = default;

 private:
  PlanarTree t_;
};

class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<NonPlanarTree> trees);
  explicit Forest(NonPlanarTree tree);

  const std::vector<NonPlanarTree>& trees() const { return trees_; }
  std::size_t vertex_count() const { return size_; }
  std::size_t size() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }

  friend Forest operator*(const Forest& a, const Forest& b);
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);
  friend bool operator==(const Forest& a, const Forest& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<NonPlanarTree> trees_;
  std::size_t size_ = 0;
};

PlanarTree bullet();
NonPlanarTree canonicalize(const PlanarTree& t);
Forest forget_planarity(const OrderedForest& x);

// Order of the automorphism group.
unsigned long long symmetry_factor(const NonPlanarTree& t);
// Tree factorial γ(τ): product of subtree sizes.
unsigned long long tree_factorial(const PlanarTree& t);

std::vector<PlanarTree> enumerate_planar_trees(std::size_t n);
std::vector<OrderedForest> enumerate_ordered_forests(std::size_t n);
std::vector<NonPlanarTree> enumerate_nonplanar_trees(std::size_t n);
std::vector<Forest> enumerate_forests(std::size_t n);

// Bracket notation. A vertex's children are written right-to-left: the
// string "[[][[]]]" is the tree whose leftmost child is the 2-ladder.
// "•" is accepted for "[]". The empty forest is written as "∅" and parses
// from "", "∅" or "1".
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos);
  std::size_t position;
};

OrderedForest parse_forest(std::string_view text);
PlanarTree parse_tree(std::string_view text);
// Same grammar with an optional integer label after each "[".
OrderedForest parse_labeled_forest(std::string_view text);

std::string to_string(const PlanarTree& t);
std::string to_string(const OrderedForest& x);
std::string to_string(const NonPlanarTree& t);
std::string to_string(const Forest& f);
std::string to_labeled_string(const PlanarTree& t);
std::string to_labeled_string(const OrderedForest& x);

}  // namespace lbs

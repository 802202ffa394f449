#pragma once

#include <vector>

#include "lbs/trees.hpp"

namespace lbs::detail {

// Forest flattened to preorder vertex ids.
struct Flat {
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<int> roots;
  std::vector<int> label;
  std::size_t size() const { return parent.size(); }
};

inline int flatten_into(const PlanarTree& t, int parent, Flat& f) {
  const int me = static_cast<int>(f.parent.size());
  f.parent.push_back(parent);
  f.children.emplace_back();
  f.label.push_back(t.label());
  for (const auto& c : t.children()) {
    int id = flatten_into(c, me, f);
    f.children[me].push_back(id);
  }
  return me;
}

inline Flat flatten(const std::vector<PlanarTree>& trees) {
  Flat f;
  for (const auto& t : trees) f.roots.push_back(flatten_into(t, -1, f));
  return f;
}

// Tree on the vertices reachable from v through children accepted by keep.
template <class Keep>
PlanarTree induced(const Flat& f, int v, Keep&& keep) {
  std::vector<PlanarTree> ch;
  for (int c : f.children[v])
    if (keep(c)) ch.push_back(induced(f, c, keep));
  return PlanarTree(std::move(ch), f.label[v]);
}

}  // namespace lbs::detail

#include "mgonal/escalator.hpp"

#include <algorithm>

#include "mgonal/errors.hpp"
#include "mgonal/parallel.hpp"

namespace mgonal {

namespace {

struct Pending {
  std::size_t index;  // node index in the tree
  RepresentationSet set;
};

struct Expansion {
  std::vector<EscalatorNode> children;
  std::vector<RepresentationSet> sets;
};

Expansion expand(const EscalatorNode& node, const RepresentationSet& set,
                 std::span<const std::uint64_t> values) {
  Expansion out;
  const std::uint64_t target = node.truant.value();
  const std::uint32_t lo = node.is_root() ? 1U : node.coeffs.back();
  for (std::uint64_t a = lo; a <= target; ++a) {
    auto child_set = set.folded(values, static_cast<std::uint32_t>(a));
    if (!child_set.contains(target)) continue;
    EscalatorNode child;
    child.coeffs = node.coeffs;
    child.coeffs.push_back(static_cast<std::uint32_t>(a));
    child.depth = node.depth + 1;
    child.truant = truant_of(child_set);
    out.children.push_back(std::move(child));
    out.sets.push_back(std::move(child_set));
  }
  return out;
}

}  // namespace

std::vector<std::size_t> EscalatorTree::layer(int depth) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].depth == depth) out.push_back(i);
  }
  return out;
}

bool EscalatorTree::complete() const {
  if (truncated) return false;
  return std::all_of(nodes.begin(), nodes.end(), [](const EscalatorNode& n) {
    return !n.children.empty() || n.truant.is_universal();
  });
}

std::vector<PolygonalForm> escalate(const EscalatorNode& node, int m, std::uint64_t bound) {
  if (node.truant.is_universal()) throw DomainError("cannot escalate a B-universal node");
  const auto values = polygonal_values_up_to(m, bound);
  auto set = RepresentationSet::zero_only(bound);
  for (auto a : node.coeffs) set = set.folded(values, a);
  std::vector<PolygonalForm> out;
  for (auto& child : expand(node, set, values).children) out.emplace_back(m, std::move(child.coeffs));
  return out;
}

EscalatorTree build_tree(int m, int max_depth, std::uint64_t bound, const BuildOptions& options) {
  if (m < 3) throw DomainError("m must be >= 3");
  if (max_depth < 1) throw DomainError("max_depth must be >= 1");
  if (bound < 1) throw DomainError("bound must be >= 1");

  EscalatorTree tree;
  tree.m = m;
  tree.bound = bound;
  tree.max_depth = max_depth;
  tree.nodes.push_back(EscalatorNode{});

  const auto values = polygonal_values_up_to(m, bound);
  std::vector<Pending> frontier;
  frontier.push_back({0, RepresentationSet::zero_only(bound)});

  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    auto expansions = parallel_map<Expansion>(frontier.size(), [&](std::size_t i) {
      return expand(tree.nodes[frontier[i].index], frontier[i].set, values);
    });

    std::vector<Pending> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      auto& ex = expansions[i];
      for (std::size_t k = 0; k < ex.children.size(); ++k) {
        if (tree.nodes.size() >= options.node_cap) {
          if (!options.truncate_on_cap) {
            throw ResourceError("escalator tree exceeds node cap " + std::to_string(options.node_cap));
          }
          tree.truncated = true;
          return tree;
        }
        const std::size_t idx = tree.nodes.size();
        tree.nodes[frontier[i].index].children.push_back(idx);
        const bool open = !ex.children[k].truant.is_universal();
        tree.nodes.push_back(std::move(ex.children[k]));
        if (open) next.push_back({idx, std::move(ex.sets[k])});
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

GammaEstimate gamma_estimate(const EscalatorTree& tree) {
  GammaEstimate g;
  for (const auto& n : tree.nodes) {
    if (n.depth <= tree.max_depth && !n.truant.is_universal()) g.value = std::max(g.value, n.truant.value());
  }
  g.empirical = tree.complete();
  return g;
}

std::optional<int> min_leaf_depth(const EscalatorTree& tree) {
  std::optional<int> best;
  for (const auto& n : tree.nodes) {
    if (n.truant.is_universal() && (!best || n.depth < *best)) best = n.depth;
  }
  return best;
}

}  // namespace mgonal

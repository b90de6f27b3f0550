#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgonal/polygonal.hpp"

namespace mgonal {

inline constexpr std::size_t kDefaultNodeCap = 1'000'000;
inline constexpr int kDefaultDepth = 4;

/// One form in the escalator tree. The root has no coefficients and truant 1.
struct EscalatorNode {
  std::vector<std::uint32_t> coeffs;
  Truant truant = Truant::at(1);
  int depth = 0;
  std::vector<std::size_t> children;  // indices into EscalatorTree::nodes

  bool is_root() const noexcept { return coeffs.empty(); }
  PolygonalForm form(int m) const { return PolygonalForm(m, coeffs); }

  friend bool operator==(const EscalatorNode&, const EscalatorNode&) = default;
};

/// Nodes are stored in shortlex order (by depth, then lexicographically by
/// coefficient vector); nodes[0] is the root.
struct EscalatorTree {
  int m = 3;
  std::uint64_t bound = kDefaultBound;
  int max_depth = kDefaultDepth;
  std::vector<EscalatorNode> nodes;
  bool truncated = false;  // node cap hit while building with truncate_on_cap

  std::size_t node_count() const noexcept { return nodes.size(); }
  /// Indices of the nodes with the given depth, in stored order.
  std::vector<std::size_t> layer(int depth) const;
  /// True when no node is left unexpanded below max_depth and every childless
  /// node is B-universal, i.e. the tree is finished at its bound.
  bool complete() const;

  friend bool operator==(const EscalatorTree&, const EscalatorTree&) = default;
};

struct BuildOptions {
  std::size_t node_cap = kDefaultNodeCap;
  /// Stop at the cap and mark the tree truncated instead of throwing ResourceError.
  bool truncate_on_cap = false;
};

/// All escalations of `node`: appended coefficient in [last, truant] (or [1, truant] at
/// the root) such that the child represents the truant. Sorted by the new coefficient.
std::vector<PolygonalForm> escalate(const EscalatorNode& node, int m, std::uint64_t bound);

EscalatorTree build_tree(int m, int max_depth, std::uint64_t bound, const BuildOptions& options = {});

struct GammaEstimate {
  std::uint64_t value = 0;
  /// True only when the tree is complete; otherwise the value is a lower bound.
  bool empirical = false;

  std::string label() const { return empirical ? "empirical gamma_m" : "lower bound"; }
};

/// Largest finite truant over the nodes with depth <= max_depth.
GammaEstimate gamma_estimate(const EscalatorTree& tree);

/// Depth of the shallowest B-universal node, if any.
std::optional<int> min_leaf_depth(const EscalatorTree& tree);

/// JSON tree document: {"m", "bound", "max_depth", "nodes": [{"coeffs", "truant", "children"}]}.
std::string serialize_tree(const EscalatorTree& tree);
/// Throws ParseError (with a JSON pointer) on malformed documents.
EscalatorTree deserialize_tree(const std::string& document);

}  // namespace mgonal

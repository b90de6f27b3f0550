#include <gtest/gtest.h>

#include <cstdlib>

#include "mgonal/errors.hpp"
#include "mgonal/escalator.hpp"
#include "oracles.hpp"

using namespace mgonal;

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::vector<Coeffs> layer_coeffs(const EscalatorTree& tree, int depth) {
  std::vector<Coeffs> out;
  for (auto i : tree.layer(depth)) out.push_back(tree.nodes[i].coeffs);
  return out;
}

// The quaternary layer shared by every m >= 12.
std::vector<Coeffs> figure_layer() {
  std::vector<Coeffs> out;
  const std::vector<std::pair<Coeffs, std::uint32_t>> parents = {
      {{1, 1, 1}, 4}, {{1, 1, 2}, 5}, {{1, 1, 3}, 6}, {{1, 2, 2}, 6}, {{1, 2, 3}, 7}, {{1, 2, 4}, 8}};
  for (const auto& [prefix, top] : parents) {
    for (auto k = prefix.back(); k <= top; ++k) {
      auto c = prefix;
      c.push_back(k);
      out.push_back(c);
    }
  }
  return out;
}

const EscalatorNode& find(const EscalatorTree& tree, const Coeffs& coeffs) {
  for (const auto& n : tree.nodes) {
    if (n.coeffs == coeffs) return n;
  }
  throw std::out_of_range("node not in tree");
}

}  // namespace

TEST(Escalate, Root) {
  EscalatorTree tree = build_tree(12, 1, 100);
  ASSERT_EQ(tree.node_count(), 2u);
  EXPECT_TRUE(tree.nodes[0].is_root());
  const auto kids = escalate(tree.nodes[0], 12, 100);
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0].to_string(), "[1]");
}

TEST(Escalate, FigureRanges) {
  EscalatorNode node{{1, 1}, Truant::at(3), 2, {}};
  std::vector<std::string> names;
  for (const auto& f : escalate(node, 12, 100)) names.push_back(f.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"[1,1,1]", "[1,1,2]", "[1,1,3]"}));

  EscalatorNode node3{{1, 2, 3}, Truant::at(7), 3, {}};
  names.clear();
  for (const auto& f : escalate(node3, 12, 100)) names.push_back(f.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"[1,2,3,3]", "[1,2,3,4]", "[1,2,3,5]", "[1,2,3,6]", "[1,2,3,7]"}));
}

TEST(Escalate, FilterIsApplied) {
  // For triangular numbers [1] has truant 2 and [1,1] and [1,2] both represent 2.
  EscalatorNode one{{1}, Truant::at(2), 1, {}};
  EXPECT_EQ(escalate(one, 3, 100).size(), 2u);
  // Octagonal [1,1] has truant 3; [1,1,k] for k = 1..3 each reach 3 only through the new slot.
  EscalatorNode pair{{1, 1}, Truant::at(3), 2, {}};
  for (const auto& f : escalate(pair, 8, 100)) EXPECT_TRUE(represented_set(f, 100).contains(3));
}

TEST(BuildTree, SmallShapes) {
  const auto t3 = build_tree(3, 1, 100);
  ASSERT_EQ(t3.node_count(), 2u);
  EXPECT_EQ(t3.nodes[1].coeffs, Coeffs{1});
  EXPECT_EQ(t3.nodes[1].truant, Truant::at(2));

  const auto t20 = build_tree(20, 2, 100);
  EXPECT_EQ(layer_coeffs(t20, 1), (std::vector<Coeffs>{{1}}));
  EXPECT_EQ(layer_coeffs(t20, 2), (std::vector<Coeffs>{{1, 1}, {1, 2}}));
}

TEST(BuildTree, FigureLayerForLargeM) {
  for (int m : {12, 13, 15, 20, 33, 101, 1000}) {
    const auto tree = build_tree(m, 4, 10000);
    EXPECT_EQ(layer_coeffs(tree, 4), figure_layer()) << m;
    EXPECT_EQ(find(tree, {1}).truant, Truant::at(2));
    EXPECT_EQ(find(tree, {1, 1}).truant, Truant::at(3));
    EXPECT_EQ(find(tree, {1, 2}).truant, Truant::at(4));
    EXPECT_EQ(find(tree, {1, 2, 4}).truant, Truant::at(8));
  }
}

TEST(BuildTree, MatchesRecursiveOracle) {
  for (int m : {3, 5, 7, 8, 12}) {
    const std::uint64_t bound = 300;
    const int depth = 3;
    const auto expected = oracle::escalator(m, depth, bound);
    const auto tree = build_tree(m, depth, bound);
    std::map<Coeffs, std::uint64_t> got;
    for (const auto& n : tree.nodes) {
      if (!n.is_root()) got[n.coeffs] = n.truant.is_universal() ? 0 : n.truant.value();
    }
    EXPECT_EQ(got, expected) << m;
  }
}

TEST(BuildTree, StructuralInvariants) {
  const auto tree = build_tree(9, 4, 5000);
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    const auto& n = tree.nodes[i];
    EXPECT_EQ(static_cast<std::size_t>(n.depth), n.coeffs.size());
    if (n.truant.is_universal()) EXPECT_TRUE(n.children.empty());
    if (!n.is_root() && !n.truant.is_universal()) EXPECT_LE(n.children.size(), n.truant.value());
    for (auto c : n.children) {
      const auto& child = tree.nodes[c];
      ASSERT_EQ(child.coeffs.size(), n.coeffs.size() + 1);
      EXPECT_TRUE(std::equal(n.coeffs.begin(), n.coeffs.end(), child.coeffs.begin()));
      const auto low = n.coeffs.empty() ? 1u : n.coeffs.back();
      EXPECT_GE(child.coeffs.back(), low);
      EXPECT_LE(child.coeffs.back(), n.truant.value());
      EXPECT_TRUE(represented_set(child.form(9), 5000).contains(n.truant.value()));
    }
  }
  for (std::size_t i = 1; i < tree.node_count(); ++i) {
    const auto& a = tree.nodes[i - 1].coeffs;
    const auto& b = tree.nodes[i].coeffs;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
}

TEST(BuildTree, NodeCap) {
  EXPECT_THROW(build_tree(5, 10, 100000, {50, false}), ResourceError);
  const auto capped = build_tree(5, 10, 100000, {50, true});
  EXPECT_TRUE(capped.truncated);
  EXPECT_FALSE(capped.complete());
  EXPECT_FALSE(gamma_estimate(capped).empirical);
  EXPECT_EQ(gamma_estimate(capped).label(), "lower bound");
}

TEST(Gamma, KnownValues) {
  const auto g3 = gamma_estimate(build_tree(3, 32, 2000));
  EXPECT_EQ(g3.value, 8u);
  EXPECT_TRUE(g3.empirical);
  EXPECT_EQ(gamma_estimate(build_tree(6, 32, 2000)).value, 8u);
  EXPECT_EQ(gamma_estimate(build_tree(4, 32, 100000)).value, 15u);
  EXPECT_EQ(gamma_estimate(build_tree(8, 32, 100000)).value, 60u);
}

TEST(Gamma, MonotoneInDepth) {
  std::uint64_t previous = 0;
  for (int depth = 1; depth <= 5; ++depth) {
    const auto g = gamma_estimate(build_tree(14, depth, 20000));
    EXPECT_GE(g.value, previous);
    EXPECT_FALSE(g.empirical);
    previous = g.value;
  }
  EXPECT_GE(previous, 10u);
}

TEST(MinLeafDepth, Examples) {
  EXPECT_EQ(min_leaf_depth(build_tree(8, 6, 100000)), 4);
  EXPECT_EQ(min_leaf_depth(build_tree(3, 6, 100000)), 3);
  for (int m : {13, 21, 40, 70}) {
    const auto tree = build_tree(m, 4, 20000);
    const auto d = min_leaf_depth(tree);
    for (int k = 1; k <= 4; ++k) {
      if ((1 << k) < m - 4 && d) EXPECT_GT(*d, k) << m;
    }
  }
  EXPECT_FALSE(min_leaf_depth(build_tree(30, 4, 20000)).has_value());
}

TEST(TreeIo, RoundTrip) {
  const auto tree = build_tree(12, 4, 10000);
  const auto text = serialize_tree(tree);
  const auto back = deserialize_tree(text);
  EXPECT_EQ(back, tree);
  EXPECT_EQ(serialize_tree(back), text);
}

TEST(TreeIo, Deterministic) {
  EXPECT_EQ(serialize_tree(build_tree(7, 3, 5000)), serialize_tree(build_tree(7, 3, 5000)));
  ::setenv("MGONAL_THREADS", "1", 1);
  const auto serial = serialize_tree(build_tree(9, 4, 5000));
  ::setenv("MGONAL_THREADS", "4", 1);
  const auto parallel = serialize_tree(build_tree(9, 4, 5000));
  ::unsetenv("MGONAL_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(TreeIo, ParseErrors) {
  EXPECT_THROW(deserialize_tree("{}"), ParseError);
  EXPECT_THROW(deserialize_tree("not json"), ParseError);
  const std::string bad_child =
      R"({"m":3,"bound":10,"max_depth":1,"nodes":[{"coeffs":[],"truant":1,"children":[5]}]})";
  try {
    deserialize_tree(bad_child);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/nodes/0/children/0");
  }
  const std::string bad_truant =
      R"({"m":3,"bound":10,"max_depth":1,"nodes":[{"coeffs":[],"truant":"many","children":[]}]})";
  EXPECT_THROW(deserialize_tree(bad_truant), ParseError);
}

#include <json.hpp>

#include "mgonal/errors.hpp"
#include "mgonal/escalator.hpp"

namespace mgonal {

namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + "/" + key, "missing field");
  return *it;
}

std::int64_t integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

std::string serialize_tree(const EscalatorTree& tree) {
  Json doc;
  doc["m"] = tree.m;
  doc["bound"] = tree.bound;
  doc["max_depth"] = tree.max_depth;
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    Json node;
    node["coeffs"] = n.coeffs;
    if (n.truant.is_universal()) {
      node["truant"] = "universal";
    } else {
      node["truant"] = n.truant.value();
    }
    node["children"] = n.children;
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(1) + "\n";
}

EscalatorTree deserialize_tree(const std::string& document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const Json::parse_error& e) {
    throw ParseError("", e.what());
  }

  EscalatorTree tree;
  const auto m = integer(field(doc, "", "m"), "/m");
  if (m < 3) throw ParseError("/m", "m must be >= 3");
  tree.m = static_cast<int>(m);
  const auto bound = integer(field(doc, "", "bound"), "/bound");
  if (bound < 1) throw ParseError("/bound", "bound must be positive");
  tree.bound = static_cast<std::uint64_t>(bound);
  const auto depth = integer(field(doc, "", "max_depth"), "/max_depth");
  if (depth < 1) throw ParseError("/max_depth", "max_depth must be positive");
  tree.max_depth = static_cast<int>(depth);

  const auto& nodes = field(doc, "", "nodes");
  if (!nodes.is_array() || nodes.empty()) throw ParseError("/nodes", "expected a nonempty array");

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = "/nodes/" + std::to_string(i);
    EscalatorNode node;
    const auto& coeffs = field(nodes[i], path, "coeffs");
    if (!coeffs.is_array()) throw ParseError(path + "/coeffs", "expected an array");
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const auto a = integer(coeffs[k], path + "/coeffs/" + std::to_string(k));
      if (a < 1 || a > INT32_MAX) throw ParseError(path + "/coeffs/" + std::to_string(k), "coefficient out of range");
      node.coeffs.push_back(static_cast<std::uint32_t>(a));
    }
    node.depth = static_cast<int>(node.coeffs.size());

    const auto& truant = field(nodes[i], path, "truant");
    if (truant.is_string() && truant.get<std::string>() == "universal") {
      node.truant = Truant::universal();
    } else if (truant.is_number_integer() && truant.get<std::int64_t>() >= 1) {
      node.truant = Truant::at(truant.get<std::uint64_t>());
    } else {
      throw ParseError(path + "/truant", "expected a positive integer or \"universal\"");
    }

    const auto& children = field(nodes[i], path, "children");
    if (!children.is_array()) throw ParseError(path + "/children", "expected an array");
    for (std::size_t k = 0; k < children.size(); ++k) {
      const std::string cpath = path + "/children/" + std::to_string(k);
      const auto c = integer(children[k], cpath);
      if (c <= static_cast<std::int64_t>(i) || c >= static_cast<std::int64_t>(nodes.size())) {
        throw ParseError(cpath, "child index out of range");
      }
      node.children.push_back(static_cast<std::size_t>(c));
    }
    tree.nodes.push_back(std::move(node));
  }

  if (!tree.nodes[0].is_root()) throw ParseError("/nodes/0/coeffs", "the first node must be the empty root");
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& parent = tree.nodes[i];
    for (std::size_t k = 0; k < parent.children.size(); ++k) {
      const auto& child = tree.nodes[parent.children[k]];
      const std::string cpath = "/nodes/" + std::to_string(i) + "/children/" + std::to_string(k);
      const bool extends = child.coeffs.size() == parent.coeffs.size() + 1 &&
                           std::equal(parent.coeffs.begin(), parent.coeffs.end(), child.coeffs.begin());
      if (!extends) throw ParseError(cpath, "child does not extend its parent by one coefficient");
      if (parent.truant.is_universal()) throw ParseError(cpath, "a universal node cannot have children");
    }
  }
  return tree;
}

}  // namespace mgonal

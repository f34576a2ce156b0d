#pragma once

#include <string>
#include <vector>

#include "cospec/forest.hpp"

namespace cospec {

/// Center vertices of a tree given as an adjacency list over `vertices`
/// (one or two entries).
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adjacency,
                              const std::vector<int>& vertices);

/// AHU encoding of the subtree hanging below `root`: "(" + sorted child
/// codes + ")".
std::string rooted_tree_code(const std::vector<std::vector<int>>& adjacency, int root);

/// Canonical code of the connected component `vertices`: the minimum rooted
/// code over its centers.
std::string unrooted_tree_code(const std::vector<std::vector<int>>& adjacency,
                               const std::vector<int>& vertices);

/// Canonical code of a forest up to isomorphism, ignoring isolated vertices.
/// Component codes are sorted and joined by '|'; the edgeless forest maps to "".
std::string forest_shape_code(const Forest& forest);

} // namespace cospec

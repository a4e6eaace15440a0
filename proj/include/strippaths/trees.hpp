#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strippaths/path.hpp"

namespace strippaths {

/// Rooted ordered tree. Height is measured in edges.
struct PlaneTree {
    std::vector<PlaneTree> children;

    std::size_t size() const noexcept;
    std::size_t height() const noexcept;

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
};

/// A spine of |groups| + 1 nodes labelled a. Group t holds the lengths (in nodes) of the
/// pendant paths hanging off spine node t; the last spine node is bare.
struct ElenaTree {
    std::vector<std::vector<int>> groups;

    std::size_t size() const noexcept;

    friend bool operator==(const ElenaTree&, const ElenaTree&) = default;
};

/// Malformed tree JSON, or a tree outside the domain of an operation.
class TreeFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tallest plane tree the width-3 correspondences produce.
inline constexpr std::size_t kMaxTreeHeight = 3;

/// U descends to a new rightmost child, D returns to the parent.
/// Requires an even path inside 0..3 that ends at 0; throws DomainError otherwise.
PlaneTree glove_encode(const LatticePath& p);
/// Throws TreeFormatError for trees taller than kMaxTreeHeight.
LatticePath glove_decode(const PlaneTree& t);

/// Requires an even path inside -2..1 that ends at 0. The result has |p|/2 + 2 nodes.
ElenaTree path_to_elena(const LatticePath& p);
LatticePath elena_to_path(const ElenaTree& t);

/// The last spine node becomes the root and the other spine nodes its children. A pendant
/// path of m nodes becomes a grandchild carrying m - 1 leaves.
PlaneTree elena_to_plane(const ElenaTree& t);
/// Rejects the single-node tree and trees taller than kMaxTreeHeight.
ElenaTree plane_to_elena(const PlaneTree& t);

/// A(2n,3|0) -> B(2n,3|0) u B(2n,3|2). The glove path of the associated plane tree has
/// length 2n + 2; its final UD (giving end 0) or DD (giving end 2) is dropped.
LatticePath a3_to_b3(const LatticePath& p);
LatticePath b3_to_a3(const LatticePath& p);

/// A(2n-1,3|-1) -> B(2n,3|2): append U, then a3_to_b3. The appended U makes the last
/// Elena group non-empty, which sends the rightmost leaf to depth >= 2.
LatticePath a3_odd_to_b3(const LatticePath& p);
LatticePath b3_to_a3_odd(const LatticePath& p);

bool has_nonempty_last_group(const ElenaTree& t) noexcept;
/// The rightmost leaf is reached by always taking the last child.
bool rightmost_leaf_depth_at_least_two(const PlaneTree& t) noexcept;

/// All Elena trees with the given number of nodes, in a fixed order.
std::vector<ElenaTree> enumerate_elena_trees(std::size_t size);
/// All plane trees with the given number of nodes and height at most max_height.
std::vector<PlaneTree> enumerate_plane_trees(std::size_t size, std::size_t max_height);

/// Compact unless pretty. Plane trees: {"children":[...]}; Elena trees: {"groups":[[...],...]}.
std::string to_json(const PlaneTree& t, bool pretty = false);
std::string to_json(const ElenaTree& t, bool pretty = false);
PlaneTree plane_tree_from_json(std::string_view text);
ElenaTree elena_tree_from_json(std::string_view text);

}  // namespace strippaths

#pragma once

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace coalcomp {

// Rooted planar binary tree as an immutable value. A leaf has no node; the
// degree is the number of internal nodes, so a tree of degree n has n+1
// leaves (indexed 0..n left to right) and n internal nodes (indexed 1..n in
// infix order).
class BinaryTree {
public:
    BinaryTree() = default;  // leaf

    static BinaryTree leaf() { return BinaryTree(); }
    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool is_leaf() const { return !node_; }
    int degree() const { return node_ ? node_->degree : 0; }
    BinaryTree left() const;
    BinaryTree right() const;

    // Total order: degree first, then recursively (left, right).
    std::strong_ordering operator<=>(const BinaryTree& o) const;
    bool operator==(const BinaryTree& o) const { return (*this <=> o) == 0; }

    std::string text() const;

private:
    struct Node {
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        int degree;
    };
    explicit BinaryTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// The unique tree of degree n with every node on the right branch from the
// root; indexes the divided power basis.
struct Comb {
    int n = 0;
    int degree() const { return n; }
    auto operator<=>(const Comb&) const = default;
};

BinaryTree comb_tree(int n);
bool is_comb(const BinaryTree& t);

// kappa: shift all nodes of a tree to the right branch.
inline Comb kappa(const BinaryTree& t) { return Comb{t.degree()}; }

// Splits t along the path from leaf i to the root; the left part has degree
// i and the right part degree n-i.
std::pair<BinaryTree, BinaryTree> split_tree(const BinaryTree& t, int leaf);

// Iterated splitting at a sorted multiset of leaf indices; k indices always
// produce k+1 trees (repeats insert leaves).
std::vector<BinaryTree> split_tree_multi(const BinaryTree& t, std::vector<int> leaves);

// Replaces leaf i of base by forest[i]; forest size must be degree(base)+1.
BinaryTree graft_trees(const std::vector<BinaryTree>& forest, const BinaryTree& base);

// All of Y_n in canonical order.
const std::vector<BinaryTree>& all_trees(int n);

// All sorted multisets of the given size with entries in 0..max_index.
std::vector<std::vector<int>> sorted_multisets(int max_index, int size);

BinaryTree parse_tree(const std::string& s, std::size_t& pos);
BinaryTree parse_tree(const std::string& s);

// Painted tree view: a shape together with an upper order ideal of painted
// nodes (infix indices 1..n). Used as a cross-check view of the pair form
// carried by the painted-tree algebra.
struct PaintedTree {
    BinaryTree shape;
    std::set<int> painted;
};

bool is_upper_ideal(const BinaryTree& shape, const std::set<int>& painted);

}  // namespace coalcomp

#include "coalcomp/trees.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coalcomp {

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
    int deg = left.degree() + right.degree() + 1;
    return BinaryTree(std::make_shared<const Node>(Node{std::move(left.node_), std::move(right.node_), deg}));
}

BinaryTree BinaryTree::left() const {
    if (!node_) throw std::logic_error("leaf has no children");
    return BinaryTree(node_->left);
}

BinaryTree BinaryTree::right() const {
    if (!node_) throw std::logic_error("leaf has no children");
    return BinaryTree(node_->right);
}

std::strong_ordering BinaryTree::operator<=>(const BinaryTree& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    if (is_leaf()) return std::strong_ordering::equal;
    if (node_ == o.node_) return std::strong_ordering::equal;
    if (auto c = left() <=> o.left(); c != 0) return c;
    return right() <=> o.right();
}

std::string BinaryTree::text() const {
    if (is_leaf()) return ".";
    return "(" + left().text() + right().text() + ")";
}

BinaryTree comb_tree(int n) {
    BinaryTree t;
    for (int i = 0; i < n; ++i) t = BinaryTree::node(BinaryTree::leaf(), t);
    return t;
}

bool is_comb(const BinaryTree& t) {
    BinaryTree cur = t;
    while (!cur.is_leaf()) {
        if (!cur.left().is_leaf()) return false;
        cur = cur.right();
    }
    return true;
}

std::pair<BinaryTree, BinaryTree> split_tree(const BinaryTree& t, int leaf) {
    if (leaf < 0 || leaf > t.degree()) throw std::out_of_range("split_tree: leaf index out of range");
    if (t.is_leaf()) return {BinaryTree::leaf(), BinaryTree::leaf()};
    int dl = t.left().degree();
    if (leaf <= dl) {
        auto [a, b] = split_tree(t.left(), leaf);
        return {std::move(a), BinaryTree::node(std::move(b), t.right())};
    }
    auto [a, b] = split_tree(t.right(), leaf - dl - 1);
    return {BinaryTree::node(t.left(), std::move(a)), std::move(b)};
}

std::vector<BinaryTree> split_tree_multi(const BinaryTree& t, std::vector<int> leaves) {
    for (int i : leaves)
        if (i < 0 || i > t.degree()) throw std::out_of_range("split_tree_multi: leaf index out of range");
    std::sort(leaves.begin(), leaves.end());
    std::vector<BinaryTree> parts(leaves.size() + 1);
    BinaryTree rest = t;
    // Cut from the rightmost index inward; the left remainder of a split at
    // leaf i has degree i, so earlier indices stay valid.
    for (std::size_t k = leaves.size(); k > 0; --k) {
        auto [l, r] = split_tree(rest, leaves[k - 1]);
        parts[k] = std::move(r);
        rest = std::move(l);
    }
    parts[0] = std::move(rest);
    return parts;
}

BinaryTree graft_trees(const std::vector<BinaryTree>& forest, const BinaryTree& base) {
    if (static_cast<int>(forest.size()) != base.degree() + 1)
        throw std::invalid_argument("graft_trees: forest size must be degree(base)+1");
    struct Grafter {
        const std::vector<BinaryTree>& forest;
        std::size_t next = 0;
        BinaryTree run(const BinaryTree& b) {
            if (b.is_leaf()) return forest[next++];
            BinaryTree l = run(b.left());
            BinaryTree r = run(b.right());
            return BinaryTree::node(std::move(l), std::move(r));
        }
    } g{forest};
    return g.run(base);
}

const std::vector<BinaryTree>& all_trees(int n) {
    static std::map<int, std::vector<BinaryTree>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BinaryTree> out;
    if (n == 0) {
        out.push_back(BinaryTree::leaf());
    } else {
        for (int dl = 0; dl < n; ++dl)
            for (const auto& l : all_trees(dl))
                for (const auto& r : all_trees(n - 1 - dl)) out.push_back(BinaryTree::node(l, r));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<std::vector<int>> sorted_multisets(int max_index, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int lo, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= max_index; ++v) {
            cur.push_back(v);
            self(self, v, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, size);
    return out;
}

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

}  // namespace

BinaryTree parse_tree(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw std::invalid_argument("tree literal ended early at position " + std::to_string(pos));
    if (s[pos] == '.') {
        ++pos;
        return BinaryTree::leaf();
    }
    if (s[pos] == '(') {
        ++pos;
        BinaryTree l = parse_tree(s, pos);
        BinaryTree r = parse_tree(s, pos);
        skip_ws(s, pos);
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("expected ')' at position " + std::to_string(pos));
        ++pos;
        return BinaryTree::node(std::move(l), std::move(r));
    }
    throw std::invalid_argument(std::string("unexpected character '") + s[pos] + "' at position " +
                                std::to_string(pos));
}

BinaryTree parse_tree(const std::string& s) {
    std::size_t pos = 0;
    BinaryTree t = parse_tree(s, pos);
    skip_ws(s, pos);
    if (pos != s.size()) throw std::invalid_argument("trailing input at position " + std::to_string(pos));
    return t;
}

bool is_upper_ideal(const BinaryTree& shape, const std::set<int>& painted) {
    for (int i : painted)
        if (i < 1 || i > shape.degree()) return false;
    // A painted node whose parent is unpainted violates the ideal property
    // unless it is the root. Infix index of a subtree root = offset of its
    // leftmost gap + degree(left) + 1.
    struct Walk {
        const std::set<int>& painted;
        bool ok = true;
        void run(const BinaryTree& t, int offset, bool parent_painted, bool is_root) {
            if (t.is_leaf() || !ok) return;
            int idx = offset + t.left().degree() + 1;
            bool here = painted.count(idx) > 0;
            if (here && !parent_painted && !is_root) ok = false;
            run(t.left(), offset, here, false);
            run(t.right(), idx, here, false);
        }
    } w{painted};
    w.run(shape, 0, false, true);
    return w.ok;
}

}  // namespace coalcomp

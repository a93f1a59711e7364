#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <doctest.h>

#include "coalcomp/faces.hpp"
#include "coalcomp/lincomb.hpp"
#include "coalcomp/matrix.hpp"
#include "coalcomp/series.hpp"
#include "coalcomp/trees.hpp"
#include "coalcomp/words.hpp"

using namespace coalcomp;

namespace {

BinaryTree leaf() { return BinaryTree::leaf(); }
BinaryTree node(const BinaryTree& l, const BinaryTree& r) { return BinaryTree::node(l, r); }

}  // namespace

TEST_CASE("tree basics") {
    CHECK(leaf().degree() == 0);
    CHECK(comb_tree(3).degree() == 3);
    CHECK(comb_tree(2) == node(leaf(), node(leaf(), leaf())));
    CHECK(is_comb(comb_tree(5)));
    CHECK_FALSE(is_comb(node(node(leaf(), leaf()), leaf())));
    CHECK(kappa(node(node(leaf(), leaf()), leaf())).n == 2);
    CHECK(kappa(leaf()).n == 0);

    CHECK(all_trees(0).size() == 1);
    CHECK(all_trees(3).size() == 5);
    CHECK(all_trees(4).size() == 14);
    CHECK(all_trees(7).size() == 429);

    CHECK(parse_tree("(.(..))") == comb_tree(2));
    for (const auto& t : all_trees(4)) CHECK(parse_tree(t.text()) == t);
    CHECK_THROWS_AS(parse_tree("(.."), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("x"), std::invalid_argument);
}

TEST_CASE("split_tree") {
    CHECK(split_tree(leaf(), 0) == std::pair{leaf(), leaf()});
    CHECK(split_tree(node(leaf(), leaf()), 0) == std::pair{leaf(), node(leaf(), leaf())});
    for (int i = 0; i <= 3; ++i) {
        auto [l, r] = split_tree(comb_tree(3), i);
        CHECK(l == comb_tree(i));
        CHECK(r == comb_tree(3 - i));
    }
    CHECK_THROWS_AS(split_tree(comb_tree(2), 4), std::out_of_range);

    // total degree is preserved at every leaf of every small tree
    for (int n = 0; n <= 5; ++n)
        for (const auto& t : all_trees(n))
            for (int i = 0; i <= n; ++i) {
                auto [l, r] = split_tree(t, i);
                CHECK(l.degree() + r.degree() == n);
                CHECK(l.degree() == i);
            }
}

TEST_CASE("split_tree_multi") {
    auto t = node(leaf(), leaf());
    CHECK(split_tree_multi(t, {}) == std::vector{t});
    CHECK(split_tree_multi(t, {0, 0}) == std::vector{leaf(), leaf(), t});

    // 10 forests of c_2 into 4 parts, one per multiset of 3 leaves
    auto multisets = sorted_multisets(2, 3);
    CHECK(multisets.size() == 10);
    for (const auto& m : multisets) {
        auto parts = split_tree_multi(comb_tree(2), m);
        CHECK(parts.size() == 4);
        int total = 0;
        for (const auto& p : parts) total += p.degree();
        CHECK(total == 2);
    }
}

TEST_CASE("graft_trees") {
    for (const auto& t : all_trees(3)) {
        std::vector<BinaryTree> trivial(4, leaf());
        CHECK(graft_trees(trivial, t) == t);
    }
    CHECK(graft_trees({comb_tree(0), comb_tree(1)}, comb_tree(1)) == comb_tree(2));
    CHECK(graft_trees({comb_tree(1), comb_tree(0)}, comb_tree(1)) == node(comb_tree(1), leaf()));
    CHECK_THROWS_AS(graft_trees({leaf()}, comb_tree(1)), std::invalid_argument);

    // split then graft across a single node recovers the pieces
    for (int n = 0; n <= 4; ++n)
        for (const auto& a : all_trees(n))
            for (int m = 0; m + n <= 4; ++m)
                for (const auto& b : all_trees(m)) {
                    auto g = graft_trees({a, b}, comb_tree(1));
                    auto [l, r] = split_tree(g, a.degree());
                    CHECK(l == a);
                    CHECK(r == graft_trees({leaf(), b}, comb_tree(1)));
                }
}

TEST_CASE("tau and standardize") {
    CHECK(tau(Word{}) == leaf());
    // the maximum letter sits at the root: its gap index equals the degree
    // of the left subtree plus one
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_perms(n)) {
            auto t = tau(w);
            int max_pos = 0;
            for (int i = 0; i < n; ++i)
                if (w.letters[i] == n) max_pos = i + 1;
            CHECK(t.left().degree() == max_pos - 1);
        }

    // tau is surjective onto Y_n with fiber sizes summing to n!
    for (int n = 0; n <= 5; ++n) {
        std::map<BinaryTree, int> fibers;
        for (const auto& w : all_perms(n)) fibers[tau(w)]++;
        CHECK(fibers.size() == all_trees(n).size());
        int total = 0;
        for (const auto& [t, k] : fibers) total += k;
        CHECK(total == static_cast<int>(all_perms(n).size()));
    }

    CHECK(standardize({2, 5, 1}) == Word{{2, 3, 1}});
    CHECK(standardize({4, 3}) == Word{{2, 1}});
    CHECK(standardize({7}) == Word{{1}});
    CHECK_THROWS_AS(standardize({3, 3}), std::invalid_argument);
}

TEST_CASE("split_word and graft_words") {
    Word w{{2, 5, 1, 4, 3}};
    auto segs = split_word(w, {3});
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == std::vector{2, 5, 1});
    CHECK(segs[1] == std::vector{4, 3});
    CHECK(standardize(segs[0]) == Word{{2, 3, 1}});
    CHECK(standardize(segs[1]) == Word{{2, 1}});

    auto lead = split_word(w, {0, 0});
    CHECK(lead[0].empty());
    CHECK(lead[1].empty());
    CHECK(lead[2] == w.letters);

    CHECK_THROWS_AS(split_word(w, {6}), std::out_of_range);

    Word grafted = graft_words({{3, 2}, {}, {7, 5, 1}, {6}, {4}}, Word{{1, 4, 3, 2}});
    CHECK(grafted == Word{{3, 2, 8, 11, 7, 5, 1, 10, 6, 9, 4}});

    CHECK(graft_words({{}, {}, {}}, Word{{2, 1}}) == Word{{2, 1}});

    // splitting and grafting back across a single gap restores the word
    for (int n = 0; n <= 5; ++n)
        for (const auto& v : all_perms(n))
            for (int i = 0; i <= n; ++i) {
                auto parts = split_word(v, {i});
                CHECK(graft_words(parts, Word{{1}}).letters.size() == v.letters.size() + 1);
            }

    // tau intertwines word splitting with tree splitting
    for (int n = 0; n <= 5; ++n)
        for (const auto& v : all_perms(n))
            for (int i = 0; i <= n; ++i) {
                auto parts = split_word(v, {i});
                auto lt = tau(standardize(parts[0]));
                auto rt = tau(standardize(parts[1]));
                CHECK(std::pair{lt, rt} == split_tree(tau(v), i));
            }
}

TEST_CASE("word parsing") {
    CHECK(parse_word("2,5,1,4,3") == Word{{2, 5, 1, 4, 3}});
    CHECK(parse_word("()") == Word{});
    for (const auto& w : all_perms(4)) CHECK(parse_word(w.text()) == w);
}

TEST_CASE("phi bijection") {
    CHECK(phi(SimplexFace{4, {}}) == Composition{{5}});
    CHECK(phi(SimplexFace{3, {1}}) == Composition{{1, 3}});
    CHECK(phi(SimplexFace{9, {3, 5, 6}}) == Composition{{3, 2, 1, 4}});
    CHECK(phi_inv(Composition{{3, 2, 1, 4}}) == SimplexFace{9, {3, 5, 6}});

    for (int n = 0; n <= 8; ++n) {
        for (const auto& s : all_faces(n)) {
            CHECK(phi(s).degree() == n);
            CHECK(phi_inv(phi(s)) == s);
        }
        for (const auto& c : all_compositions(n)) CHECK(phi(phi_inv(c)) == c);
    }
}

TEST_CASE("enumeration counts") {
    CHECK(all_trees(3).size() == 5);
    CHECK(all_faces(4).size() == 16);
    CHECK(all_perms(0).size() == 1);
    CHECK(all_compositions(3).size() == 8);
}

TEST_CASE("face and composition parsing") {
    CHECK(parse_composition("[1,3]") == Composition{{1, 3}});
    CHECK(parse_face("{1,3}/4") == SimplexFace{4, {1, 3}});
    CHECK(parse_face("{}/0") == SimplexFace{0, {}});
    CHECK_THROWS_AS(parse_composition("[0,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_face("{3,1}/4"), std::invalid_argument);
}

TEST_CASE("linear combinations") {
    using L = LinComb<Comb>;
    L a(Comb{1});
    L b(Comb{2});
    CHECK((a - a).is_zero());
    CHECK(Rational(2) * (a + b) == L(Comb{1}, 2) + L(Comb{2}, 2));
    auto t = tensor(a + b, L(Comb{3}));
    CHECK(t.size() == 2);
    CHECK(t.coeff({Comb{1}, Comb{3}}) == 1);
    CHECK(combination_text(a + b, [](const Comb& c) { return "x" + std::to_string(c.n); }) == "x1 + x2");
    CHECK(combination_text(L(Comb{1}, -1), [](const Comb& c) { return "x" + std::to_string(c.n); }) == "-x1");
    CHECK(combination_text(L{}, [](const Comb&) { return "x"; }) == "0");
}

TEST_CASE("series") {
    CHECK(series_inverse_one_minus({0, 1}, 5) == IntSeries{1, 1, 1, 1, 1, 1});
    CHECK(series_inverse_one_minus({0, 1, 1, 2, 5, 14}, 5) == IntSeries{1, 1, 2, 5, 14, 42});
    CHECK(series_inverse_one_minus({0}, 3) == IntSeries{1, 0, 0, 0});
    CHECK_THROWS_AS(series_inverse_one_minus({1, 1}, 3), std::invalid_argument);

    CHECK(dims_comb_recursion(IntSeries{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 10) ==
          IntSeries{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024});
    IntSeries factorials{1, 1, 2, 6, 24, 120};
    CHECK(dims_comb_recursion(factorials, 5) == IntSeries{1, 2, 5, 15, 54, 235});
    CHECK(dims_tree_recursion(factorials, 5) == IntSeries{1, 2, 6, 22, 92, 428});
    IntSeries cat{1, 1, 2, 5, 14, 42};
    CHECK(dims_comb_recursion(cat, 4) == IntSeries{1, 2, 5, 14, 42});
}

TEST_CASE("exact kernel") {
    // rows: x + y + z = 0 twice, and y - z = 0
    SparseMatrix m(3, 3);
    m.add(0, 0, 1);
    m.add(0, 1, 1);
    m.add(0, 2, 1);
    m.add(1, 0, 2);
    m.add(1, 1, 2);
    m.add(1, 2, 2);
    m.add(2, 1, 1);
    m.add(2, 2, -1);
    CHECK(m.rank() == 2);
    auto k = m.kernel_basis();
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Rational>{2, -1, -1});

    SparseMatrix id2(2, 2);
    id2.add(0, 0, 1);
    id2.add(1, 1, 1);
    CHECK(id2.rank() == 2);
    CHECK(id2.kernel_basis().empty());

    SparseMatrix zero(2, 3);
    CHECK(zero.rank() == 0);
    CHECK(zero.kernel_basis().size() == 3);
}

TEST_CASE("painted tree views") {
    CHECK(is_upper_ideal(comb_tree(2), {1}));
    CHECK(is_upper_ideal(comb_tree(2), {1, 2}));
    CHECK_FALSE(is_upper_ideal(comb_tree(2), {2}));  // parent (root) unpainted
    CHECK(is_upper_ideal(node(node(leaf(), leaf()), leaf()), {2}));
}

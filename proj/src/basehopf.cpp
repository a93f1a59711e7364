#include "coalcomp/basehopf.hpp"

namespace coalcomp {

TensorComb<Word, Word> SSymAlg::coproduct(const Basis& w) const {
    TensorComb<Basis, Basis> out;
    for (int i = 0; i <= w.degree(); ++i) {
        auto segs = split_word(w, {i});
        out.add_term({standardize(segs[0]), standardize(segs[1])}, 1);
    }
    return out;
}

LinComb<Word> SSymAlg::product(const Basis& u, const Basis& v) const {
    LinComb<Basis> out;
    for (const auto& positions : sorted_multisets(u.degree(), v.degree()))
        out.add_term(graft_words(split_word(u, positions), v), 1);
    return out;
}

TensorComb<BinaryTree, BinaryTree> YSymAlg::coproduct(const Basis& t) const {
    TensorComb<Basis, Basis> out;
    for (int i = 0; i <= t.degree(); ++i) out.add_term(split_tree(t, i), 1);
    return out;
}

LinComb<BinaryTree> YSymAlg::product(const Basis& s, const Basis& t) const {
    LinComb<Basis> out;
    for (const auto& leaves : sorted_multisets(s.degree(), t.degree()))
        out.add_term(graft_trees(split_tree_multi(s, leaves), t), 1);
    return out;
}

TensorComb<Comb, Comb> CSymAlg::coproduct(const Basis& c) const {
    TensorComb<Basis, Basis> out;
    for (int i = 0; i <= c.n; ++i) out.add_term({Comb{i}, Comb{c.n - i}}, 1);
    return out;
}

LinComb<Comb> CSymAlg::product(const Basis& a, const Basis& b) const {
    return LinComb<Basis>(Comb{a.n + b.n}, Rational(binomial(a.n + b.n, b.n)));
}

Comb CSymAlg::gamma(const Basis& base, const std::vector<Basis>& forest) const {
    if (static_cast<int>(forest.size()) != base.n + 1)
        throw std::invalid_argument("gamma: arity mismatch");
    int n = base.n;
    for (const auto& c : forest) n += c.n;
    return Comb{n};
}

LinComb<Comb> CSymAlg::product_by_splitting(const Basis& a, const Basis& b) const {
    BinaryTree ta = comb_tree(a.n);
    BinaryTree tb = comb_tree(b.n);
    LinComb<Basis> out;
    for (const auto& leaves : sorted_multisets(a.n, b.n)) {
        BinaryTree g = graft_trees(split_tree_multi(ta, leaves), tb);
        out.add_term(kappa(g), 1);
    }
    return out;
}

LinComb<BinaryTree> tau_hat(const LinComb<Word>& x) {
    return x.map_basis([](const Word& w) { return tau(w); });
}

LinComb<Comb> kappa_hat(const LinComb<BinaryTree>& x) {
    return x.map_basis([](const BinaryTree& t) { return kappa(t); });
}

bool divided_power_iso_check(int N) {
    CSymAlg csym;
    for (int m = 0; m <= N; ++m) {
        if (csym.counit(Comb{m}) != (m == 0 ? 1 : 0)) return false;
        TensorComb<Comb, Comb> expected;
        for (int i = 0; i <= m; ++i) expected.add_term({Comb{i}, Comb{m - i}}, 1);
        if (csym.coproduct(Comb{m}) != expected) return false;
        for (int n = 0; m + n <= N; ++n) {
            LinComb<Comb> want(Comb{m + n}, Rational(binomial(m + n, n)));
            if (csym.product(Comb{m}, Comb{n}) != want) return false;
            if (csym.product_by_splitting(Comb{m}, Comb{n}) != want) return false;
        }
    }
    return true;
}

}  // namespace coalcomp

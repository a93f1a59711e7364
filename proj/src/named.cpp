#include "coalcomp/named.hpp"

#include <stdexcept>

namespace coalcomp {

PSymAlg make_psym() {
    return PSymAlg(YSymAlg{}, YSymAlg{}, [](const BinaryTree& t) { return t; }, "psym");
}

CkSymAlg make_cksym() {
    return CkSymAlg(YSymAlg{}, CSymAlg{}, [](const BinaryTree& t) { return kappa(t); }, "cksym");
}

RightConnection<CSymAlg, CSymAlg> make_cc_right_conn() {
    return RightConnection<CSymAlg, CSymAlg>(CSymAlg{}, CSymAlg{}, [](const Comb& c) { return c; },
                                             "cc.composed");
}

LeftConnection<CSymAlg, CSymAlg> make_cc_left_conn() {
    return LeftConnection<CSymAlg, CSymAlg>(CSymAlg{}, CSymAlg{}, [](const Comb& c) { return c; },
                                            "cc.left.composed");
}

PaintedTree to_painted(const PaintedBasis& e) {
    PaintedTree p;
    p.shape = graft_trees(e.inner, e.outer);
    // Outer node j (infix in the outer tree) lands between the leaves of the
    // grafted inner trees c_{j-1} and c_j.
    int shift = 0;
    for (int j = 1; j <= e.outer.degree(); ++j) {
        shift += e.inner[j - 1].degree();
        p.painted.insert(j + shift);
    }
    return p;
}

namespace {

// Splits (subtree, paint) into its painted root region and hanging
// unpainted subtrees; offset is the infix index of the leftmost gap.
void decompose_painted(const BinaryTree& t, int offset, const std::set<int>& painted, BinaryTree& outer,
                       std::vector<BinaryTree>& inner) {
    if (t.is_leaf() || painted.count(offset + t.left().degree() + 1) == 0) {
        outer = BinaryTree::leaf();
        inner.push_back(t);
        return;
    }
    BinaryTree lo, ro;
    std::vector<BinaryTree> li, ri;
    decompose_painted(t.left(), offset, painted, lo, li);
    decompose_painted(t.right(), offset + t.left().degree() + 1, painted, ro, ri);
    outer = BinaryTree::node(lo, ro);
    inner.insert(inner.end(), li.begin(), li.end());
    inner.insert(inner.end(), ri.begin(), ri.end());
}

}  // namespace

PaintedBasis from_painted(const PaintedTree& p) {
    if (!is_upper_ideal(p.shape, p.painted))
        throw std::invalid_argument("painted set is not an upper order ideal");
    PaintedBasis e;
    decompose_painted(p.shape, 0, p.painted, e.outer, e.inner);
    return e;
}

std::vector<int> composite_weights(const CompositeBasis& e) {
    std::vector<int> w;
    w.reserve(e.inner.size());
    for (const auto& c : e.inner) w.push_back(c.n + 1);
    return w;
}

CompositeBasis composite_from_weights(const std::vector<int>& weights, const BinaryTree& shape) {
    if (static_cast<int>(weights.size()) != shape.degree() + 1)
        throw std::invalid_argument("composite tree needs degree(shape)+1 weights");
    CompositeBasis e{shape, {}};
    e.inner.reserve(weights.size());
    for (int w : weights) {
        if (w < 1) throw std::invalid_argument("composite weights must be positive");
        e.inner.push_back(Comb{w - 1});
    }
    return e;
}

std::string composite_text(const CompositeBasis& e) {
    std::string s;
    auto w = composite_weights(e);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    if (e.outer == comb_tree(e.outer.degree())) return s;
    return s + "@" + e.outer.text();
}

CompositionBasis cc_pack(const Composition& c) {
    CompositionBasis e{Comb{static_cast<int>(c.parts.size()) - 1}, {}};
    e.inner.reserve(c.parts.size());
    for (int p : c.parts) e.inner.push_back(Comb{p - 1});
    return e;
}

Composition cc_unpack(const CompositionBasis& e) {
    Composition c;
    c.parts.reserve(e.inner.size());
    for (const auto& i : e.inner) c.parts.push_back(i.n + 1);
    return c;
}

TensorComb<Composition, Composition> cc_coproduct(const Composition& a) {
    TensorComb<Composition, Composition> out;
    int k = static_cast<int>(a.parts.size());
    for (int j = 1; j <= k; ++j)
        for (int r = 1; r <= a.parts[j - 1]; ++r) {
            Composition left{std::vector<int>(a.parts.begin(), a.parts.begin() + (j - 1))};
            left.parts.push_back(r);
            Composition right{{a.parts[j - 1] - r + 1}};
            right.parts.insert(right.parts.end(), a.parts.begin() + j, a.parts.end());
            out.add_term({std::move(left), std::move(right)}, 1);
        }
    return out;
}

LinComb<Composition> CcRightAlg::product(const Basis& a, const Basis& b) const {
    return conn_.product(cc_pack(a), cc_pack(b)).map_basis(cc_unpack);
}

LinComb<Composition> CcRightAlg::star(const Basis& b, const Comb& d) const {
    return conn_.star(cc_pack(b), d).map_basis(cc_unpack);
}

TensorComb<Composition, Comb> CcRightAlg::coaction(const Basis& b) const {
    TensorComb<Basis, Comb> out;
    for (const auto& [pair, c] : conn_.coaction(cc_pack(b)))
        out.add_term({cc_unpack(pair.first), pair.second}, c);
    return out;
}

LinComb<Composition> CcLeftAlg::product(const Basis& a, const Basis& b) const {
    return conn_.product(cc_pack(a), cc_pack(b)).map_basis(cc_unpack);
}

LinComb<Composition> CcLeftAlg::star(const Comb& d, const Basis& b) const {
    return conn_.star(d, cc_pack(b)).map_basis(cc_unpack);
}

TensorComb<Comb, Composition> CcLeftAlg::coaction(const Basis& b) const {
    TensorComb<Comb, Basis> out;
    for (const auto& [pair, c] : conn_.coaction(cc_pack(b)))
        out.add_term({pair.first, cc_unpack(pair.second)}, c);
    return out;
}

TensorComb<SimplexFace, SimplexFace> DeltaSymAlg::coproduct(const Basis& s) const {
    TensorComb<Basis, Basis> out;
    for (int i = 0; i <= s.n; ++i) {
        SimplexFace left{i, {}};
        SimplexFace right{s.n - i, {}};
        for (int x : s.subset) {
            if (x <= i)
                left.subset.push_back(x);
            else
                right.subset.push_back(x - i);
        }
        out.add_term({std::move(left), std::move(right)}, 1);
    }
    return out;
}

LinComb<SimplexFace> DeltaSymAlg::product(const Basis& s, const Basis& t) const {
    LinComb<Composition> p = swap_ ? cc_.product(phi(t), phi(s)) : cc_.product(phi(s), phi(t));
    return p.map_basis(phi_inv);
}

LinComb<SimplexFace> DeltaSymAlg::star(const Comb& d, const Basis& s) const {
    return cc_.star(phi(s), d).map_basis(phi_inv);
}

TensorComb<Comb, SimplexFace> DeltaSymAlg::coaction(const Basis& s) const {
    TensorComb<Comb, Basis> out;
    for (const auto& [pair, c] : coproduct(s)) out.add_term({f(pair.first), pair.second}, c);
    return out;
}

}  // namespace coalcomp

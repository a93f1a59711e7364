#pragma once

#include <string>
#include <vector>

#include "coalcomp/basehopf.hpp"
#include "coalcomp/faces.hpp"
#include "coalcomp/operad.hpp"

namespace coalcomp {

using PaintedBasis = Composed<BinaryTree, BinaryTree>;     // painted trees
using CompositeBasis = Composed<BinaryTree, Comb>;         // composite (weighted) trees
using CompositionBasis = Composed<Comb, Comb>;             // combs over combs

using PSymAlg = RightConnection<YSymAlg, YSymAlg>;
using CkSymAlg = LeftConnection<YSymAlg, CSymAlg>;

// PSym = YSym o YSym with the identity connection onto YSym: painted trees,
// right identity, coaction that forgets the paint of the second leg.
PSymAlg make_psym();

// ckSym = YSym o CSym with the connection g onto CSym sending a composite
// tree to the comb with the same node count; left module action.
CkSymAlg make_cksym();

RightConnection<CSymAlg, CSymAlg> make_cc_right_conn();
LeftConnection<CSymAlg, CSymAlg> make_cc_left_conn();

// Painted-tree view of the pair form: the outer tree is the painted region
// at the root, the inner forest hangs below it.
PaintedTree to_painted(const PaintedBasis& e);
PaintedBasis from_painted(const PaintedTree& p);

// Weighted view of composite trees: shape of degree m plus m+1 positive
// leaf weights; weight = inner comb degree + 1.
std::vector<int> composite_weights(const CompositeBasis& e);
CompositeBasis composite_from_weights(const std::vector<int>& weights, const BinaryTree& shape);
std::string composite_text(const CompositeBasis& e);

CompositionBasis cc_pack(const Composition& c);
Composition cc_unpack(const CompositionBasis& e);

// Coproduct of composition trees: for each degree split there is exactly one
// splitting (a_1,..,a_{j-1},r) (x) (s,a_{j+1},..,a_k) with r+s = a_j+1.
TensorComb<Composition, Composition> cc_coproduct(const Composition& a);

// CSym o CSym with the right CSym action: one-sided product by splitting the
// left factor and concatenating the parts over the image comb.
class CcRightAlg {
public:
    using Basis = Composition;

    int degree(const Basis& b) const { return b.degree(); }
    Rational counit(const Basis& b) const { return b.degree() == 0 ? 1 : 0; }
    TensorComb<Basis, Basis> coproduct(const Basis& b) const { return cc_coproduct(b); }
    std::vector<Basis> basis(int n) const { return all_compositions(n); }
    Basis unit() const { return Composition{{1}}; }
    UnitSide unit_side() const { return UnitSide::right; }
    std::string name() const { return "cc"; }
    std::string text(const Basis& b) const { return b.text(); }

    LinComb<Basis> product(const Basis& a, const Basis& b) const;

    Comb f(const Basis& b) const { return Comb{b.degree()}; }
    LinComb<Basis> star(const Basis& b, const Comb& d) const;
    TensorComb<Basis, Comb> coaction(const Basis& b) const;
    const CSymAlg& operad() const { return operad_; }

private:
    CSymAlg operad_;
    RightConnection<CSymAlg, CSymAlg> conn_ = make_cc_right_conn();
};

// CSym o CSym with the left CSym action: the acting comb is split across the
// inner leaves and absorbed into the parts.
class CcLeftAlg {
public:
    using Basis = Composition;

    int degree(const Basis& b) const { return b.degree(); }
    Rational counit(const Basis& b) const { return b.degree() == 0 ? 1 : 0; }
    TensorComb<Basis, Basis> coproduct(const Basis& b) const { return cc_coproduct(b); }
    std::vector<Basis> basis(int n) const { return all_compositions(n); }
    Basis unit() const { return Composition{{1}}; }
    UnitSide unit_side() const { return UnitSide::left; }
    std::string name() const { return "cc.left"; }
    std::string text(const Basis& b) const { return b.text(); }

    LinComb<Basis> product(const Basis& a, const Basis& b) const;

    Comb f(const Basis& b) const { return Comb{b.degree()}; }
    LinComb<Basis> star(const Comb& d, const Basis& b) const;
    TensorComb<Comb, Basis> coaction(const Basis& b) const;
    const CSymAlg& operad() const { return operad_; }

private:
    CSymAlg operad_;
    LeftConnection<CSymAlg, CSymAlg> conn_ = make_cc_left_conn();
};

// One-sided Hopf algebra on simplex faces. The coproduct is native on
// subsets; the product transports through the bijection phi to combs over
// combs. The default (swap) variant makes phi an anti-isomorphism of
// one-sided algebras, so the unit acts as a left identity.
class DeltaSymAlg {
public:
    using Basis = SimplexFace;

    explicit DeltaSymAlg(bool swap_variant = true) : swap_(swap_variant) {}

    int degree(const Basis& s) const { return s.n; }
    Rational counit(const Basis& s) const { return s.n == 0 ? 1 : 0; }
    TensorComb<Basis, Basis> coproduct(const Basis& s) const;
    std::vector<Basis> basis(int n) const { return all_faces(n); }
    Basis unit() const { return SimplexFace{0, {}}; }
    UnitSide unit_side() const { return swap_ ? UnitSide::left : UnitSide::right; }
    std::string name() const { return swap_ ? "deltasym" : "deltasym.noswap"; }
    std::string text(const Basis& s) const { return s.text(); }

    LinComb<Basis> product(const Basis& s, const Basis& t) const;

    // Connection surface (swap variant, left flavor).
    Comb f(const Basis& s) const { return Comb{s.n}; }
    LinComb<Basis> star(const Comb& d, const Basis& s) const;
    TensorComb<Comb, Basis> coaction(const Basis& s) const;
    const CSymAlg& operad() const { return operad_; }

private:
    bool swap_;
    CSymAlg operad_;
    CcRightAlg cc_;
};

}  // namespace coalcomp

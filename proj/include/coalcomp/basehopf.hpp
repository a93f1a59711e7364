#pragma once

#include <string>
#include <vector>

#include "coalcomp/algebra.hpp"
#include "coalcomp/trees.hpp"
#include "coalcomp/words.hpp"

namespace coalcomp {

// The Malvenuto-Reutenauer Hopf algebra of permutations in the fundamental
// basis. The product splits the left factor at a multiset of leaves and
// grafts the labeled forest onto the shifted right factor; the coproduct is
// deconcatenation with standardized parts.
struct SSymAlg {
    using Basis = Word;

    int degree(const Basis& w) const { return w.degree(); }
    Rational counit(const Basis& w) const { return w.degree() == 0 ? 1 : 0; }
    Basis unit() const { return Word{}; }
    UnitSide unit_side() const { return UnitSide::two_sided; }

    TensorComb<Basis, Basis> coproduct(const Basis& w) const;
    LinComb<Basis> product(const Basis& u, const Basis& v) const;
    std::vector<Basis> basis(int n) const { return all_perms(n); }
    std::string name() const { return "ssym"; }
    std::string text(const Basis& w) const { return w.text(); }
};

// The Loday-Ronco Hopf algebra of planar binary trees.
struct YSymAlg {
    using Basis = BinaryTree;

    int degree(const Basis& t) const { return t.degree(); }
    Rational counit(const Basis& t) const { return t.degree() == 0 ? 1 : 0; }
    Basis unit() const { return BinaryTree::leaf(); }
    UnitSide unit_side() const { return UnitSide::two_sided; }

    TensorComb<Basis, Basis> coproduct(const Basis& t) const;
    LinComb<Basis> product(const Basis& s, const Basis& t) const;
    std::vector<Basis> basis(int n) const { return all_trees(n); }
    std::string name() const { return "ysym"; }
    std::string text(const Basis& t) const { return t.text(); }

    // Operad composition: graft the forest onto the leaves of the base.
    Basis gamma(const Basis& base, const std::vector<Basis>& forest) const {
        return graft_trees(forest, base);
    }
};

// The divided power Hopf algebra on combs: x^(m) x^(n) = C(m+n,n) x^(m+n).
struct CSymAlg {
    using Basis = Comb;

    int degree(const Basis& c) const { return c.n; }
    Rational counit(const Basis& c) const { return c.n == 0 ? 1 : 0; }
    Basis unit() const { return Comb{0}; }
    UnitSide unit_side() const { return UnitSide::two_sided; }

    TensorComb<Basis, Basis> coproduct(const Basis& c) const;
    LinComb<Basis> product(const Basis& a, const Basis& b) const;
    std::vector<Basis> basis(int n) const { return {Comb{n}}; }
    std::string name() const { return "csym"; }
    std::string text(const Basis& c) const { return "x^(" + std::to_string(c.n) + ")"; }

    // Graft, then comb: only the degrees matter.
    Basis gamma(const Basis& base, const std::vector<Basis>& forest) const;

    // The split-graft-comb definition of the product, retained as a
    // cross-check of the binomial structure constant.
    LinComb<Basis> product_by_splitting(const Basis& a, const Basis& b) const;
};

// Linear extensions of the index maps tau and kappa; both are surjective
// Hopf algebra maps.
LinComb<BinaryTree> tau_hat(const LinComb<Word>& x);
LinComb<Comb> kappa_hat(const LinComb<BinaryTree>& x);

// True iff CSym satisfies the divided power axioms through degree N.
bool divided_power_iso_check(int N);

}  // namespace coalcomp

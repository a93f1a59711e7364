#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coalcomp/compose.hpp"

namespace coalcomp {

// Product induced on a graded Hopf operad by its composition map:
// a.b = gamma(b; Delta^(n) a) for b of degree n. Agrees with the base
// products of YSym and CSym.
template <HopfOperad D>
LinComb<typename D::Basis> operad_product(const D& alg, const typename D::Basis& a,
                                          const typename D::Basis& b) {
    LinComb<typename D::Basis> out;
    for (const auto& [tuple, c] : iterated_coproduct(alg, a, alg.degree(b)))
        out.add_term(alg.gamma(b, tuple), c);
    return out;
}

// Connection with the operad as the outer factor of E = D o C. The module
// action places the split pieces of an E-element over the acting D-element:
// e * d = sum (gamma(d; outer parts); concatenated inner forests), summing
// over Delta^(|d|) e. The induced one-sided product is e.e' = e * f(e') with
// f(d; c_0..c_n) = gamma(d; lambda c_0, ..., lambda c_n), so the unit is a
// right identity.
template <HopfOperad D, GradedCoalgebra C>
class RightConnection {
public:
    using E = ComposedCoalgebra<D, C>;
    using Basis = typename E::Basis;
    using OperadBasis = typename D::Basis;
    using Lambda = std::function<OperadBasis(const typename C::Basis&)>;

    RightConnection(D d, C c, Lambda lambda, std::string name)
        : e_(std::move(d), std::move(c)), lambda_(std::move(lambda)), name_(std::move(name)) {}

    const E& composed() const { return e_; }
    const D& operad() const { return e_.outer_alg(); }

    int degree(const Basis& b) const { return b.degree(); }
    Rational counit(const Basis& b) const { return e_.counit(b); }
    TensorComb<Basis, Basis> coproduct(const Basis& b) const { return e_.coproduct(b); }
    std::vector<Basis> basis(int n) const { return e_.basis(n); }
    Basis unit() const { return e_.unit(); }
    UnitSide unit_side() const { return UnitSide::right; }
    std::string name() const { return name_; }
    std::string text(const Basis& b) const { return e_.text(b); }

    OperadBasis f(const Basis& b) const {
        std::vector<OperadBasis> forest;
        forest.reserve(b.inner.size());
        for (const auto& c : b.inner) forest.push_back(lambda_(c));
        return operad().gamma(b.outer, forest);
    }

    LinComb<Basis> star(const Basis& b, const OperadBasis& d) const {
        LinComb<Basis> out;
        int n = operad().degree(d);
        for (const auto& [parts, c] : iterated_coproduct(e_, b, n)) {
            std::vector<OperadBasis> outers;
            outers.reserve(parts.size());
            Basis assembled;
            for (const auto& p : parts) outers.push_back(p.outer);
            assembled.outer = operad().gamma(d, outers);
            for (const auto& p : parts)
                assembled.inner.insert(assembled.inner.end(), p.inner.begin(), p.inner.end());
            out.add_term(std::move(assembled), c);
        }
        return out;
    }

    LinComb<Basis> star_lin(const LinComb<Basis>& x, const LinComb<OperadBasis>& y) const {
        LinComb<Basis> out;
        for (const auto& [b, cb] : x)
            for (const auto& [d, cd] : y) {
                auto t = star(b, d);
                t *= cb * cd;
                out += t;
            }
        return out;
    }

    LinComb<Basis> product(const Basis& x, const Basis& y) const { return star(x, f(y)); }

    // rho = (id (x) f) Delta_E, a right coaction in E (x) D.
    TensorComb<Basis, OperadBasis> coaction(const Basis& b) const {
        TensorComb<Basis, OperadBasis> out;
        for (const auto& [pair, c] : e_.coproduct(b)) out.add_term({pair.first, f(pair.second)}, c);
        return out;
    }

private:
    E e_;
    Lambda lambda_;
    std::string name_;
};

// Connection with the operad as the inner factor of E = D o C. The module
// action splits the acting element across the leaves of the inner forest:
// d * e distributes Delta^(|e|) d into the inner slots through gamma. The
// induced product is e.e' = f(e) * e' with f(d; c_0..c_n) =
// gamma(lambda d; c_0, ..., c_n), so the unit is a left identity.
template <GradedCoalgebra D, HopfOperad C>
class LeftConnection {
public:
    using E = ComposedCoalgebra<D, C>;
    using Basis = typename E::Basis;
    using OperadBasis = typename C::Basis;
    using Lambda = std::function<OperadBasis(const typename D::Basis&)>;

    LeftConnection(D d, C c, Lambda lambda, std::string name)
        : e_(std::move(d), std::move(c)), lambda_(std::move(lambda)), name_(std::move(name)) {}

    const E& composed() const { return e_; }
    const C& operad() const { return e_.inner_alg(); }

    int degree(const Basis& b) const { return b.degree(); }
    Rational counit(const Basis& b) const { return e_.counit(b); }
    TensorComb<Basis, Basis> coproduct(const Basis& b) const { return e_.coproduct(b); }
    std::vector<Basis> basis(int n) const { return e_.basis(n); }
    Basis unit() const { return e_.unit(); }
    UnitSide unit_side() const { return UnitSide::left; }
    std::string name() const { return name_; }
    std::string text(const Basis& b) const { return e_.text(b); }

    OperadBasis f(const Basis& b) const { return operad().gamma(lambda_(b.outer), b.inner); }

    // An E-element of degree n has exactly n+1 inner leaves; slot i absorbs
    // |c_i|+1 consecutive pieces of the split operad element.
    LinComb<Basis> star(const OperadBasis& d, const Basis& b) const {
        LinComb<Basis> out;
        for (const auto& [parts, c] : iterated_coproduct(operad(), d, b.degree())) {
            Basis assembled{b.outer, {}};
            assembled.inner.reserve(b.inner.size());
            std::size_t pos = 0;
            for (const auto& ci : b.inner) {
                std::size_t take = static_cast<std::size_t>(operad().degree(ci)) + 1;
                std::vector<OperadBasis> slice(parts.begin() + pos, parts.begin() + pos + take);
                pos += take;
                assembled.inner.push_back(operad().gamma(ci, slice));
            }
            out.add_term(std::move(assembled), c);
        }
        return out;
    }

    LinComb<Basis> star_lin(const LinComb<OperadBasis>& x, const LinComb<Basis>& y) const {
        LinComb<Basis> out;
        for (const auto& [d, cd] : x)
            for (const auto& [b, cb] : y) {
                auto t = star(d, b);
                t *= cd * cb;
                out += t;
            }
        return out;
    }

    LinComb<Basis> product(const Basis& x, const Basis& y) const { return star(f(x), y); }

    // rho = (f (x) id) Delta_E, a left coaction in D (x) E.
    TensorComb<OperadBasis, Basis> coaction(const Basis& b) const {
        TensorComb<OperadBasis, Basis> out;
        for (const auto& [pair, c] : e_.coproduct(b)) out.add_term({f(pair.first), pair.second}, c);
        return out;
    }

private:
    E e_;
    Lambda lambda_;
    std::string name_;
};

template <class Conn>
LinComb<typename Conn::Basis> one_sided_antipode(const Conn& conn, const typename Conn::Basis& b) {
    return antipode_connected(conn, b);
}

}  // namespace coalcomp

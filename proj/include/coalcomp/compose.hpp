#pragma once

#include <compare>
#include <string>
#include <vector>

#include "coalcomp/algebra.hpp"

namespace coalcomp {

// Indecomposable tensor (d; c_0,...,c_n) indexing the basis of D o C:
// an outer element d of degree n carrying n+1 inner elements.
template <class DB, class CB>
struct Composed {
    DB outer;
    std::vector<CB> inner;

    int degree() const {
        int n = outer.degree();
        for (const auto& c : inner) n += c.degree();
        return n;
    }

    std::strong_ordering operator<=>(const Composed& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = outer <=> o.outer; c != 0) return c;
        return inner <=> o.inner;
    }
    bool operator==(const Composed& o) const { return (*this <=> o) == 0; }
};

// The composition D o C of two graded coalgebras. Connected whenever both
// factors are, with unique degree-0 element (1_D; 1_C).
template <GradedCoalgebra D, GradedCoalgebra C>
class ComposedCoalgebra {
public:
    using Outer = D;
    using Inner = C;
    using Basis = Composed<typename D::Basis, typename C::Basis>;

    ComposedCoalgebra() = default;
    ComposedCoalgebra(D d, C c) : d_(std::move(d)), c_(std::move(c)) {}

    const D& outer_alg() const { return d_; }
    const C& inner_alg() const { return c_; }

    int degree(const Basis& e) const { return e.degree(); }

    Rational counit(const Basis& e) const {
        Rational r = d_.counit(e.outer);
        for (const auto& c : e.inner) r *= c_.counit(c);
        return r;
    }

    Basis unit() const { return Basis{d_.basis(0).at(0), {c_.basis(0).at(0)}}; }

    // The compositional coproduct: for each term d' (x) d'' of Delta_D with
    // |d'| = i, split the i-th inner slot and distribute the rest.
    TensorComb<Basis, Basis> coproduct(const Basis& e) const {
        int n = d_.degree(e.outer);
        TensorComb<Basis, Basis> out;
        for (const auto& [dpair, cd] : d_.coproduct(e.outer)) {
            int i = d_.degree(dpair.first);
            if (i + d_.degree(dpair.second) != n)
                throw std::logic_error("composed coproduct: outer coproduct is not grade-compatible");
            for (const auto& [cpair, cc] : c_.coproduct(e.inner[i])) {
                Basis lhs{dpair.first, {e.inner.begin(), e.inner.begin() + i}};
                lhs.inner.push_back(cpair.first);
                Basis rhs{dpair.second, {cpair.second}};
                rhs.inner.insert(rhs.inner.end(), e.inner.begin() + i + 1, e.inner.end());
                out.add_term({std::move(lhs), std::move(rhs)}, cd * cc);
            }
        }
        return out;
    }

    std::vector<Basis> basis(int n) const {
        std::vector<Basis> out;
        for (int m = 0; m <= n; ++m) {
            auto outer = d_.basis(m);
            if (outer.empty()) continue;
            std::vector<std::vector<typename C::Basis>> tuples;
            std::vector<typename C::Basis> cur;
            inner_tuples(m + 1, n - m, cur, tuples);
            for (const auto& d : outer)
                for (const auto& t : tuples) out.push_back(Basis{d, t});
        }
        return out;
    }

    std::string name() const { return d_.name() + "." + c_.name(); }

    std::string text(const Basis& e) const {
        std::string s = "{";
        for (std::size_t i = 0; i < e.inner.size(); ++i) {
            if (i) s += "|";
            s += c_.text(e.inner[i]);
        }
        return s + "}/" + d_.text(e.outer);
    }

private:
    void inner_tuples(int slots, int total, std::vector<typename C::Basis>& cur,
                      std::vector<std::vector<typename C::Basis>>& out) const {
        if (slots == 1) {
            for (const auto& c : c_.basis(total)) {
                cur.push_back(c);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int k = 0; k <= total; ++k)
            for (const auto& c : c_.basis(k)) {
                cur.push_back(c);
                inner_tuples(slots - 1, total - k, cur, out);
                cur.pop_back();
            }
    }

    D d_;
    C c_;
};

// (psi o phi)(d; c_0..c_n) = (psi d; phi c_0, ..., phi c_n) on basis
// elements; a morphism of graded coalgebras whenever psi and phi are.
template <class DB1, class CB1, class PsiFn, class PhiFn>
auto composed_morphism(const Composed<DB1, CB1>& e, PsiFn&& psi, PhiFn&& phi) {
    using DB2 = decltype(psi(e.outer));
    using CB2 = decltype(phi(e.inner.front()));
    Composed<DB2, CB2> out{psi(e.outer), {}};
    out.inner.reserve(e.inner.size());
    for (const auto& c : e.inner) out.inner.push_back(phi(c));
    return out;
}

template <GradedCoalgebra C>
void middle_tuples(const C& c_alg, int slots, int total, std::vector<typename C::Basis>& cur,
                   std::vector<std::vector<typename C::Basis>>& out) {
    if (slots == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int k = 0; k <= total; ++k)
        for (const auto& c : c_alg.basis(k)) {
            cur.push_back(c);
            middle_tuples(c_alg, slots - 1, total - k, cur, out);
            cur.pop_back();
        }
}

// Spanning set for the primitive elements of a cofree composition:
// (delta; 1, c_1, ..., c_{m-1}, 1) for primitive delta of outer degree m with
// arbitrary inner basis elements in the middle slots, together with
// (1_D; gamma) for primitive gamma of the inner factor. May be linearly
// dependent; rank computation dedupes.
template <GradedCoalgebra D, GradedCoalgebra C>
std::vector<LinComb<typename ComposedCoalgebra<D, C>::Basis>> primitive_spanning_set(
    const ComposedCoalgebra<D, C>& E, int n,
    const std::vector<std::vector<LinComb<typename C::Basis>>>& inner_primitives,
    const std::vector<std::vector<LinComb<typename D::Basis>>>& outer_primitives) {
    using B = typename ComposedCoalgebra<D, C>::Basis;
    std::vector<LinComb<B>> out;
    const auto inner_one = E.inner_alg().basis(0).at(0);
    const auto outer_one = E.outer_alg().basis(0).at(0);

    // (1_D; gamma)
    if (n < static_cast<int>(inner_primitives.size()))
        for (const auto& gamma : inner_primitives[n])
            out.push_back(gamma.map([&](const typename C::Basis& c) {
                return LinComb<B>(B{outer_one, {c}});
            }));

    // (delta; 1, c_1 .. c_{m-1}, 1)
    int max_m = std::min<int>(n, static_cast<int>(outer_primitives.size()) - 1);
    for (int m = 1; m <= max_m; ++m) {
        if (outer_primitives[m].empty()) continue;
        std::vector<std::vector<typename C::Basis>> middles;
        std::vector<typename C::Basis> cur;
        middle_tuples(E.inner_alg(), m - 1, n - m, cur, middles);
        for (const auto& delta : outer_primitives[m])
            for (const auto& mid : middles)
                out.push_back(delta.map([&](const typename D::Basis& d) {
                    B b{d, {inner_one}};
                    b.inner.insert(b.inner.end(), mid.begin(), mid.end());
                    b.inner.push_back(inner_one);
                    return LinComb<B>(std::move(b));
                }));
    }
    return out;
}

}  // namespace coalcomp

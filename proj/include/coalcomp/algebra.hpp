#pragma once

#include <concepts>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalcomp/lincomb.hpp"
#include "coalcomp/matrix.hpp"
#include "coalcomp/series.hpp"

namespace coalcomp {

template <class A>
concept GradedCoalgebra = requires(const A& a, const typename A::Basis& b, int n) {
    { a.degree(b) } -> std::convertible_to<int>;
    { a.counit(b) } -> std::convertible_to<Rational>;
    { a.coproduct(b) } -> std::same_as<TensorComb<typename A::Basis, typename A::Basis>>;
    { a.basis(n) } -> std::same_as<std::vector<typename A::Basis>>;
    { a.name() } -> std::convertible_to<std::string>;
    { a.text(b) } -> std::convertible_to<std::string>;
};

// Which side the unit is an identity on. Connections induced by a right
// module action have a right identity, and symmetrically.
enum class UnitSide { two_sided, right, left };

template <class A>
concept GradedConnectedHopf = GradedCoalgebra<A> &&
    requires(const A& a, const typename A::Basis& b) {
        { a.unit() } -> std::same_as<typename A::Basis>;
        { a.product(b, b) } -> std::same_as<LinComb<typename A::Basis>>;
        { a.unit_side() } -> std::same_as<UnitSide>;
    };

template <class A>
concept HopfOperad = GradedConnectedHopf<A> &&
    requires(const A& a, const typename A::Basis& b, const std::vector<typename A::Basis>& forest) {
        { a.gamma(b, forest) } -> std::same_as<typename A::Basis>;
    };

template <GradedConnectedHopf A>
LinComb<typename A::Basis> product_lin(const A& alg, const LinComb<typename A::Basis>& x,
                                       const LinComb<typename A::Basis>& y) {
    LinComb<typename A::Basis> out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            auto p = alg.product(a, b);
            p *= ca * cb;
            out += p;
        }
    return out;
}

// Delta(b) - b(x)1 - 1(x)b; only defined in positive degree, supported on
// pairs of strictly positive degrees.
template <GradedCoalgebra A>
TensorComb<typename A::Basis, typename A::Basis> reduced_coproduct(const A& alg, const typename A::Basis& b) {
    if (alg.degree(b) == 0) throw std::invalid_argument("reduced_coproduct: degree-0 input");
    auto one = alg.basis(0).at(0);
    auto out = alg.coproduct(b);
    out.add_term({b, one}, Rational(-1));
    out.add_term({one, b}, Rational(-1));
    return out;
}

// Iterated coproduct Delta^(k), with Delta^(0) = id and
// Delta^(k) = (Delta (x) id^(k-1)) o Delta^(k-1); returns (k+1)-tuples.
template <GradedCoalgebra A>
LinComb<std::vector<typename A::Basis>> iterated_coproduct(const A& alg, const typename A::Basis& b, int k) {
    using B = typename A::Basis;
    LinComb<std::vector<B>> cur(std::vector<B>{b});
    for (int step = 0; step < k; ++step) {
        LinComb<std::vector<B>> next;
        for (const auto& [tuple, c] : cur) {
            for (const auto& [pair, cc] : alg.coproduct(tuple.front())) {
                std::vector<B> t;
                t.reserve(tuple.size() + 1);
                t.push_back(pair.first);
                t.push_back(pair.second);
                t.insert(t.end(), tuple.begin() + 1, tuple.end());
                next.add_term(std::move(t), c * cc);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// Matrix of the reduced coproduct on the degree-n component, with columns
// indexed by the given basis enumeration.
template <GradedCoalgebra A>
SparseMatrix reduced_coproduct_matrix(const A& alg, const std::vector<typename A::Basis>& basis_n) {
    using B = typename A::Basis;
    std::map<std::pair<B, B>, int> row_of;
    std::vector<TensorComb<B, B>> reduced;
    reduced.reserve(basis_n.size());
    for (const auto& b : basis_n) {
        reduced.push_back(reduced_coproduct(alg, b));
        for (const auto& [pair, c] : reduced.back()) row_of.emplace(pair, 0);
    }
    int r = 0;
    for (auto& [pair, idx] : row_of) idx = r++;
    SparseMatrix m(r, static_cast<int>(basis_n.size()));
    for (std::size_t col = 0; col < basis_n.size(); ++col)
        for (const auto& [pair, c] : reduced[col]) m.add(row_of.at(pair), static_cast<int>(col), c);
    return m;
}

// Dimension of the space of primitive elements in degree n, by exact kernel
// rank of the reduced coproduct.
template <GradedCoalgebra A>
int primitive_dimension(const A& alg, int n) {
    if (n < 1) throw std::invalid_argument("primitive_dimension: degree must be >= 1");
    auto basis_n = alg.basis(n);
    if (basis_n.empty()) return 0;
    SparseMatrix m = reduced_coproduct_matrix(alg, basis_n);
    return static_cast<int>(basis_n.size()) - m.rank();
}

// Explicit kernel basis of the reduced coproduct in degree n.
template <GradedCoalgebra A>
std::vector<LinComb<typename A::Basis>> primitive_basis(const A& alg, int n) {
    auto basis_n = alg.basis(n);
    std::vector<LinComb<typename A::Basis>> out;
    if (basis_n.empty()) return out;
    SparseMatrix m = reduced_coproduct_matrix(alg, basis_n);
    for (const auto& vec : m.kernel_basis()) {
        LinComb<typename A::Basis> v;
        for (std::size_t i = 0; i < basis_n.size(); ++i) v.add_term(basis_n[i], vec[i]);
        out.push_back(std::move(v));
    }
    return out;
}

// Primitive dimensions 1..N as a series (index 0 is 0).
template <GradedCoalgebra A>
IntSeries primitive_dimension_series(const A& alg, int N) {
    IntSeries p(N + 1, 0);
    for (int n = 1; n <= N; ++n) p[n] = primitive_dimension(alg, n);
    return p;
}

template <GradedCoalgebra A>
IntSeries dimension_series(const A& alg, int N) {
    IntSeries d(N + 1, 0);
    for (int n = 0; n <= N; ++n) d[n] = static_cast<int>(alg.basis(n).size());
    return d;
}

// Recursive antipode of a connected graded (possibly one-sided) Hopf
// algebra. The recursion isolates S(b) through the unit law of the declared
// side: a right identity gives m(S (x) id) Delta = unit·counit, a left
// identity the mirrored law. Memoizes per instance.
template <GradedConnectedHopf A>
class AntipodeSolver {
public:
    using B = typename A::Basis;

    explicit AntipodeSolver(const A& alg) : alg_(alg) {
        if (alg.basis(0).size() != 1) throw std::invalid_argument("antipode: algebra is not connected");
    }

    const LinComb<B>& antipode(const B& b) {
        auto it = memo_.find(b);
        if (it != memo_.end()) return it->second;
        LinComb<B> s;
        int n = alg_.degree(b);
        if (n == 0) {
            s = LinComb<B>(alg_.unit());
        } else {
            bool left_unit = alg_.unit_side() == UnitSide::left;
            LinComb<B> acc;
            for (const auto& [pair, c] : alg_.coproduct(b)) {
                if (!left_unit) {
                    // S(b) = -sum_{|b'|<|b|} S(b') . b''
                    if (alg_.degree(pair.first) == n) continue;
                    auto term = product_lin(alg_, antipode(pair.first), LinComb<B>(pair.second));
                    term *= c;
                    acc += term;
                } else {
                    // S(b) = -sum_{|b''|<|b|} b' . S(b'')
                    if (alg_.degree(pair.second) == n) continue;
                    auto term = product_lin(alg_, LinComb<B>(pair.first), antipode(pair.second));
                    term *= c;
                    acc += term;
                }
            }
            s = -acc;
        }
        return memo_.emplace(b, std::move(s)).first->second;
    }

private:
    const A& alg_;
    std::map<B, LinComb<B>> memo_;
};

template <GradedConnectedHopf A>
LinComb<typename A::Basis> antipode_connected(const A& alg, const typename A::Basis& b) {
    AntipodeSolver<A> solver(alg);
    return solver.antipode(b);
}

}  // namespace coalcomp

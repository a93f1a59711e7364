#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coalcomp/rational.hpp"

namespace coalcomp {

// Finite formal sum of basis objects with exact rational coefficients.
// Zero coefficients are never stored, so operator== is multiset equality
// of normalized terms.
template <class B>
class LinComb {
public:
    using Basis = B;
    using Terms = std::map<B, Rational>;

    LinComb() = default;
    explicit LinComb(const B& b, Rational c = Rational(1)) {
        if (c != 0) terms_.emplace(b, std::move(c));
    }

    static LinComb zero() { return LinComb(); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    // Iterating the combination itself keeps a temporary alive in range-for.
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const B& b, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add_term(b, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    bool operator==(const LinComb&) const = default;

    // Linear extension of a basis-level map b -> LinComb<C>.
    template <class F>
    auto map(F&& f) const {
        using Out = decltype(f(std::declval<const B&>()));
        Out out;
        for (const auto& [b, c] : terms_) {
            Out img = f(b);
            img *= c;
            out += img;
        }
        return out;
    }

    // Linear extension of a basis-level index map b -> C.
    template <class F>
    auto map_basis(F&& f) const {
        using C = decltype(f(std::declval<const B&>()));
        LinComb<C> out;
        for (const auto& [b, c] : terms_) out.add_term(f(b), c);
        return out;
    }

    Rational coefficient_sum() const {
        Rational s = 0;
        for (const auto& [b, c] : terms_) s += c;
        return s;
    }

private:
    Terms terms_;
};

template <class L, class R>
using TensorComb = LinComb<std::pair<L, R>>;

template <class L, class R>
TensorComb<L, R> tensor(const LinComb<L>& x, const LinComb<R>& y) {
    TensorComb<L, R> out;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out.add_term({a, b}, ca * cb);
    return out;
}

// Renders a combination as "2 b1 + b2 - 3/2 b3"; the order is the canonical
// order of the basis type, so output is deterministic.
template <class B, class Printer>
std::string combination_text(const LinComb<B>& x, Printer&& print_basis) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : x.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (a != 1) out += rational_text(a) + " ";
        out += print_basis(b);
        first = false;
    }
    return out;
}

}  // namespace coalcomp

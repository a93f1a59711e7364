#pragma once

#include <compare>
#include <string>
#include <vector>

namespace coalcomp {

// Composition of n+1, indexing the degree-n piece of combs over combs.
struct Composition {
    std::vector<int> parts;  // nonempty, every part >= 1

    int degree() const {
        int s = 0;
        for (int p : parts) s += p;
        return s - 1;
    }

    std::strong_ordering operator<=>(const Composition& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return parts <=> o.parts;
    }
    bool operator==(const Composition&) const = default;

    std::string text() const;
};

// Face of the (n-1)-simplex family: a subset of {1..n}.
struct SimplexFace {
    int n = 0;
    std::vector<int> subset;  // strictly increasing, entries in 1..n

    int degree() const { return n; }

    std::strong_ordering operator<=>(const SimplexFace& o) const {
        if (auto c = n <=> o.n; c != 0) return c;
        return subset <=> o.subset;
    }
    bool operator==(const SimplexFace&) const = default;

    std::string text() const;
};

bool valid_composition(const Composition& c);
bool valid_face(const SimplexFace& s);

// phi({a<b<...<c} of [n]) = (a, b-a, ..., n+1-c), a composition of n+1.
Composition phi(const SimplexFace& s);
// Inverse: partial sums of the parts, dropping the final total.
SimplexFace phi_inv(const Composition& c);

// Degree-n bases in canonical order.
std::vector<Composition> all_compositions(int n);
std::vector<SimplexFace> all_faces(int n);

Composition parse_composition(const std::string& s);
SimplexFace parse_face(const std::string& s);

}  // namespace coalcomp

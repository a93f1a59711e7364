#include "coalcomp/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace coalcomp {

std::string Composition::text() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out + "]";
}

std::string SimplexFace::text() const {
    std::string out = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(subset[i]);
    }
    return out + "}/" + std::to_string(n);
}

bool valid_composition(const Composition& c) {
    if (c.parts.empty()) return false;
    for (int p : c.parts)
        if (p < 1) return false;
    return true;
}

bool valid_face(const SimplexFace& s) {
    if (s.n < 0) return false;
    int prev = 0;
    for (int x : s.subset) {
        if (x <= prev || x > s.n) return false;
        prev = x;
    }
    return true;
}

Composition phi(const SimplexFace& s) {
    if (!valid_face(s)) throw std::invalid_argument("phi: invalid simplex face");
    Composition out;
    int prev = 0;
    for (int x : s.subset) {
        out.parts.push_back(x - prev);
        prev = x;
    }
    out.parts.push_back(s.n + 1 - prev);
    return out;
}

SimplexFace phi_inv(const Composition& c) {
    if (!valid_composition(c)) throw std::invalid_argument("phi_inv: invalid composition");
    SimplexFace out;
    out.n = c.degree();
    int sum = 0;
    for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
        sum += c.parts[i];
        out.subset.push_back(sum);
    }
    return out;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(Composition{cur});
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            cur.push_back(p);
            self(self, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, n + 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SimplexFace> all_faces(int n) {
    std::vector<SimplexFace> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        SimplexFace f;
        f.n = n;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) f.subset.push_back(i);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& s, std::size_t lo, std::size_t hi, std::size_t base) {
    std::vector<int> out;
    std::size_t pos = lo;
    while (pos < hi) {
        std::size_t used = 0;
        int x;
        try {
            x = std::stoi(s.substr(pos, hi - pos), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer at position " + std::to_string(base + pos));
        }
        out.push_back(x);
        pos += used;
        if (pos < hi) {
            if (s[pos] != ',') throw std::invalid_argument("expected ',' at position " + std::to_string(base + pos));
            ++pos;
        }
    }
    return out;
}

std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '\t') t += c;
    return t;
}

}  // namespace

Composition parse_composition(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("composition literal must look like [1,3]");
    Composition c{parse_int_list(s, 1, s.size() - 1, 0)};
    if (!valid_composition(c)) throw std::invalid_argument("composition parts must be positive");
    return c;
}

SimplexFace parse_face(const std::string& raw) {
    std::string s = strip_spaces(raw);
    auto slash = s.find('/');
    if (s.empty() || s.front() != '{' || slash == std::string::npos || s[slash - 1] != '}')
        throw std::invalid_argument("subset literal must look like {1,3}/4");
    SimplexFace f;
    f.subset = parse_int_list(s, 1, slash - 1, 0);
    try {
        f.n = std::stoi(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad ground-set size after '/'");
    }
    if (!valid_face(f)) throw std::invalid_argument("subset must be increasing inside 1..n");
    return f;
}

}  // namespace coalcomp

#include "coalcomp/matrix.hpp"

#include <algorithm>

namespace coalcomp {

namespace {

struct Echelon {
    // normalized pivot rows and their pivot columns, in elimination order
    std::vector<std::map<int, Rational>> rows;
    std::vector<int> pivot_cols;
};

// Column-by-column Gauss-Jordan with a sparsest-row pivot choice; exact
// arithmetic throughout.
Echelon reduce(const SparseMatrix& m) {
    std::vector<std::map<int, Rational>> active;
    active.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) active.push_back(m.row(r));

    Echelon ech;
    for (int c = 0; c < m.cols(); ++c) {
        int best = -1;
        for (std::size_t i = 0; i < active.size(); ++i) {
            auto it = active[i].find(c);
            if (it == active[i].end()) continue;
            if (best < 0 || active[i].size() < active[best].size()) best = static_cast<int>(i);
        }
        if (best < 0) continue;

        std::map<int, Rational> pivot = std::move(active[best]);
        active.erase(active.begin() + best);
        Rational lead = pivot.at(c);
        for (auto& [col, v] : pivot) v /= lead;

        auto eliminate = [&](std::map<int, Rational>& row) {
            auto it = row.find(c);
            if (it == row.end()) return;
            Rational f = it->second;
            row.erase(it);
            for (const auto& [col, v] : pivot) {
                if (col == c) continue;
                auto [jt, fresh] = row.emplace(col, -f * v);
                if (!fresh) {
                    jt->second -= f * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        };
        for (auto& row : active) eliminate(row);
        for (auto& row : ech.rows) eliminate(row);
        std::erase_if(active, [](const auto& row) { return row.empty(); });

        ech.rows.push_back(std::move(pivot));
        ech.pivot_cols.push_back(c);
    }
    return ech;
}

}  // namespace

int SparseMatrix::rank() const { return static_cast<int>(reduce(*this).pivot_cols.size()); }

std::vector<std::vector<Rational>> SparseMatrix::kernel_basis() const {
    Echelon ech = reduce(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            auto it = ech.rows[r].find(f);
            if (it != ech.rows[r].end()) v[ech.pivot_cols[r]] = -it->second;
        }
        // scale to a primitive integer vector with positive leading entry
        Int lcm = 1;
        for (const auto& x : v)
            if (x != 0) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        Int gcd = 0;
        for (auto& x : v) {
            x *= lcm;
            if (x != 0) gcd = boost::multiprecision::gcd(gcd, numerator(x));
        }
        bool flip = false;
        for (const auto& x : v) {
            if (x == 0) continue;
            flip = x < 0;
            break;
        }
        for (auto& x : v) {
            x /= gcd;
            if (flip) x = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace coalcomp

#pragma once

#include <map>
#include <vector>

#include "coalcomp/rational.hpp"

namespace coalcomp {

// Sparse matrix over the rationals, row-major. Built for exact rank and
// nullspace of the reduced-coproduct maps; rows are the tensor coordinates,
// columns the domain basis.
class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rational& v) {
        if (v == 0) return;
        auto [it, fresh] = data_[r].emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) data_[r].erase(it);
        }
    }

    const std::map<int, Rational>& row(int r) const { return data_[r]; }

    int rank() const;

    // Canonical basis of {x : Mx = 0}: one vector per free column of the
    // reduced echelon form, scaled integral and primitive with positive
    // leading entry.
    std::vector<std::vector<Rational>> kernel_basis() const;

private:
    int rows_;
    int cols_;
    std::vector<std::map<int, Rational>> data_;
};

}  // namespace coalcomp

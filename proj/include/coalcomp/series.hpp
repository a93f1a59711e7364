#pragma once

#include <vector>

#include "coalcomp/rational.hpp"

namespace coalcomp {

// Truncated integer power series; index = degree, size = truncation order + 1.
using IntSeries = std::vector<Int>;

// Coefficients of 1/(1 - p(t)) up to order N; p must have zero constant term.
// This is the dimension series of the cofree coalgebra on a graded space
// with dimension series p.
IntSeries series_inverse_one_minus(const IntSeries& p, int N);

// E_0 = 1, E_n = C_n + sum_{i=0}^{n-1} C_i E_{n-i-1}: dimensions of a
// composition whose outer factor is one-dimensional in every degree.
IntSeries dims_comb_recursion(const IntSeries& c_dims, int N);

// E_0 = 1, E_n = C_n + sum_{i=0}^{n-1} E_i E_{n-i-1}: dimensions of a
// composition whose outer factor has Catalan dimensions.
IntSeries dims_tree_recursion(const IntSeries& c_dims, int N);

// Dimension series of D o C from the factor dimension series:
// E(t) = sum_m D_m * C(t)^(m+1). Independent of basis enumeration.
IntSeries dims_composition_series(const IntSeries& d_dims, const IntSeries& c_dims, int N);

}  // namespace coalcomp

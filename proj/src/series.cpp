#include "coalcomp/series.hpp"

#include <stdexcept>

namespace coalcomp {

namespace {

Int at(const IntSeries& s, int i) {
    return i >= 0 && i < static_cast<int>(s.size()) ? s[i] : Int(0);
}

IntSeries mul_trunc(const IntSeries& a, const IntSeries& b, int N) {
    IntSeries out(N + 1, 0);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) out[i + j] += at(a, i) * at(b, j);
    return out;
}

}  // namespace

IntSeries series_inverse_one_minus(const IntSeries& p, int N) {
    if (!p.empty() && p[0] != 0) throw std::invalid_argument("series_inverse_one_minus: nonzero constant term");
    IntSeries out(N + 1, 0);
    out[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) out[n] += at(p, k) * out[n - k];
    return out;
}

IntSeries dims_comb_recursion(const IntSeries& c_dims, int N) {
    if (c_dims.empty() || c_dims[0] != 1) throw std::invalid_argument("dims_comb_recursion: C_0 must be 1");
    IntSeries e(N + 1, 0);
    e[0] = 1;
    for (int n = 1; n <= N; ++n) {
        e[n] = at(c_dims, n);
        for (int i = 0; i <= n - 1; ++i) e[n] += at(c_dims, i) * e[n - i - 1];
    }
    return e;
}

IntSeries dims_tree_recursion(const IntSeries& c_dims, int N) {
    if (c_dims.empty() || c_dims[0] != 1) throw std::invalid_argument("dims_tree_recursion: C_0 must be 1");
    IntSeries e(N + 1, 0);
    e[0] = 1;
    for (int n = 1; n <= N; ++n) {
        e[n] = at(c_dims, n);
        for (int i = 0; i <= n - 1; ++i) e[n] += e[i] * e[n - i - 1];
    }
    return e;
}

IntSeries dims_composition_series(const IntSeries& d_dims, const IntSeries& c_dims, int N) {
    IntSeries out(N + 1, 0);
    IntSeries c_power(N + 1, 0);  // C(t)^(m+1), starting with m = 0
    for (int i = 0; i <= N; ++i) c_power[i] = at(c_dims, i);
    for (int m = 0; m <= N; ++m) {
        for (int n = m; n <= N; ++n) out[n] += at(d_dims, m) * at(c_power, n - m);
        c_power = mul_trunc(c_power, c_dims, N);
    }
    return out;
}

}  // namespace coalcomp

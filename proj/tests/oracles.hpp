#pragma once
// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the library routine it checks.

#include <algorithm>
#include <functional>
#include <vector>

#include "jack/partition.hpp"
#include "jack/poly.hpp"
#include "jack/rational.hpp"

namespace oracle {

using jack::Partition;
using jack::Poly;
using jack::Q;

// Corners of T_{w,h} lambda in Russian coordinates, read off row by row.
inline void corners(const Partition& lam, const Q& w, const Q& h, std::vector<Q>& minima, std::vector<Q>& maxima)
{
    minima.clear();
    maxima.clear();
    const int n = lam.length();
    for (int i = 1; i <= n + 1; ++i) {
        if (i == 1 || lam[i - 1] < lam[i - 2]) minima.push_back(Q(lam[i - 1]) * w - Q(i - 1) * h);
    }
    for (int i = 1; i <= n; ++i)
        if (lam[i - 1] > lam[i]) maxima.push_back(Q(lam[i - 1]) * w - Q(i) * h);
    std::sort(minima.begin(), minima.end());
    std::sort(maxima.begin(), maxima.end());
}

// Truncated product of (1 - c t) over cs, coefficients of t^0..t^L.
inline std::vector<Q> linear_product(const std::vector<Q>& cs, int L)
{
    std::vector<Q> p(L + 1, 0);
    p[0] = 1;
    for (const Q& c : cs)
        for (int k = L; k >= 1; --k) p[k] -= c * p[k - 1];
    return p;
}

// B_1..B_L with 1 - P(t)/Q(t) = sum B_k t^k, P over minima, Q over maxima.
inline std::vector<Q> boolean_cumulants(const Partition& lam, const Q& w, const Q& h, int L)
{
    std::vector<Q> x, y;
    corners(lam, w, h, x, y);
    auto P = linear_product(x, L), D = linear_product(y, L);
    // R = P / D by long division; D[0] = 1.
    std::vector<Q> R(L + 1, 0);
    for (int k = 0; k <= L; ++k) {
        Q s = P[k];
        for (int j = 1; j <= k; ++j) s -= D[j] * R[k - j];
        R[k] = s;
    }
    std::vector<Q> B(L + 1, 0);
    for (int k = 1; k <= L; ++k) B[k] = -R[k];
    return B;
}

// Moments of the transition measure: G(z) = Q(t) / (z P(t)) with t = 1/z.
inline std::vector<Q> transition_moments(const Partition& lam, const Q& w, const Q& h, int L)
{
    std::vector<Q> x, y;
    corners(lam, w, h, x, y);
    auto P = linear_product(x, L), D = linear_product(y, L);
    std::vector<Q> M(L + 1, 0);
    for (int k = 0; k <= L; ++k) {
        Q s = D[k];
        for (int j = 1; j <= k; ++j) s -= P[j] * M[k - j];
        M[k] = s;
    }
    return M;
}

inline Q product_of_boolean(const Partition& lam, const Q& w, const Q& h, const std::vector<int>& lengths)
{
    int L = *std::max_element(lengths.begin(), lengths.end());
    auto B = boolean_cumulants(lam, w, h, L);
    Q r = 1;
    for (int l : lengths) r *= B[l];
    return r;
}

// prod over cells (alpha a + l + 1)(alpha a + l + alpha), arms and legs from the conjugate.
inline Q jack_norm(const Partition& lam, const Q& alpha)
{
    Partition c = lam.conjugate();
    Q r = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) {
            int arm = lam[i] - j - 1, leg = c[j] - i - 1;
            r *= (alpha * arm + leg + 1) * (alpha * arm + leg + alpha);
        }
    return r;
}

// Standard Young tableaux count by the hook formula.
inline jack::Z hook_dimension(const Partition& lam)
{
    Partition c = lam.conjugate();
    jack::Z num = jack::factorial(lam.size()), den = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam[i]; ++j) den *= lam[i] - j - 1 + c[j] - i - 1 + 1;
    return num / den;
}

// Set partitions of {0..n-1} as lists of blocks, by inserting element k
// into an existing block or a new one.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f)
{
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int k) {
        if (k == n) {
            f(blocks);
            return;
        }
        for (std::size_t i = 0, n_blocks = blocks.size(); i < n_blocks; ++i) {
            blocks[i].push_back(k);
            rec(k + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({k});
        rec(k + 1);
        blocks.pop_back();
    };
    rec(0);
}

inline bool non_crossing(const std::vector<std::vector<int>>& blocks)
{
    std::vector<int> label;
    int n = 0;
    for (const auto& b : blocks) n += (int)b.size();
    label.assign(n, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int x : blocks[i]) label[x] = (int)i;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return false;
    return true;
}

// Sum over non-crossing partitions of [ell] of prod R_{|block|}.
inline Poly nc_moment(int ell, const std::function<Poly(int)>& R)
{
    Poly s;
    for_each_set_partition(ell, [&](const std::vector<std::vector<int>>& blocks) {
        if (!non_crossing(blocks)) return;
        Poly t(1);
        for (const auto& b : blocks) {
            t = t * R((int)b.size());
            if (t.is_zero()) return;
        }
        s += t;
    });
    return s;
}

// (J^ell)_{00} for the operator with (i, i) = i g, (i, i-1) = 1 and
// (i, i+k) = v_k, v_1 = 1, symbolic in g and v_2, v_3, ...
inline Poly jacobi_power(int ell, bool plancherel)
{
    const int N = ell + 1;
    Poly g = Poly::variable(jack::var::g);
    auto v = [&](int k) -> Poly {
        if (k == 1) return Poly(1);
        return plancherel ? Poly(0) : Poly::variable(jack::var::v(k));
    };
    // Row vector e_0 J^m.
    std::vector<Poly> row(N);
    row[0] = Poly(1);
    for (int m = 0; m < ell; ++m) {
        std::vector<Poly> nxt(N);
        for (int i = 0; i < N; ++i) {
            if (row[i].is_zero()) continue;
            if (i > 0) nxt[i - 1] += row[i];
            nxt[i] += row[i] * (g * Poly(Q(i)));
            for (int k = 1; i + k < N; ++k) {
                Poly vk = v(k);
                if (!vk.is_zero()) nxt[i + k] += row[i] * vk;
            }
        }
        row = std::move(nxt);
    }
    return row[0];
}

// Motzkin paths of length ell, horizontal steps at height i weighted i g.
inline Poly motzkin_sum(int ell)
{
    Poly g = Poly::variable(jack::var::g);
    std::vector<Poly> f(ell + 2);
    f[0] = Poly(1);
    for (int s = 0; s < ell; ++s) {
        std::vector<Poly> nxt(ell + 2);
        for (int h = 0; h <= ell; ++h) {
            if (f[h].is_zero()) continue;
            nxt[h + 1] += f[h];
            if (h > 0) nxt[h - 1] += f[h];
            if (h > 0) nxt[h] += f[h] * (g * Poly(Q(h)));
        }
        f = std::move(nxt);
    }
    return f[0];
}

inline long catalan(int n)
{
    return jack::Z(jack::binomial(2 * n, n) / (n + 1)).get_si();
}

}  // namespace oracle

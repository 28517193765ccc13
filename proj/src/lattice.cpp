#include "mzeta/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "mzeta/errors.hpp"
#include "mzeta/poly.hpp"

namespace mz {

long long igcd(long long a, long long b) { return std::gcd(a, b); }
long long ilcm(long long a, long long b) { return (a == 0 || b == 0) ? 0 : std::lcm(a, b); }

long long vgcd(const IVec& v) {
    long long g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

IVec primitive(const IVec& v) {
    long long g = vgcd(v);
    if (g == 0) return v;
    IVec r = v;
    for (auto& x : r) x /= g;
    return r;
}

long long dot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec cross(const IVec& a, const IVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

IVec vsub(const IVec& a, const IVec& b) {
    IVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

IVec vadd(const IVec& a, const IVec& b) {
    IVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

IVec vscale(const IVec& a, long long k) {
    IVec r = a;
    for (auto& x : r) x *= k;
    return r;
}

long long det(const IMat& c) {
    std::size_t n = c.size();
    if (n == 0) return 1;
    if (n == 1) return c[0][0];
    if (n == 2) return c[0][0] * c[1][1] - c[1][0] * c[0][1];
    if (n == 3) return dot(c[0], cross(c[1], c[2]));
    throw DimensionError("determinant only implemented for n <= 3");
}

int rank(const IMat& vectors) {
    if (vectors.empty()) return 0;
    std::size_t n = vectors[0].size();
    std::vector<std::vector<Rat>> m;
    for (const auto& v : vectors) {
        std::vector<Rat> row;
        for (auto x : v) row.emplace_back(static_cast<long>(x));
        m.push_back(row);
    }
    int r = 0;
    for (std::size_t col = 0; col < n && r < static_cast<int>(m.size()); ++col) {
        std::size_t piv = static_cast<std::size_t>(r);
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(r)]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == static_cast<std::size_t>(r) || m[i][col] == 0) continue;
            Rat f = m[i][col] / m[static_cast<std::size_t>(r)][col];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[static_cast<std::size_t>(r)][j];
        }
        ++r;
    }
    return r;
}

IMat transpose(const IMat& m) {
    if (m.empty()) return m;
    IMat t(m[0].size(), IVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

namespace {

// Column operations on the row vector w, mirrored on U (stored by columns),
// until w = (g, 0, ..., 0).
void reduce_row(IVec w, IMat& U) {
    std::size_t n = w.size();
    U.assign(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = 1;
    auto colop = [&](std::size_t dst, std::size_t src, long long k) {  // col_dst -= k col_src
        w[dst] -= k * w[src];
        for (std::size_t r = 0; r < n; ++r) U[dst][r] -= k * U[src][r];
    };
    while (true) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != 0 && (piv == n || std::llabs(w[i]) < std::llabs(w[piv]))) piv = i;
        if (piv == n) return;
        bool done = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv || w[i] == 0) continue;
            colop(i, piv, w[i] / w[piv]);
            if (w[i] != 0) done = false;
        }
        if (done) {
            if (piv != 0) {
                std::swap(w[0], w[piv]);
                std::swap(U[0], U[piv]);
            }
            if (w[0] < 0) {
                w[0] = -w[0];
                for (auto& x : U[0]) x = -x;
            }
            return;
        }
    }
}

}  // namespace

IMat kernel_completion(const IVec& w) {
    IMat U;
    reduce_row(w, U);
    if (dot(w, U[0]) != 1) throw Error("kernel_completion: vector is not primitive");
    return U;
}

IMat inverse_unimodular(const IMat& a) {
    std::size_t n = a.size();
    long long d = 0;
    IMat cols = transpose(a);
    d = det(cols);
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
    IMat inv(n, IVec(n, 0));
    if (n == 1) {
        inv[0][0] = a[0][0];
        return inv;
    }
    if (n == 2) {
        inv = {{a[1][1] * d, -a[0][1] * d}, {-a[1][0] * d, a[0][0] * d}};
        return inv;
    }
    if (n == 3) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                inv[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * d;
            }
        return inv;
    }
    throw DimensionError("inverse only implemented for n <= 3");
}

IMat complete_primitive(const IVec& v) {
    // kernel_completion(v) gives U with v^T U = e_1^T, so the first row of
    // U^{-1} is v^T; transposing U^{-1} yields a unimodular matrix with
    // first column v.
    IMat U = kernel_completion(v);       // columns
    IMat Urows = transpose(U);
    IMat inv = inverse_unimodular(Urows);  // rows; first row = v
    return inv;                            // rows of inv = columns of result
}

IVec coords_in(const IMat& cols, const IVec& x) {
    IMat inv = inverse_unimodular(transpose(cols));
    IVec c(x.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) c[i] = dot(inv[i], x);
    return c;
}

}  // namespace mz

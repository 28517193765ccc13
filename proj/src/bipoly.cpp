#include "mzeta/bipoly.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"

namespace mz {

BiPoly BiPoly::from_laurent(const std::map<std::pair<int, int>, Rat>& terms) {
    BiPoly F;
    if (terms.empty()) return F;
    int la = terms.begin()->first.first, lb = terms.begin()->first.second;
    Int den = 1;
    for (const auto& [e, q] : terms) {
        la = std::min(la, e.first);
        lb = std::min(lb, e.second);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    Int g = 0;
    for (const auto& [e, q] : terms) {
        if (q == 0) continue;
        Int v = q.get_num() * (den / q.get_den());
        F.c[{e.first - la, e.second - lb}] = v;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g > 1)
        for (auto& [e, v] : F.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return F;
}

int BiPoly::deg_a() const {
    int d = -1;
    for (const auto& [e, v] : c) d = std::max(d, e.first);
    return d;
}

int BiPoly::deg_b() const {
    int d = -1;
    for (const auto& [e, v] : c) d = std::max(d, e.second);
    return d;
}

std::vector<ZPoly> BiPoly::rows() const {
    std::vector<ZPoly> r(static_cast<std::size_t>(deg_b() + 1));
    for (const auto& [e, v] : c) {
        auto& row = r[static_cast<std::size_t>(e.second)];
        if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first) + 1, 0);
        row[static_cast<std::size_t>(e.first)] = v;
    }
    for (auto& row : r) ztrim(row);
    return r;
}

BiPoly BiPoly::with_signs(int ea, int eb) const {
    BiPoly r;
    for (const auto& [e, v] : c) {
        int s = ((ea < 0 && e.first % 2) ? -1 : 1) * ((eb < 0 && e.second % 2) ? -1 : 1);
        r.c[e] = s * v;
    }
    return r;
}

BiPoly BiPoly::swapped() const {
    BiPoly r;
    for (const auto& [e, v] : c) r.c[{e.second, e.first}] = v;
    return r;
}

BiPoly BiPoly::d_a() const {
    BiPoly r;
    for (const auto& [e, v] : c)
        if (e.first > 0) r.c[{e.first - 1, e.second}] = v * e.first;
    return r;
}

BiPoly BiPoly::d_b() const {
    BiPoly r;
    for (const auto& [e, v] : c)
        if (e.second > 0) r.c[{e.first, e.second - 1}] = v * e.second;
    return r;
}

ZPoly BiPoly::at_a(const Rat& a) const {
    auto R = rows();
    std::vector<Rat> vals;
    Int den = 1;
    for (const auto& row : R) {
        Rat v = zeval(row, a);
        vals.push_back(v);
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    }
    ZPoly p;
    for (const auto& v : vals) p.push_back(v.get_num() * (den / v.get_den()));
    return zprimitive(p);
}

namespace {

// Determinant of an integer matrix by fraction-free Gaussian elimination.
Int bareiss_det(std::vector<std::vector<Int>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Sylvester resultant of two integer polynomials of formal degrees p, q.
Int sylvester(const std::vector<Int>& f, int p, const std::vector<Int>& g, int q) {
    std::size_t n = static_cast<std::size_t>(p + q);
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j <= p; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + p - j)] = f[static_cast<std::size_t>(j)];
    for (int i = 0; i < p; ++i)
        for (int j = 0; j <= q; ++j)
            m[static_cast<std::size_t>(q + i)][static_cast<std::size_t>(i + q - j)] = g[static_cast<std::size_t>(j)];
    return bareiss_det(m);
}

}  // namespace

ZPoly resultant_b(const BiPoly& F, const BiPoly& G) {
    auto RF = F.rows(), RG = G.rows();
    int p = static_cast<int>(RF.size()) - 1, q = static_cast<int>(RG.size()) - 1;
    int bound = 0;
    {
        int da = F.deg_a(), dg = G.deg_a();
        bound = p * std::max(dg, 0) + q * std::max(da, 0);
    }
    // Evaluate at integer points and interpolate (Newton form over Q).
    std::vector<Rat> xs, ys;
    for (int i = 0; i <= bound; ++i) {
        Int x = i;
        std::vector<Int> f, g;
        for (const auto& row : RF) f.push_back(zeval(row, Rat(x)).get_num());
        for (const auto& row : RG) g.push_back(zeval(row, Rat(x)).get_num());
        xs.emplace_back(x);
        ys.emplace_back(sylvester(f, p, g, q));
    }
    std::size_t N = xs.size();
    std::vector<Rat> coef = ys;
    for (std::size_t j = 1; j < N; ++j)
        for (std::size_t i = N - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    // Expand Newton form into monomial basis.
    std::vector<Rat> poly(N, 0);
    for (std::size_t k = N; k-- > 0;) {
        // poly = poly * (x - xs[k]) + coef[k]
        std::vector<Rat> np(N, 0);
        for (std::size_t i = 0; i < N; ++i) {
            if (poly[i] == 0) continue;
            if (i + 1 < N) np[i + 1] += poly[i];
            np[i] -= poly[i] * xs[k];
        }
        np[0] += coef[k];
        poly = np;
    }
    Int den = 1;
    for (const auto& v : poly) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    ZPoly out;
    for (const auto& v : poly) out.push_back(v.get_num() * (den / v.get_den()));
    ztrim(out);
    return out;
}

std::vector<PolygonEdge> newton_polygon_edges(const BiPoly& F) {
    std::vector<IVec> pts;
    for (const auto& [e, v] : F.c) pts.push_back({e.first, e.second});
    std::sort(pts.begin(), pts.end());
    auto crossz = [](const IVec& o, const IVec& a, const IVec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    // Andrew's monotone chain, counterclockwise, collinear points dropped.
    std::vector<IVec> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const IVec& p = pass == 0 ? pts[i] : pts[pts.size() - 1 - i];
            while (hull.size() >= start + 2 && crossz(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
    }
    if (hull.size() < 3) throw DimensionError("Newton polygon is not two-dimensional");
    std::vector<PolygonEdge> edges;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        PolygonEdge e;
        e.p0 = hull[i];
        e.p1 = hull[(i + 1) % hull.size()];
        IVec d = vsub(e.p1, e.p0);
        e.length = static_cast<int>(vgcd(d));
        IVec dir = primitive(d);
        e.normal = {-dir[1], dir[0]};  // left of a counterclockwise edge is inside
        IVec start = e.p0;
        if (dir[1] < 0 || (dir[1] == 0 && dir[0] < 0)) {
            dir = vscale(dir, -1);
            start = e.p1;
        }
        e.delta = dir;
        ZPoly g(static_cast<std::size_t>(e.length) + 1, 0);
        for (int j = 0; j <= e.length; ++j) {
            IVec p = vadd(start, vscale(dir, j));
            auto it = F.c.find({static_cast<int>(p[0]), static_cast<int>(p[1])});
            if (it != F.c.end()) g[static_cast<std::size_t>(j)] = it->second;
        }
        e.poly = g;
        edges.push_back(e);
    }
    return edges;
}

}  // namespace mz

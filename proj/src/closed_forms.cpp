#include "mzeta/closed_forms.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"

namespace mz {

std::vector<IVec> two_var_chain(const NewtonData& refined) {
    if (refined.n != 2 || !refined.refined) throw DimensionError("two-variable chain needs a refined 2-variable fan");
    std::vector<IVec> rays;
    for (auto& c : refined.fan)
        if (c.generators.size() == 1) rays.push_back(c.generators[0]);
    std::sort(rays.begin(), rays.end(),
              [](const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0] > 0; });
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    if (rays.size() < 3 || rays.front() != IVec{1, 0} || rays.back() != IVec{0, 1})
        throw NotConvenientError("two-variable chain must run from (1,0) to (0,1)");
    for (size_t j = 0; j + 1 < rays.size(); ++j)
        if (rays[j][0] * rays[j + 1][1] - rays[j][1] * rays[j + 1][0] != 1)
            throw DimensionError("consecutive chain vectors are not unimodular");
    return rays;
}

UPoly two_var_closed_form(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long k) {
    auto a = two_var_chain(refined);
    const int q = static_cast<int>(a.size()) - 1;
    std::vector<long long> m(q + 1), s(q + 1);
    std::vector<UPoly> xh(q + 1);
    for (int j = 0; j <= q; ++j) {
        m[j] = m_f(refined, a[j]);
        s[j] = s_of(a[j]);
        if (j > 0 && j < q) {
            auto g = gamma_f(refined, a[j]);
            if (g && refined.face(*g).dim == 1) xh[j] = ms.at(*g).x_hat;
        }
    }
    const UPoly um1 = UPoly::u_minus_1_pow(1);
    auto mono = [](long long e) { return UPoly::monomial(static_cast<int>(e)); };
    UPoly r;
    if (k % m[1] == 0) r += mono(-k * s[1] / m[1]);
    UPoly lattice;
    for (int j = 1; j <= q - 2; ++j)
        for (long long u = 1; u * m[j] < k; ++u) {
            long long rest = k - u * m[j];
            if (rest % m[j + 1] == 0) lattice += mono(-u * s[j] - (rest / m[j + 1]) * s[j + 1]);
        }
    r += um1 * lattice;
    if (k % m[q - 1] == 0) r += mono(-k * s[q - 1] / m[q - 1]);
    for (int j = 1; j <= q - 1; ++j) {
        if (k % m[j] == 0) r += (um1 - xh[j]) * mono(-k * s[j] / m[j]);
        if (xh[j].is_zero()) continue;
        UPoly tail;
        for (long long t = 1; t <= (k - 1) / m[j]; ++t) tail += mono(-k + t * (m[j] - s[j]));
        r += um1 * xh[j] * tail;
    }
    return um1 * r;
}

WHFaces wh_faces(const NewtonData& nd) {
    if (nd.n != 3) throw NotWeightedHomogeneousError("three variables expected");
    WHFaces w;
    for (auto& f : nd.faces) {
        if (f.dim == 2) {
            if (w.facet >= 0) throw NotWeightedHomogeneousError("more than one compact facet");
            w.facet = f.id;
        }
        if (f.dim == 0) {
            const IVec& v = f.vertices[0];
            int nz = 0, axis = -1;
            for (int i = 0; i < 3; ++i)
                if (v[i] != 0) ++nz, axis = i;
            if (nz == 1) w.p[axis] = v[axis];
        }
        if (f.dim == 1) {
            for (int i = 0; i < 3; ++i)
                if (f.vertices[0][i] == 0 && f.vertices[1][i] == 0) w.edge[i] = f.id;
        }
    }
    if (w.facet < 0 || w.p[0] == 0 || w.p[1] == 0 || w.p[2] == 0 || w.edge[0] < 0 || w.edge[1] < 0 ||
        w.edge[2] < 0)
        throw NotWeightedHomogeneousError("germ is not convenient weighted homogeneous");
    return w;
}

UPoly three_var_wh_closed_form(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long k) {
    WHFaces w = wh_faces(nd);
    auto floor_sum = [&](long long l) { return l / w.p[0] + l / w.p[1] + l / w.p[2]; };
    auto dividing = [&](long long l) {
        std::vector<int> d;
        for (int i = 0; i < 3; ++i)
            if (l % w.p[i] == 0) d.push_back(i);
        return d;
    };
    const UPoly one = 1, u = UPoly::monomial(1), u2 = UPoly::monomial(2);
    auto P = [&](long long l) -> UPoly {
        auto d = dividing(l);
        if (d.empty()) return UPoly();
        if (d.size() == 1) return one;
        if (d.size() == 2) return one + u - ms.at(w.edge[3 - d[0] - d[1]]).x_hat;
        return one + u + u2 - ms.at(w.facet).x_closure;
    };
    auto Q = [&](long long l) -> UPoly {
        auto d = dividing(l);
        if (d.size() <= 1) return UPoly();
        if (d.size() == 2) return ms.at(w.edge[3 - d[0] - d[1]]).x_hat;
        UPoly r = ms.at(w.edge[0]).x_hat + ms.at(w.edge[1]).x_hat + ms.at(w.edge[2]).x_hat;
        return r + ms.at(w.facet).x_hat;
    };
    const UPoly um1 = UPoly::u_minus_1_pow(1);
    UPoly r = P(k).shifted(static_cast<int>(-floor_sum(k)));
    for (long long l = 1; l < k; ++l) {
        UPoly q = Q(l);
        if (!q.is_zero()) r += (um1 * q).shifted(static_cast<int>(-(k - l) - floor_sum(l)));
    }
    return um1 * r;
}

}  // namespace mz

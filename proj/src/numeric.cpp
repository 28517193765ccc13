#include "mzeta/numeric.hpp"

#include <cmath>

namespace mz {

void set_working_bits(unsigned bits) {
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

Real to_real(const Int& x) { return Real(x.get_str()); }

Real to_real(const Rat& x) { return to_real(x.get_num()) / to_real(x.get_den()); }

Cx cadd(const Cx& x, const Cx& y) { return {x.re + y.re, x.im + y.im}; }
Cx csub(const Cx& x, const Cx& y) { return {x.re - y.re, x.im - y.im}; }
Cx cmul(const Cx& x, const Cx& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
Cx cdiv(const Cx& x, const Cx& y) {
    Real d = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}
Real cabs(const Cx& x) { return sqrt(x.re * x.re + x.im * x.im); }

Real reval(const RPoly& p, const Real& x) {
    Real v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

RPoly rderiv(const RPoly& p) {
    RPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return d;
}

std::vector<Cx> aberth_roots(const RPoly& p, unsigned bits) {
    set_working_bits(bits);
    int n = static_cast<int>(p.size()) - 1;
    std::vector<Cx> z;
    if (n < 1) return z;
    RPoly q(p.size());
    for (int i = 0; i <= n; ++i) q[i] = Real(p[i]) / p[n];
    RPoly dq = rderiv(q);
    // Starting points on a circle whose radius bounds the root moduli.
    Real r = 0;
    for (int i = 0; i < n; ++i) {
        Real t = pow(abs(q[i]), Real(1) / (n - i));
        if (t > r) r = t;
    }
    if (r == 0) r = 1;
    Real pi = boost::multiprecision::mpfr_float(boost::math::constants::pi<Real>());
    for (int k = 0; k < n; ++k) {
        Real th = 2 * pi * k / n + Real("0.7");
        z.push_back({r * cos(th), r * sin(th)});
    }
    Real tol = pow(Real(2), -static_cast<int>(bits) + 24);
    int max_iter = 200 + 4 * static_cast<int>(bits);
    for (int it = 0; it < max_iter; ++it) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            Cx pv{0, 0}, dv{0, 0};
            for (int k = n; k >= 0; --k) pv = cadd(cmul(pv, z[i]), Cx{q[k], 0});
            for (int k = n - 1; k >= 0; --k) dv = cadd(cmul(dv, z[i]), Cx{dq[k], 0});
            if (pv.re == 0 && pv.im == 0) continue;
            Cx ratio = cdiv(pv, dv);
            Cx sum{0, 0};
            for (int j = 0; j < n; ++j)
                if (j != i) sum = cadd(sum, cdiv(Cx{1, 0}, csub(z[i], z[j])));
            Cx w = cdiv(ratio, csub(Cx{1, 0}, cmul(ratio, sum)));
            z[i] = csub(z[i], w);
            Real rel = cabs(w) / max(Real(1), cabs(z[i]));
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
    }
    return z;
}

Real refine_to_real(const ZPoly& p, RootInterval iv, unsigned bits) {
    set_working_bits(bits);
    if (iv.lo == iv.hi) return to_real(iv.lo);
    refine_root(p, iv, Rat(1, 1ul << 60) * (iv.hi - iv.lo));
    if (iv.lo == iv.hi) return to_real(iv.lo);
    RPoly rp;
    for (auto& c : p) rp.push_back(to_real(c));
    RPoly dp = rderiv(rp);
    Real lo = to_real(iv.lo), hi = to_real(iv.hi);
    Real x = (lo + hi) / 2;
    int slo = zsign_at(p, iv.lo);
    for (int it = 0; it < 64; ++it) {
        Real fx = reval(rp, x), d = reval(dp, x);
        Real nx = d == 0 ? x : x - fx / d;
        if (!(nx > lo && nx < hi)) {
            // Newton left the bracket: fall back to a bisection step.
            if ((fx > 0 ? 1 : (fx < 0 ? -1 : 0)) == slo) lo = x; else hi = x;
            nx = (lo + hi) / 2;
        }
        if (abs(nx - x) <= abs(x) * pow(Real(2), -static_cast<int>(bits))) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

}  // namespace mz

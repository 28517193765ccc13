#include "mzeta/unipoly.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"

namespace mz {

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zprimitive(ZPoly p) {
    ztrim(p);
    if (p.empty()) return p;
    Int g = zcontent(p);
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

ZPoly zderiv(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    ztrim(d);
    return d;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

ZPoly zscale(const ZPoly& a, const Int& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zprem(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw ZeroPolynomialError("pseudo-remainder by zero polynomial");
    ZPoly r = a;
    ztrim(r);
    int db = zdeg(b);
    if (zdeg(r) < db) return r;
    const Int& lc = b.back();
    int e = zdeg(r) - db + 1;
    while (!r.empty() && zdeg(r) >= db) {
        int shift = zdeg(r) - db;
        Int cr = r.back();
        for (auto& x : r) x *= lc;
        for (int j = 0; j <= db; ++j) mpz_submul(r[j + shift].get_mpz_t(), cr.get_mpz_t(), b[j].get_mpz_t());
        ztrim(r);
        --e;
    }
    if (e > 0) {
        Int m;
        mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
        r = zscale(r, m);
    }
    return r;
}

ZPoly zgcd(const ZPoly& a0, const ZPoly& b0) {
    ZPoly a = zprimitive(a0), b = zprimitive(b0);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprimitive(zprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return zprimitive(a);
}

ZPoly zexact_div(const ZPoly& a0, const ZPoly& b) {
    ZPoly a = a0;
    ztrim(a);
    if (b.empty()) throw ZeroPolynomialError("division by zero polynomial");
    int db = zdeg(b);
    if (zdeg(a) < db) {
        if (a.empty()) return {};
        throw DivisibilityError("inexact polynomial division");
    }
    ZPoly q(zdeg(a) - db + 1);
    while (!a.empty() && zdeg(a) >= db) {
        int shift = zdeg(a) - db;
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        if (rem != 0) throw DivisibilityError("inexact polynomial division");
        q[shift] = qc;
        for (int j = 0; j <= db; ++j) mpz_submul(a[j + shift].get_mpz_t(), qc.get_mpz_t(), b[j].get_mpz_t());
        ztrim(a);
    }
    if (!a.empty()) throw DivisibilityError("inexact polynomial division");
    ztrim(q);
    return q;
}

ZPoly zsquarefree(const ZPoly& p0) {
    ZPoly p = zprimitive(p0);
    if (zdeg(p) <= 0) return p;
    ZPoly g = zgcd(p, zderiv(p));
    if (zdeg(g) == 0) return p;
    return zprimitive(zexact_div(p, g));
}

ZPoly zstrip_zero_roots(ZPoly p) {
    ztrim(p);
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + static_cast<long>(k));
    return p;
}

ZPoly zcompose_neg(const ZPoly& p) {
    ZPoly r = p;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

ZPoly zreverse(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    ztrim(r);
    return r;
}

int sign_of(const Int& x) { return sgn(x); }

int zsign_at(const ZPoly& p, const Rat& x) {
    if (p.empty()) return 0;
    const Int& n = x.get_num();
    const Int& d = x.get_den();
    Int v = p.back();
    Int dp = 1;
    for (int i = zdeg(p) - 1; i >= 0; --i) {
        dp *= d;
        v *= n;
        mpz_addmul(v.get_mpz_t(), p[i].get_mpz_t(), dp.get_mpz_t());
    }
    return sgn(v);
}

int zsign_at_inf(const ZPoly& p, int dir) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    if (dir < 0 && zdeg(p) % 2 == 1) s = -s;
    return s;
}

Rat zeval(const ZPoly& p, const Rat& x) {
    Rat v = 0;
    for (int i = zdeg(p); i >= 0; --i) v = v * x + Rat(p[i]);
    return v;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p0) {
    std::vector<ZPoly> chain;
    ZPoly p = zprimitive(p0);
    if (p.empty()) throw ZeroPolynomialError("Sturm chain of zero polynomial");
    chain.push_back(p);
    ZPoly d = zprimitive(zderiv(p));
    if (d.empty()) return chain;
    chain.push_back(d);
    while (true) {
        const ZPoly& a = chain[chain.size() - 2];
        const ZPoly& b = chain.back();
        ZPoly r = zprem(a, b);
        if (r.empty()) break;
        int e = zdeg(a) - zdeg(b) + 1;
        bool neg_mult = sgn(b.back()) < 0 && e % 2 == 1;
        if (!neg_mult) r = zscale(r, -1);
        Int c = zcontent(r);
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        chain.push_back(std::move(r));
    }
    return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<ZPoly>& chain, const std::optional<Rat>& x, int inf_dir) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(x ? zsign_at(p, *x) : zsign_at_inf(p, inf_dir));
    return variations(s);
}

}  // namespace

int sturm_count(const std::vector<ZPoly>& chain, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    return variations_at(chain, lo, -1) - variations_at(chain, hi, +1);
}

Rat root_bound(const ZPoly& p) {
    Rat m = 0;
    for (int i = 0; i < zdeg(p); ++i) {
        Rat q(abs(p[i]), abs(p.back()));
        q.canonicalize();
        if (q > m) m = q;
    }
    return m + 1;
}

namespace {

Rat nonroot_between(const ZPoly& q, const Rat& l, const Rat& h) {
    for (int den = 2;; ++den)
        for (int num = 1; num < den; ++num) {
            Rat t(num, den);
            t.canonicalize();
            Rat m = l + (h - l) * t;
            if (zsign_at(q, m) != 0) return m;
        }
}

void isolate_rec(const ZPoly& q, const std::vector<ZPoly>& chain, const Rat& l, const Rat& h, int k,
                 std::vector<RootInterval>& out) {
    if (k == 0) return;
    if (k == 1) {
        out.push_back({l, h});
        return;
    }
    Rat m = nonroot_between(q, l, h);
    int k1 = sturm_count(chain, l, m);
    isolate_rec(q, chain, l, m, k1, out);
    isolate_rec(q, chain, m, h, k - k1, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const ZPoly& p, const Rat& lo0, const Rat& hi0) {
    std::vector<RootInterval> out;
    ZPoly q = zsquarefree(p);
    if (zdeg(q) <= 0) return out;
    auto chain = sturm_chain(q);
    if (zsign_at(q, lo0) == 0 || zsign_at(q, hi0) == 0)
        throw Error("isolate_roots: interval endpoint is a root");
    int k = sturm_count(chain, lo0, hi0);
    isolate_rec(q, chain, lo0, hi0, k, out);
    return out;
}

std::vector<RootInterval> isolate_positive_roots(const ZPoly& p) {
    ZPoly q = zsquarefree(zstrip_zero_roots(p));
    if (zdeg(q) <= 0) return {};
    return isolate_roots(q, Rat(0), root_bound(q));
}

void refine_root(const ZPoly& p, RootInterval& r, const Rat& eps) {
    if (r.lo == r.hi) return;
    int slo = zsign_at(p, r.lo);
    while (r.hi - r.lo > eps) {
        Rat m = (r.lo + r.hi) / 2;
        int s = zsign_at(p, m);
        if (s == 0) {
            r.lo = r.hi = m;
            return;
        }
        if (s == slo)
            r.lo = m;
        else
            r.hi = m;
    }
}

int UniPoly::degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
int UniPoly::low_degree() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }

void UniPoly::add(int e, const Rat& c) {
    if (c == 0) return;
    auto& x = coeffs[e];
    x += c;
    if (x == 0) coeffs.erase(e);
}

ZPoly UniPoly::normalized() const {
    if (coeffs.empty()) return {};
    int lo = low_degree();
    Int den = 1;
    for (const auto& [e, c] : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly p(degree() - lo + 1);
    for (const auto& [e, c] : coeffs) p[e - lo] = c.get_num() * (den / c.get_den());
    return zprimitive(p);
}

int sturm_count_nonzero_real_roots(const UniPoly& g) {
    if (g.is_zero()) throw ZeroPolynomialError("root count of zero polynomial");
    ZPoly q = zstrip_zero_roots(g.normalized());
    if (zdeg(q) <= 0) return 0;
    auto chain = sturm_chain(q);
    return sturm_count(chain, std::nullopt, std::nullopt);
}

bool has_multiple_nonzero_real_root(const UniPoly& g) {
    ZPoly q = zstrip_zero_roots(g.normalized());
    if (zdeg(q) <= 1) return false;
    ZPoly d = zgcd(q, zderiv(q));
    if (zdeg(d) <= 0) return false;
    return sturm_count(sturm_chain(d), std::nullopt, std::nullopt) > 0;
}

}  // namespace mz

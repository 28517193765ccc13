#include "mzeta/weights.hpp"

#include <algorithm>
#include <numeric>

#include "mzeta/bounds.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/lattice.hpp"

namespace mz {

namespace {

// Unique solution x of <nu, x> = 1 over the support, if any.
std::optional<std::vector<Rat>> solve_unit_levels(const Poly& f) {
    const int n = f.nvars();
    std::vector<std::vector<Rat>> rows;
    for (const auto& [e, c] : f.terms()) {
        std::vector<Rat> r(static_cast<std::size_t>(n + 1));
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
        r[static_cast<std::size_t>(n)] = 1;
        rows.push_back(r);
    }
    std::size_t rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        Rat inv = 1 / rows[rank][static_cast<std::size_t>(col)];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][static_cast<std::size_t>(col)] == 0) continue;
            Rat factor = rows[r][static_cast<std::size_t>(col)];
            for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) rows[r][j] -= factor * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][static_cast<std::size_t>(n)] != 0) return std::nullopt;
    if (rank != static_cast<std::size_t>(n)) return std::nullopt;
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < rank; ++r)
        x[static_cast<std::size_t>(pivot_col[r])] = rows[r][static_cast<std::size_t>(n)];
    return x;
}

std::vector<long long> support_of(const ZetaSeries& s) {
    std::vector<long long> A;
    for (const auto& c : s.coefficients)
        if (!c.value.is_zero()) A.push_back(c.k);
    return A;
}

bool nonzero_at(const ZetaSeries& s, long long k) { return k <= s.K && !s.at(k).value.is_zero(); }

// Integer 1/x when x > 0 is a unit fraction.
std::optional<long long> unit_inverse(const Rat& x) {
    if (x <= 0 || x.get_num() != 1) return std::nullopt;
    return x.get_den().get_si();
}

Rat inv(long long p) { return make_rat(1, p); }

std::string show(const std::optional<long long>& x) { return x ? std::to_string(*x) : "inf"; }

}  // namespace

std::optional<WHStructure> detect_wh(const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    auto x = solve_unit_levels(f);
    if (!x) return std::nullopt;
    for (const auto& xi : *x)
        if (xi <= 0) return std::nullopt;
    long long L = 1;
    for (const auto& xi : *x) L = ilcm(L, xi.get_den().get_si());
    WHStructure s;
    for (const auto& xi : *x) s.w.push_back(Rat(xi * static_cast<long>(L)).get_num().get_si());
    long long g = vgcd(s.w);
    for (auto& wi : s.w) wi /= g;
    s.d = L / g;
    for (long long wi : s.w) s.p.push_back(s.d % wi == 0 ? s.d / wi : 0);
    s.v = s.w;
    s.m_f_v = s.d;
    s.s_v = std::accumulate(s.w.begin(), s.w.end(), 0LL);
    s.h_v = s.m_f_v - s.s_v;
    return s;
}

SignClassification classify_hv_from_zeta(const ZetaSeries& series, int n) {
    SignClassification c;
    AlphaEstimate est = alpha0_from_series(series);
    auto level = [&](long long k) {
        const UPoly& a = series.at(k).value;
        return make_rat(a.degree() - n + k, k);
    };
    if (est.envelope > 0) {
        long long m = est.attaining.front();
        // The envelope must repeat at 2m; otherwise the horizon may hide a
        // larger value.
        if (2 * m > series.K || !nonzero_at(series, 2 * m) || level(2 * m) != est.envelope)
            throw HorizonTooSmall("envelope attained at k = " + std::to_string(m) +
                                  " but not confirmed at k = " + std::to_string(2 * m));
        c.sign = '+';
        c.L_e = est.envelope;
        c.m_f_v = m;
        Rat h = est.envelope * static_cast<long>(m);
        c.h_v = h.get_num().get_si();
        c.basis = "L_e > 0 from the degree envelope";
        return c;
    }
    c.L_e = 0;
    if (!est.attaining.empty()) {
        long long m = est.attaining.front();
        if (2 * m > series.K || !nonzero_at(series, 2 * m) || level(2 * m) != 0)
            throw HorizonTooSmall("deg = n - k at k = " + std::to_string(m) + " but not confirmed at k = " +
                                  std::to_string(2 * m));
        c.sign = '0';
        c.m_f_v = m;
        c.basis = "deg [A_k] <= n - k with periodic equality";
        return c;
    }
    // h(v) = 0 forces sum 1/p_i = 1, whose solutions have lcm at most 6.
    long long needed = n == 1 ? 2 : (n == 2 ? 4 : 12);
    if (series.K < needed)
        throw HorizonTooSmall("no equality witness and horizon below " + std::to_string(needed));
    c.sign = '-';
    c.basis = "deg [A_k] < n - k for all k in the horizon";
    return c;
}

WeightReport recover_weights_2var(const ZetaSeries& series) {
    WeightReport r;
    auto A = support_of(series);
    if (A.empty()) throw HorizonTooSmall("series vanishes within the horizon");
    r.evidence.p1 = A.front();
    r.sign = classify_hv_from_zeta(series, 2);
    long long p1 = r.evidence.p1;
    Rat sigma;
    if (r.sign.sign == '+') {
        r.evidence.L_e = r.sign.L_e;
        sigma = 1 - r.sign.L_e;
        r.evidence.branch = "L_e > 0";
    } else if (r.sign.sign == '0') {
        r.evidence.L_e = Rat(0);
        sigma = 1;
        r.evidence.branch = "h(v) = 0";
    } else {
        r.evidence.branch = "h(v) < 0";
        throw AmbiguousError("order " + std::to_string(p1) +
                             ": with h(v) < 0 the series does not depend on p2 (candidates p2 >= " +
                             std::to_string(p1) + ")");
    }
    r.evidence.sigma = sigma;
    auto p2 = unit_inverse(sigma - inv(p1));
    if (!p2 || *p2 < p1) throw AmbiguousError("no intercept pair matches order and L_e");
    r.recovered = {p1, *p2};
    r.verdict = "recovered";
    return r;
}

WeightReport recover_weights_3var(const ZetaSeries& series) {
    WeightReport r;
    auto A = support_of(series);
    if (A.empty()) throw HorizonTooSmall("series vanishes within the horizon");
    const long long p1 = A.front();
    r.evidence.p1 = p1;
    r.sign = classify_hv_from_zeta(series, 3);
    if (r.sign.sign == '-') {
        r.evidence.branch = "h(v) < 0";
        r.verdict = "h(v)<0: out of scope per paper";
        return r;
    }
    Rat sigma = r.sign.sign == '+' ? 1 - r.sign.L_e : Rat(1);
    r.evidence.L_e = r.sign.L_e;
    r.evidence.sigma = sigma;
    const long long m = r.sign.m_f_v;
    if (series.K < 2 * m + 1)
        throw HorizonTooSmall("weight recovery needs K >= " + std::to_string(2 * m + 1));

    // alpha: start of the final run of nonzero coefficients; a finite alpha
    // is at most m_f(v) + 1, so a later start means alpha is infinite.
    std::optional<long long> alpha;
    if (nonzero_at(series, series.K)) {
        long long a = series.K;
        while (a > 1 && nonzero_at(series, a - 1)) --a;
        if (a <= m + 1) alpha = a;
    }
    std::optional<long long> beta, delta;
    for (long long k : A) {
        if (!beta && k % p1 != 0) beta = k;
        if (!delta && series.at(k).value.eval(Int(-1)) == 0) delta = k;
    }
    r.evidence.alpha = alpha;
    r.evidence.beta = beta;
    r.evidence.delta = delta;

    auto p3_for = [&](long long p2) -> std::optional<long long> {
        auto p3 = unit_inverse(sigma - inv(p1) - inv(p2));
        if (!p3 || *p3 < p2) return std::nullopt;
        return p3;
    };

    long long p2 = 0;
    if (p1 % 2 != 0) {
        if (!beta) throw AmbiguousError("p1 odd but beta is infinite");
        long long b = *beta;
        if ((b - 1) % p1 != 0) {
            p2 = b;
            r.evidence.branch = "p1 odd, p1 does not divide beta-1";
        } else if (!alpha || b - 1 < *alpha) {
            p2 = b;
            r.evidence.branch = "p1 odd, p1 | beta-1, beta-1 < alpha";
        } else if (b - 1 > *alpha) {
            p2 = b;
            r.evidence.branch = "p1 odd, p1 | beta-1, beta-1 > alpha";
            r.evidence.notes.push_back("case outside the odd-p1 rule; p1 cannot divide p2 here");
        } else {
            r.evidence.branch = "p1 odd, p1 | beta-1, beta = alpha+1";
            bool low = p3_for(b - 1).has_value();
            bool high = sigma == inv(p1) + 2 * inv(b);
            if (low && !high) {
                p2 = b - 1;
            } else if (high && !low) {
                p2 = b;
            } else if (low && high) {
                // Only (3,3,6) against (3,4,4) survives.
                const UPoly q4 = series.at(4).value.shifted(3);
                const UPoly q5 = series.at(5).value.shifted(4);
                const UPoly sq = UPoly::u_minus_1_pow(2);
                auto multiple_of_sq = [&](const UPoly& q) -> std::optional<std::int64_t> {
                    if (q.is_zero()) return 0;
                    if (q.degree() != 2 || q.low_degree() != 0) return std::nullopt;
                    std::int64_t c = q.coeff(2);
                    return q == sq * UPoly(c) ? std::optional<std::int64_t>(c) : std::nullopt;
                };
                auto c4 = multiple_of_sq(q4);
                if (!c4) {
                    p2 = 4;
                    r.evidence.tie_break = "[A_4] u^3 not a multiple of (u-1)^2";
                } else if (*c4 != 1) {
                    p2 = 3;
                    r.evidence.tie_break = "[A_4] u^3 = " + std::to_string(*c4) + "(u-1)^2";
                } else {
                    auto c5 = multiple_of_sq(q5);
                    if (c5 && *c5 == 1) {
                        p2 = 3;
                    } else if (c5 && *c5 == 2) {
                        p2 = 4;
                    } else {
                        throw AmbiguousError("(3,3,6) or (3,4,4): [A_5] fingerprint " + q5.to_string());
                    }
                    r.evidence.tie_break = "[A_4] u^3 = (u-1)^2, [A_5] u^4 = " + q5.to_string();
                }
            } else {
                throw AmbiguousError("neither beta-1 nor beta fits the sum of inverse intercepts");
            }
        }
    } else {
        std::optional<long long> best;
        for (const auto& x : {alpha, beta, delta})
            if (x && (!best || *x < *best)) best = x;
        if (best) {
            p2 = *best;
            r.evidence.branch = "p1 even, min(alpha, beta, delta)";
        } else {
            // Every face measure vanishes and p1 divides p2 and p3. Each
            // intercept lies in A(f), which with sigma leaves one pair.
            std::vector<long long> fits;
            for (long long q = p1; inv(q) >= (sigma - inv(p1)) / 2; ++q) {
                auto p3 = p3_for(q);
                if (!p3) continue;
                if (q > series.K) throw HorizonTooSmall("candidate p2 = " + std::to_string(q) + " beyond horizon");
                if (!nonzero_at(series, q)) continue;
                if (*p3 > series.K) throw HorizonTooSmall("candidate p3 = " + std::to_string(*p3) + " beyond horizon");
                if (nonzero_at(series, q) && nonzero_at(series, *p3)) fits.push_back(q);
            }
            if (fits.size() != 1) throw AmbiguousError("p1 even, alpha, beta, delta infinite and " +
                                                       std::to_string(fits.size()) + " intercept pairs fit");
            p2 = fits.front();
            r.evidence.branch = "p1 even, alpha, beta, delta infinite; unique pair in A(f)";
        }
        if (alpha && beta && *alpha == *beta - 1 && *alpha % p1 == 0) {
            UPoly special = UPoly::u_minus_1_pow(1).shifted(static_cast<int>(-*alpha / p1));
            if (series.at(*alpha).value == special) {
                p2 = *beta;
                r.evidence.branch = "p1 even, alpha = beta-1 with [A_alpha] = u^(-alpha/p1)(u-1)";
            }
        }
    }
    auto p3 = p3_for(p2);
    if (!p3 || p2 < p1)
        throw AmbiguousError("p2 = " + std::to_string(p2) + " gives no integer p3 (alpha " + show(alpha) +
                             ", beta " + show(beta) + ", delta " + show(delta) + ")");
    r.recovered = {p1, p2, *p3};
    r.verdict = "recovered";
    // The two triples share p1 and sigma; record their separating levels.
    if (r.evidence.tie_break.empty() && p1 == 3 && ((p2 == 3 && *p3 == 6) || (p2 == 4 && *p3 == 4)) &&
        series.K >= 5)
        r.evidence.tie_break = "[A_4] u^3 = " + series.at(4).value.shifted(3).to_string() +
                               ", [A_5] u^4 = " + series.at(5).value.shifted(4).to_string();
    return r;
}

WeightReport recover_weights(const ZetaSeries& series) {
    if (series.n == 2) return recover_weights_2var(series);
    if (series.n == 3) return recover_weights_3var(series);
    throw DimensionError("weight recovery needs two or three variables");
}

long long weights_horizon(const std::vector<long long>& p) {
    long long l = 1;
    for (long long x : p) l = ilcm(l, x);
    return std::max<long long>(2 * l + 2, 12);
}

std::vector<RoundTripGerm> roundtrip_corpus() {
    std::vector<RoundTripGerm> out;
    for (long long p = 3; p <= 8; ++p)
        for (long long q = p; q <= 8; ++q)
            for (long long r = q; r <= 8; ++r) {
                if (inv(p) + inv(q) + inv(r) > 1) continue;
                out.push_back({"x^" + std::to_string(p) + "+y^" + std::to_string(q) + "+z^" + std::to_string(r),
                               {p, q, r}});
            }
    out.push_back({"x^3+y^3+z^6+x*y*z^2", {3, 3, 6}});
    out.push_back({"x^3+y^4-z^4+y^2*z^2", {3, 4, 4}});
    out.push_back({"x^3+y^6+z^6+x*y^2*z^2", {3, 6, 6}});
    out.push_back({"x^4+y^4+z^4-3*x^2*y^2", {4, 4, 4}});
    out.push_back({"x^4+y^6+z^12+x^2*y^3", {4, 6, 12}});
    return out;
}

}  // namespace mz

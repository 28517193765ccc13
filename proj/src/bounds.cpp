#include "mzeta/bounds.hpp"

#include <algorithm>
#include <functional>

#include "mzeta/closed_forms.hpp"
#include "mzeta/errors.hpp"

namespace mz {

namespace {

// Calls fn on every a in Z^n_{>0} with coordinate sum s; stops when fn
// returns true and reports whether it did.
bool for_each_composition(int n, long long s, const std::function<bool(const IVec&)>& fn) {
    if (s < n) return false;
    IVec a(static_cast<std::size_t>(n), 1);
    std::function<bool(int, long long)> rec = [&](int i, long long left) -> bool {
        if (i == n - 1) {
            a[static_cast<std::size_t>(i)] = left;
            return fn(a);
        }
        for (long long x = 1; x <= left - (n - 1 - i); ++x) {
            a[static_cast<std::size_t>(i)] = x;
            if (rec(i + 1, left - x)) return true;
        }
        return false;
    };
    return rec(0, s);
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat level_of(const UPoly& c, int n, long long k) {
    return Rat(static_cast<long>(c.degree() - n + k)) / Rat(static_cast<long>(k));
}

}  // namespace

FacetLimitResult facet_limit_check(const UPoly& coefficient, const NewtonData& nd,
                                   const std::vector<FaceMeasure>& ms, long long k) {
    FacetLimitResult r;
    r.k = k;
    if (!coefficient.divisible_by_u_minus_1())
        throw DivisibilityError("(u-1) does not divide [A_" + std::to_string(k) + "]");
    r.lhs = coefficient.div_u_minus_1().eval_rat(1);
    r.rhs = 0;
    for (const auto& face : nd.faces) {
        if (face.dim != nd.n - 1 || face.normal_rays.size() != 1) continue;
        const IVec& v = face.normal_rays[0];
        if (std::any_of(v.begin(), v.end(), [](long long x) { return x <= 0; })) continue;
        long long m = m_f(nd, v);
        if (m <= 0 || k % m != 0) continue;
        // ((u-1)^dim - [X^_gamma]) at u = 1
        Rat term = face.dim == 0 ? 1 : 0;
        term -= ms.at(static_cast<std::size_t>(face.id)).x_hat.eval_rat(1);
        r.rhs += term;
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

std::optional<long long> max_h_at_level(const NewtonData& nd, long long k) {
    // Capping every coordinate at k keeps m_f(a) = k and lowers s(a), so
    // minimizers live in [1,k]^n and s(a) <= n k.
    for (long long s = nd.n; s <= static_cast<long long>(nd.n) * k; ++s) {
        bool found = for_each_composition(nd.n, s, [&](const IVec& a) {
            return std::all_of(a.begin(), a.end(), [&](long long x) { return x <= k; }) && m_f(nd, a) == k;
        });
        if (found) return k - s;
    }
    return std::nullopt;
}

std::optional<long long> max_h_up_to(const NewtonData& nd, long long k) {
    std::optional<long long> best;
    for (long long j = 1; j <= k; ++j) {
        auto h = max_h_at_level(nd, j);
        if (h && (!best || *h > *best)) best = h;
    }
    return best;
}

DegreeBoundReport degree_bound_report(const ZetaSeries& series, const NewtonData& nd,
                                      const std::vector<FaceMeasure>& ms, bool throw_on_violation) {
    DegreeBoundReport rep;
    LeadingExponent le = leading_exponent(nd);
    rep.L_e = le.value;
    rep.position = position_of_ones(nd);
    const int n = nd.n;

    std::optional<WHFaces> wh;
    if (n == 3) {
        try {
            wh = wh_faces(nd);
            rep.wh_checked = true;
        } catch (const NotWeightedHomogeneousError&) {
        }
    }

    // Smallest level of an a > 0 with h(a) = 0 whose face carries a
    // top-degree [X^]; only relevant when L_e = 0.
    std::optional<long long> q_level;
    if (rep.L_e == 0) {
        for (long long s = n; s < series.K && !q_level; ++s) {
            for_each_composition(n, s, [&](const IVec& a) {
                if (m_f(nd, a) != s) return false;
                auto g = gamma_f(nd, a);
                if (!g) return false;
                const auto& x = ms.at(static_cast<std::size_t>(*g)).x_hat;
                int dim = nd.face(*g).dim;
                if (dim >= 1 && !x.is_zero() && x.degree() == dim - 1) q_level = s;
                return q_level.has_value();
            });
        }
    }

    for (const auto& c : series.coefficients) {
        DegreeRow row;
        row.k = c.k;
        row.bound = Rat(static_cast<long>(n - c.k)) + Rat(static_cast<long>(c.k)) * rep.L_e;
        row.zero = c.value.is_zero();
        if (!row.zero) {
            row.degree = c.value.degree();
            if (Rat(row.degree) > row.bound) rep.violations.push_back(c.k);
            row.equality = Rat(row.degree) == row.bound;
        }
        Rat s_target = Rat(static_cast<long>(c.k)) * (1 - rep.L_e);
        if (is_integer(s_target)) {
            long long s = s_target.get_num().get_si();
            row.level_equality =
                for_each_composition(n, s, [&](const IVec& a) { return m_f(nd, a) == c.k; });
        }
        row.predicted_equality = row.level_equality || (q_level && c.k > *q_level);
        if (row.predicted_equality != row.equality) rep.pattern_mismatches.push_back(c.k);
        if (row.level_equality != row.equality) rep.level_mismatches.push_back(c.k);
        if (rep.position == -1 && c.k <= 40) {
            auto h = max_h_up_to(nd, c.k);
            bool match = !row.zero && h && row.degree == n - c.k + *h;
            if (!match) rep.interior_formula_mismatches.push_back(c.k);
        }
        if (wh && !row.zero) {
            Rat b = 3;
            for (long long p : wh->p) b -= make_rat(c.k, p);
            if (Rat(row.degree) > b) rep.wh_violations.push_back(c.k);
        }
        rep.rows.push_back(row);
    }

    if (rep.position != -1) {
        for (const auto& a : le.max_set) {
            long long m = m_f(nd, a);
            for (long long k = m; m > 0 && k <= series.K; k += m)
                if (!rep.rows.at(static_cast<std::size_t>(k - 1)).equality) rep.missed_multiples.push_back(k);
        }
        std::sort(rep.missed_multiples.begin(), rep.missed_multiples.end());
        rep.missed_multiples.erase(std::unique(rep.missed_multiples.begin(), rep.missed_multiples.end()),
                                   rep.missed_multiples.end());
    }

    if (throw_on_violation && !rep.violations.empty())
        throw BoundViolation("degree bound fails at k = " + std::to_string(rep.violations.front()));
    return rep;
}

AlphaEstimate alpha0_from_series(const ZetaSeries& series) {
    AlphaEstimate est;
    est.envelope = 0;
    for (const auto& c : series.coefficients) {
        if (c.value.is_zero()) continue;
        Rat e = level_of(c.value, series.n, c.k);
        if (e > est.envelope) est.envelope = e;
    }
    for (const auto& c : series.coefficients)
        if (!c.value.is_zero() && level_of(c.value, series.n, c.k) == est.envelope)
            est.attaining.push_back(c.k);
    est.alpha0 = 1 - est.envelope;
    return est;
}

std::vector<long long> leading_counts(const ZetaSeries& series, const Rat& L_e) {
    std::vector<long long> c;
    for (const auto& coef : series.coefficients) {
        Rat target = Rat(static_cast<long>(series.n - coef.k)) + Rat(static_cast<long>(coef.k)) * L_e;
        c.push_back(is_integer(target) ? coef.value.coeff(static_cast<int>(target.get_num().get_si())) : 0);
    }
    return c;
}

AlphaReport alpha0_report(const ZetaSeries& series, const NewtonData& nd) {
    AlphaReport rep;
    LeadingExponent le = leading_exponent(nd);
    long long first = 0;
    for (const auto& a : le.max_set) {
        long long m = m_f(nd, a);
        if (m > 0 && (first == 0 || m < first)) first = m;
    }
    if (first > series.K)
        throw HorizonTooSmall("series horizon " + std::to_string(series.K) + " stops before k = " +
                              std::to_string(first));
    rep.alpha0_series = alpha0_from_series(series).alpha0;
    rep.alpha0_geometry = 1 - le.value;
    rep.agree = rep.alpha0_series == rep.alpha0_geometry;
    rep.c = leading_counts(series, le.value);
    if (le.max_set.size() == 1 && h_of(nd, le.max_set[0]) > 0) {
        rep.singleton_positive = true;
        rep.period = m_f(nd, le.max_set[0]);
        long long limit = std::min(series.K, 2 * rep.period);
        for (long long k = 1; k <= limit; ++k) {
            long long expect = k % rep.period == 0 ? 1 : 0;
            if (rep.c.at(static_cast<std::size_t>(k - 1)) != expect) rep.period_pattern_ok = false;
        }
    }
    return rep;
}

long long default_alpha_horizon(const NewtonData& nd, bool* capped) {
    long long l = 1;
    for (const auto& a : nd.generators_pos) {
        l = ilcm(l, m_f(nd, a));
        if (l > 120) break;
    }
    long long K = 2 * l;
    if (capped) *capped = K > 240;
    return std::min<long long>(K, 240);
}

TrichotomyResult trichotomy_check(const NewtonData& nd) {
    TrichotomyResult r;
    r.position = position_of_ones(nd);
    LeadingExponent le = leading_exponent(nd);
    r.L_e = le.value;
    r.max_set_empty = le.max_set.empty();
    switch (r.position) {
        case 1: r.holds = r.L_e > 0; break;
        case 0: r.holds = r.L_e == 0 && !r.max_set_empty; break;
        default: r.holds = r.L_e == 0 && r.max_set_empty; break;
    }
    return r;
}

}  // namespace mz

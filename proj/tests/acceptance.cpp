// Acceptance run: one PASS/FAIL line per criterion, followed by details for
// the criteria that fail. The exit status is 0 whenever the run completes, so
// that a failing criterion is reported rather than aborting the test suite.
#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "mzeta/bounds.hpp"
#include "mzeta/closed_forms.hpp"
#include "mzeta/errors.hpp"
#include "mzeta/oracle.hpp"
#include "mzeta/weights.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;
using mz::test::Germ;
using mz::test::up;

namespace {

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> details;

    void fail(const std::string& d) {
        pass = false;
        if (details.size() < 12) details.push_back(d);
        else if (details.size() == 12) details.push_back("...");
    }
};

int nvars_of(const std::string& text) {
    if (text.find('z') != std::string::npos) return 3;
    if (text.find('y') != std::string::npos) return 2;
    return 1;
}

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> c = {
        "x^2", "x^3", "x^5",
        "x^2+y^2", "x^2-y^2", "x^2+y^3", "x^3+y^4", "x^4+y^4-3*x^2*y^2", "x^2+y^7", "x^3+y^5+x*y^3",
        "x^5-y^3+x^2*y^2", "x^6+y^4", "x^5+y^5+x^2*y^2",
        "x^2+y^2+z^2", "x^2+y^2-z^2", "x^2+y^2+z^3", "x^2-y^3+z^7", "x^3+y^3+z^3", "x^3+y^4+z^5",
        "x^3+y^3+z^6", "x^3+y^4+z^4", "x^3+y^4-z^4", "x^3+y^3+z^6+x*y*z^2", "x^3+y^4-z^4+y^2*z^2",
        "x^4+y^4+z^4-3*x^2*y^2", "x^2+y^5+z^5+x*y*z", "x^3+y^3+z^5", "x^2+y^4+z^4+x*y*z",
        "x^4+y^6+z^12+x^2*y^3", "x^3-y^5+z^4"};
    return c;
}

struct Prepared {
    std::string text;
    Germ g;
};

// The corpus with measures; germs that fail the hypotheses are reported.
std::vector<Prepared> prepare(Outcome& sanity) {
    std::vector<Prepared> out;
    for (const auto& t : corpus()) {
        Germ g = germ(t, nvars_of(t));
        auto nondeg = nondegenerate_check(g.nd);
        if (!is_convenient(g.nd) || nondeg.value != Tri::True) {
            sanity.fail(t + " is not convenient and non-degenerate");
            continue;
        }
        out.push_back({t, std::move(g)});
    }
    return out;
}

std::string show(const UPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

Outcome criterion1() {
    Outcome o;
    o.summary = "x^d, d = 2..5, K = 3d: [A_k] = (u-1)u^(-k/d) when d | k, else 0";
    for (int d = 2; d <= 5; ++d) {
        Germ g = germ("x^" + std::to_string(d), 1);
        ZetaSeries s = zeta_series(g.nd, g.ms, 3 * d, Sign::Naive);
        for (long long k = 1; k <= 3 * d; ++k) {
            UPoly want = k % d == 0 ? up("u-1", static_cast<int>(-k / d)) : UPoly();
            if (s.at(k).value != want)
                o.fail("d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + show(s.at(k).value) +
                       " != " + show(want));
        }
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    o.summary = "x^d1 + y^d2, d1, d2 in {2,4,6}, k = d1'd2'(d1,d2): series sum (u^2-1)u^-(d1'+d2')";
    for (int d1 : {2, 4, 6}) {
        for (int d2 : {2, 4, 6}) {
            int g = std::gcd(d1, d2);
            int a = d1 / g, b = d2 / g;
            long long k = static_cast<long long>(a) * b * g;
            Germ gm = germ("x^" + std::to_string(d1) + "+y^" + std::to_string(d2), 2);
            UPoly got = coefficient(gm.nd, gm.ms, k, Sign::Naive).value;
            // (u-1)^2 (u^-D + 2 sum_{s>=1} u^(-D-s)) = (u-1)^2 u^-D (u+1)/(u-1)
            UPoly want = up("u^2-1", -(a + b));
            if (got != want)
                o.fail("(" + std::to_string(d1) + "," + std::to_string(d2) + ") k=" + std::to_string(k) + ": " +
                       show(got) + " != " + show(want));
        }
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    o.summary = "(3,3,6) and (3,4,4) fingerprints at levels 4 and 5";
    const UPoly sq = UPoly::u_minus_1_pow(2);
    const UPoly u1 = UPoly::u_minus_1_pow(1);
    for (const std::string t : {"x^3+y^3+z^6", "x^3+y^3+z^6+x*y*z^2"}) {
        Germ g = germ(t, 3);
        ZetaSeries s = zeta_series(g.nd, g.ms, 5, Sign::Naive);
        if (s.at(4).value != sq.shifted(-3)) o.fail(t + " [A_4] = " + show(s.at(4).value));
        if (s.at(5).value != sq.shifted(-4)) o.fail(t + " [A_5] = " + show(s.at(5).value));
    }
    for (const std::string t : {"x^3+y^4+z^4", "x^3+y^4-z^4", "x^3+y^4-z^4+y^2*z^2"}) {
        Germ g = germ(t, 3);
        ZetaSeries s = zeta_series(g.nd, g.ms, 5, Sign::Naive);
        WHFaces w = wh_faces(g.nd);
        const UPoly& x1 = g.ms.at(static_cast<std::size_t>(w.edge[0])).x_hat;
        UPoly want4 = (up("u^2-1") - u1 * x1).shifted(-3);
        UPoly want5 = (u1 * x1).shifted(-4);
        if (s.at(4).value != want4)
            o.fail(t + " [A_4] = " + show(s.at(4).value) + ", expected " + show(want4));
        if (s.at(5).value != want5) {
            UPoly brute = truncated_coefficient(g.nd, g.ms, 5, 14);
            o.fail(t + " [A_5] = " + show(s.at(5).value) + ", expected " + show(want5) + " with [X^_g1] = " +
                   show(x1) + "; independent enumeration (s(a) <= 14) gives " + show(brute));
        }
    }
    return o;
}

Outcome criterion4(const std::vector<Prepared>& cs) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    long long compared = 0;
    for (const auto& p : cs) {
        ZetaSeries s = zeta_series(p.g.nd, p.g.ms, 12, Sign::Naive);
        for (long long D : {6, 9, 12}) {
            int low = p.g.nd.n - static_cast<int>(D);
            for (long long k = 1; k <= 12; ++k) {
                ++compared;
                UPoly a = truncate_below(truncated_coefficient(p.g.nd, p.g.ms, k, D), low);
                UPoly b = truncate_below(s.at(k).value, low);
                if (a != b)
                    o.fail(p.text + " k=" + std::to_string(k) + " D=" + std::to_string(D) + ": " + show(a) +
                           " != " + show(b));
            }
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << "truncated enumeration = engine above degree n - D on " << cs.size() << " germs, k <= 12, D in {6,9,12} ("
       << compared << " comparisons, " << static_cast<int>(secs) << " s)";
    o.summary = ss.str();
    if (secs > 600) o.fail("runtime budget of 10 min exceeded");
    return o;
}

long long bound_horizon(const NewtonData& nd) {
    return std::max<long long>(16, std::min<long long>(default_alpha_horizon(nd), 130));
}

Outcome criterion5(const std::vector<Prepared>& cs) {
    Outcome o;
    long long rows = 0, wh = 0;
    for (const auto& p : cs) {
        long long K = bound_horizon(p.g.nd);
        ZetaSeries s = zeta_series(p.g.nd, p.g.ms, K, Sign::Naive);
        DegreeBoundReport r = degree_bound_report(s, p.g.nd, p.g.ms);
        rows += static_cast<long long>(r.rows.size());
        auto list = [](const std::vector<long long>& v) {
            std::string out;
            for (std::size_t i = 0; i < v.size() && i < 8; ++i) out += (i ? "," : "") + std::to_string(v[i]);
            return out + (v.size() > 8 ? ",..." : "");
        };
        if (!r.violations.empty()) o.fail(p.text + ": degree above n - k + k L_e at k = " + list(r.violations));
        if (!r.missed_multiples.empty())
            o.fail(p.text + ": no equality at multiples of m_f(v), k = " + list(r.missed_multiples));
        if (r.wh_checked) ++wh;
        if (!r.wh_violations.empty()) {
            auto w = detect_wh(p.g.f);
            const DegreeRow& row = r.rows.at(static_cast<std::size_t>(r.wh_violations.front() - 1));
            std::ostringstream ss;
            ss << p.text << ": deg[A_k] > 3 - sum k/p_i at k = " << list(r.wh_violations) << " (h(v) = "
               << (w ? w->h_v : 0) << "; k = " << row.k << " has degree " << row.degree << ")";
            o.fail(ss.str());
        }
    }
    o.summary = "deg[A_k] <= n - k + k L_e on " + std::to_string(cs.size()) + " germs (" + std::to_string(rows) +
                " coefficients), equality at multiples of m_f(v), weighted homogeneous bound 3 - sum k/p_i on " +
                std::to_string(wh) + " germs";
    return o;
}

Outcome criterion6(const std::vector<Prepared>& cs) {
    Outcome o;
    int two = 0, three = 0;
    for (const auto& p : cs) {
        if (p.g.nd.n == 1) continue;
        bool wh3 = false;
        if (p.g.nd.n == 3) {
            try {
                wh_faces(p.g.nd);
                wh3 = true;
            } catch (const NotWeightedHomogeneousError&) {
            }
            if (!wh3) continue;
        }
        (p.g.nd.n == 2 ? two : three) += 1;
        ZetaSeries s = zeta_series(p.g.nd, p.g.ms, 12, Sign::Naive);
        for (long long k = 1; k <= 12; ++k) {
            UPoly c = p.g.nd.n == 2 ? two_var_closed_form(p.g.nd, p.g.ms, k)
                                    : three_var_wh_closed_form(p.g.nd, p.g.ms, k);
            if (c != s.at(k).value)
                o.fail(p.text + " k=" + std::to_string(k) + ": closed form " + show(c) + " != " + show(s.at(k).value));
        }
    }
    o.summary = "closed forms = general engine, k <= 12, on " + std::to_string(two) + " two-variable and " +
                std::to_string(three) + " weighted homogeneous three-variable germs";
    return o;
}

Outcome criterion7(const std::vector<Prepared>& cs) {
    Outcome o;
    long long checked = 0, holds = 0, not_divisible = 0;
    std::vector<std::string> first;
    for (const auto& p : cs) {
        ZetaSeries s = zeta_series(p.g.nd, p.g.ms, 8, Sign::Naive);
        for (long long k = 1; k <= 8; ++k) {
            ++checked;
            try {
                FacetLimitResult r = facet_limit_check(s.at(k).value, p.g.nd, p.g.ms, k);
                if (r.holds) {
                    ++holds;
                } else {
                    o.fail(p.text + " k=" + std::to_string(k) + ": ([A_k]/(u-1))(1) = " + rat_to_string(r.lhs) +
                           ", facet enumeration = " + rat_to_string(r.rhs));
                }
            } catch (const DivisibilityError& e) {
                ++not_divisible;
                o.fail(p.text + " k=" + std::to_string(k) + ": " + e.what());
            }
        }
    }
    o.summary = "(u-1) | [A_k] and the u -> 1 facet identity, k <= 8: identity holds in " + std::to_string(holds) +
                " of " + std::to_string(checked) + " cases, divisibility fails in " + std::to_string(not_divisible);
    return o;
}

Outcome criterion8() {
    Outcome o;
    auto rt = roundtrip_corpus();
    int ok = 0;
    bool separated = false;
    for (const auto& g : rt) {
        Germ gm = germ(g.text, 3);
        try {
            WeightReport r = recover_weights(zeta_series(gm.nd, gm.ms, weights_horizon(g.p), Sign::Naive));
            if (r.recovered == g.p) {
                ++ok;
                if (g.p == std::vector<long long>{3, 4, 4} && !r.evidence.tie_break.empty()) separated = true;
            } else {
                std::string got;
                for (long long x : r.recovered) got += std::to_string(x) + " ";
                o.fail(g.text + ": recovered " + got + "(" + r.verdict + ")");
            }
        } catch (const Error& e) {
            o.fail(g.text + ": " + e.what());
        }
    }
    if (!separated) o.fail("(3,4,4) was not separated from (3,3,6) by its fingerprint");
    o.summary = "black-box weight recovery on " + std::to_string(rt.size()) + " germs: " + std::to_string(ok) +
                " correct";
    return o;
}

// Convenient germ with random pure powers and up to three extra monomials.
std::string random_germ(std::mt19937_64& rng, int n) {
    static const std::vector<std::string> names = {"x", "y", "z"};
    std::uniform_int_distribution<int> power(2, 6), expo(0, 4), extra(0, 3), sign(0, 1), mag(1, 2);
    std::string text;
    auto add = [&](int c, const std::vector<int>& e) {
        std::string mono;
        for (int i = 0; i < n; ++i) {
            if (e[static_cast<std::size_t>(i)] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[static_cast<std::size_t>(i)] + "^" + std::to_string(e[static_cast<std::size_t>(i)]);
        }
        text += (c < 0 ? "-" : (text.empty() ? "" : "+"));
        if (std::abs(c) != 1) text += std::to_string(std::abs(c)) + "*";
        text += mono;
    };
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = power(rng);
        add(sign(rng) ? 1 : -1, e);
    }
    int r = n == 1 ? 0 : extra(rng);
    for (int j = 0; j < r; ++j) {
        std::vector<int> e(static_cast<std::size_t>(n));
        int total = 0;
        for (auto& x : e) total += (x = expo(rng));
        if (total < 2) continue;
        add((sign(rng) ? 1 : -1) * mag(rng), e);
    }
    return text;
}

Outcome criterion9() {
    Outcome o;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> dims(1, 10);
    int accepted = 0, redrawn = 0, singleton = 0, capped = 0;
    while (accepted < 200) {
        int d = dims(rng);
        int n = d == 1 ? 1 : (d <= 5 ? 2 : 3);
        std::string text = random_germ(rng, n);
        Germ g;
        try {
            g.vars = default_varnames(n);
            g.f = parse_germ(text, g.vars);
            g.nd = build_newton_polyhedron(g.f);
            if (!is_convenient(g.nd) || nondegenerate_check(g.nd).value != Tri::True) {
                ++redrawn;
                continue;
            }
            g.nd = unimodular_refine(g.nd);
            g.ms = compute_measures(g.nd);
        } catch (const Error&) {
            ++redrawn;
            continue;
        }
        ++accepted;
        TrichotomyResult tri = trichotomy_check(g.nd);
        if (!tri.holds) o.fail(text + ": (1,...,1) trichotomy fails");
        bool cap = false;
        long long K = default_alpha_horizon(g.nd, &cap);
        if (cap) ++capped;
        try {
            AlphaReport a = alpha0_report(zeta_series(g.nd, g.ms, K, Sign::Naive), g.nd);
            if (!a.agree)
                o.fail(text + ": alpha_0 from the series " + rat_to_string(a.alpha0_series) + " != 1 - L_e = " +
                       rat_to_string(a.alpha0_geometry));
            if (a.singleton_positive) {
                ++singleton;
                if (!a.period_pattern_ok)
                    o.fail(text + ": c_k = 1 does not follow multiples of m_f(v) = " + std::to_string(a.period));
            }
        } catch (const HorizonTooSmall& e) {
            o.fail(text + ": " + e.what());
        }
    }
    o.summary = "200 random convenient non-degenerate germs (" + std::to_string(redrawn) +
                " degenerate draws replaced): trichotomy, alpha_0 = 1 - L_e, c_k pattern on " +
                std::to_string(singleton) + " singleton cases" +
                (capped ? ", horizon capped for " + std::to_string(capped) : std::string());
    return o;
}

Outcome criterion10(const std::vector<Prepared>& cs) {
    Outcome o;
    Germ sq = germ("x^2", 1);
    for (const auto& c : zeta_series(sq.nd, sq.ms, 10, Sign::Minus).coefficients)
        if (!c.value.is_zero()) o.fail("Z^-(x^2) has [A_" + std::to_string(c.k) + "] = " + show(c.value));
    UPoly a2 = coefficient(sq.nd, sq.ms, 2, Sign::Plus).value;
    if (a2 != up("2*u^-1")) o.fail("[A+_2](x^2) = " + show(a2));
    int swapped = 0;
    std::vector<std::string> unsupported;
    for (const auto& p : cs) {
        Poly neg = -p.g.f;
        Germ h;
        h.vars = p.g.vars;
        h.f = neg;
        h.nd = unimodular_refine(build_newton_polyhedron(neg));
        h.ms = compute_measures(h.nd);
        try {
            bool ok = true;
            for (Sign s : {Sign::Plus, Sign::Minus}) {
                Sign t = s == Sign::Plus ? Sign::Minus : Sign::Plus;
                ZetaSeries a = zeta_series(p.g.nd, p.g.ms, 12, s);
                ZetaSeries b = zeta_series(h.nd, h.ms, 12, t);
                for (long long k = 1; k <= 12; ++k)
                    if (a.at(k).value != b.at(k).value) {
                        ok = false;
                        o.fail(p.text + " k=" + std::to_string(k) + ": " + sign_name(s) + " series of f " +
                               show(a.at(k).value) + " != " + sign_name(t) + " series of -f " + show(b.at(k).value));
                    }
            }
            if (ok) ++swapped;
        } catch (const UnsupportedMeasureError& e) {
            unsupported.push_back(p.text);
        }
    }
    if (!unsupported.empty()) {
        std::string list;
        for (const auto& t : unsupported) list += (list.empty() ? "" : ", ") + t;
        o.fail("signed series not computable (even-level facet surfaces) for " + std::to_string(unsupported.size()) +
               " germs: " + list);
    }
    o.summary = "Z^-(x^2) = 0, [A+_2](x^2) = 2u^-1, f <-> -f swaps plus/minus, k <= 12: verified on " +
                std::to_string(swapped) + " of " + std::to_string(cs.size()) + " corpus germs";
    return o;
}

}  // namespace

int main() {
    Outcome sanity;
    std::vector<Prepared> cs = prepare(sanity);
    std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1},
        {2, criterion2},
        {3, criterion3},
        {4, [&] { return criterion4(cs); }},
        {5, [&] { return criterion5(cs); }},
        {6, [&] { return criterion6(cs); }},
        {7, [&] { return criterion7(cs); }},
        {8, criterion8},
        {9, criterion9},
        {10, [&] { return criterion10(cs); }},
    };
    int passed = 0;
    for (auto& [id, run] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (id >= 4 && !sanity.pass) {
            for (const auto& d : sanity.details) o.fail(d);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.summary << " ["
                  << static_cast<int>(secs * 10) / 10.0 << " s]\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
        std::cout.flush();
        passed += o.pass;
    }
    std::cout << passed << " of " << criteria.size() << " criteria pass\n";
    return 0;
}

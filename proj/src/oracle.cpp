#include "mzeta/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "mzeta/errors.hpp"

namespace mz {

namespace {

// Minimum of <a, nu> over the support and the exponents attaining it.
std::pair<long long, std::vector<IVec>> direct_min(const std::vector<IVec>& support, const IVec& a) {
    long long best = 0;
    std::vector<IVec> face;
    for (const auto& nu : support) {
        long long v = dot(a, nu);
        if (face.empty() || v < best) {
            best = v;
            face.clear();
        }
        if (v == best) face.push_back(nu);
    }
    std::sort(face.begin(), face.end());
    return {best, face};
}

using Series = std::vector<Int>;  // coefficients of t^0 .. t^K

Series mul(const Series& a, const Series& b) {
    Series c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

int sign_of(const Rat& r) { return sgn(r); }

}  // namespace

UPoly truncated_coefficient(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long k,
                            long long D, Sign sign) {
    std::vector<IVec> support;
    for (const auto& [e, c] : nd.poly.terms()) support.push_back(to_ivec(e));
    std::map<std::vector<IVec>, int> face_of;
    for (const auto& f : nd.faces) face_of[f.exponents] = f.id;

    const int n = nd.n;
    UPoly total;
    IVec a(static_cast<std::size_t>(n), 1);
    std::function<void(int, long long)> rec = [&](int i, long long used) {
        if (i == n) {
            auto [m, pts] = direct_min(support, a);
            if (m > k) return;
            auto it = face_of.find(pts);
            if (it == face_of.end()) throw NondegeneracyRequiredError("initial form is not a compact face");
            const FaceMeasure& fm = ms.at(static_cast<std::size_t>(it->second));
            int s = static_cast<int>(used);
            if (sign == Sign::Naive) {
                total += m == k ? (UPoly::u_minus_1_pow(n) - fm.x_full).shifted(-s)
                                : (UPoly::u_minus_1_pow(1) * fm.x_full).shifted(static_cast<int>(-s - k + m));
            } else if (m == k) {
                const auto& x = sign == Sign::Plus ? fm.x_plus : fm.x_minus;
                if (!x) throw UnsupportedMeasureError("signed measure unavailable on face " + std::to_string(fm.face));
                total += x->shifted(-s);
            } else {
                total += fm.x_full.shifted(static_cast<int>(-s - k + m));
            }
            return;
        }
        for (long long x = 1; used + x + (n - 1 - i) <= D; ++x) {
            a[static_cast<std::size_t>(i)] = x;
            rec(i + 1, used + x);
        }
    };
    rec(0, 0);
    return total;
}

UPoly truncate_below(const UPoly& p, int lowest) {
    UPoly r;
    for (const auto& [e, c] : p.terms())
        if (e >= lowest) r.add_coeff(e, c);
    return r;
}

FukuiSample sample_fukui(const Poly& f, long long K, long long trials, std::uint64_t seed) {
    FukuiSample out;
    out.seed = seed;
    out.trials = trials;
    std::mt19937_64 rng(seed);
    const int n = f.nvars();
    const std::size_t len = static_cast<std::size_t>(K + 1);
    int maxdeg = 0;
    for (const auto& [e, c] : f.terms())
        for (int x : e) maxdeg = std::max(maxdeg, x);
    std::uniform_int_distribution<int> coef(-2, 2);
    // Low orders most of the time, occasionally anything up to K/2.
    std::uniform_int_distribution<long long> low(1, std::max<long long>(1, std::min<long long>(K, 4)));
    std::uniform_int_distribution<long long> high(1, std::max<long long>(1, K / 2));
    std::bernoulli_distribution pick_high(0.3);
    auto order = [&](std::mt19937_64& g) { return pick_high(g) ? high(g) : low(g); };
    Int den = 1;
    for (const auto& [e, c] : f.terms()) den = lcm(den, Int(c.get_den()));

    for (long long t = 0; t < trials; ++t) {
        // powers[i][j] = x_i(t)^j truncated at t^K
        std::vector<std::vector<Series>> powers(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Series x(len, 0);
            long long o = order(rng);
            for (long long j = o; j <= K; ++j) x[static_cast<std::size_t>(j)] = coef(rng);
            if (o <= K && x[static_cast<std::size_t>(o)] == 0) x[static_cast<std::size_t>(o)] = 1;
            auto& pw = powers[static_cast<std::size_t>(i)];
            pw.push_back(Series(len, 0));
            pw[0][0] = 1;
            for (int j = 1; j <= maxdeg; ++j) pw.push_back(mul(pw.back(), x));
        }
        Series value(len, 0);
        for (const auto& [e, c] : f.terms()) {
            Series term(len, 0);
            term[0] = Int(c * den);  // integer after clearing denominators
            for (int i = 0; i < n; ++i) term = mul(term, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])]);
            for (std::size_t j = 0; j < len; ++j) value[j] += term[j];
        }
        auto it = std::find_if(value.begin(), value.end(), [](const Int& v) { return v != 0; });
        if (it == value.end()) {
            ++out.truncated;
            continue;
        }
        long long ord = it - value.begin();
        if (ord >= 1) out.orders.insert(ord);
    }
    return out;
}

FaceSampleStats sample_face_counts(const Poly& f_gamma, const FaceMeasure& claim, long long trials,
                                   long long grid, std::uint64_t seed) {
    FaceSampleStats st;
    st.seed = seed;
    st.trials = trials;
    std::mt19937_64 rng(seed);
    const int n = f_gamma.nvars();
    std::uniform_int_distribution<long long> mag(1, grid * grid);
    std::uniform_int_distribution<int> flip(0, 1);
    std::map<std::vector<int>, std::set<int>> signs_by_orthant;
    for (long long t = 0; t < trials; ++t) {
        std::vector<Rat> x(static_cast<std::size_t>(n));
        std::vector<int> orthant(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            Rat r = make_rat(mag(rng), grid);  // in [1/grid, grid]
            orthant[static_cast<std::size_t>(i)] = flip(rng) ? 1 : -1;
            x[static_cast<std::size_t>(i)] = orthant[static_cast<std::size_t>(i)] > 0 ? r : Rat(-r);
        }
        Rat v = 0;
        for (const auto& [e, c] : f_gamma.terms()) {
            Rat term = c;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < e[static_cast<std::size_t>(i)]; ++j) term *= x[static_cast<std::size_t>(i)];
            v += term;
        }
        int s = sign_of(v);
        if (s > 0) ++st.positive;
        else if (s < 0) ++st.negative;
        else ++st.zero;
        signs_by_orthant[orthant].insert(s);
    }
    if (claim.definite)
        for (const auto& [o, ss] : signs_by_orthant)
            if (ss.size() > 1) st.refutes_definite = true;
    st.refutes_plus_empty = st.positive > 0 && !claim.plus_nonempty;
    st.refutes_minus_empty = st.negative > 0 && !claim.minus_nonempty;
    return st;
}

}  // namespace mz

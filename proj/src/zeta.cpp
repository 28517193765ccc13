#include "mzeta/zeta.hpp"

#include "mzeta/errors.hpp"

namespace mz {

std::string sign_name(Sign s) {
    switch (s) {
        case Sign::Plus: return "plus";
        case Sign::Minus: return "minus";
        default: return "naive";
    }
}

namespace {

const UPoly& signed_measure(const FaceMeasure& fm, Sign sign) {
    const auto& v = sign == Sign::Plus ? fm.x_plus : fm.x_minus;
    if (!v) throw UnsupportedMeasureError("face " + std::to_string(fm.face) + ": " + fm.signed_note);
    return *v;
}

// Numerators of P_k over the geometric denominator, k = 0..K.
std::vector<UPoly> cone_numerators(const Cone& cone, long long K, std::map<int, int>& den) {
    std::vector<UPoly> S(static_cast<size_t>(K + 1));
    S[0] = 1;
    for (size_t j = 0; j < cone.generators.size(); ++j) {
        long long m = cone.m_values[j];
        int s = static_cast<int>(cone.s_values[j]);
        if (m == 0) {
            if (s == 0) throw DimensionError("cone generator with m = 0 and s = 0");
            den[s]++;
            continue;
        }
        std::vector<UPoly> T(S.size());
        for (long long k = m; k <= K; ++k) T[k] = (S[k - m] + T[k - m]).shifted(-s);
        S.swap(T);
    }
    return S;
}

}  // namespace

UPoly order_slice_measure(const NewtonData& nd, const std::vector<FaceMeasure>& ms, const IVec& a,
                          long long k, Sign sign) {
    for (long long x : a)
        if (x <= 0) throw NegativeDirectionError("order slices need a > 0");
    long long m = m_f(nd, a);
    if (m > k) return UPoly();
    auto g = gamma_f(nd, a);
    if (!g) throw NondegeneracyRequiredError("direction does not select a compact face");
    const FaceMeasure& fm = ms.at(*g);
    int s = static_cast<int>(s_of(a));
    if (sign == Sign::Naive) {
        if (m == k) return (UPoly::u_minus_1_pow(nd.n) - fm.x_full).shifted(-s);
        return (UPoly::u_minus_1_pow(1) * fm.x_full).shifted(static_cast<int>(-s - k + m));
    }
    if (m == k) return signed_measure(fm, sign).shifted(-s);
    return fm.x_full.shifted(static_cast<int>(-s - k + m));
}

URat cone_P(const Cone& cone, long long k) {
    std::map<int, int> den;
    auto S = cone_numerators(cone, k, den);
    return URat(S[k], den);
}

URat cone_Q(const Cone& cone, long long k) {
    std::map<int, int> den;
    auto S = cone_numerators(cone, k, den);
    UPoly q;
    for (long long j = 0; j < k; ++j) q = (q + S[j]).shifted(-1);
    return URat(q, den);
}

ZetaEngine::ZetaEngine(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long K)
    : nd_(refined), ms_(ms), K_(K) {
    if (!refined.refined) throw DimensionError("the zeta engine needs the unimodular refinement");
    if (!is_convenient(refined)) throw NotConvenientError("the zeta engine needs a convenient germ");
    std::map<std::pair<int, std::map<int, int>>, size_t> index;
    for (const auto& cone : refined.fan) {
        if (cone.face_ref < 0) continue;
        std::map<int, int> den;
        auto S = cone_numerators(cone, K, den);
        auto key = std::make_pair(cone.face_ref, den);
        auto it = index.find(key);
        if (it == index.end()) {
            index[key] = groups_.size();
            groups_.push_back({cone.face_ref, den, S, {}});
        } else {
            auto& P = groups_[it->second].P;
            for (size_t k = 0; k < P.size(); ++k) P[k] += S[k];
        }
    }
    for (auto& g : groups_) {
        g.Q.assign(g.P.size(), UPoly());
        for (size_t k = 1; k < g.P.size(); ++k) g.Q[k] = (g.Q[k - 1] + g.P[k - 1]).shifted(-1);
    }
}

URat ZetaEngine::P(int face, long long k) const {
    URat r;
    for (auto& g : groups_)
        if (g.face == face) r += URat(g.P.at(k), g.den);
    return r;
}

URat ZetaEngine::Q(int face, long long k) const {
    URat r;
    for (auto& g : groups_)
        if (g.face == face) r += URat(g.Q.at(k), g.den);
    return r;
}

ZetaCoefficient ZetaEngine::coefficient(long long k, Sign sign, bool breakdown) const {
    if (k < 1 || k > K_) throw DimensionError("coefficient index outside the precomputed horizon");
    const UPoly torus = UPoly::u_minus_1_pow(nd_.n);
    const UPoly um1 = UPoly::u_minus_1_pow(1);
    std::map<std::map<int, int>, UPoly> by_den;
    for (auto& g : groups_) {
        const FaceMeasure& fm = ms_.at(g.face);
        const UPoly& P = g.P[k];
        const UPoly& Q = g.Q[k];
        UPoly term;
        if (sign == Sign::Naive) {
            if (!P.is_zero()) term += (torus - fm.x_full) * P;
            if (!Q.is_zero()) term += um1 * fm.x_full * Q;
        } else {
            if (!P.is_zero()) term += signed_measure(fm, sign) * P;
            if (!Q.is_zero()) term += fm.x_full * Q;
        }
        by_den[g.den] += term;
    }
    URat total;
    for (auto& [den, num] : by_den) total += URat(num, den);
    ZetaCoefficient c;
    c.k = k;
    c.sign = sign;
    c.value = total.to_upoly();
    if (breakdown) {
        for (auto& f : nd_.faces) {
            URat p = P(f.id, k).reduced(), q = Q(f.id, k).reduced();
            if (!p.is_zero() || !q.is_zero()) c.breakdown.push_back({f.id, p, q});
        }
    }
    return c;
}

ZetaSeries ZetaEngine::series(Sign sign, bool breakdown) const {
    ZetaSeries s;
    s.K = K_;
    s.n = nd_.n;
    s.sign = sign;
    for (long long k = 1; k <= K_; ++k) s.coefficients.push_back(coefficient(k, sign, breakdown));
    return s;
}

ZetaCoefficient coefficient(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long k,
                            Sign sign) {
    return ZetaEngine(refined, ms, k).coefficient(k, sign);
}

ZetaSeries zeta_series(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long K,
                       Sign sign) {
    return ZetaEngine(refined, ms, K).series(sign);
}

}  // namespace mz

#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/poly.hpp"
#include "mzeta/zeta.hpp"

namespace mz {

struct WHStructure {
    IVec w;          // coprime positive weights
    long long d = 0;  // weighted degree
    std::vector<long long> p;  // d / w_i, 0 where not an integer
    IVec v;          // primitive normal of the facet, equal to w
    long long m_f_v = 0, s_v = 0, h_v = 0;
};

// Weights making every monomial of f of the same degree, or nullopt when
// no unique positive solution exists.
std::optional<WHStructure> detect_wh(const Poly& f);

struct SignClassification {
    char sign = '?';  // '+', '0' or '-'
    std::string basis;
    Rat L_e;
    long long m_f_v = 0;  // first k attaining the envelope ('+' and '0')
    long long h_v = 0;    // m_f(v) L_e ('+')
};

// Sign of h(v) read off the series alone. Throws HorizonTooSmall when the
// horizon cannot separate the cases.
SignClassification classify_hv_from_zeta(const ZetaSeries& series, int n);

struct WeightEvidence {
    long long p1 = 0;
    std::optional<Rat> L_e;
    std::optional<Rat> sigma;  // 1/p1 + ... + 1/pn
    std::optional<long long> alpha, beta, delta;  // nullopt means infinite
    std::string branch;
    std::string tie_break;
    std::vector<std::string> notes;
};

struct WeightReport {
    std::vector<long long> recovered;  // empty when out of scope
    std::string verdict;               // "recovered" or the reason for none
    SignClassification sign;
    WeightEvidence evidence;
    std::optional<bool> consistent;  // against the true intercepts, when known
};

// Throws AmbiguousError, HorizonTooSmall.
WeightReport recover_weights_2var(const ZetaSeries& series);
WeightReport recover_weights_3var(const ZetaSeries& series);
WeightReport recover_weights(const ZetaSeries& series);

// Horizon sufficient for recover_weights on a germ with these intercepts.
long long weights_horizon(const std::vector<long long>& p);

// Corpus of the round trip: Brieskorn triples 3 <= p <= q <= r <= 8 with
// 1/p + 1/q + 1/r <= 1, then mixed-term weighted homogeneous germs.
struct RoundTripGerm {
    std::string text;
    std::vector<long long> p;  // sorted intercepts
};
std::vector<RoundTripGerm> roundtrip_corpus();

}  // namespace mz

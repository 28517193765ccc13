#pragma once
#include <map>
#include <optional>
#include <vector>

#include "mzeta/poly.hpp"

namespace mz {

// Dense integer polynomial, coefficient of t^i at index i, no trailing zeros.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p);
int zdeg(const ZPoly& p);  // -1 for the zero polynomial
Int zcontent(const ZPoly& p);
ZPoly zprimitive(ZPoly p);  // content 1, positive leading coefficient
ZPoly zderiv(const ZPoly& p);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zscale(const ZPoly& a, const Int& c);
ZPoly zprem(const ZPoly& a, const ZPoly& b);  // lc(b)^(da-db+1) * a mod b
ZPoly zgcd(const ZPoly& a, const ZPoly& b);   // primitive, positive lc
ZPoly zexact_div(const ZPoly& a, const ZPoly& b);  // throws if inexact
ZPoly zsquarefree(const ZPoly& p);
ZPoly zstrip_zero_roots(ZPoly p);  // removes factors of t
ZPoly zcompose_neg(const ZPoly& p);  // p(-t)
ZPoly zreverse(const ZPoly& p);      // t^deg p(1/t)

int sign_of(const Int& x);
int zsign_at(const ZPoly& p, const Rat& x);
int zsign_at_inf(const ZPoly& p, int dir);  // dir = +1 or -1
Rat zeval(const ZPoly& p, const Rat& x);

// Sturm sequence with positive-multiple pseudo-remainders.
std::vector<ZPoly> sturm_chain(const ZPoly& p);
// Distinct real roots in (lo, hi]; nullopt bounds mean infinity.
int sturm_count(const std::vector<ZPoly>& chain, const std::optional<Rat>& lo,
                const std::optional<Rat>& hi);

struct RootInterval {
    Rat lo, hi;  // lo == hi for an exact rational root, else root in (lo, hi)
};
// Isolates the distinct real roots of p in the open interval (lo, hi).
std::vector<RootInterval> isolate_roots(const ZPoly& p, const Rat& lo, const Rat& hi);
std::vector<RootInterval> isolate_positive_roots(const ZPoly& p);
// Shrinks an isolating interval of a root of squarefree p below width eps.
void refine_root(const ZPoly& p, RootInterval& r, const Rat& eps);
Rat root_bound(const ZPoly& p);  // all roots have |x| < bound

// Sparse rational univariate polynomial; Laurent exponents are allowed and
// removed by shifting before any root computation.
struct UniPoly {
    std::map<int, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const;
    int low_degree() const;
    void add(int e, const Rat& c);
    ZPoly normalized() const;  // shifted, denominators cleared, primitive
    bool operator==(const UniPoly& o) const { return coeffs == o.coeffs; }
};

int sturm_count_nonzero_real_roots(const UniPoly& g);
// True when g has a repeated nonzero real root.
bool has_multiple_nonzero_real_root(const UniPoly& g);

}  // namespace mz

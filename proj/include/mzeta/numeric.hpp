#pragma once
#include <boost/multiprecision/mpfr.hpp>
#include <vector>

#include "mzeta/unipoly.hpp"

namespace mz {

using Real = boost::multiprecision::mpfr_float;

// Sets the working precision of newly created Real values, in bits.
void set_working_bits(unsigned bits);
Real to_real(const Int& x);
Real to_real(const Rat& x);

struct Cx {
    Real re, im;
};
Cx cadd(const Cx& x, const Cx& y);
Cx csub(const Cx& x, const Cx& y);
Cx cmul(const Cx& x, const Cx& y);
Cx cdiv(const Cx& x, const Cx& y);
Real cabs(const Cx& x);

// Real polynomial with coefficients in increasing degree.
using RPoly = std::vector<Real>;
Real reval(const RPoly& p, const Real& x);
RPoly rderiv(const RPoly& p);

// All complex roots of p by simultaneous Aberth iteration.
std::vector<Cx> aberth_roots(const RPoly& p, unsigned bits);

// High-precision value of the root of p isolated by iv.
Real refine_to_real(const ZPoly& p, RootInterval iv, unsigned bits);

}  // namespace mz

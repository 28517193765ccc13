#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzeta/poly.hpp"

namespace mz {

// Laurent polynomial in u with machine-integer coefficients; every
// operation is overflow-checked and throws OverflowError instead of wrapping.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::int64_t c) { if (c != 0) { coef_ = {c}; } }  // NOLINT: constant
    static UPoly monomial(int e, std::int64_t c = 1);
    static UPoly from_terms(const std::vector<std::pair<int, std::int64_t>>& terms);
    static UPoly u_minus_1_pow(int n);  // (u-1)^n

    bool is_zero() const { return coef_.empty(); }
    int degree() const;  // throws on zero; check is_zero() first
    int low_degree() const;
    std::int64_t coeff(int e) const;
    std::vector<std::pair<int, std::int64_t>> terms() const;  // ascending degree
    int low() const { return low_; }
    const std::vector<std::int64_t>& dense() const { return coef_; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator-() const;
    UPoly operator*(const UPoly& o) const;
    UPoly& operator+=(const UPoly& o);
    UPoly shifted(int k) const;  // u^k * this
    bool operator==(const UPoly& o) const { return low_ == o.low_ && coef_ == o.coef_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    Int eval(const Int& x) const;  // x must be nonzero if negative degrees occur
    Rat eval_rat(const Rat& x) const;
    // Exact division by an ordinary polynomial d (ascending coefficients);
    // returns false when the remainder is nonzero.
    bool divide_exact(const std::vector<std::int64_t>& d, UPoly& quotient) const;
    bool divisible_by_u_minus_1() const;
    UPoly div_u_minus_1() const;  // throws DivisibilityError

    std::string to_string() const;  // e.g. "u^2 - 1 + 3*u^-2"

    void add_coeff(int e, std::int64_t c);

private:
    void normalize();
    int low_ = 0;
    std::vector<std::int64_t> coef_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Rational function numerator / prod (u^s - 1)^mult, the denominator kept
// factored so that sums can be formed over a common multiple.
class URat {
public:
    URat() = default;
    URat(const UPoly& num) : num_(num) {}  // NOLINT: polynomial embedding
    URat(const UPoly& num, std::map<int, int> den);

    const UPoly& numerator() const { return num_; }
    const std::map<int, int>& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    URat operator+(const URat& o) const;
    URat& operator+=(const URat& o);
    URat operator*(const UPoly& p) const;
    URat operator*(const URat& o) const;

    // Cancels the denominator; throws CancellationFailure if inexact.
    UPoly to_upoly() const;
    bool is_polynomial() const;
    // Removes as many denominator factors as divide the numerator exactly.
    URat reduced() const;
    bool equals(const URat& o) const;

    static std::vector<std::int64_t> denominator_poly(const std::map<int, int>& den);

private:
    UPoly num_;
    std::map<int, int> den_;
};

}  // namespace mz

#pragma once
#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mz {

using Rat = mpq_class;
using Int = mpz_class;
using ExpVec = std::vector<int>;

std::string rat_to_string(const Rat& r);
Rat make_rat(long long num, long long den = 1);

// Graded lexicographic order: lower total degree first, then
// lexicographically larger exponent (x before y before z).
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<ExpVec, Rat, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;

    // Adds c*x^e, dropping the term if it cancels.
    void add_term(const ExpVec& e, const Rat& c);
    Rat coeff(const ExpVec& e) const;
    std::set<ExpVec> support() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    int nvars_ = 1;
    std::map<ExpVec, Rat, GradedLex> terms_;
};

std::vector<std::string> default_varnames(int n);

// Returns the zero polynomial (is_zero()) when the input cancels entirely.
Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars);
// As above, but rejects the zero polynomial with EmptyPolyError.
Poly parse_germ(const std::string& text, const std::vector<std::string>& vars);

Poly face_restrict(const Poly& f, const std::set<ExpVec>& S);
Poly partial_derivative(const Poly& f, int i);  // i is 1-based

}  // namespace mz

#include "mzeta/upoly.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"

namespace mz {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient overflow in Laurent polynomial");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient overflow in Laurent polynomial");
    return r;
}

UPoly UPoly::monomial(int e, std::int64_t c) {
    UPoly p;
    if (c != 0) {
        p.low_ = e;
        p.coef_ = {c};
    }
    return p;
}

UPoly UPoly::from_terms(const std::vector<std::pair<int, std::int64_t>>& terms) {
    UPoly p;
    for (const auto& [e, c] : terms) p.add_coeff(e, c);
    return p;
}

UPoly UPoly::u_minus_1_pow(int n) {
    UPoly r = 1;
    UPoly f = UPoly::from_terms({{1, 1}, {0, -1}});
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
}

void UPoly::normalize() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    std::size_t k = 0;
    while (k < coef_.size() && coef_[k] == 0) ++k;
    if (k > 0) {
        coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(k));
        low_ += static_cast<int>(k);
    }
    if (coef_.empty()) low_ = 0;
}

void UPoly::add_coeff(int e, std::int64_t c) {
    if (c == 0) return;
    if (coef_.empty()) {
        low_ = e;
        coef_ = {c};
        return;
    }
    if (e < low_) {
        coef_.insert(coef_.begin(), static_cast<std::size_t>(low_ - e), 0);
        low_ = e;
    }
    std::size_t i = static_cast<std::size_t>(e - low_);
    if (i >= coef_.size()) coef_.resize(i + 1, 0);
    coef_[i] = checked_add(coef_[i], c);
    normalize();
}

int UPoly::degree() const {
    if (coef_.empty()) throw Error("degree of zero Laurent polynomial");
    return low_ + static_cast<int>(coef_.size()) - 1;
}

int UPoly::low_degree() const {
    if (coef_.empty()) throw Error("low degree of zero Laurent polynomial");
    return low_;
}

std::int64_t UPoly::coeff(int e) const {
    if (coef_.empty() || e < low_ || e > degree()) return 0;
    return coef_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<int, std::int64_t>> UPoly::terms() const {
    std::vector<std::pair<int, std::int64_t>> t;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0) t.emplace_back(low_ + static_cast<int>(i), coef_[i]);
    return t;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.coef_.empty()) return *this;
    if (coef_.empty()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(degree(), o.degree());
    std::vector<std::int64_t> r(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < coef_.size(); ++i) r[low_ - lo + i] = coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i) {
        auto& x = r[o.low_ - lo + i];
        x = checked_add(x, o.coef_[i]);
    }
    low_ = lo;
    coef_ = std::move(r);
    normalize();
    return *this;
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r = *this;
    r += o;
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coef_) c = checked_mul(c, -1);
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    if (coef_.empty() || o.coef_.empty()) return r;
    r.low_ = low_ + o.low_;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, 0);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j)
            r.coef_[i + j] = checked_add(r.coef_[i + j], checked_mul(coef_[i], o.coef_[j]));
    }
    r.normalize();
    return r;
}

UPoly UPoly::shifted(int k) const {
    UPoly r = *this;
    if (!r.coef_.empty()) r.low_ += k;
    return r;
}

Int UPoly::eval(const Int& x) const {
    Rat v = eval_rat(Rat(x));
    if (v.get_den() != 1) throw Error("Laurent evaluation is not integral");
    return v.get_num();
}

Rat UPoly::eval_rat(const Rat& x) const {
    Rat v = 0;
    for (std::size_t i = coef_.size(); i-- > 0;) v = v * x + Rat(static_cast<long>(coef_[i]));
    if (low_ != 0) {
        Rat p = 1;
        for (int i = 0; i < std::abs(low_); ++i) p *= x;
        if (low_ > 0)
            v *= p;
        else
            v /= p;
    }
    return v;
}

bool UPoly::divide_exact(const std::vector<std::int64_t>& d0, UPoly& quotient) const {
    std::vector<std::int64_t> d = d0;
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) throw ZeroPolynomialError("division by zero");
    std::size_t shift = 0;
    while (d[shift] == 0) ++shift;
    d.erase(d.begin(), d.begin() + static_cast<long>(shift));
    quotient = UPoly();
    if (coef_.empty()) return true;
    std::vector<std::int64_t> n = coef_;
    const std::size_t m = d.size() - 1;
    if (n.size() < d.size()) return false;
    std::vector<std::int64_t> q(n.size() - m, 0);
    const std::int64_t lead = d.back();
    for (std::size_t top = n.size(); top-- > m;) {
        std::int64_t c = n[top];
        if (c == 0) continue;
        if (c % lead != 0) return false;
        std::int64_t qc = c / lead;
        std::size_t pos = top - m;
        q[pos] = qc;
        for (std::size_t j = 0; j <= m; ++j) n[pos + j] = checked_add(n[pos + j], checked_mul(-qc, d[j]));
    }
    for (std::size_t i = 0; i < m; ++i)
        if (n[i] != 0) return false;
    quotient.low_ = low_ - static_cast<int>(shift);
    quotient.coef_ = std::move(q);
    quotient.normalize();
    return true;
}

bool UPoly::divisible_by_u_minus_1() const {
    std::int64_t s = 0;
    for (auto c : coef_) s = checked_add(s, c);
    return s == 0;
}

UPoly UPoly::div_u_minus_1() const {
    UPoly q;
    if (!divide_exact({-1, 1}, q)) throw DivisibilityError("(u-1) does not divide " + to_string());
    return q;
}

std::string UPoly::to_string() const {
    if (coef_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coef_.size(); i-- > 0;) {
        std::int64_t c = coef_[i];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(i);
        std::int64_t a = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono = e == 0 ? "" : (e == 1 ? "u" : "u^" + std::to_string(e));
        if (mono.empty())
            out += std::to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += std::to_string(a) + "*" + mono;
    }
    return out;
}

// ---------------------------------------------------------------- URat

URat::URat(const UPoly& num, std::map<int, int> den) : num_(num), den_(std::move(den)) {
    for (auto it = den_.begin(); it != den_.end();) it = it->second == 0 ? den_.erase(it) : std::next(it);
}

std::vector<std::int64_t> URat::denominator_poly(const std::map<int, int>& den) {
    UPoly d = 1;
    for (const auto& [s, m] : den)
        for (int i = 0; i < m; ++i) d = d * UPoly::from_terms({{s, 1}, {0, -1}});
    std::vector<std::int64_t> v(static_cast<std::size_t>(d.degree() + 1), 0);
    for (const auto& [e, c] : d.terms()) v[static_cast<std::size_t>(e)] = c;
    return v;
}

namespace {

UPoly factor_power(int s, int m) {
    UPoly r = 1;
    for (int i = 0; i < m; ++i) r = r * UPoly::from_terms({{s, 1}, {0, -1}});
    return r;
}

}  // namespace

URat URat::operator+(const URat& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    std::map<int, int> den = den_;
    for (const auto& [s, m] : o.den_) den[s] = std::max(den[s], m);
    UPoly a = num_, b = o.num_;
    for (const auto& [s, m] : den) {
        auto ia = den_.find(s);
        auto ib = o.den_.find(s);
        a = a * factor_power(s, m - (ia == den_.end() ? 0 : ia->second));
        b = b * factor_power(s, m - (ib == o.den_.end() ? 0 : ib->second));
    }
    return URat(a + b, den);
}

URat& URat::operator+=(const URat& o) { return *this = *this + o; }

URat URat::operator*(const UPoly& p) const { return URat(num_ * p, den_); }

URat URat::operator*(const URat& o) const {
    std::map<int, int> den = den_;
    for (const auto& [s, m] : o.den_) den[s] += m;
    return URat(num_ * o.num_, den);
}

UPoly URat::to_upoly() const {
    if (den_.empty() || num_.is_zero()) return num_;
    UPoly q;
    if (!num_.divide_exact(denominator_poly(den_), q))
        throw CancellationFailure("denominator does not cancel: numerator " + num_.to_string());
    return q;
}

bool URat::is_polynomial() const {
    UPoly q;
    return den_.empty() || num_.divide_exact(denominator_poly(den_), q);
}

URat URat::reduced() const {
    UPoly num = num_;
    std::map<int, int> den = den_;
    if (num.is_zero()) return URat();
    for (auto& [s, m] : den) {
        while (m > 0) {
            UPoly q;
            std::vector<std::int64_t> f(static_cast<std::size_t>(s + 1), 0);
            f[0] = -1;
            f[static_cast<std::size_t>(s)] = 1;
            if (!num.divide_exact(f, q)) break;
            num = q;
            --m;
        }
    }
    return URat(num, den);
}

bool URat::equals(const URat& o) const {
    UPoly a = num_ * factor_power(1, 0), b = o.num_;
    for (const auto& [s, m] : o.den_) a = a * factor_power(s, m);
    for (const auto& [s, m] : den_) b = b * factor_power(s, m);
    return a == b;
}

}  // namespace mz

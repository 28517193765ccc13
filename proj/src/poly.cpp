#include "mzeta/poly.hpp"

#include <cctype>
#include <numeric>

#include "mzeta/errors.hpp"

namespace mz {

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat make_rat(long long num, long long den) {
    Rat q(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a > b;
}

bool Poly::has_constant_term() const {
    for (const auto& [e, c] : terms_) {
        bool zero = true;
        for (int x : e) zero = zero && x == 0;
        if (zero) return true;
    }
    return false;
}

void Poly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rat Poly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::set<ExpVec> Poly::support() const {
    std::set<ExpVec> s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += rat_to_string(a) + "*" + mono;
        }
    }
    return out;
}

std::vector<std::string> default_varnames(int n) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    if (n <= 3) return std::vector<std::string>(xyz.begin(), xyz.begin() + n);
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : s_(text), vars_(vars) {}

    Poly parse() {
        Poly result(static_cast<int>(vars_.size()));
        skip_ws();
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        add_scaled(result, term(), sign);
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) break;
            char op = s_[pos_];
            if (op != '+' && op != '-') throw SyntaxError(pos_, "'+', '-' or end of input");
            ++pos_;
            add_scaled(result, term(), op == '-' ? -1 : 1);
        }
        return result;
    }

private:
    struct Term {
        Rat coeff = 1;
        ExpVec exps;
    };

    static void add_scaled(Poly& p, const Term& t, int sign) { p.add_term(t.exps, sign * t.coeff); }

    Term term() {
        Term t;
        t.exps.assign(vars_.size(), 0);
        factor(t);
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        return t;
    }

    void factor(Term& t) {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num(digits());
            Int den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "unsigned integer");
                den = Int(digits());
                if (den == 0) throw SyntaxError(pos_, "nonzero denominator");
            }
            Rat q(num, den);
            q.canonicalize();
            t.coeff *= q;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            std::size_t idx = vars_.size();
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) idx = i;
            if (idx == vars_.size())
                throw UnknownVariableError("unknown variable '" + name + "' at position " +
                                           std::to_string(start));
            int e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError(pos_, "unsigned integer exponent");
                e = std::stoi(digits());
            }
            t.exps[idx] += e;
            return;
        }
        throw SyntaxError(pos_, "coefficient or variable");
    }

    std::string digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    Poly p = Parser(text, vars).parse();
    if (p.has_constant_term()) throw ConstantTermError("germ has a nonzero constant term");
    return p;
}

Poly parse_germ(const std::string& text, const std::vector<std::string>& vars) {
    Poly p = parse_polynomial(text, vars);
    if (p.is_zero()) throw EmptyPolyError("polynomial cancels to zero");
    return p;
}

Poly face_restrict(const Poly& f, const std::set<ExpVec>& S) {
    Poly r(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (S.count(e)) r.add_term(e, c);
    return r;
}

Poly partial_derivative(const Poly& f, int i) {
    Poly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i - 1] == 0) continue;
        ExpVec d = e;
        d[i - 1] -= 1;
        r.add_term(d, c * e[i - 1]);
    }
    return r;
}

}  // namespace mz

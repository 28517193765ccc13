#pragma once
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/poly.hpp"
#include "mzeta/upoly.hpp"
#include "mzeta/zeta.hpp"

namespace mz {
inline void PrintTo(const UPoly& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace mz

namespace mz::test {

struct Germ {
    std::vector<std::string> vars;
    Poly f;
    NewtonData nd;  // refined
    std::vector<FaceMeasure> ms;
};

inline Germ germ(const std::string& text, int n, const MeasureOptions& opts = {}) {
    Germ g;
    g.vars = default_varnames(n);
    g.f = parse_germ(text, g.vars);
    g.nd = unimodular_refine(build_newton_polyhedron(g.f));
    g.ms = compute_measures(g.nd, opts);
    return g;
}

// u^shift times a Laurent polynomial written as a sum of terms c*u^e,
// e.g. up("u^2 - 1 + 3*u^-2").
inline UPoly up(const std::string& text, int shift = 0) {
    static const std::regex term(R"(([+-]?)\s*(\d*)\s*\*?\s*(u(\^(-?\d+))?)?)");
    UPoly r;
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::smatch m;
        std::string rest = s.substr(pos);
        if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0)
            throw std::invalid_argument("bad Laurent polynomial: " + text);
        std::int64_t c = m[2].length() ? std::stoll(m[2].str()) : 1;
        if (m[1].str() == "-") c = -c;
        int e = m[3].length() == 0 ? 0 : (m[5].length() ? std::stoi(m[5].str()) : 1);
        r.add_coeff(e + shift, c);
        pos += static_cast<std::size_t>(m.length(0));
    }
    return r;
}

}  // namespace mz::test

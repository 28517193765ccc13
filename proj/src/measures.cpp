#include "mzeta/measures.hpp"

#include <algorithm>

#include "mzeta/errors.hpp"
#include "mzeta/numeric.hpp"

namespace mz {

Poly face_polynomial(const NewtonData& nd, const Face& face) {
    std::set<ExpVec> S;
    for (auto& e : face.exponents) S.insert(to_expvec(e));
    return face_restrict(nd.poly, S);
}

UniPoly edge_to_univariate(const Poly& f_gamma, const IVec& p0, const IVec& p1) {
    IVec d = vsub(p1, p0);
    long long len = vgcd(d);
    if (len == 0) throw NotOnEdgeError("edge endpoints coincide");
    IVec delta = primitive(d);
    UniPoly g;
    for (auto& [e, c] : f_gamma.terms()) {
        IVec off = vsub(to_ivec(e), p0);
        long long k = -1;
        for (size_t i = 0; i < off.size(); ++i)
            if (delta[i] != 0) {
                k = off[i] / delta[i];
                break;
            }
        if (k < 0 || k > len || off != vscale(delta, k))
            throw NotOnEdgeError("monomial does not lie on the edge");
        g.add(static_cast<int>(k), c);
    }
    return g;
}

BiPoly facet_curve(const NewtonData& nd, const Face& face) {
    if (nd.n != 3 || face.dim != 2 || face.normal_rays.size() != 1)
        throw DimensionError("facet curves exist for 2-dimensional faces of 3-variable germs");
    IMat U = kernel_completion(face.normal_rays[0]);
    std::map<std::pair<int, int>, Rat> terms;
    Poly fg = face_polynomial(nd, face);
    for (auto& [e, c] : fg.terms()) {
        IVec w = coords_in(U, to_ivec(e));
        terms[{static_cast<int>(w[1]), static_cast<int>(w[2])}] += c;
    }
    return BiPoly::from_laurent(terms);
}

CurveTopology curve_topology(const BiPoly& F, FacetMode mode) {
    return mode == FacetMode::ExactCurve ? curve_topology_exact(F) : curve_topology_trace(F);
}

namespace {

const char* mode_name(FacetMode m) {
    return m == FacetMode::ExactCurve ? "exact-curve" : "numeric-trace";
}

// Number of real solutions y != 0 of c * y^g = s.
int monomial_solutions(const Rat& c, long long g, int s) {
    if (g % 2 != 0) return 1;
    return sgn(c) * s > 0 ? 2 : 0;
}

}  // namespace

FaceMeasure measure_vertex(const NewtonData& nd, const Face& face) {
    FaceMeasure m;
    m.face = face.id;
    m.dim = 0;
    m.definite = true;
    m.source = "exact-sturm";
    const IVec& v = face.vertices.at(0);
    Rat c = nd.poly.coeff(to_expvec(v));
    long long g = vgcd(v);
    UPoly torus = UPoly::u_minus_1_pow(nd.n - 1);
    int np = monomial_solutions(c, g, 1), nm = monomial_solutions(c, g, -1);
    m.x_plus = torus * UPoly(np);
    m.x_minus = torus * UPoly(nm);
    m.plus_nonempty = np > 0;
    m.minus_nonempty = nm > 0;
    return m;
}

FaceMeasure measure_edge(const NewtonData& nd, const Face& face, FacetMode mode) {
    FaceMeasure m;
    m.face = face.id;
    m.dim = 1;
    m.source = "exact-sturm";
    const IVec& p0 = face.vertices.at(0);
    const IVec& p1 = face.vertices.at(1);
    UniPoly g = edge_to_univariate(face_polynomial(nd, face), p0, p1);
    auto roots = nonzero_real_roots(g.normalized());
    if (!roots.squarefree) throw DegenerateFaceError("edge polynomial has a repeated nonzero real root");
    auto nroots = static_cast<std::int64_t>(roots.positive.size() + roots.negative.size());
    m.x_hat = UPoly(nroots);
    m.x_full = UPoly::u_minus_1_pow(nd.n - 1) * m.x_hat;
    m.definite = nroots == 0;

    // f_gamma = y1^w1 g(y1) z^gp in suitable torus coordinates.
    IVec delta = primitive(vsub(p1, p0));
    IVec w = coords_in(complete_primitive(delta), p0);
    long long gp = 0;
    for (size_t i = 1; i < w.size(); ++i) gp = igcd(gp, w[i]);
    UPoly rest = UPoly::u_minus_1_pow(nd.n - 2);
    if (gp % 2 != 0) {
        m.x_plus = m.x_minus = rest * (UPoly::u_minus_1_pow(1) - m.x_hat);
        m.plus_nonempty = m.minus_nonempty = true;
        return m;
    }
    auto sign_on = [&](int y) {
        Rat v = 0, p = 1;
        for (int k = 0; k <= g.degree(); ++k) {
            auto it = g.coeffs.find(k);
            if (it != g.coeffs.end()) v += it->second * p;
            p *= y;
        }
        if (w[0] % 2 != 0 && y < 0) v = -v;
        return sgn(v);
    };
    for (int s : {1, -1}) {
        bool nonempty = nroots > 0 || sign_on(1) == s || sign_on(-1) == s;
        // z -> sign(z)|z|^(gp/2) and z -> z y^(w0 div 2) are Nash automorphisms of
        // the torus, so the curve may be taken as y^(w0 mod 2) g(y) z^2 = s.
        int w0 = static_cast<int>(((w[0] % 2) + 2) % 2);
        std::map<std::pair<int, int>, Rat> terms;
        for (auto& [k, c] : g.coeffs) terms[{w0 + k, 2}] += c;
        terms[{0, 0}] += Rat(-s);
        CurveTopology t = curve_topology(BiPoly::from_laurent(terms), mode);
        UPoly val = rest * t.vp();
        (s > 0 ? m.x_plus : m.x_minus) = val;
        (s > 0 ? m.plus_nonempty : m.minus_nonempty) = nonempty;
    }
    return m;
}

FaceMeasure measure_facet(const NewtonData& nd, const Face& face, const MeasureOptions& opts) {
    FaceMeasure m;
    m.face = face.id;
    m.dim = 2;
    BiPoly F = facet_curve(nd, face);
    auto ov = opts.overrides.find(face.id);
    if (ov != opts.overrides.end()) {
        m.x_hat = ov->second;
        m.source = "user-override";
    } else {
        m.x_hat = curve_topology(F, opts.mode).vp();
        m.source = mode_name(opts.mode);
    }
    m.x_full = UPoly::u_minus_1_pow(1) * m.x_hat;
    m.definite = m.x_hat.is_zero();
    long long level = dot(face.normal_rays[0], face.vertices.at(0));
    if (level % 2 != 0) {
        m.x_plus = m.x_minus = UPoly::u_minus_1_pow(2) - m.x_hat;
        m.plus_nonempty = m.minus_nonempty = true;
        return m;
    }
    m.signed_note = "level sets of a facet function at even level are surfaces without a supported measure";
    if (!m.definite) {
        m.plus_nonempty = m.minus_nonempty = true;
    } else {
        for (int ea : {1, -1})
            for (int eb : {1, -1}) {
                Int v = 0;
                for (auto& [e, c] : F.c) {
                    int s = ((e.first % 2 && ea < 0) ? -1 : 1) * ((e.second % 2 && eb < 0) ? -1 : 1);
                    v += s * c;
                }
                if (v > 0) m.plus_nonempty = true;
                if (v < 0) m.minus_nonempty = true;
            }
    }
    return m;
}

std::vector<FaceMeasure> compute_measures(const NewtonData& nd, const MeasureOptions& opts) {
    for (auto& [id, v] : opts.overrides) {
        (void)v;
        if (id < 0 || id >= static_cast<int>(nd.faces.size()) || nd.face(id).dim != 2 || nd.n != 3)
            throw DimensionError("measure overrides apply to 2-dimensional faces only");
    }
    std::vector<FaceMeasure> out;
    for (auto& f : nd.faces) {
        if (f.dim == 0)
            out.push_back(measure_vertex(nd, f));
        else if (f.dim == 1)
            out.push_back(measure_edge(nd, f, opts.mode));
        else
            out.push_back(measure_facet(nd, f, opts));
    }
    for (auto& f : nd.faces) {
        UPoly c;
        for (int t : f.subfaces) c += out[t].x_hat;
        out[f.id].x_closure = c;
    }
    return out;
}

namespace {

bool has_nonzero_real_root(const ZPoly& p) {
    ZPoly q = zstrip_zero_roots(p);
    return zdeg(q) >= 1 && sturm_count(sturm_chain(zsquarefree(q)), std::nullopt, std::nullopt) > 0;
}

// Common nonzero real roots in a of F = F_a = F_b = 0 can only lie over
// the roots of this polynomial.
ZPoly critical_projection(const BiPoly& F) {
    ZPoly r1 = resultant_b(F, F.d_b());
    ZPoly r2 = resultant_b(F, F.d_a());
    if (zdeg(r1) < 0 || zdeg(r2) < 0) return {};
    return zgcd(zsquarefree(zstrip_zero_roots(r1)), zsquarefree(zstrip_zero_roots(r2)));
}

// Searches numerically for a singular point over the real roots of h.
std::optional<std::string> singular_witness(const BiPoly& F, const ZPoly& h) {
    auto roots = nonzero_real_roots(h);
    auto rows = F.rows();
    auto drows = F.d_a().rows();
    const unsigned bits = 256;
    for (int sign : {1, -1})
        for (auto& c : sign > 0 ? roots.positive : roots.negative) {
            Real cr = refine_to_real(c.p, c.iv, bits) * sign;
            auto at = [&](const std::vector<ZPoly>& rs) {
                RPoly out;
                for (auto& r : rs) {
                    RPoly rr;
                    for (auto& x : r) rr.push_back(to_real(x));
                    out.push_back(rr.empty() ? Real(0) : reval(rr, cr));
                }
                return out;
            };
            RPoly P = at(rows), Pa = at(drows);
            while (P.size() > 1 && P.back() == 0) P.pop_back();
            for (auto& z : aberth_roots(P, bits)) {
                if (abs(z.im) > Real("1e-20") * max(Real(1), abs(z.re)) || z.re == 0) continue;
                Real scale = 0;
                for (size_t j = 0; j < Pa.size(); ++j) scale += abs(Pa[j]) * pow(abs(z.re), static_cast<int>(j));
                if (abs(reval(Pa, z.re)) <= Real("1e-40") * max(Real(1), scale)) {
                    return "singular point near (" + std::to_string(static_cast<double>(cr)) + ", " +
                           std::to_string(static_cast<double>(z.re)) + ") in facet coordinates";
                }
            }
        }
    return std::nullopt;
}

}  // namespace

NondegeneracyResult nondegenerate_check(const NewtonData& nd) {
    NondegeneracyResult res;
    for (auto& f : nd.faces) {
        if (f.dim == 1) {
            UniPoly g = edge_to_univariate(face_polynomial(nd, f), f.vertices[0], f.vertices[1]);
            if (!nonzero_real_roots(g.normalized()).squarefree) {
                return {Tri::False, "face " + std::to_string(f.id) +
                                        ": edge polynomial has a repeated nonzero real root"};
            }
        } else if (f.dim == 2) {
            BiPoly F = facet_curve(nd, f);
            ZPoly h1 = critical_projection(F);
            if (h1.empty()) return {Tri::False, "face " + std::to_string(f.id) + ": facet polynomial has a multiple factor"};
            if (!has_nonzero_real_root(h1)) continue;
            ZPoly h2 = critical_projection(F.swapped());
            if (!h2.empty() && !has_nonzero_real_root(h2)) continue;
            if (auto w = singular_witness(F, h1)) return {Tri::False, "face " + std::to_string(f.id) + ": " + *w};
            res = {Tri::Indeterminate, "face " + std::to_string(f.id) +
                                           ": elimination is inconclusive; pass --assume-nondegenerate to proceed"};
        }
    }
    return res;
}

FukuiSets fukui_sets(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long K) {
    if (!is_convenient(nd)) throw NotConvenientError("Fukui sets require a convenient germ");
    if (!nd.refined) throw DimensionError("Fukui sets require the unimodular refinement");
    std::vector<char> S(K + 1, 0), Sp(K + 1, 0), Sm(K + 1, 0);
    FukuiSets out;
    for (auto& cone : nd.fan) {
        if (cone.face_ref < 0) continue;
        const FaceMeasure& fm = ms.at(cone.face_ref);
        long long base = 0;
        std::vector<long long> steps;
        for (long long mv : cone.m_values) {
            base += mv;
            if (mv > 0) steps.push_back(mv);
        }
        if (!fm.definite && (!out.m0 || base < *out.m0)) out.m0 = base;
        if (base > K) continue;
        std::vector<char> reach(K + 1, 0);
        reach[base] = 1;
        for (long long v = base; v <= K; ++v)
            if (reach[v])
                for (long long st : steps)
                    if (v + st <= K) reach[v + st] = 1;
        for (long long v = 1; v <= K; ++v)
            if (reach[v]) {
                S[v] = 1;
                if (fm.plus_nonempty) Sp[v] = 1;
                if (fm.minus_nonempty) Sm[v] = 1;
            }
    }
    for (long long v = 1; v <= K; ++v) {
        bool t = out.m0 && v >= *out.m0;
        if (S[v]) out.S.push_back(v);
        if (t) out.T.push_back(v);
        if (S[v] || t) out.A.push_back(v);
        if (Sp[v] || t) out.A_plus.push_back(v);
        if (Sm[v] || t) out.A_minus.push_back(v);
    }
    return out;
}

}  // namespace mz

#include "mzeta/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mzeta/errors.hpp"
#include "mzeta/numeric.hpp"

namespace mz {

UPoly CurveTopology::vp() const {
    return UPoly::from_terms({{0, circles - boundary_points}, {1, circles}});
}

UPoly CurveTopology::closure() const { return UPoly::from_terms({{0, circles}, {1, circles}}); }

namespace {

int roots_inside(const ZPoly& g, const RootInterval& iv) {
    if (iv.lo == iv.hi) return zsign_at(g, iv.lo) == 0 ? 1 : 0;
    return sturm_count(sturm_chain(g), iv.lo, iv.hi);
}

// Shrinks x until its interval lies inside one of the isolating intervals of
// g; returns that interval's index.
int locate(AlgNum& x, const std::vector<RootInterval>& gi) {
    for (;;) {
        for (size_t k = 0; k < gi.size(); ++k) {
            const auto& r = gi[k];
            if (r.lo == r.hi) {
                if (x.iv.lo <= r.lo && r.lo <= x.iv.hi) return static_cast<int>(k);
            } else if (x.iv.lo >= r.lo && x.iv.hi <= r.hi) {
                return static_cast<int>(k);
            }
        }
        refine_root(x.p, x.iv, (x.iv.hi - x.iv.lo) / 4);
    }
}

}  // namespace

bool alg_equal(AlgNum x, AlgNum y) {
    ZPoly g = zgcd(x.p, y.p);
    if (zdeg(g) < 1) return false;
    if (roots_inside(g, x.iv) == 0 || roots_inside(g, y.iv) == 0) return false;
    auto gi = isolate_positive_roots(g);
    return locate(x, gi) == locate(y, gi);
}

int sign_at_alg(const ZPoly& q, const AlgNum& x) {
    if (zdeg(q) < 0) return 0;
    if (x.iv.lo == x.iv.hi) return zsign_at(q, x.iv.lo);
    ZPoly g = zgcd(q, x.p);
    if (zdeg(g) >= 1 && roots_inside(g, x.iv) == 1) return 0;
    if (zdeg(q) == 0) return sign_of(q[0]);
    auto chain = sturm_chain(zsquarefree(q));
    RootInterval iv = x.iv;
    while (zsign_at(q, iv.lo) == 0 || sturm_count(chain, iv.lo, iv.hi) != 0) {
        refine_root(x.p, iv, (iv.hi - iv.lo) / 4);
        if (iv.lo == iv.hi) return zsign_at(q, iv.lo);
    }
    return zsign_at(q, iv.hi);
}

double alg_approx(const AlgNum& x) {
    RootInterval iv = x.iv;
    refine_root(x.p, iv, Rat(1, 1ul << 40) * (iv.hi + 1));
    return Rat((iv.lo + iv.hi) / 2).get_d();
}

RealRoots nonzero_real_roots(const ZPoly& p) {
    RealRoots out;
    ZPoly q = zstrip_zero_roots(p);
    if (zdeg(q) < 1) return out;
    ZPoly g = zstrip_zero_roots(zgcd(q, zderiv(q)));
    if (zdeg(g) >= 1 && sturm_count(sturm_chain(g), std::nullopt, std::nullopt) > 0)
        out.squarefree = false;
    ZPoly s = zsquarefree(q);
    for (auto& iv : isolate_positive_roots(s)) out.positive.push_back({s, iv});
    ZPoly sn = zprimitive(zcompose_neg(s));
    for (auto& iv : isolate_positive_roots(sn)) out.negative.push_back({sn, iv});
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
    int components() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i) c += find(i) == i;
        return c;
    }
};

struct BPoint {
    int edge;
    int sign;  // sign of the root of the edge polynomial
    AlgNum absval;
    int node;
    int attached = 0;
};

// Vertical-line components make the fiber identically zero.
struct VerticalComponent {};

enum class Ev { BottomL, BottomR, Pass, FoldL, FoldR, TopL, TopR };

bool alg_less(AlgNum x, AlgNum y) {
    while (!(x.iv.hi <= y.iv.lo || y.iv.hi <= x.iv.lo)) {
        if (x.iv.lo == x.iv.hi && y.iv.lo == y.iv.hi) break;
        refine_root(x.p, x.iv, (x.iv.hi - x.iv.lo) / 4);
        refine_root(y.p, y.iv, (y.iv.hi - y.iv.lo) / 4);
    }
    return x.iv.hi <= y.iv.lo && !(x.iv.lo == y.iv.lo && x.iv.hi == y.iv.hi);
}

int sgn(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

size_t max_bits(const std::vector<ZPoly>& rows) {
    size_t b = 0;
    for (auto& r : rows)
        for (auto& c : r) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return b;
}

// Events along the fiber over a critical value c, ordered from b = 0 upwards.
// Returns false when the numerical clustering is not conclusive.
bool fiber_events(const std::vector<ZPoly>& rows, const AlgNum& c, unsigned bits,
                  std::vector<Ev>& out) {
    out.clear();
    int J = static_cast<int>(rows.size()) - 1;
    std::vector<bool> zero(rows.size());
    int jmin = -1, jmax = -1;
    for (int j = 0; j <= J; ++j) {
        zero[j] = sign_at_alg(rows[j], c) == 0;
        if (!zero[j]) {
            if (jmin < 0) jmin = j;
            jmax = j;
        }
    }
    if (jmin < 0) throw VerticalComponent{};
    Real cr = refine_to_real(c.p, c.iv, bits);
    set_working_bits(bits);
    RPoly P;
    for (int j = jmin; j <= jmax; ++j) {
        if (zero[j]) {
            P.push_back(Real(0));
            continue;
        }
        RPoly rr;
        for (auto& x : rows[j]) rr.push_back(to_real(x));
        P.push_back(reval(rr, cr));
    }
    RPoly Fa;  // coefficients of dF/da at a = c
    for (int j = 0; j <= J; ++j) {
        RPoly rr;
        for (auto& x : zderiv(rows[j])) rr.push_back(to_real(x));
        Fa.push_back(rr.empty() ? Real(0) : reval(rr, cr));
    }
    if (zero[0]) {
        int s = -sign_at_alg(rows[jmin], c) * sign_at_alg(zderiv(rows[0]), c);
        if (s == 0) return false;
        out.push_back(s < 0 ? Ev::BottomL : Ev::BottomR);
    }
    int deg = jmax - jmin;
    if (deg > 0) {
        auto z = aberth_roots(P, bits);
        set_working_bits(bits);
        Real tol = pow(Real(2), -static_cast<int>(bits / (2 * deg + 2)));
        // Single-linkage clustering of the computed roots.
        std::vector<int> cl(z.size());
        std::iota(cl.begin(), cl.end(), 0);
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t k = i + 1; k < z.size(); ++k) {
                Real scale = max(Real(1), cabs(z[i]));
                if (cabs(csub(z[i], z[k])) < tol * scale) {
                    int from = cl[k], to = cl[i];
                    for (auto& x : cl)
                        if (x == from) x = to;
                }
            }
        struct Cluster {
            Real re, im;
            int mult = 0;
        };
        std::map<int, Cluster> groups;
        for (size_t i = 0; i < z.size(); ++i) {
            auto& g = groups[cl[i]];
            if (g.mult == 0) g.re = g.im = 0;
            g.re += z[i].re;
            g.im += z[i].im;
            g.mult++;
        }
        std::vector<std::pair<Real, int>> real_pos;
        for (auto& [k, g] : groups) {
            Real re = g.re / g.mult, im = g.im / g.mult;
            Real scale = max(Real(1), abs(re));
            if (abs(im) < tol * scale && re > tol * scale) real_pos.push_back({re, g.mult});
        }
        std::sort(real_pos.begin(), real_pos.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [eta, mu] : real_pos) {
            if (mu % 2 == 1) {
                out.push_back(Ev::Pass);
                continue;
            }
            RPoly d = P;
            for (int k = 0; k < mu; ++k) d = rderiv(d);
            Real dm = reval(d, eta);
            Real fa = reval(Fa, eta);
            int s = -sgn(dm) * sgn(fa);
            if (s == 0) return false;
            out.push_back(s < 0 ? Ev::FoldL : Ev::FoldR);
        }
    }
    if (zero[J]) {
        int s = -sign_at_alg(rows[jmax], c) * sign_at_alg(zderiv(rows[J]), c);
        if (s == 0) return false;
        out.push_back(s < 0 ? Ev::TopL : Ev::TopR);
    }
    return true;
}


CurveTopology topology_once(const BiPoly& F) {
    auto edges = newton_polygon_edges(F);
    Dsu dsu;
    std::vector<BPoint> bps;
    for (size_t e = 0; e < edges.size(); ++e) {
        auto rr = nonzero_real_roots(edges[e].poly);
        if (!rr.squarefree) throw SingularCurveError("edge polynomial has a repeated real root");
        for (auto& x : rr.positive) bps.push_back({static_cast<int>(e), 1, x, dsu.add()});
        for (auto& x : rr.negative) bps.push_back({static_cast<int>(e), -1, x, dsu.add()});
    }
    ZPoly res = resultant_b(F, F.d_b());
    if (zdeg(res) < 0) throw SingularCurveError("curve has a multiple component");
    auto rows_all = F.rows();
    ZPoly D = zsquarefree(zstrip_zero_roots(zmul(res, rows_all[0])));

    auto in_quadrant = [&](const BPoint& bp, int e1, int e2) {
        const auto& d = edges[bp.edge].delta;
        int s = ((d[0] % 2 != 0) ? e1 : 1) * ((d[1] % 2 != 0) ? e2 : 1);
        return s == bp.sign;
    };
    auto attach = [&](int section, BPoint& bp) {
        dsu.unite(section, bp.node);
        bp.attached++;
    };

    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            BiPoly Fq = F.with_signs(e1, e2);
            auto rows = Fq.rows();
            int J = static_cast<int>(rows.size()) - 1;
            ZPoly Dq = e1 > 0 ? D : zprimitive(zcompose_neg(D));
            std::vector<AlgNum> crit;
            if (zdeg(Dq) >= 1)
                for (auto& iv : isolate_positive_roots(Dq)) crit.push_back({zsquarefree(Dq), iv});
            for (auto& c : crit)
                while (c.iv.lo != c.iv.hi && c.iv.lo <= 0) refine_root(c.p, c.iv, (c.iv.hi - c.iv.lo) / 4);
            std::vector<Rat> samples;
            if (crit.empty()) {
                samples.push_back(Rat(1));
            } else {
                samples.push_back(crit[0].iv.lo / 2);
                for (size_t i = 0; i + 1 < crit.size(); ++i)
                    samples.push_back((crit[i].iv.hi + crit[i + 1].iv.lo) / 2);
                samples.push_back(crit.back().iv.hi + 1);
            }
            std::vector<std::vector<int>> sec;
            for (auto& s : samples) {
                int n = static_cast<int>(isolate_positive_roots(Fq.at_a(s)).size());
                std::vector<int> ids;
                for (int k = 0; k < n; ++k) ids.push_back(dsu.add());
                sec.push_back(ids);
            }
            // Ends of the sections as a tends to 0 and to infinity.
            auto end_points = [&](int side) {
                std::vector<BPoint*> v;
                for (auto& bp : bps) {
                    const auto& nr = edges[bp.edge].normal;
                    if ((side > 0 ? nr[0] > 0 : nr[0] < 0) && in_quadrant(bp, e1, e2)) v.push_back(&bp);
                }
                std::sort(v.begin(), v.end(), [&](BPoint* x, BPoint* y) {
                    const auto& nx = edges[x->edge].normal;
                    const auto& ny = edges[y->edge].normal;
                    Rat sx = make_rat(nx[1], nx[0]), sy = make_rat(ny[1], ny[0]);
                    if (sx != sy) return side > 0 ? sx > sy : sx < sy;
                    return alg_less(x->absval, y->absval);
                });
                return v;
            };
            auto left = end_points(1), right = end_points(-1);
            if (left.size() != sec.front().size() || right.size() != sec.back().size())
                throw UncertifiedTraceError("section ends do not match the boundary");
            for (size_t k = 0; k < left.size(); ++k) attach(sec.front()[k], *left[k]);
            for (size_t k = 0; k < right.size(); ++k) attach(sec.back()[k], *right[k]);

            // Boundary point on a horizontal edge at a = c.
            auto horizontal = [&](int ny, const AlgNum& c) -> BPoint& {
                for (auto& bp : bps) {
                    const auto& nr = edges[bp.edge].normal;
                    if (nr[0] == 0 && nr[1] == ny && bp.sign == e1 && alg_equal(bp.absval, c))
                        return bp;
                }
                throw UncertifiedTraceError("asymptote without boundary point");
            };
            unsigned base = 192 + 2 * static_cast<unsigned>(max_bits(rows)) + 16 * J;
            for (size_t i = 0; i < crit.size(); ++i) {
                const auto& L = sec[i];
                const auto& R = sec[i + 1];
                bool ok = false;
                for (unsigned bits = base; bits <= 8 * base && !ok; bits *= 2) {
                    std::vector<Ev> ev;
                    if (!fiber_events(rows, crit[i], bits, ev)) continue;
                    size_t nl = 0, nr = 0;
                    bool bad = false;
                    for (auto e : ev) {
                        bool l = e == Ev::BottomL || e == Ev::TopL || e == Ev::Pass || e == Ev::FoldL;
                        bool r = e == Ev::BottomR || e == Ev::TopR || e == Ev::Pass || e == Ev::FoldR;
                        nl += l + (e == Ev::FoldL);
                        nr += r + (e == Ev::FoldR);
                    }
                    if (nl != L.size() || nr != R.size()) bad = true;
                    if (bad) continue;
                    size_t il = 0, ir = 0;
                    for (auto e : ev) {
                        switch (e) {
                            case Ev::BottomL: attach(L[il++], horizontal(1, crit[i])); break;
                            case Ev::BottomR: attach(R[ir++], horizontal(1, crit[i])); break;
                            case Ev::TopL: attach(L[il++], horizontal(-1, crit[i])); break;
                            case Ev::TopR: attach(R[ir++], horizontal(-1, crit[i])); break;
                            case Ev::Pass: dsu.unite(L[il++], R[ir++]); break;
                            case Ev::FoldL: dsu.unite(L[il], L[il + 1]); il += 2; break;
                            case Ev::FoldR: dsu.unite(R[ir], R[ir + 1]); ir += 2; break;
                        }
                    }
                    ok = true;
                }
                if (!ok) throw UncertifiedTraceError("fiber analysis did not match exact counts");
            }
        }
    for (auto& bp : bps)
        if (bp.attached != 2) throw UncertifiedTraceError("boundary point not glued to two branches");
    CurveTopology t;
    t.circles = dsu.components();
    t.boundary_points = static_cast<int>(bps.size());
    return t;
}

}  // namespace

CurveTopology curve_topology_exact(const BiPoly& F) {
    try {
        return topology_once(F);
    } catch (const VerticalComponent&) {
    }
    try {
        return topology_once(F.swapped());
    } catch (const VerticalComponent&) {
        throw UncertifiedTraceError("curve contains lines parallel to both axes");
    }
}

}  // namespace mz

#include <array>
#include <cmath>

#include "mzeta/curve.hpp"
#include "mzeta/errors.hpp"

namespace mz {

namespace {

using ld = long double;

struct Pt {
    ld x, y;
};

// F(ea*e^x, eb*e^y) with all monomials scaled by the largest one.
struct LogCurve {
    std::vector<std::array<ld, 3>> terms;  // exponent i, exponent j, signed coefficient

    LogCurve(const BiPoly& F, int ea, int eb) {
        for (auto& [e, c] : F.c) {
            ld v = c.get_d();
            if (e.first % 2 && ea < 0) v = -v;
            if (e.second % 2 && eb < 0) v = -v;
            terms.push_back({static_cast<ld>(e.first), static_cast<ld>(e.second), v});
        }
    }
    // Value and gradient, normalized.
    void eval(const Pt& p, ld& g, ld& gx, ld& gy) const {
        ld m = -INFINITY;
        for (auto& t : terms) m = std::max(m, t[0] * p.x + t[1] * p.y);
        g = gx = gy = 0;
        ld scale = 0;
        for (auto& t : terms) {
            ld w = std::exp(t[0] * p.x + t[1] * p.y - m);
            g += t[2] * w;
            gx += t[0] * t[2] * w;
            gy += t[1] * t[2] * w;
            scale += std::fabs(t[2]) * w;
        }
        g /= scale;
        gx /= scale;
        gy /= scale;
    }
};

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

bool correct(const LogCurve& C, Pt& q) {
    for (int it = 0; it < 12; ++it) {
        ld g, gx, gy;
        C.eval(q, g, gx, gy);
        ld n2 = gx * gx + gy * gy;
        if (n2 == 0) return false;
        q.x -= g * gx / n2;
        q.y -= g * gy / n2;
        if (std::fabs(g) / std::sqrt(n2) < 1e-15L) return true;
    }
    return false;
}

Pt tangent(const LogCurve& C, const Pt& p) {
    ld g, gx, gy;
    C.eval(p, g, gx, gy);
    ld n = std::hypot(gx, gy);
    return {-gy / n, gx / n};
}

}  // namespace

CurveTopology curve_topology_trace(const BiPoly& F) {
    auto edges = newton_polygon_edges(F);
    struct BP {
        int edge, sign;
        ld logabs;
        int node;
        int attached = 0;
    };
    Dsu dsu;
    std::vector<BP> bps;
    for (size_t e = 0; e < edges.size(); ++e) {
        auto rr = nonzero_real_roots(edges[e].poly);
        if (!rr.squarefree) throw SingularCurveError("edge polynomial has a repeated real root");
        for (auto& x : rr.positive)
            bps.push_back({static_cast<int>(e), 1, std::log(static_cast<ld>(alg_approx(x))), dsu.add()});
        for (auto& x : rr.negative)
            bps.push_back({static_cast<int>(e), -1, std::log(static_cast<ld>(alg_approx(x))), dsu.add()});
    }
    ZPoly res = resultant_b(F, F.d_b());
    if (zdeg(res) < 0) throw SingularCurveError("curve has a multiple component");
    ZPoly D = zsquarefree(zstrip_zero_roots(zmul(res, F.rows()[0])));
    const ld R = 36;

    for (int e1 : {1, -1})
        for (int e2 : {1, -1}) {
            LogCurve C(F, e1, e2);
            BiPoly Fq = F.with_signs(e1, e2);
            auto in_quadrant = [&](const BP& bp) {
                const auto& d = edges[bp.edge].delta;
                int s = ((d[0] % 2 != 0) ? e1 : 1) * ((d[1] % 2 != 0) ? e2 : 1);
                return s == bp.sign;
            };
            ZPoly Dq = e1 > 0 ? D : zprimitive(zcompose_neg(D));
            std::vector<ld> crit;
            if (zdeg(Dq) >= 1)
                for (auto& iv : isolate_positive_roots(Dq))
                    crit.push_back(std::log(static_cast<ld>(alg_approx({zsquarefree(Dq), iv}))));
            std::vector<ld> lines;
            if (crit.empty()) {
                lines.push_back(0);
            } else {
                lines.push_back(crit.front() - 1);
                for (size_t i = 0; i + 1 < crit.size(); ++i) lines.push_back((crit[i] + crit[i + 1]) / 2);
                lines.push_back(crit.back() + 1);
            }
            struct Seed {
                Pt p;
                int node;
                bool visited = false;
            };
            std::vector<std::vector<Seed>> seeds(lines.size());
            for (size_t i = 0; i < lines.size(); ++i) {
                Rat a(static_cast<double>(std::exp(lines[i])));
                lines[i] = std::log(static_cast<ld>(a.get_d()));
                ZPoly fb = Fq.at_a(a);
                for (auto& iv : isolate_positive_roots(fb)) {
                    ZPoly sq = zsquarefree(fb);
                    Pt p{lines[i], std::log(static_cast<ld>(alg_approx({sq, iv})))};
                    seeds[i].push_back({p, dsu.add()});
                }
            }
            // Seed met when the segment p -> q crosses one of the vertical lines.
            auto crossing = [&](const Pt& p, const Pt& q) {
                std::vector<Seed*> met;
                for (size_t i = 0; i < lines.size(); ++i) {
                    ld xs = lines[i];
                    if (!((p.x - xs) * (q.x - xs) < 0 || (q.x == xs && p.x != xs))) continue;
                    ld y = p.y + (xs - p.x) * (q.y - p.y) / (q.x - p.x);
                    for (int it = 0; it < 30; ++it) {
                        ld g, gx, gy;
                        C.eval({xs, y}, g, gx, gy);
                        if (gy == 0) break;
                        ld dy = g / gy;
                        y -= dy;
                        if (std::fabs(dy) < 1e-16L * (1 + std::fabs(y))) break;
                    }
                    Seed* best = nullptr;
                    ld bd = 1e-7L * (1 + std::fabs(y));
                    for (auto& s : seeds[i]) {
                        ld d = std::fabs(s.p.y - y);
                        if (d < bd) {
                            bd = d;
                            best = &s;
                        }
                    }
                    if (!best) throw UncertifiedTraceError("traced branch missed the sample fiber");
                    met.push_back(best);
                }
                return met;
            };
            ld hmax = 0.05L;
            for (size_t i = 0; i + 1 < lines.size(); ++i) hmax = std::min(hmax, (lines[i + 1] - lines[i]) / 4);
            auto exit_point = [&](const Pt& p) -> BP& {
                ld norm = std::hypot(p.x, p.y);
                BP* best = nullptr;
                ld best_score = -INFINITY;
                for (auto& bp : bps) {
                    if (!in_quadrant(bp)) continue;
                    const auto& n = edges[bp.edge].normal;
                    const auto& d = edges[bp.edge].delta;
                    ld dir = -(n[0] * p.x + n[1] * p.y) / (std::hypot(ld(n[0]), ld(n[1])) * norm);
                    ld off = std::fabs(d[0] * p.x + d[1] * p.y - bp.logabs);
                    ld score = 1000 * dir - off;
                    if (score > best_score) {
                        best_score = score;
                        best = &bp;
                    }
                }
                if (!best) throw UncertifiedTraceError("branch leaves the torus away from the boundary points");
                return *best;
            };
            // Follows the branch through seed s in direction dir.  Returns
            // true when the branch closes up into an oval.
            auto follow = [&](Seed& s, int dir) -> bool {
                Pt p = s.p;
                Pt t = tangent(C, p);
                t = {t.x * dir, t.y * dir};
                ld h = hmax / 4;
                for (long step = 0; step < 2000000; ++step) {
                    Pt q{p.x + h * t.x, p.y + h * t.y};
                    bool ok = correct(C, q);
                    Pt nt{0, 0};
                    if (ok) {
                        nt = tangent(C, q);
                        if (nt.x * t.x + nt.y * t.y < 0) nt = {-nt.x, -nt.y};
                        ld moved = std::hypot(q.x - p.x - h * t.x, q.y - p.y - h * t.y);
                        ok = nt.x * t.x + nt.y * t.y > 0.95L && moved < 0.3L * h;
                    }
                    if (!ok) {
                        h /= 2;
                        if (h < 1e-12L) throw UncertifiedTraceError("step size underflow while tracing");
                        continue;
                    }
                    for (Seed* m : crossing(p, q)) {
                        if (m == &s) return true;
                        m->visited = true;
                        dsu.unite(m->node, s.node);
                    }
                    p = q;
                    t = nt;
                    if (std::max(std::fabs(p.x), std::fabs(p.y)) > R) {
                        BP& bp = exit_point(p);
                        bp.attached++;
                        dsu.unite(bp.node, s.node);
                        return false;
                    }
                    h = std::min(h * 1.5L, hmax);
                }
                throw UncertifiedTraceError("trace did not terminate");
            };
            for (auto& line : seeds)
                for (auto& s : line) {
                    if (s.visited) continue;
                    s.visited = true;
                    if (!follow(s, 1)) follow(s, -1);
                }
        }
    for (auto& bp : bps)
        if (bp.attached != 2) throw UncertifiedTraceError("boundary point not glued to two branches");
    CurveTopology t;
    t.circles = dsu.components();
    t.boundary_points = static_cast<int>(bps.size());
    return t;
}

}  // namespace mz

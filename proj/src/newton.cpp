#include "mzeta/newton.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "mzeta/errors.hpp"

namespace mz {

IVec to_ivec(const ExpVec& e) { return IVec(e.begin(), e.end()); }

ExpVec to_expvec(const IVec& v) {
    ExpVec e;
    for (auto x : v) e.push_back(static_cast<int>(x));
    return e;
}

long long s_of(const IVec& a) { return std::accumulate(a.begin(), a.end(), 0LL); }

namespace {

bool nonneg(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x >= 0; });
}

bool positive(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x > 0; });
}

IVec unit(int n, int i) {
    IVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

long long min_pairing(const std::vector<IVec>& pts, const IVec& a) {
    long long m = dot(a, pts[0]);
    for (const auto& p : pts) m = std::min(m, dot(a, p));
    return m;
}

std::vector<IVec> argmin_set(const std::vector<IVec>& pts, const IVec& a) {
    long long m = min_pairing(pts, a);
    std::vector<IVec> r;
    for (const auto& p : pts)
        if (dot(a, p) == m) r.push_back(p);
    std::sort(r.begin(), r.end());
    return r;
}

int affine_rank(const std::vector<IVec>& pts) {
    IMat d;
    for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(vsub(pts[i], pts[0]));
    return rank(d);
}

// Candidate facet normals from n-1 independent generators among point
// differences and coordinate directions.
std::vector<IVec> facet_normals(const std::vector<IVec>& E, int n) {
    std::vector<IVec> cands;
    if (n == 1) {
        cands.push_back({1});
    } else if (n == 2) {
        for (std::size_t i = 0; i < E.size(); ++i)
            for (std::size_t j = i + 1; j < E.size(); ++j) {
                IVec d = vsub(E[j], E[i]);
                cands.push_back({-d[1], d[0]});
            }
        cands.push_back(unit(2, 0));
        cands.push_back(unit(2, 1));
    } else {
        std::vector<IVec> dirs;
        for (int i = 0; i < 3; ++i) dirs.push_back(unit(3, i));
        std::vector<IVec> diffs;
        for (std::size_t i = 0; i < E.size(); ++i)
            for (std::size_t j = i + 1; j < E.size(); ++j) diffs.push_back(vsub(E[j], E[i]));
        for (std::size_t i = 0; i < diffs.size(); ++i) {
            for (std::size_t j = i + 1; j < diffs.size(); ++j) cands.push_back(cross(diffs[i], diffs[j]));
            for (const auto& e : dirs) cands.push_back(cross(diffs[i], e));
        }
        for (int i = 0; i < 3; ++i) cands.push_back(unit(3, i));
    }
    std::set<IVec> normals;
    for (auto w : cands) {
        if (vgcd(w) == 0) continue;
        w = primitive(w);
        if (!nonneg(w)) {
            w = vscale(w, -1);
            if (!nonneg(w)) continue;
        }
        if (normals.count(w)) continue;
        auto F = argmin_set(E, w);
        IMat span;
        for (std::size_t i = 1; i < F.size(); ++i) span.push_back(vsub(F[i], F[0]));
        for (int i = 0; i < n; ++i)
            if (w[static_cast<std::size_t>(i)] == 0) span.push_back(unit(n, i));
        if (rank(span) == n - 1) normals.insert(w);
    }
    return {normals.begin(), normals.end()};
}

// Angle order in the quarter plane: from e1 towards e2.
bool angle_less(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0] > 0; }

// Hirzebruch-Jung chain between v1 and v2 (det(v1, v2) > 0), endpoints
// included.
std::vector<IVec> hj_chain(const IVec& v1, const IVec& v2) {
    std::vector<IVec> chain = {v1};
    IVec cur = v1;
    int guard = 0;
    while (det({cur, v2}) > 1) {
        if (++guard > 10000) throw RefinementFailure("Hirzebruch-Jung recursion did not terminate");
        // p0 with det(cur, p0) = 1.
        long long a = cur[0], b = cur[1];
        long long x0 = 0, y0 = 0;
        {
            // extended gcd for a*y - b*x = 1
            long long old_r = a, r = -b, old_s = 1, s = 0, old_t = 0, t = 1;
            while (r != 0) {
                long long q = old_r / r;
                std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
                std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
                std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
            }
            // a*old_s + (-b)*old_t = old_r = +-1
            if (old_r < 0) {
                old_s = -old_s;
                old_t = -old_t;
            }
            y0 = old_s;
            x0 = old_t;
        }
        IVec p0 = {x0, y0};
        long long D = det({cur, v2});
        long long num = -det({p0, v2});
        long long t = num >= 0 ? (num + D - 1) / D : -((-num) / D);
        IVec w = vadd(p0, vscale(cur, t));
        chain.push_back(w);
        cur = w;
    }
    chain.push_back(v2);
    return chain;
}

}  // namespace

long long m_f(const NewtonData& nd, const IVec& a) {
    if (!nonneg(a)) throw NegativeDirectionError("m_f requires a non-negative direction");
    return min_pairing(nd.vertices, a);
}

Rat m_f_rat(const NewtonData& nd, const std::vector<Rat>& a) {
    Rat best;
    bool first = true;
    for (const auto& v : nd.vertices) {
        Rat s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += a[i] * static_cast<long>(v[i]);
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

long long h_of(const NewtonData& nd, const IVec& a) { return m_f(nd, a) - s_of(a); }

std::optional<int> gamma_f(const NewtonData& nd, const IVec& a) {
    if (!nonneg(a)) throw NegativeDirectionError("gamma_f requires a non-negative direction");
    // A zero entry a_i makes the selected face unbounded in direction e_i.
    if (!positive(a)) return std::nullopt;
    auto F = argmin_set(nd.support, a);
    for (const auto& face : nd.faces)
        if (face.exponents == F) return face.id;
    return std::nullopt;
}

bool is_convenient(const NewtonData& nd) {
    for (int i = 0; i < nd.n; ++i) {
        bool found = false;
        for (const auto& v : nd.vertices) {
            bool axis = true;
            for (int j = 0; j < nd.n; ++j)
                if (j != i && v[static_cast<std::size_t>(j)] != 0) axis = false;
            found = found || axis;
        }
        if (!found) return false;
    }
    return true;
}

LeadingExponent leading_exponent(const NewtonData& nd) {
    LeadingExponent le;
    le.value = 0;
    Rat best;
    bool any = false;
    for (const auto& a : nd.generators_pos) {
        Rat v = 1 - make_rat(s_of(a), m_f(nd, a));
        if (!any || v > best) best = v;
        any = true;
    }
    if (any && best > 0) le.value = best;
    if (any && best >= 0)
        for (const auto& a : nd.generators_pos)
            if (1 - make_rat(s_of(a), m_f(nd, a)) == best) le.max_set.push_back(a);
    return le;
}

int position_of_ones(const NewtonData& nd) {
    IVec ones(static_cast<std::size_t>(nd.n), 1);
    bool boundary = false;
    for (const auto& w : nd.generators) {
        long long lhs = dot(w, ones), m = m_f(nd, w);
        if (lhs < m) return 1;
        if (lhs == m) boundary = true;
    }
    return boundary ? 0 : -1;
}

std::optional<int> facet_with_normal(const NewtonData& nd, const IVec& v) {
    for (const auto& f : nd.faces)
        if (f.dim == nd.n - 1 && f.normal_rays.size() == 1 && f.normal_rays[0] == v) return f.id;
    return std::nullopt;
}

namespace {

void populate_fan(NewtonData& nd) {
    std::set<std::vector<IVec>> seen;
    nd.fan.clear();
    for (const auto& mc : nd.maximal_cones) {
        std::size_t k = mc.size();
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<IVec> g;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) g.push_back(mc[i]);
            std::sort(g.begin(), g.end());
            if (!seen.insert(g).second) continue;
            Cone c;
            c.generators = g;
            IVec sum(static_cast<std::size_t>(nd.n), 0);
            for (const auto& x : g) {
                sum = vadd(sum, x);
                c.m_values.push_back(m_f(nd, x));
                c.s_values.push_back(s_of(x));
            }
            if (positive(sum)) {
                auto F = argmin_set(nd.support, sum);
                for (const auto& f : nd.faces)
                    if (f.exponents == F) c.face_ref = f.id;
                if (c.face_ref < 0) throw Error("fan cone does not map to a compact face");
            }
            if (static_cast<int>(g.size()) == nd.n) {
                long long d = det(g);
                c.unimodular = d == 1 || d == -1;
            } else if (g.size() == 1) {
                c.unimodular = vgcd(g[0]) == 1;
            } else {
                // 2 generators in 3-space: unimodular iff cross product primitive.
                c.unimodular = vgcd(cross(g[0], g[1])) == 1;
            }
            nd.fan.push_back(std::move(c));
        }
    }
}

}  // namespace

NewtonData build_newton_polyhedron(const Poly& f) {
    if (f.is_zero()) throw EmptyPolyError("Newton polyhedron of the zero polynomial");
    if (f.nvars() > 3) throw DimensionError("at most three variables are supported");
    if (f.has_constant_term()) throw ConstantTermError("germ has a nonzero constant term");
    NewtonData nd;
    nd.poly = f;
    nd.n = f.nvars();
    const int n = nd.n;
    for (const auto& [e, c] : f.terms()) nd.support.push_back(to_ivec(e));
    std::sort(nd.support.begin(), nd.support.end());

    nd.generators = facet_normals(nd.support, n);

    // Vertices: exponents cut out by the facets through them.
    std::map<IVec, std::vector<IVec>> facet_pts;
    for (const auto& w : nd.generators) facet_pts[w] = argmin_set(nd.support, w);
    for (const auto& p : nd.support) {
        std::vector<IVec> inter;
        bool on_any = false;
        for (const auto& [w, pts] : facet_pts) {
            if (!std::binary_search(pts.begin(), pts.end(), p)) continue;
            if (!on_any) {
                inter = pts;
            } else {
                std::vector<IVec> tmp;
                std::set_intersection(inter.begin(), inter.end(), pts.begin(), pts.end(), std::back_inserter(tmp));
                inter = tmp;
            }
            on_any = true;
        }
        if (on_any && inter.size() == 1) nd.vertices.push_back(p);
    }
    for (const auto& w : nd.generators)
        if (min_pairing(nd.vertices, w) > 0) nd.generators_pos.push_back(w);

    // Compact faces: minimizer sets of sums of at most n facet normals.
    std::set<std::vector<IVec>> face_sets;
    std::map<std::vector<IVec>, std::set<IVec>> rays_of;
    const auto& G = nd.generators;
    std::function<void(std::size_t, int, IVec)> rec = [&](std::size_t start, int left, IVec acc) {
        if (positive(acc)) face_sets.insert(argmin_set(nd.support, acc));
        if (left == 0) return;
        for (std::size_t i = start; i < G.size(); ++i) rec(i + 1, left - 1, vadd(acc, G[i]));
    };
    rec(0, n, IVec(static_cast<std::size_t>(n), 0));
    std::vector<std::vector<IVec>> sets(face_sets.begin(), face_sets.end());
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        int da = affine_rank(a), db = affine_rank(b);
        if (da != db) return da < db;
        return a < b;
    });
    for (const auto& s : sets) {
        Face fc;
        fc.id = static_cast<int>(nd.faces.size());
        fc.dim = affine_rank(s);
        fc.exponents = s;
        for (const auto& p : s)
            if (std::binary_search(nd.vertices.begin(), nd.vertices.end(), p)) fc.vertices.push_back(p);
        for (const auto& w : G) {
            const auto& pts = facet_pts[w];
            if (std::includes(pts.begin(), pts.end(), s.begin(), s.end())) fc.normal_rays.push_back(w);
        }
        nd.faces.push_back(fc);
    }
    for (auto& fc : nd.faces)
        for (const auto& sub : nd.faces)
            if (std::includes(fc.exponents.begin(), fc.exponents.end(), sub.exponents.begin(), sub.exponents.end()))
                fc.subfaces.push_back(sub.id);

    // Maximal cones: normal cones of vertices, triangulated from one ray.
    if (n == 1) {
        nd.maximal_cones.push_back({IVec{1}});
    } else if (n == 2) {
        std::vector<IVec> rays = G;
        std::sort(rays.begin(), rays.end(), angle_less);
        for (std::size_t i = 0; i + 1 < rays.size(); ++i) nd.maximal_cones.push_back({rays[i], rays[i + 1]});
    } else {
        for (const auto& v : nd.vertices) {
            std::vector<IVec> R;
            for (const auto& w : G)
                if (std::binary_search(facet_pts[w].begin(), facet_pts[w].end(), v)) R.push_back(w);
            const IVec& r0 = R[0];
            for (std::size_t i = 1; i < R.size(); ++i)
                for (std::size_t j = i + 1; j < R.size(); ++j) {
                    IVec nrm = cross(R[i], R[j]);
                    int pos = 0, neg = 0;
                    for (std::size_t k = 0; k < R.size(); ++k) {
                        if (k == i || k == j) continue;
                        long long d = dot(nrm, R[k]);
                        if (d > 0) ++pos;
                        if (d < 0) ++neg;
                        if (d == 0) ++pos, ++neg;
                    }
                    bool is_face = pos == 0 || neg == 0;
                    if (!is_face) continue;
                    if (dot(nrm, r0) == 0) continue;  // face contains r0
                    nd.maximal_cones.push_back({r0, R[i], R[j]});
                }
        }
    }
    populate_fan(nd);
    return nd;
}

NewtonData unimodular_refine(const NewtonData& nd0) {
    NewtonData nd = nd0;
    if (nd.n == 2) {
        std::vector<std::vector<IVec>> cones;
        for (const auto& c : nd.maximal_cones) {
            IVec a = c[0], b = c[1];
            if (det({a, b}) < 0) std::swap(a, b);
            auto chain = hj_chain(a, b);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i) cones.push_back({chain[i], chain[i + 1]});
        }
        nd.maximal_cones = cones;
    } else if (nd.n == 3) {
        auto& cones = nd.maximal_cones;
        int iterations = 0;
        while (true) {
            auto bad = std::find_if(cones.begin(), cones.end(), [](const std::vector<IVec>& c) {
                long long d = det(c);
                return d != 1 && d != -1;
            });
            if (bad == cones.end()) break;
            if (++iterations > 10000) throw RefinementFailure("stellar subdivision exceeded 10^4 steps");
            const auto& g = *bad;
            long long D = det(g);
            long long AD = D < 0 ? -D : D;
            // adj(G) rows: G^{-1} = adj / D with G = [g0 g1 g2] as columns.
            IMat adj = {cross(g[1], g[2]), cross(g[2], g[0]), cross(g[0], g[1])};
            // Enumerate Z^3 / G Z^3 through the numerators adj * e_i mod |D|.
            auto norm = [&](IVec v) {
                for (auto& x : v) x = ((x % AD) + AD) % AD;
                return v;
            };
            std::set<IVec> classes = {IVec{0, 0, 0}};
            std::vector<IVec> frontier = {IVec{0, 0, 0}};
            std::vector<IVec> gens;
            for (int i = 0; i < 3; ++i) {
                IVec col = {adj[0][static_cast<std::size_t>(i)], adj[1][static_cast<std::size_t>(i)],
                            adj[2][static_cast<std::size_t>(i)]};
                gens.push_back(norm(vscale(col, D < 0 ? -1 : 1)));
            }
            while (!frontier.empty()) {
                IVec c = frontier.back();
                frontier.pop_back();
                for (const auto& e : gens) {
                    IVec d = norm(vadd(c, e));
                    if (classes.insert(d).second) frontier.push_back(d);
                }
            }
            IVec best;
            for (const auto& lam : classes) {
                if (lam == IVec{0, 0, 0}) continue;
                IVec w(3, 0);
                for (int j = 0; j < 3; ++j) w = vadd(w, vscale(g[static_cast<std::size_t>(j)], lam[static_cast<std::size_t>(j)]));
                for (auto& x : w) x /= AD;
                if (best.empty() || s_of(w) < s_of(best) || (s_of(w) == s_of(best) && w < best)) best = w;
            }
            IVec w = primitive(best);
            std::vector<std::vector<IVec>> next;
            for (const auto& c : cones) {
                long long d = det(c);
                IMat adjc = {cross(c[1], c[2]), cross(c[2], c[0]), cross(c[0], c[1])};
                IVec lam = {dot(adjc[0], w), dot(adjc[1], w), dot(adjc[2], w)};
                if (d < 0) lam = vscale(lam, -1);
                bool inside = std::all_of(lam.begin(), lam.end(), [](long long x) { return x >= 0; });
                if (!inside) {
                    next.push_back(c);
                    continue;
                }
                for (int i = 0; i < 3; ++i) {
                    if (lam[static_cast<std::size_t>(i)] == 0) continue;
                    auto nc = c;
                    nc[static_cast<std::size_t>(i)] = w;
                    next.push_back(nc);
                }
            }
            cones = next;
        }
    }
    nd.refined = true;
    populate_fan(nd);
    // Refinement rays are not part of Gamma^(1); generators stay as built.
    return nd;
}

}  // namespace mz

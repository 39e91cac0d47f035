// Test-side helpers: random quivers and brute-force oracles independent of the library algorithms.
#pragma once

#include "gqp/linalg.hpp"
#include "gqp/mutation.hpp"
#include "gqp/quiver.hpp"

#include <functional>
#include <random>
#include <set>

namespace testsupport {

using namespace gqp;

// Loop-free, 2-cycle-free random quiver; vertices "1".."n".
inline Quiver random_quiver(std::mt19937& rng, int max_vertices = 4, int max_arrows = 6)
{
    int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    int m = std::uniform_int_distribution<int>(1, max_arrows)(rng);
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i)
        vs.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> cnt(n, std::vector<int>(n, 0));
    for (int k = 0, tries = 0; k < m && tries < 100; ++tries) {
        int s = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (s == t || cnt[t][s] > 0)
            continue;
        ++cnt[s][t];
        arrows.push_back({"x" + std::to_string(k), vs[s], vs[t]});
        ++k;
    }
    return Quiver(vs, arrows);
}

// Cycles of length 2..maxlen as arrow sequences in traversal order, one per rotation class.
inline std::vector<std::vector<int>> simple_cycles(const Quiver& q, int maxlen)
{
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        if ((int)cur.size() > maxlen)
            return;
        if (!cur.empty() && v == start) {
            std::vector<int> best = cur;
            for (size_t r = 1; r < cur.size(); ++r) {
                std::vector<int> rot(cur.begin() + r, cur.end());
                rot.insert(rot.end(), cur.begin(), cur.begin() + r);
                best = std::min(best, rot);
            }
            if (seen.insert(best).second)
                out.push_back(best);
            return;
        }
        for (int a : q.arrows_from(v)) {
            cur.push_back(a);
            dfs(start, q.target(a));
            cur.pop_back();
        }
    };
    for (int v = 0; v < q.num_vertices(); ++v)
        dfs(v, v);
    return out;
}

// All paths of length < n, enumerated naively.
inline std::vector<Path> paths_below(const Quiver& q, int n)
{
    std::vector<Path> out;
    std::vector<Path> layer;
    for (int v = 0; v < q.num_vertices(); ++v)
        layer.push_back(lazy_path(v));
    for (int len = 0; len < n; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const Path& p : layer)
            for (int a : q.arrows_from(p.tgt)) {
                Path e = p;
                e.arrows.push_back(a);
                e.tgt = q.target(a);
                next.push_back(e);
            }
        layer = std::move(next);
    }
    return out;
}

/*
 * dim kQ/(I + paths of length >= n), computed by spanning u*g*v for all paths u, v.
 * Equal values at n and n+1 mean the radical power vanishes, so the value is dim kQ/I.
 * Returns -1 if no stabilisation up to max_n.
 */
inline long brute_force_dim(const Quiver& q, const std::vector<PathElement>& gens, int max_n = 10)
{
    long prev = -2;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Path> ps = paths_below(q, n);
        std::map<Path, int> idx;
        for (size_t k = 0; k < ps.size(); ++k)
            idx[ps[k]] = (int)k;
        Echelon ech;
        for (const auto& g : gens) {
            if (g.empty())
                continue;
            int gs = g.begin()->first.src, gt = g.begin()->first.tgt;
            for (const Path& u : ps) {
                if (u.tgt != gs)
                    continue;
                for (const Path& v : ps) {
                    if (v.src != gt)
                        continue;
                    SparseVec vec;
                    for (const auto& [p, c] : g) {
                        Path w = u;
                        w.arrows.insert(w.arrows.end(), p.arrows.begin(), p.arrows.end());
                        w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
                        w.tgt = v.tgt;
                        if ((int)w.arrows.size() < n)
                            axpy(vec, c, unit_vec(idx.at(w)));
                    }
                    if (!vec.empty())
                        ech.insert(vec);
                }
            }
        }
        long d = (long)ps.size() - ech.rank();
        if (d == prev)
            return d;
        prev = d;
    }
    return -1;
}

// Random homogeneous QP: random degrees, potential from the most common cycle degree.
inline GradedQP random_graded_qp(std::mt19937& rng)
{
    Quiver q = random_quiver(rng);
    std::vector<Degree> deg;
    for (int a = 0; a < q.num_arrows(); ++a)
        deg.push_back({std::uniform_int_distribution<long>(-1, 2)(rng)});
    auto cycles = simple_cycles(q, 4);
    std::map<long, std::vector<std::vector<int>>> by_deg;
    for (auto& c : cycles) {
        if (c.size() < 3)
            continue;
        long d = 0;
        for (int a : c)
            d += deg[a][0];
        by_deg[d].push_back(c);
    }
    long r = std::uniform_int_distribution<long>(-1, 2)(rng);
    size_t best = 0;
    for (auto& [d, cs] : by_deg)
        if (cs.size() > best) {
            best = cs.size();
            r = d;
        }
    Potential w;
    if (by_deg.count(r))
        for (auto& c : by_deg[r])
            add_cycle(q, w, make_path(q, c), std::uniform_int_distribution<int>(1, 9)(rng));
    return GradedQP{q, w, deg, {r}};
}

using Counts = std::vector<std::vector<int>>;

inline Counts counts(const Quiver& q)
{
    Counts n(q.num_vertices(), std::vector<int>(q.num_vertices(), 0));
    for (int a = 0; a < q.num_arrows(); ++a)
        ++n[q.source(a)][q.target(a)];
    return n;
}

// Arrow counts of the premutation, straight from the matrix description.
inline Counts dwz_premutation(const Counts& n, int i)
{
    int k = (int)n.size();
    Counts m(k, std::vector<int>(k, 0));
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) {
            if (u == i || v == i)
                m[u][v] = n[v][u];
            else
                m[u][v] = n[u][v] + n[u][i] * n[i][v];
        }
    return m;
}

inline Counts dwz_reduced(Counts m)
{
    int k = (int)m.size();
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            int c = std::min(m[u][v], m[v][u]);
            m[u][v] -= c;
            m[v][u] -= c;
        }
    return m;
}

inline std::vector<int> mutable_vertices(const GradedQP& qp)
{
    std::vector<int> out;
    for (int v = 0; v < qp.quiver.num_vertices(); ++v)
        if (check_mutable(qp, qp.quiver.vertex_name(v)))
            out.push_back(v);
    return out;
}

inline bool degree_preserving_iso(const GradedQP& x, const GradedQP& y)
{
    bool found = false;
    for_each_isomorphism(x.quiver, y.quiver, [&](const QuiverIso& s) {
        for (int a = 0; a < x.quiver.num_arrows(); ++a)
            if (x.degree[a] != y.degree[s.arrow_map[a]])
                return true;
        found = true;
        return false;
    });
    return found;
}

}  // namespace testsupport

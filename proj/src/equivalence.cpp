/* equivalence.cpp */
#include "gqp/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

namespace gqp {

namespace {

struct Prepared {
    std::unique_ptr<DerivedCategory> d;
    GradedQP tilde;
    int stop = -1;
    int window = 0;
};

void check_minimal(const AlgebraPresentation& p, const DerivedCategory& d)
{
    int n = p.quiver.num_vertices();
    std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
    for (const auto& r : p.relations) {
        const Path& lead = r.begin()->first;
        ++count[lead.tgt][lead.src];
    }
    auto ext = d.ext2();
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s)
            if (ext[t][s] != count[t][s])
                throw MathError("not_minimal", "relations from " + p.quiver.vertex_name(s) + " to " +
                                                   p.quiver.vertex_name(t) + ": " + std::to_string(count[t][s]) +
                                                   " given, Ext^2 has dimension " + std::to_string(ext[t][s]));
}

GradedQP build_tilde(const AlgebraPresentation& p, const std::vector<Degree>& old_deg,
                     const std::vector<Degree>& new_deg, const Degree& target)
{
    auto names = relation_arrow_names(p);
    std::vector<Arrow> arrows = p.quiver.arrows();
    for (size_t r = 0; r < p.relations.size(); ++r) {
        const Path& lead = p.relations[r].begin()->first;
        arrows.push_back({names[r], p.quiver.vertex_name(lead.tgt), p.quiver.vertex_name(lead.src)});
    }
    GradedQP qp;
    qp.quiver = Quiver(p.quiver.vertices(), arrows);
    qp.degree = old_deg;
    qp.degree.insert(qp.degree.end(), new_deg.begin(), new_deg.end());
    qp.target_degree = target;
    for (size_t r = 0; r < p.relations.size(); ++r) {
        int ar = p.quiver.num_arrows() + (int)r;
        for (const auto& [path, c] : p.relations[r]) {
            std::vector<int> cyc = path.arrows;
            cyc.push_back(ar);
            add_cycle(qp.quiver, qp.potential, make_path(qp.quiver, cyc), c);
        }
    }
    return qp;
}

Prepared prepare(const AlgebraPresentation& p, int cutoff, int window)
{
    Prepared out;
    out.d = std::make_unique<DerivedCategory>(build_algebra(p, cutoff));
    require_gldim2(*out.d);
    check_minimal(p, *out.d);
    out.tilde = build_tilde(p, std::vector<Degree>(p.quiver.num_arrows(), Degree{0}),
                            std::vector<Degree>(p.relations.size(), Degree{1}), Degree{1});
    out.window = window < 0 ? default_window(out.d->algebra()) : window;
    auto stop = tau2_finite(*out.d, out.window);
    if (!stop)
        throw MathError("inconclusive", "tilde algebra does not vanish within the window; tau_2-finiteness undetermined");
    out.stop = *stop;
    return out;
}

/* Splits numbers into pairwise coprime factors. */
void refine(std::vector<mpz_class>& atoms, mpz_class x)
{
    std::deque<mpz_class> todo{std::move(x)};
    while (!todo.empty()) {
        mpz_class y = todo.front();
        todo.pop_front();
        if (y == 1)
            continue;
        bool split = false;
        for (size_t i = 0; i < atoms.size(); ++i) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), atoms[i].get_mpz_t());
            if (g == 1)
                continue;
            if (g == y && g == atoms[i]) {
                split = true;
                break;
            }
            mpz_class a = atoms[i];
            atoms.erase(atoms.begin() + i);
            todo.push_back(g);
            todo.push_back(a / g);
            todo.push_back(y / g);
            split = true;
            break;
        }
        if (!split)
            atoms.push_back(y);
    }
}

long valuation(mpz_class x, const mpz_class& atom)
{
    long v = 0;
    while (x % atom == 0) {
        x /= atom;
        ++v;
    }
    return v;
}

bool gf2_solvable(std::vector<std::vector<char>> rows, std::vector<char> rhs, int ncols)
{
    size_t rank = 0;
    for (int c = 0; c < ncols && rank < rows.size(); ++c) {
        size_t piv = rank;
        while (piv < rows.size() && !rows[piv][c])
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(rhs[piv], rhs[rank]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c]) {
                for (int k = 0; k < ncols; ++k)
                    rows[r][k] ^= rows[rank][k];
                rhs[r] ^= rhs[rank];
            }
        ++rank;
    }
    for (size_t r = rank; r < rows.size(); ++r)
        if (rhs[r])
            return false;
    return true;
}

std::optional<QuiverIso> find_matching_iso(const GradedQP& a, const GradedQP& b,
                                           const std::function<bool(const QuiverIso&)>& accept)
{
    std::optional<QuiverIso> found;
    for_each_isomorphism(a.quiver, b.quiver, [&](const QuiverIso& s) {
        if (potentials_match(a, b, s) && accept(s)) {
            found = s;
            return false;
        }
        return true;
    });
    return found;
}

std::map<long, int> first_component(const std::map<Degree, int>& m)
{
    std::map<long, int> out;
    for (const auto& [d, n] : m)
        out[d.empty() ? 0 : d[0]] += n;
    return out;
}

GradedQP with_degrees(const GradedQP& qp, std::vector<Degree> deg, Degree target)
{
    GradedQP out = qp;
    out.degree = std::move(deg);
    out.target_degree = std::move(target);
    return out;
}

}  // namespace

std::optional<std::vector<Degree>> search_grading(const GradedQP& qp, int bound,
                                                   const std::function<bool(const std::vector<Degree>&)>& accept)
{
    const Quiver& q = qp.quiver;
    int n = q.num_vertices(), m = q.num_arrows();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
    std::vector<int> free_arrows, slot(m, -1);
    for (int x = 0; x < m; ++x) {
        int u = root(q.source(x)), v = root(q.target(x));
        if (u != v)
            parent[u] = v;
        else {
            slot[x] = (int)free_arrows.size();
            free_arrows.push_back(x);
        }
    }
    // cycles checked once their last free arrow is set
    std::vector<std::vector<std::vector<int>>> due(free_arrows.size() + 1);
    for (const auto& [cyc, c] : qp.potential.cycles) {
        int last = -1;
        for (int x : cyc.arrows)
            last = std::max(last, slot[x]);
        due[last + 1].push_back(cyc.arrows);
    }
    std::vector<Degree> deg(m, Degree{0});
    auto ok = [&](size_t k) {
        for (const auto& arrows : due[k]) {
            long sum = 0;
            for (int x : arrows)
                sum += deg[x][0];
            if (sum != 1)
                return false;
        }
        return true;
    };
    if (!ok(0))
        return std::nullopt;
    std::function<bool(size_t)> go = [&](size_t k) {
        if (k == free_arrows.size())
            return accept(deg);
        for (long e = -bound; e <= bound; ++e) {
            deg[free_arrows[k]] = Degree{e};
            if (ok(k + 1) && go(k + 1))
                return true;
        }
        return false;
    };
    if (go(0))
        return deg;
    return std::nullopt;
}

std::vector<std::string> relation_arrow_names(const AlgebraPresentation& p)
{
    if (!p.relation_arrows.empty())
        return p.relation_arrows;
    std::vector<std::string> out;
    std::set<std::string> used;
    for (const auto& a : p.quiver.arrows())
        used.insert(a.name);
    int k = 1;
    for (size_t r = 0; r < p.relations.size(); ++r) {
        std::string name;
        do
            name = "r" + std::to_string(k++);
        while (used.count(name));
        used.insert(name);
        out.push_back(name);
    }
    return out;
}

GradedQP tilde_qp(const AlgebraPresentation& p, int cutoff)
{
    DerivedCategory d(build_algebra(p, cutoff));
    require_gldim2(d);
    check_minimal(p, d);
    std::vector<Degree> old_deg(p.quiver.num_arrows(), Degree{0});
    std::vector<Degree> new_deg(p.relations.size(), Degree{1});
    return build_tilde(p, old_deg, new_deg, Degree{1});
}

GradedQP bigraded_tilde_qp(const AlgebraPresentation& p, int cutoff)
{
    DerivedCategory d(build_algebra(p, cutoff));
    require_gldim2(d);
    check_minimal(p, d);
    auto deg = p.arrow_degrees();
    if (deg.empty() || deg.front().size() != 1)
        throw InputError("bigraded tilde needs a Z-grading on the arrows");
    std::vector<Degree> old_deg, new_deg;
    for (const auto& x : deg)
        old_deg.push_back({0, x[0]});
    for (const auto& r : p.relations)
        new_deg.push_back({1, 1 - relation_degree(p, r)[0]});
    return build_tilde(p, old_deg, new_deg, Degree{1, 1});
}

CoboundaryResult coboundary_solve(const Quiver& q, const std::vector<Degree>& delta)
{
    int n = q.num_vertices();
    size_t k = delta.empty() ? 1 : delta.front().size();
    std::vector<Degree> r(n, zero_degree(k));
    std::vector<int> parent(n, -1), parent_arrow(n, -1), depth(n, -1);
    std::vector<char> tree(q.num_arrows(), 0);
    for (int root = 0; root < n; ++root) {
        if (depth[root] >= 0)
            continue;
        depth[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            auto visit = [&](int a, int w, bool forward) {
                if (depth[w] >= 0)
                    return;
                depth[w] = depth[v] + 1;
                parent[w] = v;
                parent_arrow[w] = a;
                tree[a] = 1;
                r[w] = forward ? r[v] + delta[a] : r[v] - delta[a];
                queue.push_back(w);
            };
            for (int a : q.arrows_from(v))
                visit(a, q.target(a), true);
            for (int a : q.arrows_to(v))
                visit(a, q.source(a), false);
        }
    }
    CoboundaryResult out;
    for (int a = 0; a < q.num_arrows(); ++a) {
        int s = q.source(a), t = q.target(a);
        if (r[t] - r[s] == delta[a])
            continue;
        // a from s to t, then the tree path from t back to s
        WitnessCycle cyc{{a, 1}};
        std::vector<std::pair<int, int>> down;
        int x = t, y = s;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                int b = parent_arrow[x];
                cyc.push_back({b, q.source(b) == x ? 1 : -1});
                x = parent[x];
            }
            else {
                int b = parent_arrow[y];
                down.push_back({b, q.source(b) == parent[y] ? 1 : -1});
                y = parent[y];
            }
        }
        cyc.insert(cyc.end(), down.rbegin(), down.rend());
        out.witness = std::move(cyc);
        return out;
    }
    out.shift = std::move(r);
    return out;
}

bool scalars_match(const Quiver& q, const std::vector<Path>& cycles, const std::vector<Rational>& c1,
                   const std::vector<Rational>& c2)
{
    int m = q.num_arrows();
    std::vector<Rational> ratio;
    std::vector<mpz_class> atoms;
    for (size_t i = 0; i < cycles.size(); ++i) {
        if (c1[i] == 0 || c2[i] == 0)
            return false;
        Rational x = c2[i] / c1[i];
        ratio.push_back(x);
        refine(atoms, abs(x.get_num()));
        refine(atoms, x.get_den());
    }
    std::vector<SparseVec> rows;
    std::vector<std::vector<char>> rows2;
    std::vector<char> sign;
    for (size_t i = 0; i < cycles.size(); ++i) {
        std::map<int, long> mult;
        for (int a : cycles[i].arrows)
            ++mult[a];
        SparseVec row;
        std::vector<char> row2(m, 0);
        for (const auto& [a, e] : mult) {
            row.emplace_back(a, Rational(e));
            row2[a] = (char)(e % 2);
        }
        rows.push_back(row);
        rows2.push_back(row2);
        sign.push_back(ratio[i] < 0);
    }
    if (!gf2_solvable(rows2, sign, m))
        return false;
    for (const auto& atom : atoms) {
        std::vector<Rational> rhs;
        for (const auto& x : ratio)
            rhs.push_back(Rational(valuation(abs(x.get_num()), atom) - valuation(x.get_den(), atom)));
        if (!solve(rows, m, rhs))
            return false;
    }
    return true;
}

bool potentials_match(const GradedQP& qp1, const GradedQP& qp2, const QuiverIso& s)
{
    Potential w = transport(qp1.potential, s, qp2.quiver);
    if (w.cycles.size() != qp2.potential.cycles.size())
        return false;
    std::vector<Path> cycles;
    std::vector<Rational> c1, c2;
    for (const auto& [cyc, c] : w.cycles) {
        auto it = qp2.potential.cycles.find(cyc);
        if (it == qp2.potential.cycles.end())
            return false;
        cycles.push_back(cyc);
        c1.push_back(c);
        c2.push_back(it->second);
    }
    return scalars_match(qp2.quiver, cycles, c1, c2);
}

EquivalenceCertificate graded_equivalent(const GradedQP& qp1, const GradedQP& qp2)
{
    if (qp1.grading_rank() != qp2.grading_rank())
        throw InputError("gradings have different ranks");
    EquivalenceCertificate cert;
    for_each_isomorphism(qp1.quiver, qp2.quiver, [&](const QuiverIso& s) {
        if (!potentials_match(qp1, qp2, s))
            return true;
        cert.isomorphic = true;
        std::vector<Degree> delta;
        for (int a = 0; a < qp1.quiver.num_arrows(); ++a)
            delta.push_back(qp2.degree[s.arrow_map[a]] - qp1.degree[a]);
        auto res = coboundary_solve(qp1.quiver, delta);
        cert.sigma = s;
        if (res.shift) {
            cert.equivalent = true;
            cert.shift = *res.shift;
            cert.witness.clear();
            return false;
        }
        cert.witness = res.witness;
        return true;
    });
    return cert;
}

DerivedVerdict derived_equivalence_check(const AlgebraPresentation& p1, const AlgebraPresentation& p2, int cutoff,
                                         int window)
{
    return derived_equivalence_via_mutation(p1, p2, {}, Side::Left, cutoff, window);
}

DerivedVerdict derived_equivalence_via_mutation(const AlgebraPresentation& p1, const AlgebraPresentation& p2,
                                                const std::vector<std::string>& sequence, Side side, int cutoff,
                                                int window)
{
    Prepared a = prepare(p1, cutoff, window);
    Prepared b = prepare(p2, cutoff, window);
    DerivedVerdict v;
    auto mutated = mutate_sequence(a.tilde, sequence, side, cutoff);
    v.left = std::move(mutated.qp);
    v.log = std::move(mutated.log);
    v.right = std::move(b.tilde);
    v.cert = graded_equivalent(v.left, v.right);
    if (!v.cert.isomorphic)
        throw MathError("tilde_not_isomorphic",
                        "no quiver isomorphism carries one potential onto the other up to scalars");
    return v;
}

CrossCheck cross_engine(DerivedCategory& d, const GradedQP& tilde, int window, int cutoff)
{
    CrossCheck out;
    TildeAlgebra t(d, window);
    out.derived = t.dims();
    out.jacobian = first_component(graded_dimension_vector(jacobian_algebra(tilde, cutoff)));
    return out;
}

CompatibilityCertificate compatibility_check(const AlgebraPresentation& p1, const AlgebraPresentation& p2,
                                             const std::vector<std::string>& sequence, int cutoff, int window,
                                             int search_bound)
{
    CompatibilityCertificate cert;
    cert.sequence = sequence;
    Prepared a = prepare(p1, cutoff, window);
    Prepared b = prepare(p2, cutoff, window);
    auto fail = [&](int n, std::string detail) {
        cert.failed_condition = n;
        cert.detail = std::move(detail);
        return cert;
    };

    auto c1 = cross_engine(*a.d, a.tilde, a.window, cutoff);
    if (!c1.agree())
        return fail(1, "graded dimensions of the first tilde QP and the first tilde algebra differ");

    try {
        auto m = mutate_sequence(a.tilde, sequence, Side::Left, cutoff);
        cert.mutated = std::move(m.qp);
        cert.log = std::move(m.log);
    }
    catch (const MathError& e) {
        if (e.reason() != "not_mutable")
            throw;
        return fail(2, e.what());
    }

    auto sigma = find_matching_iso(cert.mutated, b.tilde, [](const QuiverIso&) { return true; });
    if (!sigma)
        return fail(3, "mutated QP is not isomorphic to the second tilde QP");
    cert.sigma = *sigma;

    int m = cert.mutated.quiver.num_arrows();
    for (int x = 0; x < m; ++x)
        cert.d2.push_back(b.tilde.degree[sigma->arrow_map[x]]);
    auto realizes = [&](const std::vector<Degree>& d) {
        GradedQP g = with_degrees(cert.mutated, d, Degree{1});
        return g.is_homogeneous() && cross_engine(*b.d, g, b.window, cutoff).agree();
    };
    if (!realizes(cert.d2)) {
        auto found = search_grading(cert.mutated, search_bound, realizes);
        if (!found)
            return fail(4, "no grading with degrees in [-" + std::to_string(search_bound) + ", " +
                               std::to_string(search_bound) + "] realizes the second tilde algebra");
        cert.d2 = std::move(*found);
    }

    std::vector<Degree> bi;
    for (int x = 0; x < m; ++x)
        bi.push_back({cert.mutated.degree[x][0], cert.d2[x][0]});
    cert.bigraded = with_degrees(cert.mutated, bi, Degree{1, 1});
    for (int x = 0; x < m; ++x)
        if (cert.d2[x][0] == 0)
            cert.grading2[b.tilde.quiver.arrow_name(sigma->arrow_map[x])] = bi[x][0];

    std::vector<std::string> rev(sequence.rbegin(), sequence.rend());
    cert.back = mutate_sequence(cert.bigraded, rev, Side::Right, cutoff).qp;
    auto first_matches = [&](const QuiverIso& s) {
        for (int x = 0; x < cert.back.quiver.num_arrows(); ++x)
            if (cert.back.degree[x][0] != a.tilde.degree[s.arrow_map[x]][0])
                return false;
        return true;
    };
    auto back = find_matching_iso(cert.back, a.tilde, first_matches);
    if (!back)
        back = find_matching_iso(cert.back, a.tilde, [](const QuiverIso&) { return true; });
    if (!back)
        throw std::logic_error("right mutation did not return to the first tilde QP");
    cert.back_sigma = *back;
    for (int x = 0; x < cert.back.quiver.num_arrows(); ++x) {
        int y = back->arrow_map[x];
        if (a.tilde.degree[y][0] == 0)
            cert.grading1[a.tilde.quiver.arrow_name(y)] = cert.back.degree[x][1];
    }
    cert.compatible = true;
    return cert;
}

SliceTester::SliceTester(DerivedCategory& d, const GradedQP& tilde, int stop)
    : d_(&d), tilde_(&tilde), n_(d.num_vertices()), max_r_(stop + 2)
{
}

int SliceTester::hom_shifted(int i, long a, int j, long b, int m)
{
    long base = std::min(a, b);
    a -= base;
    b -= base;
    auto key = std::make_tuple(i, a, j, b, m);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    const ProjComplex& x = d_->power(i, (int)a);
    const ProjComplex& y = d_->power(j, (int)b);
    int dim = HomSpace(d_->algebra(), x, y, m).dim();
    cache_[key] = dim;
    return dim;
}

SliceCheck SliceTester::check(const std::vector<long>& d)
{
    SliceCheck out;
    const Quiver& q = tilde_->quiver;
    for (int x = 0; x < q.num_arrows(); ++x) {
        int i = q.source(x), j = q.target(x);
        long e = tilde_->degree[x][0] + d[i] - d[j];
        if (e != 0 && e != 1) {
            out.slice = false;
            out.condition = "4a";
            out.i = i;
            out.j = j;
            return out;
        }
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (long r = 0; r <= max_r_; ++r) {
                if (hom_shifted(i, 0, j, r, -1) == 0)
                    continue;
                if (r == max_r_)
                    throw MathError("window", "Hom(P_i, S^-r P_j [-1]) is nonzero at the window edge r = " +
                                                  std::to_string(r));
                if (!(d[j] - d[i] < r)) {
                    out.slice = false;
                    out.condition = "4b";
                    out.i = i;
                    out.j = j;
                    out.r = r;
                    return out;
                }
            }
    return out;
}

std::vector<std::vector<long>> SliceTester::enumerate(long bound)
{
    std::vector<std::vector<long>> out;
    std::vector<long> d(n_, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == n_) {
            if (*std::min_element(d.begin(), d.end()) == 0 && check(d).slice)
                out.push_back(d);
            return;
        }
        for (long v = 0; v <= bound; ++v) {
            d[k] = v;
            // prune on (4a) for arrows between assigned vertices
            bool ok = true;
            const Quiver& q = tilde_->quiver;
            for (int x = 0; x < q.num_arrows() && ok; ++x) {
                int i = q.source(x), j = q.target(x);
                if (i > k || j > k)
                    continue;
                long e = tilde_->degree[x][0] + d[i] - d[j];
                ok = e == 0 || e == 1;
            }
            if (ok)
                rec(k + 1);
        }
        d[k] = 0;
    };
    if (n_ > 0)
        rec(0);
    return out;
}

bool SliceTester::check_2apr(const std::vector<int>& r)
{
    std::vector<long> s(n_, 0), t(n_, 1);
    for (int i : r)
        t[i] = 0;
    return check_2apr_pair(s, t);
}

bool SliceTester::check_2apr_pair(const std::vector<long>& s, const std::vector<long>& t)
{
    for (int i = 0; i < n_; ++i)
        if (t[i] < s[i] || t[i] > s[i] + 1)
            throw InputError("check_2apr_pair needs s <= t <= s + 1");
    for (int i = 0; i < n_; ++i) {
        if (t[i] != s[i])
            continue;
        for (int j = 0; j < n_; ++j) {
            if (t[j] != s[j] + 1)
                continue;
            if (hom_shifted(i, s[i], j, s[j], 0) != 0 || hom_shifted(i, s[i], j, s[j] + 1, -1) != 0)
                return false;
        }
    }
    return true;
}

std::vector<long> canonical_slice(std::vector<long> d)
{
    if (d.empty())
        return d;
    long m = *std::min_element(d.begin(), d.end());
    for (auto& x : d)
        x -= m;
    return d;
}

std::pair<std::vector<long>, std::vector<long>> slice_min_max(SliceTester& t, const std::vector<long>& d1,
                                                              const std::vector<long>& d2)
{
    if (d1.size() != d2.size())
        throw InputError("slice vectors have different lengths");
    if (!t.check(d1).slice || !t.check(d2).slice)
        throw MathError("not_slice", "slice_min_max needs two slices");
    std::vector<long> lo(d1.size()), hi(d1.size());
    for (size_t i = 0; i < d1.size(); ++i) {
        lo[i] = std::min(d1[i], d2[i]);
        hi[i] = std::max(d1[i], d2[i]);
    }
    if (!t.check(lo).slice || !t.check(hi).slice)
        throw std::logic_error("min or max of two slices is not a slice");
    return {lo, hi};
}

}  // namespace gqp

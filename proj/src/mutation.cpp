/* mutation.cpp */
#include "gqp/mutation.hpp"

#include "gqp/jacobian.hpp"

#include <algorithm>
#include <set>

namespace gqp {

Side parse_side(const std::string& s)
{
    if (s == "L" || s == "l" || s == "left" || s == "Left")
        return Side::Left;
    if (s == "R" || s == "r" || s == "right" || s == "Right")
        return Side::Right;
    throw InputError("side must be L or R, got " + s);
}

std::string side_name(Side s)
{
    return s == Side::Left ? "L" : "R";
}

bool check_mutable(const GradedQP& qp, const std::string& v)
{
    const Quiver& q = qp.quiver;
    int i = q.vertex(v);
    if (q.count_arrows(i, i) > 0)
        return false;
    for (int u = 0; u < q.num_vertices(); ++u)
        if (u != i && q.count_arrows(i, u) > 0 && q.count_arrows(u, i) > 0)
            return false;
    return true;
}

namespace {

std::string star(const std::string& n)
{
    if (!n.empty() && n.back() == '*')
        return n.substr(0, n.size() - 1);
    return n + "*";
}

std::string fresh_name(std::string n, const std::set<std::string>& taken)
{
    while (taken.count(n))
        n += "'";
    return n;
}

/* Rebuild a QP on a subset of arrows, keeping declared order. */
GradedQP restrict_arrows(const GradedQP& qp, const std::vector<char>& keep)
{
    const Quiver& q = qp.quiver;
    std::vector<Arrow> arrows;
    std::vector<Degree> deg;
    std::vector<int> remap(q.num_arrows(), -1);
    for (int a = 0; a < q.num_arrows(); ++a)
        if (keep[a]) {
            remap[a] = (int)arrows.size();
            arrows.push_back(q.arrows()[a]);
            deg.push_back(qp.degree[a]);
        }
    Quiver nq(q.vertices(), arrows);
    Potential w;
    for (const auto& [cyc, c] : qp.potential.cycles) {
        std::vector<int> ar;
        for (int a : cyc.arrows) {
            if (remap[a] < 0)
                throw std::logic_error("restrict_arrows: potential uses a removed arrow");
            ar.push_back(remap[a]);
        }
        add_cycle(nq, w, make_path(nq, ar), c);
    }
    return GradedQP{nq, w, deg, qp.target_degree};
}

}  // namespace

GradedQP premutate(const GradedQP& qp, const std::string& v, Side side, MutationStep* log)
{
    if (!check_mutable(qp, v))
        throw MathError("not_mutable", "vertex " + v + " has a loop or lies on a 2-cycle");
    const Quiver& q = qp.quiver;
    int i = q.vertex(v);
    const std::vector<int>& in = q.arrows_to(i);
    const std::vector<int>& out = q.arrows_from(i);
    const Degree& r = qp.target_degree;

    std::vector<Arrow> arrows;
    std::vector<Degree> deg;
    std::set<std::string> taken;
    for (const auto& a : q.arrows())
        taken.insert(a.name);
    MutationStep step;
    step.vertex = v;
    step.side = side;

    std::set<std::string> new_taken;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows()[a];
        if (q.target(a) == i) {
            std::string n = fresh_name(star(ar.name), new_taken);
            arrows.push_back({n, ar.target, ar.source});
            deg.push_back(side == Side::Left ? -qp.degree[a] + r : -qp.degree[a]);
            step.reversed.emplace_back(ar.name, n);
        }
        else if (q.source(a) == i) {
            std::string n = fresh_name(star(ar.name), new_taken);
            arrows.push_back({n, ar.target, ar.source});
            deg.push_back(side == Side::Left ? -qp.degree[a] : -qp.degree[a] + r);
            step.reversed.emplace_back(ar.name, n);
        }
        else {
            arrows.push_back(ar);
            deg.push_back(qp.degree[a]);
        }
        new_taken.insert(arrows.back().name);
    }
    // composite arrows [b a] for a into i and b out of i
    std::map<std::pair<int, int>, int> composite;
    for (int a : in)
        for (int b : out) {
            std::string n = fresh_name("[" + q.arrow_name(b) + " " + q.arrow_name(a) + "]", new_taken);
            new_taken.insert(n);
            composite[{a, b}] = (int)arrows.size();
            arrows.push_back({n, q.vertex_name(q.source(a)), q.vertex_name(q.target(b))});
            deg.push_back(qp.degree[b] + qp.degree[a]);
            step.created.push_back(n);
        }
    Quiver nq(q.vertices(), arrows);

    Potential w;
    for (const auto& [cyc, c] : qp.potential.cycles) {
        size_t m = cyc.arrows.size();
        size_t start = 0;
        while (start < m && q.source(cyc.arrows[start]) == i)
            ++start;
        std::vector<int> rot;
        for (size_t k = 0; k < m; ++k)
            rot.push_back(cyc.arrows[(start + k) % m]);
        std::vector<int> mapped;
        for (size_t k = 0; k < m; ++k) {
            if (q.target(rot[k]) == i) {
                mapped.push_back(composite.at({rot[k], rot[k + 1]}));
                ++k;
            }
            else
                mapped.push_back(rot[k]);
        }
        add_cycle(nq, w, make_path(nq, mapped), c);
    }
    for (int a : in)
        for (int b : out)
            add_cycle(nq, w, make_path(nq, std::vector<int>{composite.at({a, b}), b, a}), 1);

    if (log)
        *log = step;
    return GradedQP{nq, w, deg, r};
}

Potential substitute(const Quiver& q, const Potential& w, int z, const PathElement& e, int cutoff)
{
    Potential out;
    for (const auto& [cyc, c] : w.cycles) {
        // expand the product over occurrences of z
        std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, c}};
        for (int a : cyc.arrows) {
            std::vector<std::pair<std::vector<int>, Rational>> next;
            for (auto& [word, coef] : partial) {
                std::vector<int> keep = word;
                keep.push_back(a);
                if ((int)keep.size() <= cutoff)
                    next.emplace_back(std::move(keep), coef);
                if (a != z)
                    continue;
                for (const auto& [p, pc] : e) {
                    std::vector<int> ext = word;
                    ext.insert(ext.end(), p.arrows.begin(), p.arrows.end());
                    if ((int)ext.size() <= cutoff)
                        next.emplace_back(std::move(ext), coef * pc);
                }
            }
            partial = std::move(next);
        }
        for (auto& [word, coef] : partial)
            if (!word.empty())
                add_cycle(q, out, make_path(q, word), coef);
    }
    return out;
}

namespace {

bool mentions(const Path& p, int x)
{
    return std::find(p.arrows.begin(), p.arrows.end(), x) != p.arrows.end();
}

}  // namespace

GradedQP reduce(const GradedQP& input, int cutoff, MutationStep* log)
{
    GradedQP qp = input;
    if (cutoff < 0)
        cutoff = default_cutoff(qp.quiver);
    while (true) {
        const Quiver& q = qp.quiver;
        const Path* quad = nullptr;
        for (const auto& [cyc, c] : qp.potential.cycles)
            if (cyc.length() == 2 && cyc.arrows[0] != cyc.arrows[1]) {
                quad = &cyc;
                break;
            }
        if (!quad)
            break;
        Path pair = *quad;
        int x = pair.arrows[0], y = pair.arrows[1];
        Rational c = qp.potential.cycles.at(pair);
        Potential& w = qp.potential;

        auto others = [&](int arrow) {
            std::vector<std::pair<Path, Rational>> out;
            for (const auto& [cyc, k] : w.cycles)
                if (!(cyc == pair) && mentions(cyc, arrow))
                    out.emplace_back(cyc, k);
            return out;
        };
        bool done = false;
        for (int iter = 0; iter < 2 * cutoff + 8; ++iter) {
            auto with_x = others(x);
            auto with_y = others(y);
            if (with_x.empty() && with_y.empty()) {
                done = true;
                break;
            }
            if (!with_x.empty()) {
                // W = c x y + x F + (terms without x): y -> y - F/c
                PathElement f;
                for (const auto& [cyc, k] : with_x) {
                    size_t m = cyc.arrows.size(), pos = 0;
                    while (cyc.arrows[pos] != x)
                        ++pos;
                    std::vector<int> rest;
                    for (size_t t = 1; t < m; ++t)
                        rest.push_back(cyc.arrows[(pos + t) % m]);
                    add_term(f, make_path(q, rest, q.target(x)), -k / c);
                }
                w = substitute(q, w, y, f, cutoff);
                continue;
            }
            // W = c x y + G y + (terms without y): x -> x - G/c
            PathElement g;
            for (const auto& [cyc, k] : with_y) {
                size_t m = cyc.arrows.size(), pos = 0;
                while (cyc.arrows[pos] != y)
                    ++pos;
                std::vector<int> before;
                for (size_t t = 1; t < m; ++t)
                    before.push_back(cyc.arrows[(pos + t) % m]);
                add_term(g, make_path(q, before, q.target(y)), -k / c);
            }
            w = substitute(q, w, x, g, cutoff);
        }
        if (!done)
            throw MathError("reduction_diverged",
                            "trivial pair elimination did not stabilise below length " + std::to_string(cutoff));
        if (w.cycles.at(pair) != c)
            throw std::logic_error("reduce: quadratic coefficient changed");
        w.cycles.erase(pair);
        if (log)
            log->removed.emplace_back(q.arrow_name(x), q.arrow_name(y));
        std::vector<char> keep(q.num_arrows(), 1);
        keep[x] = keep[y] = 0;
        qp = restrict_arrows(qp, keep);
    }
    return qp;
}

GradedQP mutate(const GradedQP& qp, const std::string& v, Side side, int cutoff, MutationStep* log)
{
    MutationStep step;
    GradedQP pre = premutate(qp, v, side, &step);
    GradedQP out = reduce(pre, cutoff, &step);
    if (qp.is_homogeneous() && !out.is_homogeneous())
        throw std::logic_error("mutation broke homogeneity");
    if (log)
        *log = step;
    return out;
}

MutationResult mutate_sequence(const GradedQP& qp, const std::vector<std::pair<std::string, Side>>& steps,
                               int cutoff)
{
    MutationResult res{qp, {}};
    for (size_t j = 0; j < steps.size(); ++j) {
        if (!check_mutable(res.qp, steps[j].first))
            throw MathError("not_mutable", "step " + std::to_string(j) + ": vertex " + steps[j].first +
                                               " has a loop or lies on a 2-cycle");
        MutationStep step;
        res.qp = mutate(res.qp, steps[j].first, steps[j].second, cutoff, &step);
        res.log.push_back(std::move(step));
    }
    return res;
}

MutationResult mutate_sequence(const GradedQP& qp, const std::vector<std::string>& vertices, Side side, int cutoff)
{
    std::vector<std::pair<std::string, Side>> steps;
    for (const auto& v : vertices)
        steps.emplace_back(v, side);
    return mutate_sequence(qp, steps, cutoff);
}

}  // namespace gqp

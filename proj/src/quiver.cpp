/* quiver.cpp */
#include "gqp/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace gqp {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows))
{
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (!vidx_.emplace(vertices_[i], (int)i).second)
            throw InputError("duplicate vertex id: " + vertices_[i]);
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (size_t a = 0; a < arrows_.size(); ++a) {
        const Arrow& ar = arrows_[a];
        if (!aidx_.emplace(ar.name, (int)a).second)
            throw InputError("duplicate arrow name: " + ar.name);
        auto s = find_vertex(ar.source), t = find_vertex(ar.target);
        if (!s || !t)
            throw InputError("arrow " + ar.name + " has an undeclared endpoint");
        src_.push_back(*s);
        tgt_.push_back(*t);
        out_[*s].push_back((int)a);
        in_[*t].push_back((int)a);
    }
}

std::optional<int> Quiver::find_vertex(const std::string& name) const
{
    auto it = vidx_.find(name);
    if (it == vidx_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& name) const
{
    auto it = aidx_.find(name);
    if (it == aidx_.end())
        return std::nullopt;
    return it->second;
}

int Quiver::vertex(const std::string& name) const
{
    auto v = find_vertex(name);
    if (!v)
        throw InputError("unknown vertex: " + name);
    return *v;
}

int Quiver::arrow(const std::string& name) const
{
    auto a = find_arrow(name);
    if (!a)
        throw InputError("unknown arrow: " + name);
    return *a;
}

int Quiver::count_arrows(int u, int v) const
{
    int n = 0;
    for (int a : out_[u])
        if (tgt_[a] == v)
            ++n;
    return n;
}

bool Quiver::operator==(const Quiver& o) const
{
    if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size())
        return false;
    for (size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].name != o.arrows_[a].name || src_[a] != o.src_[a] || tgt_[a] != o.tgt_[a])
            return false;
    return true;
}

bool Path::operator<(const Path& o) const
{
    if (arrows.size() != o.arrows.size())
        return arrows.size() < o.arrows.size();
    if (arrows.empty())
        return src < o.src;
    return arrows < o.arrows;
}

Path lazy_path(int v)
{
    return Path{v, v, {}};
}

Path arrow_path(const Quiver& q, int a)
{
    return Path{q.source(a), q.target(a), {a}};
}

Path make_path(const Quiver& q, const std::vector<int>& arrows, int vertex)
{
    if (arrows.empty()) {
        if (vertex < 0 || vertex >= q.num_vertices())
            throw InputError("lazy path needs a vertex");
        return lazy_path(vertex);
    }
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.target(arrows[i]) != q.source(arrows[i + 1]))
            throw InputError("non-composable path at " + q.arrow_name(arrows[i]) + ", " +
                             q.arrow_name(arrows[i + 1]));
    return Path{q.source(arrows.front()), q.target(arrows.back()), arrows};
}

Path make_path(const Quiver& q, const std::vector<std::string>& names)
{
    std::vector<int> idx;
    for (const auto& n : names)
        idx.push_back(q.arrow(n));
    return make_path(q, idx);
}

std::optional<Path> concat(const Path& p, const Path& q)
{
    if (p.tgt != q.src)
        return std::nullopt;
    Path r{p.src, q.tgt, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::vector<std::string> arrow_names(const Quiver& q, const Path& p)
{
    std::vector<std::string> out;
    for (int a : p.arrows)
        out.push_back(q.arrow_name(a));
    return out;
}

std::string format_path(const Quiver& q, const Path& p)
{
    if (p.lazy())
        return "e" + q.vertex_name(p.src);
    std::string s = "[";
    for (size_t i = 0; i < p.arrows.size(); ++i)
        s += (i ? "," : "") + q.arrow_name(p.arrows[i]);
    return s + "]";
}

void add_term(PathElement& x, const Path& p, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = x.emplace(p, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            x.erase(it);
    }
}

void add_to(PathElement& x, const PathElement& y, const Rational& c)
{
    for (const auto& [p, v] : y)
        add_term(x, p, c * v);
}

PathElement multiply(const PathElement& x, const PathElement& y)
{
    PathElement out;
    for (const auto& [p, a] : x)
        for (const auto& [q, b] : y)
            if (auto r = concat(p, q))
                add_term(out, *r, a * b);
    return out;
}

PathElement element(const Path& p, const Rational& c)
{
    PathElement x;
    add_term(x, p, c);
    return x;
}

std::string format_element(const Quiver& q, const PathElement& x)
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = x.begin(); it != x.end(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        if (it->second != 1)
            os << to_string(it->second) << "*";
        os << format_path(q, it->first);
    }
    return os.str();
}

Path cyclic_rotation_normal(const Quiver& q, const Path& cycle)
{
    size_t m = cycle.arrows.size();
    if (m == 0)
        return cycle;
    size_t best = 0;
    for (size_t k = 1; k < m; ++k) {
        for (size_t i = 0; i < m; ++i) {
            int x = cycle.arrows[(k + i) % m], y = cycle.arrows[(best + i) % m];
            if (x != y) {
                if (x < y)
                    best = k;
                break;
            }
        }
    }
    Path r;
    r.arrows.reserve(m);
    for (size_t i = 0; i < m; ++i)
        r.arrows.push_back(cycle.arrows[(best + i) % m]);
    r.src = r.tgt = q.source(r.arrows.front());
    return r;
}

void add_cycle(const Quiver& q, Potential& w, const Path& cycle, const Rational& c)
{
    if (c == 0)
        return;
    if (cycle.lazy() || cycle.src != cycle.tgt)
        throw InputError("potential term is not a closed cycle");
    Path n = cyclic_rotation_normal(q, cycle);
    auto [it, fresh] = w.cycles.emplace(n, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            w.cycles.erase(it);
    }
}

Potential cyclic_normal_form(const Quiver& q, const std::vector<RawCycle>& raw)
{
    Potential w;
    for (const auto& rc : raw) {
        if (rc.arrows.empty())
            throw InputError("empty cycle in potential");
        Path p = make_path(q, rc.arrows);
        if (p.src != p.tgt)
            throw InputError("potential term " + format_path(q, p) + " is not closed");
        add_cycle(q, w, p, rc.coeff);
    }
    return w;
}

PathElement cyclic_derivative(const Quiver& q, const Potential& w, int arrow)
{
    if (arrow < 0 || arrow >= q.num_arrows())
        throw InputError("unknown arrow index in cyclic derivative");
    PathElement out;
    for (const auto& [cyc, c] : w.cycles) {
        size_t m = cyc.arrows.size();
        for (size_t k = 0; k < m; ++k) {
            if (cyc.arrows[k] != arrow)
                continue;
            std::vector<int> rest;
            for (size_t i = 1; i < m; ++i)
                rest.push_back(cyc.arrows[(k + i) % m]);
            add_term(out, make_path(q, rest, q.target(arrow)), c);
        }
    }
    return out;
}

Degree operator+(const Degree& a, const Degree& b)
{
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Degree operator-(const Degree& a, const Degree& b)
{
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Degree operator-(const Degree& a)
{
    Degree r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Degree zero_degree(size_t k)
{
    return Degree(k, 0);
}

Degree GradedQP::path_degree(const Path& p) const
{
    Degree d = zero_degree(grading_rank());
    for (int a : p.arrows)
        d = d + degree[a];
    return d;
}

bool GradedQP::is_homogeneous() const
{
    for (const auto& [cyc, c] : potential.cycles)
        if (path_degree(cyc) != target_degree)
            return false;
    return true;
}

void for_each_isomorphism(const Quiver& q1, const Quiver& q2, const std::function<bool(const QuiverIso&)>& f)
{
    int n = q1.num_vertices();
    if (n != q2.num_vertices() || q1.num_arrows() != q2.num_arrows())
        return;
    std::vector<int> vmap(n, -1);
    std::vector<char> used(n, 0);
    bool stop = false;

    // parallel arrow classes of q1, in declared order
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, std::vector<int>> par1, par2;
    for (int a = 0; a < q1.num_arrows(); ++a) {
        auto key = std::make_pair(q1.source(a), q1.target(a));
        if (!par1.count(key))
            pairs.push_back(key);
        par1[key].push_back(a);
    }
    for (int a = 0; a < q2.num_arrows(); ++a)
        par2[{q2.source(a), q2.target(a)}].push_back(a);

    auto arrows_stage = [&]() {
        std::vector<std::vector<int>> perms;
        std::vector<std::vector<int>> targets;
        for (auto& key : pairs) {
            targets.push_back(par2[{vmap[key.first], vmap[key.second]}]);
            std::vector<int> id(targets.back().size());
            for (size_t i = 0; i < id.size(); ++i)
                id[i] = (int)i;
            perms.push_back(id);
        }
        while (true) {
            QuiverIso s{vmap, std::vector<int>(q1.num_arrows(), -1)};
            for (size_t k = 0; k < pairs.size(); ++k) {
                const auto& src = par1[pairs[k]];
                for (size_t i = 0; i < src.size(); ++i)
                    s.arrow_map[src[i]] = targets[k][perms[k][i]];
            }
            if (!f(s)) {
                stop = true;
                return;
            }
            // odometer over the permutation lists, last class fastest
            int k = (int)perms.size() - 1;
            while (k >= 0 && !std::next_permutation(perms[k].begin(), perms[k].end()))
                --k;
            if (k < 0)
                return;
        }
    };

    std::function<void(int)> rec = [&](int u) {
        if (stop)
            return;
        if (u == n) {
            arrows_stage();
            return;
        }
        for (int v = 0; v < n && !stop; ++v) {
            if (used[v])
                continue;
            vmap[u] = v;
            bool ok = q1.count_arrows(u, u) == q2.count_arrows(v, v);
            for (int w = 0; w < u && ok; ++w)
                ok = q1.count_arrows(u, w) == q2.count_arrows(v, vmap[w]) &&
                     q1.count_arrows(w, u) == q2.count_arrows(vmap[w], v);
            if (ok) {
                used[v] = 1;
                rec(u + 1);
                used[v] = 0;
            }
            vmap[u] = -1;
        }
    };
    rec(0);
}

std::vector<QuiverIso> quiver_isomorphisms(const Quiver& q1, const Quiver& q2)
{
    std::vector<QuiverIso> out;
    for_each_isomorphism(q1, q2, [&](const QuiverIso& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

Path transport(const Path& p, const QuiverIso& s)
{
    Path r{s.vertex_map[p.src], s.vertex_map[p.tgt], {}};
    for (int a : p.arrows)
        r.arrows.push_back(s.arrow_map[a]);
    return r;
}

Potential transport(const Potential& w, const QuiverIso& s, const Quiver& target)
{
    Potential out;
    for (const auto& [cyc, c] : w.cycles)
        add_cycle(target, out, transport(cyc, s), c);
    return out;
}

QuiverIso compose(const QuiverIso& first, const QuiverIso& second)
{
    QuiverIso r;
    for (int v : first.vertex_map)
        r.vertex_map.push_back(second.vertex_map[v]);
    for (int a : first.arrow_map)
        r.arrow_map.push_back(second.arrow_map[a]);
    return r;
}

QuiverIso inverse(const QuiverIso& s)
{
    QuiverIso r{std::vector<int>(s.vertex_map.size()), std::vector<int>(s.arrow_map.size())};
    for (size_t v = 0; v < s.vertex_map.size(); ++v)
        r.vertex_map[s.vertex_map[v]] = (int)v;
    for (size_t a = 0; a < s.arrow_map.size(); ++a)
        r.arrow_map[s.arrow_map[a]] = (int)a;
    return r;
}

}  // namespace gqp

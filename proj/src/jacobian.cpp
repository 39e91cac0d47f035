/* jacobian.cpp: Bergman-style completion with a verified normal-word basis */
#include "gqp/jacobian.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gqp {

namespace {

constexpr size_t kMaxNormalWords = 200000;

Path glue(const Quiver& q, const std::vector<int>& u, const Path& mid, const std::vector<int>& v)
{
    std::vector<int> arrows = u;
    arrows.insert(arrows.end(), mid.arrows.begin(), mid.arrows.end());
    arrows.insert(arrows.end(), v.begin(), v.end());
    if (arrows.empty())
        return lazy_path(mid.src);
    return Path{q.source(arrows.front()), q.target(arrows.back()), std::move(arrows)};
}

PathElement wrap(const Quiver& q, const std::vector<int>& u, const PathElement& t, const std::vector<int>& v)
{
    PathElement out;
    for (const auto& [p, c] : t)
        add_term(out, glue(q, u, p, v), c);
    return out;
}

bool contains_word(const std::vector<int>& big, const std::vector<int>& small)
{
    if (small.size() > big.size())
        return false;
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

}  // namespace

size_t ReductionSystem::VecHash::operator()(const std::vector<int>& v) const
{
    size_t h = v.size();
    for (int x : v)
        h = h * 1000003u ^ (size_t)(x + 1);
    return h;
}

ReductionSystem::ReductionSystem(Quiver q, std::vector<Rule> rules, int cutoff)
    : q_(std::move(q)), rules_(std::move(rules)), cutoff_(cutoff)
{
    for (size_t i = 0; i < rules_.size(); ++i) {
        max_lead_ = std::max(max_lead_, rules_[i].lead.length());
        by_lead_.emplace(rules_[i].lead.arrows, (int)i);
    }
}

int ReductionSystem::match_at(const Path& p, size_t pos) const
{
    std::vector<int> key;
    for (size_t len = 1; len <= max_lead_ && pos + len <= p.arrows.size(); ++len) {
        key.push_back(p.arrows[pos + len - 1]);
        auto it = by_lead_.find(key);
        if (it != by_lead_.end())
            return it->second;
    }
    return -1;
}

bool ReductionSystem::is_normal(const Path& p) const
{
    for (size_t pos = 0; pos < p.arrows.size(); ++pos)
        if (match_at(p, pos) >= 0)
            return false;
    return true;
}

PathElement ReductionSystem::normal_form(const PathElement& x, std::mt19937* rng) const
{
    PathElement work = x, result;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Path p = it->first;
        Rational c = it->second;
        work.erase(it);
        std::vector<std::pair<size_t, int>> hits;
        for (size_t pos = 0; pos < p.arrows.size(); ++pos) {
            int r = match_at(p, pos);
            if (r >= 0) {
                hits.emplace_back(pos, r);
                if (!rng)
                    break;
            }
        }
        if (hits.empty()) {
            add_term(result, p, c);
            continue;
        }
        auto [pos, r] = rng ? hits[(*rng)() % hits.size()] : hits.front();
        const Rule& rule = rules_[r];
        std::vector<int> u(p.arrows.begin(), p.arrows.begin() + pos);
        std::vector<int> v(p.arrows.begin() + pos + rule.lead.length(), p.arrows.end());
        for (const auto& [t, tc] : rule.tail)
            add_term(work, glue(q_, u, t, v), c * tc);
    }
    return result;
}

int default_cutoff(const Quiver& q)
{
    return 2 * (q.num_vertices() + q.num_arrows()) + 4;
}

namespace {

class Completion {
public:
    Completion(const Quiver& q, int cutoff) : q_(q), cutoff_(cutoff), cur_(q, {}, cutoff) {}

    void add(const PathElement& elem)
    {
        std::vector<PathElement> pending{elem};
        while (!pending.empty()) {
            PathElement x = cur_.normal_form(pending.back());
            pending.pop_back();
            if (x.empty())
                continue;
            auto top = std::prev(x.end());
            Path lead = top->first;
            if (lead.lazy())
                throw InputError("a relation reduces to a multiple of an idempotent");
            Rational c = top->second;
            x.erase(top);
            PathElement tail;
            add_to(tail, x, -1 / c);

            std::vector<Rule> kept;
            for (auto& r : rules_) {
                if (contains_word(r.lead.arrows, lead.arrows)) {
                    PathElement back = r.tail;
                    add_term(back, r.lead, -1);
                    pending.push_back(std::move(back));
                }
                else
                    kept.push_back(std::move(r));
            }
            kept.push_back(Rule{lead, tail});
            rules_ = std::move(kept);
            cur_ = ReductionSystem(q_, rules_, cutoff_);
            for (auto& r : rules_)
                r.tail = cur_.normal_form(r.tail);
            cur_ = ReductionSystem(q_, rules_, cutoff_);
            queue_overlaps(rules_.back());
        }
    }

    void run()
    {
        while (!queue_.empty()) {
            Amb a = queue_.top();
            queue_.pop();
            add(a.s);
        }
    }

    const ReductionSystem& system() const { return cur_; }
    int deferred() const { return deferred_; }

private:
    struct Amb {
        size_t len;
        long seq;
        PathElement s;
        bool operator<(const Amb& o) const { return len != o.len ? len > o.len : seq > o.seq; }
    };

    void overlap(const Rule& a, const Rule& b)
    {
        const auto& la = a.lead.arrows;
        const auto& lb = b.lead.arrows;
        size_t m = std::min(la.size(), lb.size());
        for (size_t k = 1; k < m; ++k) {
            if (!std::equal(la.end() - k, la.end(), lb.begin()))
                continue;
            size_t len = la.size() + lb.size() - k;
            if ((int)len > cutoff_) {
                ++deferred_;
                continue;
            }
            std::vector<int> rest(lb.begin() + k, lb.end());
            std::vector<int> pre(la.begin(), la.end() - k);
            PathElement s = wrap(q_, {}, a.tail, rest);
            add_to(s, wrap(q_, pre, b.tail, {}), -1);
            queue_.push(Amb{len, seq_++, std::move(s)});
        }
    }

    void queue_overlaps(const Rule& r)
    {
        for (const auto& o : rules_) {
            overlap(r, o);
            if (!(o.lead == r.lead))
                overlap(o, r);
        }
    }

    const Quiver& q_;
    int cutoff_;
    std::vector<Rule> rules_;
    ReductionSystem cur_;
    std::priority_queue<Amb> queue_;
    long seq_ = 0;
    int deferred_ = 0;
};

SparseVec product(const ReductionSystem& rs, const std::map<Path, int>& index, const std::vector<Path>& basis,
                  const SparseVec& x, const SparseVec& y)
{
    PathElement acc;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            if (auto p = concat(basis[i], basis[j]))
                add_term(acc, *p, a * b);
    acc = rs.normal_form(acc);
    SparseVec out;
    for (const auto& [p, c] : acc)
        out.emplace_back(index.at(p), c);
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

/* Soundness check: the normal-form product on the candidate basis is associative and kills the generators. */
bool verify_basis(const ReductionSystem& rs, const std::vector<Path>& basis, const std::vector<PathElement>& gens)
{
    const Quiver& q = rs.quiver();
    std::map<Path, int> index;
    for (size_t i = 0; i < basis.size(); ++i)
        index.emplace(basis[i], (int)i);
    auto to_vec = [&](const PathElement& x, SparseVec& out) {
        out.clear();
        for (const auto& [p, c] : rs.normal_form(x)) {
            auto it = index.find(p);
            if (it == index.end())
                return false;
            out.emplace_back(it->second, c);
        }
        std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
        return true;
    };
    std::vector<SparseVec> arrow_img(q.num_arrows());
    for (int a = 0; a < q.num_arrows(); ++a)
        if (!to_vec(element(arrow_path(q, a)), arrow_img[a]))
            return false;
    std::vector<int> normal_arrows;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (rs.is_normal(arrow_path(q, a)))
            normal_arrows.push_back(a);
    for (size_t x = 0; x < basis.size(); ++x)
        for (size_t y = 0; y < basis.size(); ++y) {
            if (basis[x].tgt != basis[y].src)
                continue;
            SparseVec xy = product(rs, index, basis, unit_vec((int)x), unit_vec((int)y));
            for (int a : normal_arrows) {
                if (q.source(a) != basis[y].tgt)
                    continue;
                SparseVec lhs = product(rs, index, basis, xy, arrow_img[a]);
                SparseVec ya = product(rs, index, basis, unit_vec((int)y), arrow_img[a]);
                SparseVec rhs = product(rs, index, basis, unit_vec((int)x), ya);
                if (lhs != rhs)
                    return false;
            }
        }
    for (const auto& g : gens) {
        SparseVec total;
        for (const auto& [p, c] : g) {
            SparseVec acc = unit_vec(index.at(lazy_path(p.src)));
            for (int a : p.arrows)
                acc = product(rs, index, basis, acc, arrow_img[a]);
            axpy(total, c, acc);
        }
        if (!total.empty())
            return false;
    }
    return true;
}

}  // namespace

CompletionResult complete(const std::vector<PathElement>& generators, const Quiver& q, int cutoff)
{
    if (cutoff < 1)
        throw InputError("completion cutoff must be at least 1");
    for (const auto& g : generators) {
        if (g.empty())
            continue;
        int s = g.begin()->first.src, t = g.begin()->first.tgt;
        for (const auto& [p, c] : g)
            if (p.src != s || p.tgt != t)
                throw InputError("relation " + format_element(q, g) + " mixes endpoints");
    }
    Completion comp(q, cutoff);
    for (const auto& g : generators)
        comp.add(g);
    comp.run();
    const ReductionSystem& rs = comp.system();

    std::vector<Path> words, level;
    for (int v = 0; v < q.num_vertices(); ++v)
        level.push_back(lazy_path(v));
    for (int len = 0; !level.empty(); ++len) {
        if (len >= cutoff)
            return Inconclusive{cutoff, "normal words of length " + std::to_string(len) + " remain"};
        words.insert(words.end(), level.begin(), level.end());
        if (words.size() > kMaxNormalWords)
            return Inconclusive{cutoff, "more than " + std::to_string(kMaxNormalWords) + " normal words"};
        std::vector<Path> next;
        for (const auto& w : level)
            for (int a : q.arrows_from(w.tgt)) {
                Path p = *concat(w, arrow_path(q, a));
                bool ok = true;
                for (size_t pos = 0; pos < p.arrows.size() && ok; ++pos)
                    if (rs.match_at(p, pos) >= 0)
                        ok = false;
                if (ok)
                    next.push_back(std::move(p));
            }
        level = std::move(next);
    }
    std::sort(words.begin(), words.end());
    if (!verify_basis(rs, words, generators))
        return Inconclusive{cutoff, "normal words failed the associativity check"};
    ReductionSystem out = rs;
    out.set_normal_words(std::move(words));
    return out;
}

SparseVec BasisAlgebra::multiply(const SparseVec& x, const SparseVec& y) const
{
    SparseVec out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            axpy(out, a * b, mult[i][j]);
    return out;
}

SparseVec BasisAlgebra::coords(const PathElement& x) const
{
    SparseVec out;
    for (const auto& [p, c] : system->normal_form(x))
        out.emplace_back(index.at(p), c);
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
}

PathElement BasisAlgebra::to_element(const SparseVec& v) const
{
    PathElement x;
    for (const auto& [i, c] : v)
        add_term(x, basis[i], c);
    return x;
}

void BasisAlgebra::finalize()
{
    int n = quiver.num_vertices();
    between_.assign((size_t)n * n, {});
    for (size_t b = 0; b < basis.size(); ++b)
        between_[(size_t)basis[b].src * n + basis[b].tgt].push_back((int)b);
}

BasisAlgebra make_algebra(const ReductionSystem& rs, const std::vector<Degree>& arrow_degrees)
{
    BasisAlgebra alg;
    alg.quiver = rs.quiver();
    alg.system = std::make_shared<ReductionSystem>(rs);
    alg.basis = rs.normal_words();
    for (size_t i = 0; i < alg.basis.size(); ++i)
        alg.index.emplace(alg.basis[i], (int)i);
    size_t k = arrow_degrees.empty() ? 1 : arrow_degrees.front().size();
    for (const auto& p : alg.basis) {
        Degree d = zero_degree(k);
        if (!arrow_degrees.empty())
            for (int a : p.arrows)
                d = d + arrow_degrees[a];
        alg.degrees.push_back(d);
    }
    for (int a = 0; a < alg.quiver.num_arrows(); ++a)
        alg.arrow_degrees.push_back(arrow_degrees.empty() ? zero_degree(k) : arrow_degrees[a]);
    alg.idempotents.resize(alg.quiver.num_vertices());
    for (int v = 0; v < alg.quiver.num_vertices(); ++v)
        alg.idempotents[v] = alg.index.at(lazy_path(v));
    size_t n = alg.basis.size();
    alg.mult.assign(n, std::vector<SparseVec>(n));
    for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y)
            if (auto p = concat(alg.basis[x], alg.basis[y]))
                alg.mult[x][y] = alg.coords(element(*p));
    alg.finalize();
    return alg;
}

BasisAlgebra quotient_algebra(const Quiver& q, const std::vector<PathElement>& relations,
                              const std::vector<Degree>& arrow_degrees, int cutoff)
{
    if (cutoff < 0)
        cutoff = default_cutoff(q);
    auto res = complete(relations, q, cutoff);
    if (auto* inc = std::get_if<Inconclusive>(&res))
        throw MathError("not_finite_dimensional",
                        "algebra not certified finite-dimensional at cutoff " + std::to_string(inc->cutoff) + ": " +
                            inc->detail);
    return make_algebra(std::get<ReductionSystem>(res), arrow_degrees);
}

std::vector<PathElement> jacobian_relations(const GradedQP& qp)
{
    std::vector<PathElement> out;
    for (int a = 0; a < qp.quiver.num_arrows(); ++a) {
        PathElement d = cyclic_derivative(qp.quiver, qp.potential, a);
        if (!d.empty())
            out.push_back(std::move(d));
    }
    return out;
}

BasisAlgebra jacobian_algebra(const GradedQP& qp, int cutoff)
{
    return quotient_algebra(qp.quiver, jacobian_relations(qp), qp.degree, cutoff);
}

std::map<Degree, int> graded_dimension_vector(const BasisAlgebra& alg)
{
    std::map<Degree, int> out;
    for (const auto& d : alg.degrees)
        ++out[d];
    return out;
}

}  // namespace gqp

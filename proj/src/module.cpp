/* module.cpp */
#include "gqp/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gqp {

LinMap zero_map(int rows, int cols)
{
    return LinMap{rows, std::vector<SparseVec>(cols)};
}

SparseVec apply_map(const LinMap& f, const SparseVec& v)
{
    SparseVec out;
    for (const auto& [k, c] : v)
        axpy(out, c, f.cols[k]);
    return out;
}

LinMap compose(const LinMap& g, const LinMap& f)
{
    LinMap out{g.rows, {}};
    out.cols.reserve(f.cols.size());
    for (const auto& col : f.cols)
        out.cols.push_back(apply_map(g, col));
    return out;
}

LinMap operator+(const LinMap& f, const LinMap& g)
{
    LinMap out = f;
    for (size_t k = 0; k < g.cols.size(); ++k)
        axpy(out.cols[k], 1, g.cols[k]);
    return out;
}

bool is_zero(const LinMap& f)
{
    return std::all_of(f.cols.begin(), f.cols.end(), [](const SparseVec& c) { return c.empty(); });
}

MapMatrix zero_matrix(size_t rows, size_t cols)
{
    return MapMatrix(rows, std::vector<SparseVec>(cols));
}

std::vector<int> Module::indices(const Cell& c) const
{
    std::vector<int> out;
    for (int k = 0; k < dim(); ++k)
        if (cells[k] == c)
            out.push_back(k);
    return out;
}

std::vector<Cell> Module::support() const
{
    std::set<Cell> s(cells.begin(), cells.end());
    return {s.begin(), s.end()};
}

namespace {

/* Rows of f restricted to the given source columns, in local column coordinates. */
std::vector<SparseVec> restricted_rows(const LinMap& f, const std::vector<int>& idx)
{
    std::map<int, SparseVec> rows;
    for (size_t k = 0; k < idx.size(); ++k)
        for (const auto& [r, c] : f.cols[idx[k]])
            rows[r].emplace_back((int)k, c);
    std::vector<SparseVec> out;
    for (auto& [r, v] : rows)
        out.push_back(std::move(v));
    return out;
}

SparseVec lift_local(const SparseVec& v, const std::vector<int>& idx)
{
    SparseVec out;
    for (const auto& [k, c] : v)
        out.emplace_back(idx[k], c);
    return out;
}

Rational dot(const SparseVec& x, const SparseVec& y)
{
    Rational s = 0;
    size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i].first < y[j].first)
            ++i;
        else if (y[j].first < x[i].first)
            ++j;
        else
            s += x[i++].second * y[j++].second;
    }
    return s;
}

/* Stack maps with a common source into the direct sum of their targets. */
LinMap stack(const std::vector<LinMap>& parts, int ncols)
{
    LinMap out = zero_map(0, ncols);
    for (const auto& p : parts) {
        for (int k = 0; k < ncols; ++k)
            for (const auto& [r, c] : p.cols[k])
                out.cols[k].emplace_back(out.rows + r, c);
        out.rows += p.rows;
    }
    return out;
}

}  // namespace

Module direct_sum(const std::vector<Module>& ms, int narrows)
{
    Module out;
    out.act.assign(narrows, LinMap{});
    int total = 0;
    for (const auto& m : ms)
        total += m.dim();
    for (auto& a : out.act)
        a = zero_map(total, 0);
    int off = 0;
    for (const auto& m : ms) {
        out.cells.insert(out.cells.end(), m.cells.begin(), m.cells.end());
        for (int a = 0; a < narrows; ++a)
            for (const auto& col : m.act[a].cols) {
                SparseVec shifted;
                for (const auto& [r, c] : col)
                    shifted.emplace_back(r + off, c);
                out.act[a].cols.push_back(std::move(shifted));
            }
        off += m.dim();
    }
    return out;
}

ModuleKit::ModuleKit(const BasisAlgebra& alg) : alg_(&alg)
{
    const Quiver& q = alg.quiver;
    int n = q.num_vertices(), d = alg.dim();
    for (int a = 0; a < q.num_arrows(); ++a)
        arrow_vec_.push_back(alg.coords(element(arrow_path(q, a))));
    proj_pos_.assign(n, std::vector<int>(d, -1));
    inj_pos_.assign(n, std::vector<int>(d, -1));
    proj_dim_.assign(n, 0);
    inj_dim_.assign(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            for (int x : alg.between(i, j))
                proj_pos_[j][x] = proj_dim_[j]++;
            for (int x : alg.between(j, i))
                inj_pos_[j][x] = inj_dim_[j]++;
        }
}

long ModuleKit::arrow_degree(int a) const
{
    const auto& d = alg_->arrow_degrees;
    return d.empty() || d[a].empty() ? 0 : d[a][0];
}

Module ModuleKit::projective(int j, long k) const
{
    const BasisAlgebra& A = *alg_;
    const Quiver& q = A.quiver;
    Module m;
    m.cells.resize(proj_dim_[j]);
    for (int x = 0; x < A.dim(); ++x)
        if (proj_pos_[j][x] >= 0)
            m.cells[proj_pos_[j][x]] = Cell{A.basis[x].src, k + degree(x)};
    for (int a = 0; a < q.num_arrows(); ++a) {
        LinMap act = zero_map(proj_dim_[j], proj_dim_[j]);
        for (int v : A.between(q.target(a), j)) {
            SparseVec img;
            for (const auto& [y, c] : A.multiply(arrow_vec_[a], unit_vec(v)))
                img.emplace_back(proj_pos_[j][y], c);
            std::sort(img.begin(), img.end(), [](auto& u, auto& w) { return u.first < w.first; });
            act.cols[proj_pos_[j][v]] = img;
        }
        m.act.push_back(std::move(act));
    }
    return m;
}

Module ModuleKit::injective(int j, long k) const
{
    const BasisAlgebra& A = *alg_;
    const Quiver& q = A.quiver;
    Module m;
    m.cells.resize(inj_dim_[j]);
    for (int x = 0; x < A.dim(); ++x)
        if (inj_pos_[j][x] >= 0)
            m.cells[inj_pos_[j][x]] = Cell{A.basis[x].tgt, k - degree(x)};
    for (int a = 0; a < q.num_arrows(); ++a) {
        LinMap act = zero_map(inj_dim_[j], inj_dim_[j]);
        for (int x : A.between(j, q.source(a)))
            for (const auto& [y, c] : A.multiply(unit_vec(x), arrow_vec_[a]))
                axpy(act.cols[inj_pos_[j][y]], c, unit_vec(inj_pos_[j][x]));
        m.act.push_back(std::move(act));
    }
    return m;
}

Module ModuleKit::projective_sum(const std::vector<Cell>& summands) const
{
    std::vector<Module> ms;
    for (const auto& s : summands)
        ms.push_back(projective(s.vertex, s.deg));
    return direct_sum(ms, alg_->quiver.num_arrows());
}

Module ModuleKit::injective_sum(const std::vector<Cell>& summands) const
{
    std::vector<Module> ms;
    for (const auto& s : summands)
        ms.push_back(injective(s.vertex, s.deg));
    return direct_sum(ms, alg_->quiver.num_arrows());
}

Module ModuleKit::simple(int v, long k) const
{
    Module m;
    m.cells = {Cell{v, k}};
    m.act.assign(alg_->quiver.num_arrows(), zero_map(1, 1));
    return m;
}

LinMap ModuleKit::projective_map(const std::vector<Cell>& src, const std::vector<Cell>& tgt, const MapMatrix& m) const
{
    const BasisAlgebra& A = *alg_;
    std::vector<int> soff, toff;
    int srows = 0, trows = 0;
    for (const auto& s : src) {
        soff.push_back(srows);
        srows += proj_dim_[s.vertex];
    }
    for (const auto& t : tgt) {
        toff.push_back(trows);
        trows += proj_dim_[t.vertex];
    }
    LinMap f = zero_map(trows, srows);
    for (size_t c = 0; c < tgt.size(); ++c)
        for (size_t a = 0; a < src.size(); ++a) {
            const SparseVec& u = m[c][a];
            if (u.empty())
                continue;
            int va = src[a].vertex, vc = tgt[c].vertex;
            for (int v = 0; v < A.dim(); ++v) {
                int p = proj_pos_[va][v];
                if (p < 0)
                    continue;
                SparseVec img;
                for (const auto& [y, coef] : A.multiply(unit_vec(v), u))
                    img.emplace_back(toff[c] + proj_pos_[vc][y], coef);
                std::sort(img.begin(), img.end(), [](auto& x, auto& y) { return x.first < y.first; });
                axpy(f.cols[soff[a] + p], 1, img);
            }
        }
    return f;
}

SparseVec ModuleKit::act_path(const Module& m, int x, const SparseVec& v) const
{
    const Path& p = alg_->basis[x];
    if (p.lazy()) {
        SparseVec out;
        for (const auto& [k, c] : v)
            if (m.cells[k].vertex == p.src)
                out.emplace_back(k, c);
        return out;
    }
    SparseVec cur = v;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend() && !cur.empty(); ++it)
        cur = apply_map(m.act[*it], cur);
    return cur;
}

LinMap ModuleKit::into_injective(const Module& m, const Cell& t, const SparseVec& phi) const
{
    const BasisAlgebra& A = *alg_;
    int b = t.vertex;
    LinMap f = zero_map(inj_dim_[b], m.dim());
    if (phi.empty())
        return f;
    for (int k = 0; k < m.dim(); ++k) {
        const Cell& ck = m.cells[k];
        for (int x : A.between(b, ck.vertex)) {
            if (degree(x) != t.deg - ck.deg)
                continue;
            Rational val = dot(phi, act_path(m, x, unit_vec(k)));
            if (val != 0)
                f.cols[k].emplace_back(inj_pos_[b][x], val);
        }
        std::sort(f.cols[k].begin(), f.cols[k].end(), [](auto& x, auto& y) { return x.first < y.first; });
    }
    return f;
}

SparseVec ModuleKit::injective_entry(int a, int b, const SparseVec& phi_block) const
{
    const BasisAlgebra& A = *alg_;
    SparseVec u;
    for (int y : A.between(a, b)) {
        Rational c = coeff(phi_block, inj_pos_[a][y]);
        if (c != 0)
            u.emplace_back(y, c);
    }
    return u;
}

Envelope ModuleKit::envelope(const Module& m) const
{
    Envelope env;
    std::vector<LinMap> parts;
    for (const Cell& c : m.support()) {
        std::vector<int> idx = m.indices(c);
        std::vector<SparseVec> eqs;
        for (const auto& act : m.act)
            for (auto& r : restricted_rows(act, idx))
                eqs.push_back(std::move(r));
        std::vector<SparseVec> soc = kernel_basis(eqs, (int)idx.size());
        for (size_t i = 0; i < soc.size(); ++i) {
            std::vector<Rational> rhs(soc.size(), 0);
            rhs[i] = 1;
            auto phi = solve(soc, (int)idx.size(), rhs);
            if (!phi)
                throw std::logic_error("envelope: socle basis not independent");
            env.summands.push_back(c);
            parts.push_back(into_injective(m, c, lift_local(*phi, idx)));
        }
    }
    env.injective = injective_sum(env.summands);
    env.embed = stack(parts, m.dim());
    return env;
}

Cover ModuleKit::cover(const Module& m) const
{
    const BasisAlgebra& A = *alg_;
    Echelon rad;
    for (const auto& act : m.act)
        for (const auto& col : act.cols)
            if (!col.empty())
                rad.insert(col);
    Cover cov;
    std::vector<int> gens;
    for (const Cell& c : m.support())
        for (int k : m.indices(c))
            if (rad.insert(unit_vec(k)) >= 0) {
                cov.summands.push_back(c);
                gens.push_back(k);
            }
    cov.projective = projective_sum(cov.summands);
    cov.map = zero_map(m.dim(), cov.projective.dim());
    int off = 0;
    for (size_t g = 0; g < gens.size(); ++g) {
        int v = cov.summands[g].vertex;
        for (int x = 0; x < A.dim(); ++x)
            if (proj_pos_[v][x] >= 0)
                cov.map.cols[off + proj_pos_[v][x]] = act_path(m, x, unit_vec(gens[g]));
        off += proj_dim_[v];
    }
    return cov;
}

Quotient ModuleKit::quotient(const Module& m, const std::vector<SparseVec>& gens) const
{
    Echelon ech;
    for (const auto& g : gens)
        if (!g.empty())
            ech.insert(g);
    std::vector<int> pos(m.dim(), -1), keep;
    std::set<int> piv(ech.pivots().begin(), ech.pivots().end());
    for (int k = 0; k < m.dim(); ++k)
        if (!piv.count(k)) {
            pos[k] = (int)keep.size();
            keep.push_back(k);
        }
    int nq = (int)keep.size();
    auto project = [&](const SparseVec& v) {
        SparseVec out;
        for (const auto& [k, c] : ech.reduce(v)) {
            if (pos[k] < 0)
                throw std::logic_error("quotient: residual at a pivot");
            out.emplace_back(pos[k], c);
        }
        return out;
    };
    Quotient qt;
    qt.proj = zero_map(nq, m.dim());
    for (int k = 0; k < m.dim(); ++k)
        qt.proj.cols[k] = project(unit_vec(k));
    qt.section = zero_map(m.dim(), nq);
    for (int i = 0; i < nq; ++i) {
        qt.section.cols[i] = unit_vec(keep[i]);
        qt.module.cells.push_back(m.cells[keep[i]]);
    }
    for (const auto& act : m.act) {
        LinMap a = zero_map(nq, nq);
        for (int i = 0; i < nq; ++i)
            a.cols[i] = project(act.cols[keep[i]]);
        qt.module.act.push_back(std::move(a));
    }
    return qt;
}

Sub ModuleKit::submodule(const Module& m, const std::vector<SparseVec>& basis) const
{
    Echelon ech;
    for (size_t i = 0; i < basis.size(); ++i)
        if (ech.insert(basis[i], unit_vec((int)i)) < 0)
            throw std::logic_error("submodule: dependent basis");
    Sub s;
    s.incl = LinMap{m.dim(), basis};
    for (const auto& v : basis)
        s.module.cells.push_back(m.cells[v.front().first]);
    for (const auto& act : m.act) {
        LinMap a = zero_map((int)basis.size(), (int)basis.size());
        for (size_t i = 0; i < basis.size(); ++i) {
            auto c = ech.express(apply_map(act, basis[i]));
            if (!c)
                throw std::logic_error("submodule: not closed under the action");
            a.cols[i] = *c;
        }
        s.module.act.push_back(std::move(a));
    }
    return s;
}

Sub ModuleKit::kernel(const Module& m, const LinMap& f) const
{
    std::vector<SparseVec> basis;
    for (const Cell& c : m.support()) {
        std::vector<int> idx = m.indices(c);
        for (const auto& v : kernel_basis(restricted_rows(f, idx), (int)idx.size()))
            basis.push_back(lift_local(v, idx));
    }
    return submodule(m, basis);
}

std::vector<std::vector<Cell>> ModuleKit::projective_resolution(const Module& m, int max_terms, bool* complete) const
{
    std::vector<std::vector<Cell>> terms;
    Module cur = m;
    while (cur.dim() > 0 && (int)terms.size() < max_terms) {
        Cover cov = cover(cur);
        terms.push_back(cov.summands);
        cur = kernel(cov.projective, cov.map).module;
    }
    if (complete)
        *complete = cur.dim() == 0;
    return terms;
}

}  // namespace gqp

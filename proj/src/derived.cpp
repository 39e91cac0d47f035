/* derived.cpp */
#include "gqp/derived.hpp"

#include <stdexcept>

namespace gqp {

namespace {

LinMap block_diag(const LinMap& f, const LinMap& g)
{
    LinMap out = zero_map(f.rows + g.rows, f.ncols() + g.ncols());
    for (int k = 0; k < f.ncols(); ++k)
        out.cols[k] = f.cols[k];
    for (int k = 0; k < g.ncols(); ++k)
        for (const auto& [r, c] : g.cols[k])
            out.cols[f.ncols() + k].emplace_back(f.rows + r, c);
    return out;
}

LinMap columns(const LinMap& f, int from, int count)
{
    LinMap out{f.rows, {}};
    out.cols.assign(f.cols.begin() + from, f.cols.begin() + from + count);
    return out;
}

LinMap stack_rows(const std::vector<LinMap>& parts, int ncols)
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

std::vector<int> offsets(const ModuleKit& kit, const std::vector<Cell>& injectives)
{
    std::vector<int> off;
    int s = 0;
    for (const auto& c : injectives) {
        off.push_back(s);
        s += kit.inj_dim(c.vertex);
    }
    return off;
}

}  // namespace

DerivedCategory::DerivedCategory(BasisAlgebra alg)
    : alg_(std::make_unique<BasisAlgebra>(std::move(alg))), kit_(*alg_)
{
    for (int j = 0; j < num_vertices(); ++j)
        stalks_.push_back(stalk(j, 0));
}

std::vector<std::optional<int>> DerivedCategory::projective_dimensions(int bound) const
{
    std::vector<std::optional<int>> out;
    for (int v = 0; v < num_vertices(); ++v) {
        bool complete = false;
        auto terms = kit_.projective_resolution(kit_.simple(v, 0), bound + 1, &complete);
        if (complete)
            out.push_back((int)terms.size() - 1);
        else
            out.push_back(std::nullopt);
    }
    return out;
}

std::optional<int> DerivedCategory::gldim(int bound) const
{
    int g = 0;
    for (const auto& pd : projective_dimensions(bound)) {
        if (!pd)
            return std::nullopt;
        g = std::max(g, *pd);
    }
    return g;
}

std::vector<std::vector<int>> DerivedCategory::ext2() const
{
    int n = num_vertices();
    std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v) {
        auto terms = kit_.projective_resolution(kit_.simple(v, 0), 3);
        if (terms.size() > 2)
            for (const Cell& c : terms[2])
                ++out[v][c.vertex];
    }
    return out;
}

InjectiveResolution DerivedCategory::injective_resolution(const ProjComplex& x) const
{
    InjectiveResolution r;
    r.lo = x.lo;
    int narrows = alg_->quiver.num_arrows();
    const int limit = x.hi() + 2 * num_vertices() + 16;
    for (int n = x.lo;; ++n) {
        if (n > limit)
            throw MathError("gldim", "injective resolution does not terminate; global dimension is infinite");
        const auto& xn = x.term(n);
        Module xmod = kit_.projective_sum(xn);
        int k = n - r.lo;
        Module jprev = k >= 1 ? r.modules[k - 1] : Module{{}, std::vector<LinMap>(narrows, zero_map(0, 0))};
        Module ambient = direct_sum({xmod, jprev}, narrows);
        int xd = xmod.dim(), jd = jprev.dim();

        // image of (x, j) -> (-d x, iota x + d_J j) from the previous degree
        std::vector<SparseVec> gens;
        if (k >= 1) {
            const auto& xp = x.term(n - 1);
            LinMap dx = kit_.projective_map(xp, xn, x.d(n - 1));
            const LinMap& iota = r.iota[k - 1];
            for (int c = 0; c < dx.ncols(); ++c) {
                SparseVec v = gqp::scaled(dx.cols[c], -1);
                for (const auto& [i, val] : iota.cols[c])
                    v.emplace_back(xd + i, val);
                gens.push_back(std::move(v));
            }
            if (k >= 2) {
                const LinMap& dj = r.dj[k - 2];
                for (const auto& col : dj.cols) {
                    SparseVec v;
                    for (const auto& [i, val] : col)
                        v.emplace_back(xd + i, val);
                    gens.push_back(std::move(v));
                }
            }
        }
        Quotient q = kit_.quotient(ambient, gens);
        if (n > x.hi() && q.module.dim() == 0)
            break;
        Envelope env = kit_.envelope(q.module);
        LinMap to_j = compose(env.embed, q.proj);
        r.terms.push_back(env.summands);
        r.modules.push_back(env.injective);
        r.xdim.push_back(xd);
        r.iota.push_back(columns(to_j, 0, xd));
        if (k >= 1)
            r.dj.push_back(columns(to_j, xd, jd));
        r.stage.push_back(std::move(q));
        r.embed.push_back(env.embed);
    }
    // trailing zero differential keeps dj aligned with terms
    if (!r.terms.empty())
        r.dj.push_back(zero_map(0, r.modules.back().dim()));
    return r;
}

MapMatrix DerivedCategory::nu_inverse(const std::vector<Cell>& src, const std::vector<Cell>& tgt, const LinMap& f) const
{
    const BasisAlgebra& A = *alg_;
    MapMatrix m = zero_matrix(tgt.size(), src.size());
    std::vector<int> soff = offsets(kit_, src), toff = offsets(kit_, tgt);
    for (size_t g = 0; g < tgt.size(); ++g) {
        int b = tgt[g].vertex;
        int row = toff[g] + kit_.inj_pos(b, A.idempotents[b]);
        for (size_t a = 0; a < src.size(); ++a) {
            SparseVec phi;
            for (int i = 0; i < kit_.inj_dim(src[a].vertex); ++i) {
                Rational c = coeff(f.cols[soff[a] + i], row);
                if (c != 0)
                    phi.emplace_back(i, c);
            }
            m[g][a] = kit_.injective_entry(src[a].vertex, b, phi);
        }
    }
    return m;
}

SerreData DerivedCategory::serre_inverse(const ProjComplex& x) const
{
    SerreData s;
    s.source = x;
    s.res = injective_resolution(x);
    ProjComplex full;
    full.lo = s.res.lo - 2;
    full.terms = s.res.terms;
    for (size_t k = 0; k + 1 < s.res.terms.size(); ++k)
        full.diff.push_back(nu_inverse(s.res.terms[k], s.res.terms[k + 1], s.res.dj[k]));
    trim(full);
    s.full = full;
    s.min = minimize(*alg_, full);
    return s;
}

ChainMap DerivedCategory::serre_inverse_map(const SerreData& sx, const SerreData& sy, const ChainMap& h) const
{
    const InjectiveResolution& rx = sx.res;
    const InjectiveResolution& ry = sy.res;
    const ProjComplex& x = sx.source;
    const ProjComplex& y = sy.source;
    const BasisAlgebra& A = *alg_;

    ChainMap lifted;  // full_x -> full_y
    LinMap hprev;
    bool have_prev = false;
    for (int n = rx.lo; n <= rx.hi(); ++n) {
        int kx = n - rx.lo;
        const Module& jx = rx.modules[kx];
        if (!ry.has(n)) {
            have_prev = false;
            continue;
        }
        int ky = n - ry.lo;
        // F(x, j) = (h x, H^{n-1} j)
        MapMatrix hn = h.comp.count(n) ? h.comp.at(n) : zero_matrix(y.term(n).size(), x.term(n).size());
        LinMap hx = kit_.projective_map(x.term(n), y.term(n), hn);
        int jx_prev = kx >= 1 ? rx.modules[kx - 1].dim() : 0;
        int jy_prev = ky >= 1 ? ry.modules[ky - 1].dim() : 0;
        LinMap hj = have_prev ? hprev : zero_map(jy_prev, jx_prev);
        if (hj.rows != jy_prev || hj.ncols() != jx_prev)
            hj = zero_map(jy_prev, jx_prev);
        LinMap f = block_diag(hx, hj);
        LinMap t = compose(ry.embed[ky], compose(ry.stage[ky].proj, compose(f, rx.stage[kx].section)));
        const Module& mx = rx.stage[kx].module;
        const LinMap& ex = rx.embed[kx];

        std::vector<int> toff = offsets(kit_, ry.terms[ky]);
        std::vector<LinMap> pieces;
        for (size_t g = 0; g < ry.terms[ky].size(); ++g) {
            const Cell& cell = ry.terms[ky][g];
            int row = toff[g] + kit_.inj_pos(cell.vertex, A.idempotents[cell.vertex]);
            std::vector<int> idx = jx.indices(cell);
            std::vector<SparseVec> eqs;
            std::vector<Rational> rhs;
            for (int k = 0; k < mx.dim(); ++k) {
                Rational psi = coeff(t.cols[k], row);
                if (!(mx.cells[k] == cell)) {
                    if (psi != 0)
                        throw std::logic_error("lift: functional outside its cell");
                    continue;
                }
                SparseVec eq;
                for (size_t i = 0; i < idx.size(); ++i) {
                    Rational c = coeff(ex.cols[k], idx[i]);
                    if (c != 0)
                        eq.emplace_back((int)i, c);
                }
                eqs.push_back(std::move(eq));
                rhs.push_back(psi);
            }
            auto chi = solve(eqs, (int)idx.size(), rhs);
            if (!chi)
                throw std::logic_error("lift: extension along the envelope failed");
            SparseVec global;
            for (const auto& [i, c] : *chi)
                global.emplace_back(idx[i], c);
            pieces.push_back(kit_.into_injective(jx, cell, global));
        }
        LinMap hn_inj = stack_rows(pieces, jx.dim());
        lifted.comp[n - 2] = nu_inverse(rx.terms[kx], ry.terms[ky], hn_inj);
        hprev = hn_inj;
        have_prev = true;
    }
    ChainMap tmp = compose(A, lifted, sx.min.from_min, sx.result(), sy.full);
    return compose(A, sy.min.to_min, tmp, sx.result(), sy.result());
}

const ProjComplex& DerivedCategory::power(int j, int p)
{
    if (p == 0)
        return stalks_[j];
    return power_data(j, p).result();
}

const SerreData& DerivedCategory::power_data(int j, int p)
{
    if (p < 1)
        throw std::logic_error("power_data needs p >= 1");
    auto key = std::make_pair(j, p);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return *it->second;
    const ProjComplex& prev = power(j, p - 1);
    auto data = std::make_unique<SerreData>(serre_inverse(prev));
    return *cache_.emplace(key, std::move(data)).first->second;
}

ChainMap DerivedCategory::power_map(int j, int k, int q, int p, const ChainMap& f)
{
    ChainMap cur = f;
    for (int t = 1; t <= p; ++t)
        cur = serre_inverse_map(power_data(j, t), power_data(k, q + t), cur);
    return cur;
}

int default_window(const BasisAlgebra& alg)
{
    return alg.dim() + 2;
}

TildeAlgebra::TildeAlgebra(DerivedCategory& d, int p_max) : d_(&d), window_(p_max)
{
    int n = d.num_vertices();
    for (int p = 0; p <= p_max; ++p) {
        int part = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto hs = std::make_unique<HomSpace>(d.algebra(), d.power(i, 0), d.power(j, p), 0);
                offsets_[{p, i, j}] = (int)basis_.size();
                for (int c = 0; c < hs->dim(); ++c)
                    basis_.push_back(TildeElement{p, i, j, hs->labels()[c], hs->representative(c)});
                part += hs->dim();
                spaces_[{p, i, j}] = std::move(hs);
            }
        if (p >= 1 && part == 0) {
            stop_ = p;
            break;
        }
    }
}

std::map<long, int> TildeAlgebra::dims() const
{
    std::map<long, int> out;
    for (const auto& e : basis_)
        ++out[e.p];
    return out;
}

std::map<std::pair<long, long>, int> TildeAlgebra::bigraded_dims() const
{
    std::map<std::pair<long, long>, int> out;
    for (const auto& e : basis_)
        ++out[{e.p, e.p + e.label}];
    return out;
}

const HomSpace& TildeAlgebra::space(int p, int i, int j) const
{
    return *spaces_.at({p, i, j});
}

int TildeAlgebra::offset(int p, int i, int j) const
{
    return offsets_.at({p, i, j});
}

SparseVec TildeAlgebra::multiply(int xi, int yi)
{
    const TildeElement& x = basis_[xi];
    const TildeElement& y = basis_[yi];
    if (x.tgt != y.src)
        return {};
    int p = x.p + y.p;
    if (!spaces_.count({p, x.src, y.tgt}))
        return {};
    const BasisAlgebra& A = d_->algebra();
    ChainMap sy = d_->power_map(y.src, y.tgt, y.p, x.p, y.rep);
    ChainMap prod = compose(A, sy, x.rep, d_->power(x.src, 0), d_->power(y.tgt, p));
    auto c = space(p, x.src, y.tgt).coordinates(prod);
    if (!c)
        throw std::logic_error("tilde product is not a cocycle");
    SparseVec out;
    int off = offset(p, x.src, y.tgt);
    for (const auto& [i, v] : *c)
        out.emplace_back(off + i, v);
    return out;
}

void require_gldim2(const DerivedCategory& d)
{
    auto g = d.gldim();
    if (!g || *g > 2)
        throw MathError("gldim", "global dimension is " + (g ? std::to_string(*g) : std::string(">= 10")) +
                                     ", expected at most 2");
}

std::optional<int> tau2_finite(DerivedCategory& d, int p_max)
{
    TildeAlgebra t(d, p_max);
    if (!t.finite())
        return std::nullopt;
    return t.stop();
}

std::map<long, int> iy_reduced_hom(DerivedCategory& d, int v, int p_max)
{
    const BasisAlgebra& A = d.algebra();
    if (!A.quiver.arrows_to(v).empty())
        throw InputError("vertex " + A.quiver.vertex_name(v) + " is not a source");
    int n = d.num_vertices();
    std::map<long, int> out;
    for (int p = 0; p <= p_max; ++p) {
        int total = 0;
        for (int i = 0; i < n; ++i) {
            if (i == v)
                continue;
            for (int j = 0; j < n; ++j) {
                if (j == v)
                    continue;
                HomSpace target(A, d.power(i, 0), d.power(j, p), 0);
                Echelon factored;
                for (int q = 0; q <= p; ++q) {
                    HomSpace first(A, d.power(i, 0), d.power(v, q), 0);
                    if (first.dim() == 0)
                        continue;
                    HomSpace second(A, d.power(v, q), d.power(j, p), 0);
                    for (int a = 0; a < first.dim(); ++a)
                        for (int b = 0; b < second.dim(); ++b) {
                            ChainMap c = compose(A, second.representative(b), first.representative(a),
                                                 d.power(i, 0), d.power(j, p));
                            auto co = target.coordinates(c);
                            if (!co)
                                throw std::logic_error("iy_reduced_hom: composite is not a cocycle");
                            if (!co->empty())
                                factored.insert(*co);
                        }
                }
                total += target.dim() - factored.rank();
            }
        }
        out[p] = total;
        if (p >= 1 && total == 0)
            break;
    }
    return out;
}

}  // namespace gqp

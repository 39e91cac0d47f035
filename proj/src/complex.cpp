/* complex.cpp */
#include "gqp/complex.hpp"

#include <stdexcept>

namespace gqp {

namespace {

const std::vector<Cell> kNoTerm;

SparseVec idem(const BasisAlgebra& A, int v)
{
    return unit_vec(A.idempotents[v]);
}

long basis_degree(const BasisAlgebra& A, int x)
{
    return A.degrees[x].empty() ? 0 : A.degrees[x][0];
}

}  // namespace

const std::vector<Cell>& ProjComplex::term(int n) const
{
    if (n < lo || n > hi())
        return kNoTerm;
    return terms[n - lo];
}

MapMatrix ProjComplex::d(int n) const
{
    if (n >= lo && n < hi())
        return diff[n - lo];
    return zero_matrix(term(n + 1).size(), term(n).size());
}

size_t ProjComplex::total_rank() const
{
    size_t s = 0;
    for (const auto& t : terms)
        s += t.size();
    return s;
}

ProjComplex stalk(int vertex, long shift)
{
    ProjComplex x;
    x.terms = {{Cell{vertex, shift}}};
    return x;
}

void trim(ProjComplex& x)
{
    while (!x.terms.empty() && x.terms.back().empty()) {
        x.terms.pop_back();
        if (!x.diff.empty())
            x.diff.pop_back();
    }
    while (!x.terms.empty() && x.terms.front().empty()) {
        x.terms.erase(x.terms.begin());
        if (!x.diff.empty())
            x.diff.erase(x.diff.begin());
        ++x.lo;
    }
    if (x.terms.empty()) {
        x.lo = 0;
        x.diff.clear();
    }
}

MapMatrix mat_mul(const BasisAlgebra& A, const MapMatrix& g, const MapMatrix& f, size_t rows, size_t cols)
{
    MapMatrix out = zero_matrix(rows, cols);
    for (size_t b = 0; b < f.size(); ++b)
        for (size_t a = 0; a < cols; ++a) {
            if (f[b][a].empty())
                continue;
            for (size_t c = 0; c < rows; ++c)
                if (!g[c][b].empty())
                    axpy(out[c][a], 1, A.multiply(f[b][a], g[c][b]));
        }
    return out;
}

MapMatrix identity_matrix(const BasisAlgebra& A, const std::vector<Cell>& summands)
{
    MapMatrix m = zero_matrix(summands.size(), summands.size());
    for (size_t i = 0; i < summands.size(); ++i)
        m[i][i] = idem(A, summands[i].vertex);
    return m;
}

bool is_zero(const MapMatrix& m)
{
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.empty())
                return false;
    return true;
}

ChainMap identity_map(const BasisAlgebra& A, const ProjComplex& x)
{
    ChainMap f;
    for (int n = x.lo; n <= x.hi(); ++n)
        f.comp[n] = identity_matrix(A, x.term(n));
    return f;
}

ChainMap compose(const BasisAlgebra& A, const ChainMap& g, const ChainMap& f, const ProjComplex& x,
                 const ProjComplex& z)
{
    ChainMap out;
    out.degree = f.degree + g.degree;
    for (const auto& [n, fn] : f.comp) {
        auto it = g.comp.find(n + f.degree);
        if (it == g.comp.end())
            continue;
        size_t rows = z.term(n + out.degree).size(), cols = x.term(n).size();
        if (rows == 0 || cols == 0)
            continue;
        out.comp[n] = mat_mul(A, it->second, fn, rows, cols);
    }
    return out;
}

ChainMap scaled(const ChainMap& f, const Rational& c)
{
    ChainMap out = f;
    for (auto& [n, m] : out.comp)
        for (auto& row : m)
            for (auto& e : row)
                e = gqp::scaled(e, c);
    return out;
}

bool is_chain_map(const BasisAlgebra& A, const ChainMap& f, const ProjComplex& x, const ProjComplex& y)
{
    int lo = std::min(x.lo, y.lo - f.degree) - 1, hi = std::max(x.hi(), y.hi() - f.degree) + 1;
    int sign = f.degree % 2 == 0 ? 1 : -1;
    for (int n = lo; n <= hi; ++n) {
        size_t rows = y.term(n + f.degree + 1).size(), cols = x.term(n).size();
        if (rows == 0 || cols == 0)
            continue;
        auto fn = f.comp.count(n) ? f.comp.at(n) : zero_matrix(y.term(n + f.degree).size(), cols);
        auto fn1 = f.comp.count(n + 1) ? f.comp.at(n + 1) : zero_matrix(rows, x.term(n + 1).size());
        MapMatrix left = mat_mul(A, y.d(n + f.degree), fn, rows, cols);
        MapMatrix right = mat_mul(A, fn1, x.d(n), rows, cols);
        for (size_t c = 0; c < rows; ++c)
            for (size_t a = 0; a < cols; ++a) {
                SparseVec diff = left[c][a];
                axpy(diff, -sign, right[c][a]);
                if (!diff.empty())
                    return false;
            }
    }
    return true;
}

bool is_complex(const BasisAlgebra& A, const ProjComplex& x)
{
    for (int n = x.lo; n + 2 <= x.hi(); ++n)
        if (!is_zero(mat_mul(A, x.d(n + 1), x.d(n), x.term(n + 2).size(), x.term(n).size())))
            return false;
    return true;
}

namespace {

struct Coords {
    std::vector<HomCoord> list;
    std::map<std::array<int, 4>, int> index;
};

Coords enumerate(const BasisAlgebra& A, const ProjComplex& x, const ProjComplex& y, int m)
{
    Coords out;
    for (int n = x.lo; n <= x.hi(); ++n) {
        const auto& xs = x.term(n);
        const auto& ys = y.term(n + m);
        for (int a = 0; a < (int)xs.size(); ++a)
            for (int c = 0; c < (int)ys.size(); ++c)
                for (int p : A.between(xs[a].vertex, ys[c].vertex)) {
                    long label = basis_degree(A, p) - (xs[a].deg - ys[c].deg);
                    out.index[{n, a, c, p}] = (int)out.list.size();
                    out.list.push_back(HomCoord{n, a, c, p, label});
                }
    }
    return out;
}

/* D(f) = d_Y f - (-1)^m f d_X on each coordinate of Hom^m. */
std::vector<SparseVec> hom_differential(const BasisAlgebra& A, const ProjComplex& x, const ProjComplex& y, int m,
                                        const Coords& src, const Coords& tgt)
{
    Rational sign = m % 2 == 0 ? -1 : 1;
    std::vector<SparseVec> out;
    for (const HomCoord& h : src.list) {
        SparseVec img;
        SparseVec xv = unit_vec(h.x);
        const auto& ynext = y.term(h.n + m + 1);
        if (!ynext.empty()) {
            MapMatrix dy = y.d(h.n + m);
            for (int c2 = 0; c2 < (int)ynext.size(); ++c2)
                if (!dy[c2][h.c].empty())
                    for (const auto& [p, v] : A.multiply(xv, dy[c2][h.c]))
                        axpy(img, v, unit_vec(tgt.index.at({h.n, h.a, c2, p})));
        }
        const auto& xprev = x.term(h.n - 1);
        if (!xprev.empty()) {
            MapMatrix dx = x.d(h.n - 1);
            for (int a2 = 0; a2 < (int)xprev.size(); ++a2)
                if (!dx[h.a][a2].empty())
                    for (const auto& [p, v] : A.multiply(dx[h.a][a2], xv))
                        axpy(img, sign * v, unit_vec(tgt.index.at({h.n - 1, a2, h.c, p})));
        }
        out.push_back(std::move(img));
    }
    return out;
}

}  // namespace

HomSpace::HomSpace(const BasisAlgebra& A, const ProjComplex& x, const ProjComplex& y, int m)
    : alg_(&A), x_(&x), y_(&y), m_(m)
{
    Coords prev = enumerate(A, x, y, m - 1);
    Coords cur = enumerate(A, x, y, m);
    Coords next = enumerate(A, x, y, m + 1);
    coords_ = cur.list;
    index_ = cur.index;
    dm_ = hom_differential(A, x, y, m, cur, next);
    std::vector<SparseVec> boundaries = hom_differential(A, x, y, m - 1, prev, cur);
    for (const auto& b : boundaries)
        if (!b.empty())
            reducer_.insert(b);

    std::map<long, std::vector<int>> by_label;
    for (int i = 0; i < (int)coords_.size(); ++i)
        by_label[coords_[i].label].push_back(i);
    for (const auto& [label, idx] : by_label) {
        std::map<int, SparseVec> rows;
        for (size_t k = 0; k < idx.size(); ++k)
            for (const auto& [r, c] : dm_[idx[k]])
                rows[r].emplace_back((int)k, c);
        std::vector<SparseVec> eqs;
        for (auto& [r, v] : rows)
            eqs.push_back(std::move(v));
        for (const auto& kv : kernel_basis(eqs, (int)idx.size())) {
            SparseVec v;
            for (const auto& [k, c] : kv)
                v.emplace_back(idx[k], c);
            if (reducer_.insert(v, unit_vec((int)classes_.size())) >= 0) {
                classes_.push_back(v);
                labels_.push_back(label);
            }
        }
    }
}

std::map<long, int> HomSpace::dims_by_label() const
{
    std::map<long, int> out;
    for (long l : labels_)
        ++out[l];
    return out;
}

ChainMap HomSpace::to_map(const SparseVec& cochain) const
{
    ChainMap f;
    f.degree = m_;
    for (const auto& [i, c] : cochain) {
        const HomCoord& h = coords_[i];
        auto& mat = f.comp[h.n];
        if (mat.empty())
            mat = zero_matrix(y_->term(h.n + m_).size(), x_->term(h.n).size());
        axpy(mat[h.c][h.a], c, unit_vec(h.x));
    }
    return f;
}

SparseVec HomSpace::from_map(const ChainMap& f) const
{
    if (f.degree != m_)
        throw std::logic_error("HomSpace::from_map: degree mismatch");
    SparseVec v;
    for (const auto& [n, mat] : f.comp)
        for (size_t c = 0; c < mat.size(); ++c)
            for (size_t a = 0; a < mat[c].size(); ++a)
                for (const auto& [p, coef] : mat[c][a])
                    axpy(v, coef, unit_vec(index_.at({n, (int)a, (int)c, p})));
    return v;
}

std::optional<SparseVec> HomSpace::coordinates(const SparseVec& cocycle) const
{
    SparseVec d;
    for (const auto& [i, c] : cocycle)
        axpy(d, c, dm_[i]);
    if (!d.empty())
        return std::nullopt;
    auto e = reducer_.express(cocycle);
    if (!e)
        throw std::logic_error("HomSpace: cocycle outside the span of boundaries and classes");
    return e;
}

namespace {

SparseVec inverse_unit(const BasisAlgebra& A, const SparseVec& phi, int v)
{
    Rational lambda = coeff(phi, A.idempotents[v]);
    SparseVec nil = phi;
    axpy(nil, -lambda, idem(A, v));
    SparseVec step = gqp::scaled(nil, -1 / lambda);
    SparseVec term = idem(A, v), sum = term;
    for (int k = 0; k <= A.dim() && !term.empty(); ++k) {
        term = A.multiply(term, step);
        axpy(sum, 1, term);
    }
    if (!term.empty())
        throw std::logic_error("inverse_unit: radical part is not nilpotent");
    return gqp::scaled(sum, 1 / lambda);
}

std::vector<Cell> without(const std::vector<Cell>& t, size_t drop)
{
    std::vector<Cell> out;
    for (size_t i = 0; i < t.size(); ++i)
        if (i != drop)
            out.push_back(t[i]);
    return out;
}

}  // namespace

Minimized minimize(const BasisAlgebra& A, const ProjComplex& x)
{
    Minimized res{x, identity_map(A, x), identity_map(A, x)};
    ProjComplex& c = res.complex;
    while (true) {
        bool found = false;
        int n = 0;
        size_t ta = 0, tc = 0;
        for (int k = c.lo; k < c.hi() && !found; ++k) {
            const MapMatrix& d = c.diff[k - c.lo];
            const auto& src = c.term(k);
            const auto& tgt = c.term(k + 1);
            for (size_t j = 0; j < tgt.size() && !found; ++j)
                for (size_t i = 0; i < src.size() && !found; ++i)
                    if (src[i] == tgt[j] && coeff(d[j][i], A.idempotents[src[i].vertex]) != 0) {
                        found = true;
                        n = k;
                        ta = i;
                        tc = j;
                    }
        }
        if (!found)
            break;

        const MapMatrix d = c.d(n);
        const auto& cn = c.term(n);
        const auto& cn1 = c.term(n + 1);
        SparseVec phinv = inverse_unit(A, d[tc][ta], cn[ta].vertex);
        std::vector<size_t> keepA, keepC;
        for (size_t i = 0; i < cn.size(); ++i)
            if (i != ta)
                keepA.push_back(i);
        for (size_t j = 0; j < cn1.size(); ++j)
            if (j != tc)
                keepC.push_back(j);

        ProjComplex nc = c;
        nc.terms[n - c.lo] = without(cn, ta);
        nc.terms[n + 1 - c.lo] = without(cn1, tc);
        if (n - 1 >= c.lo) {
            MapMatrix& dp = nc.diff[n - 1 - c.lo];
            dp.erase(dp.begin() + ta);
        }
        MapMatrix dn = zero_matrix(keepC.size(), keepA.size());
        for (size_t j = 0; j < keepC.size(); ++j)
            for (size_t i = 0; i < keepA.size(); ++i) {
                dn[j][i] = d[keepC[j]][keepA[i]];
                const SparseVec& delta = d[tc][keepA[i]];
                const SparseVec& gamma = d[keepC[j]][ta];
                if (!delta.empty() && !gamma.empty())
                    axpy(dn[j][i], -1, A.multiply(A.multiply(delta, phinv), gamma));
            }
        nc.diff[n - c.lo] = dn;
        if (n + 1 < c.hi()) {
            MapMatrix& dq = nc.diff[n + 1 - c.lo];
            for (auto& row : dq)
                row.erase(row.begin() + tc);
        }

        ChainMap f = identity_map(A, c), g = identity_map(A, c);
        MapMatrix fn = zero_matrix(keepA.size(), cn.size()), gn = zero_matrix(cn.size(), keepA.size());
        for (size_t i = 0; i < keepA.size(); ++i) {
            fn[i][keepA[i]] = idem(A, cn[keepA[i]].vertex);
            gn[keepA[i]][i] = idem(A, cn[keepA[i]].vertex);
            const SparseVec& delta = d[tc][keepA[i]];
            if (!delta.empty())
                gn[ta][i] = gqp::scaled(A.multiply(delta, phinv), -1);
        }
        MapMatrix fn1 = zero_matrix(keepC.size(), cn1.size()), gn1 = zero_matrix(cn1.size(), keepC.size());
        for (size_t j = 0; j < keepC.size(); ++j) {
            fn1[j][keepC[j]] = idem(A, cn1[keepC[j]].vertex);
            gn1[keepC[j]][j] = idem(A, cn1[keepC[j]].vertex);
            const SparseVec& gamma = d[keepC[j]][ta];
            if (!gamma.empty())
                fn1[j][tc] = gqp::scaled(A.multiply(phinv, gamma), -1);
        }
        f.comp[n] = fn;
        f.comp[n + 1] = fn1;
        g.comp[n] = gn;
        g.comp[n + 1] = gn1;

        res.to_min = compose(A, f, res.to_min, x, nc);
        res.from_min = compose(A, res.from_min, g, nc, x);
        c = nc;
    }
    trim(c);
    return res;
}

}  // namespace gqp

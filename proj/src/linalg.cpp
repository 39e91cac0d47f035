/* linalg.cpp */
#include "gqp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gqp {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x)
{
    if (a == 0 || x.empty())
        return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first))
            out.push_back(std::move(y[i++]));
        else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        }
        else {
            Rational s = y[i].second + a * x[j].second;
            if (s != 0)
                out.emplace_back(y[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& a)
{
    if (a == 0)
        return {};
    SparseVec out = x;
    for (auto& e : out)
        e.second *= a;
    return out;
}

Rational coeff(const SparseVec& x, int i)
{
    auto it = std::lower_bound(x.begin(), x.end(), i, [](const auto& e, int k) { return e.first < k; });
    if (it != x.end() && it->first == i)
        return it->second;
    return 0;
}

SparseVec unit_vec(int i)
{
    return {{i, Rational(1)}};
}

int Echelon::row_of_pivot(int col) const
{
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), std::make_pair(col, -1));
    if (it != pivot_index_.end() && it->first == col)
        return it->second;
    return -1;
}

SparseVec Echelon::reduce(SparseVec v) const
{
    SparseVec orig = v;
    for (const auto& [col, val] : orig) {
        int r = row_of_pivot(col);
        if (r >= 0)
            axpy(v, -val, rows_[r]);
    }
    return v;
}

std::optional<SparseVec> Echelon::express(const SparseVec& v) const
{
    SparseVec res = v, comb;
    for (const auto& [col, val] : v) {
        int r = row_of_pivot(col);
        if (r >= 0) {
            axpy(res, -val, rows_[r]);
            axpy(comb, val, tags_[r]);
        }
    }
    if (!res.empty())
        return std::nullopt;
    return comb;
}

int Echelon::insert(SparseVec v, SparseVec tag)
{
    SparseVec orig = v;
    for (const auto& [col, val] : orig) {
        int r = row_of_pivot(col);
        if (r >= 0) {
            axpy(v, -val, rows_[r]);
            axpy(tag, -val, tags_[r]);
        }
    }
    if (v.empty())
        return -1;
    int piv = v[0].first;
    Rational inv = 1 / v[0].second;
    v = scaled(v, inv);
    tag = scaled(tag, inv);
    for (size_t i = 0; i < rows_.size(); ++i) {
        Rational c = coeff(rows_[i], piv);
        if (c != 0) {
            axpy(rows_[i], -c, v);
            axpy(tags_[i], -c, tag);
        }
    }
    rows_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    pivots_.push_back(piv);
    auto pos = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), std::make_pair(piv, -1));
    pivot_index_.insert(pos, {piv, (int)rows_.size() - 1});
    return piv;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int ncols)
{
    Echelon e;
    for (const auto& r : rows)
        e.insert(r);
    std::vector<std::vector<std::pair<int, Rational>>> by_free(ncols);
    std::vector<char> is_piv(ncols, 0);
    for (int p : e.pivots())
        is_piv[p] = 1;
    for (int r = 0; r < e.rank(); ++r)
        for (const auto& [col, val] : e.rows()[r])
            if (!is_piv[col])
                by_free[col].emplace_back(e.pivots()[r], -val);
    std::vector<SparseVec> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f])
            continue;
        SparseVec v = by_free[f];
        v.emplace_back(f, Rational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, int ncols, const std::vector<Rational>& rhs)
{
    Echelon e;
    for (size_t i = 0; i < rows.size(); ++i) {
        SparseVec r = rows[i];
        if (rhs[i] != 0)
            r.emplace_back(ncols, rhs[i]);
        if (e.insert(std::move(r)) == ncols)
            return std::nullopt;
    }
    SparseVec x;
    for (int r = 0; r < e.rank(); ++r) {
        Rational c = coeff(e.rows()[r], ncols);
        if (c != 0)
            x.emplace_back(e.pivots()[r], c);
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
}

int rank_of(const std::vector<SparseVec>& rows)
{
    Echelon e;
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (c_ != o.r_)
        throw std::logic_error("matrix shape mismatch in product");
    Matrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0)
                continue;
            for (int j = 0; j < o.c_; ++j)
                if (o(k, j) != 0)
                    m(i, j) += x * o(k, j);
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix m = *this;
    m += o;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (r_ != o.r_ || c_ != o.c_)
        throw std::logic_error("matrix shape mismatch in sum");
    for (size_t i = 0; i < a_.size(); ++i)
        if (o.a_[i] != 0)
            a_[i] += o.a_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    return *this + o.scaled(-1);
}

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix m = *this;
    for (auto& x : m.a_)
        if (x != 0)
            x *= s;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0)
            return false;
    return true;
}

SparseVec Matrix::row(int i) const
{
    SparseVec v;
    for (int j = 0; j < c_; ++j)
        if ((*this)(i, j) != 0)
            v.emplace_back(j, (*this)(i, j));
    return v;
}

SparseVec Matrix::col(int j) const
{
    SparseVec v;
    for (int i = 0; i < r_; ++i)
        if ((*this)(i, j) != 0)
            v.emplace_back(i, (*this)(i, j));
    return v;
}

std::vector<SparseVec> Matrix::row_list() const
{
    std::vector<SparseVec> out;
    for (int i = 0; i < r_; ++i)
        out.push_back(row(i));
    return out;
}

std::vector<SparseVec> Matrix::col_list() const
{
    std::vector<SparseVec> out;
    for (int j = 0; j < c_; ++j)
        out.push_back(col(j));
    return out;
}

Matrix Matrix::from_cols(const std::vector<SparseVec>& cols, int nrows)
{
    Matrix m(nrows, (int)cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [i, v] : cols[j])
            m(i, (int)j) = v;
    return m;
}

Matrix Matrix::from_rows(const std::vector<SparseVec>& rows, int ncols)
{
    Matrix m((int)rows.size(), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i])
            m((int)i, j) = v;
    return m;
}

void Matrix::put(int i, int j, const Matrix& o)
{
    for (int a = 0; a < o.r_; ++a)
        for (int b = 0; b < o.c_; ++b)
            (*this)(i + a, j + b) = o(a, b);
}

Matrix Matrix::block(int i, int j, int nr, int nc) const
{
    Matrix m(nr, nc);
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nc; ++b)
            m(a, b) = (*this)(i + a, j + b);
    return m;
}

int rank(const Matrix& m)
{
    return rank_of(m.row_list());
}

Matrix kernel(const Matrix& m)
{
    return Matrix::from_cols(kernel_basis(m.row_list(), m.cols()), m.cols());
}

Matrix left_inverse(const Matrix& m)
{
    Echelon e;
    for (int i = 0; i < m.rows(); ++i)
        e.insert(m.row(i), unit_vec(i));
    if (e.rank() != m.cols())
        throw std::logic_error("left_inverse: matrix is not injective");
    Matrix l(m.cols(), m.rows());
    for (int j = 0; j < m.cols(); ++j) {
        auto comb = e.express(unit_vec(j));
        for (const auto& [i, v] : *comb)
            l(j, i) = v;
    }
    return l;
}

}  // namespace gqp

/* linalg.hpp: exact linear algebra over the rationals */
#pragma once

#include "gqp/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gqp {

/* Sorted by index, no stored zeros. */
using SparseVec = std::vector<std::pair<int, Rational>>;

void axpy(SparseVec& y, const Rational& a, const SparseVec& x);  // y += a*x
SparseVec scaled(const SparseVec& x, const Rational& a);
Rational coeff(const SparseVec& x, int i);
SparseVec unit_vec(int i);

/*
 * Incrementally maintained reduced row echelon form. Each stored row remembers
 * the combination (tag) of inserted vectors it came from.
 */
class Echelon {
public:
    Echelon() = default;

    /* Returns the new pivot column, or -1 if v was dependent. */
    int insert(SparseVec v, SparseVec tag = {});
    /* Residual of v modulo the row space. */
    SparseVec reduce(SparseVec v) const;
    /* Combination of tags reproducing v, if v lies in the row space. */
    std::optional<SparseVec> express(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    int rank() const { return (int)rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int row_of_pivot(int col) const;

private:
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> tags_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> pivot_index_;  // sorted (col, row)
};

/* Kernel basis of the system given by equation rows over ncols unknowns. */
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows, int ncols);

/* Some solution of rows*x = rhs (rhs given per row), or nullopt. */
std::optional<SparseVec> solve(const std::vector<SparseVec>& rows, int ncols, const std::vector<Rational>& rhs);

int rank_of(const std::vector<SparseVec>& rows);

/* Small dense matrices for module maps. */
class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : r_(r), c_(c), a_((size_t)r * c) {}
    static Matrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix& operator+=(const Matrix& o);
    Matrix scaled(const Rational& s) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    SparseVec row(int i) const;
    SparseVec col(int j) const;
    std::vector<SparseVec> row_list() const;
    std::vector<SparseVec> col_list() const;
    static Matrix from_cols(const std::vector<SparseVec>& cols, int nrows);
    static Matrix from_rows(const std::vector<SparseVec>& rows, int ncols);

    /* Place o with its top-left corner at (i, j). */
    void put(int i, int j, const Matrix& o);
    Matrix block(int i, int j, int nr, int nc) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

int rank(const Matrix& m);
/* Columns span the kernel of m. */
Matrix kernel(const Matrix& m);
/* L with L*m = 1, for m of full column rank. */
Matrix left_inverse(const Matrix& m);

}  // namespace gqp

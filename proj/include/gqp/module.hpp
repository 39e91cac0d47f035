/* module.hpp: graded right modules over a basis algebra */
#pragma once

#include "gqp/jacobian.hpp"

#include <compare>
#include <optional>

namespace gqp {

/* A vertex together with an internal degree. */
struct Cell {
    int vertex = 0;
    long deg = 0;
    auto operator<=>(const Cell&) const = default;
};

/* Images of the source basis vectors. */
struct LinMap {
    int rows = 0;
    std::vector<SparseVec> cols;

    int ncols() const { return (int)cols.size(); }
};

LinMap zero_map(int rows, int cols);
SparseVec apply_map(const LinMap& f, const SparseVec& v);
LinMap compose(const LinMap& g, const LinMap& f);  // g after f
LinMap operator+(const LinMap& f, const LinMap& g);
bool is_zero(const LinMap& f);

/* Matrix of algebra elements indexed [target][source]; entry (c, a) lies in e_a A e_c. */
using MapMatrix = std::vector<std::vector<SparseVec>>;

MapMatrix zero_matrix(size_t rows, size_t cols);

/*
 * Right module with a basis of homogeneous vectors. An arrow a: s -> t of
 * degree g maps cell (t, k) to cell (s, k + g); a path [a1, ..., am] acts by
 * act[a1] * ... * act[am].
 */
struct Module {
    std::vector<Cell> cells;
    std::vector<LinMap> act;

    int dim() const { return (int)cells.size(); }
    std::vector<int> indices(const Cell& c) const;
    std::vector<Cell> support() const;
};

struct Quotient {
    Module module;
    LinMap proj;     // M -> M/U
    LinMap section;  // M/U -> M, proj * section = 1
};

struct Sub {
    Module module;
    LinMap incl;
};

struct Envelope {
    std::vector<Cell> summands;  // injective I(v, k) per socle vector
    Module injective;
    LinMap embed;
};

struct Cover {
    std::vector<Cell> summands;  // projective P(v, k) per top generator
    Module projective;
    LinMap map;
};

Module direct_sum(const std::vector<Module>& ms, int narrows);

class ModuleKit {
public:
    explicit ModuleKit(const BasisAlgebra& alg);

    const BasisAlgebra& algebra() const { return *alg_; }
    int num_vertices() const { return alg_->quiver.num_vertices(); }
    long degree(int x) const { return alg_->degrees[x].empty() ? 0 : alg_->degrees[x][0]; }
    long arrow_degree(int a) const;

    /* P(j, k): basis the paths i -> j, path x in cell (i, k + deg x). */
    Module projective(int j, long k) const;
    /* I(j, k): basis x* for paths x: j -> l, in cell (l, k - deg x). */
    Module injective(int j, long k) const;
    Module projective_sum(const std::vector<Cell>& summands) const;
    Module injective_sum(const std::vector<Cell>& summands) const;
    Module simple(int v, long k) const;

    /* Basis positions inside P(j, .) and I(j, .); -1 when x does not end (start) at j. */
    int proj_pos(int j, int x) const { return proj_pos_[j][x]; }
    int inj_pos(int j, int x) const { return inj_pos_[j][x]; }
    int proj_dim(int j) const { return proj_dim_[j]; }
    int inj_dim(int j) const { return inj_dim_[j]; }

    /* Module map between sums of projectives given by algebra elements (v -> v * entry). */
    LinMap projective_map(const std::vector<Cell>& src, const std::vector<Cell>& tgt, const MapMatrix& m) const;

    SparseVec act_path(const Module& m, int x, const SparseVec& v) const;

    /* Map into I(t.vertex, t.deg) whose socle coordinate restricted to cell t is the functional phi. */
    LinMap into_injective(const Module& m, const Cell& t, const SparseVec& phi) const;

    /* Element u of e_a A e_b attached to a map I(a) -> I(b) with socle-coordinate functional phi on the I(a) block. */
    SparseVec injective_entry(int a, int b, const SparseVec& phi_block) const;

    Envelope envelope(const Module& m) const;
    Cover cover(const Module& m) const;
    Quotient quotient(const Module& m, const std::vector<SparseVec>& gens) const;
    Sub submodule(const Module& m, const std::vector<SparseVec>& basis) const;
    /* Kernel of a cell-preserving map, as a submodule. */
    Sub kernel(const Module& m, const LinMap& f) const;

    /* Summands of the minimal projective resolution, term by term; at most max_terms terms.
       complete is set when the resolution ended within the bound. */
    std::vector<std::vector<Cell>> projective_resolution(const Module& m, int max_terms, bool* complete = nullptr) const;

private:
    const BasisAlgebra* alg_;
    std::vector<SparseVec> arrow_vec_;
    std::vector<std::vector<int>> proj_pos_, inj_pos_;
    std::vector<int> proj_dim_, inj_dim_;
};

}  // namespace gqp

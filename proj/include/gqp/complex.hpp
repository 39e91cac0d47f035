/* complex.hpp: bounded complexes of projectives, chain maps and Hom spaces in the derived category */
#pragma once

#include "gqp/module.hpp"

#include <array>
#include <map>

namespace gqp {

/* Summands are P(vertex, shift); terms[k] sits in cohomological degree lo + k. */
struct ProjComplex {
    int lo = 0;
    std::vector<std::vector<Cell>> terms;
    std::vector<MapMatrix> diff;  // diff[k]: terms[k] -> terms[k + 1]

    int hi() const { return lo + (int)terms.size() - 1; }
    bool empty() const { return terms.empty(); }
    const std::vector<Cell>& term(int n) const;
    /* Differential out of degree n, zero outside the support. */
    MapMatrix d(int n) const;
    size_t total_rank() const;
};

ProjComplex stalk(int vertex, long shift = 0);
/* Drops zero terms at both ends. */
void trim(ProjComplex& x);

/* comp[n]: X^n -> Y^{n + degree}; missing components are zero. */
struct ChainMap {
    int degree = 0;
    std::map<int, MapMatrix> comp;
};

/* g after f for matrices of algebra elements; f has shape mid x cols. */
MapMatrix mat_mul(const BasisAlgebra& A, const MapMatrix& g, const MapMatrix& f, size_t rows, size_t cols);
MapMatrix identity_matrix(const BasisAlgebra& A, const std::vector<Cell>& summands);
bool is_zero(const MapMatrix& m);

ChainMap identity_map(const BasisAlgebra& A, const ProjComplex& x);
/* g after f for f: X -> Y, g: Y -> Z. */
ChainMap compose(const BasisAlgebra& A, const ChainMap& g, const ChainMap& f, const ProjComplex& x,
                 const ProjComplex& z);
ChainMap scaled(const ChainMap& f, const Rational& c);
bool is_chain_map(const BasisAlgebra& A, const ChainMap& f, const ProjComplex& x, const ProjComplex& y);
bool is_complex(const BasisAlgebra& A, const ProjComplex& x);

/* One coordinate of Hom^m(X, Y): path x as a map from X^n summand a to Y^{n+m} summand c. */
struct HomCoord {
    int n, a, c, x;
    long label;  // internal degree of the map: deg x - (shift a - shift c)
};

/* Hom_D(X, Y[m]) as cohomology of the total Hom complex, split by label. Keeps references to x and y. */
class HomSpace {
public:
    HomSpace(const BasisAlgebra& A, const ProjComplex& x, const ProjComplex& y, int m);

    int dim() const { return (int)classes_.size(); }
    int degree() const { return m_; }
    const std::vector<HomCoord>& coords() const { return coords_; }
    const std::vector<SparseVec>& classes() const { return classes_; }
    const std::vector<long>& labels() const { return labels_; }
    std::map<long, int> dims_by_label() const;

    ChainMap to_map(const SparseVec& cochain) const;
    SparseVec from_map(const ChainMap& f) const;
    /* Coordinates of a cocycle in the basis of classes; nullopt if not a cocycle. */
    std::optional<SparseVec> coordinates(const SparseVec& cocycle) const;
    std::optional<SparseVec> coordinates(const ChainMap& f) const { return coordinates(from_map(f)); }
    ChainMap representative(int i) const { return to_map(classes_[i]); }

private:
    const BasisAlgebra* alg_;
    const ProjComplex* x_;
    const ProjComplex* y_;
    int m_;
    std::vector<HomCoord> coords_;
    std::map<std::array<int, 4>, int> index_;
    std::vector<SparseVec> dm_;  // D^m applied to each coordinate
    std::vector<SparseVec> classes_;
    std::vector<long> labels_;
    Echelon reducer_;  // coboundaries, then classes tagged by position
};

struct Minimized {
    ProjComplex complex;
    ChainMap to_min;    // full -> minimal
    ChainMap from_min;  // minimal -> full
};

/* Cancels invertible differential entries one at a time. */
Minimized minimize(const BasisAlgebra& A, const ProjComplex& x);

}  // namespace gqp

/* derived.hpp: the inverse Serre twist on bounded complexes of projectives and the tilde algebra */
#pragma once

#include "gqp/complex.hpp"
#include "gqp/presentation.hpp"

#include <memory>
#include <optional>

namespace gqp {

/*
 * Injective resolution X -> J built one degree at a time: J^n is the envelope
 * of M^n = (X^n + J^{n-1}) / image of (X^{n-1} + J^{n-2}), which makes the
 * cone of X -> J exact.
 */
struct InjectiveResolution {
    int lo = 0;
    std::vector<std::vector<Cell>> terms;  // injective summands I(v, k) of J^n
    std::vector<Module> modules;
    std::vector<int> xdim;         // dimension of X^n as a module
    std::vector<Quotient> stage;   // M^n with its projection and section
    std::vector<LinMap> embed;     // M^n -> J^n
    std::vector<LinMap> iota;      // X^n -> J^n
    std::vector<LinMap> dj;        // J^n -> J^{n+1}

    int hi() const { return lo + (int)terms.size() - 1; }
    bool has(int n) const { return n >= lo && n <= hi(); }
};

struct SerreData {
    ProjComplex source;
    InjectiveResolution res;
    ProjComplex full;  // inverse Nakayama of J, shifted by [2]
    Minimized min;

    const ProjComplex& result() const { return min.complex; }
};

class DerivedCategory {
public:
    explicit DerivedCategory(BasisAlgebra alg);
    DerivedCategory(const DerivedCategory&) = delete;
    DerivedCategory& operator=(const DerivedCategory&) = delete;

    const BasisAlgebra& algebra() const { return *alg_; }
    const ModuleKit& kit() const { return kit_; }
    int num_vertices() const { return alg_->quiver.num_vertices(); }

    /* Projective dimension of each simple; nullopt entries exceeded the bound. */
    std::vector<std::optional<int>> projective_dimensions(int bound = 10) const;
    /* nullopt when some simple has projective dimension beyond the bound. */
    std::optional<int> gldim(int bound = 10) const;
    /* ext2[i][j] = dim Ext^2(S_i, S_j), read off minimal resolutions. */
    std::vector<std::vector<int>> ext2() const;

    InjectiveResolution injective_resolution(const ProjComplex& x) const;
    /* Matrix of algebra elements attached to a module map between sums of injectives. */
    MapMatrix nu_inverse(const std::vector<Cell>& src, const std::vector<Cell>& tgt, const LinMap& f) const;
    SerreData serre_inverse(const ProjComplex& x) const;
    /* S^{-1}(h) for h: x.source -> y.source, as a map x.result() -> y.result(). */
    ChainMap serre_inverse_map(const SerreData& x, const SerreData& y, const ChainMap& h) const;

    /* S^{-p} P_j, cached. */
    const ProjComplex& power(int j, int p);
    const SerreData& power_data(int j, int p);  // p >= 1
    /* S^{-p}(f) for f: P_j -> S^{-q} P_k. */
    ChainMap power_map(int j, int k, int q, int p, const ChainMap& f);

private:
    std::unique_ptr<BasisAlgebra> alg_;
    ModuleKit kit_;
    std::map<std::pair<int, int>, std::unique_ptr<SerreData>> cache_;
    std::vector<ProjComplex> stalks_;
};

/* Basis element of Hom(P_src, S^{-p} P_tgt) with internal label; q = p + label. */
struct TildeElement {
    int p, src, tgt;
    long label;
    ChainMap rep;
};

/*
 * The algebra of maps P_i -> S^{-p} P_j up to the first p with zero part.
 * Keeps a reference to the DerivedCategory that produced it.
 */
class TildeAlgebra {
public:
    TildeAlgebra(DerivedCategory& d, int p_max);

    bool finite() const { return stop_ >= 0; }
    int stop() const { return stop_; }  // first p >= 1 with zero part, -1 if none up to the window
    int window() const { return window_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<TildeElement>& basis() const { return basis_; }
    std::map<long, int> dims() const;
    std::map<std::pair<long, long>, int> bigraded_dims() const;
    /* Traversal product: x followed by y, i.e. S^{-p}(y) after x. Coordinates in the basis. */
    SparseVec multiply(int x, int y);
    const HomSpace& space(int p, int i, int j) const;
    int offset(int p, int i, int j) const;

private:
    DerivedCategory* d_;
    int window_, stop_ = -1;
    std::vector<TildeElement> basis_;
    std::map<std::tuple<int, int, int>, std::unique_ptr<HomSpace>> spaces_;
    std::map<std::tuple<int, int, int>, int> offsets_;
};

/* Throws MathError("gldim") unless gldim <= 2. */
void require_gldim2(const DerivedCategory& d);

/* Finite(stop) or nullopt when the window is exhausted. */
std::optional<int> tau2_finite(DerivedCategory& d, int p_max);

/*
 * Dimensions (per p) of Hom(P_i, S^{-p} P_j) for i, j != v, modulo maps through
 * add{S^{-q} P_v}. v must be a source.
 */
std::map<long, int> iy_reduced_hom(DerivedCategory& d, int v, int p_max);

int default_window(const BasisAlgebra& alg);

}  // namespace gqp

/* equivalence.hpp: tilde QPs, graded equivalence, derived equivalence verdicts, compatibility and slices */
#pragma once

#include "gqp/derived.hpp"
#include "gqp/mutation.hpp"

#include <functional>
#include <optional>

namespace gqp {

/*
 * Q plus one arrow t(r) -> s(r) per relation r, W = sum of r followed by its
 * arrow. Degrees: old arrows 0, new arrows 1, target 1. Throws MathError
 * "gldim" or "not_minimal" (relation counts must match Ext^2 between simples).
 */
GradedQP tilde_qp(const AlgebraPresentation& p, int cutoff = -1);
/* Same quiver and potential with degrees (0, deg a) and (1, 1 - deg r), target (1, 1). */
GradedQP bigraded_tilde_qp(const AlgebraPresentation& p, int cutoff = -1);
/* Names used for the added arrows, in relation order. */
std::vector<std::string> relation_arrow_names(const AlgebraPresentation& p);

/* An undirected cycle: arrow with +1 when traversed along, -1 against. */
using WitnessCycle = std::vector<std::pair<int, int>>;

struct CoboundaryResult {
    std::optional<std::vector<Degree>> shift;  // per vertex, zero on the first vertex of each component
    WitnessCycle witness;                      // nonzero delta sum when shift is empty
};

/* Solves delta(a) = r(t a) - r(s a). */
CoboundaryResult coboundary_solve(const Quiver& q, const std::vector<Degree>& delta);

/* Rescaling arrows by nonzero scalars can turn coefficients c1 into c2 (cycle by cycle). */
bool scalars_match(const Quiver& q, const std::vector<Path>& cycles, const std::vector<Rational>& c1,
                   const std::vector<Rational>& c2);

struct EquivalenceCertificate {
    bool equivalent = false;
    bool isomorphic = false;  // some quiver isomorphism matches the potentials
    QuiverIso sigma;
    std::vector<Degree> shift;  // per vertex of the first QP
    WitnessCycle witness;       // arrows of the first QP
};

/* Potential support carried onto the other one with consistent scalars. */
bool potentials_match(const GradedQP& qp1, const GradedQP& qp2, const QuiverIso& s);
EquivalenceCertificate graded_equivalent(const GradedQP& qp1, const GradedQP& qp2);

struct DerivedVerdict {
    EquivalenceCertificate cert;
    GradedQP left, right;  // the compared graded QPs
    std::vector<MutationStep> log;
};

/*
 * Throws MathError "gldim", "inconclusive" or "tilde_not_isomorphic". window bounds the Serre powers
 * searched for tau_2-finiteness; negative picks default_window.
 */
DerivedVerdict derived_equivalence_check(const AlgebraPresentation& p1, const AlgebraPresentation& p2,
                                         int cutoff = -1, int window = -1);
DerivedVerdict derived_equivalence_via_mutation(const AlgebraPresentation& p1, const AlgebraPresentation& p2,
                                                const std::vector<std::string>& sequence, Side side,
                                                int cutoff = -1, int window = -1);

struct CompatibilityCertificate {
    bool compatible = false;
    int failed_condition = 0;
    std::string detail;
    std::vector<std::string> sequence;
    std::vector<MutationStep> log;
    GradedQP mutated;   // mu_s^L of the first tilde QP
    QuiverIso sigma;    // mutated -> second tilde QP, ungraded
    std::vector<Degree> d2;  // per arrow of mutated
    GradedQP bigraded;  // (mu_s^L(d1), d2)
    GradedQP back;      // mu_s^R of bigraded
    QuiverIso back_sigma;  // back -> first tilde QP
    std::map<std::string, long> grading1, grading2;  // induced gradings on the arrows of both algebras
};

/* Gradings of qp homogeneous of degree 1, one per coboundary class: arrows of a spanning forest get
 * degree 0, the others range over [-bound, bound]. Returns the first one accepted. */
std::optional<std::vector<Degree>> search_grading(const GradedQP& qp, int bound,
                                                   const std::function<bool(const std::vector<Degree>&)>& accept);

/* d2 is the second grading transported along sigma; if it fails, gradings of the mutated QP with
 * free arrow degrees in [-search_bound, search_bound] are tried, one per coboundary class. */
CompatibilityCertificate compatibility_check(const AlgebraPresentation& p1, const AlgebraPresentation& p2,
                                             const std::vector<std::string>& sequence, int cutoff = -1,
                                             int window = -1, int search_bound = 3);

/* Graded dimension vector of the tilde algebra from both engines. */
struct CrossCheck {
    std::map<long, int> derived, jacobian;
    bool agree() const { return derived == jacobian; }
};
CrossCheck cross_engine(DerivedCategory& d, const GradedQP& tilde, int window, int cutoff = -1);

struct SliceCheck {
    bool slice = true;
    std::string condition;  // "4a" or "4b" on failure
    int i = -1, j = -1;
    long r = 0;
};

/* Slice tests for one algebra with cached Hom dimensions. */
class SliceTester {
public:
    SliceTester(DerivedCategory& d, const GradedQP& tilde, int stop);

    int max_r() const { return max_r_; }
    /* dim Hom(S^{-a} P_i, S^{-b} P_j [m]) for a, b >= 0. */
    int hom_shifted(int i, long a, int j, long b, int m);
    /* Throws MathError("window") when a (4b) Hom is nonzero at the window edge. */
    SliceCheck check(const std::vector<long>& d);
    /* Canonical slices (min 0) with entries at most bound. */
    std::vector<std::vector<long>> enumerate(long bound);
    /* Hom(P_R, P_0) = 0 and Hom(P_R, S^{-1} P_0 [-1]) = 0 for the split of Lambda. */
    bool check_2apr(const std::vector<int>& r);
    /* Same test for the split of the slice s read off from t, where s <= t <= s + 1. */
    bool check_2apr_pair(const std::vector<long>& s, const std::vector<long>& t);

private:
    DerivedCategory* d_;
    const GradedQP* tilde_;
    int n_, max_r_;
    std::map<std::tuple<int, long, int, long, int>, int> cache_;
};

std::vector<long> canonical_slice(std::vector<long> d);
/* Componentwise min and max; throws MathError("not_slice") when an input or output fails. */
std::pair<std::vector<long>, std::vector<long>> slice_min_max(SliceTester& t, const std::vector<long>& d1,
                                                              const std::vector<long>& d2);

}  // namespace gqp

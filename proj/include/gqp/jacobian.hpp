/* jacobian.hpp: reduction systems and finite-dimensional path algebra quotients */
#pragma once

#include "gqp/linalg.hpp"
#include "gqp/quiver.hpp"

#include <memory>
#include <random>
#include <variant>

namespace gqp {

struct Rule {
    Path lead;
    PathElement tail;  // strictly smaller than lead
};

/*
 * Monic rewriting rules over the length-lex path order. Returned by complete()
 * only together with a verified finite basis of normal words.
 */
class ReductionSystem {
public:
    ReductionSystem(Quiver q, std::vector<Rule> rules, int cutoff);

    const Quiver& quiver() const { return q_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int cutoff() const { return cutoff_; }

    /* With rng set, reducible occurrences are picked at random (confluence tests). */
    PathElement normal_form(const PathElement& x, std::mt19937* rng = nullptr) const;
    bool is_normal(const Path& p) const;
    /* Index of a rule whose lead is a subword of p starting at pos, else -1. */
    int match_at(const Path& p, size_t pos) const;

    const std::vector<Path>& normal_words() const { return words_; }
    void set_normal_words(std::vector<Path> w) { words_ = std::move(w); }

private:
    struct VecHash {
        size_t operator()(const std::vector<int>& v) const;
    };
    Quiver q_;
    std::vector<Rule> rules_;
    int cutoff_;
    size_t max_lead_ = 0;
    std::unordered_map<std::vector<int>, int, VecHash> by_lead_;
    std::vector<Path> words_;
};

struct Inconclusive {
    int cutoff;
    std::string detail;
};

using CompletionResult = std::variant<ReductionSystem, Inconclusive>;

int default_cutoff(const Quiver& q);

/* Throws InputError when cutoff < 1. */
CompletionResult complete(const std::vector<PathElement>& generators, const Quiver& q, int cutoff);

struct BasisAlgebra {
    Quiver quiver;
    std::vector<Path> basis;
    std::map<Path, int> index;
    std::vector<std::vector<SparseVec>> mult;  // mult[x][y]: traversal product x then y
    std::vector<Degree> degrees;
    std::vector<Degree> arrow_degrees;
    std::vector<int> idempotents;  // vertex -> basis index
    std::shared_ptr<const ReductionSystem> system;

    int dim() const { return (int)basis.size(); }
    SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    SparseVec coords(const PathElement& x) const;  // reduces first
    PathElement to_element(const SparseVec& v) const;
    /* Basis indices of paths from i to j. */
    const std::vector<int>& between(int i, int j) const { return between_[(size_t)i * quiver.num_vertices() + j]; }
    void finalize();

private:
    std::vector<std::vector<int>> between_;
};

/* Builds the algebra kQ/I; arrow_degrees may be empty (all degrees [0]). */
BasisAlgebra make_algebra(const ReductionSystem& rs, const std::vector<Degree>& arrow_degrees);

/* Throws MathError("not_finite_dimensional") when completion is inconclusive. */
BasisAlgebra quotient_algebra(const Quiver& q, const std::vector<PathElement>& relations,
                              const std::vector<Degree>& arrow_degrees, int cutoff);

std::vector<PathElement> jacobian_relations(const GradedQP& qp);
BasisAlgebra jacobian_algebra(const GradedQP& qp, int cutoff = -1);

std::map<Degree, int> graded_dimension_vector(const BasisAlgebra& alg);

}  // namespace gqp

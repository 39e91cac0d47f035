/* presentation.hpp: algebras given by a quiver and relations */
#pragma once

#include "gqp/jacobian.hpp"

namespace gqp {

struct AlgebraPresentation {
    Quiver quiver;
    std::vector<PathElement> relations;
    std::vector<Degree> grading;               // per arrow; empty when ungraded
    std::vector<std::string> relation_arrows;  // names of the arrows added by tilde_qp; may be empty

    bool graded() const { return !grading.empty(); }
    /* Arrow degrees, or zero degrees of rank 1 when ungraded. */
    std::vector<Degree> arrow_degrees() const;
    bool operator==(const AlgebraPresentation& o) const;
};

/* Throws InputError for empty, non-uniform or non-homogeneous (when graded) relations. */
void validate(const AlgebraPresentation& p);

/* Throws MathError("not_finite_dimensional"). */
BasisAlgebra build_algebra(const AlgebraPresentation& p, int cutoff = -1);

/* kQ for an acyclic quiver with no relations. */
AlgebraPresentation path_algebra(const Quiver& q);

/* Presentation of A / AeA for the idempotent at v: terms through v are dropped. */
AlgebraPresentation delete_vertex(const AlgebraPresentation& p, int v);

Degree relation_degree(const AlgebraPresentation& p, const PathElement& r);

}  // namespace gqp

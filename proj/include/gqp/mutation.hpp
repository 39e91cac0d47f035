/* mutation.hpp: graded left/right QP mutation */
#pragma once

#include "gqp/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gqp {

enum class Side { Left, Right };

Side parse_side(const std::string& s);  // "L", "R", "left", "right"
std::string side_name(Side s);          // "L" or "R"

struct MutationStep {
    std::string vertex;
    Side side = Side::Left;
    std::vector<std::string> created;                           // [b a] arrows
    std::vector<std::pair<std::string, std::string>> reversed;  // old name -> starred name
    std::vector<std::pair<std::string, std::string>> removed;   // eliminated trivial pairs
};

/* No loop at v and no 2-cycle through v. Throws InputError on unknown vertex. */
bool check_mutable(const GradedQP& qp, const std::string& v);

/* Throws MathError("not_mutable"). */
GradedQP premutate(const GradedQP& qp, const std::string& v, Side side, MutationStep* log = nullptr);

/* Removes all quadratic potential terms; throws MathError("reduction_diverged"). cutoff < 0 picks the default. */
GradedQP reduce(const GradedQP& qp, int cutoff = -1, MutationStep* log = nullptr);

GradedQP mutate(const GradedQP& qp, const std::string& v, Side side, int cutoff = -1, MutationStep* log = nullptr);

struct MutationResult {
    GradedQP qp;
    std::vector<MutationStep> log;
};

/* Throws MathError("not_mutable") naming the failing step (0-based). */
MutationResult mutate_sequence(const GradedQP& qp, const std::vector<std::pair<std::string, Side>>& steps,
                               int cutoff = -1);
MutationResult mutate_sequence(const GradedQP& qp, const std::vector<std::string>& vertices, Side side,
                               int cutoff = -1);

/* Replace each occurrence of arrow z in every cycle by z + e, dropping cycles longer than cutoff. */
Potential substitute(const Quiver& q, const Potential& w, int z, const PathElement& e, int cutoff);

}  // namespace gqp

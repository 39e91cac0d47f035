/* presentation.cpp */
#include "gqp/presentation.hpp"

#include <algorithm>

namespace gqp {

std::vector<Degree> AlgebraPresentation::arrow_degrees() const
{
    if (graded())
        return grading;
    return std::vector<Degree>(quiver.num_arrows(), Degree{0});
}

bool AlgebraPresentation::operator==(const AlgebraPresentation& o) const
{
    return quiver == o.quiver && relations == o.relations && grading == o.grading &&
           relation_arrows == o.relation_arrows;
}

Degree relation_degree(const AlgebraPresentation& p, const PathElement& r)
{
    std::vector<Degree> deg = p.arrow_degrees();
    const Path& lead = r.begin()->first;
    Degree d = zero_degree(deg.empty() ? 1 : deg.front().size());
    for (int a : lead.arrows)
        d = d + deg[a];
    return d;
}

void validate(const AlgebraPresentation& p)
{
    if (p.graded() && (int)p.grading.size() != p.quiver.num_arrows())
        throw InputError("grading must give one degree per arrow");
    std::vector<Degree> deg = p.arrow_degrees();
    for (size_t i = 0; i < p.relations.size(); ++i) {
        const PathElement& r = p.relations[i];
        if (r.empty())
            throw InputError("relation " + std::to_string(i + 1) + " is zero");
        const Path& first = r.begin()->first;
        Degree d0 = relation_degree(p, r);
        for (const auto& [path, c] : r) {
            if (path.src != first.src || path.tgt != first.tgt)
                throw InputError("relation " + std::to_string(i + 1) + " mixes endpoints");
            if (path.length() < 2)
                throw InputError("relation " + std::to_string(i + 1) + " is not in the square of the arrow ideal");
            Degree d = zero_degree(d0.size());
            for (int a : path.arrows)
                d = d + deg[a];
            if (d != d0)
                throw InputError("relation " + std::to_string(i + 1) + " is not homogeneous");
        }
    }
    if (!p.relation_arrows.empty() && p.relation_arrows.size() != p.relations.size())
        throw InputError("relation_arrows must name every relation");
}

BasisAlgebra build_algebra(const AlgebraPresentation& p, int cutoff)
{
    validate(p);
    return quotient_algebra(p.quiver, p.relations, p.arrow_degrees(), cutoff);
}

AlgebraPresentation path_algebra(const Quiver& q)
{
    return AlgebraPresentation{q, {}, {}, {}};
}

AlgebraPresentation delete_vertex(const AlgebraPresentation& p, int v)
{
    const Quiver& q = p.quiver;
    std::vector<std::string> vs;
    for (int i = 0; i < q.num_vertices(); ++i)
        if (i != v)
            vs.push_back(q.vertex_name(i));
    std::vector<Arrow> arrows;
    std::vector<int> remap(q.num_arrows(), -1);
    AlgebraPresentation out;
    for (int a = 0; a < q.num_arrows(); ++a)
        if (q.source(a) != v && q.target(a) != v) {
            remap[a] = (int)arrows.size();
            arrows.push_back(q.arrows()[a]);
            if (p.graded())
                out.grading.push_back(p.grading[a]);
        }
    out.quiver = Quiver(vs, arrows);
    for (size_t i = 0; i < p.relations.size(); ++i) {
        const PathElement& r = p.relations[i];
        PathElement nr;
        for (const auto& [path, c] : r) {
            std::vector<int> ar;
            for (int a : path.arrows)
                ar.push_back(remap[a]);
            if (std::find(ar.begin(), ar.end(), -1) == ar.end())
                add_term(nr, make_path(out.quiver, ar), c);
        }
        if (nr.empty())
            continue;
        out.relations.push_back(nr);
        if (!p.relation_arrows.empty())
            out.relation_arrows.push_back(p.relation_arrows[i]);
    }
    return out;
}

}  // namespace gqp

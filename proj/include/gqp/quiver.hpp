/* quiver.hpp: quivers, paths, path algebra elements and potentials */
#pragma once

#include "gqp/errors.hpp"
#include "gqp/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gqp {

struct Arrow {
    std::string name, source, target;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return (int)vertices_.size(); }
    int num_arrows() const { return (int)arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const std::string& arrow_name(int a) const { return arrows_[a].name; }

    int vertex(const std::string& name) const;  // throws InputError
    int arrow(const std::string& name) const;   // throws InputError
    std::optional<int> find_vertex(const std::string& name) const;
    std::optional<int> find_arrow(const std::string& name) const;

    int source(int a) const { return src_[a]; }
    int target(int a) const { return tgt_[a]; }
    const std::vector<int>& arrows_from(int v) const { return out_[v]; }
    const std::vector<int>& arrows_to(int v) const { return in_[v]; }
    int count_arrows(int u, int v) const;

    bool operator==(const Quiver& o) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<int> src_, tgt_;
    std::vector<std::vector<int>> out_, in_;
    std::unordered_map<std::string, int> vidx_, aidx_;
};

/*
 * A path in traversal order: arrows[0] is traversed first. A lazy path e_v has
 * no arrows and src == tgt == v. The composite written "cba" (a, then b, then c)
 * is stored as {a, b, c}.
 */
struct Path {
    int src = 0, tgt = 0;
    std::vector<int> arrows;

    bool lazy() const { return arrows.empty(); }
    size_t length() const { return arrows.size(); }
    bool operator==(const Path& o) const { return src == o.src && tgt == o.tgt && arrows == o.arrows; }
    /* Length first, then lexicographic in arrow indices; lazy paths by vertex. */
    bool operator<(const Path& o) const;
};

Path lazy_path(int v);
Path arrow_path(const Quiver& q, int a);
/* Builds and checks a path from arrow indices; an empty list needs the vertex. */
Path make_path(const Quiver& q, const std::vector<int>& arrows, int vertex = -1);
Path make_path(const Quiver& q, const std::vector<std::string>& names);
/* p then q, or nullopt when not composable. */
std::optional<Path> concat(const Path& p, const Path& q);
std::vector<std::string> arrow_names(const Quiver& q, const Path& p);
std::string format_path(const Quiver& q, const Path& p);

using PathElement = std::map<Path, Rational>;

void add_term(PathElement& x, const Path& p, const Rational& c);
void add_to(PathElement& x, const PathElement& y, const Rational& c = 1);
/* Traversal product: terms of x followed by terms of y. */
PathElement multiply(const PathElement& x, const PathElement& y);
PathElement element(const Path& p, const Rational& c = 1);
std::string format_element(const Quiver& q, const PathElement& x);

/* Cycles stored in cyclic normal form. */
struct Potential {
    std::map<Path, Rational> cycles;

    bool empty() const { return cycles.empty(); }
    bool operator==(const Potential& o) const { return cycles == o.cycles; }
};

struct RawCycle {
    Rational coeff;
    std::vector<int> arrows;
};

/* The rotation with least arrow-index sequence. */
Path cyclic_rotation_normal(const Quiver& q, const Path& cycle);
Potential cyclic_normal_form(const Quiver& q, const std::vector<RawCycle>& raw);
void add_cycle(const Quiver& q, Potential& w, const Path& cycle, const Rational& c);
PathElement cyclic_derivative(const Quiver& q, const Potential& w, int arrow);

using Degree = std::vector<long>;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree operator-(const Degree& a);
Degree zero_degree(size_t k);

struct GradedQP {
    Quiver quiver;
    Potential potential;
    std::vector<Degree> degree;  // per arrow index
    Degree target_degree;

    size_t grading_rank() const { return target_degree.size(); }
    Degree path_degree(const Path& p) const;
    bool is_homogeneous() const;
    const Degree& degree_of(const std::string& arrow) const { return degree[quiver.arrow(arrow)]; }
};

struct QuiverIso {
    std::vector<int> vertex_map;  // Q1 vertex -> Q2 vertex
    std::vector<int> arrow_map;   // Q1 arrow -> Q2 arrow
};

/* Calls f for each isomorphism in deterministic order until f returns false. */
void for_each_isomorphism(const Quiver& q1, const Quiver& q2, const std::function<bool(const QuiverIso&)>& f);
std::vector<QuiverIso> quiver_isomorphisms(const Quiver& q1, const Quiver& q2);

Path transport(const Path& p, const QuiverIso& s);
Potential transport(const Potential& w, const QuiverIso& s, const Quiver& target);
QuiverIso compose(const QuiverIso& first, const QuiverIso& second);
QuiverIso inverse(const QuiverIso& s);

}  // namespace gqp

/* io.cpp */
#include "gqp/io.hpp"

#include <fstream>
#include <sstream>

namespace gqp {

namespace {

const json& field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw InputError(where + ": missing \"" + key + "\"");
    return obj.at(key);
}

std::string string_of(const json& v, const std::string& where)
{
    if (!v.is_string())
        throw InputError(where + ": expected a string");
    return v.get<std::string>();
}

Rational coeff_of(const json& v, const std::string& where)
{
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        }
        catch (const std::invalid_argument& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw InputError(where + ": coefficient must be a string or an integer");
}

Degree degree_of(const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return {v.get<long>()};
    if (!v.is_array() || v.empty())
        throw InputError(where + ": degree must be a non-empty integer array");
    Degree d;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw InputError(where + ": degree entries must be integers");
        d.push_back(x.get<long>());
    }
    return d;
}

std::vector<std::string> names_of(const json& v, const std::string& where)
{
    if (!v.is_array())
        throw InputError(where + ": expected an array of arrow names");
    std::vector<std::string> out;
    for (const auto& x : v)
        out.push_back(string_of(x, where));
    return out;
}

Quiver quiver_of(const json& doc)
{
    std::vector<std::string> vs;
    const json& jv = field(doc, "vertices", "document");
    if (!jv.is_array())
        throw InputError("vertices must be an array");
    for (const auto& v : jv) {
        if (v.is_number_integer())
            vs.push_back(std::to_string(v.get<long>()));
        else
            vs.push_back(string_of(v, "vertices"));
    }
    std::vector<Arrow> arrows;
    const json& ja = field(doc, "arrows", "document");
    if (!ja.is_array())
        throw InputError("arrows must be an array");
    auto vertex_name = [](const json& v, const std::string& where) {
        return v.is_number_integer() ? std::to_string(v.get<long>()) : string_of(v, where);
    };
    for (size_t i = 0; i < ja.size(); ++i) {
        std::string where = "arrow " + std::to_string(i);
        const json& a = ja[i];
        arrows.push_back({string_of(field(a, "name", where), where), vertex_name(field(a, "from", where), where),
                          vertex_name(field(a, "to", where), where)});
    }
    return Quiver(vs, arrows);
}

/* Arrow degrees when every arrow carries one, empty when none do. */
std::vector<Degree> arrow_degrees_of(const json& doc)
{
    std::vector<Degree> out;
    size_t with = 0;
    const json& ja = doc.at("arrows");
    for (size_t i = 0; i < ja.size(); ++i)
        if (ja[i].contains("degree")) {
            out.push_back(degree_of(ja[i]["degree"], "arrow " + std::to_string(i)));
            ++with;
        }
    if (with != 0 && with != ja.size())
        throw InputError("either all arrows or none carry a degree");
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i].size() != out[0].size())
            throw InputError("arrow degrees have different lengths");
    return out;
}

json arrows_json(const Quiver& q, const std::vector<Degree>* deg)
{
    json arr = json::array();
    for (int a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrows()[a];
        json o = {{"name", ar.name}, {"from", ar.source}, {"to", ar.target}};
        if (deg)
            o["degree"] = degree_json((*deg)[a]);
        arr.push_back(o);
    }
    return arr;
}

}  // namespace

DocKind document_kind(const json& doc)
{
    if (!doc.is_object())
        throw InputError("document must be a JSON object");
    return doc.contains("relations") ? DocKind::Presentation : DocKind::QP;
}

json parse_json_text(const std::string& text)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

json degree_json(const Degree& d)
{
    json a = json::array();
    for (long x : d)
        a.push_back(x);
    return a;
}

json path_json(const Quiver& q, const Path& p)
{
    if (p.lazy())
        return json{{"vertex", q.vertex_name(p.src)}};
    return json(arrow_names(q, p));
}

GradedQP qp_from_json(const json& doc)
{
    try {
        Quiver q = quiver_of(doc);
        std::vector<Degree> deg = arrow_degrees_of(doc);
        Degree target;
        if (doc.contains("target_degree"))
            target = degree_of(doc["target_degree"], "target_degree");
        size_t rank = !target.empty() ? target.size() : (!deg.empty() ? deg[0].size() : 1);
        if (target.empty())
            target = zero_degree(rank);
        if (deg.empty())
            deg.assign(q.num_arrows(), zero_degree(rank));
        if (!deg.empty() && deg[0].size() != rank)
            throw InputError("arrow degrees and target_degree have different lengths");
        Potential w;
        if (doc.contains("potential")) {
            const json& jp = doc["potential"];
            if (!jp.is_array())
                throw InputError("potential must be an array");
            for (size_t i = 0; i < jp.size(); ++i) {
                std::string where = "potential term " + std::to_string(i);
                Rational c = coeff_of(field(jp[i], "coeff", where), where);
                auto names = names_of(field(jp[i], "cycle", where), where);
                if (names.empty())
                    throw InputError(where + ": empty cycle");
                Path p = make_path(q, names);
                if (p.src != p.tgt)
                    throw InputError(where + ": cycle is not closed");
                add_cycle(q, w, p, c);
            }
        }
        return GradedQP{q, w, deg, target};
    }
    catch (const json::exception& e) {
        throw InputError(std::string("malformed QP document: ") + e.what());
    }
}

json to_json(const GradedQP& qp)
{
    json doc;
    doc["vertices"] = qp.quiver.vertices();
    doc["arrows"] = arrows_json(qp.quiver, &qp.degree);
    json pot = json::array();
    for (const auto& [cyc, c] : qp.potential.cycles)
        pot.push_back(json{{"coeff", to_string(c)}, {"cycle", arrow_names(qp.quiver, cyc)}});
    doc["potential"] = pot;
    doc["target_degree"] = degree_json(qp.target_degree);
    return doc;
}

AlgebraPresentation presentation_from_json(const json& doc)
{
    try {
        AlgebraPresentation p;
        p.quiver = quiver_of(doc);
        p.grading = arrow_degrees_of(doc);
        const json& jr = field(doc, "relations", "document");
        if (!jr.is_array())
            throw InputError("relations must be an array");
        for (size_t i = 0; i < jr.size(); ++i) {
            std::string where = "relation " + std::to_string(i);
            if (!jr[i].is_array())
                throw InputError(where + ": expected an array of terms");
            PathElement r;
            for (const auto& term : jr[i]) {
                Rational c = coeff_of(field(term, "coeff", where), where);
                auto names = names_of(field(term, "path", where), where);
                if (names.empty())
                    throw InputError(where + ": empty path");
                add_term(r, make_path(p.quiver, names), c);
            }
            p.relations.push_back(std::move(r));
        }
        if (doc.contains("relation_arrows"))
            p.relation_arrows = names_of(doc["relation_arrows"], "relation_arrows");
        validate(p);
        return p;
    }
    catch (const json::exception& e) {
        throw InputError(std::string("malformed presentation document: ") + e.what());
    }
}

json to_json(const AlgebraPresentation& p)
{
    json doc;
    doc["vertices"] = p.quiver.vertices();
    doc["arrows"] = arrows_json(p.quiver, p.graded() ? &p.grading : nullptr);
    json rels = json::array();
    for (const auto& r : p.relations) {
        json terms = json::array();
        for (const auto& [path, c] : r)
            terms.push_back(json{{"coeff", to_string(c)}, {"path", arrow_names(p.quiver, path)}});
        rels.push_back(terms);
    }
    doc["relations"] = rels;
    if (!p.relation_arrows.empty())
        doc["relation_arrows"] = p.relation_arrows;
    return doc;
}

json to_json(const MutationStep& step)
{
    json removed = json::array();
    for (const auto& [x, y] : step.removed)
        removed.push_back(json::array({x, y}));
    json reversed = json::object();
    for (const auto& [a, b] : step.reversed)
        reversed[a] = b;
    return json{{"vertex", step.vertex},
                {"side", side_name(step.side)},
                {"created", step.created},
                {"reversed", reversed},
                {"removed", removed}};
}

json to_json(const BasisAlgebra& alg)
{
    json basis = json::array();
    for (size_t i = 0; i < alg.basis.size(); ++i) {
        const Path& p = alg.basis[i];
        basis.push_back(json{{"path", path_json(alg.quiver, p)},
                             {"from", alg.quiver.vertex_name(p.src)},
                             {"to", alg.quiver.vertex_name(p.tgt)},
                             {"degree", degree_json(alg.degrees[i])}});
    }
    json mult = json::array();
    for (size_t x = 0; x < alg.basis.size(); ++x)
        for (size_t y = 0; y < alg.basis.size(); ++y)
            for (const auto& [z, c] : alg.mult[x][y])
                mult.push_back(json::array({x, y, z, to_string(c)}));
    json gdv = json::array();
    for (const auto& [d, n] : graded_dimension_vector(alg))
        gdv.push_back(json{{"degree", degree_json(d)}, {"dim", n}});
    return json{{"dim", alg.dim()}, {"basis", basis}, {"multiplication", mult}, {"graded_dimensions", gdv}};
}

}  // namespace gqp

#include "commands.hpp"

#include <functional>
#include <sstream>

namespace gqp::cli {

namespace {

Outcome guarded(const std::function<Outcome()>& f)
{
    try {
        return f();
    }
    catch (const InputError& e) {
        return {1, error_json(e)};
    }
    catch (const MathError& e) {
        return {2, error_json(e)};
    }
}

AlgebraPresentation load_presentation_file(const std::string& file)
{
    json doc = load_json_file(file);
    if (document_kind(doc) != DocKind::Presentation)
        throw InputError(file + ": expected a presentation document (with \"relations\")");
    return presentation_from_json(doc);
}

json vertex_map_json(const GradedQP& qp, const std::vector<Degree>& v)
{
    json out = json::object();
    for (int i = 0; i < qp.quiver.num_vertices(); ++i)
        out[qp.quiver.vertex_name(i)] = v[i].size() == 1 ? json(v[i][0]) : degree_json(v[i]);
    return out;
}

json iso_json(const Quiver& q1, const Quiver& q2, const QuiverIso& s)
{
    json vs = json::object(), as = json::object();
    for (size_t i = 0; i < s.vertex_map.size(); ++i)
        vs[q1.vertex_name(i)] = q2.vertex_name(s.vertex_map[i]);
    for (size_t a = 0; a < s.arrow_map.size(); ++a)
        as[q1.arrow_name(a)] = q2.arrow_name(s.arrow_map[a]);
    return json{{"vertices", vs}, {"arrows", as}};
}

json names_json(const std::map<std::string, long>& m)
{
    json out = json::object();
    for (const auto& [k, v] : m)
        out[k] = v;
    return out;
}

json log_json(const std::vector<MutationStep>& log)
{
    json out = json::array();
    for (const auto& s : log)
        out.push_back(to_json(s));
    return out;
}

void text_value(std::ostream& os, const json& v, int indent);

bool scalar(const json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool qp_doc(const json& v)
{
    return v.is_object() && v.contains("vertices") && v.contains("arrows") && v.contains("target_degree");
}

bool covering_doc(const json& v) { return v.is_object() && v.contains("window") && v.contains("levels"); }

std::string degree_text(const json& d) { return d.size() == 1 ? d[0].dump() : d.dump(); }

void text_qp(std::ostream& os, const json& v, int indent)
{
    std::string pad(indent, ' ');
    os << pad << "vertices:";
    for (const auto& x : v["vertices"])
        os << ' ' << scalar_text(x);
    os << '\n' << pad << "arrows:\n";
    for (const auto& a : v["arrows"]) {
        os << pad << "  " << scalar_text(a["name"]) << ": " << scalar_text(a["from"]) << " -> " << scalar_text(a["to"]);
        if (a.contains("degree"))
            os << "  deg " << degree_text(a["degree"]);
        os << '\n';
    }
    os << pad << "potential:";
    if (v["potential"].empty())
        os << " 0";
    os << '\n';
    for (const auto& t : v["potential"]) {
        os << pad << "  " << scalar_text(t["coeff"]) << " *";
        for (const auto& a : t["cycle"])
            os << ' ' << scalar_text(a);
        os << '\n';
    }
    os << pad << "target degree: " << degree_text(v["target_degree"]) << '\n';
}

void text_covering(std::ostream& os, const json& v)
{
    const json& levels = v["levels"];
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        os << "level " << (*it)["level"].dump() << ":";
        for (const auto& x : (*it)["vertices"])
            os << ' ' << scalar_text(x);
        os << '\n';
    }
    for (const auto& a : v["arrows"])
        os << scalar_text(a["name"]) << ": (" << scalar_text(a["from"][0]) << ',' << a["from"][1].dump() << ") -> ("
           << scalar_text(a["to"][0]) << ',' << a["to"][1].dump() << ")\n";
}

void text_object(std::ostream& os, const json& v, int indent)
{
    std::string pad(indent, ' ');
    for (const auto& [k, x] : v.items()) {
        if (scalar(x)) {
            os << pad << k << ": " << scalar_text(x) << '\n';
            continue;
        }
        bool flat = x.is_array() && std::all_of(x.begin(), x.end(), scalar);
        if (flat) {
            os << pad << k << ":";
            for (const auto& y : x)
                os << ' ' << scalar_text(y);
            os << '\n';
            continue;
        }
        os << pad << k << ":\n";
        text_value(os, x, indent + 2);
    }
}

void text_value(std::ostream& os, const json& v, int indent)
{
    std::string pad(indent, ' ');
    if (qp_doc(v))
        text_qp(os, v, indent);
    else if (v.is_object())
        text_object(os, v, indent);
    else if (v.is_array()) {
        for (const auto& x : v) {
            if (scalar(x))
                os << pad << "- " << scalar_text(x) << '\n';
            else if (x.is_array() && std::all_of(x.begin(), x.end(), scalar)) {
                os << pad << "-";
                for (const auto& y : x)
                    os << ' ' << scalar_text(y);
                os << '\n';
            }
            else {
                os << pad << "-\n";
                text_value(os, x, indent + 2);
            }
        }
    }
    else
        os << pad << scalar_text(v) << '\n';
}

}  // namespace

std::vector<std::string> split_sequence(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        if (b == std::string::npos)
            throw InputError("empty vertex in sequence \"" + s + "\"");
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

GradedQP qp_of_document(const json& doc, int cutoff)
{
    if (document_kind(doc) == DocKind::Presentation)
        return tilde_qp(presentation_from_json(doc), cutoff);
    return qp_from_json(doc);
}

json mutation_json(const MutationResult& r) { return json{{"qp", to_json(r.qp)}, {"log", log_json(r.log)}}; }

json certificate_json(const GradedQP& qp1, const GradedQP& qp2, const EquivalenceCertificate& c)
{
    json out{{"verdict", c.equivalent ? "Equivalent" : "NotEquivalent"}, {"isomorphic", c.isomorphic}};
    if (c.isomorphic)
        out["sigma"] = iso_json(qp1.quiver, qp2.quiver, c.sigma);
    if (c.equivalent)
        out["shift"] = vertex_map_json(qp1, c.shift);
    else if (!c.witness.empty()) {
        json w = json::array();
        for (auto [a, sign] : c.witness)
            w.push_back(json{{"arrow", qp1.quiver.arrow_name(a)}, {"sign", sign}});
        out["witness"] = w;
    }
    return out;
}

json mutable_json(const GradedQP& qp)
{
    json out = json::object();
    for (const auto& v : qp.quiver.vertices())
        out[v] = check_mutable(qp, v);
    return out;
}

json error_json(const InputError& e) { return json{{"error", "input"}, {"message", e.what()}}; }

json error_json(const MathError& e) { return json{{"error", "math"}, {"reason", e.reason()}, {"message", e.what()}}; }

Outcome cmd_tilde(const std::string& file, const Options& opt, bool bigraded)
{
    return guarded([&] {
        auto p = load_presentation_file(file);
        return Outcome{0, to_json(bigraded ? bigraded_tilde_qp(p, opt.cutoff) : tilde_qp(p, opt.cutoff))};
    });
}

Outcome cmd_jacobian(const std::string& file, const Options& opt)
{
    return guarded([&] {
        json doc = load_json_file(file);
        if (document_kind(doc) == DocKind::Presentation)
            return Outcome{0, to_json(build_algebra(presentation_from_json(doc), opt.cutoff))};
        return Outcome{0, to_json(jacobian_algebra(qp_from_json(doc), opt.cutoff))};
    });
}

Outcome cmd_mutate(const std::string& file, const std::string& sequence, const Options& opt)
{
    return guarded([&] {
        json doc = load_json_file(file);
        int cutoff = opt.cutoff;
        std::vector<std::pair<std::string, Side>> steps;
        if (sequence.empty() && doc.is_object() && doc.contains("qp") && doc.contains("sequence")) {
            try {
                for (const auto& s : doc["sequence"])
                    steps.push_back({s.at("vertex").get<std::string>(), parse_side(s.value("side", "L"))});
                if (doc.contains("cutoff") && cutoff < 0)
                    cutoff = doc["cutoff"].get<int>();
            }
            catch (const json::exception& e) {
                throw InputError(std::string("malformed mutation request: ") + e.what());
            }
            doc = json(doc["qp"]);
        }
        else
            for (const auto& v : split_sequence(sequence))
                steps.push_back({v, opt.side});
        GradedQP qp = qp_of_document(doc, cutoff);
        return Outcome{0, mutation_json(mutate_sequence(qp, steps, cutoff))};
    });
}

Outcome cmd_check_derived_eq(const std::string& file1, const std::string& file2, const std::string& sequence,
                             const Options& opt)
{
    return guarded([&] {
        auto p1 = load_presentation_file(file1);
        auto p2 = load_presentation_file(file2);
        auto v = derived_equivalence_via_mutation(p1, p2, split_sequence(sequence), opt.side, opt.cutoff,
                                                  opt.window);
        json out = certificate_json(v.left, v.right, v.cert);
        out["left"] = to_json(v.left);
        out["right"] = to_json(v.right);
        out["log"] = log_json(v.log);
        return Outcome{0, out};
    });
}

Outcome cmd_slices(const std::string& file, long bound, const Options& opt)
{
    return guarded([&] {
        if (bound < 0)
            throw InputError("bound must be non-negative");
        auto p = load_presentation_file(file);
        GradedQP tilde = tilde_qp(p, opt.cutoff);
        DerivedCategory d(build_algebra(p, opt.cutoff));
        int window = opt.window < 0 ? default_window(d.algebra()) : opt.window;
        auto stop = tau2_finite(d, window);
        if (!stop)
            throw MathError("inconclusive", "tilde algebra does not vanish within the window");
        SliceTester tester(d, tilde, *stop);
        json slices = json::array();
        for (const auto& s : tester.enumerate(bound)) {
            json m = json::object();
            for (int i = 0; i < p.quiver.num_vertices(); ++i)
                m[p.quiver.vertex_name(i)] = s[i];
            slices.push_back(m);
        }
        json out{{"stop", *stop}, {"window", window}, {"bound", bound}, {"count", slices.size()}, {"slices", slices}};
        return Outcome{0, out};
    });
}

Outcome cmd_compat(const std::string& file1, const std::string& file2, const std::string& sequence,
                   const Options& opt)
{
    return guarded([&] {
        auto p1 = load_presentation_file(file1);
        auto p2 = load_presentation_file(file2);
        auto c = compatibility_check(p1, p2, split_sequence(sequence), opt.cutoff, opt.window);
        json cert{{"compatible", c.compatible}, {"sequence", c.sequence}, {"log", log_json(c.log)}};
        if (c.failed_condition >= 3 || c.compatible)
            cert["mutated"] = to_json(c.mutated);
        if (!c.compatible) {
            cert["failed_condition"] = c.failed_condition;
            json out{{"error", "math"},
                     {"reason", "condition_" + std::to_string(c.failed_condition)},
                     {"message", c.detail},
                     {"certificate", cert}};
            return Outcome{2, out};
        }
        Quiver second = tilde_qp(p2, opt.cutoff).quiver;
        cert["sigma"] = iso_json(c.mutated.quiver, second, c.sigma);
        cert["bigraded"] = to_json(c.bigraded);
        cert["back"] = to_json(c.back);
        cert["grading1"] = names_json(c.grading1);
        cert["grading2"] = names_json(c.grading2);
        return Outcome{0, cert};
    });
}

Outcome cmd_covering(const std::string& file, long qmin, long qmax, const Options& opt, int component)
{
    return guarded([&] {
        if (qmin > qmax)
            throw InputError("empty window");
        json doc = load_json_file(file);
        Quiver q;
        std::vector<Degree> deg;
        std::string source;
        if (document_kind(doc) == DocKind::Presentation) {
            auto p = presentation_from_json(doc);
            if (p.graded()) {
                q = p.quiver;
                deg = p.grading;
                source = "grading";
            }
            else {
                GradedQP t = tilde_qp(p, opt.cutoff);
                q = t.quiver;
                deg = t.degree;
                source = "tilde";
            }
        }
        else {
            GradedQP t = qp_from_json(doc);
            q = t.quiver;
            deg = t.degree;
            source = "grading";
        }
        if (component < 0 || (!deg.empty() && (size_t)component >= deg.front().size()))
            throw InputError("missing grading component " + std::to_string(component));
        json levels = json::array();
        for (long l = qmin; l <= qmax; ++l)
            levels.push_back(json{{"level", l}, {"vertices", q.vertices()}});
        json arrows = json::array();
        for (long l = qmin; l <= qmax; ++l)
            for (int a = 0; a < q.num_arrows(); ++a) {
                long d = deg[a][component];
                if (l + d < qmin || l + d > qmax)
                    continue;
                arrows.push_back(json{{"name", q.arrow_name(a)},
                                      {"from", json::array({q.vertex_name(q.source(a)), l})},
                                      {"to", json::array({q.vertex_name(q.target(a)), l + d})},
                                      {"degree", d}});
            }
        return Outcome{0, json{{"window", json::array({qmin, qmax})},
                               {"source", source},
                               {"component", component},
                               {"levels", levels},
                               {"arrows", arrows}}};
    });
}

std::string serialize(const json& body) { return body.dump(2) + "\n"; }

std::string render(const Outcome& out, bool text)
{
    if (!text)
        return serialize(out.body);
    std::ostringstream os;
    if (covering_doc(out.body))
        text_covering(os, out.body);
    else
        text_value(os, out.body, 0);
    return os.str();
}

}  // namespace gqp::cli

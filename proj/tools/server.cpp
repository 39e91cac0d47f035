#include "server.hpp"

#include <filesystem>
#include <iostream>

namespace gqp::cli {

namespace {

void reply(httplib::Response& res, int status, const json& body)
{
    res.status = status;
    res.set_content(serialize(body), "application/json");
}

void not_found(httplib::Response& res, const std::string& what)
{
    reply(res, 404, json{{"error", "not_found"}, {"message", what}});
}

void handle(httplib::Response& res, const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const InputError& e) {
        reply(res, 400, error_json(e));
    }
    catch (const MathError& e) {
        reply(res, 422, error_json(e));
    }
    catch (const std::exception& e) {
        reply(res, 500, json{{"error", "internal"}, {"message", e.what()}});
    }
}

json body_of(const httplib::Request& req)
{
    if (req.body.empty())
        return json::object();
    return parse_json_text(req.body);
}

int cutoff_of(const httplib::Request& req, const json& body)
{
    if (body.is_object() && body.contains("cutoff")) {
        if (!body["cutoff"].is_number_integer())
            throw InputError("cutoff must be an integer");
        return body["cutoff"].get<int>();
    }
    if (req.has_param("cutoff")) {
        try {
            return std::stoi(req.get_param_value("cutoff"));
        }
        catch (const std::exception&) {
            throw InputError("cutoff must be an integer");
        }
    }
    return -1;
}

std::vector<std::pair<std::string, Side>> steps_of(const json& body)
{
    std::vector<std::pair<std::string, Side>> out;
    auto one = [&](const json& s) {
        if (!s.is_object() || !s.contains("vertex") || !s["vertex"].is_string())
            throw InputError("mutation step needs a \"vertex\" string");
        std::string side = "L";
        if (s.contains("side")) {
            if (!s["side"].is_string())
                throw InputError("side must be a string");
            side = s["side"].get<std::string>();
        }
        out.push_back({s["vertex"].get<std::string>(), parse_side(side)});
    };
    if (body.is_object() && body.contains("sequence")) {
        if (!body["sequence"].is_array())
            throw InputError("sequence must be an array");
        for (const auto& s : body["sequence"])
            one(s);
    }
    else
        one(body);
    return out;
}

}  // namespace

Service::Service(const std::string& preset_dir)
{
    if (!std::filesystem::is_directory(preset_dir))
        return;
    for (const auto& e : std::filesystem::directory_iterator(preset_dir)) {
        if (e.path().extension() != ".json")
            continue;
        std::string name = e.path().stem().string();
        try {
            json doc = load_json_file(e.path().string());
            presets_[name] = Preset{doc, qp_of_document(doc, -1)};
        }
        catch (const std::exception& ex) {
            std::cerr << "skipping preset " << name << ": " << ex.what() << "\n";
        }
    }
}

std::shared_ptr<Session> Service::find(const std::string& id)
{
    std::lock_guard<std::mutex> g(sessions_lock_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

json Service::session_json(const std::string& id, const Session& s) const
{
    json history = json::array();
    for (const auto& [qp, step] : s.undo)
        history.push_back(to_json(step));
    return json{{"id", id}, {"qp", to_json(s.current)}, {"mutable", mutable_json(s.current)}, {"history", history}};
}

const GradedQP* Service::target(const std::string& name, GradedQP& scratch)
{
    auto it = presets_.find(name);
    if (it != presets_.end())
        return &it->second.qp;
    if (auto s = find(name)) {
        std::lock_guard<std::mutex> g(s->lock);
        scratch = s->current;
        return &scratch;
    }
    return nullptr;
}

void Service::install(httplib::Server& srv)
{
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });

    srv.Get("/health", [](const httplib::Request&, httplib::Response& res) { reply(res, 200, {{"status", "ok"}}); });

    srv.Get("/presets", [this](const httplib::Request&, httplib::Response& res) {
        json out = json::array();
        for (const auto& [name, p] : presets_)
            out.push_back(json{{"name", name},
                               {"kind", document_kind(p.document) == DocKind::Presentation ? "presentation" : "qp"},
                               {"document", p.document}});
        reply(res, 200, out);
    });

    srv.Get("/presets/:name", [this](const httplib::Request& req, httplib::Response& res) {
        auto it = presets_.find(req.path_params.at("name"));
        if (it == presets_.end())
            return not_found(res, "no preset " + req.path_params.at("name"));
        reply(res, 200, it->second.document);
    });

    srv.Post("/session", [this](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            json body = body_of(req);
            auto s = std::make_shared<Session>();
            if (body.is_object() && body.contains("preset")) {
                auto it = presets_.find(body["preset"].is_string() ? body["preset"].get<std::string>() : "");
                if (it == presets_.end())
                    return not_found(res, "no preset " + body["preset"].dump());
                s->current = it->second.qp;
            }
            else
                s->current = qp_of_document(body, cutoff_of(req, body));
            std::string id;
            {
                std::lock_guard<std::mutex> g(sessions_lock_);
                id = "s" + std::to_string(next_id_++);
                sessions_[id] = s;
            }
            reply(res, 201, session_json(id, *s));
        });
    });

    srv.Get("/session/:id", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string& id = req.path_params.at("id");
        auto s = find(id);
        if (!s)
            return not_found(res, "no session " + id);
        std::lock_guard<std::mutex> g(s->lock);
        reply(res, 200, session_json(id, *s));
    });

    srv.Post("/session/:id/mutate", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string& id = req.path_params.at("id");
        auto s = find(id);
        if (!s)
            return not_found(res, "no session " + id);
        handle(res, [&] {
            json body = body_of(req);
            auto steps = steps_of(body);
            int cutoff = cutoff_of(req, body);
            std::lock_guard<std::mutex> g(s->lock);
            // all steps succeed or the session is left unchanged
            MutationResult total{s->current, {}};
            std::vector<std::pair<GradedQP, MutationStep>> pushed;
            for (const auto& step : steps) {
                auto r = mutate_sequence(total.qp, {step}, cutoff);
                pushed.push_back({std::move(total.qp), r.log.front()});
                total.qp = std::move(r.qp);
                total.log.push_back(r.log.front());
            }
            for (auto& p : pushed)
                s->undo.push_back(std::move(p));
            s->current = total.qp;
            reply(res, 200, mutation_json(total));
        });
    });

    srv.Post("/session/:id/undo", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string& id = req.path_params.at("id");
        auto s = find(id);
        if (!s)
            return not_found(res, "no session " + id);
        std::lock_guard<std::mutex> g(s->lock);
        if (s->undo.empty())
            return reply(res, 409, json{{"error", "state"}, {"message", "nothing to undo"}});
        auto [qp, step] = std::move(s->undo.back());
        s->undo.pop_back();
        s->current = std::move(qp);
        reply(res, 200, json{{"qp", to_json(s->current)}, {"undone", to_json(step)}});
    });

    srv.Get("/session/:id/jacobian", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string& id = req.path_params.at("id");
        auto s = find(id);
        if (!s)
            return not_found(res, "no session " + id);
        handle(res, [&] {
            int cutoff = cutoff_of(req, json::object());
            GradedQP qp;
            {
                std::lock_guard<std::mutex> g(s->lock);
                qp = s->current;
            }
            reply(res, 200, to_json(jacobian_algebra(qp, cutoff)));
        });
    });

    srv.Get("/session/:id/equivalence", [this](const httplib::Request& req, httplib::Response& res) {
        const std::string& id = req.path_params.at("id");
        auto s = find(id);
        if (!s)
            return not_found(res, "no session " + id);
        if (!req.has_param("against"))
            return reply(res, 400, json{{"error", "input"}, {"message", "missing parameter against"}});
        std::string against = req.get_param_value("against");
        handle(res, [&] {
            GradedQP scratch;
            const GradedQP* t = target(against, scratch);
            if (!t)
                return not_found(res, "no preset or session " + against);
            GradedQP qp;
            {
                std::lock_guard<std::mutex> g(s->lock);
                qp = s->current;
            }
            json out = certificate_json(qp, *t, graded_equivalent(qp, *t));
            out["against"] = against;
            reply(res, 200, out);
        });
    });
}

int cmd_serve(const std::string& host, int port, const std::string& preset_dir)
{
    Service service(preset_dir);
    httplib::Server srv;
    service.install(srv);
    if (!srv.bind_to_port(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
    }
    std::cerr << "listening on " << host << ":" << port << "\n";
    return srv.listen_after_bind() ? 0 : 1;
}

}  // namespace gqp::cli

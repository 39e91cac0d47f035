// JSON API for the explorer: named in-memory sessions holding a graded QP and its undo stack.
#pragma once

#include "commands.hpp"

#include <httplib.h>

#include <memory>
#include <mutex>

namespace gqp::cli {

struct Session {
    std::mutex lock;  // serializes mutations of this session
    GradedQP current;
    std::vector<std::pair<GradedQP, MutationStep>> undo;
};

class Service {
public:
    // Loads every *.json in preset_dir; presentations are served through their tilde QP.
    explicit Service(const std::string& preset_dir);
    void install(httplib::Server& srv);

private:
    struct Preset {
        json document;
        GradedQP qp;
    };

    std::shared_ptr<Session> find(const std::string& id);
    json session_json(const std::string& id, const Session& s) const;
    const GradedQP* target(const std::string& name, GradedQP& scratch);

    std::map<std::string, Preset> presets_;
    std::mutex sessions_lock_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    long next_id_ = 1;
};

int cmd_serve(const std::string& host, int port, const std::string& preset_dir);

}  // namespace gqp::cli

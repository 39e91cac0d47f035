#include "commands.hpp"
#include "server.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace gqp;
using namespace gqp::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Graded quivers with potential: tilde QPs, mutation, derived equivalence"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string side = "L", format = "json";
    app.add_option("--cutoff", opt.cutoff, "path length cutoff for reductions (default: automatic)");
    app.add_option("--window", opt.window, "Serre powers searched for tau_2-finiteness (default: automatic)");
    app.add_option("--side", side, "mutation side")->check(CLI::IsMember({"L", "R"}));
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string file, file2, sequence, host = "127.0.0.1";
    const char* env_presets = std::getenv("GQP_PRESETS");
    std::string presets = env_presets ? env_presets : GQP_DATA_DIR "/presets";
    bool bigraded = false;
    long bound = 3, qmin = 0, qmax = 2;
    int component = 0, port = 8080;

    auto* tilde = app.add_subcommand("tilde", "tilde QP of a presentation of global dimension at most 2");
    tilde->add_option("file", file, "presentation document")->required();
    tilde->add_flag("--bigraded", bigraded, "bigrading from the arrow grading of the presentation");

    auto* jac = app.add_subcommand("jacobian", "basis and multiplication of a Jacobian or quotient algebra");
    jac->add_option("file", file, "QP or presentation document")->required();

    auto* mut = app.add_subcommand("mutate", "graded mutation along a sequence of vertices");
    mut->add_option("file", file, "QP, presentation or mutation request document")->required();
    mut->add_option("sequence", sequence, "comma separated vertices, e.g. 3,6");

    auto* deq = app.add_subcommand("check-derived-eq", "compare graded tilde QPs of two presentations");
    deq->add_option("file1", file, "first presentation")->required();
    deq->add_option("file2", file2, "second presentation")->required();
    deq->add_option("--sequence", sequence, "mutate the first tilde QP first");

    auto* sl = app.add_subcommand("slices", "slices S^{-d} Lambda with entries at most a bound");
    sl->add_option("file", file, "presentation document")->required();
    sl->add_option("--bound", bound, "largest entry of d")->check(CLI::NonNegativeNumber);

    auto* cp = app.add_subcommand("compat", "compatible gradings along a left mutation sequence");
    cp->add_option("file1", file, "first presentation")->required();
    cp->add_option("file2", file2, "second presentation")->required();
    cp->add_option("--sequence", sequence, "comma separated vertices");

    auto* cov = app.add_subcommand("covering", "window of the Z-covering of a graded quiver");
    cov->add_option("file", file, "QP or presentation document")->required();
    cov->add_option("--min", qmin, "lowest level");
    cov->add_option("--max", qmax, "highest level");
    cov->add_option("--component", component, "grading component");

    auto* srv = app.add_subcommand("serve", "HTTP API for the explorer");
    srv->add_option("--host", host, "bind address");
    srv->add_option("--port", port, "port");
    srv->add_option("--presets", presets, "directory of preset documents");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    opt.side = parse_side(side);
    opt.text = format == "text";

    Outcome out;
    if (*tilde)
        out = cmd_tilde(file, opt, bigraded);
    else if (*jac)
        out = cmd_jacobian(file, opt);
    else if (*mut)
        out = cmd_mutate(file, sequence, opt);
    else if (*deq)
        out = cmd_check_derived_eq(file, file2, sequence, opt);
    else if (*sl)
        out = cmd_slices(file, bound, opt);
    else if (*cp)
        out = cmd_compat(file, file2, sequence, opt);
    else if (*cov)
        out = cmd_covering(file, qmin, qmax, opt, component);
    else
        return cmd_serve(host, port, presets);

    std::cout << render(out, opt.text);
    return out.code;
}

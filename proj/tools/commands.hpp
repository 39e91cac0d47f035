// Subcommands of the gqp tool. Each returns the exit code and the JSON printed on stdout.
#pragma once

#include "gqp/equivalence.hpp"
#include "gqp/io.hpp"

#include <string>
#include <vector>

namespace gqp::cli {

struct Options {
    int cutoff = -1;
    int window = -1;
    Side side = Side::Left;
    bool text = false;
};

// code 0: success, 1: input or IO error, 2: mathematical failure (body carries "reason")
struct Outcome {
    int code = 0;
    json body;
};

Outcome cmd_tilde(const std::string& file, const Options& opt, bool bigraded = false);
Outcome cmd_jacobian(const std::string& file, const Options& opt);
// sequence "3,6"; when empty the file may be a mutation request {qp, sequence, cutoff}
Outcome cmd_mutate(const std::string& file, const std::string& sequence, const Options& opt);
Outcome cmd_check_derived_eq(const std::string& file1, const std::string& file2, const std::string& sequence,
                             const Options& opt);
Outcome cmd_slices(const std::string& file, long bound, const Options& opt);
Outcome cmd_compat(const std::string& file1, const std::string& file2, const std::string& sequence,
                   const Options& opt);
Outcome cmd_covering(const std::string& file, long qmin, long qmax, const Options& opt, int component = 0);

// Output as printed: pretty JSON, or the text rendering.
std::string render(const Outcome& out, bool text);
std::string serialize(const json& body);

// Shared with the server.
std::vector<std::string> split_sequence(const std::string& s);
GradedQP qp_of_document(const json& doc, int cutoff);
json mutation_json(const MutationResult& r);
json certificate_json(const GradedQP& qp1, const GradedQP& qp2, const EquivalenceCertificate& c);
json mutable_json(const GradedQP& qp);
json error_json(const InputError& e);
json error_json(const MathError& e);

}  // namespace gqp::cli

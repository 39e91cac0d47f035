/* io.hpp: JSON documents for quivers with potential, presentations and results */
#pragma once

#include "gqp/mutation.hpp"
#include "gqp/presentation.hpp"

#include <json.hpp>

namespace gqp {

using json = nlohmann::ordered_json;

enum class DocKind { QP, Presentation };

/* A document with a "relations" key is a presentation; otherwise a QP. */
DocKind document_kind(const json& doc);

/* All parsers throw InputError. */
json parse_json_text(const std::string& text);
json load_json_file(const std::string& path);

GradedQP qp_from_json(const json& doc);
json to_json(const GradedQP& qp);

AlgebraPresentation presentation_from_json(const json& doc);
json to_json(const AlgebraPresentation& p);

json to_json(const MutationStep& step);
json to_json(const BasisAlgebra& alg);
json degree_json(const Degree& d);
json path_json(const Quiver& q, const Path& p);

}  // namespace gqp

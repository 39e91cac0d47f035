// Loads the shipped example corpus.
#pragma once

#include "gqp/io.hpp"

#include <string>

inline gqp::AlgebraPresentation load_presentation(const std::string& name)
{
    return gqp::presentation_from_json(gqp::load_json_file(std::string(GQP_DATA_DIR) + "/presets/" + name + ".json"));
}

inline gqp::GradedQP load_qp(const std::string& name)
{
    return gqp::qp_from_json(gqp::load_json_file(std::string(GQP_DATA_DIR) + "/presets/" + name + ".json"));
}

/* errors.hpp */
#pragma once

#include <stdexcept>
#include <string>

namespace gqp {

/* Malformed input: unknown names, non-composable paths, bad documents. */
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * A mathematical precondition failed or a computation was inconclusive.
 * reason() is a short machine-readable tag such as "not_mutable" or "gldim".
 */
class MathError : public std::runtime_error {
public:
    MathError(std::string reason, const std::string& what) : std::runtime_error(what), reason_(std::move(reason)) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

}  // namespace gqp

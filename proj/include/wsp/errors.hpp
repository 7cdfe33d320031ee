#pragma once

#include <stdexcept>
#include <string>

namespace wsp {

// Bad user-facing input (CLI exit code 2).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_monic_in_x : input_error {
    explicit not_monic_in_x(const std::string& msg) : input_error(msg) {}
};

struct coprimality_failure : input_error {
    explicit coprimality_failure(const std::string& msg) : input_error(msg) {}
};

// #A_l - dim V_l - 1 came out negative for some l outside End(N).
// Hard error, never clamped (CLI exit code 3).
struct formula_inconsistency : std::runtime_error {
    explicit formula_inconsistency(const std::string& msg) : std::runtime_error(msg) {}
};

// A closed-form or identity check failed; message names the first failed
// assertion (CLI exit code 4). Also used for syzygy failures.
struct verification_failure : std::runtime_error {
    explicit verification_failure(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wsp

#pragma once

#include <stdexcept>
#include <string>

namespace regmix {

enum class Errc {
    odd_product,
    degree_too_small,
    bad_degree,
    attempts_exhausted,
    invalid_trials,
    parse_error,
    degree_mismatch,
    loop_or_multi_edge,
    not_simple,
    index_out_of_range,
    space_mismatch,
    cap_exceeded,
    count_overflow,
    budget_exceeded,
    not_connected,
    max_iters_exceeded,
    bad_level,
    bad_epsilon,
    mass_drift,
    switching_failed,
    io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace regmix

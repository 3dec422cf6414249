#pragma once

#include <stdexcept>
#include <string>

namespace designs {

// Failure categories surfaced by the library. Predicates that merely answer
// "no" return false; an exception means a stated precondition was violated
// or the input itself is unusable.
enum class Errc {
    point_not_in_system,
    not_a_design,
    not_proper,
    not_block_design,
    invalid_size_set,
    parameter_range,
    non_divisible,
    block_not_present,
    negative_multiplier,
    malformed_bijection,
    not_a_subcollection,
    precondition_violation,
    inadmissible_parameters,
    bound_exceeded,
    malformed_file,
    not_well_formed,
};

const char* errc_name(Errc code);

class DesignError : public std::runtime_error {
public:
    DesignError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace designs

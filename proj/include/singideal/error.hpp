#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singideal {

enum class ErrorCode {
    invalid_table,
    size_cap_exceeded,
    index_out_of_range,
    cap_exceeded,
    invalid_subgroup,
    zero_vector,
    dimension_mismatch,
    not_invariant,
    not_abelian,
    internal_inconsistency,
    subgroup_not_in_family,
    not_a_witness,
    invalid_argument,
    mismatched_groupoid,
    unit_not_found,
    non_finite_entries,
    empty_unit_set,
    parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace singideal

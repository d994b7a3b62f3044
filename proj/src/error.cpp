#include "singideal/error.hpp"

namespace singideal {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_table: return "invalid-table";
        case ErrorCode::size_cap_exceeded: return "size-cap-exceeded";
        case ErrorCode::index_out_of_range: return "index-out-of-range";
        case ErrorCode::cap_exceeded: return "cap-exceeded";
        case ErrorCode::invalid_subgroup: return "invalid-subgroup";
        case ErrorCode::zero_vector: return "zero-vector";
        case ErrorCode::dimension_mismatch: return "dimension-mismatch";
        case ErrorCode::not_invariant: return "not-invariant";
        case ErrorCode::not_abelian: return "not-abelian";
        case ErrorCode::internal_inconsistency: return "internal-inconsistency";
        case ErrorCode::subgroup_not_in_family: return "subgroup-not-in-family";
        case ErrorCode::not_a_witness: return "not-a-witness";
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::mismatched_groupoid: return "mismatched-groupoid";
        case ErrorCode::unit_not_found: return "unit-not-found";
        case ErrorCode::non_finite_entries: return "non-finite-entries";
        case ErrorCode::empty_unit_set: return "empty-X";
        case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

}  // namespace singideal

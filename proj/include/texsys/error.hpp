#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace texsys {

enum class errc {
    empty_graph,
    duplicate_identifier,
    dangling_endpoint,
    unknown_identifier,
    not_composable,
    intertwining_violation,
    disconnected,
    missing_colour,
    colour_out_of_range,
    colour_mismatch,
    corner_mismatch,
    duplicate_square,
    no_candidate,
    ambiguous_square,
    search_limit_exceeded,
    injectivity_violation,
    identifier_collision,
    incomplete_squares,
    budget_exceeded,
    not_a_complex,
    unknown_basis_element,
    enumeration_limit_exceeded,
    parse_error,
    zero_modulus,
    unsupported_coefficients,
    too_large,
    syntax_error,
    schema_error,
    usage_error,
    internal_inconsistency,
};

const char* errc_name(errc code);

/// All domain failures are reported through this type: a code for dispatch,
/// a human-readable message, and (for validators) one detail line per violation.
class error : public std::runtime_error {
public:
    static constexpr std::size_t no_index = static_cast<std::size_t>(-1);

    error(errc code, std::string message, std::vector<std::string> details = {},
          std::size_t index = no_index)
        : std::runtime_error(std::move(message)),
          code_(code),
          details_(std::move(details)),
          index_(index)
    {
    }

    errc code() const noexcept { return code_; }
    const std::vector<std::string>& details() const noexcept { return details_; }
    std::size_t index() const noexcept { return index_; }

private:
    errc code_;
    std::vector<std::string> details_;
    std::size_t index_;
};

} // namespace texsys

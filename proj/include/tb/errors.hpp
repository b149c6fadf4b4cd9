#pragma once

#include <stdexcept>
#include <string>

namespace tb {

// Domain error kinds. The names are part of the machine-readable CLI
// surface, so they are stable strings, not just enum identifiers.
enum class errc {
    zero_over_zero,
    infinity_input,
    integer_slope,
    out_of_range,
    both_odd,
    zero_entry,
    division_collapse,
    no_representative,
    not_neighbors,
    iteration_cap_exceeded,
    not_hyperbolic,
    condition_not_met,
    no_solution,
    ambiguous_split,
    kind_not_applicable,
    invalid_index,
    index_too_small,
    link_slope,
    bad_group_table,
    parse_error,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace tb

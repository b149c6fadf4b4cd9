#include "tb/errors.hpp"

namespace tb {

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::zero_over_zero: return "ZeroOverZero";
    case errc::infinity_input: return "InfinityInput";
    case errc::integer_slope: return "IntegerSlope";
    case errc::out_of_range: return "OutOfRange";
    case errc::both_odd: return "BothOdd";
    case errc::zero_entry: return "ZeroEntry";
    case errc::division_collapse: return "DivisionCollapse";
    case errc::no_representative: return "NoRepresentative";
    case errc::not_neighbors: return "NotNeighbors";
    case errc::iteration_cap_exceeded: return "IterationCapExceeded";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::condition_not_met: return "ConditionNotMet";
    case errc::no_solution: return "NoSolution";
    case errc::ambiguous_split: return "AmbiguousSplit";
    case errc::kind_not_applicable: return "KindNotApplicable";
    case errc::invalid_index: return "InvalidIndex";
    case errc::index_too_small: return "IndexTooSmall";
    case errc::link_slope: return "LinkSlope";
    case errc::bad_group_table: return "BadGroupTable";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

} // namespace tb

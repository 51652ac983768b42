#pragma once

/**
 * @file error.hpp
 * @brief Error codes shared by every troprec module.
 *
 * Every failure is reported by throwing troprec::error, which carries a
 * stable errc value (used by the CLI to pick exit codes and by tests to
 * assert the exact failure) plus a human-readable message.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace troprec {

enum class errc {
    // parsing / core
    malformed_token,
    too_few_entries,
    first_entry_infinite,
    last_entry_infinite,
    edge_index_out_of_range,
    arithmetic_overflow,
    division_by_zero,
    // recurrence
    window_out_of_range,
    word_too_short,
    not_satisfying,
    invalid_period,
    invalid_grid,
    length_mismatch,
    not_normalized,
    progression_support,
    shifts_too_close,
    bump_out_of_range,
    odd_entries_equal,
    q_out_of_range,
    inapplicable_shape,
    edge_too_short,
    edge_count_mismatch,
    // detector
    infinite_coefficient,
    non_integer_coefficient,
    negative_coefficient,
    endpoints_not_zero,
    state_limit_exceeded,
    empty_graph_after_pruning,
    not_all_periodic,
    io_error,
    // entropy
    malformed_pattern,
    s_too_small,
    regular_vector,
    uncertified_family,
    // oracle
    budget_exceeded,
    sampling_exhausted,
};

constexpr std::string_view to_string(errc e) noexcept {
    switch (e) {
    case errc::malformed_token: return "MalformedToken";
    case errc::too_few_entries: return "TooFewEntries";
    case errc::first_entry_infinite: return "FirstEntryInfinite";
    case errc::last_entry_infinite: return "LastEntryInfinite";
    case errc::edge_index_out_of_range: return "EdgeIndexOutOfRange";
    case errc::arithmetic_overflow: return "ArithmeticOverflow";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::window_out_of_range: return "WindowOutOfRange";
    case errc::word_too_short: return "WordTooShort";
    case errc::not_satisfying: return "NotSatisfying";
    case errc::invalid_period: return "InvalidPeriod";
    case errc::invalid_grid: return "InvalidGrid";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_normalized: return "NotNormalized";
    case errc::progression_support: return "ProgressionSupport";
    case errc::shifts_too_close: return "ShiftsTooClose";
    case errc::bump_out_of_range: return "BumpOutOfRange";
    case errc::odd_entries_equal: return "OddEntriesEqual";
    case errc::q_out_of_range: return "QOutOfRange";
    case errc::inapplicable_shape: return "InapplicableShape";
    case errc::edge_too_short: return "EdgeTooShort";
    case errc::edge_count_mismatch: return "EdgeCountMismatch";
    case errc::infinite_coefficient: return "InfiniteCoefficient";
    case errc::non_integer_coefficient: return "NonIntegerCoefficient";
    case errc::negative_coefficient: return "NegativeCoefficient";
    case errc::endpoints_not_zero: return "EndpointsNotZero";
    case errc::state_limit_exceeded: return "StateLimitExceeded";
    case errc::empty_graph_after_pruning: return "EmptyGraphAfterPruning";
    case errc::not_all_periodic: return "NotAllPeriodic";
    case errc::io_error: return "IoError";
    case errc::malformed_pattern: return "MalformedPattern";
    case errc::s_too_small: return "STooSmall";
    case errc::regular_vector: return "RegularVector";
    case errc::uncertified_family: return "UncertifiedFamily";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::sampling_exhausted: return "SamplingExhausted";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Thrown when window enumeration exceeds its state budget.
class state_limit_error : public error {
public:
    state_limit_error(std::uint64_t limit, std::uint64_t count_so_far)
        : error(errc::state_limit_exceeded,
                "window enumeration exceeded the state limit of " + std::to_string(limit)),
          limit_(limit), count_so_far_(count_so_far) {}

    std::uint64_t limit() const noexcept { return limit_; }
    /// Windows accepted before the abort; depends on worker scheduling.
    std::uint64_t count_so_far() const noexcept { return count_so_far_; }

private:
    std::uint64_t limit_;
    std::uint64_t count_so_far_;
};

}  // namespace troprec

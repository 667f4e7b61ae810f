// Trace-reversal-resembling sequences, extendability and the search for the constant N.

#pragma once

#include "finmem/alphabet.hh"
#include "finmem/state_set.hh"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace finmem::wqo {

/// Counts per nonempty state set; absent keys count zero.
using CountMap = std::map<StateSet, Natural>;

/// Pointwise order on counts.
bool counts_leq(const CountMap& f, const CountMap& g);

struct ResemblingEntry {
    StateSet q;
    CountMap f;
    bool operator==(const ResemblingEntry&) const = default;
};

using Sequence = std::vector<ResemblingEntry>;

/// Least j, then least i < j, with equal state sets and f_i <= f_j, considering j < limit.
std::optional<std::pair<std::size_t, std::size_t>> first_good_pair(const Sequence& seq, std::size_t limit);
/// Whether some i < j < n has equal state sets and f_i <= f_j.
bool is_extendable(const Sequence& seq, std::size_t n);
/// Whether every entry i has counts at most i over nonempty subsets of `s_count` states.
bool is_resembling(const Sequence& seq, std::size_t s_count);

struct SearchOptions {
    /// Search steps allowed: nodes plus enumerated count vectors.
    std::uint64_t budget = 50'000'000;
    /// Explore only maximal legal count vectors.
    bool pruning = true;
    /// Fix the first state set up to relabelling of states.
    bool symmetry = true;
    /// Force every count to zero.
    bool zero_counts = false;
    std::optional<std::size_t> depth_cap;
};

struct BadSequenceWitness {
    Sequence entries;
    std::size_t length;
    /// Search steps used, counted as for the budget.
    std::uint64_t nodes;
};

/// Longest sequence without a good pair. Throws BudgetExceeded.
BadSequenceWitness longest_bad(std::size_t s_count, const SearchOptions& options = {});
/// longest_bad + 1. Throws BudgetExceeded.
std::size_t compute_n(std::size_t s_count, const SearchOptions& options = {});

/// Least j, then least i < j, with v_i <= v_j pointwise.
std::optional<std::pair<std::size_t, std::size_t>> dickson_pair(const std::vector<std::vector<Natural>>& vectors);

} // namespace finmem::wqo

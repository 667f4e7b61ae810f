// Sets of automaton states as bit masks.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace finmem {

using State = std::uint32_t;

/// Automata are limited to 64 states so that state sets fit one word.
inline constexpr State max_states = 64;

class StateSet {
public:
    constexpr StateSet() = default;
    constexpr explicit StateSet(std::uint64_t mask) : mask_(mask) {}
    StateSet(std::initializer_list<State> states) {
        for (State s : states) { insert(s); }
    }

    static StateSet from_vector(const std::vector<State>& states) {
        StateSet q;
        for (State s : states) { q.insert(s); }
        return q;
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool contains(State s) const { return (mask_ >> s) & 1U; }
    constexpr void insert(State s) { mask_ |= std::uint64_t{ 1 } << s; }
    constexpr bool subset_of(StateSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr StateSet operator|(StateSet other) const { return StateSet(mask_ | other.mask_); }
    constexpr StateSet operator&(StateSet other) const { return StateSet(mask_ & other.mask_); }

    std::vector<State> to_vector() const {
        std::vector<State> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) { out.push_back(static_cast<State>(std::countr_zero(m))); }
        return out;
    }

    constexpr auto operator<=>(const StateSet&) const = default;

private:
    std::uint64_t mask_ = 0;
};

} // namespace finmem

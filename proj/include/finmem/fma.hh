// Nondeterministic finite-memory automata with r registers.

#pragma once

#include "finmem/alphabet.hh"
#include "finmem/state_set.hh"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace finmem::fma {

/// Target of a replace transition; `reg` is 0-based.
struct ReplaceTarget {
    State state;
    std::size_t reg;
    auto operator<=>(const ReplaceTarget&) const = default;
};

/// Transitions are indexed by state; register indices are 0-based.
struct Fma {
    std::vector<std::string> states;
    State initial = 0;
    std::set<State> accepting;
    SymbolSet constants;
    std::size_t registers = 1;
    std::vector<Symbol> initial_assignment;
    std::map<std::pair<State, Symbol>, std::set<State>> trans_delta;
    /// trans_eq[s][i]: targets when the letter equals register i.
    std::vector<std::vector<std::set<State>>> trans_eq;
    std::vector<std::set<State>> trans_neq_skip;
    std::vector<std::set<ReplaceTarget>> trans_neq_replace;

    std::size_t num_states() const { return states.size(); }
    /// Fills missing per-state tables with empty entries and checks all invariants.
    /// Throws InvalidAutomaton.
    void validate();
    /// Throws MalformedLetter for constants outside the automaton's constants.
    void check_letter(const Symbol& x) const;
};

struct FmaConfig {
    State state;
    std::vector<Symbol> regs;
    auto operator<=>(const FmaConfig&) const = default;
};

FmaConfig initial_config(const Fma& a);
std::set<FmaConfig> step(const Fma& a, const FmaConfig& c, const Symbol& x);
bool accepts(const Fma& a, const Word& w);
/// Depth-first enumeration of all runs, used as an oracle.
bool accepts_naive(const Fma& a, const Word& w);
/// The accepting run choosing the least successor that can still reach acceptance.
std::optional<std::vector<FmaConfig>> witness_run(const Fma& a, const Word& w);
/// Lengths n <= n_max of accepted words, searched over the canonical alphabet.
std::set<std::size_t> enumerate_lengths(const Fma& a, std::size_t n_max);
/// Constants, initial registers and `fresh` user symbols not among them.
std::vector<Symbol> canonical_alphabet(const Fma& a, std::size_t fresh);

} // namespace finmem::fma

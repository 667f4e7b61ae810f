// Alternating one-register finite-memory automata.

#pragma once

#include "finmem/alphabet.hh"
#include "finmem/perm.hh"
#include "finmem/state_set.hh"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace finmem::afma {

/// A choice of an inequality transition: states keeping the register and states storing the letter.
struct NeqChoice {
    StateSet keep;
    StateSet replace;
    auto operator<=>(const NeqChoice&) const = default;
};

/// An empty set of choices means the configuration is stuck. The empty state set as a choice
/// means the branch ends successfully.
struct Afma1 {
    std::vector<std::string> states;
    State initial = 0;
    StateSet accepting;
    SymbolSet constants;
    Symbol initial_register = Symbol::user(0);
    std::map<std::pair<State, Symbol>, std::set<StateSet>> mu_delta;
    std::vector<std::set<StateSet>> mu_eq;
    std::vector<std::set<NeqChoice>> mu_neq;

    std::size_t num_states() const { return states.size(); }
    StateSet all_states() const;
    /// Fills missing per-state tables with empty entries and checks all invariants.
    /// Throws InvalidAutomaton.
    void validate();
    /// Throws MalformedLetter for constants outside the automaton's constants.
    void check_letter(const Symbol& x) const;
};

struct AfmaConfig {
    State state;
    Symbol reg;
    auto operator<=>(const AfmaConfig&) const = default;
};

using ConfigSet = std::set<AfmaConfig>;
using Run = std::vector<ConfigSet>;

ConfigSet initial_configs(const Afma1& a);
bool all_accepting(const Afma1& a, const ConfigSet& c);

std::set<ConfigSet> mu_config(const Afma1& a, const AfmaConfig& c, const Symbol& x);
std::set<ConfigSet> step_sets(const Afma1& a, const ConfigSet& c, const Symbol& x);
/// Whether `next` is a successor of `c` on `x`, decided without building every successor.
bool is_step(const Afma1& a, const ConfigSet& c, const Symbol& x, const ConfigSet& next);

bool accepts(const Afma1& a, const Word& w);
bool accepts_naive(const Afma1& a, const Word& w);
std::optional<Run> witness_run(const Afma1& a, const Word& w);
/// Like witness_run, starting from `c` at position `pos` of `w`. The run starts with `c`.
std::optional<Run> witness_run_from(const Afma1& a, const Word& w, std::size_t pos, const ConfigSet& c);

/// Turns a run from a superset of `c` at position `pos` into a run from `c`: each member
/// follows its least choice contained in the corresponding set of `super_run`.
Run restrict_run(const Afma1& a, const Word& w, std::size_t pos, const ConfigSet& c, const Run& super_run);

/// Checks that `run` is a run of `a` on `w` from the initial configurations.
bool is_run(const Afma1& a, const Word& w, const Run& run);

ConfigSet map_configset(const StructuredPerm& alpha, const ConfigSet& c);
SymbolSet registers_of(const ConfigSet& c);

/// Constants, the initial register and `fresh` user symbols distinct from it.
std::vector<Symbol> canonical_alphabet(const Afma1& a, std::size_t fresh);

std::string format_configset(const Afma1& a, const ConfigSet& c);

} // namespace finmem::afma

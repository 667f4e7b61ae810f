// Semantics of r-register finite-memory automata.

#include "finmem/fma.hh"
#include "finmem/error.hh"

#include <algorithm>
#include <functional>

namespace finmem::fma {

namespace {

void check_state(const Fma& a, State s) {
    if (s >= a.num_states()) { throw InvalidAutomaton("state index " + std::to_string(s) + " out of range"); }
}

} // namespace

void Fma::validate() {
    const std::size_t n = states.size();
    if (n == 0 || n > max_states) { throw InvalidAutomaton("automaton needs between 1 and 64 states"); }
    if (std::set<std::string>(states.begin(), states.end()).size() != n) {
        throw InvalidAutomaton("state names must be distinct");
    }
    check_state(*this, initial);
    for (State s : accepting) { check_state(*this, s); }
    for (const auto& c : constants) {
        if (!c.is_const() || is_data_token(c.as_const().name)) {
            throw InvalidAutomaton("invalid constant name '" + c.to_string() + "'");
        }
    }
    if (registers == 0) { throw InvalidAutomaton("at least one register is required"); }
    if (initial_assignment.size() != registers) {
        throw InvalidAutomaton("initial assignment must have one symbol per register");
    }
    for (const auto& x : initial_assignment) {
        if (!x.is_data()) { throw InvalidAutomaton("initial assignment must hold data symbols"); }
    }
    if (!all_distinct(initial_assignment)) { throw InvalidAutomaton("initial assignment repeats a symbol"); }

    if (trans_eq.size() > n || trans_neq_skip.size() > n || trans_neq_replace.size() > n) {
        throw InvalidAutomaton("transition table longer than the state list");
    }
    trans_eq.resize(n);
    trans_neq_skip.resize(n);
    trans_neq_replace.resize(n);
    for (auto& row : trans_eq) {
        if (row.size() > registers) { throw InvalidAutomaton("register index out of range"); }
        row.resize(registers);
        for (const auto& targets : row) {
            for (State t : targets) { check_state(*this, t); }
        }
    }
    for (const auto& targets : trans_neq_skip) {
        for (State t : targets) { check_state(*this, t); }
    }
    for (const auto& targets : trans_neq_replace) {
        for (const auto& t : targets) {
            check_state(*this, t.state);
            if (t.reg >= registers) { throw InvalidAutomaton("register index out of range"); }
        }
    }
    for (const auto& [key, targets] : trans_delta) {
        check_state(*this, key.first);
        if (!constants.contains(key.second)) {
            throw InvalidAutomaton("transition on undeclared constant " + key.second.to_string());
        }
        for (State t : targets) { check_state(*this, t); }
    }
}

void Fma::check_letter(const Symbol& x) const {
    if (x.is_const() && !constants.contains(x)) {
        throw MalformedLetter("constant " + x.to_string() + " is not declared by the automaton");
    }
}

FmaConfig initial_config(const Fma& a) { return FmaConfig{ a.initial, a.initial_assignment }; }

std::set<FmaConfig> step(const Fma& a, const FmaConfig& c, const Symbol& x) {
    a.check_letter(x);
    std::set<FmaConfig> out;
    if (x.is_const()) {
        if (const auto it = a.trans_delta.find({ c.state, x }); it != a.trans_delta.end()) {
            for (State t : it->second) { out.insert(FmaConfig{ t, c.regs }); }
        }
        return out;
    }
    const auto match = std::find(c.regs.begin(), c.regs.end(), x);
    if (match != c.regs.end()) {
        if (std::find(match + 1, c.regs.end(), x) != c.regs.end()) {
            throw std::logic_error("register assignment repeats " + x.to_string());
        }
        const auto i = static_cast<std::size_t>(match - c.regs.begin());
        for (State t : a.trans_eq[c.state][i]) { out.insert(FmaConfig{ t, c.regs }); }
        return out;
    }
    for (State t : a.trans_neq_skip[c.state]) { out.insert(FmaConfig{ t, c.regs }); }
    for (const auto& t : a.trans_neq_replace[c.state]) {
        FmaConfig next{ t.state, c.regs };
        next.regs[t.reg] = x;
        out.insert(std::move(next));
    }
    return out;
}

namespace {

std::vector<std::set<FmaConfig>> forward_sets(const Fma& a, const Word& w) {
    std::vector<std::set<FmaConfig>> sets{ { initial_config(a) } };
    for (const auto& x : w) {
        std::set<FmaConfig> next;
        for (const auto& c : sets.back()) { next.merge(step(a, c, x)); }
        sets.push_back(std::move(next));
    }
    return sets;
}

} // namespace

bool accepts(const Fma& a, const Word& w) {
    for (const auto& x : w) { a.check_letter(x); }
    std::set<FmaConfig> current{ initial_config(a) };
    for (const auto& x : w) {
        std::set<FmaConfig> next;
        for (const auto& c : current) { next.merge(step(a, c, x)); }
        if (next.empty()) { return false; }
        current = std::move(next);
    }
    return std::any_of(current.begin(), current.end(), [&a](const FmaConfig& c) { return a.accepting.contains(c.state); });
}

bool accepts_naive(const Fma& a, const Word& w) {
    for (const auto& x : w) { a.check_letter(x); }
    std::function<bool(const FmaConfig&, std::size_t)> dfs = [&](const FmaConfig& c, std::size_t pos) {
        if (pos == w.size()) { return a.accepting.contains(c.state); }
        for (const auto& next : step(a, c, w[pos])) {
            if (dfs(next, pos + 1)) { return true; }
        }
        return false;
    };
    return dfs(initial_config(a), 0);
}

std::optional<std::vector<FmaConfig>> witness_run(const Fma& a, const Word& w) {
    for (const auto& x : w) { a.check_letter(x); }
    auto sets = forward_sets(a, w);
    // Narrow each set to the configurations from which the rest of the word can be accepted.
    std::erase_if(sets.back(), [&a](const FmaConfig& c) { return !a.accepting.contains(c.state); });
    for (std::size_t k = w.size(); k-- > 0;) {
        std::erase_if(sets[k], [&](const FmaConfig& c) {
            const auto succ = step(a, c, w[k]);
            return std::none_of(succ.begin(), succ.end(), [&](const FmaConfig& d) { return sets[k + 1].contains(d); });
        });
    }
    if (sets[0].empty()) { return std::nullopt; }
    std::vector<FmaConfig> run{ initial_config(a) };
    for (std::size_t k = 0; k < w.size(); ++k) {
        for (const auto& d : step(a, run.back(), w[k])) {
            if (sets[k + 1].contains(d)) {
                run.push_back(d);
                break;
            }
        }
    }
    return run;
}

std::vector<Symbol> canonical_alphabet(const Fma& a, std::size_t fresh) {
    std::vector<Symbol> letters(a.constants.begin(), a.constants.end());
    const SymbolSet theta(a.initial_assignment.begin(), a.initial_assignment.end());
    letters.insert(letters.end(), theta.begin(), theta.end());
    for (Natural n = 0; fresh > 0; ++n) {
        if (!theta.contains(Symbol::user(n))) {
            letters.push_back(Symbol::user(n));
            --fresh;
        }
    }
    return letters;
}

std::set<std::size_t> enumerate_lengths(const Fma& a, std::size_t n_max) {
    const auto letters = canonical_alphabet(a, n_max);
    std::set<std::size_t> lengths;
    std::set<FmaConfig> level{ initial_config(a) };
    for (std::size_t n = 0; n <= n_max && !level.empty(); ++n) {
        if (std::any_of(level.begin(), level.end(), [&a](const FmaConfig& c) { return a.accepting.contains(c.state); })) {
            lengths.insert(n);
        }
        if (n == n_max) { break; }
        std::set<FmaConfig> next;
        for (const auto& c : level) {
            for (const auto& x : letters) { next.merge(step(a, c, x)); }
        }
        level = std::move(next);
    }
    return lengths;
}

} // namespace finmem::fma

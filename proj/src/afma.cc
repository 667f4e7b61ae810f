// Semantics of alternating one-register finite-memory automata.

#include "finmem/afma.hh"
#include "finmem/error.hh"

#include <algorithm>
#include <functional>

namespace finmem::afma {

StateSet Afma1::all_states() const {
    return StateSet(states.size() == 64 ? ~std::uint64_t{ 0 } : (std::uint64_t{ 1 } << states.size()) - 1);
}

void Afma1::validate() {
    const std::size_t n = states.size();
    if (n == 0 || n > max_states) { throw InvalidAutomaton("automaton needs between 1 and 64 states"); }
    if (std::set<std::string>(states.begin(), states.end()).size() != n) {
        throw InvalidAutomaton("state names must be distinct");
    }
    const StateSet all = all_states();
    const auto check_set = [&all](StateSet q) {
        if (!q.subset_of(all)) { throw InvalidAutomaton("state set refers to unknown states"); }
    };
    if (initial >= n) { throw InvalidAutomaton("initial state out of range"); }
    check_set(accepting);
    for (const auto& c : constants) {
        if (!c.is_const() || is_data_token(c.as_const().name)) {
            throw InvalidAutomaton("invalid constant name '" + c.to_string() + "'");
        }
    }
    if (!initial_register.is_data()) { throw InvalidAutomaton("initial register must hold a data symbol"); }
    if (mu_eq.size() > n || mu_neq.size() > n) { throw InvalidAutomaton("transition table longer than the state list"); }
    mu_eq.resize(n);
    mu_neq.resize(n);
    for (const auto& choices : mu_eq) {
        for (StateSet q : choices) { check_set(q); }
    }
    for (const auto& choices : mu_neq) {
        for (const auto& ch : choices) {
            check_set(ch.keep);
            check_set(ch.replace);
        }
    }
    for (const auto& [key, choices] : mu_delta) {
        if (key.first >= n) { throw InvalidAutomaton("state index out of range"); }
        if (!constants.contains(key.second)) {
            throw InvalidAutomaton("transition on undeclared constant " + key.second.to_string());
        }
        for (StateSet q : choices) { check_set(q); }
    }
}

void Afma1::check_letter(const Symbol& x) const {
    if (x.is_const() && !constants.contains(x)) {
        throw MalformedLetter("constant " + x.to_string() + " is not declared by the automaton");
    }
}

ConfigSet initial_configs(const Afma1& a) { return { AfmaConfig{ a.initial, a.initial_register } }; }

bool all_accepting(const Afma1& a, const ConfigSet& c) {
    return std::all_of(c.begin(), c.end(), [&a](const AfmaConfig& x) { return a.accepting.contains(x.state); });
}

namespace {

void add_states(ConfigSet& out, StateSet q, const Symbol& reg) {
    for (State s : q.to_vector()) { out.insert(AfmaConfig{ s, reg }); }
}

} // namespace

std::set<ConfigSet> mu_config(const Afma1& a, const AfmaConfig& c, const Symbol& x) {
    a.check_letter(x);
    std::set<ConfigSet> out;
    if (x.is_const()) {
        if (const auto it = a.mu_delta.find({ c.state, x }); it != a.mu_delta.end()) {
            for (StateSet q : it->second) {
                ConfigSet choice;
                add_states(choice, q, c.reg);
                out.insert(std::move(choice));
            }
        }
    } else if (x == c.reg) {
        for (StateSet q : a.mu_eq[c.state]) {
            ConfigSet choice;
            add_states(choice, q, c.reg);
            out.insert(std::move(choice));
        }
    } else {
        for (const auto& ch : a.mu_neq[c.state]) {
            ConfigSet choice;
            add_states(choice, ch.keep, c.reg);
            add_states(choice, ch.replace, x);
            out.insert(std::move(choice));
        }
    }
    return out;
}

std::set<ConfigSet> step_sets(const Afma1& a, const ConfigSet& c, const Symbol& x) {
    a.check_letter(x);
    std::set<ConfigSet> partial{ ConfigSet{} };
    for (const auto& member : c) {
        const auto choices = mu_config(a, member, x);
        if (choices.empty()) { return {}; }
        std::set<ConfigSet> next;
        for (const auto& p : partial) {
            for (const auto& ch : choices) {
                ConfigSet u = p;
                u.insert(ch.begin(), ch.end());
                next.insert(std::move(u));
            }
        }
        partial = std::move(next);
    }
    return partial;
}

bool is_step(const Afma1& a, const ConfigSet& c, const Symbol& x, const ConfigSet& next) {
    std::vector<std::vector<ConfigSet>> fitting;
    ConfigSet reachable;
    for (const auto& member : c) {
        std::vector<ConfigSet> ok;
        for (const auto& ch : mu_config(a, member, x)) {
            if (std::includes(next.begin(), next.end(), ch.begin(), ch.end())) {
                ok.push_back(ch);
                reachable.insert(ch.begin(), ch.end());
            }
        }
        if (ok.empty()) { return false; }
        fitting.push_back(std::move(ok));
    }
    if (reachable != next) { return false; }
    // suffix_union[i]: everything members i.. can still contribute.
    std::vector<ConfigSet> suffix_union(fitting.size() + 1);
    for (std::size_t i = fitting.size(); i-- > 0;) {
        suffix_union[i] = suffix_union[i + 1];
        for (const auto& ch : fitting[i]) { suffix_union[i].insert(ch.begin(), ch.end()); }
    }
    std::function<bool(std::size_t, const ConfigSet&)> cover = [&](std::size_t i, const ConfigSet& covered) {
        if (i == fitting.size()) { return covered == next; }
        ConfigSet possible = covered;
        possible.insert(suffix_union[i].begin(), suffix_union[i].end());
        if (possible != next) { return false; }
        for (const auto& ch : fitting[i]) {
            ConfigSet u = covered;
            u.insert(ch.begin(), ch.end());
            if (cover(i + 1, u)) { return true; }
        }
        return false;
    };
    return cover(0, {});
}

namespace {

/// Depth-first acceptance search with exact memoization and subsumption in both directions.
class Search {
public:
    Search(const Afma1& a, const Word& w) : a_(a), w_(w), memo_(w.size() + 1), good_(w.size() + 1), bad_(w.size() + 1) {
        for (const auto& x : w) { a.check_letter(x); }
    }

    bool solve(std::size_t pos, const ConfigSet& c) {
        if (pos == w_.size()) { return all_accepting(a_, c); }
        if (const auto it = memo_[pos].find(c); it != memo_[pos].end()) { return it->second; }
        for (const auto& g : good_[pos]) {
            if (std::includes(g.begin(), g.end(), c.begin(), c.end())) { return true; }
        }
        for (const auto& b : bad_[pos]) {
            if (std::includes(c.begin(), c.end(), b.begin(), b.end())) { return false; }
        }
        bool result = false;
        for (const auto& next : step_sets(a_, c, w_[pos])) {
            if (solve(pos + 1, next)) {
                result = true;
                break;
            }
        }
        memo_[pos].emplace(c, result);
        (result ? good_ : bad_)[pos].push_back(c);
        return result;
    }

    std::optional<Run> witness(std::size_t pos, const ConfigSet& c) {
        if (!solve(pos, c)) { return std::nullopt; }
        Run run{ c };
        for (std::size_t k = pos; k < w_.size(); ++k) {
            for (const auto& next : step_sets(a_, run.back(), w_[k])) {
                if (solve(k + 1, next)) {
                    run.push_back(next);
                    break;
                }
            }
        }
        return run;
    }

private:
    const Afma1& a_;
    const Word& w_;
    std::vector<std::map<ConfigSet, bool>> memo_;
    std::vector<std::vector<ConfigSet>> good_;
    std::vector<std::vector<ConfigSet>> bad_;
};

} // namespace

bool accepts(const Afma1& a, const Word& w) { return Search(a, w).solve(0, initial_configs(a)); }

bool accepts_naive(const Afma1& a, const Word& w) {
    for (const auto& x : w) { a.check_letter(x); }
    std::function<bool(std::size_t, const ConfigSet&)> dfs = [&](std::size_t pos, const ConfigSet& c) {
        if (pos == w.size()) { return all_accepting(a, c); }
        for (const auto& next : step_sets(a, c, w[pos])) {
            if (dfs(pos + 1, next)) { return true; }
        }
        return false;
    };
    return dfs(0, initial_configs(a));
}

std::optional<Run> witness_run(const Afma1& a, const Word& w) { return witness_run_from(a, w, 0, initial_configs(a)); }

std::optional<Run> witness_run_from(const Afma1& a, const Word& w, std::size_t pos, const ConfigSet& c) {
    if (pos > w.size()) { throw PreconditionViolated("position beyond the end of the word"); }
    return Search(a, w).witness(pos, c);
}

Run restrict_run(const Afma1& a, const Word& w, std::size_t pos, const ConfigSet& c, const Run& super_run) {
    if (pos + super_run.size() != w.size() + 1) { throw NotARun("run does not cover the rest of the word"); }
    if (!std::includes(super_run[0].begin(), super_run[0].end(), c.begin(), c.end())) {
        throw PreconditionViolated("restriction needs a subset of the first set of the run");
    }
    Run run{ c };
    for (std::size_t k = 0; k + 1 < super_run.size(); ++k) {
        const auto& target = super_run[k + 1];
        ConfigSet next;
        for (const auto& member : run.back()) {
            bool found = false;
            for (const auto& ch : mu_config(a, member, w[pos + k])) {
                if (std::includes(target.begin(), target.end(), ch.begin(), ch.end())) {
                    next.insert(ch.begin(), ch.end());
                    found = true;
                    break;
                }
            }
            if (!found) { throw NotARun("configuration has no choice inside the given run"); }
        }
        run.push_back(std::move(next));
    }
    return run;
}

bool is_run(const Afma1& a, const Word& w, const Run& run) {
    if (run.size() != w.size() + 1 || run[0] != initial_configs(a)) { return false; }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!is_step(a, run[k], w[k], run[k + 1])) { return false; }
    }
    return true;
}

ConfigSet map_configset(const StructuredPerm& alpha, const ConfigSet& c) {
    ConfigSet out;
    for (const auto& x : c) { out.insert(AfmaConfig{ x.state, alpha.apply(x.reg) }); }
    return out;
}

SymbolSet registers_of(const ConfigSet& c) {
    SymbolSet out;
    for (const auto& x : c) { out.insert(x.reg); }
    return out;
}

std::vector<Symbol> canonical_alphabet(const Afma1& a, std::size_t fresh) {
    std::vector<Symbol> letters(a.constants.begin(), a.constants.end());
    letters.push_back(a.initial_register);
    for (Natural n = 0; fresh > 0; ++n) {
        if (Symbol::user(n) != a.initial_register) {
            letters.push_back(Symbol::user(n));
            --fresh;
        }
    }
    return letters;
}

std::string format_configset(const Afma1& a, const ConfigSet& c) {
    std::string out = "{";
    for (const auto& x : c) {
        if (out.size() > 1) { out += ", "; }
        out += "(" + a.states[x.state] + "," + x.reg.to_string() + ")";
    }
    return out + "}";
}

} // namespace finmem::afma

// Helpers shared by the tests: seeded randomness, word enumeration, random automata.

#pragma once

#include "finmem/afma.hh"
#include "finmem/alphabet.hh"
#include "finmem/fma.hh"
#include "finmem/perm.hh"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

namespace finmem::test {

/// Seed from WORKBENCH_SEED, or a fixed default.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("WORKBENCH_SEED")) { return std::stoull(s); }
    return 20240601;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

inline std::size_t uniform(std::mt19937_64& g, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

inline bool coin(std::mt19937_64& g, double p = 0.5) { return std::bernoulli_distribution(p)(g); }

inline Word user_word(std::initializer_list<Natural> ids) {
    Word w;
    for (Natural n : ids) { w.push_back(Symbol::user(n)); }
    return w;
}

/// Every word of length <= max_len over the letters.
inline void for_each_word(const std::vector<Symbol>& letters, std::size_t max_len, const std::function<void(const Word&)>& f) {
    Word w;
    std::function<void()> rec = [&]() {
        f(w);
        if (w.size() == max_len) { return; }
        for (const auto& x : letters) {
            w.push_back(x);
            rec();
            w.pop_back();
        }
    };
    rec();
}

inline Word random_word(std::mt19937_64& g, const std::vector<Symbol>& letters, std::size_t len) {
    Word w;
    for (std::size_t k = 0; k < len; ++k) { w.push_back(letters[uniform(g, 0, letters.size() - 1)]); }
    return w;
}

/// A random finite-support permutation of the given data symbols.
inline StructuredPerm random_perm(std::mt19937_64& g, std::vector<Symbol> support) {
    std::vector<Symbol> image = support;
    std::shuffle(image.begin(), image.end(), g);
    std::map<Symbol, Symbol> m;
    for (std::size_t k = 0; k < support.size(); ++k) { m.emplace(support[k], image[k]); }
    return StructuredPerm(std::move(m), {}, {});
}

inline StateSet random_state_set(std::mt19937_64& g, std::size_t n, double p = 0.4) {
    StateSet q;
    for (State s = 0; s < n; ++s) {
        if (coin(g, p)) { q.insert(s); }
    }
    return q;
}

/// A small random alternating automaton with one constant.
inline afma::Afma1 random_afma(std::mt19937_64& g, std::size_t n) {
    afma::Afma1 a;
    for (std::size_t s = 0; s < n; ++s) { a.states.push_back("s" + std::to_string(s)); }
    a.accepting = random_state_set(g, n, 0.6);
    a.constants = { Symbol::constant("#") };
    a.initial_register = Symbol::user(0);
    a.mu_eq.resize(n);
    a.mu_neq.resize(n);
    for (State s = 0; s < n; ++s) {
        for (std::size_t k = uniform(g, 0, 2); k > 0; --k) { a.mu_eq[s].insert(random_state_set(g, n)); }
        for (std::size_t k = uniform(g, 0, 2); k > 0; --k) {
            a.mu_neq[s].insert(afma::NeqChoice{ random_state_set(g, n), random_state_set(g, n, 0.3) });
        }
        if (coin(g)) { a.mu_delta[{ s, Symbol::constant("#") }].insert(random_state_set(g, n)); }
    }
    a.validate();
    return a;
}

/// A small random r-register automaton with one constant.
inline fma::Fma random_fma(std::mt19937_64& g, std::size_t n, std::size_t r) {
    fma::Fma a;
    for (std::size_t s = 0; s < n; ++s) { a.states.push_back("s" + std::to_string(s)); }
    for (State s = 0; s < n; ++s) {
        if (coin(g, 0.4)) { a.accepting.insert(s); }
    }
    a.constants = { Symbol::constant("#") };
    a.registers = r;
    for (std::size_t i = 0; i < r; ++i) { a.initial_assignment.push_back(Symbol::user(100 + i)); }
    a.trans_eq.assign(n, std::vector<std::set<State>>(r));
    a.trans_neq_skip.assign(n, {});
    a.trans_neq_replace.assign(n, {});
    for (State s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < r; ++i) {
            if (coin(g)) { a.trans_eq[s][i].insert(static_cast<State>(uniform(g, 0, n - 1))); }
        }
        if (coin(g)) { a.trans_neq_skip[s].insert(static_cast<State>(uniform(g, 0, n - 1))); }
        if (coin(g)) { a.trans_neq_replace[s].insert({ static_cast<State>(uniform(g, 0, n - 1)), uniform(g, 0, r - 1) }); }
        if (coin(g, 0.3)) { a.trans_delta[{ s, Symbol::constant("#") }].insert(static_cast<State>(uniform(g, 0, n - 1))); }
    }
    a.validate();
    return a;
}

} // namespace finmem::test

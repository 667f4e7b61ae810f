// Length spectra of alternating one-register automata.

#include "finmem/semilinear.hh"
#include "finmem/error.hh"
#include "finmem/relation.hh"

#include <algorithm>

namespace finmem::semilinear {

namespace {

using afma::AfmaConfig;
using afma::ConfigSet;

/// Renames the fresh-pool symbols of `c` to the front of the pool, ordered by their state sets.
/// The renaming is a permutation fixing constants and the initial register, so it preserves
/// the lengths of accepted continuations.
ConfigSet canonicalize(const ConfigSet& c, const std::vector<Symbol>& pool, const Symbol& theta0) {
    std::map<Symbol, StateSet> sig;
    for (const auto& cfg : c) {
        if (cfg.reg != theta0) { sig[cfg.reg].insert(cfg.state); }
    }
    std::vector<std::pair<StateSet, Symbol>> order;
    for (const auto& [x, q] : sig) { order.emplace_back(q, x); }
    std::sort(order.begin(), order.end());
    std::map<Symbol, Symbol> rename;
    for (std::size_t k = 0; k < order.size(); ++k) { rename[order[k].second] = pool.at(k); }
    ConfigSet out;
    for (const auto& cfg : c) {
        const auto it = rename.find(cfg.reg);
        out.insert(AfmaConfig{ cfg.state, it == rename.end() ? cfg.reg : it->second });
    }
    return out;
}

/// Keeps the subset-minimal sets; a subset accepts every continuation a superset accepts.
std::vector<ConfigSet> minimal_sets(std::set<ConfigSet>&& sets) {
    std::vector<ConfigSet> by_size(std::make_move_iterator(sets.begin()), std::make_move_iterator(sets.end()));
    std::stable_sort(by_size.begin(), by_size.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<ConfigSet> kept;
    for (auto& c : by_size) {
        const bool covered = std::any_of(kept.begin(), kept.end(), [&c](const ConfigSet& k) {
            return std::includes(c.begin(), c.end(), k.begin(), k.end());
        });
        if (!covered) { kept.push_back(std::move(c)); }
    }
    return kept;
}

} // namespace

std::set<std::size_t> length_spectrum(const afma::Afma1& a, std::size_t n_max) {
    const auto alphabet = afma::canonical_alphabet(a, n_max);
    std::vector<Symbol> pool;
    for (const auto& x : alphabet) {
        if (x.is_data() && x != a.initial_register) { pool.push_back(x); }
    }
    std::set<std::size_t> lengths;
    std::vector<ConfigSet> level{ afma::initial_configs(a) };
    for (std::size_t n = 0; n <= n_max && !level.empty(); ++n) {
        if (std::any_of(level.begin(), level.end(), [&a](const ConfigSet& c) { return afma::all_accepting(a, c); })) {
            lengths.insert(n);
        }
        if (n == n_max) { break; }
        std::set<ConfigSet> next;
        for (const auto& c : level) {
            // Letters outside the registers of c are interchangeable, so one fresh pool symbol
            // stands for all of them.
            const auto regs = afma::registers_of(c);
            std::vector<Symbol> letters(a.constants.begin(), a.constants.end());
            letters.insert(letters.end(), regs.begin(), regs.end());
            if (!regs.contains(a.initial_register)) { letters.push_back(a.initial_register); }
            for (const auto& x : pool) {
                if (!regs.contains(x)) {
                    letters.push_back(x);
                    break;
                }
            }
            for (const auto& x : letters) {
                for (const auto& succ : afma::step_sets(a, c, x)) {
                    next.insert(canonicalize(succ, pool, a.initial_register));
                }
            }
        }
        level = minimal_sets(std::move(next));
    }
    return lengths;
}

std::uint64_t factorial(std::size_t n) {
    if (n > 20) { throw PreconditionViolated("factorial above 20! does not fit 64 bits"); }
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) { f *= k; }
    return f;
}

Word extension_step(const pump_afma::AfmaPumpCertificate& cert, std::size_t n) {
    const auto f = factorial(n);
    const auto u = cert.upsilon.size();
    if (u == 0 || f % u != 0) { throw PreconditionViolated("|upsilon| does not divide n!"); }
    return pump_afma::pumped_word(cert, f / u);
}

std::string to_string(Status s) { return s == Status::exact ? "exact" : "empirical"; }

bool SpectrumDescription::contains(std::size_t n) const {
    if (finite_part.contains(n)) { return true; }
    return std::any_of(linear_parts.begin(), linear_parts.end(),
                       [n](const auto& p) { return n >= p.first && (n - p.first) % p.second == 0; });
}

std::optional<std::size_t> observed_period(const std::set<std::size_t>& lengths, std::size_t n_max) {
    const auto in = [&lengths](std::size_t x) { return lengths.contains(x); };
    if (std::none_of(lengths.begin(), lengths.end(), [n_max](std::size_t x) { return 2 * x > n_max && x <= n_max; })) {
        return 1;
    }
    for (std::size_t b = 1; 2 * b <= n_max; ++b) {
        for (std::size_t n0 = 0; n0 + 2 * b <= n_max; ++n0) {
            bool hit = false;
            for (std::size_t x = n0; x < n0 + b; ++x) { hit = hit || in(x); }
            if (!hit) { continue; }
            bool repeats = true;
            for (std::size_t x = n0; x + b <= n_max && repeats; ++x) { repeats = in(x) == in(x + b); }
            if (repeats) { return b; }
        }
    }
    return std::nullopt;
}

SpectrumDescription describe_lengths(const std::set<std::size_t>& lengths, std::size_t n, std::size_t n_max,
                                     bool language_empty) {
    const auto p = static_cast<std::size_t>(factorial(n));
    SpectrumDescription d{ {}, {}, n_max, Status::empirical, false, std::nullopt };
    for (std::size_t x : lengths) {
        if (x < p && x <= n_max) { d.finite_part.insert(x); }
    }
    std::size_t witnessed = 0;
    for (std::size_t r = 0; r < p; ++r) {
        std::optional<std::size_t> seed;
        for (std::size_t x = p + r; x <= n_max; x += p) {
            if (lengths.contains(x)) {
                seed = x;
                break;
            }
        }
        if (!seed) { continue; }
        ++witnessed;
        std::size_t a = *seed;
        while (a >= p && d.finite_part.contains(a - p)) {
            a -= p;
            d.finite_part.erase(a);
        }
        d.linear_parts.emplace(a, p);
    }
    if (witnessed == p || language_empty) { d.status = Status::exact; }
    d.period = observed_period(lengths, n_max);
    d.periodic = d.period.has_value();
    return d;
}

bool may_accept(const afma::Afma1& a) {
    StateSet seen{ a.initial };
    std::vector<State> todo{ a.initial };
    bool vanishes = false;
    const auto visit = [&](StateSet q) {
        vanishes = vanishes || q.empty();
        for (State t : q.to_vector()) {
            if (!seen.contains(t)) {
                seen.insert(t);
                todo.push_back(t);
            }
        }
    };
    while (!todo.empty()) {
        const State s = todo.back();
        todo.pop_back();
        for (StateSet q : a.mu_eq[s]) { visit(q); }
        for (const auto& ch : a.mu_neq[s]) { visit(ch.keep | ch.replace); }
        for (const auto& [key, choices] : a.mu_delta) {
            if (key.first != s) { continue; }
            for (StateSet q : choices) { visit(q); }
        }
    }
    return vanishes || !(seen & a.accepting).empty();
}

SpectrumDescription describe_spectrum(const afma::Afma1& a, std::size_t n, std::size_t n_max) {
    return describe_lengths(length_spectrum(a, n_max), n, n_max, !may_accept(a));
}

} // namespace finmem::semilinear

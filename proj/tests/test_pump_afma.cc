#include "finmem/corpus.hh"
#include "finmem/error.hh"
#include "finmem/pump_afma.hh"
#include "finmem/wqo.hh"
#include "support.hh"

#include <catch_amalgamated.hpp>

using namespace finmem;
using afma::ConfigSet;
using finmem::test::user_word;

namespace {

const Symbol hash = Symbol::constant("#");

wqo::CountMap nonzero(const wqo::CountMap& m) {
    wqo::CountMap out;
    for (const auto& [q, n] : m) {
        if (n != 0) { out.emplace(q, n); }
    }
    return out;
}

/// Direct evaluation of the trace formulas.
struct Expected {
    StateSet s;
    wqo::CountMap f;
    SymbolSet sigma;
};

Expected evaluate(const Word& w, const afma::Run& run, std::size_t i) {
    const std::size_t m = w.size();
    Expected e;
    for (std::size_t p = m - i; p < m; ++p) { e.sigma.insert(w[p]); }
    const auto& c = run[m - i];
    std::map<Symbol, StateSet> by_symbol;
    for (const auto& cfg : c) {
        if (!e.sigma.contains(cfg.reg)) { e.s.insert(cfg.state); }
        by_symbol[cfg.reg].insert(cfg.state);
    }
    for (const auto& x : e.sigma) {
        const auto it = by_symbol.find(x);
        if (it != by_symbol.end()) { ++e.f[it->second]; }
    }
    return e;
}

std::vector<Symbol> data_letters(Natural n) {
    std::vector<Symbol> xs;
    for (Natural k = 1; k <= n; ++k) { xs.push_back(Symbol::user(k)); }
    return xs;
}

Word distinct_word(std::mt19937_64& g, std::size_t len) {
    auto xs = data_letters(12);
    std::shuffle(xs.begin(), xs.end(), g);
    return Word(xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(len));
}

} // namespace

TEST_CASE("trace of a b on the distinct-letters automaton") {
    const auto a = corpus::l_diff_automaton();
    const auto w = user_word({ 1, 2 });
    const auto run = afma::witness_run(a, w);
    REQUIRE(run);
    const auto trace = pump_afma::trace_reversal(a, w, *run);
    REQUIRE(trace.size() == 3);
    CHECK(trace[0].suffix_symbols.empty());
    CHECK(nonzero(trace[0].counts).empty());
    CHECK(trace[0].states == StateSet{ 0, 1 });
    CHECK(trace[2].suffix_symbols.size() == 2);
    for (std::size_t i = 0; i <= 2; ++i) {
        const auto e = evaluate(w, *run, i);
        CHECK(trace[i].i == i);
        CHECK(trace[i].states == e.s);
        CHECK(nonzero(trace[i].counts) == e.f);
        CHECK(trace[i].suffix_symbols == e.sigma);
    }
    CHECK(pump_afma::find_pump_indices(trace) == std::pair<std::size_t, std::size_t>{ 0, 1 });
}

TEST_CASE("trace reversal rejects non-runs") {
    const auto a = corpus::l_diff_automaton();
    const auto w = user_word({ 1, 2 });
    afma::Run bogus{ afma::initial_configs(a), {}, {} };
    CHECK_THROWS_AS(pump_afma::trace_reversal(a, w, bogus), NotARun);
}

TEST_CASE("traces match the formulas on corpus runs") {
    auto g = test::rng(60);
    for (const std::string name : { "l_diff", "l_subset", "l_last" }) {
        const auto e = corpus::build(name);
        const auto& a = e.afma();
        auto letters = data_letters(5);
        letters.insert(letters.end(), a.constants.begin(), a.constants.end());
        int checked = 0;
        for (int rep = 0; rep < 5000 && checked < 80; ++rep) {
            const auto w = test::random_word(g, letters, test::uniform(g, 0, 9));
            const auto run = afma::witness_run(a, w);
            if (!run) { continue; }
            ++checked;
            const auto trace = pump_afma::trace_reversal(a, w, *run);
            REQUIRE(trace.size() == w.size() + 1);
            for (std::size_t i = 0; i <= w.size(); ++i) {
                const auto ex = evaluate(w, *run, i);
                REQUIRE(trace[i].states == ex.s);
                REQUIRE(nonzero(trace[i].counts) == ex.f);
                REQUIRE(trace[i].suffix_symbols == ex.sigma);
                REQUIRE(trace[i].suffix_symbols.size() <= i);
                for (const auto& [q, n] : trace[i].counts) { REQUIRE(n <= i); }
                if (i > 0) {
                    const auto& prev = trace[i - 1].suffix_symbols;
                    REQUIRE(std::includes(trace[i].suffix_symbols.begin(), trace[i].suffix_symbols.end(), prev.begin(), prev.end()));
                }
            }
            REQUIRE(wqo::is_resembling(pump_afma::as_sequence(trace), a.num_states()));
        }
        CHECK(checked == 80);
    }
}

TEST_CASE("pump indices on constant and bad traces") {
    pump_afma::Trace flat;
    for (std::size_t i = 0; i < 4; ++i) { flat.push_back({ i, StateSet{ 0 }, {}, {} }); }
    CHECK(pump_afma::find_pump_indices(flat) == std::pair<std::size_t, std::size_t>{ 0, 1 });

    const auto bad = wqo::longest_bad(1);
    pump_afma::Trace embedded;
    for (std::size_t i = 0; i < bad.entries.size(); ++i) { embedded.push_back({ i, bad.entries[i].q, bad.entries[i].f, {} }); }
    CHECK_FALSE(pump_afma::find_pump_indices(embedded).has_value());
}

TEST_CASE("distinct-letters certificates use infinite order") {
    const auto a = corpus::l_diff_automaton();
    auto g = test::rng(61);
    for (int rep = 0; rep < 20; ++rep) {
        const auto w = distinct_word(g, test::uniform(g, 4, 10));
        const auto cert = pump_afma::pump(a, w);
        REQUIRE(cert);
        REQUIRE(cert->word() == w);
        REQUIRE_FALSE(cert->bundle.alpha.order().is_finite());
        const auto report = pump_afma::verify_pumped(a, *cert, 4);
        REQUIRE(report.ok());
        REQUIRE(report.accepted.size() == 5);
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto p = pump_afma::pumped_word(*cert, k);
            REQUIRE(p.size() == w.size() + k * cert->upsilon.size());
            REQUIRE(all_distinct(p));
        }
    }
}

TEST_CASE("subset certificates pump inside the suffix") {
    const auto a = corpus::l_subset_automaton();
    auto g = test::rng(62);
    for (int rep = 0; rep < 30; ++rep) {
        const auto psi = distinct_word(g, test::uniform(g, 2, 6));
        Word w = psi;
        w.push_back(hash);
        w.insert(w.end(), psi.rbegin(), psi.rend());
        const auto cert = pump_afma::pump(a, w);
        REQUIRE(cert);
        REQUIRE(cert->tau.size() >= psi.size());
        REQUIRE(pump_afma::verify_pumped(a, *cert, 4).ok());
    }
}

TEST_CASE("short words and rejected words") {
    const auto a = corpus::l_diff_automaton();
    CHECK_FALSE(pump_afma::pump(a, {}).has_value());
    CHECK_FALSE(pump_afma::pump(corpus::l_subset_automaton(), Word{ Symbol::user(1), hash, Symbol::user(1) }).has_value());
    CHECK_THROWS_AS(pump_afma::pump(a, user_word({ 1, 1 })), NotAccepted);
    const auto run = *afma::witness_run(a, user_word({ 1, 2 }));
    CHECK_THROWS_AS(pump_afma::certificate_for(a, user_word({ 1, 2 }), run, 1, 1), PreconditionViolated);
}

TEST_CASE("certificates satisfy the relation and its preconditions") {
    auto g = test::rng(63);
    for (const std::string name : { "l_diff", "l_subset", "l_last" }) {
        const auto e = corpus::build(name);
        const auto& a = e.afma();
        auto letters = data_letters(6);
        letters.insert(letters.end(), a.constants.begin(), a.constants.end());
        int checked = 0;
        for (int rep = 0; rep < 20000 && checked < 40; ++rep) {
            const auto w = test::random_word(g, letters, test::uniform(g, 3, 10));
            if (!afma::accepts(a, w)) { continue; }
            const auto cert = pump_afma::pump(a, w);
            if (!cert) { continue; }
            ++checked;
            const auto& c1 = cert->c_tau_upsilon();
            const auto& c2 = cert->c_tau();
            REQUIRE(cert->upsilon.size() > 0);
            REQUIRE(cert->upsilon.size() + cert->phi.size() == cert->j);
            const auto s1 = contents(cert->phi);
            Word up = cert->upsilon;
            up.insert(up.end(), cert->phi.begin(), cert->phi.end());
            const auto s2 = contents(up);
            // Equal boundary states and dominated counts, recomputed from the sets.
            REQUIRE(relation::states_for_symset(c1, SymSet(s1), true) == relation::states_for_symset(c2, SymSet(s2), true));
            for (const auto& [q, xs] : relation::signature_classes(c1)) {
                std::size_t lhs = 0, rhs = 0;
                for (const auto& x : xs) { lhs += s1.contains(x) ? 1 : 0; }
                for (const auto& x : relation::symbols_for_stateset(c2, q)) { rhs += s2.contains(x) ? 1 : 0; }
                REQUIRE(lhs <= rhs);
            }
            const auto& bundle = cert->bundle;
            const auto img = relation::image(bundle.alpha, bundle.sigma_prime);
            REQUIRE(relation::preceq_check({ c1, img, c2, bundle.sigma_prime, bundle.alpha }).holds);
            REQUIRE(symset_subset(img, bundle.sigma_prime));
            REQUIRE(symset_subset(SymSet(s2), bundle.sigma_prime));
            const auto report = pump_afma::verify_pumped(a, *cert, 4);
            REQUIRE(report.ok());
            for (std::size_t k = 1; k <= 4; ++k) { REQUIRE(e.predicate(pump_afma::pumped_word(*cert, k))); }
        }
        CHECK(checked == 40);
    }
}

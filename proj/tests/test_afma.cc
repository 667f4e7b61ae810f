#include "finmem/afma.hh"
#include "finmem/corpus.hh"
#include "finmem/error.hh"
#include "support.hh"

#include <catch_amalgamated.hpp>

using namespace finmem;
using finmem::test::user_word;

namespace {

const Symbol hash = Symbol::constant("#");

std::vector<Symbol> letters_for(const afma::Afma1& a, Natural lo, Natural hi) {
    std::vector<Symbol> xs(a.constants.begin(), a.constants.end());
    for (Natural n = lo; n <= hi; ++n) { xs.push_back(Symbol::user(n)); }
    return xs;
}

} // namespace

TEST_CASE("the distinct-letters automaton") {
    const auto a = corpus::l_diff_automaton();
    CHECK(afma::accepts(a, {}));
    CHECK(afma::accepts(a, user_word({ 1, 2, 3 })));
    CHECK_FALSE(afma::accepts(a, user_word({ 1, 2, 1 })));
    CHECK_FALSE(afma::accepts(a, user_word({ 4, 4 })));
    CHECK_THROWS_AS(afma::accepts(a, Word{ hash }), MalformedLetter);
}

TEST_CASE("the subset automaton") {
    const auto a = corpus::l_subset_automaton();
    CHECK(afma::accepts(a, Word{ hash }));
    CHECK(afma::accepts(a, Word{ Symbol::user(1), Symbol::user(2), hash, Symbol::user(2), Symbol::user(3), Symbol::user(1) }));
    CHECK_FALSE(afma::accepts(a, Word{ Symbol::user(1), Symbol::user(2), hash, Symbol::user(2) }));
    CHECK_FALSE(afma::accepts(a, Word{ Symbol::user(1), Symbol::user(1), hash, Symbol::user(1) }));
    CHECK_FALSE(afma::accepts(a, Word{ Symbol::user(1), hash, Symbol::user(1), Symbol::user(1) }));
    CHECK_FALSE(afma::accepts(a, Word{ hash, hash }));
    CHECK_FALSE(afma::accepts(a, user_word({ 1, 2 })));
}

TEST_CASE("the last-letter automaton") {
    const auto a = corpus::l_last_automaton();
    CHECK(afma::accepts(a, {}));
    CHECK(afma::accepts(a, user_word({ 1, 1, 2 })));
    CHECK_FALSE(afma::accepts(a, user_word({ 1, 2, 1 })));
}

TEST_CASE("corpus alternating automata agree with their predicates") {
    for (const std::string name : { "l_diff", "l_subset", "l_last" }) {
        const auto e = corpus::build(name);
        test::for_each_word(letters_for(e.afma(), 0, 3), 5, [&](const Word& w) {
            INFO(name << ": " << format_word(w));
            REQUIRE(afma::accepts(e.afma(), w) == e.predicate(w));
        });
    }
}

TEST_CASE("empty choice succeeds, missing choice is stuck") {
    afma::Afma1 a;
    a.states = { "p", "q" };
    a.accepting = {};
    a.mu_eq = { {}, {} };
    a.mu_neq = { { { StateSet{}, StateSet{} } }, {} };
    a.validate();
    CHECK(afma::accepts(a, user_word({ 5 })));
    CHECK(afma::accepts(a, user_word({ 5, 6, 7 })));
    CHECK_FALSE(afma::accepts(a, user_word({ 0 })));
    CHECK_FALSE(afma::accepts(a, {}));
}

TEST_CASE("steps are exactly the unions of one choice per configuration") {
    auto g = test::rng(30);
    for (int rep = 0; rep < 80; ++rep) {
        const auto a = test::random_afma(g, test::uniform(g, 1, 4));
        const auto letters = letters_for(a, 0, 3);
        for (int k = 0; k < 20; ++k) {
            afma::ConfigSet c;
            for (std::size_t m = test::uniform(g, 1, 3); m > 0; --m) {
                c.insert({ static_cast<State>(test::uniform(g, 0, a.num_states() - 1)), Symbol::user(test::uniform(g, 0, 2)) });
            }
            const auto x = letters[test::uniform(g, 0, letters.size() - 1)];
            const auto steps = afma::step_sets(a, c, x);
            afma::ConfigSet universe;
            for (const auto& s : steps) {
                REQUIRE(afma::is_step(a, c, x, s));
                universe.insert(s.begin(), s.end());
            }
            // Random subsets of the universe are steps iff they appear in the product.
            const std::vector<afma::AfmaConfig> u(universe.begin(), universe.end());
            for (int t = 0; t < 10; ++t) {
                afma::ConfigSet n;
                for (const auto& cfg : u) {
                    if (test::coin(g)) { n.insert(cfg); }
                }
                REQUIRE(afma::is_step(a, c, x, n) == steps.contains(n));
            }
        }
    }
}

TEST_CASE("search acceptance matches naive acceptance and yields runs") {
    auto g = test::rng(31);
    int accepted = 0;
    for (int rep = 0; rep < 80; ++rep) {
        const auto a = test::random_afma(g, test::uniform(g, 1, 4));
        const auto letters = letters_for(a, 0, 3);
        for (int k = 0; k < 40; ++k) {
            const auto w = test::random_word(g, letters, test::uniform(g, 0, 6));
            const bool acc = afma::accepts(a, w);
            REQUIRE(acc == afma::accepts_naive(a, w));
            const auto run = afma::witness_run(a, w);
            REQUIRE(run.has_value() == acc);
            if (run) {
                ++accepted;
                REQUIRE(afma::is_run(a, w, *run));
                REQUIRE(afma::all_accepting(a, run->back()));
            }
        }
    }
    CHECK(accepted > 100);
}

TEST_CASE("restricting a run to a subset keeps it a run") {
    auto g = test::rng(32);
    const auto a = corpus::l_subset_automaton();
    const auto letters = letters_for(a, 1, 4);
    int checked = 0;
    for (int rep = 0; rep < 3000 && checked < 100; ++rep) {
        const auto w = test::random_word(g, letters, test::uniform(g, 2, 8));
        const auto run = afma::witness_run(a, w);
        if (!run) { continue; }
        const std::size_t pos = test::uniform(g, 0, w.size());
        afma::ConfigSet c;
        for (const auto& cfg : (*run)[pos]) {
            if (test::coin(g)) { c.insert(cfg); }
        }
        const afma::Run tail(run->begin() + static_cast<std::ptrdiff_t>(pos), run->end());
        const auto sub = afma::restrict_run(a, w, pos, c, tail);
        REQUIRE(sub.front() == c);
        for (std::size_t k = 0; k < sub.size(); ++k) {
            REQUIRE(std::includes(tail[k].begin(), tail[k].end(), sub[k].begin(), sub[k].end()));
            if (k + 1 < sub.size()) { REQUIRE(afma::is_step(a, sub[k], w[pos + k], sub[k + 1])); }
        }
        REQUIRE(afma::all_accepting(a, sub.back()));
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("permutations fixing the initial register map runs to runs") {
    auto g = test::rng(33);
    for (int rep = 0; rep < 40; ++rep) {
        const auto a = test::random_afma(g, test::uniform(g, 1, 4));
        const auto letters = letters_for(a, 1, 4);
        for (int k = 0; k < 20; ++k) {
            const auto w = test::random_word(g, letters, test::uniform(g, 0, 6));
            std::vector<Symbol> support;
            for (Natural n = 1; n <= 6; ++n) { support.push_back(Symbol::user(n)); }
            const auto alpha = test::random_perm(g, support);
            const auto mapped = alpha.map_word(w);
            REQUIRE(afma::accepts(a, w) == afma::accepts(a, mapped));
            if (const auto run = afma::witness_run(a, w)) {
                afma::Run image;
                for (const auto& c : *run) { image.push_back(afma::map_configset(alpha, c)); }
                REQUIRE(afma::is_run(a, mapped, image));
            }
        }
    }
}

TEST_CASE("invalid alternating automata are rejected") {
    auto a = corpus::l_diff_automaton();
    SECTION("unknown state in a choice") {
        a.mu_eq[0].insert(StateSet{ 5 });
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
    SECTION("constant initial register") {
        a.initial_register = hash;
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
    SECTION("transition on an undeclared constant") {
        a.mu_delta[{ 0, hash }] = { StateSet{} };
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
}

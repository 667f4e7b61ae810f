#include "finmem/corpus.hh"
#include "finmem/error.hh"
#include "finmem/fma.hh"
#include "support.hh"

#include <catch_amalgamated.hpp>

using namespace finmem;
using finmem::test::user_word;

namespace {

std::vector<Symbol> users(Natural lo, Natural hi) {
    std::vector<Symbol> xs;
    for (Natural n = lo; n <= hi; ++n) { xs.push_back(Symbol::user(n)); }
    return xs;
}

bool is_witness(const fma::Fma& a, const Word& w, const std::vector<fma::FmaConfig>& run) {
    if (run.size() != w.size() + 1 || run.front() != fma::initial_config(a)) { return false; }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!fma::step(a, run[k], w[k]).contains(run[k + 1])) { return false; }
    }
    return a.accepting.contains(run.back().state);
}

} // namespace

TEST_CASE("the repeat automaton") {
    const auto a = corpus::l_repeat_automaton();
    CHECK(fma::accepts(a, user_word({ 1, 2, 1 })));
    CHECK(fma::accepts(a, user_word({ 3, 3 })));
    CHECK(fma::accepts(a, user_word({ 1, 2, 3, 2, 4 })));
    CHECK_FALSE(fma::accepts(a, user_word({ 1, 2, 3 })));
    CHECK_FALSE(fma::accepts(a, {}));
    CHECK_FALSE(fma::accepts(a, user_word({ 5 })));
}

TEST_CASE("the repeat automaton reads the initial register as a stored letter") {
    // d0 sits in the register from the start, so d0 alone moves to the guessing state.
    const auto a = corpus::l_repeat_automaton();
    CHECK(fma::accepts(a, user_word({ 0, 0 })));
    CHECK_FALSE(fma::accepts(a, user_word({ 0, 1, 1 })));
    CHECK(corpus::l_repeat(user_word({ 0, 1, 1 })));
}

TEST_CASE("the first-letter automaton") {
    const auto a = corpus::l_first_automaton();
    CHECK(fma::accepts(a, user_word({ 1 })));
    CHECK(fma::accepts(a, user_word({ 1, 2, 2, 3 })));
    CHECK_FALSE(fma::accepts(a, user_word({ 1, 2, 1 })));
    CHECK_FALSE(fma::accepts(a, {}));
}

TEST_CASE("corpus automata agree with their predicates away from the initial register") {
    for (const std::string name : { "l_repeat", "l_first" }) {
        const auto e = corpus::build(name);
        std::size_t n = 0;
        test::for_each_word(users(1, 4), 6, [&](const Word& w) {
            REQUIRE(fma::accepts(e.fma(), w) == e.predicate(w));
            ++n;
        });
        CHECK(n == 5461);
    }
}

TEST_CASE("letter checks") {
    const auto a = corpus::l_repeat_automaton();
    CHECK_THROWS_AS(fma::accepts(a, Word{ Symbol::constant("#") }), MalformedLetter);
    CHECK_THROWS_AS(fma::step(a, fma::initial_config(a), Symbol::constant("$")), MalformedLetter);
}

TEST_CASE("invalid automata are rejected") {
    auto a = corpus::l_repeat_automaton();
    SECTION("initial state out of range") {
        a.initial = 7;
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
    SECTION("register count mismatch") {
        a.initial_assignment.push_back(Symbol::user(3));
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
    SECTION("repeated initial registers") {
        a.registers = 2;
        a.initial_assignment = { Symbol::user(3), Symbol::user(3) };
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
    SECTION("replace target out of range") {
        a.trans_neq_replace[0].insert(fma::ReplaceTarget{ 0, 4 });
        CHECK_THROWS_AS(a.validate(), InvalidAutomaton);
    }
}

TEST_CASE("powerset acceptance matches depth-first search on random automata") {
    auto g = test::rng(20);
    std::vector<Symbol> letters = users(0, 3);
    letters.push_back(Symbol::user(100));
    letters.push_back(Symbol::user(101));
    letters.push_back(Symbol::constant("#"));
    int accepted = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const auto a = test::random_fma(g, test::uniform(g, 1, 4), test::uniform(g, 1, 2));
        for (int k = 0; k < 60; ++k) {
            const auto w = test::random_word(g, letters, test::uniform(g, 0, 6));
            const bool acc = fma::accepts(a, w);
            REQUIRE(acc == fma::accepts_naive(a, w));
            const auto run = fma::witness_run(a, w);
            REQUIRE(run.has_value() == acc);
            if (run) {
                ++accepted;
                REQUIRE(is_witness(a, w, *run));
            }
        }
    }
    CHECK(accepted > 50);
}

TEST_CASE("length enumeration matches brute force") {
    auto g = test::rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        const auto a = test::random_fma(g, test::uniform(g, 1, 3), test::uniform(g, 1, 2));
        const std::size_t n_max = 4;
        std::vector<Symbol> letters = a.initial_assignment;
        for (Natural n = 0; n < n_max; ++n) { letters.push_back(Symbol::user(n)); }
        letters.push_back(Symbol::constant("#"));
        std::set<std::size_t> expected;
        test::for_each_word(letters, n_max, [&](const Word& w) {
            if (fma::accepts(a, w)) { expected.insert(w.size()); }
        });
        REQUIRE(fma::enumerate_lengths(a, n_max) == expected);
    }
    CHECK(fma::enumerate_lengths(corpus::l_repeat_automaton(), 6) == std::set<std::size_t>{ 2, 3, 4, 5, 6 });
    CHECK(fma::enumerate_lengths(corpus::l_first_automaton(), 4) == std::set<std::size_t>{ 1, 2, 3, 4 });
}

TEST_CASE("acceptance is invariant under permutations fixing the initial registers") {
    auto g = test::rng(22);
    const auto letters = users(0, 5);
    for (int rep = 0; rep < 30; ++rep) {
        const auto a = test::random_fma(g, test::uniform(g, 1, 4), test::uniform(g, 1, 2));
        for (int k = 0; k < 30; ++k) {
            const auto w = test::random_word(g, letters, test::uniform(g, 0, 6));
            const auto alpha = test::random_perm(g, users(0, 7));
            REQUIRE(fma::accepts(a, w) == fma::accepts(a, alpha.map_word(w)));
        }
    }
}

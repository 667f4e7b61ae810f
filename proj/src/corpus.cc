// Example automata and reference predicates.

#include "finmem/corpus.hh"
#include "finmem/error.hh"

#include <algorithm>

namespace finmem::corpus {

namespace {

const Symbol hash = Symbol::constant("#");
const Symbol dollar = Symbol::constant("$");

std::vector<Word> split_on(const Word& w, const Symbol& sep) {
    std::vector<Word> parts(1);
    for (const auto& x : w) {
        if (x == sep) {
            parts.emplace_back();
        } else {
            parts.back().push_back(x);
        }
    }
    return parts;
}

bool subset(const Word& a, const Word& b) {
    const auto sb = contents(b);
    return std::all_of(a.begin(), a.end(), [&sb](const Symbol& x) { return sb.contains(x); });
}

/// w = psi sep sep omega with no other separator, if `double_sep`; psi sep omega otherwise.
std::optional<std::pair<Word, Word>> split_once(const Word& w, const Symbol& sep, bool double_sep) {
    const auto parts = split_on(w, sep);
    if (!double_sep) {
        if (parts.size() != 2) { return std::nullopt; }
        return std::pair{ parts[0], parts[1] };
    }
    if (parts.size() != 3 || !parts[1].empty()) { return std::nullopt; }
    return std::pair{ parts[0], parts[2] };
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

} // namespace

bool l_repeat(const Word& w) { return !all_distinct(w); }

bool l_first(const Word& w) { return !w.empty() && std::find(w.begin() + 1, w.end(), w[0]) == w.end(); }

bool l_diff(const Word& w) { return all_distinct(w); }

bool l_last(const Word& w) { return w.empty() || std::find(w.begin(), w.end() - 1, w.back()) == w.end() - 1; }

bool l_subset(const Word& w) {
    const auto p = split_once(w, hash, false);
    return p && l_diff(p->first) && l_diff(p->second) && subset(p->first, p->second);
}

bool l_supset(const Word& w) {
    const auto p = split_once(w, hash, false);
    return p && l_diff(p->first) && l_diff(p->second) && subset(p->second, p->first);
}

bool l_co(const Word& w) {
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (l_last(slice(w, 0, p)) && l_first(slice(w, p, w.size()))) { return true; }
    }
    return false;
}

bool l_2diff(const Word& w) {
    const auto p = split_once(w, hash, true);
    return p && l_diff(p->first) && l_diff(p->second);
}

bool l_eq(const Word& w) {
    const auto p = split_once(w, hash, true);
    return p && l_diff(p->first) && l_diff(p->second) && contents(p->first) == contents(p->second);
}

bool l_first_dollar_last(const Word& w) {
    const auto p = split_once(w, dollar, false);
    return p && l_first(p->first) && l_last(p->second);
}

bool l_kleene(const Word& w) {
    // reach[k]: the prefix of length k is a concatenation of blocks.
    std::vector<bool> reach(w.size() + 1, false);
    reach[0] = true;
    for (std::size_t from = 0; from < w.size(); ++from) {
        if (!reach[from]) { continue; }
        for (std::size_t to = from + 1; to <= w.size(); ++to) {
            if (!reach[to] && l_first_dollar_last(slice(w, from, to))) { reach[to] = true; }
        }
    }
    return reach[w.size()];
}

bool l_hash(const Word& w) {
    if (w.empty() || w.back() != hash) { return false; }
    const auto blocks = split_on(Word(w.begin(), w.end() - 1), hash);
    const Word& last = blocks.back();
    if (last.size() != blocks.size() || !all_distinct(last)) { return false; }
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k] != slice(last, 0, k + 1)) { return false; }
    }
    return true;
}

std::size_t l_hash_length(std::size_t n) { return (n * n + 3 * n) / 2; }

Word l_hash_word(std::size_t n) {
    Word w;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t t = 1; t <= k; ++t) { w.push_back(Symbol::user(t)); }
        w.push_back(hash);
    }
    return w;
}

fma::Fma l_repeat_automaton() {
    fma::Fma a;
    a.states = { "s0", "s", "f" };
    a.initial = 0;
    a.accepting = { 2 };
    a.registers = 1;
    a.initial_assignment = { Symbol::user(0) };
    a.trans_eq = { { { 1 } }, { { 2 } }, { { 2 } } };
    a.trans_neq_skip = { { 0 }, { 1 }, { 2 } };
    a.trans_neq_replace = { { fma::ReplaceTarget{ 1, 0 } }, {}, {} };
    a.validate();
    return a;
}

fma::Fma l_first_automaton() {
    fma::Fma a;
    a.states = { "s0", "f" };
    a.initial = 0;
    a.accepting = { 1 };
    a.registers = 1;
    a.initial_assignment = { Symbol::user(0) };
    a.trans_eq = { { { 1 } }, { {} } };
    a.trans_neq_skip = { {}, { 1 } };
    a.trans_neq_replace = { { fma::ReplaceTarget{ 1, 0 } }, {} };
    a.validate();
    return a;
}

afma::Afma1 l_diff_automaton() {
    afma::Afma1 a;
    a.states = { "q0", "watch" };
    a.accepting = { 0, 1 };
    a.initial_register = Symbol::user(0);
    a.mu_eq = { { StateSet{ 0, 1 } }, {} };
    a.mu_neq = { { { StateSet{ 0 }, StateSet{ 1 } } }, { { StateSet{ 1 }, StateSet{} } } };
    a.validate();
    return a;
}

afma::Afma1 l_last_automaton() {
    afma::Afma1 a;
    a.states = { "q0", "calm", "hot" };
    a.accepting = { 0, 1 };
    a.initial_register = Symbol::user(0);
    a.mu_eq = { { StateSet{ 0, 1 } }, { StateSet{ 2 } }, { StateSet{ 2 } } };
    a.mu_neq = { { { StateSet{ 0 }, StateSet{ 1 } } },
                 { { StateSet{ 1 }, StateSet{} } },
                 { { StateSet{ 1 }, StateSet{} } } };
    a.validate();
    return a;
}

afma::Afma1 l_subset_automaton() {
    enum : State { q0, wpre, find, find2, post, wpost };
    afma::Afma1 a;
    a.states = { "q0", "wpre", "find", "find2", "post", "wpost" };
    a.accepting = { post, wpost };
    a.constants = { hash };
    a.initial_register = Symbol::user(0);
    a.mu_eq = { { StateSet{ q0, wpre, find } }, {}, { StateSet{ find } }, { StateSet{} }, { StateSet{ post, wpost } }, {} };
    a.mu_neq = { { { StateSet{ q0 }, StateSet{ wpre, find } } },
                 { { StateSet{ wpre }, StateSet{} } },
                 { { StateSet{ find }, StateSet{} } },
                 { { StateSet{ find2 }, StateSet{} } },
                 { { StateSet{ post }, StateSet{ wpost } } },
                 { { StateSet{ wpost }, StateSet{} } } };
    a.mu_delta = { { { q0, hash }, { StateSet{ post } } },
                   { { wpre, hash }, { StateSet{} } },
                   { { find, hash }, { StateSet{ find2 } } },
                   { { wpost, hash }, { StateSet{ wpost } } } };
    a.validate();
    return a;
}

std::vector<std::string> names() {
    return { "l_repeat", "l_first", "l_diff", "l_subset", "l_last", "l_supset", "l_co",
             "l_2diff",  "l_eq",    "l_first_dollar_last", "l_kleene", "l_hash" };
}

CorpusEntry build(const std::string& name) {
    const SymbolSet none;
    if (name == "l_repeat") {
        return { name, l_repeat_automaton(), l_repeat, "some letter occurs twice; words avoid the initial register d0",
                 none };
    }
    if (name == "l_first") {
        return { name, l_first_automaton(), l_first, "nonempty words whose first letter does not occur again", none };
    }
    if (name == "l_diff") { return { name, l_diff_automaton(), l_diff, "words without repeated letters", none }; }
    if (name == "l_subset") {
        return { name, l_subset_automaton(), l_subset,
                 "psi # omega with psi, omega repeat-free and every letter of psi in omega", { hash } };
    }
    if (name == "l_last") {
        return { name, l_last_automaton(), l_last, "words whose last letter does not occur earlier", none };
    }
    if (name == "l_supset") {
        return { name, {}, l_supset, "psi # omega with psi, omega repeat-free and every letter of omega in psi",
                 { hash } };
    }
    if (name == "l_co") { return { name, {}, l_co, "concatenation of l_last and l_first", none }; }
    if (name == "l_2diff") { return { name, {}, l_2diff, "psi # # omega with psi, omega repeat-free", { hash } }; }
    if (name == "l_eq") {
        return { name, {}, l_eq, "psi # # omega with psi, omega repeat-free over the same letters", { hash } };
    }
    if (name == "l_first_dollar_last") {
        return { name, {}, l_first_dollar_last, "psi $ omega with psi in l_first and omega in l_last", { dollar } };
    }
    if (name == "l_kleene") { return { name, {}, l_kleene, "star of l_first_dollar_last", { dollar } }; }
    if (name == "l_hash") {
        return { name, {}, l_hash, "s1 # s1 s2 # ... # s1 ... sn # with distinct letters, n >= 1", { hash } };
    }
    throw UnknownName("unknown corpus entry '" + name + "'");
}

} // namespace finmem::corpus

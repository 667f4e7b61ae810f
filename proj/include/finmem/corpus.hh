// Example automata and reference predicates for the example languages.

#pragma once

#include "finmem/afma.hh"
#include "finmem/fma.hh"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace finmem::corpus {

using Automaton = std::variant<std::monostate, fma::Fma, afma::Afma1>;

struct CorpusEntry {
    std::string name;
    Automaton automaton;
    std::function<bool(const Word&)> predicate;
    std::string notes;
    /// Constants used by the language.
    SymbolSet constants;

    bool has_fma() const { return std::holds_alternative<fma::Fma>(automaton); }
    bool has_afma() const { return std::holds_alternative<afma::Afma1>(automaton); }
    const fma::Fma& fma() const { return std::get<fma::Fma>(automaton); }
    const afma::Afma1& afma() const { return std::get<afma::Afma1>(automaton); }
};

std::vector<std::string> names();
/// Throws UnknownName.
CorpusEntry build(const std::string& name);

fma::Fma l_repeat_automaton();
fma::Fma l_first_automaton();
afma::Afma1 l_diff_automaton();
afma::Afma1 l_subset_automaton();
afma::Afma1 l_last_automaton();

bool l_repeat(const Word& w);
/// Nonempty words whose first letter does not occur again.
bool l_first(const Word& w);
bool l_diff(const Word& w);
bool l_last(const Word& w);
bool l_subset(const Word& w);
bool l_supset(const Word& w);
bool l_co(const Word& w);
bool l_2diff(const Word& w);
bool l_eq(const Word& w);
bool l_first_dollar_last(const Word& w);
bool l_kleene(const Word& w);
bool l_hash(const Word& w);

/// Length of the word of L_# with n blocks, n >= 1.
std::size_t l_hash_length(std::size_t n);
/// The word of L_# with n blocks over d1 ... dn.
Word l_hash_word(std::size_t n);

} // namespace finmem::corpus

// Symbols, words and symbolic symbol sets.

#include "finmem/alphabet.hh"
#include "finmem/error.hh"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace finmem {

namespace {

bool parse_natural(std::string_view s, Natural& out) {
    if (s.empty() || (s.size() > 1 && s[0] == '0')) { return false; }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_chain_token(std::string_view token, Natural& chain, Natural& index) {
    if (token.size() < 4 || token[0] != 'c') { return false; }
    const auto dot = token.find('.');
    if (dot == std::string_view::npos) { return false; }
    return parse_natural(token.substr(1, dot - 1), chain) && parse_natural(token.substr(dot + 1), index);
}

} // namespace

Symbol::Symbol(ChainElem e) : value_(e) {
    if (e.index == 0) { throw std::invalid_argument("chain indices start at 1"); }
}

std::strong_ordering Symbol::operator<=>(const Symbol& other) const {
    if (auto c = value_.index() <=> other.value_.index(); c != 0) { return c; }
    switch (value_.index()) {
        case 0: return as_const() <=> other.as_const();
        case 1: return as_user() <=> other.as_user();
        default: return as_chain() <=> other.as_chain();
    }
}

std::string Symbol::to_string() const {
    if (is_const()) { return as_const().name; }
    if (is_user()) { return "d" + std::to_string(as_user().n); }
    const auto& e = as_chain();
    return "c" + std::to_string(e.chain) + "." + std::to_string(e.index);
}

bool is_data_token(std::string_view token) {
    Natural a, b;
    if (token.size() >= 2 && token[0] == 'd' && parse_natural(token.substr(1), a)) { return true; }
    return parse_chain_token(token, a, b);
}

Symbol parse_symbol(std::string_view token, bool allow_chain) {
    if (token.empty()) { throw ParseError("empty token"); }
    Natural a, b;
    if (token.size() >= 2 && token[0] == 'd' && parse_natural(token.substr(1), a)) { return Symbol::user(a); }
    if (parse_chain_token(token, a, b)) {
        if (!allow_chain) { throw ParseError("chain symbol '" + std::string(token) + "' is not allowed in input"); }
        if (b == 0) { throw ParseError("chain index must be at least 1 in '" + std::string(token) + "'"); }
        return Symbol::chain(a, b);
    }
    return Symbol::constant(std::string(token));
}

Word parse_word(std::string_view text, bool allow_chain) {
    Word w;
    std::istringstream in{ std::string(text) };
    std::string token;
    while (in >> token) { w.push_back(parse_symbol(token, allow_chain)); }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (const auto& x : w) {
        if (!out.empty()) { out += ' '; }
        out += x.to_string();
    }
    return out;
}

SymbolSet contents(std::span<const Symbol> w) { return SymbolSet(w.begin(), w.end()); }

bool all_distinct(std::span<const Symbol> tuple) { return contents(tuple).size() == tuple.size(); }

SymSet::SymSet(SymbolSet finite, std::map<Natural, Natural> tails)
    : finite_(std::move(finite)), tails_(std::move(tails)) {
    for (const auto& [chain, from] : tails_) {
        if (from == 0) { throw std::invalid_argument("tail must start at index 1 or later"); }
    }
    normalize();
}

// Finite elements covered by a tail are dropped and the element just below a tail is absorbed
// into it, so equal sets have equal representations.
void SymSet::normalize() {
    for (auto& [chain, from] : tails_) {
        while (from > 1 && finite_.contains(Symbol::chain(chain, from - 1))) { --from; }
    }
    std::erase_if(finite_, [this](const Symbol& x) {
        if (!x.is_chain()) { return false; }
        const auto it = tails_.find(x.as_chain().chain);
        return it != tails_.end() && x.as_chain().index >= it->second;
    });
}

bool SymSet::member(const Symbol& x) const {
    if (x.is_chain()) {
        const auto it = tails_.find(x.as_chain().chain);
        if (it != tails_.end() && x.as_chain().index >= it->second) { return true; }
    }
    return finite_.contains(x);
}

void SymSet::insert(const Symbol& x) {
    if (member(x)) { return; }
    finite_.insert(x);
    normalize();
}

void SymSet::add_tail(Natural chain, Natural from) {
    if (from == 0) { throw std::invalid_argument("tail must start at index 1 or later"); }
    auto [it, inserted] = tails_.try_emplace(chain, from);
    if (!inserted) { it->second = std::min(it->second, from); }
    normalize();
}

SymSet SymSet::unite(const SymSet& other) const {
    SymSet result = *this;
    result.finite_.insert(other.finite_.begin(), other.finite_.end());
    for (const auto& [chain, from] : other.tails_) {
        auto [it, inserted] = result.tails_.try_emplace(chain, from);
        if (!inserted) { it->second = std::min(it->second, from); }
    }
    result.normalize();
    return result;
}

bool symset_member(const SymSet& s, const Symbol& x) { return s.member(x); }

bool symset_subset(const SymSet& a, const SymSet& b) {
    for (const auto& x : a.finite()) {
        if (!b.member(x)) { return false; }
    }
    for (const auto& [chain, from] : a.tails()) {
        const auto it = b.tails().find(chain);
        if (it == b.tails().end() || it->second > from) { return false; }
    }
    return true;
}

std::string format_symset(const SymSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s.finite()) {
        out += (first ? "" : ", ") + x.to_string();
        first = false;
    }
    for (const auto& [chain, from] : s.tails()) {
        out += (first ? "" : ", ") + std::string("c") + std::to_string(chain) + "." + std::to_string(from) + "..";
        first = false;
    }
    return out + "}";
}

} // namespace finmem

// Symbols, words and symbolic symbol sets over an infinite alphabet.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace finmem {

using Natural = std::uint64_t;

/// A letter of the finite set of constants.
struct Const {
    std::string name;
    auto operator<=>(const Const&) const = default;
};

/// A data symbol supplied by the user, written `d<n>`.
struct User {
    Natural n;
    auto operator<=>(const User&) const = default;
};

/// Element `index` (from 1) of an internally generated chain, written `c<chain>.<index>`.
struct ChainElem {
    Natural chain;
    Natural index;
    auto operator<=>(const ChainElem&) const = default;
};

/// A letter of the alphabet. Ordered as constants < user data < chain elements.
class Symbol {
public:
    using Variant = std::variant<Const, User, ChainElem>;

    Symbol() : value_(User{ 0 }) {}
    Symbol(Const c) : value_(std::move(c)) {}
    Symbol(User u) : value_(u) {}
    Symbol(ChainElem e);

    static Symbol constant(std::string name) { return Symbol(Const{ std::move(name) }); }
    static Symbol user(Natural n) { return Symbol(User{ n }); }
    static Symbol chain(Natural chain, Natural index) { return Symbol(ChainElem{ chain, index }); }

    bool is_const() const { return std::holds_alternative<Const>(value_); }
    bool is_data() const { return !is_const(); }
    bool is_user() const { return std::holds_alternative<User>(value_); }
    bool is_chain() const { return std::holds_alternative<ChainElem>(value_); }

    const Const& as_const() const { return std::get<Const>(value_); }
    const User& as_user() const { return std::get<User>(value_); }
    const ChainElem& as_chain() const { return std::get<ChainElem>(value_); }
    const Variant& value() const { return value_; }

    std::string to_string() const;

    bool operator==(const Symbol&) const = default;
    std::strong_ordering operator<=>(const Symbol& other) const;

private:
    Variant value_;
};

using Word = std::vector<Symbol>;
using SymbolSet = std::set<Symbol>;

/// Parses one token. Constants are tokens that are not `d<n>` or `c<c>.<j>`.
Symbol parse_symbol(std::string_view token, bool allow_chain = false);
/// Parses a whitespace-separated word.
Word parse_word(std::string_view text, bool allow_chain = false);
std::string format_word(const Word& w);
/// True when the token has the shape of a data symbol and thus cannot name a constant.
bool is_data_token(std::string_view token);

SymbolSet contents(std::span<const Symbol> w);
bool all_distinct(std::span<const Symbol> tuple);

/// A finite set of symbols together with chain tails {c<chain>.<j> : j >= from}.
class SymSet {
public:
    SymSet() = default;
    explicit SymSet(SymbolSet finite, std::map<Natural, Natural> tails = {});

    const SymbolSet& finite() const { return finite_; }
    /// Chain id to the first index of the tail.
    const std::map<Natural, Natural>& tails() const { return tails_; }

    bool member(const Symbol& x) const;
    bool is_finite() const { return tails_.empty(); }
    void insert(const Symbol& x);
    void add_tail(Natural chain, Natural from);
    SymSet unite(const SymSet& other) const;

    bool operator==(const SymSet&) const = default;

private:
    void normalize();

    SymbolSet finite_;
    std::map<Natural, Natural> tails_;
};

bool symset_member(const SymSet& s, const Symbol& x);
bool symset_subset(const SymSet& a, const SymSet& b);
std::string format_symset(const SymSet& s);

} // namespace finmem

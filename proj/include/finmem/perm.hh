// Permutations of the alphabet that fix every constant, with finite cycles and infinite shift chains.

#pragma once

#include "finmem/alphabet.hh"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace finmem {

/// A chain together with the symbol where it is attached to the finite part.
/// Forward: boundary -> c.1 -> c.2 -> ...  Backward: ... -> c.2 -> c.1 -> boundary.
struct ShiftChain {
    Natural chain;
    Symbol boundary;
    auto operator<=>(const ShiftChain&) const = default;
};

class PermOrder {
public:
    static PermOrder finite(std::uint64_t k) { return PermOrder(k); }
    static PermOrder infinite() { return PermOrder(std::nullopt); }

    bool is_finite() const { return k_.has_value(); }
    std::uint64_t value() const { return k_.value(); }
    bool operator==(const PermOrder&) const = default;

private:
    explicit PermOrder(std::optional<std::uint64_t> k) : k_(k) {}
    std::optional<std::uint64_t> k_;
};

class StructuredPerm {
public:
    /// The identity.
    StructuredPerm() = default;

    /// Validates global bijectivity. `finite_map` is a partial injection whose missing images
    /// and preimages are supplied by the chains. Throws InvalidPermutation.
    StructuredPerm(std::map<Symbol, Symbol> finite_map, std::vector<ShiftChain> fwd_chains,
                   std::vector<ShiftChain> bwd_chains);

    static StructuredPerm swap(const Symbol& a, const Symbol& b);
    static StructuredPerm cycle(const std::vector<Symbol>& elements);

    Symbol apply(const Symbol& x) const { return apply_pow(1, x); }
    Symbol apply_inverse(const Symbol& x) const { return apply_pow(-1, x); }
    Symbol apply_pow(std::int64_t k, const Symbol& x) const;

    PermOrder order() const;
    bool is_identity() const { return cycles_.empty() && lines_.empty(); }

    const std::map<Symbol, Symbol>& finite_map() const { return finite_map_; }
    const std::vector<ShiftChain>& fwd_chains() const { return fwd_chains_; }
    const std::vector<ShiftChain>& bwd_chains() const { return bwd_chains_; }
    /// Non-trivial finite cycles, each starting at its least element.
    const std::vector<std::vector<Symbol>>& cycles() const { return cycles_; }
    /// Chain ids used by the permutation.
    std::set<Natural> chain_ids() const;
    /// Symbols of the finite part that are moved.
    SymbolSet finite_support() const;

    Word map_word(const Word& w, std::int64_t k = 1) const;

private:
    /// A bi-infinite orbit: backward chain, then a finite path, then a forward chain.
    struct Line {
        Natural bwd_chain;
        std::vector<Symbol> path;
        Natural fwd_chain;
    };
    struct Position {
        bool on_line;
        std::size_t orbit;
        std::int64_t offset;
    };

    std::optional<Position> locate(const Symbol& x) const;

    std::map<Symbol, Symbol> finite_map_;
    std::vector<ShiftChain> fwd_chains_;
    std::vector<ShiftChain> bwd_chains_;
    std::vector<std::vector<Symbol>> cycles_;
    std::vector<Line> lines_;
    std::map<Symbol, Position> position_;
    std::map<Natural, std::pair<std::size_t, bool>> chain_line_;
};

/// Extends a partial injection on data symbols to a finite-support permutation by closing each
/// maximal path into a cycle. Throws InvalidInjection.
StructuredPerm complete_partial_injection(const std::vector<std::pair<Symbol, Symbol>>& pairs,
                                          const SymbolSet& forbidden = {});

} // namespace finmem

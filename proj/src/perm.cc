// Structured permutations.

#include "finmem/perm.hh"
#include "finmem/error.hh"

#include <algorithm>
#include <numeric>

namespace finmem {

StructuredPerm::StructuredPerm(std::map<Symbol, Symbol> finite_map, std::vector<ShiftChain> fwd_chains,
                               std::vector<ShiftChain> bwd_chains)
    : finite_map_(std::move(finite_map)), fwd_chains_(std::move(fwd_chains)), bwd_chains_(std::move(bwd_chains)) {
    std::set<Natural> ids;
    for (const auto* chains : { &fwd_chains_, &bwd_chains_ }) {
        for (const auto& c : *chains) {
            if (!ids.insert(c.chain).second) {
                throw InvalidPermutation("chain c" + std::to_string(c.chain) + " is used twice");
            }
        }
    }
    const auto check_symbol = [&ids](const Symbol& x) {
        if (x.is_const()) { throw InvalidPermutation("constant " + x.to_string() + " must be fixed"); }
        if (x.is_chain() && ids.contains(x.as_chain().chain)) {
            throw InvalidPermutation("symbol " + x.to_string() + " belongs to a chain of the permutation");
        }
    };

    SymbolSet domain, range, entries, exits;
    for (const auto& [from, to] : finite_map_) {
        check_symbol(from);
        check_symbol(to);
        domain.insert(from);
        if (!range.insert(to).second) { throw InvalidPermutation("two symbols map to " + to.to_string()); }
    }
    for (const auto& c : fwd_chains_) {
        check_symbol(c.boundary);
        if (domain.contains(c.boundary) || !entries.insert(c.boundary).second) {
            throw InvalidPermutation("symbol " + c.boundary.to_string() + " has two images");
        }
    }
    for (const auto& c : bwd_chains_) {
        check_symbol(c.boundary);
        if (range.contains(c.boundary) || !exits.insert(c.boundary).second) {
            throw InvalidPermutation("symbol " + c.boundary.to_string() + " has two preimages");
        }
    }
    SymbolSet has_image = domain, has_preimage = range;
    has_image.insert(entries.begin(), entries.end());
    has_preimage.insert(exits.begin(), exits.end());
    if (has_image != has_preimage) { throw InvalidPermutation("finite part is not a bijection"); }

    std::map<Symbol, Natural> entry_chain;
    for (const auto& c : fwd_chains_) { entry_chain.emplace(c.boundary, c.chain); }

    SymbolSet visited;
    for (const auto& c : bwd_chains_) {
        Line line{ c.chain, { c.boundary }, 0 };
        while (!entries.contains(line.path.back())) { line.path.push_back(finite_map_.at(line.path.back())); }
        line.fwd_chain = entry_chain.at(line.path.back());
        const std::size_t idx = lines_.size();
        for (std::size_t t = 0; t < line.path.size(); ++t) {
            visited.insert(line.path[t]);
            position_[line.path[t]] = Position{ true, idx, static_cast<std::int64_t>(t) };
        }
        chain_line_[line.bwd_chain] = { idx, false };
        chain_line_[line.fwd_chain] = { idx, true };
        lines_.push_back(std::move(line));
    }
    for (const auto& [start, unused] : finite_map_) {
        if (visited.contains(start)) { continue; }
        std::vector<Symbol> cyc{ start };
        visited.insert(start);
        for (Symbol x = finite_map_.at(start); x != start; x = finite_map_.at(x)) {
            cyc.push_back(x);
            visited.insert(x);
        }
        if (cyc.size() == 1) { continue; }
        const std::size_t idx = cycles_.size();
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            position_[cyc[t]] = Position{ false, idx, static_cast<std::int64_t>(t) };
        }
        cycles_.push_back(std::move(cyc));
    }
}

StructuredPerm StructuredPerm::swap(const Symbol& a, const Symbol& b) {
    if (a == b) { return StructuredPerm(); }
    return StructuredPerm({ { a, b }, { b, a } }, {}, {});
}

StructuredPerm StructuredPerm::cycle(const std::vector<Symbol>& elements) {
    std::map<Symbol, Symbol> m;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!m.emplace(elements[i], elements[(i + 1) % elements.size()]).second) {
            throw InvalidPermutation("cycle repeats " + elements[i].to_string());
        }
    }
    return StructuredPerm(std::move(m), {}, {});
}

std::optional<StructuredPerm::Position> StructuredPerm::locate(const Symbol& x) const {
    if (x.is_chain()) {
        const auto it = chain_line_.find(x.as_chain().chain);
        if (it != chain_line_.end()) {
            const auto [line, forward] = it->second;
            const auto j = static_cast<std::int64_t>(x.as_chain().index);
            const auto last = static_cast<std::int64_t>(lines_[line].path.size()) - 1;
            return Position{ true, line, forward ? last + j : -j };
        }
    }
    const auto it = position_.find(x);
    if (it == position_.end()) { return std::nullopt; }
    return it->second;
}

Symbol StructuredPerm::apply_pow(std::int64_t k, const Symbol& x) const {
    if (k == 0 || x.is_const()) { return x; }
    const auto pos = locate(x);
    if (!pos) { return x; }
    if (!pos->on_line) {
        const auto& cyc = cycles_[pos->orbit];
        const auto len = static_cast<std::int64_t>(cyc.size());
        return cyc[static_cast<std::size_t>(((pos->offset + k) % len + len) % len)];
    }
    const auto& line = lines_[pos->orbit];
    const std::int64_t q = pos->offset + k;
    const auto last = static_cast<std::int64_t>(line.path.size()) - 1;
    if (q < 0) { return Symbol::chain(line.bwd_chain, static_cast<Natural>(-q)); }
    if (q <= last) { return line.path[static_cast<std::size_t>(q)]; }
    return Symbol::chain(line.fwd_chain, static_cast<Natural>(q - last));
}

PermOrder StructuredPerm::order() const {
    if (!lines_.empty()) { return PermOrder::infinite(); }
    std::uint64_t k = 1;
    for (const auto& cyc : cycles_) { k = std::lcm(k, static_cast<std::uint64_t>(cyc.size())); }
    return PermOrder::finite(k);
}

std::set<Natural> StructuredPerm::chain_ids() const {
    std::set<Natural> ids;
    for (const auto& c : fwd_chains_) { ids.insert(c.chain); }
    for (const auto& c : bwd_chains_) { ids.insert(c.chain); }
    return ids;
}

SymbolSet StructuredPerm::finite_support() const {
    SymbolSet s;
    for (const auto& [from, to] : finite_map_) {
        if (from != to) { s.insert(from); }
    }
    for (const auto& c : fwd_chains_) { s.insert(c.boundary); }
    for (const auto& c : bwd_chains_) { s.insert(c.boundary); }
    return s;
}

Word StructuredPerm::map_word(const Word& w, std::int64_t k) const {
    Word out;
    out.reserve(w.size());
    for (const auto& x : w) { out.push_back(apply_pow(k, x)); }
    return out;
}

StructuredPerm complete_partial_injection(const std::vector<std::pair<Symbol, Symbol>>& pairs,
                                          const SymbolSet& forbidden) {
    std::map<Symbol, Symbol> m;
    SymbolSet range;
    for (const auto& [from, to] : pairs) {
        for (const auto& x : { from, to }) {
            if (x.is_const()) { throw InvalidInjection("constant " + x.to_string() + " cannot be moved"); }
            if (forbidden.contains(x)) { throw InvalidInjection("symbol " + x.to_string() + " is forbidden"); }
        }
        const bool inserted = m.emplace(from, to).second;
        if (!inserted) { throw InvalidInjection("symbol " + from.to_string() + " is repeated in the domain"); }
        if (!range.insert(to).second) { throw InvalidInjection("symbol " + to.to_string() + " has two preimages"); }
    }
    // Close every maximal path start -> ... -> end by end -> start, in ascending order of starts.
    std::vector<std::pair<Symbol, Symbol>> closing;
    for (const auto& [start, unused] : m) {
        if (range.contains(start)) { continue; }
        Symbol end = start;
        for (auto it = m.find(end); it != m.end(); it = m.find(end)) { end = it->second; }
        closing.emplace_back(end, start);
    }
    for (const auto& [end, start] : closing) { m.emplace(end, start); }
    return StructuredPerm(std::move(m), {}, {});
}

} // namespace finmem

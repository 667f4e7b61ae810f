// Simulation preorder, transport and permutation construction.

#include "finmem/relation.hh"
#include "finmem/error.hh"

#include <algorithm>

namespace finmem::relation {

SymbolSet sigma_of(const ConfigSet& c) { return afma::registers_of(c); }

StateSet states_for_symbol(const ConfigSet& c, const Symbol& x) {
    StateSet q;
    for (const auto& cfg : c) {
        if (cfg.reg == x) { q.insert(cfg.state); }
    }
    return q;
}

StateSet states_for_symset(const ConfigSet& c, const SymSet& s, bool complement) {
    StateSet q;
    for (const auto& cfg : c) {
        if (s.member(cfg.reg) != complement) { q.insert(cfg.state); }
    }
    return q;
}

std::map<StateSet, SymbolSet> signature_classes(const ConfigSet& c) {
    std::map<Symbol, StateSet> sig;
    for (const auto& cfg : c) { sig[cfg.reg].insert(cfg.state); }
    std::map<StateSet, SymbolSet> classes;
    for (const auto& [x, q] : sig) { classes[q].insert(x); }
    return classes;
}

SymbolSet symbols_for_stateset(const ConfigSet& c, StateSet q) {
    if (q.empty()) { throw EmptyQ("the state set must be nonempty"); }
    const auto classes = signature_classes(c);
    const auto it = classes.find(q);
    return it == classes.end() ? SymbolSet{} : it->second;
}

SymSet image(const StructuredPerm& alpha, const SymSet& s) {
    SymbolSet finite;
    for (const auto& x : s.finite()) { finite.insert(alpha.apply(x)); }
    std::map<Natural, Natural> tails;
    std::map<Natural, bool> forward;
    for (const auto& c : alpha.fwd_chains()) { forward[c.chain] = true; }
    for (const auto& c : alpha.bwd_chains()) { forward[c.chain] = false; }
    std::map<Natural, Natural> moved_top;
    for (const auto& x : alpha.finite_support()) {
        if (x.is_chain()) {
            auto& top = moved_top[x.as_chain().chain];
            top = std::max(top, x.as_chain().index);
        }
    }
    for (const auto& [chain, from] : s.tails()) {
        if (const auto it = forward.find(chain); it != forward.end()) {
            if (it->second) {
                tails[chain] = from + 1;
            } else if (from >= 2) {
                tails[chain] = from - 1;
            } else {
                tails[chain] = 1;
                finite.insert(alpha.apply(Symbol::chain(chain, 1)));
            }
            continue;
        }
        // A foreign chain: only finitely many of its elements can be moved.
        const auto it = moved_top.find(chain);
        const Natural start = it == moved_top.end() ? from : std::max(from, it->second + 1);
        for (Natural j = from; j < start; ++j) { finite.insert(alpha.apply(Symbol::chain(chain, j))); }
        tails[chain] = start;
    }
    return SymSet(std::move(finite), std::move(tails));
}

std::string to_string(Clause c) {
    switch (c) {
        case Clause::i: return "i";
        case Clause::ii: return "ii";
        case Clause::iii: return "iii";
        default: return "iv";
    }
}

PreorderReport preceq_check(const PreorderInstance& inst) {
    const auto& alpha = inst.alpha;
    if (!symset_subset(inst.sigma1, image(alpha, inst.sigma2))) { return { false, Clause::i }; }
    const auto sigma_c1 = sigma_of(inst.c1);
    for (const auto& x : sigma_c1) {
        if (inst.sigma2.member(alpha.apply_inverse(x)) && !inst.sigma1.member(x)) { return { false, Clause::ii }; }
    }
    for (const auto& x : sigma_c1) {
        if (!inst.sigma1.member(x)) { continue; }
        if (!states_for_symbol(inst.c1, x).subset_of(states_for_symbol(inst.c2, alpha.apply_inverse(x)))) {
            return { false, Clause::iii };
        }
    }
    if (!states_for_symset(inst.c1, inst.sigma1, true).subset_of(states_for_symset(inst.c2, inst.sigma2, true))) {
        return { false, Clause::iv };
    }
    return { true, std::nullopt };
}

ConfigSet transport_step(const Afma1& a, const PreorderInstance& inst, const Symbol& x, const ConfigSet& c2p) {
    if (const auto r = preceq_check(inst); !r.holds) {
        throw PreconditionViolated("preorder fails at clause " + to_string(*r.failed_clause));
    }
    if (!inst.sigma2.member(x)) { throw PreconditionViolated("letter " + x.to_string() + " is outside sigma2"); }
    if (!afma::is_step(a, inst.c2, x, c2p)) { throw PreconditionViolated("c2p is not a successor of c2"); }

    const auto& alpha = inst.alpha;
    ConfigSet c1p;
    for (const auto& c1 : inst.c1) {
        std::optional<afma::AfmaConfig> c2;
        std::optional<StructuredPerm> fix;
        if (inst.sigma1.member(c1.reg)) {
            const afma::AfmaConfig wanted{ c1.state, alpha.apply_inverse(c1.reg) };
            if (inst.c2.contains(wanted)) { c2 = wanted; }
        } else {
            for (const auto& cand : inst.c2) {
                if (cand.state == c1.state && !inst.sigma2.member(cand.reg)) {
                    c2 = cand;
                    fix = StructuredPerm::swap(c1.reg, alpha.apply(cand.reg));
                    break;
                }
            }
        }
        if (!c2) { throw PreconditionViolated("no matching configuration in c2"); }
        std::optional<ConfigSet> choice;
        for (const auto& ch : afma::mu_config(a, *c2, x)) {
            if (std::includes(c2p.begin(), c2p.end(), ch.begin(), ch.end())) {
                choice = ch;
                break;
            }
        }
        if (!choice) { throw PreconditionViolated("no choice of c2 inside c2p"); }
        for (const auto& cfg : *choice) {
            Symbol reg = alpha.apply(cfg.reg);
            if (fix) { reg = fix->apply(reg); }
            c1p.insert(afma::AfmaConfig{ cfg.state, reg });
        }
    }
    return c1p;
}

namespace {

SymbolSet data_part(const SymbolSet& s) {
    SymbolSet out;
    std::copy_if(s.begin(), s.end(), std::inserter(out, out.end()), [](const Symbol& x) { return x.is_data(); });
    return out;
}

SymbolSet difference(const SymbolSet& a, const SymbolSet& b) {
    SymbolSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

std::string format_states(StateSet q) {
    std::string out = "{";
    for (State s : q.to_vector()) { out += (out.size() > 1 ? "," : "") + std::to_string(s); }
    return out + "}";
}

} // namespace

AlphaBundle build_alpha(const ConfigSet& c1, const SymbolSet& sigma1, const ConfigSet& c2, const SymbolSet& sigma2,
                        Natural min_chain) {
    if (!std::includes(sigma2.begin(), sigma2.end(), sigma1.begin(), sigma1.end())) {
        throw PreconditionViolated("inclusion: sigma1 is not a subset of sigma2");
    }
    const SymbolSet s1 = data_part(sigma1);
    const SymbolSet s2 = data_part(sigma2);
    const auto classes1 = signature_classes(c1);
    const auto classes2 = signature_classes(c2);

    std::map<Symbol, Symbol> iota;
    SymbolSet used;
    for (const auto& [q, syms] : classes1) {
        std::vector<Symbol> from;
        std::set_intersection(syms.begin(), syms.end(), s1.begin(), s1.end(), std::back_inserter(from));
        std::vector<Symbol> to;
        if (const auto it = classes2.find(q); it != classes2.end()) {
            std::set_intersection(it->second.begin(), it->second.end(), s2.begin(), s2.end(), std::back_inserter(to));
        }
        if (from.size() > to.size()) { throw PreconditionViolated("counts(" + format_states(q) + ")"); }
        for (std::size_t k = 0; k < from.size(); ++k) {
            iota.emplace(from[k], to[k]);
            used.insert(to[k]);
        }
    }
    const auto boundary1 = states_for_symset(c1, SymSet(s1), true);
    const auto boundary2 = states_for_symset(c2, SymSet(s2), true);
    if (boundary1 != boundary2) { throw PreconditionViolated("boundary-states"); }

    {
        std::vector<Symbol> spare;
        std::set_difference(s2.begin(), s2.end(), used.begin(), used.end(), std::back_inserter(spare));
        std::size_t next = 0;
        for (const auto& x : s1) {
            if (iota.contains(x)) { continue; }
            used.insert(spare[next]);
            iota.emplace(x, spare[next++]);
        }
    }

    const SymbolSet iota_image = used;
    const auto sigma_fwd = difference(s2, iota_image); // sigma'
    const auto sigma_bwd = difference(s2, s1);         // sigma''

    Natural next_chain = min_chain;
    const auto bump = [&next_chain](const Symbol& x) {
        if (x.is_chain()) { next_chain = std::max(next_chain, x.as_chain().chain + 1); }
    };
    for (const auto& x : sigma2) { bump(x); }
    for (const auto& cfg : c1) { bump(cfg.reg); }
    for (const auto& cfg : c2) { bump(cfg.reg); }

    AlphaBundle bundle;
    bundle.iota = iota;
    std::map<Symbol, Symbol> finite_map;
    for (const auto& [x, y] : iota) { finite_map.emplace(y, x); }
    std::vector<ShiftChain> fwd, bwd;
    for (const auto& x : sigma_fwd) {
        fwd.push_back(ShiftChain{ next_chain, x });
        bundle.theta1_chains.push_back(next_chain++);
    }
    for (const auto& x : sigma_bwd) {
        bwd.push_back(ShiftChain{ next_chain, x });
        bundle.theta2_chains.push_back(next_chain++);
    }
    bundle.alpha = StructuredPerm(std::move(finite_map), std::move(fwd), std::move(bwd));

    std::map<Natural, Natural> tails;
    for (Natural c : bundle.theta1_chains) { tails[c] = 1; }
    bundle.sigma_prime = SymSet(sigma2, std::move(tails));
    return bundle;
}

} // namespace finmem::relation

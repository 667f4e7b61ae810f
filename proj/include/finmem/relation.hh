// The simulation preorder between configuration sets, its one-step transport, and the
// construction of the permutation witnessing it.

#pragma once

#include "finmem/afma.hh"
#include "finmem/alphabet.hh"
#include "finmem/perm.hh"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finmem::relation {

using afma::Afma1;
using afma::ConfigSet;

/// Data symbols held by the configurations.
SymbolSet sigma_of(const ConfigSet& c);
StateSet states_for_symbol(const ConfigSet& c, const Symbol& x);
/// States paired with a symbol in `s`, or with a symbol outside `s` when `complement` is set.
StateSet states_for_symset(const ConfigSet& c, const SymSet& s, bool complement = false);
/// Symbols whose set of states in `c` is exactly `q`. Throws EmptyQ for the empty set.
SymbolSet symbols_for_stateset(const ConfigSet& c, StateSet q);
/// All nonempty classes of symbols_for_stateset at once, keyed by the state set.
std::map<StateSet, SymbolSet> signature_classes(const ConfigSet& c);

/// Image of a symbolic set. Tails stay tails, so every set built here is representable.
SymSet image(const StructuredPerm& alpha, const SymSet& s);

struct PreorderInstance {
    ConfigSet c1;
    SymSet sigma1;
    ConfigSet c2;
    SymSet sigma2;
    StructuredPerm alpha;
};

enum class Clause { i, ii, iii, iv };
std::string to_string(Clause c);

struct PreorderReport {
    bool holds;
    std::optional<Clause> failed_clause;
};

PreorderReport preceq_check(const PreorderInstance& inst);

/// Given a step of c2 to c2p on `x`, builds the matching step of c1 on alpha(x).
/// Throws PreconditionViolated.
ConfigSet transport_step(const Afma1& a, const PreorderInstance& inst, const Symbol& x, const ConfigSet& c2p);

struct AlphaBundle {
    StructuredPerm alpha;
    SymSet sigma_prime;
    std::map<Symbol, Symbol> iota;
    /// Forward chains, one per symbol of sigma2 outside the image of iota.
    std::vector<Natural> theta1_chains;
    /// Backward chains, one per symbol of sigma2 outside sigma1.
    std::vector<Natural> theta2_chains;
};

/// Builds alpha and sigma' with c1, alpha(sigma') below c2, sigma'. Constants of the sets are
/// kept fixed. New chain ids are at least `min_chain` and above every chain id in the inputs.
/// Throws PreconditionViolated naming the violated condition.
AlphaBundle build_alpha(const ConfigSet& c1, const SymbolSet& sigma1, const ConfigSet& c2, const SymbolSet& sigma2,
                        Natural min_chain = 0);

} // namespace finmem::relation

// Pumping certificates for alternating one-register automata via trace reversal.

#pragma once

#include "finmem/afma.hh"
#include "finmem/relation.hh"
#include "finmem/wqo.hh"

#include <optional>
#include <utility>
#include <vector>

namespace finmem::pump_afma {

using afma::Afma1;
using afma::ConfigSet;
using afma::Run;

/// Entry i of the trace reversal of a run on a word of length m.
struct TraceEntry {
    std::size_t i;
    /// States paired with a symbol outside suffix_symbols in C_{m-i}.
    StateSet states;
    /// For each nonempty state set Q: symbols of the suffix whose states in C_{m-i} are exactly Q.
    wqo::CountMap counts;
    /// Contents of the last i letters.
    SymbolSet suffix_symbols;

    wqo::ResemblingEntry as_resembling() const { return { states, counts }; }
};

using Trace = std::vector<TraceEntry>;

/// Throws NotARun.
Trace trace_reversal(const Afma1& a, const Word& w, const Run& run);
wqo::Sequence as_sequence(const Trace& trace);
/// Least j, then least i < j, with equal state sets and counts_i <= counts_j.
std::optional<std::pair<std::size_t, std::size_t>> find_pump_indices(const Trace& trace);

/// w = tau upsilon phi, with upsilon the letters between suffix lengths i and j.
struct AfmaPumpCertificate {
    Word tau, upsilon, phi;
    relation::AlphaBundle bundle;
    std::size_t i;
    std::size_t j;
    Run run;

    Word word() const;
    /// C_{|tau upsilon|} and C_{|tau|}.
    const ConfigSet& c_tau_upsilon() const { return run[tau.size() + upsilon.size()]; }
    const ConfigSet& c_tau() const { return run[tau.size()]; }
};

/// Builds a certificate from the canonical accepting run. Returns nothing when that run has no
/// pumpable pair. Throws NotAccepted.
std::optional<AfmaPumpCertificate> pump(const Afma1& a, const Word& w);
/// Certificate for given indices of the trace of `run`. Throws PreconditionViolated.
AfmaPumpCertificate certificate_for(const Afma1& a, const Word& w, const Run& run, std::size_t i, std::size_t j);

/// tau upsilon alpha(upsilon) ... alpha^k(upsilon) alpha^k(phi).
Word pumped_word(const AfmaPumpCertificate& cert, std::size_t k);

struct VerificationReport {
    /// Outcome for k = 0 (the word itself) up to k_max.
    std::vector<bool> accepted;
    std::vector<std::size_t> failures;

    bool ok() const { return failures.empty(); }
};

VerificationReport verify_pumped(const Afma1& a, const AfmaPumpCertificate& cert, std::size_t k_max);

} // namespace finmem::pump_afma

// Length spectra of alternating one-register automata.

#pragma once

#include "finmem/afma.hh"
#include "finmem/pump_afma.hh"

#include <optional>
#include <set>
#include <string>
#include <utility>

namespace finmem::semilinear {

/// Lengths n <= n_max of accepted words, searched over the canonical alphabet.
std::set<std::size_t> length_spectrum(const afma::Afma1& a, std::size_t n_max);

/// Throws PreconditionViolated when n > 20.
std::uint64_t factorial(std::size_t n);

/// The pumped word of length |w| + n!. Throws PreconditionViolated if |upsilon| does not divide n!.
Word extension_step(const pump_afma::AfmaPumpCertificate& cert, std::size_t n);

enum class Status { exact, empirical };
std::string to_string(Status s);

struct SpectrumDescription {
    std::set<std::size_t> finite_part;
    /// Pairs (a, b) standing for {a + i b : i >= 0}.
    std::set<std::pair<std::size_t, std::size_t>> linear_parts;
    std::size_t empirical_bound;
    Status status;
    /// Whether the observed lengths look eventually periodic within the bound.
    bool periodic;
    std::optional<std::size_t> period;

    bool contains(std::size_t n) const;
};

/// Describes a set of lengths observed up to n_max with period n!. `language_empty` marks a
/// language known to be empty.
SpectrumDescription describe_lengths(const std::set<std::size_t>& lengths, std::size_t n, std::size_t n_max,
                                     bool language_empty = false);
SpectrumDescription describe_spectrum(const afma::Afma1& a, std::size_t n, std::size_t n_max);

/// Least b <= n_max / 2 such that membership repeats with period b over at least one full
/// period at the end of [0, n_max]. A set without lengths in the upper half counts as eventually empty, period 1.
std::optional<std::size_t> observed_period(const std::set<std::size_t>& lengths, std::size_t n_max);

/// Whether the transition graph, ignoring registers, reaches an accepting state or a choice
/// that ends a branch. If not, the language is empty.
bool may_accept(const afma::Afma1& a);

} // namespace finmem::semilinear

// Pumping certificates for r-register finite-memory automata.

#pragma once

#include "finmem/fma.hh"
#include "finmem/perm.hh"

#include <cstddef>
#include <tuple>

namespace finmem::pump_fma {

/// Half-open range [begin, end) of letter indices.
struct Window {
    std::size_t begin;
    std::size_t end;
};

/// w = psi tau upsilon phi omega, with the run in the same state at positions i and j.
struct FmaPumpCertificate {
    Word psi, tau, upsilon, phi, omega;
    StructuredPerm alpha;
    std::size_t i;
    std::size_t j;

    Word word() const;
};

/// Throws NotAccepted or WindowTooShort.
FmaPumpCertificate pump_decompose(const fma::Fma& a, const Word& w, Window window);
/// psi tau upsilon alpha(upsilon) ... alpha^k(upsilon) alpha^k(phi omega).
Word pumped_word(const FmaPumpCertificate& cert, std::size_t k);
/// psi tau alpha^-1(phi omega).
Word shrunk_word(const FmaPumpCertificate& cert);

struct PeriodicFamily {
    Word prefix;
    Word period;
    Word suffix;
    FmaPumpCertificate cert;

    Word instance(std::size_t k) const;
};

/// Uses the whole word as the window. Throws NotAccepted or WordTooShort.
PeriodicFamily periodic_family(const fma::Fma& a, const Word& w);

} // namespace finmem::pump_fma

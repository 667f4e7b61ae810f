// Pumping certificates for r-register finite-memory automata.

#include "finmem/pump_fma.hh"
#include "finmem/error.hh"

namespace finmem::pump_fma {

namespace {

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

} // namespace

Word FmaPumpCertificate::word() const {
    Word w = psi;
    for (const auto* part : { &tau, &upsilon, &phi, &omega }) { append(w, *part); }
    return w;
}

FmaPumpCertificate pump_decompose(const fma::Fma& a, const Word& w, Window window) {
    if (window.begin > window.end || window.end > w.size()) { throw WindowTooShort("window lies outside the word"); }
    if (window.end - window.begin <= a.num_states()) {
        throw WindowTooShort("window must be longer than the number of states");
    }
    const auto run = fma::witness_run(a, w);
    if (!run) { throw NotAccepted("word is not accepted"); }
    for (std::size_t j = window.begin + 1; j <= window.end; ++j) {
        for (std::size_t i = window.begin; i < j; ++i) {
            if ((*run)[i].state != (*run)[j].state) { continue; }
            std::vector<std::pair<Symbol, Symbol>> pairs;
            for (std::size_t l = 0; l < a.registers; ++l) { pairs.emplace_back((*run)[i].regs[l], (*run)[j].regs[l]); }
            return FmaPumpCertificate{ slice(w, 0, window.begin), slice(w, window.begin, i), slice(w, i, j),
                                       slice(w, j, window.end),   slice(w, window.end, w.size()),
                                       complete_partial_injection(pairs), i, j };
        }
    }
    throw std::logic_error("no repeated state in a window longer than the number of states");
}

Word pumped_word(const FmaPumpCertificate& cert, std::size_t k) {
    Word out = cert.psi;
    append(out, cert.tau);
    for (std::size_t p = 0; p <= k; ++p) { append(out, cert.alpha.map_word(cert.upsilon, static_cast<std::int64_t>(p))); }
    Word rest = cert.phi;
    append(rest, cert.omega);
    append(out, cert.alpha.map_word(rest, static_cast<std::int64_t>(k)));
    return out;
}

Word shrunk_word(const FmaPumpCertificate& cert) {
    Word out = cert.psi;
    append(out, cert.tau);
    Word rest = cert.phi;
    append(rest, cert.omega);
    append(out, cert.alpha.map_word(rest, -1));
    return out;
}

Word PeriodicFamily::instance(std::size_t k) const {
    Word out = prefix;
    for (std::size_t p = 0; p < k; ++p) { append(out, period); }
    append(out, suffix);
    return out;
}

PeriodicFamily periodic_family(const fma::Fma& a, const Word& w) {
    if (w.size() <= a.num_states()) { throw WordTooShort("word must be longer than the number of states"); }
    if (!fma::accepts(a, w)) { throw NotAccepted("word is not accepted"); }
    auto cert = pump_decompose(a, w, Window{ 0, w.size() });
    PeriodicFamily fam;
    fam.prefix = cert.psi;
    append(fam.prefix, cert.tau);
    append(fam.prefix, cert.upsilon);
    const auto order = cert.alpha.order().value();
    for (std::uint64_t p = 1; p <= order; ++p) {
        append(fam.period, cert.alpha.map_word(cert.upsilon, static_cast<std::int64_t>(p)));
    }
    fam.suffix = cert.phi;
    append(fam.suffix, cert.omega);
    fam.cert = std::move(cert);
    return fam;
}

} // namespace finmem::pump_fma

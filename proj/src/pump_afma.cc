// Trace reversal and pumping certificates for alternating automata.

#include "finmem/pump_afma.hh"
#include "finmem/error.hh"

namespace finmem::pump_afma {

namespace {

void append(Word& out, const Word& w) { out.insert(out.end(), w.begin(), w.end()); }

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

Natural max_chain_id(const Word& w) {
    Natural next = 0;
    for (const auto& x : w) {
        if (x.is_chain()) { next = std::max(next, x.as_chain().chain + 1); }
    }
    return next;
}

} // namespace

Trace trace_reversal(const Afma1& a, const Word& w, const Run& run) {
    if (!afma::is_run(a, w, run)) { throw NotARun("sequence is not a run of the automaton on the word"); }
    const std::size_t m = w.size();
    Trace trace;
    SymbolSet suffix;
    for (std::size_t i = 0; i <= m; ++i) {
        if (i > 0) { suffix.insert(w[m - i]); }
        const ConfigSet& c = run[m - i];
        TraceEntry e{ i, relation::states_for_symset(c, SymSet(suffix), true), {}, suffix };
        for (const auto& [q, syms] : relation::signature_classes(c)) {
            Natural n = 0;
            for (const auto& x : syms) { n += suffix.contains(x) ? 1 : 0; }
            if (n != 0) { e.counts.emplace(q, n); }
        }
        trace.push_back(std::move(e));
    }
    return trace;
}

wqo::Sequence as_sequence(const Trace& trace) {
    wqo::Sequence seq;
    for (const auto& e : trace) { seq.push_back(e.as_resembling()); }
    return seq;
}

std::optional<std::pair<std::size_t, std::size_t>> find_pump_indices(const Trace& trace) {
    return wqo::first_good_pair(as_sequence(trace), trace.size());
}

Word AfmaPumpCertificate::word() const {
    Word w = tau;
    append(w, upsilon);
    append(w, phi);
    return w;
}

AfmaPumpCertificate certificate_for(const Afma1& a, const Word& w, const Run& run, std::size_t i, std::size_t j) {
    const std::size_t m = w.size();
    if (!(i < j && j <= m)) { throw PreconditionViolated("indices must satisfy i < j <= |w|"); }
    if (!afma::is_run(a, w, run)) { throw NotARun("sequence is not a run of the automaton on the word"); }
    AfmaPumpCertificate cert;
    cert.tau = slice(w, 0, m - j);
    cert.upsilon = slice(w, m - j, m - i);
    cert.phi = slice(w, m - i, m);
    cert.i = i;
    cert.j = j;
    cert.run = run;
    Word upsilon_phi = cert.upsilon;
    append(upsilon_phi, cert.phi);
    cert.bundle = relation::build_alpha(run[m - i], contents(cert.phi), run[m - j], contents(upsilon_phi),
                                        max_chain_id(w));
    return cert;
}

std::optional<AfmaPumpCertificate> pump(const Afma1& a, const Word& w) {
    const auto run = afma::witness_run(a, w);
    if (!run) { throw NotAccepted("word is not accepted"); }
    const auto trace = trace_reversal(a, w, *run);
    const auto indices = find_pump_indices(trace);
    if (!indices) { return std::nullopt; }
    return certificate_for(a, w, *run, indices->first, indices->second);
}

Word pumped_word(const AfmaPumpCertificate& cert, std::size_t k) {
    const auto& alpha = cert.bundle.alpha;
    Word out = cert.tau;
    for (std::size_t p = 0; p <= k; ++p) { append(out, alpha.map_word(cert.upsilon, static_cast<std::int64_t>(p))); }
    append(out, alpha.map_word(cert.phi, static_cast<std::int64_t>(k)));
    return out;
}

VerificationReport verify_pumped(const Afma1& a, const AfmaPumpCertificate& cert, std::size_t k_max) {
    VerificationReport report;
    for (std::size_t k = 0; k <= k_max; ++k) {
        const bool ok = afma::accepts(a, k == 0 ? cert.word() : pumped_word(cert, k));
        report.accepted.push_back(ok);
        if (!ok) { report.failures.push_back(k); }
    }
    return report;
}

} // namespace finmem::pump_afma

// Command-line front end of the finmem library.

#include "finmem/afma.hh"
#include "finmem/corpus.hh"
#include "finmem/error.hh"
#include "finmem/fma.hh"
#include "finmem/io.hh"
#include "finmem/pump_afma.hh"
#include "finmem/pump_fma.hh"
#include "finmem/semilinear.hh"
#include "finmem/wqo.hh"

#include <CLI11.hpp>

#include <iostream>

using namespace finmem;
using io::Json;

namespace {

constexpr int exit_rejected = 1;
constexpr int exit_error = 2;
constexpr int exit_verification = 3;

struct Options {
    std::string automaton_file;
    std::string corpus_name;
    std::string word;
    bool allow_chain = false;
    bool pretty = false;
    std::size_t k = 4;
    bool verify = false;
    std::string window;
    std::size_t states = 1;
    std::uint64_t budget = 50'000'000;
    std::size_t n_max = 10;
    std::optional<std::size_t> n;
    std::string corpus_action;
    std::string export_name;
};

corpus::Automaton automaton(const Options& o) {
    if (!o.corpus_name.empty()) {
        auto entry = corpus::build(o.corpus_name);
        if (std::holds_alternative<std::monostate>(entry.automaton)) {
            throw UnknownName("corpus entry '" + o.corpus_name + "' has no automaton");
        }
        return entry.automaton;
    }
    if (o.automaton_file.empty()) { throw ParseError("an automaton is required (-a FILE or --corpus NAME)"); }
    return io::load_automaton(o.automaton_file);
}

const afma::Afma1& require_afma(const corpus::Automaton& a) {
    if (const auto* p = std::get_if<afma::Afma1>(&a)) { return *p; }
    throw ParseError("this command needs an afma1 automaton");
}

const fma::Fma& require_fma(const corpus::Automaton& a) {
    if (const auto* p = std::get_if<fma::Fma>(&a)) { return *p; }
    throw ParseError("this command needs an fma automaton");
}

pump_fma::Window parse_window(const std::string& text, std::size_t word_size) {
    if (text.empty()) { return { 0, word_size }; }
    const auto dots = text.find("..");
    if (dots == std::string::npos) { throw ParseError("window must look like I..J"); }
    try {
        return { std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2)) };
    } catch (const std::exception&) { throw ParseError("window must look like I..J"); }
}

void print(const Json& report, const Options& o, const std::string& summary) {
    if (o.pretty) {
        std::cout << summary << '\n';
    } else {
        std::cout << report.dump() << '\n';
    }
}

int cmd_member(const Options& o) {
    const auto a = automaton(o);
    const auto w = parse_word(o.word, o.allow_chain);
    const bool ok = std::holds_alternative<fma::Fma>(a) ? fma::accepts(std::get<fma::Fma>(a), w)
                                                        : afma::accepts(std::get<afma::Afma1>(a), w);
    print({ { "accepted", ok } }, o, ok ? "accepted" : "rejected");
    return ok ? 0 : exit_rejected;
}

int cmd_run(const Options& o) {
    const auto a = automaton(o);
    const auto w = parse_word(o.word, o.allow_chain);
    Json run = nullptr;
    std::string summary = "no accepting run";
    if (const auto* f = std::get_if<fma::Fma>(&a)) {
        if (const auto r = fma::witness_run(*f, w)) {
            run = Json::array();
            summary.clear();
            for (const auto& c : *r) {
                run.push_back(io::fma_config_to_json(*f, c));
                summary += "(" + f->states[c.state] + ", " + format_word(c.regs) + ")\n";
            }
        }
    } else {
        const auto& g = std::get<afma::Afma1>(a);
        if (const auto r = afma::witness_run(g, w)) {
            run = Json::array();
            summary.clear();
            for (const auto& c : *r) {
                run.push_back(io::configset_to_json(g, c));
                summary += afma::format_configset(g, c) + "\n";
            }
        }
    }
    print({ { "run", run } }, o, summary);
    return 0;
}

int cmd_pump(const Options& o) {
    const auto a = automaton(o);
    const auto& g = require_afma(a);
    const auto w = parse_word(o.word, o.allow_chain);
    const auto cert = pump_afma::pump(g, w);
    if (!cert) {
        print({ { "certificate", nullptr } }, o, "no pumpable pair on the canonical run");
        return 0;
    }
    Json report{ { "certificate", io::afma_certificate_to_json(g, *cert) } };
    Json pumped = Json::array();
    std::string summary = "tau = " + format_word(cert->tau) + "\nupsilon = " + format_word(cert->upsilon) +
                          "\nphi = " + format_word(cert->phi) + "\n";
    for (std::size_t k = 1; k <= o.k; ++k) {
        const auto p = pump_afma::pumped_word(*cert, k);
        pumped.push_back(io::word_to_json(p));
        summary += "k=" + std::to_string(k) + ": " + format_word(p) + "\n";
    }
    report["pumped"] = pumped;
    int code = 0;
    if (o.verify) {
        const auto v = pump_afma::verify_pumped(g, *cert, o.k);
        report["verification"] = { { "accepted", v.accepted }, { "failures", v.failures }, { "ok", v.ok() } };
        summary += v.ok() ? "verified\n" : "VERIFICATION FAILED\n";
        if (!v.ok()) { code = exit_verification; }
    }
    print(report, o, summary);
    return code;
}

int cmd_pump_fma(const Options& o) {
    const auto a = automaton(o);
    const auto& f = require_fma(a);
    const auto w = parse_word(o.word, o.allow_chain);
    const auto cert = pump_fma::pump_decompose(f, w, parse_window(o.window, w.size()));
    Json report{ { "certificate", io::fma_certificate_to_json(cert) } };
    Json pumped = Json::array();
    std::string summary = "psi = " + format_word(cert.psi) + "\ntau = " + format_word(cert.tau) +
                          "\nupsilon = " + format_word(cert.upsilon) + "\nphi = " + format_word(cert.phi) +
                          "\nomega = " + format_word(cert.omega) + "\nshrunk: " + format_word(pump_fma::shrunk_word(cert)) + "\n";
    std::vector<bool> accepted;
    bool ok = fma::accepts(f, pump_fma::shrunk_word(cert));
    for (std::size_t k = 1; k <= o.k; ++k) {
        const auto p = pump_fma::pumped_word(cert, k);
        pumped.push_back(io::word_to_json(p));
        accepted.push_back(fma::accepts(f, p));
        ok = ok && accepted.back();
        summary += "k=" + std::to_string(k) + ": " + format_word(p) + "\n";
    }
    report["pumped"] = pumped;
    int code = 0;
    if (o.verify) {
        report["verification"] = { { "accepted", accepted }, { "ok", ok } };
        if (!ok) { code = exit_verification; }
    }
    print(report, o, summary);
    return code;
}

int cmd_trace(const Options& o) {
    const auto a = automaton(o);
    const auto& g = require_afma(a);
    const auto w = parse_word(o.word, o.allow_chain);
    const auto run = afma::witness_run(g, w);
    if (!run) { throw NotAccepted("word is not accepted"); }
    const auto trace = pump_afma::trace_reversal(g, w, *run);
    const auto idx = pump_afma::find_pump_indices(trace);
    Json found = idx ? Json{ { "i", idx->first }, { "j", idx->second } } : Json(nullptr);
    std::string summary;
    for (const auto& e : trace) {
        summary += "i=" + std::to_string(e.i) + " S=" + io::state_set_to_json(g.states, e.states).dump() + "\n";
    }
    summary += idx ? "pair (" + std::to_string(idx->first) + "," + std::to_string(idx->second) + ")" : "no pair";
    print({ { "trace", io::trace_to_json(g, trace) }, { "found", found } }, o, summary);
    return 0;
}

int cmd_compute_n(const Options& o) {
    wqo::SearchOptions opts;
    opts.budget = o.budget;
    const auto w = wqo::longest_bad(o.states, opts);
    Json witness = Json::array();
    for (const auto& e : w.entries) { witness.push_back(io::resembling_to_json(e)); }
    print({ { "n", w.length + 1 }, { "witness", witness }, { "nodes", w.nodes } }, o, "N = " + std::to_string(w.length + 1));
    return 0;
}

int cmd_lengths(const Options& o) {
    const auto a = automaton(o);
    std::set<std::size_t> lengths;
    bool may_accept = true;
    if (const auto* f = std::get_if<fma::Fma>(&a)) {
        lengths = fma::enumerate_lengths(*f, o.n_max);
    } else {
        const auto& g = std::get<afma::Afma1>(a);
        lengths = semilinear::length_spectrum(g, o.n_max);
        may_accept = semilinear::may_accept(g);
    }
    Json report{ { "lengths", lengths } };
    std::string summary = "lengths: " + Json(lengths).dump();
    if (o.n) {
        const auto d = semilinear::describe_lengths(lengths, *o.n, o.n_max, !may_accept);
        report["description"] = io::spectrum_to_json(d);
        summary += "\n" + report["description"].dump(2);
    }
    print(report, o, summary);
    return 0;
}

int cmd_corpus(const Options& o) {
    if (o.corpus_action == "list") {
        Json list = Json::array();
        std::string summary;
        for (const auto& name : corpus::names()) {
            const auto e = corpus::build(name);
            const std::string kind = e.has_fma() ? "fma" : e.has_afma() ? "afma1" : "predicate";
            list.push_back({ { "name", name }, { "kind", kind }, { "notes", e.notes } });
            summary += name + " (" + kind + "): " + e.notes + "\n";
        }
        print(list, o, summary);
        return 0;
    }
    if (o.export_name.empty()) { throw ParseError("corpus export needs a name"); }
    const auto e = corpus::build(o.export_name);
    if (std::holds_alternative<std::monostate>(e.automaton)) {
        throw UnknownName("corpus entry '" + o.export_name + "' has no automaton");
    }
    const auto j = io::automaton_to_json(e.automaton);
    print(j, o, j.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{ "Finite-memory automata workbench" };
    app.require_subcommand(1);
    Options o;
    app.add_flag("--pretty", o.pretty, "Human-readable output");

    const auto add_automaton = [&o](CLI::App* cmd) {
        auto* file = cmd->add_option("-a,--automaton", o.automaton_file, "Automaton JSON file");
        auto* name = cmd->add_option("--corpus", o.corpus_name, "Corpus automaton name");
        file->excludes(name);
    };
    const auto add_word = [&o](CLI::App* cmd) {
        cmd->add_option("-w,--word", o.word, "Whitespace-separated tokens")->required();
        cmd->add_flag("--allow-chain", o.allow_chain, "Accept chain symbols c<C>.<J> in the word");
    };

    auto* member = app.add_subcommand("member", "Decide membership");
    add_automaton(member);
    add_word(member);
    auto* run = app.add_subcommand("run", "Print the canonical accepting run");
    add_automaton(run);
    add_word(run);
    auto* pump = app.add_subcommand("pump", "Pumping certificate for an afma1 automaton");
    add_automaton(pump);
    add_word(pump);
    pump->add_option("--k", o.k, "Number of pumped words");
    pump->add_flag("--verify", o.verify, "Check membership of the pumped words");
    auto* pump_fma = app.add_subcommand("pump-fma", "Pumping certificate for an fma automaton");
    add_automaton(pump_fma);
    add_word(pump_fma);
    pump_fma->add_option("--window", o.window, "Letter range I..J, half-open");
    pump_fma->add_option("--k", o.k, "Number of pumped words");
    pump_fma->add_flag("--verify", o.verify, "Check membership of the pumped and shrunk words");
    auto* trace = app.add_subcommand("trace", "Trace reversal of the canonical run");
    add_automaton(trace);
    add_word(trace);
    auto* compute_n = app.add_subcommand("compute-n", "Length of the longest bad sequence plus one");
    compute_n->add_option("--states", o.states, "Number of states")->required();
    compute_n->add_option("--budget", o.budget, "Search node budget");
    auto* lengths = app.add_subcommand("lengths", "Length spectrum up to a bound");
    add_automaton(lengths);
    lengths->add_option("--n-max", o.n_max, "Largest length")->required();
    lengths->add_option("--n", o.n, "Constant whose factorial is the period");
    auto* corpus_cmd = app.add_subcommand("corpus", "List or export corpus automata");
    corpus_cmd->add_option("action", o.corpus_action, "list or export")->required()->check(CLI::IsMember({ "list", "export" }));
    corpus_cmd->add_option("name", o.export_name, "Entry to export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { return app.exit(e); }
        std::cout << Json{ { "error", e.what() } }.dump() << '\n';
        return exit_error;
    }

    try {
        if (member->parsed()) { return cmd_member(o); }
        if (run->parsed()) { return cmd_run(o); }
        if (pump->parsed()) { return cmd_pump(o); }
        if (pump_fma->parsed()) { return cmd_pump_fma(o); }
        if (trace->parsed()) { return cmd_trace(o); }
        if (compute_n->parsed()) { return cmd_compute_n(o); }
        if (lengths->parsed()) { return cmd_lengths(o); }
        return cmd_corpus(o);
    } catch (const std::exception& e) {
        std::cout << Json{ { "error", e.what() } }.dump() << '\n';
        return exit_error;
    }
}

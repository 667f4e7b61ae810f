// JSON reading and writing.

#include "finmem/io.hh"
#include "finmem/error.hh"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace finmem::io {

namespace {

void check_fields(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!j.is_object()) { throw ParseError(what + " must be a JSON object"); }
    for (const auto& [key, unused] : j.items()) {
        if (std::find_if(allowed.begin(), allowed.end(), [&key](const char* a) { return key == a; }) == allowed.end()) {
            throw ParseError("unknown field '" + key + "' in " + what);
        }
    }
}

const Json& field(const Json& j, const char* name) {
    if (!j.contains(name)) { throw ParseError(std::string("missing field '") + name + "'"); }
    return j.at(name);
}

template <typename T>
T get(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) { throw ParseError("malformed " + what); }
}

class StateIndex {
public:
    explicit StateIndex(const Json& states) : names_(get<std::vector<std::string>>(states, "states")) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], static_cast<State>(i)).second) {
                throw InvalidAutomaton("duplicate state '" + names_[i] + "'");
            }
        }
    }
    State at(const Json& name) const {
        const auto s = get<std::string>(name, "state name");
        const auto it = index_.find(s);
        if (it == index_.end()) { throw InvalidAutomaton("unknown state '" + s + "'"); }
        return it->second;
    }
    StateSet set(const Json& names) const {
        if (!names.is_array()) { throw ParseError("state set must be an array"); }
        StateSet q;
        for (const auto& n : names) { q.insert(at(n)); }
        return q;
    }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, State> index_;
};

SymbolSet read_constants(const Json& j) {
    SymbolSet out;
    for (const auto& name : get<std::vector<std::string>>(j, "constants")) {
        if (is_data_token(name) || name.empty()) { throw InvalidAutomaton("invalid constant name '" + name + "'"); }
        out.insert(Symbol::constant(name));
    }
    return out;
}

Symbol read_data(const Json& j) {
    const auto s = parse_symbol(get<std::string>(j, "data symbol"), false);
    if (!s.is_data()) { throw InvalidAutomaton("expected a data symbol, got '" + s.to_string() + "'"); }
    return s;
}

Symbol read_constant(const std::string& name, const SymbolSet& constants) {
    const auto c = Symbol::constant(name);
    if (!constants.contains(c)) { throw InvalidAutomaton("undeclared constant '" + name + "'"); }
    return c;
}

Json constants_to_json(const SymbolSet& constants) {
    Json out = Json::array();
    for (const auto& c : constants) { out.push_back(c.to_string()); }
    return out;
}

} // namespace

Json state_set_to_json(const std::vector<std::string>& names, StateSet q) {
    Json out = Json::array();
    for (State s : q.to_vector()) { out.push_back(names.at(s)); }
    return out;
}

fma::Fma fma_from_json(const Json& j) {
    check_fields(j,
                 { "kind", "states", "initial", "accepting", "constants", "registers", "initial_assignment",
                   "trans_delta", "trans_eq", "trans_neq_skip", "trans_neq_replace" },
                 "fma automaton");
    if (get<std::string>(field(j, "kind"), "kind") != "fma") { throw ParseError("kind must be 'fma'"); }
    const StateIndex idx(field(j, "states"));
    fma::Fma a;
    a.states = idx.names();
    a.initial = idx.at(field(j, "initial"));
    for (State s : idx.set(field(j, "accepting")).to_vector()) { a.accepting.insert(s); }
    a.constants = j.contains("constants") ? read_constants(j.at("constants")) : SymbolSet{};
    a.registers = get<std::size_t>(field(j, "registers"), "registers");
    for (const auto& x : field(j, "initial_assignment")) { a.initial_assignment.push_back(read_data(x)); }
    const auto n = a.states.size();
    a.trans_eq.assign(n, std::vector<std::set<State>>(a.registers));
    a.trans_neq_skip.assign(n, {});
    a.trans_neq_replace.assign(n, {});
    const auto targets = [&idx](const Json& list) {
        std::set<State> out;
        if (!list.is_array()) { throw ParseError("target list must be an array"); }
        for (const auto& t : list) { out.insert(idx.at(t)); }
        return out;
    };
    if (j.contains("trans_delta")) {
        for (const auto& [state, by_const] : j.at("trans_delta").items()) {
            for (const auto& [name, list] : by_const.items()) {
                a.trans_delta[{ idx.at(state), read_constant(name, a.constants) }] = targets(list);
            }
        }
    }
    if (j.contains("trans_eq")) {
        for (const auto& [state, by_reg] : j.at("trans_eq").items()) {
            for (const auto& [reg, list] : by_reg.items()) {
                std::size_t r = 0;
                try {
                    r = std::stoul(reg);
                } catch (const std::exception&) { throw ParseError("register index '" + reg + "' is not a number"); }
                if (r == 0 || r > a.registers) { throw InvalidAutomaton("register index " + reg + " out of range"); }
                a.trans_eq[idx.at(state)][r - 1] = targets(list);
            }
        }
    }
    if (j.contains("trans_neq_skip")) {
        for (const auto& [state, list] : j.at("trans_neq_skip").items()) { a.trans_neq_skip[idx.at(state)] = targets(list); }
    }
    if (j.contains("trans_neq_replace")) {
        for (const auto& [state, list] : j.at("trans_neq_replace").items()) {
            for (const auto& t : list) {
                check_fields(t, { "state", "register" }, "replace target");
                const auto r = get<std::size_t>(field(t, "register"), "register");
                if (r == 0 || r > a.registers) { throw InvalidAutomaton("register index out of range"); }
                a.trans_neq_replace[idx.at(state)].insert(fma::ReplaceTarget{ idx.at(field(t, "state")), r - 1 });
            }
        }
    }
    a.validate();
    return a;
}

Json fma_to_json(const fma::Fma& a) {
    Json j;
    j["kind"] = "fma";
    j["states"] = a.states;
    j["initial"] = a.states[a.initial];
    j["accepting"] = Json::array();
    for (State s : a.accepting) { j["accepting"].push_back(a.states[s]); }
    j["constants"] = constants_to_json(a.constants);
    j["registers"] = a.registers;
    j["initial_assignment"] = word_to_json(a.initial_assignment);
    const auto names = [&a](const std::set<State>& ts) {
        Json out = Json::array();
        for (State t : ts) { out.push_back(a.states[t]); }
        return out;
    };
    j["trans_delta"] = Json::object();
    for (const auto& [key, ts] : a.trans_delta) { j["trans_delta"][a.states[key.first]][key.second.to_string()] = names(ts); }
    j["trans_eq"] = Json::object();
    j["trans_neq_skip"] = Json::object();
    j["trans_neq_replace"] = Json::object();
    for (State s = 0; s < a.num_states(); ++s) {
        for (std::size_t r = 0; r < a.registers; ++r) {
            if (!a.trans_eq[s][r].empty()) { j["trans_eq"][a.states[s]][std::to_string(r + 1)] = names(a.trans_eq[s][r]); }
        }
        if (!a.trans_neq_skip[s].empty()) { j["trans_neq_skip"][a.states[s]] = names(a.trans_neq_skip[s]); }
        if (!a.trans_neq_replace[s].empty()) {
            Json list = Json::array();
            for (const auto& t : a.trans_neq_replace[s]) {
                list.push_back({ { "state", a.states[t.state] }, { "register", t.reg + 1 } });
            }
            j["trans_neq_replace"][a.states[s]] = list;
        }
    }
    return j;
}

afma::Afma1 afma_from_json(const Json& j) {
    check_fields(j, { "kind", "states", "initial", "accepting", "constants", "initial_register", "mu_delta", "mu_eq", "mu_neq" },
                 "afma1 automaton");
    if (get<std::string>(field(j, "kind"), "kind") != "afma1") { throw ParseError("kind must be 'afma1'"); }
    const StateIndex idx(field(j, "states"));
    afma::Afma1 a;
    a.states = idx.names();
    a.initial = idx.at(field(j, "initial"));
    a.accepting = idx.set(field(j, "accepting"));
    a.constants = j.contains("constants") ? read_constants(j.at("constants")) : SymbolSet{};
    a.initial_register = read_data(field(j, "initial_register"));
    const auto n = a.states.size();
    a.mu_eq.assign(n, {});
    a.mu_neq.assign(n, {});
    const auto choices = [&idx](const Json& list) {
        if (!list.is_array()) { throw ParseError("choice list must be an array"); }
        std::set<StateSet> out;
        for (const auto& q : list) { out.insert(idx.set(q)); }
        return out;
    };
    if (j.contains("mu_delta")) {
        for (const auto& [state, by_const] : j.at("mu_delta").items()) {
            for (const auto& [name, list] : by_const.items()) {
                a.mu_delta[{ idx.at(state), read_constant(name, a.constants) }] = choices(list);
            }
        }
    }
    if (j.contains("mu_eq")) {
        for (const auto& [state, list] : j.at("mu_eq").items()) { a.mu_eq[idx.at(state)] = choices(list); }
    }
    if (j.contains("mu_neq")) {
        for (const auto& [state, list] : j.at("mu_neq").items()) {
            if (!list.is_array()) { throw ParseError("choice list must be an array"); }
            for (const auto& ch : list) {
                check_fields(ch, { "keep", "replace" }, "inequality choice");
                a.mu_neq[idx.at(state)].insert(afma::NeqChoice{ idx.set(field(ch, "keep")), idx.set(field(ch, "replace")) });
            }
        }
    }
    a.validate();
    return a;
}

Json afma_to_json(const afma::Afma1& a) {
    Json j;
    j["kind"] = "afma1";
    j["states"] = a.states;
    j["initial"] = a.states[a.initial];
    j["accepting"] = state_set_to_json(a.states, a.accepting);
    j["constants"] = constants_to_json(a.constants);
    j["initial_register"] = a.initial_register.to_string();
    const auto choices = [&a](const std::set<StateSet>& cs) {
        Json out = Json::array();
        for (StateSet q : cs) { out.push_back(state_set_to_json(a.states, q)); }
        return out;
    };
    j["mu_delta"] = Json::object();
    for (const auto& [key, cs] : a.mu_delta) { j["mu_delta"][a.states[key.first]][key.second.to_string()] = choices(cs); }
    j["mu_eq"] = Json::object();
    j["mu_neq"] = Json::object();
    for (State s = 0; s < a.num_states(); ++s) {
        if (!a.mu_eq[s].empty()) { j["mu_eq"][a.states[s]] = choices(a.mu_eq[s]); }
        if (!a.mu_neq[s].empty()) {
            Json list = Json::array();
            for (const auto& ch : a.mu_neq[s]) {
                list.push_back({ { "keep", state_set_to_json(a.states, ch.keep) },
                                 { "replace", state_set_to_json(a.states, ch.replace) } });
            }
            j["mu_neq"][a.states[s]] = list;
        }
    }
    return j;
}

corpus::Automaton automaton_from_json(const Json& j) {
    if (!j.is_object()) { throw ParseError("automaton must be a JSON object"); }
    const auto kind = get<std::string>(field(j, "kind"), "kind");
    if (kind == "fma") { return fma_from_json(j); }
    if (kind == "afma1") { return afma_from_json(j); }
    throw ParseError("unknown automaton kind '" + kind + "'");
}

Json automaton_to_json(const corpus::Automaton& a) {
    if (const auto* f = std::get_if<fma::Fma>(&a)) { return fma_to_json(*f); }
    if (const auto* f = std::get_if<afma::Afma1>(&a)) { return afma_to_json(*f); }
    return nullptr;
}

corpus::Automaton load_automaton(const std::string& path) {
    std::ifstream in(path);
    if (!in) { throw ParseError("cannot open '" + path + "'"); }
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) { throw ParseError("invalid JSON in '" + path + "': " + e.what()); }
    return automaton_from_json(j);
}

Json word_to_json(const Word& w) {
    Json out = Json::array();
    for (const auto& x : w) { out.push_back(x.to_string()); }
    return out;
}

Json symset_to_json(const SymSet& s) {
    Json tails = Json::array();
    for (const auto& [chain, from] : s.tails()) { tails.push_back({ { "chain", chain }, { "from", from } }); }
    Json finite = Json::array();
    for (const auto& x : s.finite()) { finite.push_back(x.to_string()); }
    return { { "finite", finite }, { "tails", tails } };
}

Json order_to_json(const PermOrder& o) {
    if (o.is_finite()) { return o.value(); }
    return "infinite";
}

Json perm_to_json(const StructuredPerm& p) {
    Json cycles = Json::array();
    for (const auto& c : p.cycles()) { cycles.push_back(word_to_json(c)); }
    Json chains = Json::array();
    for (const auto& c : p.fwd_chains()) {
        chains.push_back({ { "chain", c.chain }, { "direction", "forward" }, { "boundary", c.boundary.to_string() } });
    }
    for (const auto& c : p.bwd_chains()) {
        chains.push_back({ { "chain", c.chain }, { "direction", "backward" }, { "boundary", c.boundary.to_string() } });
    }
    Json links = Json::array();
    SymbolSet on_cycles;
    for (const auto& c : p.cycles()) { on_cycles.insert(c.begin(), c.end()); }
    for (const auto& [from, to] : p.finite_map()) {
        if (from != to && !on_cycles.contains(from)) { links.push_back({ from.to_string(), to.to_string() }); }
    }
    return { { "cycles", cycles }, { "chains", chains }, { "links", links }, { "order", order_to_json(p.order()) } };
}

Json configset_to_json(const afma::Afma1& a, const afma::ConfigSet& c) {
    Json out = Json::array();
    for (const auto& x : c) { out.push_back({ { "state", a.states[x.state] }, { "register", x.reg.to_string() } }); }
    return out;
}

Json fma_config_to_json(const fma::Fma& a, const fma::FmaConfig& c) {
    return { { "state", a.states[c.state] }, { "registers", word_to_json(c.regs) } };
}

Json resembling_to_json(const wqo::ResemblingEntry& e) {
    Json f = Json::array();
    for (const auto& [q, v] : e.f) { f.push_back({ { "states", q.to_vector() }, { "count", v } }); }
    return { { "states", e.q.to_vector() }, { "counts", f } };
}

Json trace_to_json(const afma::Afma1& a, const pump_afma::Trace& t) {
    Json out = Json::array();
    for (const auto& e : t) {
        Json counts = Json::array();
        for (const auto& [q, v] : e.counts) { counts.push_back({ { "states", state_set_to_json(a.states, q) }, { "count", v } }); }
        out.push_back({ { "i", e.i },
                        { "states", state_set_to_json(a.states, e.states) },
                        { "counts", counts },
                        { "suffix_symbols", word_to_json(Word(e.suffix_symbols.begin(), e.suffix_symbols.end())) } });
    }
    return out;
}

Json afma_certificate_to_json(const afma::Afma1& a, const pump_afma::AfmaPumpCertificate& c) {
    Json iota = Json::array();
    for (const auto& [x, y] : c.bundle.iota) { iota.push_back({ x.to_string(), y.to_string() }); }
    return { { "tau", word_to_json(c.tau) },
             { "upsilon", word_to_json(c.upsilon) },
             { "phi", word_to_json(c.phi) },
             { "i", c.i },
             { "j", c.j },
             { "alpha", perm_to_json(c.bundle.alpha) },
             { "sigma_prime", symset_to_json(c.bundle.sigma_prime) },
             { "iota", iota },
             { "c_tau", configset_to_json(a, c.c_tau()) },
             { "c_tau_upsilon", configset_to_json(a, c.c_tau_upsilon()) } };
}

Json fma_certificate_to_json(const pump_fma::FmaPumpCertificate& c) {
    return { { "psi", word_to_json(c.psi) },     { "tau", word_to_json(c.tau) },
             { "upsilon", word_to_json(c.upsilon) }, { "phi", word_to_json(c.phi) },
             { "omega", word_to_json(c.omega) }, { "i", c.i },
             { "j", c.j },                       { "alpha", perm_to_json(c.alpha) },
             { "shrunk", word_to_json(pump_fma::shrunk_word(c)) } };
}

Json spectrum_to_json(const semilinear::SpectrumDescription& d) {
    Json linear = Json::array();
    for (const auto& [a, b] : d.linear_parts) { linear.push_back({ { "a", a }, { "b", b } }); }
    return { { "finite_part", d.finite_part },
             { "linear_parts", linear },
             { "empirical_bound", d.empirical_bound },
             { "status", semilinear::to_string(d.status) },
             { "periodic", d.periodic },
             { "period", d.period ? Json(*d.period) : Json(nullptr) } };
}

} // namespace finmem::io

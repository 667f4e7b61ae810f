// JSON reading and writing of automata, permutations and reports.

#pragma once

#include "finmem/afma.hh"
#include "finmem/corpus.hh"
#include "finmem/fma.hh"
#include "finmem/perm.hh"
#include "finmem/pump_afma.hh"
#include "finmem/pump_fma.hh"
#include "finmem/semilinear.hh"
#include "finmem/wqo.hh"

#include <json.hpp>

namespace finmem::io {

using Json = nlohmann::json;

/// All readers throw ParseError or InvalidAutomaton.
fma::Fma fma_from_json(const Json& j);
Json fma_to_json(const fma::Fma& a);
afma::Afma1 afma_from_json(const Json& j);
Json afma_to_json(const afma::Afma1& a);
/// Dispatches on the "kind" field.
corpus::Automaton automaton_from_json(const Json& j);
Json automaton_to_json(const corpus::Automaton& a);
corpus::Automaton load_automaton(const std::string& path);

Json word_to_json(const Word& w);
Json symset_to_json(const SymSet& s);
Json perm_to_json(const StructuredPerm& p);
Json order_to_json(const PermOrder& o);
Json configset_to_json(const afma::Afma1& a, const afma::ConfigSet& c);
Json fma_config_to_json(const fma::Fma& a, const fma::FmaConfig& c);
Json state_set_to_json(const std::vector<std::string>& names, StateSet q);
Json resembling_to_json(const wqo::ResemblingEntry& e);
Json trace_to_json(const afma::Afma1& a, const pump_afma::Trace& t);
Json afma_certificate_to_json(const afma::Afma1& a, const pump_afma::AfmaPumpCertificate& c);
Json fma_certificate_to_json(const pump_fma::FmaPumpCertificate& c);
Json spectrum_to_json(const semilinear::SpectrumDescription& d);

} // namespace finmem::io

#pragma once

// Versioned JSON documents for every public type. Field names match the type
// definitions; every document carries {"document": <type>, "version": 1}.
//
// Determinism: ordered_json preserves insertion order, map-backed fields are
// emitted in key order, and doubles print with enough digits to round-trip
// bit-exactly — identical values serialize to identical bytes.

#include "shorchip/compiler.hpp"
#include "shorchip/experiment.hpp"
#include "shorchip/qubit_oracle.hpp"
#include "shorchip/shor_classical.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace shorchip {

using Json = nlohmann::ordered_json;

constexpr int kDocumentVersion = 1;

namespace detail {

inline Json document_header(const char* type) {
    Json j;
    j["document"] = type;
    j["version"] = kDocumentVersion;
    return j;
}

inline void check_header(const Json& j, const char* type) {
    if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");
    if (!j.contains("document") || j.at("document") != type)
        throw std::invalid_argument(std::string("expected a '") + type + "' document");
    if (!j.contains("version") || j.at("version") != kDocumentVersion)
        throw std::invalid_argument("unsupported document version");
}

inline Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("complex value must be a [re, im] pair");
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

inline OccupationVector occupation_from_string(const std::string& key) {
    OccupationVector occ;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) occ.counts.push_back(std::stoi(part));
    return occ;
}

}  // namespace detail

// ---------------------------------------------------------------- circuits

inline Json to_json(const QubitCircuit& circuit) {
    Json j = detail::document_header("qubit_circuit");
    j["qubits"] = circuit.qubit_labels;
    j["initial_bits"] = circuit.initial_bits;
    Json gates = Json::array();
    for (const Gate& g : circuit.gates) {
        Json gate;
        gate["kind"] = g.kind == GateKind::H ? "H" : "CZ";
        gate["targets"] = g.targets;
        gates.push_back(std::move(gate));
    }
    j["gates"] = std::move(gates);
    return j;
}

inline QubitCircuit circuit_from_json(const Json& j) {
    detail::check_header(j, "qubit_circuit");
    QubitCircuit circuit;
    circuit.qubit_labels = j.at("qubits").get<std::vector<std::string>>();
    circuit.initial_bits = j.at("initial_bits").get<std::vector<int>>();
    for (const Json& gate : j.at("gates")) {
        const std::string kind = gate.at("kind").get<std::string>();
        Gate g;
        if (kind == "H")
            g.kind = GateKind::H;
        else if (kind == "CZ")
            g.kind = GateKind::CZ;
        else
            throw std::invalid_argument("unknown gate kind: " + kind);
        g.targets = gate.at("targets").get<std::vector<std::string>>();
        circuit.gates.push_back(std::move(g));
    }
    validate(circuit);
    return circuit;
}

// ---------------------------------------------------------------- networks

inline Json to_json(const CouplerNetwork& net) {
    Json j = detail::document_header("coupler_network");
    j["mode_count"] = net.mode_count;
    Json couplers = Json::array();
    for (const Coupler& c : net.couplers) {
        Json jc;
        jc["a"] = c.mode_a;
        jc["b"] = c.mode_b;
        jc["eta"] = c.reflectivity;
        jc["convention"] =
            c.convention == CouplerConvention::real_signed ? "real_signed" : "symmetric_phase";
        couplers.push_back(std::move(jc));
    }
    j["couplers"] = std::move(couplers);
    Json rails = Json::array();
    for (const auto& [label, pair] : net.rail_map)
        rails.push_back(Json{{"qubit", label}, {"rail0", pair.first}, {"rail1", pair.second}});
    j["rail_map"] = std::move(rails);
    j["ancillas"] = net.ancilla_modes;
    if (!net.metadata.empty()) j["metadata"] = net.metadata;
    return j;
}

inline CouplerNetwork network_from_json(const Json& j) {
    detail::check_header(j, "coupler_network");
    CouplerNetwork net;
    net.mode_count = j.at("mode_count").get<int>();
    for (const Json& jc : j.at("couplers")) {
        Coupler c;
        c.mode_a = jc.at("a").get<int>();
        c.mode_b = jc.at("b").get<int>();
        c.reflectivity = jc.at("eta").get<double>();
        const std::string conv = jc.at("convention").get<std::string>();
        if (conv == "real_signed")
            c.convention = CouplerConvention::real_signed;
        else if (conv == "symmetric_phase")
            c.convention = CouplerConvention::symmetric_phase;
        else
            throw std::invalid_argument("unknown coupler convention: " + conv);
        net.couplers.push_back(c);
    }
    for (const Json& entry : j.at("rail_map"))
        net.rail_map.push_back({entry.at("qubit").get<std::string>(),
                                {entry.at("rail0").get<int>(), entry.at("rail1").get<int>()}});
    net.ancilla_modes = j.at("ancillas").get<std::vector<int>>();
    if (j.contains("metadata")) net.metadata = j.at("metadata").get<std::string>();
    validate(net);
    return net;
}

// ------------------------------------------------------------------ states

inline Json to_json(const PhotonicState& state) {
    Json j = detail::document_header("photonic_state");
    j["mode_count"] = state.mode_count;
    j["photon_number"] = state.photon_number;
    Json amps = Json::object();
    for (const auto& [occ, amp] : state.amplitudes)
        amps[to_string(occ)] = detail::complex_to_json(amp);
    j["amplitudes"] = std::move(amps);
    return j;
}

inline PhotonicState state_from_json(const Json& j) {
    detail::check_header(j, "photonic_state");
    PhotonicState state;
    state.mode_count = j.at("mode_count").get<int>();
    state.photon_number = j.at("photon_number").get<int>();
    for (const auto& [key, value] : j.at("amplitudes").items())
        state.set_amplitude(detail::occupation_from_string(key), detail::complex_from_json(value));
    return state;
}

inline Json to_json(const PostselectedResult& result) {
    Json j = detail::document_header("postselected_result");
    j["success_probability"] = result.success_probability;
    Json logical = Json::object();
    for (const auto& [bits, amp] : result.logical_state)
        logical[bits] = detail::complex_to_json(amp);
    j["logical_state"] = std::move(logical);
    return j;
}

// ----------------------------------------------------------- classical runs

inline Json to_json(const ShorRunResult& result) {
    Json j = detail::document_header("shor_run_result");
    j["raw_outcome"] = result.raw_outcome;
    j["phase_numerator"] = result.phase_numerator;
    if (result.candidate_order)
        j["candidate_order"] = *result.candidate_order;
    else
        j["candidate_order"] = nullptr;
    j["classification"] = to_string(result.classification);
    if (result.factors)
        j["factors"] = Json::array({result.factors->first, result.factors->second});
    else
        j["factors"] = nullptr;
    return j;
}

// ----------------------------------------------------------------- reports

inline Json to_json(const OutcomeDistribution& dist) {
    Json j = Json::object();
    for (const auto& [outcome, p] : dist.probabilities) j[outcome] = p;
    return j;
}

inline Json to_json(const SampledCounts& sampled) {
    Json j = Json::object();
    Json counts = Json::object();
    for (const auto& [outcome, n] : sampled.counts) counts[outcome] = n;
    j["counts"] = std::move(counts);
    j["total_shots"] = sampled.total_shots;
    j["seed"] = sampled.seed;
    return j;
}

inline Json to_json(const ExperimentReport& report) {
    Json j = detail::document_header("experiment_report");
    j["exact_distribution"] = to_json(report.exact_distribution);
    j["postselection_probability"] = report.postselection_probability;
    j["sampled"] = to_json(report.sampled);
    j["fidelity"] = report.fidelity;
    Json classifications = Json::object();
    for (const auto& [outcome, result] : report.classifications) {
        Json entry = to_json(result);
        entry.erase("document");
        entry.erase("version");
        classifications[outcome] = std::move(entry);
    }
    j["classifications"] = std::move(classifications);
    return j;
}

inline Json oracle_report(const QubitCircuit& circuit, const QubitState& state,
                          const OutcomeDistribution& marginal,
                          const std::vector<int>& measured_qubits) {
    Json j = detail::document_header("oracle_report");
    j["qubits"] = circuit.qubit_labels;
    Json amps = Json::object();
    const int q = state.qubit_count;
    for (std::size_t i = 0; i < static_cast<std::size_t>(state.amplitudes.size()); ++i) {
        if (std::abs(state.amplitudes[i]) < 1e-14) continue;
        // Basis labels MSB-first: first-listed qubit is the least significant bit.
        std::string bits(q, '0');
        for (int b = 0; b < q; ++b)
            if (i & (std::size_t{1} << b)) bits[q - 1 - b] = '1';
        amps[bits] = detail::complex_to_json(state.amplitudes[i]);
    }
    j["amplitudes"] = std::move(amps);
    Json measured = Json::array();
    for (int m : measured_qubits) measured.push_back(circuit.qubit_labels[m]);
    j["measured_qubits"] = std::move(measured);
    j["marginal"] = to_json(marginal);
    return j;
}

// -------------------------------------------------------------------- files

inline std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

inline void write_document(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open for writing: " + path);
    out << to_text(j);
    if (!out) throw std::invalid_argument("failed writing: " + path);
}

inline Json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open for reading: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

}  // namespace shorchip

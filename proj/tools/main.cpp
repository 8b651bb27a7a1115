// Command-line driver: compile circuits to coupler networks, simulate
// networks on Fock inputs, run the full Shor-15 experiment pipeline, classify
// measurement outcomes, and query the state-vector oracle.

#include "shorchip/shorchip.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace shorchip;

int cmd_compile(const std::string& circuit_path, const std::string& out_path) {
    const QubitCircuit circuit = circuit_from_json(read_document(circuit_path));
    const LoweringReport report = lower(circuit);
    write_document(out_path, to_json(report.network));
    std::cout << "compiled " << circuit.qubit_count() << " qubits, "
              << circuit.gates.size() << " gates -> " << report.network.mode_count << " modes, "
              << report.network.couplers.size() << " couplers ("
              << report.gadget_count << " CZ gadgets, expected success "
              << report.expected_success_probability << ")\n";
    return 0;
}

int cmd_simulate(const std::string& network_path, const std::string& input_bits,
                 bool do_postselect) {
    const CouplerNetwork net = network_from_json(read_document(network_path));
    if (static_cast<int>(input_bits.size()) != net.qubit_count())
        throw std::invalid_argument("--input-bits needs one bit per qubit (" +
                                    std::to_string(net.qubit_count()) + " expected)");

    OccupationVector occ;
    occ.counts.assign(net.mode_count, 0);
    for (int q = 0; q < net.qubit_count(); ++q) {
        const char c = input_bits[q];
        if (c != '0' && c != '1') throw std::invalid_argument("--input-bits must be 0s and 1s");
        const auto& [r0, r1] = net.rail_map[q].second;
        occ.counts[c == '1' ? r1 : r0] = 1;
    }

    const PhotonicState evolved =
        apply_unitary(network_unitary(net), PhotonicState::basis_state(occ));
    if (do_postselect)
        std::cout << to_text(to_json(postselect(evolved, net)));
    else
        std::cout << to_text(to_json(evolved));
    return 0;
}

int cmd_run_shor15(std::uint64_t shots, std::uint64_t seed, const std::string& report_path,
                   const std::string& svg_path) {
    const ExperimentReport report = run_full_report(shots, seed);
    const Json doc = to_json(report);
    std::cout << to_text(doc);
    if (!report_path.empty()) write_document(report_path, doc);
    if (!svg_path.empty()) {
        std::ofstream out(svg_path);
        if (!out) throw std::invalid_argument("cannot open for writing: " + svg_path);
        out << bar_chart_svg(report.sampled.frequencies(), report.exact_distribution,
                             "Shor-15 chip outcomes");
    }
    return 0;
}

int cmd_factor(std::uint64_t N, std::uint64_t a, const std::string& outcome, bool order_oracle) {
    int width = 1;
    while ((std::uint64_t{1} << width) < N) ++width;
    if (order_oracle) {
        const FactoringInstance inst(N, a, width);
        Json j;
        j["document"] = "order_oracle";
        j["version"] = kDocumentVersion;
        j["N"] = N;
        j["a"] = a;
        j["order"] = find_order_bruteforce(inst);
        std::cout << to_text(j);
        return 0;
    }
    if (outcome.empty())
        throw std::invalid_argument("factor needs either --outcome <bits> or --order-oracle");
    const FactoringInstance inst(N, a, static_cast<int>(outcome.size()));
    std::cout << to_text(to_json(classify_and_factor(inst, outcome)));
    return 0;
}

int cmd_oracle(const std::string& circuit_path) {
    const QubitCircuit circuit = circuit_from_json(read_document(circuit_path));
    const QubitState state = statevector_run(circuit);
    std::vector<int> all(circuit.qubit_count());
    for (int q = 0; q < circuit.qubit_count(); ++q) all[q] = q;
    const OutcomeDistribution marginal = marginal_distribution(state, all);
    std::cout << to_text(oracle_report(circuit, state, marginal, all));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photonic compiled-Shor chip simulator"};
    app.require_subcommand(1);

    std::string circuit_path, out_path, network_path, input_bits, outcome;
    std::string report_path, svg_path;
    std::uint64_t shots = kDefaultShots, seed = kDefaultSeed, big_n = 15, base = 2;
    bool do_postselect = false, order_oracle = false;

    CLI::App* compile = app.add_subcommand("compile", "Lower a circuit document to a network");
    compile->add_option("--circuit", circuit_path, "Circuit JSON document")->required();
    compile->add_option("--out", out_path, "Output network document path")->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Evolve a Fock input through a network");
    simulate->add_option("--network", network_path, "Network JSON document")->required();
    simulate
        ->add_option("--input-bits", input_bits,
                     "One bit per qubit in rail-map order; bit 1 puts the photon in rail 1")
        ->required();
    simulate->add_flag("--postselect", do_postselect, "Print the post-selected result instead");

    CLI::App* run = app.add_subcommand("run-shor15", "Full experiment pipeline for N=15, a=2");
    run->add_option("--shots", shots, "Number of sampled shots (default 3000)");
    run->add_option("--seed", seed, "Sampler seed (default 0)");
    run->add_option("--report", report_path, "Also write the report document here");
    run->add_option("--svg", svg_path, "Write a bar-chart SVG here");

    CLI::App* factor = app.add_subcommand("factor", "Classical post-processing for one outcome");
    factor->add_option("--N", big_n, "Number to factor")->required();
    factor->add_option("--a", base, "Coprime base")->required();
    factor->add_option("--outcome", outcome, "Measured bit string (after readout inversion)");
    factor->add_flag("--order-oracle", order_oracle, "Print the brute-force order instead");

    CLI::App* oracle = app.add_subcommand("oracle", "State-vector oracle for a circuit document");
    oracle->add_option("--circuit", circuit_path, "Circuit JSON document")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile->parsed()) return cmd_compile(circuit_path, out_path);
        if (simulate->parsed()) return cmd_simulate(network_path, input_bits, do_postselect);
        if (run->parsed()) return cmd_run_shor15(shots, seed, report_path, svg_path);
        if (factor->parsed()) return cmd_factor(big_n, base, outcome, order_oracle);
        if (oracle->parsed()) return cmd_oracle(circuit_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphcalc/dynamics.hpp"
#include "graphcalc/energy.hpp"
#include "graphcalc/errors.hpp"
#include "graphcalc/gnn.hpp"
#include "graphcalc/graph.hpp"
#include "graphcalc/io.hpp"
#include "graphcalc/spectral.hpp"
#include "graphcalc/verify.hpp"
#include "json.hpp"

namespace {

using namespace graphcalc;

struct SharedOpts {
    std::string graph_path;
    std::string measure_path;
    std::string preset_name;
    std::string features_path;
    std::string out_path;
    std::uint64_t seed = 0;
};

void add_shared(CLI::App* cmd, SharedOpts& o, bool needs_measure) {
    cmd->add_option("--graph", o.graph_path, "edge list file (i<TAB>j<TAB>omega)")
        ->required();
    if (needs_measure) {
        auto* m = cmd->add_option("--measure", o.measure_path,
                                        "per-node measure file (i<TAB>mu)");
        cmd->add_option("--preset", o.preset_name,
                        "one of adj, adj_selfloop, rw, rw_selfloop")
            ->excludes(m);
    }
    cmd->add_option("--out", o.out_path, "output file (stdout when omitted)");
}

WeightedGraph load(const SharedOpts& o) {
    std::optional<std::string> measure;
    if (!o.measure_path.empty()) measure = o.measure_path;
    std::optional<Preset> preset;
    if (!o.preset_name.empty()) preset = parse_preset(o.preset_name);
    return load_graph(o.graph_path, measure, preset);
}

NodeFunction load_or_draw_features(const SharedOpts& o, const WeightedGraph& g) {
    if (!o.features_path.empty()) {
        NodeFunction f = load_matrix_csv(o.features_path);
        check_shape(g, f);
        return f;
    }
    std::mt19937_64 rng(o.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    NodeFunction f(g.node_count(), 2);
    for (int i = 0; i < g.node_count(); ++i)
        for (int c = 0; c < 2; ++c) f(i, c) = gauss(rng);
    return f;
}

void emit(const SharedOpts& o, const std::string& text) {
    if (o.out_path.empty())
        std::cout << text;
    else
        atomic_write_text(o.out_path, text);
}

const char* tf(bool b) { return b ? "true" : "false"; }

std::string trajectory_csv(const Trajectory& tr,
                           const std::vector<DecayCertificate>& certs,
                           double e1_start) {
    // certificate abscissae are a suffix of the sample abscissae (steps
    // k >= 1, or every listed time); match them up by value
    std::map<double, const DecayCertificate*> by_abscissa;
    for (const auto& c : certs) by_abscissa[c.abscissa] = &c;
    std::ostringstream out;
    out << "step,time_or_k,E_0,E_1,E_2,bound_value,satisfied\n";
    int step = 0;
    for (const auto& s : tr.samples) {
        const auto it = by_abscissa.find(s.abscissa);
        const double bound =
            it != by_abscissa.end() ? it->second->rate * e1_start : e1_start;
        const bool satisfied =
            it != by_abscissa.end() ? it->second->satisfied : true;
        out << step++ << ',' << fmt(s.abscissa) << ','
            << fmt(s.energies.at(0)) << ',' << fmt(s.energies.at(1)) << ','
            << fmt(s.energies.at(2)) << ',' << fmt(bound) << ','
            << tf(satisfied) << '\n';
    }
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"calculus on weighted graphs: spectra, energies, diffusion, "
                 "walks, and untrained message-passing stacks"};
    app.require_subcommand(1);

    SharedOpts inspect_o, spectrum_o, energy_o, verify_o, diffuse_o, walk_o,
        gnn_o;

    CLI::App* c_inspect =
        app.add_subcommand("inspect", "print graph facts and stats");
    add_shared(c_inspect, inspect_o, true);

    CLI::App* c_spectrum =
        app.add_subcommand("spectrum", "eigenvalues of the negated operator");
    add_shared(c_spectrum, spectrum_o, true);

    CLI::App* c_energy =
        app.add_subcommand("energy", "derivative energies E_m and gamma_m");
    add_shared(c_energy, energy_o, true);
    std::vector<int> orders = {0, 1, 2};
    c_energy->add_option("--orders", orders, "derivative orders")
        ->delimiter(',');
    c_energy->add_option("--features", energy_o.features_path,
                         "node feature CSV (random Gaussian when omitted)");
    c_energy->add_option("--seed", energy_o.seed, "seed for generated features");

    CLI::App* c_verify = app.add_subcommand(
        "verify", "check every identity and bound; exit 0 iff all pass");
    add_shared(c_verify, verify_o, true);
    c_verify->add_option("--seed", verify_o.seed, "seed for generated functions");
    c_verify->add_option("--features", verify_o.features_path,
                         "node feature CSV (random Gaussian when omitted)");

    CLI::App* c_diffuse =
        app.add_subcommand("diffuse", "exact heat flow with decay bounds");
    add_shared(c_diffuse, diffuse_o, true);
    std::vector<double> times = {0.25, 0.5, 1.0, 2.0, 4.0};
    c_diffuse->add_option("--times", times, "strictly increasing times")
        ->delimiter(',');
    c_diffuse->add_option("--features", diffuse_o.features_path,
                          "initial condition CSV");
    c_diffuse->add_option("--seed", diffuse_o.seed,
                          "seed for a generated initial condition");

    CLI::App* c_walk =
        app.add_subcommand("walk", "lazy random-walk steps with decay bounds");
    add_shared(c_walk, walk_o, true);
    int steps = 10;
    c_walk->add_option("--steps", steps, "number of steps");
    c_walk->add_option("--features", walk_o.features_path,
                       "initial condition CSV");
    c_walk->add_option("--seed", walk_o.seed,
                       "seed for a generated initial condition");

    CLI::App* c_gnn = app.add_subcommand(
        "gnn", "untrained gcn/gat stack; energies per depth plus a JSON "
               "summary (uses only the topology of --graph)");
    add_shared(c_gnn, gnn_o, false);
    std::string arch_name = "gcn";
    c_gnn->add_option("--arch", arch_name, "gcn or gat")
        ->check(CLI::IsMember({"gcn", "gat"}));
    int depth = 16;
    c_gnn->add_option("--depth", depth, "number of layers");
    int width = 16;
    c_gnn->add_option("--width", width, "feature width at every layer");
    c_gnn->add_option("--seed", gnn_o.seed, "init seed");
    std::string act_name = "relu";
    c_gnn->add_option("--activation", act_name, "relu or id")
        ->check(CLI::IsMember({"relu", "id"}));

    CLI11_PARSE(app, argc, argv);

    if (c_inspect->parsed()) {
        const WeightedGraph g = load(inspect_o);
        const GraphStats st = graph_stats(g);
        std::ostringstream out;
        out << "nodes: " << g.node_count() << '\n'
            << "edges: " << g.edge_count() << '\n'
            << "total_measure: " << fmt(st.total_measure) << '\n'
            << "m_max: " << fmt(st.m_max) << '\n'
            << "sub_stochastic: " << tf(st.sub_stochastic) << '\n'
            << "components: " << st.component_count << '\n'
            << "bipartite: " << tf(st.is_bipartite_structural) << '\n';
        emit(inspect_o, out.str());
        return 0;
    }

    if (c_spectrum->parsed()) {
        const WeightedGraph g = load(spectrum_o);
        const SpectralDecomposition sd = eigendecompose(g);
        std::ostringstream out;
        out << "k,alpha_k\n";
        for (int k = 0; k < sd.size(); ++k)
            out << k << ',' << fmt(sd.alphas(k)) << '\n';
        emit(spectrum_o, out.str());
        return 0;
    }

    if (c_energy->parsed()) {
        const WeightedGraph g = load(energy_o);
        const NodeFunction f = load_or_draw_features(energy_o, g);
        const EnergyReport rep = energy_report(g, f, orders);
        std::ostringstream out;
        out << "m,E_m,gamma_m\n";
        for (int m : rep.orders) {
            const auto& e = rep.values.at(m);
            out << m << ',' << fmt(e.energy) << ',' << fmt(e.gamma) << '\n';
        }
        emit(energy_o, out.str());
        return 0;
    }

    if (c_verify->parsed()) {
        const WeightedGraph g = load(verify_o);
        std::optional<NodeFunction> f;
        if (!verify_o.features_path.empty()) {
            f = load_matrix_csv(verify_o.features_path);
            check_shape(g, *f);
        }
        const VerifyReport rep = run_verify(g, f, verify_o.seed);
        std::ostringstream out;
        out << "name,lhs,rhs,slack,pass,note\n";
        for (const auto& r : rep.rows)
            out << r.name << ',' << fmt(r.lhs) << ',' << fmt(r.rhs) << ','
                << fmt(r.slack) << ',' << tf(r.pass) << ',' << r.note << '\n';
        emit(verify_o, out.str());
        return rep.all_pass() ? 0 : 1;
    }

    if (c_diffuse->parsed()) {
        const WeightedGraph g = load(diffuse_o);
        const NodeFunction f0 = load_or_draw_features(diffuse_o, g);
        const SpectralDecomposition sd = eigendecompose(g);
        const Trajectory tr = heat_trajectory(g, sd, f0, times);
        const auto certs = heat_decay_certificate(g, sd, f0, times);
        emit(diffuse_o, trajectory_csv(tr, certs, energy_m(g, f0, 1)));
        return 0;
    }

    if (c_walk->parsed()) {
        const WeightedGraph g = load(walk_o);
        const NodeFunction f0 = load_or_draw_features(walk_o, g);
        const SpectralDecomposition sd = eigendecompose(g);
        const Trajectory tr = walk_trajectory(g, f0, steps);
        const auto certs = walk_decay_certificate(g, sd, f0, steps);
        emit(walk_o, trajectory_csv(tr, certs, energy_m(g, f0, 1)));
        return 0;
    }

    if (c_gnn->parsed()) {
        const EdgeList el = load_edge_list(gnn_o.graph_path);
        Topology topo;
        topo.n = el.n;
        for (const auto& e : el.edges) topo.edges.emplace_back(e.u, e.v);

        const Arch arch = arch_name == "gcn" ? Arch::gcn : Arch::gat;
        const Activation act =
            act_name == "relu" ? Activation::relu : Activation::identity;
        const std::vector<int> dims(static_cast<std::size_t>(depth) + 1, width);
        const LayerStack stack = init_stack(arch, depth, dims, gnn_o.seed, act);

        std::mt19937_64 rng(gnn_o.seed ^ 0x517cc1b727220a95ULL);
        std::normal_distribution<double> gauss(0.0, 1.0);
        NodeFunction x0(topo.n, width);
        for (int i = 0; i < topo.n; ++i)
            for (int c = 0; c < width; ++c) x0(i, c) = gauss(rng);

        const ForwardResult res = forward(topo, stack, x0, {0, 1, 2});

        std::ostringstream out;
        out << "depth,E_0,E_1,E_2\n";
        for (const auto& [dpt, by_m] : res.report.energies_by_depth)
            out << dpt << ',' << fmt(by_m.at(0)) << ',' << fmt(by_m.at(1))
                << ',' << fmt(by_m.at(2)) << '\n';
        emit(gnn_o, out.str());

        nlohmann::json j;
        j["log_slope"] = res.report.log_slope;
        j["depth_below_1e-10"] = res.report.depth_below(1e-10);
        j["theoretical_rate"] = res.report.theoretical_rate;
        if (gnn_o.out_path.empty())
            std::cout << j.dump(2) << '\n';
        else
            atomic_write_text(gnn_o.out_path + ".json", j.dump(2) + "\n");
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

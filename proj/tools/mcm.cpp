#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcm/graph.hpp"
#include "mcm/matcher.hpp"
#include "mcm/oracle.hpp"

using namespace mcm;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw Failure("cannot open '" + path + "'");
    ParseResult pr = parse_dimacs(in);
    for (const std::string& note : pr.notes) err << "note: " << path << ": " << note << "\n";
    return std::move(pr.graph);
}

InitialMatching parse_initial(const std::string& s) {
    if (s == "greedy") return InitialMatching::Greedy;
    if (s == "none") return InitialMatching::Empty;
    throw Failure("unknown initial matching '" + s + "' (expected greedy|none)");
}

std::string level_text(int l) { return l >= kInfinity ? "inf" : std::to_string(l); }

struct MatchConfig {
    std::string input;
    std::vector<long long> gen;
    std::uint64_t seed = 1;
    std::string backend = "reference";
    std::string initial = "greedy";
    std::string matching;
    bool verify = false;
    std::string stats;
};

int cmd_match(const MatchConfig& cfg) {
    const bool has_gen = !cfg.gen.empty();
    if (has_gen == !cfg.input.empty()) throw Failure("give exactly one of --input or --gen");
    Graph g = has_gen ? generate_random(static_cast<int>(cfg.gen[0]), static_cast<int>(cfg.gen[1]), cfg.seed)
                      : load_graph(cfg.input, std::cerr);
    MatchOptions opts;
    opts.backend = parse_backend(cfg.backend);
    opts.initial = parse_initial(cfg.initial);
    if (!cfg.matching.empty()) {
        std::ifstream in(cfg.matching);
        if (!in) throw Failure("cannot open '" + cfg.matching + "'");
        opts.initial = InitialMatching::Explicit;
        opts.explicit_matching = parse_matching(in, g.vertex_count());
    }
    MatchResult res = maximum_matching(g, opts);

    if (cfg.verify) {
        Validation v = validate_matching(g, res.matching);
        if (!v.ok) throw Failure("verify: result is not a matching: " + v.problems.front());
        int want = oracle::reference_blossom_max(g).size();
        if (g.edge_count() <= oracle::kBruteForceEdgeLimit) want = oracle::brute_force_max(g);
        if (want != res.matching.size())
            throw Failure("verify: size " + std::to_string(res.matching.size()) + " but the oracle says " + std::to_string(want));
    }
    if (!cfg.stats.empty()) {
        std::ofstream out(cfg.stats);
        if (!out) throw Failure("cannot write '" + cfg.stats + "'");
        out << "phase,l_m,aps,edge_scans,finds,unions,micros\n";
        for (const PhaseStats& p : res.phases)
            out << p.phase << ',' << level_text(p.l_m) << ',' << p.aps << ',' << p.edge_scans << ',' << p.finds << ','
                << p.unions << ',' << p.micros << '\n';
    }
    std::cout << write_result(res.matching, &res.phases);
    return 0;
}

struct Instance {
    std::string name;
    std::string path;  // empty for generated instances
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
};

// One instance per line: "gen NAME N M SEED" or "file NAME PATH"; '#' starts a comment.
std::vector<Instance> read_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure("cannot open '" + path + "'");
    std::vector<Instance> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        line = line.substr(0, line.find('#'));
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        Instance inst;
        bool ok = false;
        if (kind == "gen")
            ok = static_cast<bool>(ls >> inst.name >> inst.n >> inst.m >> inst.seed);
        else if (kind == "file")
            ok = static_cast<bool>(ls >> inst.name >> inst.path);
        std::string extra;
        if (!ok || ls >> extra) throw Failure(path + ": line " + std::to_string(lineno) + ": expected 'gen NAME N M SEED' or 'file NAME PATH'");
        out.push_back(inst);
    }
    return out;
}

struct BenchConfig {
    std::string config;
    std::vector<int> sweep;
    double density = 4.0;
    std::uint64_t seed = 1;
    std::string backend = "both";
    std::string initial = "greedy";
    std::string out;
};

int cmd_bench(const BenchConfig& cfg) {
    std::vector<Instance> instances;
    if (!cfg.config.empty()) instances = read_bench_config(cfg.config);
    if (!cfg.sweep.empty()) {
        if (cfg.sweep.size() != 2 || cfg.sweep[0] > cfg.sweep[1] || cfg.sweep[0] < 1 || cfg.sweep[1] > 24)
            throw Failure("--sweep takes KMIN KMAX with 1 <= KMIN <= KMAX <= 24");
        for (int k = cfg.sweep[0]; k <= cfg.sweep[1]; ++k) {
            Instance inst;
            inst.n = 1 << k;
            inst.m = static_cast<int>(cfg.density * inst.n);
            inst.seed = cfg.seed + k;
            inst.name = "n" + std::to_string(inst.n);
            instances.push_back(inst);
        }
    }
    if (instances.empty()) throw Failure("bench needs --config or --sweep");
    std::vector<Backend> backends;
    if (cfg.backend == "both")
        backends = {Backend::Reference, Backend::IncrementalTree};
    else
        backends = {parse_backend(cfg.backend)};
    const InitialMatching initial = parse_initial(cfg.initial);

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw Failure("cannot write '" + cfg.out + "'");
    }
    std::ostream& out = cfg.out.empty() ? std::cout : file;
    out << "instance,n,m,backend,phases,size,max_scans_ratio,total_micros\n";
    for (const Instance& inst : instances) {
        Graph g = inst.path.empty() ? generate_random(inst.n, inst.m, inst.seed) : load_graph(inst.path, std::cerr);
        for (Backend b : backends) {
            MatchOptions opts;
            opts.backend = b;
            opts.initial = initial;
            MatchResult res = maximum_matching(g, opts);
            double ratio = 0;
            long long micros = 0;
            const double denom = std::max(1, g.vertex_count() + g.edge_count());
            for (const PhaseStats& p : res.phases) {
                ratio = std::max(ratio, static_cast<double>(p.edge_scans) / denom);
                micros += p.micros;
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.4f", ratio);
            out << inst.name << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << backend_name(b) << ','
                << res.phases.size() << ',' << res.matching.size() << ',' << buf << ',' << micros << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-cardinality matching in general graphs"};
    app.require_subcommand(1);

    MatchConfig mc;
    CLI::App* match = app.add_subcommand("match", "Compute a maximum matching");
    match->add_option("--input", mc.input, "DIMACS graph file");
    match->add_option("--gen", mc.gen, "Generate a random graph with N vertices and M edges")->expected(2);
    match->add_option("--seed", mc.seed, "Generator seed");
    match->add_option("--backend", mc.backend, "Set-merging backend: reference|inctree");
    match->add_option("--initial", mc.initial, "Initial matching: greedy|none");
    match->add_option("--matching", mc.matching, "Explicit initial matching ('m u v' lines)");
    match->add_flag("--verify", mc.verify, "Check the result against an oracle");
    match->add_option("--stats", mc.stats, "Write per-phase statistics as CSV");

    BenchConfig bc;
    CLI::App* bench = app.add_subcommand("bench", "Run a benchmark set and print CSV");
    bench->add_option("--config", bc.config, "Instance list: 'gen NAME N M SEED' or 'file NAME PATH' per line");
    bench->add_option("--sweep", bc.sweep, "Generated instances n = 2^KMIN .. 2^KMAX")->expected(2);
    bench->add_option("--density", bc.density, "Edges per vertex for --sweep");
    bench->add_option("--seed", bc.seed, "Base seed for --sweep");
    bench->add_option("--backend", bc.backend, "reference|inctree|both");
    bench->add_option("--initial", bc.initial, "Initial matching: greedy|none");
    bench->add_option("--out", bc.out, "CSV output path (default standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (*match) return cmd_match(mc);
        return cmd_bench(bc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

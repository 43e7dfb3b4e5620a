// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "forest_script.hpp"
#include "mcm/matcher.hpp"
#include "mcm/oracle.hpp"
#include "support.hpp"

using namespace mcm;
using namespace testing_support;

namespace {

constexpr double kScanConstant = 30.0;  // C of the per-phase work bound
constexpr double kTrendFactor = 1.5;    // largest-n ratio over smallest-n ratio
constexpr int kSuite1RandomPerN = 10000;
constexpr int kSuite2PerClass = 200;
constexpr int kPetalRandom = 1000;
constexpr int kForestScripts = 1000;
constexpr int kForestMaxOps = 10000;

struct Verdict {
    bool ok = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& why) {
        if (ok) first_failure = why;
        ok = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

MatchResult solve(const Graph& g, InitialMatching init, Backend b, Trace* trace) {
    MatchOptions o;
    o.initial = init;
    o.backend = b;
    o.trace = trace;
    return maximum_matching(g, o);
}

// Phase discipline of one traced run.
void check_phases(const Graph& g, const MatchResult& r, const Trace& t, Verdict& v, const std::string& tag) {
    if (t.phases.size() != r.phases.size()) return v.fail(tag + ": trace and stats disagree on phase count");
    int prev = 0;
    for (std::size_t k = 0; k < t.phases.size(); ++k) {
        const PhaseTrace& p = t.phases[k];
        for (const auto& path : p.aps)
            if (static_cast<int>(path.size()) != p.l_m + 1)
                return v.fail(tag + ": phase " + std::to_string(p.phase) + " applied a path off length l_m");
        const bool last = k + 1 == t.phases.size();
        if (last != p.aps.empty()) return v.fail(tag + ": only the last phase may find nothing");
        if (!last) {
            if (p.l_m <= prev) return v.fail(tag + ": l_m did not increase");
            prev = p.l_m;
        }
    }
    const int bound = 2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(g.vertex_count())))) + 2;
    if (static_cast<int>(r.phases.size()) > bound)
        v.fail(tag + ": " + std::to_string(r.phases.size()) + " phases > " + std::to_string(bound));
}

double max_scan_ratio(const Graph& g, const MatchResult& r) {
    double worst = 0;
    const double denom = std::max(1, g.vertex_count() + g.edge_count());
    for (const PhaseStats& p : r.phases) worst = std::max(worst, static_cast<double>(p.edge_scans) / denom);
    return worst;
}

// Every traced petal against the path-enumeration oracle. Vertices deleted
// earlier in the phase keep only their matched edge, which makes them
// unreachable exactly as the engine treats them.
int check_petals(const Graph& g, const Trace& t, Verdict& v, const std::string& tag) {
    int checked = 0;
    for (const PetalEvent& p : t.petals) {
        const std::vector<Vertex>& start = t.phases[p.phase - 1].start_mate;
        std::vector<char> gone(g.vertex_count() + 1, 0);
        for (Vertex x : p.deleted) gone[x] = 1;
        Graph h(g.vertex_count());
        Matching m(g.vertex_count());
        for (const Edge& e : g.edges()) {
            const bool matched = start[e.u] == e.v;
            if ((gone[e.u] || gone[e.v]) && !matched) continue;
            h.add_edge(e.u, e.v);
            if (matched) m.set_pair(e.u, e.v);
        }
        oracle::PetalCheck c = oracle::petal_property_check(h, m, {oracle::PetalReport{p.bud, p.members}});
        ++checked;
        if (!c.ok) v.fail(tag + ": petal with bud " + std::to_string(p.bud) + ": " + c.counterexample);
    }
    return checked;
}

struct Suite1 {
    Verdict correct, petals, phases;
    int graphs = 0;
    int exhaustive = 0;
    int petal_count = 0;
};

void run_suite1(Suite1& s) {
    auto one = [&](const Graph& g, const std::string& tag) {
        const int want = oracle::brute_force_max(g);
        for (InitialMatching init : {InitialMatching::Empty, InitialMatching::Greedy}) {
            const Backend b = s.graphs % 2 ? Backend::IncrementalTree : Backend::Reference;
            Trace t;
            MatchResult r;
            try {
                r = solve(g, init, b, &t);
            } catch (const std::exception& e) {
                s.correct.fail(tag + ": threw " + e.what());
                continue;
            }
            if (!validate_matching(g, r.matching).ok || r.matching.size() != want)
                s.correct.fail(tag + ": size " + std::to_string(r.matching.size()) + " vs " + std::to_string(want));
            check_phases(g, r, t, s.phases, tag);
            s.petal_count += check_petals(g, t, s.petals, tag);
        }
        ++s.graphs;
    };
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!connected(g)) continue;
            one(g, "n=" + std::to_string(n) + " mask=" + std::to_string(mask));
            ++s.exhaustive;
        }
    }
    std::mt19937_64 rng(20240601);
    for (int n : {7, 8})
        for (int k = 0; k < kSuite1RandomPerN; ++k) one(random_connected(n, rng), "random n=" + std::to_string(n) + " #" + std::to_string(k));
}

void run_petal_random(Suite1& s, int& extra) {
    std::mt19937_64 rng(777);
    for (int k = 0; k < kPetalRandom; ++k) {
        const int n = 3 + static_cast<int>(rng() % 8);
        Graph g = random_connected(n, rng);
        Trace t;
        solve(g, k % 2 ? InitialMatching::Greedy : InitialMatching::Empty, Backend::Reference, &t);
        extra += check_petals(g, t, s.petals, "petal random #" + std::to_string(k));
    }
}

struct Suite2 {
    Verdict correct, phases;
    double worst_ratio = 0;
    std::string worst_at;
    int runs = 0;
};

void run_suite2(Suite2& s) {
    for (int n : {100, 500, 2000})
        for (int d : {1, 2, 4, 8})
            for (int k = 0; k < kSuite2PerClass; ++k) {
                const std::uint64_t seed = 1000003ull * n + 1009ull * d + k;
                Graph g = generate_random(n, d * n, seed);
                const int want = oracle::reference_blossom_max(g).size();
                const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(d * n) + " seed=" + std::to_string(seed);
                for (InitialMatching init : {InitialMatching::Empty, InitialMatching::Greedy}) {
                    const Backend b = k % 2 ? Backend::IncrementalTree : Backend::Reference;
                    Trace t;
                    MatchResult r = solve(g, init, b, &t);
                    ++s.runs;
                    if (!validate_matching(g, r.matching).ok || r.matching.size() != want)
                        s.correct.fail(tag + ": size " + std::to_string(r.matching.size()) + " vs " + std::to_string(want));
                    check_phases(g, r, t, s.phases, tag);
                    const double ratio = max_scan_ratio(g, r);
                    if (ratio > s.worst_ratio) {
                        s.worst_ratio = ratio;
                        s.worst_at = tag;
                    }
                }
            }
}

struct Scaling {
    std::vector<int> ns;
    std::vector<double> empty_ratio, greedy_ratio;
    std::vector<double> empty_ms;
};

// Same instances as `mcm bench --sweep 10 15 --seed 1`.
void run_scaling(Scaling& s) {
    for (int k = 10; k <= 15; ++k) {
        const int n = 1 << k;
        Graph g = generate_random(n, 4 * n, 1 + k);
        s.ns.push_back(n);
        const auto t0 = std::chrono::steady_clock::now();
        MatchResult e = solve(g, InitialMatching::Empty, Backend::IncrementalTree, nullptr);
        s.empty_ms.push_back(seconds_since(t0) * 1000);
        s.empty_ratio.push_back(max_scan_ratio(g, e));
        s.greedy_ratio.push_back(max_scan_ratio(g, solve(g, InitialMatching::Greedy, Backend::IncrementalTree, nullptr)));
    }
}

Fixture fixture_by_name(const std::string& name) {
    if (name == "G1") return fixture_g1();
    if (name == "G2") return fixture_g2();
    if (name == "G9") return fixture_g9();
    return fixture_g20();
}

const char* kind_name(AnchorEvent::Kind k) {
    switch (k) {
        case AnchorEvent::Kind::BridgeReached: return "bridge";
        case AnchorEvent::Kind::Rejected: return "rejected";
        case AnchorEvent::Kind::Bottleneck: return "bottleneck";
        case AnchorEvent::Kind::DeadEnd: return "dead-end";
        case AnchorEvent::Kind::Augmented: return "augmented";
    }
    return "?";
}

std::string join(const std::vector<Vertex>& v) {
    std::string s;
    for (Vertex x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

// The fixture suite rendered as text: result format plus the anchor trace.
std::string render_suite3() {
    std::ostringstream out;
    for (const char* name : {"G1", "G2", "G9", "G20"}) {
        Fixture f = fixture_by_name(name);
        MatchOptions o;
        o.initial = InitialMatching::Explicit;
        o.explicit_matching = f.matching;
        Trace t;
        o.trace = &t;
        MatchResult r = maximum_matching(f.graph, o);
        out << "c fixture " << name << "\n" << write_result(r.matching, &r.phases);
        for (const PetalEvent& p : t.petals) out << "c petal bud " << p.bud << " members " << join(p.members) << "\n";
        for (const AnchorEvent& a : t.anchors)
            out << "c anchor " << kind_name(a.kind) << " eps " << a.epsilon << " bud " << a.bud << " A " << join(a.a_hat)
                << " B " << join(a.b_hat) << " path " << join(a.path) << "\n";
    }
    return out.str();
}

Verdict check_fixtures() {
    Verdict v;
    auto run = [](const Fixture& f, Trace& t) {
        MatchOptions o;
        o.initial = InitialMatching::Explicit;
        o.explicit_matching = f.matching;
        o.trace = &t;
        return maximum_matching(f.graph, o);
    };
    using VV = std::vector<Vertex>;
    {
        Trace t;
        MatchResult r = run(fixture_g1(), t);
        if (r.matching.size() != 2) v.fail("G1 size");
        if (!t.phases[0].aps.empty()) v.fail("G1 found a path");
        if (t.petals.size() != 1 || t.petals[0].bud != 3 || t.petals[0].members != VV{3, 4, 5}) v.fail("G1 petal");
    }
    {
        Trace t;
        MatchResult r = run(fixture_g2(), t);
        if (r.matching.size() != 3 || t.phases[0].l_m != 5 || t.phases[0].aps != std::vector<VV>{{1, 2, 3, 4, 5, 6}})
            v.fail("G2");
    }
    {
        Trace t;
        MatchResult r = run(fixture_g9(), t);
        if (r.matching.size() != 4 || t.phases[0].l_m != 7 ||
            t.phases[0].aps != std::vector<VV>{{1, 2, 3, 4, 5, 6, 7, 8}})
            v.fail("G9");
    }
    {
        Trace t;
        MatchResult r = run(fixture_g20(), t);
        if (r.matching.size() != 6 || t.phases[0].l_m != 7) v.fail("G20 size or l_m");
        if (t.phases[0].aps != std::vector<VV>{{6, 7, 8, 9, 10, 11, 12, 13}}) v.fail("G20 path");
        bool bottleneck = false;
        int inner_dead_ends = 0;
        bool retired = false;
        for (const AnchorEvent& a : t.anchors) {
            if (a.kind == AnchorEvent::Kind::Bottleneck && a.bud == 3 && a.epsilon == 3 && a.b_hat == VV{1, 2, 3})
                bottleneck = true;
            if (a.kind == AnchorEvent::Kind::DeadEnd) {
                if (a.bud == 1)
                    retired = true;
                else
                    ++inner_dead_ends;
            }
        }
        if (!bottleneck) v.fail("G20 bottleneck at 3");
        if (inner_dead_ends != 2 || !retired) v.fail("G20 dead ends of the triangle component");
    }
    v.detail = "G1 G2 G9 G20 sizes, l_m, paths, petal and anchor events";
    return v;
}

void report(int id, const char* title, const Verdict& v, double secs) {
    std::printf("criterion %d %s: %s (%s; %.1fs)\n", id, v.ok ? "PASS" : "FAIL", title, v.detail.c_str(), secs);
    if (!v.ok) std::printf("  first failure: %s\n", v.first_failure.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    bool all = true;
    auto t0 = std::chrono::steady_clock::now();

    Suite1 s1;
    run_suite1(s1);
    const double t_suite1 = seconds_since(t0);
    s1.correct.detail = std::to_string(s1.exhaustive) + " labeled connected graphs n<=6 + " +
                        std::to_string(2 * kSuite1RandomPerN) + " random connected n in {7,8}, empty and greedy starts, exact";
    report(1, "exhaustive correctness vs brute force", s1.correct, t_suite1);
    all &= s1.correct.ok;

    t0 = std::chrono::steady_clock::now();
    Suite2 s2;
    run_suite2(s2);
    const double t_suite2 = seconds_since(t0);
    s2.correct.detail = std::to_string(kSuite2PerClass) + " graphs per (n, m/n) for n in {100,500,2000}, m/n in {1,2,4,8}; " +
                        std::to_string(s2.runs) + " runs vs blossom oracle, exact";
    report(2, "randomized correctness vs blossom oracle", s2.correct, t_suite2);
    all &= s2.correct.ok;

    t0 = std::chrono::steady_clock::now();
    Verdict fixtures = check_fixtures();
    report(3, "fixture traces", fixtures, seconds_since(t0));
    all &= fixtures.ok;

    t0 = std::chrono::steady_clock::now();
    int random_petals = 0;
    run_petal_random(s1, random_petals);
    s1.petals.detail = std::to_string(s1.petal_count) + " petals over suite 1 + " + std::to_string(random_petals) +
                       " over " + std::to_string(kPetalRandom) + " random n<=10, exact";
    report(4, "petal properties", s1.petals, t_suite1 + seconds_since(t0));
    all &= s1.petals.ok;

    Verdict phases;
    phases.ok = s1.phases.ok && s2.phases.ok;
    phases.first_failure = !s1.phases.ok ? s1.phases.first_failure : s2.phases.first_failure;
    phases.detail = "suites 1 and 2: path lengths = l_m, l_m strictly increasing, phases <= 2*ceil(sqrt n)+2";
    report(5, "phase discipline", phases, 0.0);
    all &= phases.ok;

    t0 = std::chrono::steady_clock::now();
    Scaling sc;
    run_scaling(sc);
    Verdict work;
    double scale_worst = 0;
    for (double r : sc.empty_ratio) scale_worst = std::max(scale_worst, r);
    if (s2.worst_ratio > kScanConstant) work.fail("suite 2 ratio " + fmt("%.3f", s2.worst_ratio) + " at " + s2.worst_at);
    if (scale_worst > kScanConstant) work.fail("scaling ratio " + fmt("%.3f", scale_worst));
    const double trend = sc.empty_ratio.back() / sc.empty_ratio.front();
    if (trend > kTrendFactor) work.fail("ratio trend " + fmt("%.3f", trend));
    work.detail = "C=" + fmt("%.0f", kScanConstant) + "; suite 2 max " + fmt("%.3f", s2.worst_ratio) +
                  "; scaling n=2^10..2^15 m=4n empty start max " + fmt("%.3f", scale_worst) + ", last/first " +
                  fmt("%.3f", trend) + " <= " + fmt("%.1f", kTrendFactor);
    report(6, "linear work per phase", work, seconds_since(t0));
    for (std::size_t k = 0; k < sc.ns.size(); ++k)
        std::printf("  n=%-6d empty start ratio %.4f (%.0f ms)  greedy start ratio %.4f\n", sc.ns[k], sc.empty_ratio[k],
                    sc.empty_ms[k], sc.greedy_ratio[k]);
    all &= work.ok;

    t0 = std::chrono::steady_clock::now();
    Verdict forest;
    std::mt19937_64 rng(4242);
    long long ops = 0, finds = 0;
    for (int k = 0; k < kForestScripts; ++k) {
        ScriptOutcome r = run_forest_script(rng, kForestMaxOps);
        ops += r.ops;
        finds += r.finds;
        if (!r.agree) forest.fail("script " + std::to_string(k) + ": " + r.mismatch);
    }
    forest.detail = std::to_string(kForestScripts) + " scripts, " + std::to_string(ops) + " ops, " +
                    std::to_string(finds) + " finds compared, exact";
    report(7, "set-merging backend equivalence", forest, seconds_since(t0));
    all &= forest.ok;

    t0 = std::chrono::steady_clock::now();
    Verdict det;
    const std::string first = render_suite3();
    const std::string second = render_suite3();
    if (first != second) det.fail("fixture outputs differ between runs");
    det.detail = std::to_string(first.size()) + " bytes of fixture output compared";
    report(8, "determinism", det, seconds_since(t0));
    all &= det.ok;

    return all ? 0 : 1;
}

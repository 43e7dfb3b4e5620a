#include "mcm/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace mcm {

std::uint64_t Graph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
    if (u < 1 || u > n_ || v < 1 || v > n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (!keys_.insert(key(u, v)).second) return false;
    int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v) return false;
    return keys_.count(key(u, v)) != 0;
}

int Matching::size() const {
    int c = 0;
    for (std::size_t v = 1; v < mate_.size(); ++v)
        if (mate_[v] != kNone && static_cast<Vertex>(v) < mate_[v]) ++c;
    return c;
}

std::vector<Edge> Matching::pairs() const {
    std::vector<Edge> out;
    for (std::size_t v = 1; v < mate_.size(); ++v)
        if (mate_[v] != kNone && static_cast<Vertex>(v) < mate_[v])
            out.push_back({static_cast<Vertex>(v), mate_[v]});
    return out;
}

ParseError::ParseError(Kind k, int ln, const std::string& what)
    : std::runtime_error("line " + std::to_string(ln) + ": " + what), kind(k), line(ln) {}

namespace {

bool read_int(std::istringstream& ss, long long& out) {
    return static_cast<bool>(ss >> out);
}

}  // namespace

ParseResult parse_dimacs(std::istream& in) {
    ParseResult res;
    std::string line;
    int lineno = 0;
    bool header = false;
    long long declared = 0;
    long long seen = 0;
    int n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            long long nn = -1, mm = -1;
            std::string rest;
            if (header || !(ss >> fmt) || fmt != "edge" || !read_int(ss, nn) || !read_int(ss, mm) ||
                (ss >> rest) || nn < 0 || mm < 0 || nn > (1LL << 30))
                throw ParseError(ParseError::Kind::MalformedHeader, lineno, "malformed header");
            header = true;
            n = static_cast<int>(nn);
            declared = mm;
            res.graph = Graph(n);
        } else if (tag == "e") {
            if (!header) throw ParseError(ParseError::Kind::MalformedHeader, lineno, "edge before header");
            long long u = 0, v = 0;
            std::string rest;
            if (!read_int(ss, u) || !read_int(ss, v) || (ss >> rest))
                throw ParseError(ParseError::Kind::Syntax, lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ParseError::Kind::VertexOutOfRange, lineno, "vertex out of range");
            if (u == v) throw ParseError(ParseError::Kind::SelfLoop, lineno, "self-loop");
            ++seen;
            if (!res.graph.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                res.notes.push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                                    std::to_string(u) + "-" + std::to_string(v) + " collapsed");
        } else {
            throw ParseError(ParseError::Kind::Syntax, lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!header) throw ParseError(ParseError::Kind::MalformedHeader, lineno, "missing header");
    if (seen != declared)
        throw ParseError(ParseError::Kind::EdgeCountMismatch, lineno,
                         "edge count mismatch: header says " + std::to_string(declared) + ", found " +
                             std::to_string(seen));
    return res;
}

ParseResult parse_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

Matching parse_matching(std::istream& in, int n) {
    Matching m(n);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag != "m") continue;
        long long u = 0, v = 0;
        if (!read_int(ss, u) || !read_int(ss, v))
            throw ParseError(ParseError::Kind::Syntax, lineno, "malformed matching line");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(ParseError::Kind::VertexOutOfRange, lineno, "vertex out of range");
        if (u == v) throw ParseError(ParseError::Kind::SelfLoop, lineno, "self-loop");
        if (!m.is_free(static_cast<Vertex>(u)) || !m.is_free(static_cast<Vertex>(v)))
            throw ParseError(ParseError::Kind::Syntax, lineno, "vertex matched twice");
        m.set_pair(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return m;
}

namespace {

// Uniform draw in [0, k) by multiply-shift; stable across platforms.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t k) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * k) >> 64);
}

}  // namespace

Graph generate_random(int n, int m, std::uint64_t seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative size");
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (m > total) throw std::invalid_argument("m exceeds n(n-1)/2");
    Graph g(n);
    std::mt19937_64 rng(seed);
    const bool complement = 2LL * m > total;
    const long long want = complement ? total - m : m;
    std::unordered_set<std::uint64_t> picked;
    std::vector<Edge> order;
    while (static_cast<long long>(order.size()) < want) {
        Vertex u = static_cast<Vertex>(draw(rng, n)) + 1;
        Vertex v = static_cast<Vertex>(draw(rng, n)) + 1;
        if (u == v) continue;
        std::uint64_t k = u < v ? (static_cast<std::uint64_t>(u) << 32) | v
                                : (static_cast<std::uint64_t>(v) << 32) | u;
        if (!picked.insert(k).second) continue;
        order.push_back({u, v});
    }
    if (!complement) {
        for (const Edge& e : order) g.add_edge(e.u, e.v);
    } else {
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (!picked.count((static_cast<std::uint64_t>(u) << 32) | v)) g.add_edge(u, v);
    }
    return g;
}

Matching greedy_matching(const Graph& g) {
    Matching m(g.vertex_count());
    for (const Edge& e : g.edges())
        if (m.is_free(e.u) && m.is_free(e.v)) m.set_pair(e.u, e.v);
    return m;
}

Validation validate_matching(const Graph& g, const Matching& m) {
    Validation res;
    auto fail = [&](std::string s) {
        res.ok = false;
        res.problems.push_back(std::move(s));
    };
    if (m.vertex_count() != g.vertex_count()) {
        fail("matching has " + std::to_string(m.vertex_count()) + " vertices, graph has " +
             std::to_string(g.vertex_count()));
        return res;
    }
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        Vertex w = m.mate(v);
        if (w == kNone) continue;
        if (w < 1 || w > g.vertex_count()) {
            fail("vertex " + std::to_string(v) + " has out-of-range mate");
            continue;
        }
        if (m.mate(w) != v)
            fail("asymmetric mate: " + std::to_string(v) + "->" + std::to_string(w) + " but " +
                 std::to_string(w) + "->" + std::to_string(m.mate(w)));
        if (v < w && !g.has_edge(v, w))
            fail("matched pair " + std::to_string(v) + "-" + std::to_string(w) + " is not an edge");
    }
    return res;
}

Validation validate_matching(const Graph& g, const std::vector<Edge>& pairs) {
    Validation res;
    Matching m(g.vertex_count());
    for (const Edge& e : pairs) {
        const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
        if (e.u < 1 || e.u > g.vertex_count() || e.v < 1 || e.v > g.vertex_count() || e.u == e.v) {
            res.ok = false;
            res.problems.push_back("invalid pair " + name);
            continue;
        }
        if (!g.has_edge(e.u, e.v)) {
            res.ok = false;
            res.problems.push_back("matched pair " + name + " is not an edge");
        }
        for (Vertex x : {e.u, e.v}) {
            if (!m.is_free(x)) {
                res.ok = false;
                res.problems.push_back("vertex " + std::to_string(x) + " matched twice");
            }
        }
        if (m.is_free(e.u) && m.is_free(e.v)) m.set_pair(e.u, e.v);
    }
    return res;
}

std::string write_result(const Matching& m, const std::vector<PhaseStats>* stats) {
    std::string out = "s " + std::to_string(m.size()) + "\n";
    for (const Edge& e : m.pairs())
        out += "m " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    if (stats) {
        out += "c phases " + std::to_string(stats->size()) + "\n";
        for (const PhaseStats& s : *stats) {
            out += "c phase " + std::to_string(s.phase) + " l_m " +
                   (s.l_m >= kInfinity ? std::string("inf") : std::to_string(s.l_m)) + " aps " +
                   std::to_string(s.aps) + " edge_scans " + std::to_string(s.edge_scans) + "\n";
        }
    }
    return out;
}

}  // namespace mcm

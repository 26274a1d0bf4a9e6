#include "hg/graph.hpp"

#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace hg {

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

std::vector<int> maximum_matching(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n);
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.n || b >= g.n || a == b)
            throw std::invalid_argument("bad graph edge");
        boost::add_edge(a, b, bg);
    }
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n);
    bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (!ok) throw std::runtime_error("matching verification failed");
    std::vector<int> out(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (mate[v] != boost::graph_traits<BoostGraph>::null_vertex())
            out[v] = static_cast<int>(mate[v]);
    return out;
}

std::optional<std::vector<int>> parity_factor_subgraph(const DegreeConstraintProblem& p) {
    const int n = p.graph.n;
    if (static_cast<int>(p.bounds.size()) != n)
        throw std::invalid_argument("bounds size mismatch");
    auto deg = p.graph.degrees();
    for (int v = 0; v < n; ++v) {
        auto [lo, hi] = p.bounds[v];
        if (lo < 0 || hi < lo || (hi - lo) % 2 != 0)
            throw std::invalid_argument("malformed degree set");
        if (lo > deg[v]) return std::nullopt;  // degree cap
    }

    // Gadget per vertex v of degree d with set {lo,...,hi}: d outer nodes
    // (one per incident edge), d-lo core nodes adjacent to all outers, and
    // (hi-lo)/2 disjoint core-core edges. Each original edge becomes a
    // matched pair of connector nodes, one tied to an outer node at each
    // endpoint. A perfect matching exists iff the constrained subgraph does;
    // edge e is selected iff its connector pair is split by the matching.
    Graph gad;
    std::vector<std::vector<int>> outer(n);
    std::vector<int> slot(n, 0);
    for (int v = 0; v < n; ++v) {
        const int d = deg[v];
        const int lo = p.bounds[v].first;
        const int hi = std::min(p.bounds[v].second, d);
        for (int i = 0; i < d; ++i) outer[v].push_back(gad.add_vertex());
        std::vector<int> core;
        for (int i = 0; i < d - lo; ++i) core.push_back(gad.add_vertex());
        for (int c : core)
            for (int o : outer[v]) gad.add_edge(c, o);
        for (int i = 0; 2 * i + 1 < static_cast<int>(core.size()) && i < (hi - lo) / 2; ++i)
            gad.add_edge(core[2 * i], core[2 * i + 1]);
    }
    std::vector<int> connA(p.graph.edges.size()), connB(p.graph.edges.size());
    for (size_t k = 0; k < p.graph.edges.size(); ++k) {
        auto [a, b] = p.graph.edges[k];
        connA[k] = gad.add_vertex();
        connB[k] = gad.add_vertex();
        gad.add_edge(connA[k], connB[k]);
        gad.add_edge(connA[k], outer[a][slot[a]++]);
        gad.add_edge(connB[k], outer[b][slot[b]++]);
    }

    auto mate = maximum_matching(gad);
    if (!has_perfect_matching_size(mate)) return std::nullopt;

    std::vector<int> selected;
    for (size_t k = 0; k < p.graph.edges.size(); ++k)
        if (mate[connA[k]] != connB[k]) selected.push_back(static_cast<int>(k));
    return selected;
}

}  // namespace hg

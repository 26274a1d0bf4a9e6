#ifndef HG_GRAPH_HPP
#define HG_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace hg {

// Finite simple graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int add_vertex() { return n++; }
    void add_edge(int a, int b) { edges.emplace_back(a, b); }
    std::vector<int> degrees() const;
};

// Maximum-cardinality matching; mate[v] = partner or -1.
std::vector<int> maximum_matching(const Graph& g);

inline bool has_perfect_matching_size(const std::vector<int>& mate) {
    for (int m : mate)
        if (m < 0) return false;
    return true;
}

// Per-vertex allowed-degree sets of the form {lo, lo+2, ..., hi}.
struct DegreeConstraintProblem {
    Graph graph;
    std::vector<std::pair<int, int>> bounds;  // (lo, hi) per vertex
};

// Returns the selected edge indices of a subgraph meeting every constraint,
// or nullopt if none exists. Tutte-style vertex gadgets over a perfect
// matching query.
std::optional<std::vector<int>> parity_factor_subgraph(const DegreeConstraintProblem& p);

}  // namespace hg

#endif

#ifndef HG_REDUCER_HPP
#define HG_REDUCER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hg/hypergraph.hpp"
#include "hg/solver.hpp"
#include "hg/trails.hpp"

namespace hg {

struct VertexCut {
    std::vector<Vertex> s;                          // sorted, |s| in {1,2}
    std::vector<std::vector<Vertex>> components;    // vertex classes of H\S
    bool minimal = false;
    std::vector<int> degreeProfile;                 // deg_H(v) for v in s
    std::vector<EdgeIndex> eS;                      // edges with e == S
};

// All vertex cuts of size <= maxSize (1 or 2), annotated.
std::vector<VertexCut> find_vertex_cuts(const Hypergraph& h, int maxSize);

enum class DerivedKind { Component, SComponent, Star, DoubleStar, MinusU, MinusV };

std::string derived_kind_name(DerivedKind k);

struct DerivedHypergraph {
    DerivedKind kind = DerivedKind::Component;
    int componentIndex = 0;  // 0-based index into cut.components
    Hypergraph hg;
    std::vector<Vertex> vertexToParent;   // local vertex i+1 -> parent id
    std::vector<EdgeIndex> edgeToParent;  // local edge j+1 -> parent index, 0 = added copy of S

    Vertex parent_vertex(Vertex v) const { return vertexToParent[v - 1]; }
    EdgeIndex parent_edge(EdgeIndex j) const { return edgeToParent[j - 1]; }
};

// For each component: H_i and H_i'; for |S|=2 additionally H_i*, H_i**,
// H_i'\u, H_i'\v (u < v the cut pair).
std::vector<DerivedHypergraph> derived_hypergraphs(const Hypergraph& h, const VertexCut& cut);
DerivedHypergraph derive(const Hypergraph& h, const VertexCut& cut, int componentIndex,
                         DerivedKind kind);

enum class CutTheorem { EvenFamily, EvenTour, OddFamily, OddTour };

// Which derived hypergraphs of one component admit the relevant spanning
// structure (family or tour, per theorem).
struct ComponentFlags {
    bool plain = false;       // H_i
    bool scomp = false;       // H_i'
    bool star = false;        // H_i*
    bool doubleStar = false;  // H_i**
    bool minusU = false;      // H_i'\u
    bool minusV = false;      // H_i'\v
};

struct SubsetChoice {
    std::vector<int> subset;  // I or J, 0-based component indices, ascending
    int ell = -1;             // designated index for the empty-I / odd cases
    int sIdx = -1, tIdx = -1; // the (H_s'\u, H_t'\v) pair when used
};

// Concrete I (even theorems) or J (odd theorems) satisfying the theorem's
// clauses, or nullopt when none exists.
std::optional<SubsetChoice> feasible_subset(const std::vector<ComponentFlags>& flags,
                                            CutTheorem theorem);

// Rewrites a spanning cycle decomposition, preserving its incidence graph,
// until each component sees at most one cycle requiring completion and the
// (2,1,1)-count equals |E_S| mod 2.
CycleDecomposition normalize_cycle_decomposition(const Hypergraph& h,
                                                 const std::array<Vertex, 2>& s,
                                                 const CycleDecomposition& c);

struct PartWitness {
    DerivedHypergraph derived;
    EulerFamily witness;  // in derived-local labels
};

// Combines verified witnesses of the derived hypergraphs demanded by the
// applied rule into a witness of H.
EulerFamily assemble_witness(const Hypergraph& h, const VertexCut& cut,
                             const std::vector<PartWitness>& parts, Mode mode);

struct TraceNode {
    std::string rule;  // cut-vertex | deg2-cut | 2cut-even | 2cut-odd | direct | split
    std::vector<Vertex> s;
    std::vector<int> subset;  // I or J (0-based) when a 2-cut theorem applied
    bool yes = false;
    std::vector<int> children;
    std::vector<std::string> childLabels;  // e.g. "H1*", "H2'"
};

struct ReductionTrace {
    std::vector<TraceNode> nodes;  // node 0 is the root
    std::string serialize() const;
};

struct ReducedDecision {
    Decision decision;
    ReductionTrace trace;
};

ReducedDecision decide_reduced(const Hypergraph& h, Mode mode);

}  // namespace hg

#endif

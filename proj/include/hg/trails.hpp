#ifndef HG_TRAILS_HPP
#define HG_TRAILS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hg/hypergraph.hpp"

namespace hg {

// Closed trail v0 e1 v1 ... v_{k-1} ek v0: anchors[i] and anchors[(i+1)%k]
// are adjacent via edgeIndices[i]; edge indices pairwise distinct; k >= 2.
struct ClosedTrail {
    std::vector<Vertex> anchors;
    std::vector<EdgeIndex> edgeIndices;

    int length() const { return static_cast<int>(edgeIndices.size()); }
    friend bool operator==(const ClosedTrail&, const ClosedTrail&) = default;
};

// Open trail v0 e1 v1 ... ek vk (k >= 1): anchors has one more entry than
// edgeIndices. Used for the (u,v)-path surgery in the cut reductions.
struct OpenTrail {
    std::vector<Vertex> anchors;
    std::vector<EdgeIndex> edgeIndices;

    int length() const { return static_cast<int>(edgeIndices.size()); }
    Vertex front() const { return anchors.front(); }
    Vertex back() const { return anchors.back(); }
};

struct EulerFamily {
    std::vector<ClosedTrail> trails;
    bool spanning = false;
};

struct SType {
    int a = 0;  // traversals of S-vertices
    int b = 0;  // traversed edges equal to S
    int c = 0;  // components of H\S intersected
    friend bool operator==(const SType&, const SType&) = default;
};

inline bool requires_completion(const SType& t) {
    return t == SType{2, 0, 2} || t == SType{2, 1, 1};
}

struct CycleDecomposition {
    std::vector<ClosedTrail> cycles;
    std::optional<std::array<Vertex, 2>> context;  // the 2-set S, when given
};

struct TrailCheck {
    bool ok = true;
    std::string violation;  // first violated invariant, empty when ok
};

TrailCheck validate_trail(const Hypergraph& h, const ClosedTrail& t);

bool is_cycle(const ClosedTrail& t);

// Least anchor first, lexicographically least direction; rotations and
// reversals of the same closed trail normalize to the same value.
ClosedTrail canonical_trail(const ClosedTrail& t);

// Anchor flags F(T) of a closed trail: two flags per traversal step.
std::vector<Flag> trail_flags(const ClosedTrail& t);

// Edge-disjoint union of the per-trail incidence graphs, as a sorted flag
// set; equality of these flag sets is trail-family equivalence.
std::vector<Flag> family_incidence_graph(const std::vector<ClosedTrail>& trails);

// Decomposes the even graph family_incidence_graph(F) into graph cycles and
// maps them back to hypergraph cycles. Deterministic.
CycleDecomposition cycle_decomposition(const Hypergraph& h, const std::vector<ClosedTrail>& family);

SType s_type(const Hypergraph& h, const std::array<Vertex, 2>& s, const ClosedTrail& t);

ClosedTrail concatenate(const ClosedTrail& t1, const ClosedTrail& t2, Vertex at);

// One closed trail per connected component of the flag subgraph; every edge
// mentioned must carry exactly two flags and every v-vertex an even number.
EulerFamily family_from_even_subgraph(const Hypergraph& h, const std::vector<Flag>& flags);

std::string serialize_witness(const EulerFamily& fam);
EulerFamily parse_witness(const std::string& text);

}  // namespace hg

#endif

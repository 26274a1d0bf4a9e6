#ifndef HG_SOLVER_HPP
#define HG_SOLVER_HPP

#include <optional>
#include <string>

#include "hg/graph.hpp"
#include "hg/hypergraph.hpp"
#include "hg/trails.hpp"

namespace hg {

enum class Mode { Family, Tour };

struct Decision {
    bool yes = false;
    std::optional<EulerFamily> witness;  // present on YES
    std::string reason;                  // machine-readable code on NO
};

struct NecessaryCheck {
    bool pass = true;
    std::string failed;   // "i".."iv" when a condition fails
    bool partial = false; // condition (iv) checked on pairs/triples only
};

// Necessary conditions for a spanning Euler family; condition (iv) is
// checked exactly for m <= subsetBound, else over pairs and triples only.
NecessaryCheck check_necessary_conditions(const Hypergraph& h, int subsetBound = 12);

// Direct polynomial decision via the incidence-graph characterization:
// a subgraph with e-vertex degrees exactly 2 and v-vertex degrees even
// (positive when spanning).
Decision decide_spanning_euler_family(const Hypergraph& h);
Decision decide_euler_family(const Hypergraph& h);

// Exact backtracking over per-edge anchor-pair choices with pruning.
Decision decide_spanning_euler_tour(const Hypergraph& h);
Decision decide_euler_tour(const Hypergraph& h);

Decision decide_direct(const Hypergraph& h, Mode mode, bool spanning);

}  // namespace hg

#endif

#ifndef HG_ORACLE_HPP
#define HG_ORACLE_HPP

#include <cstdint>
#include <string>

#include "hg/hypergraph.hpp"
#include "hg/solver.hpp"
#include "hg/trails.hpp"

namespace hg {

// Ground truth by exhaustion over per-edge anchor-pair choices.
// Requires flag count <= 24; returns the lexicographically least witness.
Decision brute_force_decide(const Hypergraph& h, Mode mode, bool spanning);

struct WitnessCheck {
    bool ok = true;
    std::string violation;
};

// Checks a claimed Euler family against H: valid closed trails, pairwise
// edge- and anchor-disjoint, every edge traversed exactly once; spanning
// additionally needs every vertex anchored, tour mode a single trail.
WitnessCheck verify_witness(const Hypergraph& h, const EulerFamily& w, Mode mode,
                            bool spanning);

// xorshift64* — fixed algorithm so seeded corpora are reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

private:
    std::uint64_t state_;
};

enum class Structure { Uniform, Glued1Cut, Glued2Cut, Deg2Cut };

struct GeneratorParams {
    std::uint64_t seed = 1;
    int nMin = 3, nMax = 6;
    int mMin = 3, mMax = 6;
    int sizeMin = 2, sizeMax = 3;
    Structure structure = Structure::Uniform;
    int cutSize = 2;  // deg2-cut only
};

// Deterministic for a fixed seed. Glued structures place the shared cut
// vertices at the highest vertex ids; deg2-cut bridge vertices likewise.
Hypergraph random_hypergraph(const GeneratorParams& p);

}  // namespace hg

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hg/oracle.hpp"
#include "hg/reducer.hpp"

using namespace hg;

TEST_CASE("brute force on known instances") {
    Hypergraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(brute_force_decide(triangle, Mode::Family, true).yes);
    CHECK(brute_force_decide(triangle, Mode::Tour, true).yes);

    // two copies of {1,2,3}: an Euler family exists but never anchors all three
    Hypergraph twin(3, {{1, 2, 3}, {1, 2, 3}});
    CHECK(brute_force_decide(twin, Mode::Family, false).yes);
    CHECK_FALSE(brute_force_decide(twin, Mode::Family, true).yes);
    CHECK(brute_force_decide(twin, Mode::Family, true).reason == "exhausted");

    Hypergraph digon(2, {{1, 2}, {1, 2}});
    CHECK(brute_force_decide(digon, Mode::Tour, true).yes);
    CHECK_FALSE(brute_force_decide(Hypergraph(2, {{1, 2}}), Mode::Tour, false).yes);
    CHECK_FALSE(brute_force_decide(Hypergraph(2, {{1}, {1, 2}}), Mode::Family, false).yes);
}

TEST_CASE("brute force yields verified witnesses and respects the flag budget") {
    Hypergraph h(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto d = brute_force_decide(h, Mode::Tour, true);
    REQUIRE(d.yes);
    CHECK(verify_witness(h, *d.witness, Mode::Tour, true).ok);

    // 9 edges of size 3 = 27 flags
    Hypergraph big(9, std::vector<std::vector<Vertex>>(9, {1, 2, 3}));
    CHECK_THROWS_AS(brute_force_decide(big, Mode::Family, false), std::runtime_error);
}

TEST_CASE("verify_witness rejects each kind of corruption") {
    Hypergraph h(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    EulerFamily good{{{{1, 2, 3, 4}, {1, 2, 3, 4}}}, true};
    CHECK(verify_witness(h, good, Mode::Tour, true).ok);

    // triangle plus a doubled pendant pair, witness covers only the triangle
    Hypergraph tripp(5, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {4, 5}});
    EulerFamily dropped{{{{1, 2, 3}, {1, 2, 3}}}, false};
    auto r = verify_witness(tripp, dropped, Mode::Family, false);
    CHECK_FALSE(r.ok);
    CHECK(r.violation == "edge 4 untraversed");

    EulerFamily twice{
        {{{1, 2, 3, 4}, {1, 2, 3, 4}}, {{1, 2, 3, 4}, {1, 2, 3, 4}}}, true};
    CHECK(verify_witness(h, twice, Mode::Family, false).violation ==
          "edge 1 traversed more than once");

    EulerFamily badTrail{{{{1, 3, 2, 4}, {1, 2, 3, 4}}}, true};
    CHECK(verify_witness(h, badTrail, Mode::Family, false).violation ==
          "trail 1: anchors not adjacent via edge 1");

    // two trails sharing anchor 2
    Hypergraph twoTri(5, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {2, 5}});
    EulerFamily shared{{{{1, 2, 3}, {1, 2, 3}}, {{2, 4, 5}, {4, 5, 6}}}, true};
    CHECK(verify_witness(twoTri, shared, Mode::Family, true).violation ==
          "anchor-disjointness: vertex 2");

    EulerFamily notSpanning{{{{1, 2, 3}, {1, 2, 3}}}, false};
    Hypergraph plusIso(5, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(verify_witness(plusIso, notSpanning, Mode::Family, true).violation ==
          "vertex 4 not anchored");
    CHECK(verify_witness(plusIso, notSpanning, Mode::Family, false).ok);

    EulerFamily pair{{{{1, 2, 3}, {1, 2, 3}}, {{2, 4, 5}, {4, 5, 6}}}, true};
    CHECK_FALSE(verify_witness(twoTri, pair, Mode::Tour, false).ok);
}

TEST_CASE("rng and generator are deterministic") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng zero(0), fixed(0x9e3779b97f4a7c15ULL);
    CHECK(zero.next() == fixed.next());

    GeneratorParams gp;
    gp.seed = 7;
    CHECK(random_hypergraph(gp).serialize() == random_hypergraph(gp).serialize());
    gp.seed = 8;
    Hypergraph other = random_hypergraph(gp);
    CHECK(is_connected(other));
}

TEST_CASE("glued structures plant the advertised cuts") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.structure = Structure::Glued1Cut;
        gp.nMin = 5;
        gp.nMax = 7;
        Hypergraph h = random_hypergraph(gp);
        auto cuts = find_vertex_cuts(h, 1);
        bool found = false;
        for (const auto& c : cuts)
            if (c.s == std::vector<Vertex>{h.vertex_count()}) found = true;
        CHECK(found);
    }
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.structure = Structure::Glued2Cut;
        gp.nMin = 6;
        gp.nMax = 8;
        gp.mMin = 4;
        Hypergraph h = random_hypergraph(gp);
        const int n = h.vertex_count();
        auto rest = remove_vertices(h, {n - 1, n});
        CHECK(connected_components(rest.hg).count() >= 2);
    }
}

TEST_CASE("deg2-cut structure gives degree-2 bridge vertices of chosen count") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratorParams gp;
        gp.seed = seed;
        gp.structure = Structure::Deg2Cut;
        gp.cutSize = 3;
        gp.nMin = 6;
        gp.nMax = 8;
        gp.mMin = 6;
        gp.mMax = 8;
        Hypergraph h = random_hypergraph(gp);
        const int n = h.vertex_count();
        std::vector<Vertex> s;
        for (int v = n - 2; v <= n; ++v) {
            CHECK(h.degree(v) == 2);
            s.push_back(v);
        }
        auto rest = remove_vertices(h, s);
        CHECK(connected_components(rest.hg).count() >= 2);
    }
}

TEST_CASE("generator rejects unsatisfiable parameter sets") {
    GeneratorParams gp;
    gp.sizeMin = 5;
    gp.sizeMax = 4;
    CHECK_THROWS_AS(random_hypergraph(gp), std::invalid_argument);
    GeneratorParams tiny;
    tiny.structure = Structure::Deg2Cut;
    tiny.cutSize = 3;
    tiny.nMin = tiny.nMax = 4;  // needs cutSize + 2 vertices
    CHECK_THROWS_AS(random_hypergraph(tiny), std::invalid_argument);
}

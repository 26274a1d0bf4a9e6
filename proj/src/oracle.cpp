#include "hg/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hg {

namespace {

// all 2-subsets of an edge's vertex list, lexicographic
std::vector<std::pair<Vertex, Vertex>> anchor_pairs(const std::vector<Vertex>& e) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j) out.emplace_back(e[i], e[j]);
    return out;
}

}  // namespace

Decision brute_force_decide(const Hypergraph& h, Mode mode, bool spanning) {
    if (h.flag_count() > 24) throw std::runtime_error("budget exceeded");
    const int n = h.vertex_count();
    const int m = h.edge_count();

    std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs(m);
    for (int j = 1; j <= m; ++j) {
        pairs[j - 1] = anchor_pairs(h.edge(j));
        if (pairs[j - 1].empty())
            return {false, std::nullopt, "edge of cardinality 1"};
    }

    std::vector<size_t> pick(m, 0);
    while (true) {
        std::vector<int> deg(n + 1, 0);
        for (int j = 0; j < m; ++j) {
            auto [x, y] = pairs[j][pick[j]];
            ++deg[x];
            ++deg[y];
        }
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
            if (deg[v] % 2) ok = false;
            if (spanning && deg[v] == 0) ok = false;
        }
        if (ok && mode == Mode::Tour) {
            if (m < 2) ok = false;
            // single component over anchored vertices
            std::vector<int> comp(n + 1, -1);
            if (ok) {
                std::vector<std::vector<Vertex>> adj(n + 1);
                for (int j = 0; j < m; ++j) {
                    auto [x, y] = pairs[j][pick[j]];
                    adj[x].push_back(y);
                    adj[y].push_back(x);
                }
                int start = 0;
                for (int v = 1; v <= n; ++v)
                    if (deg[v] > 0) { start = v; break; }
                std::vector<Vertex> stack{start};
                comp[start] = 0;
                while (!stack.empty()) {
                    Vertex v = stack.back();
                    stack.pop_back();
                    for (Vertex w : adj[v])
                        if (comp[w] < 0) {
                            comp[w] = 0;
                            stack.push_back(w);
                        }
                }
                for (int v = 1; v <= n && ok; ++v)
                    if (deg[v] > 0 && comp[v] < 0) ok = false;
            }
        }
        if (ok) {
            std::vector<Flag> flags;
            for (int j = 0; j < m; ++j) {
                auto [x, y] = pairs[j][pick[j]];
                flags.push_back({x, j + 1});
                flags.push_back({y, j + 1});
            }
            auto fam = family_from_even_subgraph(h, flags);
            if (mode == Mode::Family || fam.trails.size() == 1)
                return {true, std::move(fam), ""};
        }
        // next choice vector, lexicographic odometer
        int j = m - 1;
        while (j >= 0 && pick[j] + 1 == pairs[j].size()) pick[j--] = 0;
        if (j < 0) break;
        ++pick[j];
    }
    return {false, std::nullopt, "exhausted"};
}

WitnessCheck verify_witness(const Hypergraph& h, const EulerFamily& w, Mode mode,
                            bool spanning) {
    for (size_t i = 0; i < w.trails.size(); ++i) {
        auto check = validate_trail(h, w.trails[i]);
        if (!check.ok)
            return {false, "trail " + std::to_string(i + 1) + ": " + check.violation};
    }
    std::vector<int> edgeUse(h.edge_count() + 1, 0);
    std::vector<int> anchorOwner(h.vertex_count() + 1, -1);
    for (size_t i = 0; i < w.trails.size(); ++i) {
        for (EdgeIndex e : w.trails[i].edgeIndices) {
            if (++edgeUse[e] > 1)
                return {false, "edge " + std::to_string(e) + " traversed more than once"};
        }
        for (Vertex v : w.trails[i].anchors) {
            if (anchorOwner[v] >= 0 && anchorOwner[v] != static_cast<int>(i))
                return {false, "anchor-disjointness: vertex " + std::to_string(v)};
            anchorOwner[v] = static_cast<int>(i);
        }
    }
    for (int e = 1; e <= h.edge_count(); ++e)
        if (edgeUse[e] == 0) return {false, "edge " + std::to_string(e) + " untraversed"};
    if (spanning)
        for (int v = 1; v <= h.vertex_count(); ++v)
            if (anchorOwner[v] < 0)
                return {false, "vertex " + std::to_string(v) + " not anchored"};
    if (mode == Mode::Tour && w.trails.size() != 1)
        return {false, "family size " + std::to_string(w.trails.size()) + ", expected 1"};
    return {};
}

namespace {

// Random connected sub-instance over the given global vertex ids; every id
// ends up covered. Edges are returned unsorted (caller assembles + sorts).
// Nullopt when this particular split cannot (or repeatedly fails to) connect,
// so the caller can redraw the split.
std::optional<std::vector<std::vector<Vertex>>> random_part(Rng& rng,
                                                            const std::vector<Vertex>& ids,
                                                            int edges, int sizeMin,
                                                            int sizeMax, int attempts) {
    const int nv = static_cast<int>(ids.size());
    int hiSize = std::min(sizeMax, nv);
    if (hiSize < sizeMin || edges < 1) return std::nullopt;
    if (edges * (hiSize - 1) + 1 < nv) return std::nullopt;  // can never span
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::vector<Vertex>> out;
        for (int j = 0; j < edges; ++j) {
            int sz = rng.range(sizeMin, hiSize);
            std::vector<int> perm(nv);
            for (int i = 0; i < nv; ++i) perm[i] = i;
            for (int i = 0; i < sz; ++i)
                std::swap(perm[i], perm[i + static_cast<int>(rng.below(nv - i))]);
            std::vector<Vertex> e;
            for (int i = 0; i < sz; ++i) e.push_back(ids[perm[i]]);
            std::sort(e.begin(), e.end());
            out.push_back(std::move(e));
        }
        // connectivity over the ids via shared membership
        std::vector<int> comp(nv, -1);
        std::vector<int> where(*std::max_element(ids.begin(), ids.end()) + 1, -1);
        for (int i = 0; i < nv; ++i) where[ids[i]] = i;
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (const auto& e : out) {
                if (std::find(e.begin(), e.end(), ids[i]) == e.end()) continue;
                for (Vertex v : e) {
                    int k = where[v];
                    if (comp[k] < 0) {
                        comp[k] = 0;
                        stack.push_back(k);
                    }
                }
            }
        }
        if (std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }))
            return out;
    }
    return std::nullopt;
}

std::vector<Vertex> id_run(Vertex lo, Vertex hi) {
    std::vector<Vertex> ids;
    for (Vertex v = lo; v <= hi; ++v) ids.push_back(v);
    return ids;
}

}  // namespace

namespace {

// one draw of the structured edge list; nullopt when the random split was
// infeasible and should be redrawn
std::optional<std::vector<std::vector<Vertex>>> draw_edges(Rng& rng,
                                                           const GeneratorParams& p,
                                                           int n, int m) {
    switch (p.structure) {
        case Structure::Uniform:
            return random_part(rng, id_run(1, n), m, p.sizeMin, p.sizeMax, 100);
        case Structure::Glued1Cut: {
            // cut vertex n shared by two otherwise disjoint parts
            if (n < 3 || m < 2) throw std::invalid_argument("unsatisfiable params");
            int nA = 1 + rng.range(1, n - 2);  // part A gets vertices 1..nA-1 plus n
            int mA = rng.range(1, m - 1);
            auto idsA = id_run(1, nA - 1);
            idsA.push_back(n);
            auto idsB = id_run(nA, n);
            auto partA = random_part(rng, idsA, mA, p.sizeMin, p.sizeMax, 100);
            auto partB = random_part(rng, idsB, m - mA, p.sizeMin, p.sizeMax, 100);
            if (!partA || !partB) return std::nullopt;
            partA->insert(partA->end(), partB->begin(), partB->end());
            return partA;
        }
        case Structure::Glued2Cut: {
            // cut pair {n-1, n}; extra {n-1,n} edges control the parity of
            // the edge set within the cut
            if (n < 4 || m < 3) throw std::invalid_argument("unsatisfiable params");
            int extra = static_cast<int>(rng.below(3));  // 0..2 edges equal to S
            if (m - extra < 2) extra = 0;
            int nA = 2 + rng.range(1, n - 3);  // A: 1..nA-2 plus the pair
            int mA = rng.range(1, m - extra - 1);
            auto idsA = id_run(1, nA - 2);
            idsA.push_back(n - 1);
            idsA.push_back(n);
            auto idsB = id_run(nA - 1, n - 2);
            idsB.push_back(n - 1);
            idsB.push_back(n);
            auto partA = random_part(rng, idsA, mA, p.sizeMin, p.sizeMax, 100);
            auto partB =
                random_part(rng, idsB, m - extra - mA, p.sizeMin, p.sizeMax, 100);
            if (!partA || !partB) return std::nullopt;
            partA->insert(partA->end(), partB->begin(), partB->end());
            for (int t = 0; t < extra; ++t) partA->push_back({n - 1, n});
            return partA;
        }
        case Structure::Deg2Cut: {
            // bridge vertices n-s+1..n each lie in exactly two edges, one per
            // side, forming a minimal cut of all-degree-2 vertices
            const int s = p.cutSize;
            if (s < 1 || n < s + 2 || m < 2 * s)
                throw std::invalid_argument("unsatisfiable params");
            int inner = n - s;
            int nA = rng.range(1, inner - 1);
            auto idsA = id_run(1, nA);
            auto idsB = id_run(nA + 1, inner);
            int mRest = m - 2 * s;
            int mA = mRest > 0 ? static_cast<int>(rng.below(mRest + 1)) : 0;
            std::vector<std::vector<Vertex>> edges;
            bool ok = true;
            auto bridge = [&](const std::vector<Vertex>& side, Vertex w) {
                int hiSz = std::min(p.sizeMax - 1, static_cast<int>(side.size()));
                int loSz = std::max(1, p.sizeMin - 1);
                if (hiSz < loSz) {
                    ok = false;
                    return std::vector<Vertex>{};
                }
                int sz = rng.range(loSz, hiSz);
                std::vector<Vertex> pool = side;
                std::vector<Vertex> e{w};
                for (int i = 0; i < sz; ++i) {
                    int k = static_cast<int>(rng.below(pool.size() - i));
                    e.push_back(pool[k]);
                    std::swap(pool[k], pool[pool.size() - 1 - i]);
                }
                std::sort(e.begin(), e.end());
                return e;
            };
            for (int i = 0; i < s && ok; ++i) {
                Vertex w = inner + 1 + i;
                edges.push_back(bridge(idsA, w));
                edges.push_back(bridge(idsB, w));
            }
            if (!ok) return std::nullopt;
            if (mA > 0) {
                auto partA =
                    random_part(rng, idsA, mA, p.sizeMin, std::min(p.sizeMax, nA), 100);
                if (!partA) return std::nullopt;
                edges.insert(edges.end(), partA->begin(), partA->end());
            }
            if (mRest - mA > 0) {
                auto partB = random_part(rng, idsB, mRest - mA, p.sizeMin,
                                         std::min(p.sizeMax, inner - nA), 100);
                if (!partB) return std::nullopt;
                edges.insert(edges.end(), partB->begin(), partB->end());
            }
            return edges;
        }
    }
    return std::nullopt;
}

}  // namespace

Hypergraph random_hypergraph(const GeneratorParams& p) {
    if (p.nMin < 1 || p.nMax < p.nMin || p.mMax < p.mMin || p.sizeMin < 1 ||
        p.sizeMax < p.sizeMin)
        throw std::invalid_argument("unsatisfiable params");
    Rng rng(p.seed);
    const int n = rng.range(p.nMin, p.nMax);
    const int m = rng.range(p.mMin, p.mMax);

    for (int attempt = 0; attempt < 2000; ++attempt) {
        auto edges = draw_edges(rng, p, n, m);
        if (!edges) continue;
        Hypergraph out(n, *edges);
        if (is_connected(out)) return out;
    }
    throw std::invalid_argument("unsatisfiable params");
}

}  // namespace hg

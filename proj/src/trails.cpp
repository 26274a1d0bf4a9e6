#include "hg/trails.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hg {

TrailCheck validate_trail(const Hypergraph& h, const ClosedTrail& t) {
    const int k = t.length();
    if (static_cast<int>(t.anchors.size()) != k)
        return {false, "anchor count does not match edge count"};
    if (k < 2) return {false, "closed trail needs k >= 2"};
    for (int i = 0; i < k; ++i) {
        Vertex a = t.anchors[i];
        Vertex b = t.anchors[(i + 1) % k];
        EdgeIndex e = t.edgeIndices[i];
        if (a < 1 || a > h.vertex_count()) return {false, "anchor out of range"};
        if (e < 1 || e > h.edge_count()) return {false, "edge index out of range"};
        if (a == b) return {false, "consecutive anchors equal"};
        if (!h.edge_contains(e, a) || !h.edge_contains(e, b))
            return {false, "anchors not adjacent via edge " + std::to_string(e)};
    }
    std::vector<EdgeIndex> es = t.edgeIndices;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
        return {false, "repeated edge index"};
    return {};
}

bool is_cycle(const ClosedTrail& t) {
    std::vector<Vertex> a = t.anchors;
    std::sort(a.begin(), a.end());
    return std::adjacent_find(a.begin(), a.end()) == a.end();
}

namespace {

ClosedTrail rotate_to(const ClosedTrail& t, int start) {
    const int k = t.length();
    ClosedTrail out;
    out.anchors.reserve(k);
    out.edgeIndices.reserve(k);
    for (int i = 0; i < k; ++i) {
        out.anchors.push_back(t.anchors[(start + i) % k]);
        out.edgeIndices.push_back(t.edgeIndices[(start + i) % k]);
    }
    return out;
}

ClosedTrail reversed(const ClosedTrail& t) {
    const int k = t.length();
    ClosedTrail out;
    for (int i = 0; i < k; ++i) {
        out.anchors.push_back(t.anchors[(k - i) % k]);
        out.edgeIndices.push_back(t.edgeIndices[k - 1 - i]);
    }
    return out;
}

bool lex_less(const ClosedTrail& x, const ClosedTrail& y) {
    if (x.anchors != y.anchors) return x.anchors < y.anchors;
    return x.edgeIndices < y.edgeIndices;
}

}  // namespace

ClosedTrail canonical_trail(const ClosedTrail& t) {
    const int k = t.length();
    ClosedTrail best;
    for (int dir = 0; dir < 2; ++dir) {
        ClosedTrail base = dir ? reversed(t) : t;
        for (int s = 0; s < k; ++s) {
            ClosedTrail cand = rotate_to(base, s);
            if (best.anchors.empty() || lex_less(cand, best)) best = std::move(cand);
        }
    }
    return best;
}

std::vector<Flag> trail_flags(const ClosedTrail& t) {
    const int k = t.length();
    std::vector<Flag> out;
    out.reserve(2 * k);
    for (int i = 0; i < k; ++i) {
        out.push_back({t.anchors[i], t.edgeIndices[i]});
        out.push_back({t.anchors[(i + 1) % k], t.edgeIndices[i]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Flag> family_incidence_graph(const std::vector<ClosedTrail>& trails) {
    std::vector<Flag> out;
    std::vector<EdgeIndex> seen;
    for (const auto& t : trails) {
        for (EdgeIndex e : t.edgeIndices) seen.push_back(e);
        auto f = trail_flags(t);
        out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("trails share an edge index");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Incidence-graph node numbering: v-vertex v -> v, e-vertex j -> n + j.
struct FlagGraph {
    int n;
    std::vector<std::vector<int>> adj;  // sorted; parallel `used` marks
    std::vector<std::vector<char>> used;

    FlagGraph(const Hypergraph& h, const std::vector<Flag>& flags) : n(h.vertex_count()) {
        adj.resize(n + h.edge_count() + 1);
        for (const Flag& f : flags) {
            adj[f.vertex].push_back(n + f.edge);
            adj[n + f.edge].push_back(f.vertex);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        used.resize(adj.size());
        for (size_t i = 0; i < adj.size(); ++i) used[i].assign(adj[i].size(), 0);
    }

    int take_least(int x) {
        for (size_t i = 0; i < adj[x].size(); ++i) {
            if (!used[x][i]) {
                used[x][i] = 1;
                int y = adj[x][i];
                // mark the reverse copy
                for (size_t j = 0; j < adj[y].size(); ++j) {
                    if (adj[y][j] == x && !used[y][j]) {
                        used[y][j] = 1;
                        break;
                    }
                }
                return y;
            }
        }
        return -1;
    }

    bool exhausted(int x) const {
        for (size_t i = 0; i < adj[x].size(); ++i)
            if (!used[x][i]) return false;
        return true;
    }
};

ClosedTrail trail_from_node_cycle(int n, const std::vector<int>& nodes) {
    // nodes alternate v-vertex / e-vertex around the cycle
    int start = -1;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] <= n) {
            start = static_cast<int>(i);
            break;
        }
    }
    ClosedTrail t;
    const int len = static_cast<int>(nodes.size());
    for (int i = 0; i < len; i += 2) {
        t.anchors.push_back(nodes[(start + i) % len]);
        t.edgeIndices.push_back(nodes[(start + i + 1) % len] - n);
    }
    return t;
}

}  // namespace

CycleDecomposition cycle_decomposition(const Hypergraph& h,
                                       const std::vector<ClosedTrail>& family) {
    auto flags = family_incidence_graph(family);
    FlagGraph g(h, flags);
    const int total = static_cast<int>(g.adj.size());

    CycleDecomposition out;
    std::vector<int> posInStack(total, -1);
    std::vector<int> stack;
    for (int s = 1; s < total; ++s) {
        while (!g.exhausted(s)) {
            stack.clear();
            stack.push_back(s);
            posInStack[s] = 0;
            while (!stack.empty()) {
                int x = stack.back();
                if (g.exhausted(x)) {
                    posInStack[x] = -1;
                    stack.pop_back();
                    continue;
                }
                int y = g.take_least(x);
                if (posInStack[y] >= 0) {
                    std::vector<int> cyc(stack.begin() + posInStack[y], stack.end());
                    for (size_t i = posInStack[y] + 1; i < stack.size(); ++i)
                        posInStack[stack[i]] = -1;
                    stack.resize(posInStack[y] + 1);
                    out.cycles.push_back(canonical_trail(trail_from_node_cycle(g.n, cyc)));
                } else {
                    posInStack[y] = static_cast<int>(stack.size());
                    stack.push_back(y);
                }
            }
        }
    }
    std::sort(out.cycles.begin(), out.cycles.end(), lex_less);
    return out;
}

SType s_type(const Hypergraph& h, const std::array<Vertex, 2>& s, const ClosedTrail& t) {
    if (s[0] == s[1]) throw std::invalid_argument("S must have two distinct vertices");
    SType out;
    for (Vertex a : t.anchors)
        if (a == s[0] || a == s[1]) ++out.a;
    std::vector<Vertex> sset{std::min(s[0], s[1]), std::max(s[0], s[1])};
    for (EdgeIndex e : t.edgeIndices)
        if (h.edge(e) == sset) ++out.b;

    auto rest = remove_vertices(h, {s[0], s[1]});
    auto comps = connected_components(rest.hg);
    std::vector<int> parentComp(h.vertex_count() + 1, -1);
    for (int v = 1; v <= rest.hg.vertex_count(); ++v)
        parentComp[rest.parent_vertex(v)] = comps.componentOfVertex[v];
    std::vector<char> touched(comps.count(), 0);
    for (EdgeIndex e : t.edgeIndices) {
        for (Vertex v : h.edge(e)) {
            if (parentComp[v] >= 0) {
                touched[parentComp[v]] = 1;
                break;  // an edge meets at most one component
            }
        }
    }
    for (char c : touched) out.c += c;
    return out;
}

ClosedTrail concatenate(const ClosedTrail& t1, const ClosedTrail& t2, Vertex at) {
    auto find_at = [&](const ClosedTrail& t) {
        for (int i = 0; i < t.length(); ++i)
            if (t.anchors[i] == at) return i;
        return -1;
    };
    int p1 = find_at(t1);
    int p2 = find_at(t2);
    if (p1 < 0 || p2 < 0) throw std::invalid_argument("`at` is not an anchor of both trails");
    for (EdgeIndex e : t1.edgeIndices)
        for (EdgeIndex f : t2.edgeIndices)
            if (e == f) throw std::invalid_argument("trails share an edge");
    ClosedTrail a = rotate_to(t1, p1);
    ClosedTrail b = rotate_to(t2, p2);
    a.anchors.insert(a.anchors.end(), b.anchors.begin(), b.anchors.end());
    a.edgeIndices.insert(a.edgeIndices.end(), b.edgeIndices.begin(), b.edgeIndices.end());
    return a;
}

EulerFamily family_from_even_subgraph(const Hypergraph& h, const std::vector<Flag>& flags) {
    const int n = h.vertex_count();
    std::vector<int> vdeg(n + 1, 0), edeg(h.edge_count() + 1, 0);
    for (const Flag& f : flags) {
        ++vdeg[f.vertex];
        ++edeg[f.edge];
    }
    for (int j = 1; j <= h.edge_count(); ++j)
        if (edeg[j] != 0 && edeg[j] != 2)
            throw std::invalid_argument("e-vertex degree must be 0 or 2");
    for (int v = 1; v <= n; ++v)
        if (vdeg[v] % 2)
            throw std::invalid_argument("v-vertex degree must be even");

    FlagGraph g(h, flags);
    EulerFamily fam;
    std::vector<char> visited(g.adj.size(), 0);
    for (int s = 1; s <= n; ++s) {
        if (vdeg[s] == 0 || visited[s]) continue;
        // Hierholzer, least-neighbour-first
        std::vector<int> stack{s};
        std::vector<int> circuit;
        while (!stack.empty()) {
            int x = stack.back();
            visited[x] = 1;
            if (g.exhausted(x)) {
                circuit.push_back(x);
                stack.pop_back();
            } else {
                stack.push_back(g.take_least(x));
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        circuit.pop_back();  // closing node equals the start
        ClosedTrail t;
        for (size_t i = 0; i < circuit.size(); i += 2) {
            t.anchors.push_back(circuit[i]);
            t.edgeIndices.push_back(circuit[i + 1] - n);
        }
        fam.trails.push_back(canonical_trail(t));
    }
    std::sort(fam.trails.begin(), fam.trails.end(), lex_less);
    fam.spanning = true;
    for (int v = 1; v <= n; ++v)
        if (vdeg[v] == 0) fam.spanning = false;
    return fam;
}

std::string serialize_witness(const EulerFamily& fam) {
    std::vector<ClosedTrail> ts;
    ts.reserve(fam.trails.size());
    for (const auto& t : fam.trails) ts.push_back(canonical_trail(t));
    std::sort(ts.begin(), ts.end(), lex_less);
    std::ostringstream os;
    for (const auto& t : ts) {
        for (int i = 0; i < t.length(); ++i) {
            if (i) os << ' ';
            os << t.anchors[i] << " e" << t.edgeIndices[i];
        }
        os << '\n';
    }
    return os.str();
}

EulerFamily parse_witness(const std::string& text) {
    EulerFamily fam;
    std::istringstream is(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(is, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        ClosedTrail t;
        std::string tok;
        bool expectVertex = true;
        while (ls >> tok) {
            try {
                if (expectVertex) {
                    t.anchors.push_back(std::stoi(tok));
                } else {
                    if (tok.size() < 2 || tok[0] != 'e') throw std::invalid_argument(tok);
                    t.edgeIndices.push_back(std::stoi(tok.substr(1)));
                }
            } catch (const std::exception&) {
                throw ParseError("malformed witness token '" + tok + "'", lineNo, 1);
            }
            expectVertex = !expectVertex;
        }
        if (t.anchors.size() != t.edgeIndices.size() || t.anchors.empty())
            throw ParseError("witness trail must alternate v0 e1 v1 ... ek", lineNo, 1);
        fam.trails.push_back(std::move(t));
    }
    return fam;
}

}  // namespace hg

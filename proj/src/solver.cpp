#include "hg/solver.hpp"

#include <algorithm>
#include <numeric>

namespace hg {

NecessaryCheck check_necessary_conditions(const Hypergraph& h, int subsetBound) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    for (int j = 1; j <= m; ++j)
        if (static_cast<int>(h.edge(j).size()) < 2) return {false, "i", false};
    for (int v = 1; v <= n; ++v)
        if (h.degree(v) < 2) return {false, "ii", false};
    if (n < 2 || n > m) return {false, "iii", false};

    auto violates = [&](const std::vector<int>& subset) {
        // subset holds 1-based edge indices, |subset| = k >= 2
        const int k = static_cast<int>(subset.size());
        std::vector<Vertex> inter = h.edge(subset[0]);
        for (int t = 1; t < k && !inter.empty(); ++t) {
            const auto& e = h.edge(subset[t]);
            std::vector<Vertex> next;
            std::set_intersection(inter.begin(), inter.end(), e.begin(), e.end(),
                                  std::back_inserter(next));
            inter = std::move(next);
        }
        int count = 0;
        for (Vertex v : inter)
            if (h.degree(v) == k) ++count;
        return count > k;
    };

    if (m <= subsetBound) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> subset;
            for (int j = 0; j < m; ++j)
                if (mask >> j & 1) subset.push_back(j + 1);
            if (violates(subset)) return {false, "iv", false};
        }
        return {};
    }
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
            if (violates({a, b})) return {false, "iv", true};
            for (int c = b + 1; c <= m; ++c)
                if (violates({a, b, c})) return {false, "iv", true};
        }
    }
    return {true, "", true};
}

namespace {

Decision decide_family_impl(const Hypergraph& h, bool spanning) {
    const int n = h.vertex_count();
    const int m = h.edge_count();

    for (int j = 1; j <= m; ++j) {
        if (h.edge(j).size() < 2)
            return {false, std::nullopt, "necessary condition (i)"};
    }
    if (spanning) {
        for (int v = 1; v <= n; ++v)
            if (h.degree(v) < 2) return {false, std::nullopt, "necessary condition (ii)"};
        if (n < 2 || n > m) return {false, std::nullopt, "necessary condition (iii)"};
    }
    if (m == 0) {
        // Nothing to traverse; the empty family works unless spanning.
        return {true, EulerFamily{{}, false}, ""};
    }

    DegreeConstraintProblem p;
    p.graph.n = n + m;
    for (int j = 1; j <= m; ++j)
        for (Vertex v : h.edge(j)) p.graph.add_edge(v - 1, n + j - 1);
    p.bounds.resize(n + m);
    for (int v = 1; v <= n; ++v) {
        int hi = 2 * (h.degree(v) / 2);
        p.bounds[v - 1] = {spanning ? 2 : 0, std::max(hi, spanning ? 2 : 0)};
    }
    for (int j = 1; j <= m; ++j) p.bounds[n + j - 1] = {2, 2};

    auto selected = parity_factor_subgraph(p);
    if (!selected) return {false, std::nullopt, "no admissible even subgraph"};

    std::vector<Flag> flags;
    for (int k : *selected) {
        auto [a, b] = p.graph.edges[k];
        flags.push_back({a + 1, b - n + 1});
    }
    auto fam = family_from_even_subgraph(h, flags);
    return {true, std::move(fam), ""};
}

struct RollbackDsu {
    std::vector<int> parent, size, merged;

    explicit RollbackDsu(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            merged.push_back(-1);
            return;
        }
        if (size[a] < size[b] || (size[a] == size[b] && a > b)) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        merged.push_back(b);
    }
    void undo() {
        int b = merged.back();
        merged.pop_back();
        if (b < 0) return;
        size[parent[b]] -= size[b];
        parent[b] = b;
    }
};

// Exact search over per-edge anchor pairs; edges in ascending size order,
// pairs in lexicographic order, first solution returned.
class TourSearch {
public:
    TourSearch(const Hypergraph& h, bool spanning)
        : h_(h), spanning_(spanning), dsu_(h.vertex_count() + 1),
          deg_(h.vertex_count() + 1, 0), remaining_(h.vertex_count() + 1, 0),
          choice_(h.edge_count() + 1, {0, 0}) {
        order_.resize(h.edge_count());
        std::iota(order_.begin(), order_.end(), 1);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return h.edge(a).size() < h.edge(b).size();
        });
        for (int v = 1; v <= h.vertex_count(); ++v)
            remaining_[v] = h.degree(v);
    }

    bool run() { return search(0); }

    std::vector<Flag> solution_flags() const {
        std::vector<Flag> flags;
        for (int j = 1; j <= h_.edge_count(); ++j) {
            flags.push_back({choice_[j].first, j});
            flags.push_back({choice_[j].second, j});
        }
        return flags;
    }

private:
    bool search(int depth) {
        if (depth == h_.edge_count()) return accept();
        const int j = order_[depth];
        const auto& verts = h_.edge(j);
        for (Vertex v : verts) --remaining_[v];
        for (size_t xi = 0; xi < verts.size(); ++xi) {
            for (size_t yi = xi + 1; yi < verts.size(); ++yi) {
                Vertex x = verts[xi], y = verts[yi];
                ++deg_[x];
                ++deg_[y];
                dsu_.unite(x, y);
                if (viable(j, x) && search(depth + 1)) {
                    choice_[j] = {x, y};
                    return true;
                }
                dsu_.undo();
                --deg_[x];
                --deg_[y];
            }
        }
        for (Vertex v : verts) ++remaining_[v];
        return false;
    }

    bool viable(int j, Vertex x) {
        for (Vertex v : h_.edge(j)) {
            if (remaining_[v] == 0) {
                if (deg_[v] % 2) return false;
                if (spanning_ && deg_[v] == 0) return false;
            }
        }
        // a finished component cannot merge with anything else
        int r = dsu_.find(x);
        bool closed = true;
        for (int v = 1; v <= h_.vertex_count() && closed; ++v)
            if (dsu_.find(v) == r && remaining_[v] > 0) closed = false;
        if (closed) {
            for (int v = 1; v <= h_.vertex_count(); ++v)
                if ((deg_[v] > 0 || remaining_[v] > 0) && dsu_.find(v) != r) return false;
        }
        return true;
    }

    bool accept() {
        int root = -1;
        for (int v = 1; v <= h_.vertex_count(); ++v) {
            if (spanning_ && deg_[v] == 0) return false;
            if (deg_[v] > 0) {
                int r = dsu_.find(v);
                if (root == -1) root = r;
                if (r != root) return false;
            }
        }
        for (int j = 1; j <= h_.edge_count(); ++j) choice_[j] = {0, 0};
        return true;
    }

    const Hypergraph& h_;
    bool spanning_;
    RollbackDsu dsu_;
    std::vector<int> deg_, remaining_, order_;
    std::vector<std::pair<Vertex, Vertex>> choice_;
};

Decision decide_tour_impl(const Hypergraph& h, bool spanning) {
    Decision famDec = decide_family_impl(h, spanning);
    if (!famDec.yes)
        return {false, std::nullopt,
                famDec.reason.empty() ? "no spanning Euler family" : famDec.reason};
    if (h.edge_count() < 2)
        return {false, std::nullopt, "closed trail needs at least 2 distinct edges"};

    TourSearch search(h, spanning);
    if (!search.run()) return {false, std::nullopt, "search exhausted"};
    auto fam = family_from_even_subgraph(h, search.solution_flags());
    if (fam.trails.size() != 1) throw std::logic_error("tour search produced a non-tour");
    return {true, std::move(fam), ""};
}

}  // namespace

Decision decide_spanning_euler_family(const Hypergraph& h) {
    if (!is_connected(h)) throw std::invalid_argument("disconnected input");
    return decide_family_impl(h, true);
}

Decision decide_euler_family(const Hypergraph& h) { return decide_family_impl(h, false); }

Decision decide_spanning_euler_tour(const Hypergraph& h) {
    if (!is_connected(h)) throw std::invalid_argument("disconnected input");
    return decide_tour_impl(h, true);
}

Decision decide_euler_tour(const Hypergraph& h) { return decide_tour_impl(h, false); }

Decision decide_direct(const Hypergraph& h, Mode mode, bool spanning) {
    if (mode == Mode::Family)
        return spanning ? decide_spanning_euler_family(h) : decide_euler_family(h);
    return spanning ? decide_spanning_euler_tour(h) : decide_euler_tour(h);
}

}  // namespace hg

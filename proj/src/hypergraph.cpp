#include "hg/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace hg {

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
        if (e.empty()) throw std::invalid_argument("empty edge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.front() < 1 || e.back() > n_)
            throw std::invalid_argument("vertex id out of range 1..n");
    }
    incident_.assign(n_, {});
    for (int j = 0; j < static_cast<int>(edges_.size()); ++j)
        for (Vertex v : edges_[j]) incident_[v - 1].push_back(j + 1);
}

const std::vector<Vertex>& Hypergraph::edge(EdgeIndex j) const {
    if (j < 1 || j > edge_count()) throw std::out_of_range("edge index");
    return edges_[j - 1];
}

int Hypergraph::degree(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex id");
    return static_cast<int>(incident_[v - 1].size());
}

const std::vector<EdgeIndex>& Hypergraph::incident_edges(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex id");
    return incident_[v - 1];
}

std::vector<Vertex> Hypergraph::neighbourhood(Vertex v) const {
    std::vector<Vertex> out;
    for (EdgeIndex j : incident_edges(v))
        for (Vertex u : edges_[j - 1])
            if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Hypergraph::edge_contains(EdgeIndex j, Vertex v) const {
    const auto& e = edge(j);
    return std::binary_search(e.begin(), e.end(), v);
}

std::vector<Flag> Hypergraph::flags() const {
    std::vector<Flag> out;
    for (int j = 1; j <= edge_count(); ++j)
        for (Vertex v : edges_[j - 1]) out.push_back({v, j});
    return out;
}

int Hypergraph::flag_count() const {
    int c = 0;
    for (const auto& e : edges_) c += static_cast<int>(e.size());
    return c;
}

std::string Hypergraph::serialize() const {
    std::ostringstream os;
    os << "hg " << n_ << ' ' << edges_.size() << '\n';
    for (const auto& e : edges_) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ' ';
            os << e[i];
        }
        os << '\n';
    }
    return os.str();
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
    return {h.vertex_count(), h.edge_count(), h.flags()};
}

Subhypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<Vertex>& keep) {
    if (keep.empty()) throw std::invalid_argument("empty keep set");
    std::vector<Vertex> k = keep;
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    if (k.front() < 1 || k.back() > h.vertex_count())
        throw std::invalid_argument("keep vertex out of range");

    std::vector<int> newId(h.vertex_count() + 1, 0);
    for (int i = 0; i < static_cast<int>(k.size()); ++i) newId[k[i]] = i + 1;

    Subhypergraph out;
    out.vertexToParent = k;
    std::vector<std::vector<Vertex>> edges;
    for (int j = 1; j <= h.edge_count(); ++j) {
        std::vector<Vertex> e;
        for (Vertex v : h.edge(j))
            if (newId[v]) e.push_back(newId[v]);
        if (!e.empty()) {
            edges.push_back(std::move(e));
            out.edgeToParent.push_back(j);
        }
    }
    out.hg = Hypergraph(static_cast<int>(k.size()), std::move(edges));
    return out;
}

Subhypergraph remove_vertices(const Hypergraph& h, const std::vector<Vertex>& drop) {
    std::vector<char> gone(h.vertex_count() + 1, 0);
    for (Vertex v : drop) {
        if (v < 1 || v > h.vertex_count()) throw std::invalid_argument("drop vertex out of range");
        gone[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= h.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subhypergraph(h, keep);
}

Subhypergraph remove_edges(const Hypergraph& h, const std::vector<EdgeIndex>& drop) {
    std::vector<char> gone(h.edge_count() + 1, 0);
    for (EdgeIndex j : drop) {
        if (j < 1 || j > h.edge_count()) throw std::invalid_argument("invalid edge index");
        gone[j] = 1;
    }
    Subhypergraph out;
    out.vertexToParent.resize(h.vertex_count());
    for (int v = 1; v <= h.vertex_count(); ++v) out.vertexToParent[v - 1] = v;
    std::vector<std::vector<Vertex>> edges;
    for (int j = 1; j <= h.edge_count(); ++j) {
        if (gone[j]) continue;
        edges.push_back(h.edge(j));
        out.edgeToParent.push_back(j);
    }
    out.hg = Hypergraph(h.vertex_count(), std::move(edges));
    return out;
}

Components connected_components(const Hypergraph& h) {
    const int n = h.vertex_count();
    const int m = h.edge_count();
    // One traversal of the incidence graph: nodes 0..n-1 are v-vertices,
    // n..n+m-1 are e-vertices.
    std::vector<int> comp(n + m, -1);
    int classes = 0;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        comp[v] = classes;
        stack.push_back(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x < n) {
                for (EdgeIndex j : h.incident_edges(x + 1)) {
                    if (comp[n + j - 1] == -1) {
                        comp[n + j - 1] = classes;
                        stack.push_back(n + j - 1);
                    }
                }
            } else {
                for (Vertex u : h.edge(x - n + 1)) {
                    if (comp[u - 1] == -1) {
                        comp[u - 1] = classes;
                        stack.push_back(u - 1);
                    }
                }
            }
        }
        ++classes;
    }
    Components out;
    out.componentOfVertex.assign(n + 1, -1);
    out.vertices.resize(classes);
    out.edgeIndices.resize(classes);
    for (int v = 1; v <= n; ++v) {
        out.componentOfVertex[v] = comp[v - 1];
        out.vertices[comp[v - 1]].push_back(v);
    }
    for (int j = 1; j <= m; ++j) out.edgeIndices[comp[n + j - 1]].push_back(j);
    return out;
}

bool is_connected(const Hypergraph& h) {
    return connected_components(h).count() <= 1;
}

namespace {

struct Tokenizer {
    std::istream& in;
    int lineNo = 0;
    std::string line;

    // Returns the next content line, skipping comments and (between edge
    // lines) nothing else; blank lines are content (an empty edge line).
    bool next_line() {
        while (std::getline(in, line)) {
            ++lineNo;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        return false;
    }
};

}  // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    Tokenizer tk{in};
    if (!tk.next_line()) throw ParseError("missing header line", 1, 1);
    std::istringstream hs(tk.line);
    std::string magic;
    long n = -1, m = -1;
    if (!(hs >> magic >> n >> m) || magic != "hg" || n < 0 || m < 0) {
        throw ParseError("expected header 'hg <n> <m>'", tk.lineNo, 1);
    }
    std::string trailing;
    if (hs >> trailing) throw ParseError("trailing tokens after header", tk.lineNo, 1);

    std::vector<std::vector<Vertex>> edges;
    for (long j = 0; j < m; ++j) {
        if (!tk.next_line())
            throw ParseError("missing edge line " + std::to_string(j + 1), tk.lineNo + 1, 1);
        std::istringstream es(tk.line);
        std::vector<Vertex> e;
        long v;
        while (es >> v) {
            if (v < 1 || v > n)
                throw ParseError("vertex id " + std::to_string(v) + " out of range 1.." +
                                     std::to_string(n),
                                 tk.lineNo, 1);
            e.push_back(static_cast<Vertex>(v));
        }
        if (!es.eof()) throw ParseError("malformed vertex id", tk.lineNo, 1);
        if (e.empty()) throw ParseError("empty edge", tk.lineNo, 1);
        edges.push_back(std::move(e));
    }
    while (tk.next_line()) {
        if (tk.line.find_first_not_of(" \t") != std::string::npos)
            throw ParseError("trailing content after last edge", tk.lineNo, 1);
    }
    return Hypergraph(static_cast<int>(n), std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream is(text);
    return parse_hypergraph(is);
}

}  // namespace hg

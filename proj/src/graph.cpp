#include "mbd/graph.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mbd {

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
}

Edge::Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
    if (a < 0 || b < 0) throw std::invalid_argument("negative vertex index");
}

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        check_vertex(e.v);
        if (adjacent(e.u, e.v)) throw std::invalid_argument("duplicate edge");
        toggle(e.u, e.v);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::toggle(int u, int v) {
    adj_[u] ^= std::uint64_t{1} << v;
    adj_[v] ^= std::uint64_t{1} << u;
}

int Graph::size() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u] & ~(VertexSet::first(u + 1).bits())))
            out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

MarkedGraph::MarkedGraph(Graph g, VertexSet x) : graph(std::move(g)), predominated(x) {
    if (!x.subset_of(graph.vertices()))
        throw std::invalid_argument("predominated set not contained in V(G)");
}

VertexSet closed_neighbourhood(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex index out of range");
    return g.closed_neighbourhood(v);
}

bool is_dominating_set(const MarkedGraph& g, VertexSet s) {
    if (!s.subset_of(g.graph.vertices()))
        throw std::invalid_argument("set not contained in V(G)");
    VertexSet covered = g.predominated;
    for (int v : s) covered |= g.graph.closed_neighbourhood(v);
    return g.graph.vertices().subset_of(covered);
}

bool is_dominating_set(const Graph& g, VertexSet s) {
    return is_dominating_set(MarkedGraph(g), s);
}

int domination_number(const Graph& g) {
    const int n = g.order();
    const std::uint64_t limit = VertexSet::first(n).bits();
    for (int k = 1; k <= n; ++k) {
        // Gosper's hack: all n-bit words with exactly k bits set, ascending.
        std::uint64_t s = VertexSet::first(k).bits();
        while (s <= limit) {
            if (is_dominating_set(g, VertexSet(s))) return k;
            std::uint64_t c = s & -s;
            std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
            if (r == 0) break;  // overflow past the top subset
        }
    }
    return n;  // unreachable: V(G) always dominates
}

std::vector<VertexSet> gamma_sets_excluding(const Graph& g, int x) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("vertex index out of range");
    const int k = domination_number(g);
    const std::uint64_t limit = VertexSet::first(g.order()).bits();
    const std::uint64_t xbit = std::uint64_t{1} << x;
    std::vector<VertexSet> out;
    std::uint64_t s = VertexSet::first(k).bits();
    while (s <= limit) {
        if ((s & xbit) == 0 && is_dominating_set(g, VertexSet(s))) out.emplace_back(s);
        std::uint64_t c = s & -s;
        std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if (r == 0) break;
    }
    return out;
}

Graph add_edge(const Graph& g, Edge e) {
    g.check_vertex(e.v);
    if (g.adjacent(e.u, e.v)) throw std::invalid_argument("edge already present");
    Graph out = g;
    out.toggle(e.u, e.v);
    return out;
}

Graph remove_edge(const Graph& g, Edge e) {
    g.check_vertex(e.v);
    if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("edge not present");
    Graph out = g;
    out.toggle(e.u, e.v);
    return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
    VertexSet seen;
    for (int p : perm) {
        if (p < 0 || p >= n || seen.contains(p)) throw std::invalid_argument("not a permutation");
        seen = seen.with(p);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    return Graph(n, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet todo = g.vertices();
    while (!todo.empty()) {
        VertexSet comp = VertexSet::single(todo.lowest());
        for (;;) {
            VertexSet grown = comp;
            for (int v : comp) grown |= g.neighbourhood(v);
            if (grown == comp) break;
            comp = grown;
        }
        comps.push_back(comp);
        todo = todo - comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

}  // namespace mbd

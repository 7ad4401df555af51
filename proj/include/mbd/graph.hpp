#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace mbd {

// Every vertex set is one machine word: graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

/// Set of vertex indices of a host graph, backed by a single 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet first(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr std::uint64_t bits() const { return bits_; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    /// Iterates set bits in ascending order.
    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        friend constexpr bool operator==(iterator, iterator) = default;
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Undirected edge, stored with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b);  // normalizes order, rejects loops and negatives

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on at most 64 vertices, adjacency as one bit
/// vector per vertex. Immutable after construction; add_edge/remove_edge
/// return modified copies.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    int size() const;  // number of edges

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj_[v]); }

    VertexSet neighbourhood(int v) const { return VertexSet(adj_[v]); }
    VertexSet closed_neighbourhood(int v) const {
        return VertexSet(adj_[v] | (std::uint64_t{1} << v));
    }

    VertexSet vertices() const { return VertexSet::first(n_); }

    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;
    void toggle(int u, int v);

    int n_;
    std::vector<std::uint64_t> adj_;

    friend Graph add_edge(const Graph&, Edge);
    friend Graph remove_edge(const Graph&, Edge);
};

/// G|X: graph with a set X of vertices that count as already dominated.
struct MarkedGraph {
    Graph graph;
    VertexSet predominated;

    MarkedGraph(Graph g, VertexSet x = {});  // NOLINT: implicit from Graph intended
};

VertexSet closed_neighbourhood(const Graph& g, int v);

/// True iff every vertex outside g.predominated is in s or has a neighbour
/// in s. This is the win test for Dominator's claim set on G|X.
bool is_dominating_set(const MarkedGraph& g, VertexSet s);
bool is_dominating_set(const Graph& g, VertexSet s);

/// Exact gamma(G) by subset search in ascending cardinality.
int domination_number(const Graph& g);

/// All gamma-sets of g that avoid x, in ascending bit-pattern order.
std::vector<VertexSet> gamma_sets_excluding(const Graph& g, int x);

Graph add_edge(const Graph& g, Edge e);     // rejects existing edges
Graph remove_edge(const Graph& g, Edge e);  // rejects missing edges

/// New graph with vertex i of g renamed to perm[i]; perm must be a bijection.
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace mbd

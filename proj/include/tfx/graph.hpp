#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfx/bitset.hpp"

namespace tfx {

/// Simple undirected graph on vertices 0..n-1 with adjacency kept as bit
/// rows (64-bit words). Symmetric, loop-free by construction. Treat as a
/// value: build once, then query from any number of threads.
class Graph {
public:
    static constexpr int kMaxVertices = 1 << 16;

    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const;

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degrees() const;
    int min_degree() const; // 0 for the empty graph

    /// Number of neighbors of v inside `within`.
    int deg_into(int v, const VertexSet& within) const;

    VertexSet neighbors(int v) const;
    VertexSet vertex_set() const { return VertexSet::full(n_); }

    const uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int row_words() const { return words_; }

    /// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in increasing
    /// original order.
    Graph induced_subgraph(const VertexSet& keep) const;

    /// Copy with vertex v renamed to new_index[v]; new_index must be a
    /// permutation of 0..n-1.
    Graph relabeled(const std::vector<int>& new_index) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("Graph: vertex out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_; // n_ rows of words_ words each
};

/// graph6 codec, bit-exact per the published format. Short form for
/// n <= 62, the 4-byte '~'-led form for 63 <= n <= 258047. An optional
/// leading ">>graph6<<" header is tolerated by the decoder.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// One graph per LF-terminated line; a ">>graph6<<" header line is skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Base graph plus one part size per base vertex.
struct BlowupSpec {
    Graph base;
    std::vector<int> sizes;
};

/// Replace base vertex i by an independent set of sizes[i] vertices; two
/// vertices are adjacent iff their base vertices are. Parts are laid out as
/// consecutive blocks in base-vertex order.
Graph blow_up(const BlowupSpec& spec);

Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace tfx

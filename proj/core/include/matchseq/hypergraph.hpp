#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matchseq {

/// Vertex of a partite vertex set: (part, index within part).
struct Vertex {
    int part = 0;
    int index = 0;
    friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

using EdgeId = int;

/// Labelled edge. Parallel edges are distinct Edge objects with equal
/// vertex sets and different ids.
struct Edge {
    EdgeId id = 0;
    std::vector<Vertex> vertices;  // sorted, duplicate-free, nonempty
};

/// Finite multi-hypergraph over a partite vertex set. Edge ids always
/// form the contiguous range 0..edge_count()-1.
class Hypergraph {
public:
    Hypergraph(std::vector<int> parts, std::vector<Edge> edges);

    int part_count() const { return static_cast<int>(parts_.size()); }
    int part_size(int p) const { return parts_.at(static_cast<std::size_t>(p)); }
    const std::vector<int>& parts() const { return parts_; }

    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_count() const { return vertex_total_; }
    /// Dense key in [0, vertex_count()): offset of the part plus the index.
    int vertex_key(Vertex v) const;
    Vertex vertex_of_key(int key) const;
    std::span<const int> edge_keys(EdgeId id) const;

    int degree(Vertex v) const { return degree_[static_cast<std::size_t>(vertex_key(v))]; }
    int degree_by_key(int key) const { return degree_[static_cast<std::size_t>(key)]; }
    int max_degree() const { return max_degree_; }

private:
    std::vector<int> parts_;
    std::vector<int> part_offset_;
    int vertex_total_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> edge_keys_;  // edge id -> sorted dense vertex keys
    std::vector<int> degree_;
    int max_degree_ = 0;
};

/// Parameters (lambda; n1 <= n2 <= ... <= nk) of a complete multipartite
/// multi-k-graph: every transversal of the parts is an edge, lambda times.
struct PartiteSpec {
    long long lambda = 1;
    std::vector<int> sizes;  // nondecreasing, each >= 1

    static PartiteSpec create(long long lambda, std::vector<int> sizes);

    int k() const { return static_cast<int>(sizes.size()); }
    int n1() const { return sizes.front(); }
    /// Multiplicity of the smallest part size.
    int u() const;
    /// Product of all sizes except the first.
    long long N() const;
    /// Product of the sizes strictly larger than n1.
    long long N_prime() const;
    /// n1^(u-1).
    long long head_pow() const;
    /// lambda * N * n1 = number of edges.
    long long edge_total() const;

    std::string to_string() const;
};

/// Builds lambda * K_{n1,...,nk}. Edge ids follow lexicographic order of
/// (vertex tuple, copy index): the edge with tuple (x1,...,xk) and copy
/// c gets id tuple_rank * lambda + c.
Hypergraph build_complete_multipartite(const PartiteSpec& spec);

/// Rank of a transversal tuple in the id scheme above (lambda = 1 rank).
long long tuple_rank(const PartiteSpec& spec, std::span<const int> tuple);

struct MultiplyResult {
    Hypergraph graph;
    std::vector<EdgeId> original_of;  // new edge id -> source edge id
};

/// lambda parallel copies of every edge; copy c of edge e gets id
/// e.id * lambda + c.
MultiplyResult multiply(const Hypergraph& h, int lambda);

}  // namespace matchseq

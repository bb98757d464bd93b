#include "matchseq/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace matchseq {

Hypergraph::Hypergraph(std::vector<int> parts, std::vector<Edge> edges)
    : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("hypergraph needs at least one part");
    part_offset_.resize(parts_.size() + 1, 0);
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        if (parts_[p] < 0) throw std::invalid_argument("negative part size");
        part_offset_[p + 1] = part_offset_[p] + parts_[p];
    }
    vertex_total_ = part_offset_.back();

    edges_.resize(edges.size());
    std::vector<bool> seen(edges.size(), false);
    for (auto& e : edges) {
        if (e.id < 0 || e.id >= static_cast<EdgeId>(edges.size()) || seen[static_cast<std::size_t>(e.id)])
            throw std::invalid_argument("edge ids must be a permutation of 0..count-1");
        seen[static_cast<std::size_t>(e.id)] = true;
        if (e.vertices.empty()) throw std::invalid_argument("empty edge");
        std::sort(e.vertices.begin(), e.vertices.end());
        e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
        edges_[static_cast<std::size_t>(e.id)] = std::move(e);
    }

    degree_.assign(static_cast<std::size_t>(vertex_total_), 0);
    edge_keys_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        for (Vertex v : edges_[i].vertices) {
            if (v.part < 0 || v.part >= part_count() || v.index < 0 || v.index >= parts_[static_cast<std::size_t>(v.part)])
                throw std::invalid_argument("edge vertex outside declared parts");
            int key = vertex_key(v);
            edge_keys_[i].push_back(key);
            ++degree_[static_cast<std::size_t>(key)];
        }
    }
    max_degree_ = degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

int Hypergraph::vertex_key(Vertex v) const {
    return part_offset_[static_cast<std::size_t>(v.part)] + v.index;
}

Vertex Hypergraph::vertex_of_key(int key) const {
    for (int p = 0; p < part_count(); ++p)
        if (key < part_offset_[static_cast<std::size_t>(p) + 1])
            return Vertex{p, key - part_offset_[static_cast<std::size_t>(p)]};
    throw std::out_of_range("vertex key");
}

std::span<const int> Hypergraph::edge_keys(EdgeId id) const {
    return edge_keys_.at(static_cast<std::size_t>(id));
}

PartiteSpec PartiteSpec::create(long long lambda, std::vector<int> sizes) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    if (sizes.empty()) throw std::invalid_argument("need at least one part size");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw std::invalid_argument("part sizes must be >= 1");
        if (i > 0 && sizes[i] < sizes[i - 1]) throw std::invalid_argument("part sizes must be nondecreasing");
    }
    PartiteSpec s;
    s.lambda = lambda;
    s.sizes = std::move(sizes);
    long long guard = s.lambda;
    for (int n : s.sizes) {
        guard *= n;
        if (guard > (1LL << 40)) throw std::invalid_argument("spec too large");
    }
    return s;
}

int PartiteSpec::u() const {
    int m = 1;
    while (m < k() && sizes[static_cast<std::size_t>(m)] == sizes[0]) ++m;
    return m;
}

long long PartiteSpec::N() const {
    long long p = 1;
    for (int i = 1; i < k(); ++i) p *= sizes[static_cast<std::size_t>(i)];
    return p;
}

long long PartiteSpec::N_prime() const {
    long long p = 1;
    for (int i = u(); i < k(); ++i) p *= sizes[static_cast<std::size_t>(i)];
    return p;
}

long long PartiteSpec::head_pow() const {
    long long p = 1;
    for (int i = 1; i < u(); ++i) p *= n1();
    return p;
}

long long PartiteSpec::edge_total() const { return lambda * N() * n1(); }

std::string PartiteSpec::to_string() const {
    std::ostringstream os;
    os << "(" << lambda << "; ";
    for (int i = 0; i < k(); ++i) os << (i ? "," : "") << sizes[static_cast<std::size_t>(i)];
    os << ")";
    return os.str();
}

long long tuple_rank(const PartiteSpec& spec, std::span<const int> tuple) {
    if (static_cast<int>(tuple.size()) != spec.k()) throw std::invalid_argument("tuple arity mismatch");
    long long rank = 0;
    for (int i = 0; i < spec.k(); ++i) {
        int n = spec.sizes[static_cast<std::size_t>(i)];
        int x = tuple[static_cast<std::size_t>(i)];
        if (x < 0 || x >= n) throw std::invalid_argument("tuple coordinate out of range");
        rank = rank * n + x;
    }
    return rank;
}

Hypergraph build_complete_multipartite(const PartiteSpec& spec) {
    long long total = spec.edge_total();
    if (total > (1LL << 26)) throw std::invalid_argument("edge count too large to materialize");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(total));

    std::vector<int> tuple(static_cast<std::size_t>(spec.k()), 0);
    long long rank = 0;
    for (;;) {
        for (long long c = 0; c < spec.lambda; ++c) {
            Edge e;
            e.id = static_cast<EdgeId>(rank * spec.lambda + c);
            e.vertices.reserve(tuple.size());
            for (int i = 0; i < spec.k(); ++i) e.vertices.push_back(Vertex{i, tuple[static_cast<std::size_t>(i)]});
            edges.push_back(std::move(e));
        }
        ++rank;
        int i = spec.k() - 1;
        while (i >= 0 && ++tuple[static_cast<std::size_t>(i)] == spec.sizes[static_cast<std::size_t>(i)]) {
            tuple[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return Hypergraph(spec.sizes, std::move(edges));
}

MultiplyResult multiply(const Hypergraph& h, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(h.edge_count()) * static_cast<std::size_t>(lambda));
    std::vector<EdgeId> origin(static_cast<std::size_t>(h.edge_count()) * static_cast<std::size_t>(lambda));
    for (const Edge& e : h.edges()) {
        for (int c = 0; c < lambda; ++c) {
            EdgeId id = e.id * lambda + c;
            edges.push_back(Edge{id, e.vertices});
            origin[static_cast<std::size_t>(id)] = e.id;
        }
    }
    return MultiplyResult{Hypergraph(h.parts(), std::move(edges)), std::move(origin)};
}

}  // namespace matchseq

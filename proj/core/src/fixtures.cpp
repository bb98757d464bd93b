#include "matchseq/fixtures.hpp"

#include <stdexcept>

namespace matchseq {

namespace {

Hypergraph single_part_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i)
        edges.push_back(Edge{static_cast<EdgeId>(i), {Vertex{0, pairs[i].first}, Vertex{0, pairs[i].second}}});
    return Hypergraph({n}, std::move(edges));
}

}  // namespace

Hypergraph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return single_part_graph(n, pairs);
}

Hypergraph complete_multipartite_graph(int parts, int size) {
    if (parts < 1 || size < 1) throw std::invalid_argument("need parts, size >= 1");
    std::vector<Edge> edges;
    EdgeId id = 0;
    for (int p = 0; p < parts; ++p)
        for (int i = 0; i < size; ++i)
            for (int q = p + 1; q < parts; ++q)
                for (int j = 0; j < size; ++j)
                    edges.push_back(Edge{id++, {Vertex{p, i}, Vertex{q, j}}});
    return Hypergraph(std::vector<int>(static_cast<std::size_t>(parts), size), std::move(edges));
}

Hypergraph fixture_g() {
    // 0 = v, 1 = a, 2 = b, 3 = c, 4 = d, 5 = f
    return single_part_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 3}, {4, 5}});
}

Hypergraph fixture_g_prime() {
    return single_part_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {4, 3}});
}

Hypergraph fixture_h() {
    // K_5 on 0..4 plus pendants 5..7 hanging off the hub 4.
    // Edge ids are the hand labelling: consecutive ids never share a vertex.
    return single_part_graph(8, {
        {4, 7},  // 0
        {0, 2},  // 1
        {4, 6},  // 2
        {1, 3},  // 3
        {0, 4},  // 4
        {1, 2},  // 5
        {3, 4},  // 6
        {0, 1},  // 7
        {2, 4},  // 8
        {0, 3},  // 9
        {1, 4},  // 10
        {2, 3},  // 11
        {4, 5},  // 12
    });
}

Ordering fixture_h_ordering() { return Ordering::identity(13); }

Hypergraph fixture_2h() { return multiply(fixture_h(), 2).graph; }

}  // namespace matchseq

#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "matchseq/hypergraph.hpp"

namespace matchseq {

/// A sequence of distinct edge ids; position p holds sequence()[p].
/// May cover a subset of a hypergraph's edges (matchings, boundaries).
class Ordering {
public:
    Ordering() = default;
    explicit Ordering(std::vector<EdgeId> seq);
    static Ordering identity(int count);

    int size() const { return static_cast<int>(seq_.size()); }
    bool empty() const { return seq_.empty(); }
    EdgeId at(int pos) const { return seq_.at(static_cast<std::size_t>(pos)); }
    const std::vector<EdgeId>& sequence() const { return seq_; }
    /// Position of an edge, or -1 when absent.
    int label_of(EdgeId e) const;

private:
    std::vector<EdgeId> seq_;
    std::unordered_map<EdgeId, int> pos_;
};

/// Concatenation of orderings over pairwise disjoint edge-id sets.
Ordering join(std::span<const Ordering> parts);

/// lambda interleaved copies: block t of the result orders copy t, where
/// copy t of edge e has id e * lambda + t (the multiply() id scheme).
Ordering replicate(const Ordering& base, int lambda);

/// Boundary of two orderings at window length s: the last s-1 edges of
/// first followed by the first s-1 edges of second. Requires disjoint ids.
Ordering join_boundary(const Ordering& first, const Ordering& second, long long s);

/// Window of an ordering of eps edges. For s <= eps this is s consecutive
/// positions. Longer windows wrap: position p + i means the edge at
/// (p + i) mod eps, so each edge recurs every eps steps and degrees count
/// with multiplicity. Non-cyclic windows must start at p <= (a+1)*eps - s
/// where a = floor(s/eps); cyclic windows may start anywhere.
struct Window {
    long long start = 0;
    long long length = 0;
    bool cyclic = false;
    std::vector<EdgeId> edge_seq;  // with repetition when length > eps
};

/// All legal windows of length s (s >= 1).
std::vector<Window> windows(const Ordering& l, long long s, bool cyclic);

struct DegreeViolation {
    Vertex vertex;
    long long degree = 0;  // multiset degree inside the window
};

/// First vertex whose multiset degree inside w exceeds r, if any.
std::optional<DegreeViolation> window_violation(const Hypergraph& h, const Window& w, long long r);
bool check_window_degree(const Hypergraph& h, const Window& w, long long r);

/// True iff every legal window of length s keeps all degrees <= r.
bool all_windows_ok(const Hypergraph& h, const Ordering& l, long long r, long long s, bool cyclic);

/// Largest s such that every legal window of length s has max degree <= r.
/// Requires r >= 1 and a nonempty ordering. Monotone in s, so computed by
/// scanning upward from the guaranteed floor floor(r/D)*eps, D the max
/// degree among the sequence's edges.
long long eval_ms(const Hypergraph& h, const Ordering& l, long long r, bool cyclic);

/// Largest s such that every length-s window of the boundary of the two
/// orderings at s is a matching. At least 1; at most min size + 1.
long long ms_pair(const Hypergraph& h, const Ordering& first, const Ordering& second);

}  // namespace matchseq

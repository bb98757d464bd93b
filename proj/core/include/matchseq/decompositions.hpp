#pragma once

#include <string>
#include <vector>

#include "matchseq/hypergraph.hpp"
#include "matchseq/ordering.hpp"

namespace matchseq {

/// Matching given as edge ids listed in their internal order.
struct OrderedMatching {
    std::vector<EdgeId> edges;
    Ordering to_ordering() const { return Ordering(edges); }
};

/// Grid of matchings indexed by (i, j) in [dim_i] x [dim_j].
struct MatchingFamily {
    long long dim_i = 0;
    long long dim_j = 0;
    std::vector<OrderedMatching> cells;  // row-major: (i, j) at i*dim_j + j

    const OrderedMatching& at(long long i, long long j) const;
    OrderedMatching& at(long long i, long long j);
};

/// Splits a divisor d of N = n2*...*nk into per-part moduli
/// (m1 = n1, m2 | n2, ..., mk | nk) with m2*...*mk = d.
std::vector<int> factor_divisor(const PartiteSpec& spec, long long d);

/// Partition of K_{n1,...,nk} (lambda = 1) into d * (N/d) perfect
/// matchings of the first part. Vertices of part l split as
/// (v / (nl/ml), v % (nl/ml)); matching (i, j) takes, for each x in [n1],
/// the edge whose part-l coordinate is the split pair
/// ((x1 + i_l) mod ml, (x2 + j_l) mod (nl/ml)) with x = x1*(nl/ml) + x2,
/// i_l, j_l the mixed-radix digits of i and j. Edge x carries label x.
/// Consecutive j blocks of a row overlap in few vertices, which is what
/// the schedules built on top of this need.
MatchingFamily diagonal_family(const PartiteSpec& spec, const std::vector<int>& moduli);

/// Ordering of K_{n1,...,n1} (u parts) whose consecutive n1-blocks are
/// perfect matchings: block i holds the edges (x, x+i_2, ..., x+i_u)
/// mod n1, digits i_l of i, listed by x.
Ordering base_ordering(int n1, int u);

/// Partition of lambda*K_{n1,...,nk} into n1^(u-1) * lambda*N' matchings,
/// u the multiplicity of n1. Cell (i, j) combines block i of the base
/// ordering of the first u parts with the diagonal shifted by j mod N' on
/// the remaining parts, using parallel copy floor(j / N'). Edge x of a
/// cell carries label x.
MatchingFamily refined_family(const PartiteSpec& spec);

struct FamilyCheck {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Checks each cell is a matching, cells have one uniform size, and the
/// cells partition the edge ids of h exactly.
FamilyCheck verify_family(const Hypergraph& h, const MatchingFamily& fam);

}  // namespace matchseq

#pragma once

#include "matchseq/hypergraph.hpp"
#include "matchseq/ordering.hpp"

namespace matchseq {

/// Complete graph K_n as a 2-uniform hypergraph on a single part,
/// edges in lexicographic id order.
Hypergraph complete_graph(int n);

/// Complete multipartite graph with `parts` parts of `size` vertices:
/// 2-uniform, one part per group, all cross pairs.
Hypergraph complete_multipartite_graph(int parts, int size);

/// Six-edge graph with a degree-3 hub v and a detached cherry: edges
/// va, vb, vc, ab, dc, df. Sequenced one matching at a time it stalls
/// immediately (cyclic value 1), yet at degree bound 4 a cyclic run of
/// 8 is reachable, far above 4 * 1.
Hypergraph fixture_g();

/// fixture_g without the edge df; the non-cyclic analogue (value 1,
/// reachable run 7 at degree bound 4).
Hypergraph fixture_g_prime();

/// Thirteen-edge graph: K_5 plus three pendant edges at one vertex v',
/// which ends up with degree 7. Ids follow the hand labelling whose
/// consecutive pairs are all disjoint, so the identity ordering
/// certifies a run of 2.
Hypergraph fixture_h();

/// The hand labelling of fixture_h (the identity ordering).
Ordering fixture_h_ordering();

/// Two parallel copies of fixture_h: 26 edges, 14 of them at the hub,
/// which pigeonholes every ordering down to runs of length 1.
Hypergraph fixture_2h();

}  // namespace matchseq

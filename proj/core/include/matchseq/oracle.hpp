#pragma once

#include <optional>

#include "matchseq/hypergraph.hpp"
#include "matchseq/ordering.hpp"

namespace matchseq {

/// Limits for the exhaustive searches. A zero max_millis means no time
/// limit. from_env() reads MATCHSEQ_BUDGET_MS when present.
struct SearchBudget {
    long long max_nodes = 500'000'000;
    long long max_millis = 0;
    static SearchBudget from_env();
};

enum class Outcome { yes, no, unknown };

struct DecisionResult {
    Outcome outcome = Outcome::unknown;
    std::optional<Ordering> witness;  // set on yes
    long long nodes = 0;
};

struct ValueResult {
    bool known = false;
    long long ms = 0;  // meaningful when known
    long long nodes = 0;
};

/// Decides by backtracking whether some (cyclic) ordering of h keeps
/// every window of length s at max degree <= r. Yes answers carry a
/// witness that has been re-checked against the window definition.
DecisionResult exists_ordering(const Hypergraph& h, long long r, long long s, bool cyclic,
                               const SearchBudget& budget = {});

/// Exact max-over-orderings window value, by scanning s upward inside
/// the band [floor(r/D)*eps, (floor(r/D)+1)*eps) that must contain it,
/// D the max degree. known = false when the budget ran out first.
ValueResult exact_ms(const Hypergraph& h, long long r, bool cyclic, const SearchBudget& budget = {});

}  // namespace matchseq

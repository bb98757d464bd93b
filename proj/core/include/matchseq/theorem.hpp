#pragma once

#include <stdexcept>
#include <string>

#include "matchseq/hypergraph.hpp"
#include "matchseq/ordering.hpp"

namespace matchseq {

enum class ValueBranch { divisible, condition_one, otherwise };

std::string branch_name(ValueBranch b);

/// Balance test for the two-speed schedule at rate r2 (0 < r2 < lambda*N):
/// with p = floor(r2 / n1^(u-1)) and a = floor(lambda*N / r2),
/// (p+1)*a <= lambda*N' <= p*(a+1).
bool condition_one(const PartiteSpec& spec, long long r2);

/// Branch that decides the sequencibility value at rate r (r >= 1):
/// divisible when n1^(u-1) | (r mod lambda*N); otherwise condition_one
/// can still rescue the non-cyclic value.
ValueBranch value_branch(const PartiteSpec& spec, long long r, bool cyclic);

/// Largest s such that some (cyclically, when cyclic) ordered run of the
/// complete multipartite multigraph keeps every window of length s at
/// max degree <= r: r*n1 on the divisible and condition_one branches,
/// r*n1 - 1 otherwise.
long long value(const PartiteSpec& spec, long long r, bool cyclic);

/// Trivial cap r*n1: a window of r*n1 + 1 edges meets some first-part
/// vertex r+1 times.
long long upper_bound(const PartiteSpec& spec, long long r);

struct CertifiedOrdering {
    Ordering ordering;
    long long s = 0;
    long long r = 0;
    bool cyclic = false;
};

struct ConstructionDefect : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Builds an ordering of lambda*K_{n1,...,nk} achieving value(spec, r,
/// cyclic), re-measures it with eval_ms, and returns the measured s.
/// Throws ConstructionDefect when the measurement falls short.
CertifiedOrdering construct(const PartiteSpec& spec, long long r, bool cyclic);

}  // namespace matchseq

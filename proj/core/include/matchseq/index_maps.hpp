#pragma once

#include <optional>
#include <vector>

#include "matchseq/hypergraph.hpp"

namespace matchseq {

/// Cyclic stepping bijection on [t] with step s (1 <= s <= t). With
/// d = gcd(s, t) the domain splits into chains a_{i,j} = j + i*(t/d),
/// i in [d], j in [t/d], and position(a_{i,j}) = (i + j*s) mod t; along
/// each chain positions advance by s mod t. Returned as element -> position.
std::vector<long long> sigma_ordering(long long s, long long t);

/// Same bijection used non-cyclically: whenever position(x) <= t - s - 1,
/// position(x + 1) = position(x) + s. For s = t the identity is returned
/// (the property is vacuous).
std::vector<long long> tau_ordering(long long s, long long t);

/// Parameters of the interleaved block schedule for lambda*K_{n1,...,nk}
/// at rate r when head_pow = n1^(u-1) does not divide r. Splits
/// r = p*head_pow + q (0 < q < head_pow) and lambda*N = a*r + b (b in [r]),
/// then runs chains of two speeds over [lambda*N'].
struct RhoParams {
    long long n1 = 0, u = 0, lambda = 0;
    long long N = 0, N_prime = 0, head_pow = 0;
    long long r = 0;
    long long p = 0, q = 0, a = 0, b = 0;
    long long alpha = 0, beta = 0;    // chain steps p and p+1
    long long gamma = 0, delta = 0;   // lambda*N' - a*alpha, lambda*N' - a*beta
    long long nu = 0;                 // head_pow - q
};

/// Computes the parameters and checks the balance condition
/// (p+1)*a <= lambda*N' <= p*(a+1), without which no two-speed schedule
/// exists. Returns nullopt when the condition fails.
/// Requires 0 < r < lambda*N and head_pow not dividing r.
std::optional<RhoParams> validate_rho_params(const PartiteSpec& spec, long long r);

/// Position map rho : [head_pow] x [lambda*N'] -> [lambda*N]. Slow rows
/// (i < nu) follow the step-alpha chains, fast rows the step-beta chains;
/// whenever rho(i,j) < lambda*N - r the next block of the same row sits
/// exactly r later: rho(i,j+1) = rho(i,j) + r.
class RhoMap {
public:
    explicit RhoMap(const RhoParams& params);
    long long dim_i() const { return params_.head_pow; }
    long long dim_j() const { return params_.lambda * params_.N_prime; }
    long long operator()(long long i, long long j) const;
    const RhoParams& params() const { return params_; }

private:
    RhoParams params_;
    std::vector<long long> sigma_;  // step-alpha positions on [lambda*N']
    std::vector<long long> tau_;    // step-beta positions on [lambda*N']
};

/// Single-speed layout j*step + i used when head_pow divides r.
inline long long simple_rho(long long i, long long j, long long step) { return j * step + i; }

}  // namespace matchseq

#include "matchseq/index_maps.hpp"

#include <numeric>
#include <stdexcept>

namespace matchseq {

std::vector<long long> sigma_ordering(long long s, long long t) {
    if (t < 1 || s < 1 || s > t) throw std::invalid_argument("need 1 <= s <= t");
    long long d = std::gcd(s, t);
    long long chain = t / d;
    std::vector<long long> pos(static_cast<std::size_t>(t));
    for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < chain; ++j)
            pos[static_cast<std::size_t>(j + i * chain)] = (i + j * s) % t;
    return pos;
}

std::vector<long long> tau_ordering(long long s, long long t) {
    if (s == t) {
        std::vector<long long> pos(static_cast<std::size_t>(t));
        for (long long x = 0; x < t; ++x) pos[static_cast<std::size_t>(x)] = x;
        return pos;
    }
    // The chain layout already steps by s between consecutive elements
    // except where a chain ends, and chain-last elements all sit at
    // positions >= t - s, so the non-cyclic property holds as-is.
    return sigma_ordering(s, t);
}

std::optional<RhoParams> validate_rho_params(const PartiteSpec& spec, long long r) {
    RhoParams P;
    P.n1 = spec.n1();
    P.u = spec.u();
    P.lambda = spec.lambda;
    P.N = spec.N();
    P.N_prime = spec.N_prime();
    P.head_pow = spec.head_pow();
    P.r = r;

    long long lN = P.lambda * P.N;
    if (r <= 0 || r >= lN) throw std::invalid_argument("need 0 < r < lambda*N");
    if (P.head_pow > 0 && r % P.head_pow == 0) throw std::invalid_argument("r divisible by n1^(u-1): single-speed layout applies");

    P.p = r / P.head_pow;
    P.q = r % P.head_pow;
    P.a = lN / r;
    P.b = lN % r;
    long long lNp = P.lambda * P.N_prime;
    if ((P.p + 1) * P.a > lNp || lNp > P.p * (P.a + 1)) return std::nullopt;

    P.alpha = P.p;
    P.beta = P.p + 1;
    P.gamma = lNp - P.a * P.alpha;
    P.delta = lNp - P.a * P.beta;
    P.nu = P.head_pow - P.q;

    // Consistency of the split: the two chain populations cover [lambda*N]
    // in blocks of b and r - b positions.
    if (P.gamma < 0 || P.delta < 0 || P.gamma > P.alpha || P.delta > P.beta)
        throw std::logic_error("rho parameter ranges out of bounds");
    if (P.gamma * P.nu + P.delta * P.q != P.b) throw std::logic_error("rho split mismatch (b)");
    if ((P.alpha - P.gamma) * P.nu + (P.beta - P.delta) * P.q != P.r - P.b)
        throw std::logic_error("rho split mismatch (r-b)");
    return P;
}

RhoMap::RhoMap(const RhoParams& params) : params_(params) {
    long long lNp = params_.lambda * params_.N_prime;
    sigma_ = params_.alpha > 0 ? sigma_ordering(params_.alpha, lNp) : std::vector<long long>(static_cast<std::size_t>(lNp), 0);
    tau_ = tau_ordering(params_.beta, lNp);
    if (params_.alpha == 0 && params_.nu > 0) throw std::logic_error("alpha = 0 with slow rows present");
}

long long RhoMap::operator()(long long i, long long j) const {
    const RhoParams& P = params_;
    if (i < 0 || i >= P.head_pow || j < 0 || j >= dim_j()) throw std::out_of_range("rho index");
    if (i < P.nu) {
        long long pos = sigma_[static_cast<std::size_t>(j)];
        long long s = pos / P.alpha, t = pos % P.alpha;
        if (t < P.gamma) return s * P.r + P.nu * t + i;
        return s * P.r + P.b + P.nu * (t - P.gamma) + i;
    }
    long long pos = tau_[static_cast<std::size_t>(j)];
    long long s = pos / P.beta, t = pos % P.beta;
    if (t < P.delta) return s * P.r + P.nu * P.gamma + P.q * t + (i - P.nu);
    return s * P.r + P.b + P.nu * (P.alpha - P.gamma) + P.q * (t - P.delta) + (i - P.nu);
}

}  // namespace matchseq

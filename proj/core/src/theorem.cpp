#include "matchseq/theorem.hpp"

#include <numeric>
#include <sstream>

#include "matchseq/decompositions.hpp"
#include "matchseq/index_maps.hpp"

namespace matchseq {

std::string branch_name(ValueBranch b) {
    switch (b) {
        case ValueBranch::divisible: return "divisible";
        case ValueBranch::condition_one: return "condition-1";
        case ValueBranch::otherwise: return "otherwise";
    }
    return "?";
}

bool condition_one(const PartiteSpec& spec, long long r2) {
    long long lN = spec.lambda * spec.N();
    if (r2 <= 0 || r2 >= lN) throw std::invalid_argument("need 0 < r2 < lambda*N");
    long long p = r2 / spec.head_pow();
    long long a = lN / r2;
    long long lNp = spec.lambda * spec.N_prime();
    return (p + 1) * a <= lNp && lNp <= p * (a + 1);
}

ValueBranch value_branch(const PartiteSpec& spec, long long r, bool cyclic) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    long long r2 = r % (spec.lambda * spec.N());
    if (r2 % spec.head_pow() == 0) return ValueBranch::divisible;
    if (!cyclic && condition_one(spec, r2)) return ValueBranch::condition_one;
    return ValueBranch::otherwise;
}

long long value(const PartiteSpec& spec, long long r, bool cyclic) {
    return value_branch(spec, r, cyclic) == ValueBranch::otherwise ? r * spec.n1() - 1 : r * spec.n1();
}

long long upper_bound(const PartiteSpec& spec, long long r) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    return r * spec.n1();
}

namespace {

Ordering concat_blocks(const MatchingFamily& fam, const std::vector<std::pair<long long, long long>>& cell_of_block) {
    std::vector<EdgeId> seq;
    for (auto [i, j] : cell_of_block) {
        const auto& cell = fam.at(i, j);
        seq.insert(seq.end(), cell.edges.begin(), cell.edges.end());
    }
    return Ordering(std::move(seq));
}

// Single-speed layout of the lambda = 1 refined family; achieves the
// divisible-branch value after replication.
Ordering divisible_core(const PartiteSpec& spec) {
    PartiteSpec base = PartiteSpec::create(1, spec.sizes);
    MatchingFamily fam = refined_family(base);
    long long head = base.head_pow();
    std::vector<std::pair<long long, long long>> order(static_cast<std::size_t>(fam.dim_i * fam.dim_j));
    for (long long i = 0; i < fam.dim_i; ++i)
        for (long long j = 0; j < fam.dim_j; ++j)
            order[static_cast<std::size_t>(simple_rho(i, j, head))] = {i, j};
    return replicate(concat_blocks(fam, order), static_cast<int>(spec.lambda));
}

// Two-speed layout of the full refined family, valid when the balance
// condition holds; achieves r2 * n1 in the non-cyclic sense.
Ordering two_speed_core(const PartiteSpec& spec, long long r2) {
    auto params = validate_rho_params(spec, r2);
    if (!params) throw ConstructionDefect("balance condition does not hold at this rate");
    RhoMap rho(*params);
    MatchingFamily fam = refined_family(spec);
    std::vector<std::pair<long long, long long>> order(static_cast<std::size_t>(fam.dim_i * fam.dim_j));
    for (long long i = 0; i < fam.dim_i; ++i)
        for (long long j = 0; j < fam.dim_j; ++j)
            order[static_cast<std::size_t>(rho(i, j))] = {i, j};
    return concat_blocks(fam, order);
}

// Diagonal family stepped cyclically by r2 mod N; loses one from the cap
// but works at every remaining rate.
Ordering stepped_core(const PartiteSpec& spec, long long r2) {
    PartiteSpec base = PartiteSpec::create(1, spec.sizes);
    long long N = base.N();
    long long step = r2 % N;
    long long d = std::gcd(N, step);
    MatchingFamily fam = diagonal_family(base, factor_divisor(base, d));
    std::vector<std::pair<long long, long long>> order(static_cast<std::size_t>(N));
    for (long long i = 0; i < fam.dim_i; ++i)
        for (long long j = 0; j < fam.dim_j; ++j)
            order[static_cast<std::size_t>((i + j * step) % N)] = {i, j};
    return replicate(concat_blocks(fam, order), static_cast<int>(spec.lambda));
}

}  // namespace

CertifiedOrdering construct(const PartiteSpec& spec, long long r, bool cyclic) {
    if (r < 1) throw std::invalid_argument("r must be >= 1");
    long long lN = spec.lambda * spec.N();
    long long r2 = r % lN;

    Ordering core;
    if (r2 == 0) {
        core = Ordering::identity(static_cast<int>(spec.edge_total()));
    } else if (r2 % spec.head_pow() == 0) {
        core = divisible_core(spec);
    } else if (!cyclic && condition_one(spec, r2)) {
        core = two_speed_core(spec, r2);
    } else {
        core = stepped_core(spec, r2);
    }

    Hypergraph h = build_complete_multipartite(spec);
    long long claimed = value(spec, r, cyclic);
    long long measured = eval_ms(h, core, r, cyclic);
    if (measured < claimed) {
        std::ostringstream msg;
        msg << "construction for " << spec.to_string() << " r=" << r << (cyclic ? " cyclic" : "")
            << " measured " << measured << " < claimed " << claimed;
        throw ConstructionDefect(msg.str());
    }
    return CertifiedOrdering{std::move(core), measured, r, cyclic};
}

}  // namespace matchseq

#include "matchseq/decompositions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "matchseq/mixed_radix.hpp"

namespace matchseq {

const OrderedMatching& MatchingFamily::at(long long i, long long j) const {
    if (i < 0 || i >= dim_i || j < 0 || j >= dim_j) throw std::out_of_range("family index");
    return cells[static_cast<std::size_t>(i * dim_j + j)];
}

OrderedMatching& MatchingFamily::at(long long i, long long j) {
    if (i < 0 || i >= dim_i || j < 0 || j >= dim_j) throw std::out_of_range("family index");
    return cells[static_cast<std::size_t>(i * dim_j + j)];
}

std::vector<int> factor_divisor(const PartiteSpec& spec, long long d) {
    if (d < 1 || spec.N() % d != 0) throw std::invalid_argument("d must divide N");
    std::vector<int> moduli(static_cast<std::size_t>(spec.k()), 1);
    moduli[0] = spec.n1();
    long long rest = d;
    auto place = [&](long long prime) {
        for (int i = 1; i < spec.k(); ++i) {
            long long grown = static_cast<long long>(moduli[static_cast<std::size_t>(i)]) * prime;
            if (spec.sizes[static_cast<std::size_t>(i)] % grown == 0) {
                moduli[static_cast<std::size_t>(i)] = static_cast<int>(grown);
                return true;
            }
        }
        return false;
    };
    for (long long f = 2; f * f <= rest; ++f) {
        while (rest % f == 0) {
            if (!place(f)) throw std::logic_error("divisor placement failed");
            rest /= f;
        }
    }
    if (rest > 1 && !place(rest)) throw std::logic_error("divisor placement failed");
    return moduli;
}

MatchingFamily diagonal_family(const PartiteSpec& spec, const std::vector<int>& moduli) {
    if (spec.lambda != 1) throw std::invalid_argument("diagonal family needs lambda = 1");
    if (static_cast<int>(moduli.size()) != spec.k()) throw std::invalid_argument("moduli arity mismatch");
    if (moduli[0] != spec.n1()) throw std::invalid_argument("first modulus must equal n1");
    long long d = 1;
    for (int l = 0; l < spec.k(); ++l) {
        int m = moduli[static_cast<std::size_t>(l)];
        if (m < 1 || spec.sizes[static_cast<std::size_t>(l)] % m != 0)
            throw std::invalid_argument("modulus must divide its part size");
        if (l > 0) d *= m;
    }
    long long chain = spec.N() / d;

    RadixBase ibase, jbase;
    for (int l = 0; l < spec.k(); ++l) {
        ibase.radii.push_back(moduli[static_cast<std::size_t>(l)]);
        jbase.radii.push_back(spec.sizes[static_cast<std::size_t>(l)] / moduli[static_cast<std::size_t>(l)]);
    }
    // i < d and j < chain leave the leading digit zero in either base.
    RadixBase ifull{std::vector<long long>(ibase.radii)};
    ifull.radii[0] = 1;
    RadixBase jfull{std::vector<long long>(jbase.radii)};
    jfull.radii[0] = 1;

    MatchingFamily fam;
    fam.dim_i = d;
    fam.dim_j = chain;
    fam.cells.resize(static_cast<std::size_t>(d * chain));
    std::vector<int> tuple(static_cast<std::size_t>(spec.k()));
    for (long long i = 0; i < d; ++i) {
        auto idig = to_digits(ifull, i);
        for (long long j = 0; j < chain; ++j) {
            auto jdig = to_digits(jfull, j);
            OrderedMatching& cell = fam.at(i, j);
            cell.edges.resize(static_cast<std::size_t>(spec.n1()));
            for (int x = 0; x < spec.n1(); ++x) {
                for (int l = 0; l < spec.k(); ++l) {
                    long long m = ibase.radii[static_cast<std::size_t>(l)];
                    long long q = jbase.radii[static_cast<std::size_t>(l)];
                    long long hi = (x / q + idig[static_cast<std::size_t>(l)]) % m;
                    long long lo = (x % q + jdig[static_cast<std::size_t>(l)]) % q;
                    tuple[static_cast<std::size_t>(l)] = static_cast<int>(hi * q + lo);
                }
                cell.edges[static_cast<std::size_t>(x)] = static_cast<EdgeId>(tuple_rank(spec, tuple));
            }
        }
    }
    return fam;
}

Ordering base_ordering(int n1, int u) {
    if (n1 < 1 || u < 1) throw std::invalid_argument("need n1, u >= 1");
    std::vector<int> sizes(static_cast<std::size_t>(u), n1);
    PartiteSpec spec = PartiteSpec::create(1, sizes);
    long long head = spec.head_pow();

    RadixBase shifts{std::vector<long long>(static_cast<std::size_t>(u), n1)};
    shifts.radii[0] = 1;
    std::vector<EdgeId> seq;
    seq.reserve(static_cast<std::size_t>(head) * static_cast<std::size_t>(n1));
    std::vector<int> tuple(static_cast<std::size_t>(u));
    for (long long i = 0; i < head; ++i) {
        auto dig = to_digits(shifts, i);
        for (int x = 0; x < n1; ++x) {
            for (int l = 0; l < u; ++l) tuple[static_cast<std::size_t>(l)] = static_cast<int>((x + dig[static_cast<std::size_t>(l)]) % n1);
            seq.push_back(static_cast<EdgeId>(tuple_rank(spec, tuple)));
        }
    }
    return Ordering(std::move(seq));
}

MatchingFamily refined_family(const PartiteSpec& spec) {
    int n1 = spec.n1();
    int u = spec.u();
    long long head = spec.head_pow();
    long long np = spec.N_prime();
    long long jdim = spec.lambda * np;

    RadixBase shifts{std::vector<long long>(static_cast<std::size_t>(u), static_cast<long long>(n1))};
    shifts.radii[0] = 1;
    RadixBase tails;
    for (int l = u; l < spec.k(); ++l) tails.radii.push_back(spec.sizes[static_cast<std::size_t>(l)]);

    MatchingFamily fam;
    fam.dim_i = head;
    fam.dim_j = jdim;
    fam.cells.resize(static_cast<std::size_t>(head * jdim));
    std::vector<int> tuple(static_cast<std::size_t>(spec.k()));
    for (long long i = 0; i < head; ++i) {
        auto idig = to_digits(shifts, i);
        for (long long j = 0; j < jdim; ++j) {
            long long copy = j / np;
            auto jdig = tails.width() ? to_digits(tails, j % np) : std::vector<long long>{};
            OrderedMatching& cell = fam.at(i, j);
            cell.edges.resize(static_cast<std::size_t>(n1));
            for (int x = 0; x < n1; ++x) {
                for (int l = 0; l < u; ++l) tuple[static_cast<std::size_t>(l)] = static_cast<int>((x + idig[static_cast<std::size_t>(l)]) % n1);
                for (int l = u; l < spec.k(); ++l) {
                    long long n = spec.sizes[static_cast<std::size_t>(l)];
                    long long shift = jdig[static_cast<std::size_t>(l - u)];
                    tuple[static_cast<std::size_t>(l)] = static_cast<int>(((x - shift) % n + n) % n);
                }
                cell.edges[static_cast<std::size_t>(x)] =
                    static_cast<EdgeId>(tuple_rank(spec, tuple) * spec.lambda + copy);
            }
        }
    }
    return fam;
}

FamilyCheck verify_family(const Hypergraph& h, const MatchingFamily& fam) {
    FamilyCheck out;
    auto fail = [&](const std::string& msg) {
        out.ok = false;
        out.problems.push_back(msg);
    };

    std::vector<int> used(static_cast<std::size_t>(h.edge_count()), 0);
    std::size_t uniform = fam.cells.empty() ? 0 : fam.cells.front().edges.size();
    std::vector<int> mark(static_cast<std::size_t>(h.vertex_count()), -1);
    for (long long i = 0; i < fam.dim_i; ++i) {
        for (long long j = 0; j < fam.dim_j; ++j) {
            const auto& cell = fam.at(i, j);
            std::ostringstream tag;
            tag << "cell (" << i << "," << j << ")";
            if (cell.edges.size() != uniform) fail(tag.str() + ": size differs");
            int stamp = static_cast<int>(i * fam.dim_j + j);
            for (EdgeId e : cell.edges) {
                if (e < 0 || e >= h.edge_count()) {
                    fail(tag.str() + ": edge id out of range");
                    continue;
                }
                ++used[static_cast<std::size_t>(e)];
                for (int key : h.edge_keys(e)) {
                    if (mark[static_cast<std::size_t>(key)] == stamp) {
                        fail(tag.str() + ": shared vertex, not a matching");
                        break;
                    }
                    mark[static_cast<std::size_t>(key)] = stamp;
                }
            }
        }
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (used[static_cast<std::size_t>(e)] != 1) {
            std::ostringstream msg;
            msg << "edge " << e << " covered " << used[static_cast<std::size_t>(e)] << " times";
            fail(msg.str());
        }
    }
    return out;
}

}  // namespace matchseq

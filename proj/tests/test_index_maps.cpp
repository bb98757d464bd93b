#include <doctest.h>

#include <matchseq/index_maps.hpp>

#include <numeric>
#include <stdexcept>
#include <vector>

using namespace matchseq;

namespace {

bool is_permutation_of_range(const std::vector<long long>& v, long long t) {
    if (static_cast<long long>(v.size()) != t) return false;
    std::vector<char> seen(static_cast<std::size_t>(t), 0);
    for (long long x : v) {
        if (x < 0 || x >= t || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("sigma frozen examples") {
    CHECK(sigma_ordering(2, 6) == std::vector<long long>{0, 2, 4, 1, 3, 5});
    CHECK(sigma_ordering(3, 5) == std::vector<long long>{0, 3, 1, 4, 2});
    CHECK(sigma_ordering(4, 4) == std::vector<long long>{0, 1, 2, 3});
    CHECK_THROWS_AS(sigma_ordering(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(sigma_ordering(5, 4), std::invalid_argument);
}

TEST_CASE("sigma is a bijection stepping by s along chains") {
    for (long long t = 1; t <= 30; ++t) {
        for (long long s = 1; s <= t; ++s) {
            auto pos = sigma_ordering(s, t);
            REQUIRE(is_permutation_of_range(pos, t));
            long long d = std::gcd(s, t);
            long long chain = t / d;
            for (long long i = 0; i < d; ++i)
                for (long long j = 0; j < chain; ++j) {
                    long long cur = j + i * chain;
                    long long nxt = (j + 1) % chain + i * chain;
                    CHECK(pos[static_cast<std::size_t>(nxt)] ==
                          (pos[static_cast<std::size_t>(cur)] + s) % t);
                }
        }
    }
}

TEST_CASE("tau steps by s below the tail") {
    for (long long t = 1; t <= 30; ++t) {
        for (long long s = 1; s <= t; ++s) {
            auto pos = tau_ordering(s, t);
            REQUIRE(is_permutation_of_range(pos, t));
            for (long long x = 0; x + 1 < t; ++x) {
                if (pos[static_cast<std::size_t>(x)] <= t - s - 1) {
                    CHECK(pos[static_cast<std::size_t>(x + 1)] ==
                          pos[static_cast<std::size_t>(x)] + s);
                }
            }
            // every element below the tail has a successor inside [t]
            CHECK(pos[static_cast<std::size_t>(t - 1)] >= t - s);
        }
    }
    CHECK(tau_ordering(4, 4) == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("two speed parameters frozen for (1; 2,2,4) at rate 5") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    auto p = validate_rho_params(spec, 5);
    REQUIRE(p.has_value());
    CHECK(p->p == 2);
    CHECK(p->q == 1);
    CHECK(p->a == 1);
    CHECK(p->b == 3);
    CHECK(p->alpha == 2);
    CHECK(p->beta == 3);
    CHECK(p->gamma == 2);
    CHECK(p->delta == 1);
    CHECK(p->nu == 1);

    RhoMap rho(*p);
    CHECK(rho.dim_i() == 2);
    CHECK(rho.dim_j() == 4);
    std::vector<long long> row0, row1;
    for (long long j = 0; j < 4; ++j) {
        row0.push_back(rho(0, j));
        row1.push_back(rho(1, j));
    }
    CHECK(row0 == std::vector<long long>{0, 5, 1, 6});
    CHECK(row1 == std::vector<long long>{2, 7, 4, 3});
}

TEST_CASE("two speed parameter preconditions") {
    auto spec = PartiteSpec::create(1, {2, 2, 4});
    CHECK(!validate_rho_params(spec, 3).has_value());  // balance fails
    CHECK_THROWS_AS(validate_rho_params(spec, 2), std::invalid_argument);  // divisible
    CHECK_THROWS_AS(validate_rho_params(spec, 0), std::invalid_argument);
    CHECK_THROWS_AS(validate_rho_params(spec, 8), std::invalid_argument);
}

TEST_CASE("rho is a bijection advancing by r along rows") {
    // every admissible spec and rate with lambda*N <= 24
    for (long long lam = 1; lam <= 24; ++lam) {
        for (long long n1 = 1; n1 <= 6; ++n1) {
            for (long long n2 = n1; n2 <= 12; ++n2) {
                for (long long n3 = n2; n3 <= 12; ++n3) {
                    std::vector<int> sizes{static_cast<int>(n1), static_cast<int>(n2),
                                           static_cast<int>(n3)};
                    auto spec = PartiteSpec::create(lam, sizes);
                    if (lam * spec.N() > 24) continue;
                    long long lN = lam * spec.N();
                    for (long long r = 1; r < lN; ++r) {
                        if (r % spec.head_pow() == 0) continue;
                        auto params = validate_rho_params(spec, r);
                        if (!params) continue;
                        RhoMap rho(*params);
                        std::vector<char> seen(static_cast<std::size_t>(lN), 0);
                        for (long long i = 0; i < rho.dim_i(); ++i)
                            for (long long j = 0; j < rho.dim_j(); ++j) {
                                long long v = rho(i, j);
                                REQUIRE(v >= 0);
                                REQUIRE(v < lN);
                                REQUIRE(!seen[static_cast<std::size_t>(v)]);
                                seen[static_cast<std::size_t>(v)] = 1;
                                if (v < lN - r) {
                                    REQUIRE(j + 1 < rho.dim_j());
                                    CHECK(rho(i, j + 1) == v + r);
                                }
                            }
                    }
                }
            }
        }
    }
}

TEST_CASE("single speed layout") {
    CHECK(simple_rho(1, 2, 3) == 7);
    CHECK(simple_rho(0, 0, 5) == 0);
}

#include <doctest.h>

#include <matchseq/mixed_radix.hpp>

#include <stdexcept>

using namespace matchseq;

TEST_CASE("digit expansion round trips") {
    RadixBase base{{2, 3, 4}};
    CHECK(base.total() == 24);
    for (long long v = 0; v < 24; ++v) {
        auto d = to_digits(base, v);
        CHECK(from_digits(base, d) == v);
    }
    CHECK(to_digits(base, 0) == std::vector<long long>{0, 0, 0});
    CHECK(to_digits(base, 23) == std::vector<long long>{1, 2, 3});
    CHECK(to_digits(base, 13) == std::vector<long long>{1, 0, 1});
    CHECK_THROWS_AS(to_digits(base, 24), std::out_of_range);
    CHECK_THROWS_AS(to_digits(base, -1), std::out_of_range);
}

TEST_CASE("succ walks values in order and reports the carry position") {
    RadixBase base{{2, 3}};
    std::vector<long long> d{0, 0};
    for (long long v = 0; v + 1 < base.total(); ++v) {
        auto pos = succ(base, d);
        CHECK(from_digits(base, d) == v + 1);
        // everything right of the reported position was reset to zero
        for (std::size_t i = pos + 1; i < d.size(); ++i) CHECK(d[i] == 0);
    }
    CHECK(d == std::vector<long long>{1, 2});
    succ(base, d);
    CHECK(d == std::vector<long long>{0, 0});
}

TEST_CASE("componentwise modular arithmetic") {
    RadixBase base{{2, 3, 4}};
    std::vector<long long> a{1, 2, 3}, b{1, 1, 2};
    auto s = add_mod(base, a, b);
    CHECK(s == std::vector<long long>{0, 0, 1});
    CHECK(sub_mod(base, s, b) == a);
    for (long long x = 0; x < base.total(); ++x)
        for (long long y : {0LL, 5LL, 17LL}) {
            auto dx = to_digits(base, x);
            auto dy = to_digits(base, y % base.total());
            CHECK(sub_mod(base, add_mod(base, dx, dy), dy) == dx);
        }
}

TEST_CASE("diagonal embeds a scalar in every coordinate") {
    RadixBase base{{3, 3, 4}};
    CHECK(diagonal(base, 2) == std::vector<long long>{2, 2, 2});
    CHECK_THROWS_AS(diagonal(base, 3), std::out_of_range);
}

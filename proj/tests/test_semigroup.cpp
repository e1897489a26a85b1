#include <doctest.h>

#include "cycinv/semigroup.hpp"

using namespace cycinv;

namespace {

std::vector<ExponentPair> pts(std::initializer_list<std::pair<long long, long long>> l) {
    std::vector<ExponentPair> v;
    for (auto [c, d] : l) v.push_back({c, d});
    return v;
}

} // namespace

TEST_SUITE("semigroup") {

TEST_CASE("normalize rescales the generator and prefers the smaller weight") {
    CanonicalAction c1 = normalize(Action(7, 1, 3));
    CHECK(c1.b == 3);
    CHECK(c1.b_inv == 5);
    CHECK_FALSE(c1.swapped);

    // (a,b) = (2,3) mod 7: a^{-1} = 4, so b' = 12 mod 7 = 5; inverse 3 is smaller.
    CanonicalAction c2 = normalize(Action(7, 2, 3));
    CHECK(c2.b == 3);
    CHECK(c2.b_inv == 5);
    CHECK(c2.swapped);

    // 12 mod 17 has inverse 10; canonical weight is 10.
    CanonicalAction c3 = normalize(Action(17, 1, 12));
    CHECK(c3.b == 10);
    CHECK(c3.b_inv == 12);
    CHECK(c3.swapped);

    CanonicalAction c4 = normalize(Action(13, 7, 9));
    CHECK(c4.b == 5);
    CHECK(c4.b_inv == 8);

    // Self-inverse weight: p-1.
    CanonicalAction c5 = normalize(Action(11, 1, 10));
    CHECK(c5.b == 10);
    CHECK(c5.b_inv == 10);
    CHECK_FALSE(c5.swapped);
}

TEST_CASE("invariant generators: frozen staircases") {
    CHECK(invariant_generators(7, 3).points == pts({{7, 0}, {4, 1}, {1, 2}, {0, 7}}));
    CHECK(invariant_generators(17, 10).points == pts({{17, 0}, {7, 1}, {4, 3}, {1, 5}, {0, 17}}));
    CHECK(invariant_generators(11, 3).points ==
          pts({{11, 0}, {8, 1}, {5, 2}, {2, 3}, {1, 7}, {0, 11}}));
    CHECK(invariant_generators(13, 4).points == pts({{13, 0}, {9, 1}, {5, 2}, {1, 3}, {0, 13}}));
    CHECK(invariant_generators(13, 5).points == pts({{13, 0}, {8, 1}, {3, 2}, {1, 5}, {0, 13}}));
    CHECK(invariant_generators(2, 1).points == pts({{2, 0}, {1, 1}, {0, 2}}));
}

TEST_CASE("every generator is invariant and the set is an antichain") {
    for (long long p : {5LL, 11LL, 13LL, 29LL}) {
        for (long long b = 1; b < p; ++b) {
            InvariantSet inv = invariant_generators(p, b);
            for (const auto& [c, d] : inv.points) {
                CHECK(residue(c + b * d, p) == 0);
                CHECK(c >= 0);
                CHECK(c <= p);
                CHECK(d >= 0);
                CHECK(d <= p);
            }
            // Staircase: c strictly decreasing, d strictly increasing.
            for (std::size_t i = 0; i + 1 < inv.points.size(); ++i) {
                CHECK(inv.points[i].c > inv.points[i + 1].c);
                CHECK(inv.points[i].d < inv.points[i + 1].d);
            }
            CHECK(inv.points.front() == ExponentPair{p, 0});
            CHECK(inv.points.back() == ExponentPair{0, p});
            // No generator decomposes as a sum of two others.
            for (const auto& e : inv.points)
                for (const auto& f : inv.points) {
                    ExponentPair sum{e.c + f.c, e.d + f.d};
                    CHECK_FALSE(inv.contains(sum));
                }
        }
    }
}

TEST_CASE("transposing the action transposes the generators") {
    for (long long p : {7LL, 13LL, 17LL, 23LL}) {
        for (long long b = 1; b < p; ++b) {
            InvariantSet inv = invariant_generators(p, b);
            InvariantSet swapped = invariant_generators(p, mod_inverse(b, p));
            REQUIRE(inv.size() == swapped.size());
            for (std::size_t i = 0; i < inv.size(); ++i) {
                CHECK(inv.points[i].c == swapped.points[swapped.size() - 1 - i].d);
                CHECK(inv.points[i].d == swapped.points[swapped.size() - 1 - i].c);
            }
        }
    }
}

TEST_CASE("division families sit inside the generator set") {
    SUBCASE("frozen example") {
        // 17 = 10*1 + 7 and 17 = 12*1 + 5.
        CHECK(division_family(17, 10) == pts({{0, 17}, {1, 5}, {7, 1}, {17, 0}}));
    }
    for (long long p : {7LL, 11LL, 19LL}) {
        for (long long b = 1; b < p; ++b) {
            InvariantSet inv = invariant_generators(p, b);
            for (const auto& e : division_family(p, b)) CHECK(inv.contains(e));
        }
    }
}

TEST_CASE("special cases match the general computation") {
    for (long long p : {2LL, 3LL, 5LL, 13LL, 31LL}) {
        auto ver = special_cases(p, 1);
        REQUIRE(ver.has_value());
        CHECK(ver->points == invariant_generators(p, 1).points);
        CHECK(ver->size() == (std::size_t)p + 1);
        if (p > 2) {
            auto three = special_cases(p, p - 1);
            REQUIRE(three.has_value());
            CHECK(three->points == invariant_generators(p, p - 1).points);
            CHECK(three->size() == 3);
        }
        if (p >= 5) CHECK_FALSE(special_cases(p, 2).has_value());
    }
}

TEST_CASE("slopes of frozen staircases") {
    SlopeSet s73 = slopes(invariant_generators(7, 3));
    REQUIRE(s73.size() == 2);
    CHECK(*s73.begin() == Rational(-5));
    CHECK(*std::next(s73.begin()) == Rational(-1) / 3);

    SlopeSet s134 = slopes(invariant_generators(13, 4));
    CHECK(s134 == SlopeSet{Rational(-1) / 4, Rational(-10)});

    // Veronese: single slope -1.
    CHECK(slopes(invariant_generators(11, 1)) == SlopeSet{Rational(-1)});
}

TEST_CASE("degrees follow the staircase") {
    CHECK(degrees(invariant_generators(7, 3)) == std::vector<long long>{7, 5, 3, 7});
    CHECK(degrees(invariant_generators(13, 4)) == std::vector<long long>{13, 10, 7, 4, 13});
}

}

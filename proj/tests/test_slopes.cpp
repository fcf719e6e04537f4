#include <doctest.h>

#include <random>

#include "leghopf/slopes.hpp"
#include "leghopf_app/oracles.hpp"

using namespace leghopf;
using namespace leghopf::slopes;

namespace {

Rational q(long long p, long long d) { return Rational(Int(p), Int(d)); }

CFrac twos(std::size_t p) { return CFrac(p, Int(-2)); }

} // namespace

TEST_SUITE("slopes") {

TEST_CASE("cfrac: -(p+1)/p is a run of -2 [known]") { CHECK(cfrac(q(-4, 3)) == twos(3)); }

TEST_CASE("cfrac: integers terminate at once [trivial]") {
    CHECK(cfrac(Rational(-2)) == CFrac{-2});
    CHECK(cfrac(Rational(-7)) == CFrac{-7});
}

TEST_CASE("cfrac: -5/3 [known]") { CHECK(cfrac(q(-5, 3)) == CFrac{-2, -3}); }

TEST_CASE("cfrac: domain errors") {
    for (const Rational& s : {Rational(-1), q(-1, 2), Rational(0), Rational(3)}) {
        try {
            cfrac(s);
            FAIL("expected OutOfRange for " << s.str());
        } catch (const Error& e) {
            CHECK(e.code() == Errc::OutOfRange);
        }
    }
    CHECK_THROWS_AS(cfrac(Rational::infinity()), Error);
}

TEST_CASE("cfrac_eval: examples [known] [trivial] [derived]") {
    CHECK(cfrac_eval(twos(2)) == q(-3, 2));
    CHECK(cfrac_eval(CFrac{-2}) == Rational(-2));
    CHECK(cfrac_eval(CFrac{-3, -2, -2, -3}) == q(-16, 7));
    CHECK(Rational(oracle::nested_fraction({-3, -2, -2, -3})) == q(-16, 7));
}

TEST_CASE("honda_count: examples [known] [derived]") {
    CHECK(honda_count(CFrac{-3, -3}) == 6);
    CHECK(honda_count(CFrac{-2}) == 2);
    for (std::size_t t0 = 3; t0 <= 9; ++t0) {
        CFrac c{-3};
        for (std::size_t i = 0; i < t0 - 3; ++i) c.push_back(-2);
        c.push_back(-3);
        CHECK(honda_count(c) == 6);
    }
    CHECK(cfrac_str(CFrac{-3, -2}) == "[-3,-2]");
}

TEST_CASE("cfrac round trip and length bound [derived]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> den(1, 999999);
    for (int i = 0; i < 2000; ++i) {
        const long long d = den(rng);
        const long long p = std::uniform_int_distribution<long long>(d + 1, 1000000)(rng);
        Rational s(Int(-p), Int(d));
        CFrac c = cfrac(s);
        CHECK(cfrac_eval(c) == s);
        CHECK(c.size() <= static_cast<std::size_t>(p));
        for (const auto& r : c) CHECK(r <= -2);
    }
}

TEST_CASE("normalize: known slopes [known]") {
    CHECK(normalize(-2, -3).s1p == q(-8, 3));
    CHECK(normalize(2, 1).s1p == Rational(-2));
    CHECK(normalize(0, 5).s1p == q(-6, 5));
    CHECK(normalize(0, -4).s1p == Rational(-2));
    CHECK(normalize(0, 0).s1p == Rational(-2));
    CHECK(normalize(3, 1).s1p == Rational(-3));
    CHECK(normalize(2, 2).s1p == Rational(-4));
}

TEST_CASE("normalize: (2,1) passes through a vertical slope") {
    auto nz = normalize(2, 1);
    bool saw_inf = false;
    for (const auto& s : nz.trail) saw_inf = saw_inf || s.is_infinite();
    CHECK(saw_inf);
}

TEST_CASE("normalize: the map is in SL(2,Z) and fixes the first slope [derived]") {
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -8; t1 <= 8; ++t1) {
            auto nz = normalize(t0, t1);
            CHECK(nz.A.det() == 1);
            CHECK(nz.A.apply({t0, 1}) == Vec2{1, -1});
            CHECK(slope_of(nz.A.apply({1, t1})) == nz.s1p);
            CHECK(nz.s1p <= Rational(-1));
            // The step bound holds in the orientation the count actually uses.
            if (!role_swap_needed(t0, t1)) CHECK(nz.iterations <= std::llabs(t0 * t1) + 4);
        }
}

TEST_CASE("normalize: iteration limit") {
    try {
        normalize(0, -50, 3);
        FAIL("expected IterationLimit");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IterationLimit);
    }
}

TEST_CASE("count: independent of the normalising map [derived]") {
    for (long long t0 = -6; t0 <= 6; ++t0)
        for (long long t1 = -6; t1 <= 6; ++t1) {
            auto nz = normalize(t0, t1);
            if (nz.s1p == Rational(-1)) continue;
            const Int n = honda_count(cfrac(nz.s1p));
            for (long long extra = 1; extra <= 5; ++extra) {
                SL2 a = stabilizer_power(-extra) * nz.A;
                CHECK(a.apply({t0, 1}) == Vec2{1, -1});
                Rational s = slope_of(a.apply({1, t1}));
                if (s.is_infinite() || s >= Rational(-1)) continue;
                CHECK(honda_count(cfrac(s)) == n);
            }
        }
}

TEST_CASE("stabilizer powers compose [trivial]") {
    CHECK(stabilizer_power(0) == SL2{});
    CHECK(stabilizer_power(2) * stabilizer_power(-2) == SL2{});
    CHECK(stabilizer_power(3) == stabilizer_power(1) * stabilizer_power(2));
    CHECK(stabilizer_power(5).apply({1, -1}) == Vec2{1, -1});
}

TEST_CASE("count_tight: known values [known]") {
    CHECK(count_tight(3, 1) == TightCount::finite(3));
    CHECK(count_tight(-1, -1) == TightCount::family());
    CHECK(count_tight(1, 1) == TightCount::family());
    CHECK(count_tight(5, 4) == TightCount::finite(8));
    CHECK(count_tight(2, 1) == TightCount::finite(2));
    CHECK(count_tight(2, 2) == TightCount::finite(4));
    CHECK(count_tight(7, 1) == TightCount::finite(4));
    CHECK(count_tight(7, 2) == TightCount::finite(6));
    CHECK(count_tight(0, -5) == TightCount::finite(2));
    CHECK(count_tight(-2, -3) == TightCount::finite(6));
    CHECK(count_tight(-3, 4) == TightCount::finite(8));
    CHECK(count_tight(-3, 1) == TightCount::finite(5));
}

TEST_CASE("count_tight: swapped roles agree [derived]") {
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -8; t1 <= 8; ++t1) CHECK(count_tight(t0, t1) == count_tight(t1, t0));
}

TEST_CASE("count_tight: rendering [trivial]") {
    CHECK(TightCount::family().str() == "integral-family");
    CHECK(TightCount::finite(8).str() == "8");
}

TEST_CASE("role swap rule [trivial]") {
    CHECK(role_swap_needed(2, -3));
    CHECK(role_swap_needed(4, 0));
    CHECK(role_swap_needed(1, 2));
    CHECK_FALSE(role_swap_needed(-3, 2));
    CHECK(role_swap_needed(0, -3));
    CHECK_FALSE(role_swap_needed(-3, 0));
    CHECK_FALSE(role_swap_needed(0, 0));
    CHECK_FALSE(role_swap_needed(2, 1));
}

TEST_CASE("count_twisting: examples [known]") {
    CHECK(count_twisting(-2, -3, 1, false) == 2);
    CHECK(count_twisting(1, 1, 2, true) == 1);
    CHECK(count_twisting(-1, -1, 2, true) == 1);
    CHECK(count_twisting(-2, -3, 3, true) == 2);
    CHECK(count_twisting(1, 1, 2, false) == 2);
    try {
        count_twisting(2, 1, 0, false);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfRange);
    }
}

}

// Value provenance in test names: [known] closed forms quoted from the
// classification results, [derived] values recomputed by an independent
// oracle or by hand, [trivial] identity/zero cases.

#include <doctest.h>

#include <random>
#include <sstream>

#include "leghopf/exact.hpp"
#include "leghopf_app/oracles.hpp"

using namespace leghopf;

namespace {

// The chain matrix with diagonal (-1,-2,...,-2) and -1 next to the diagonal.
IntMatrix chain(std::size_t n) {
    IntMatrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        m(i, i) = i == 0 ? -1 : -2;
        if (i > 0) m(i, i - 1) = m(i - 1, i) = -1;
    }
    return m;
}

// Diagonal (-1,0,...,0), every off-diagonal entry -1.
IntMatrix all_linked(std::size_t n) {
    IntMatrix m(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) m(i, j) = i == j ? (i == 0 ? -1 : 0) : -1;
    return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool symmetric) {
    std::uniform_int_distribution<long long> e(-9, 9);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (symmetric && j < i) m(i, j) = m(j, i);
            else m(i, j) = e(rng);
        }
    return m;
}

Rational q(long long p, long long d) { return Rational(Int(p), Int(d)); }

} // namespace

TEST_SUITE("exact") {

TEST_CASE("rational: lowest terms and positive denominator [trivial]") {
    CHECK(q(6, 4).str() == "3/2");
    CHECK(q(6, -4).str() == "-3/2");
    CHECK(q(-6, -4).str() == "3/2");
    CHECK(q(1, -1) == Rational(-1));
    CHECK(q(0, -5) == Rational(0));
    CHECK(q(-4, 2).is_integer());
    CHECK(q(-4, 2).to_ll() == -2);
    CHECK(q(3, -2).den() == 2);
    CHECK(q(3, -2).num() == -3);
}

TEST_CASE("rational: arithmetic and ordering [trivial]") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(3, 4) == q(-1, 4));
    CHECK(q(-2, 3) * q(9, 4) == q(-3, 2));
    CHECK(q(1, 2) / q(-1, 4) == Rational(-2));
    CHECK(q(-3, 2) < q(-1, 2));
    CHECK(-q(1, 2) == q(-1, 2));
    CHECK(floor_r(q(-3, 2)) == Rational(-2));
    CHECK(floor_r(q(3, 2)) == Rational(1));
    CHECK(floor_r(Rational(-4)) == Rational(-4));
}

TEST_CASE("rational: parse and render [trivial]") {
    CHECK(Rational::parse("-1/2") == q(-1, 2));
    CHECK(Rational::parse("4/-6") == q(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("inf").is_infinite());
    CHECK(Rational::infinity().str() == "inf");
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    std::ostringstream os;
    os << q(-3, 2);
    CHECK(os.str() == "-3/2");
}

TEST_CASE("rational: errors") {
    try {
        Rational(Int(1), Int(0));
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisionByZero);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational::infinity() + Rational(1), Error);
    CHECK_THROWS_AS((void)(Rational::infinity() < Rational(1)), Error);
    CHECK(Rational::infinity() == Rational::infinity());
    CHECK_FALSE(Rational::infinity() == Rational(1));
    CHECK_THROWS_AS(q(1, 2).to_int(), Error);
}

TEST_CASE("rational: no silent overflow [derived]") {
    Int big = 1;
    for (int i = 0; i < 100; ++i) big *= 10;
    Rational r(big, Int(3));
    CHECK((r * Rational(3)).to_int() == big);
    CHECK_THROWS_AS((r * Rational(3)).to_ll(), Error);
}

TEST_CASE("det: chain matrix with three rows [known]") {
    CHECK(exact::det(chain(2)) == -1);
}

TEST_CASE("det: chain matrices alternate in sign [known]") {
    for (std::size_t n = 0; n <= 8; ++n) CHECK(exact::det(chain(n)) == (n % 2 == 0 ? -1 : 1));
}

TEST_CASE("det: identity and empty [trivial]") {
    CHECK(exact::det(IntMatrix::identity(3)) == 1);
    CHECK(exact::det(IntMatrix(0)) == 1);
    CHECK(exact::det(IntMatrix(2)) == 0);
}

TEST_CASE("det: 2x2 by hand [derived]") {
    CHECK(exact::det(IntMatrix{{0, -1}, {-1, 2}}) == -1);
    CHECK(exact::det(IntMatrix{{2, 1}, {1, 0}}) == -1);
    CHECK(exact::det(IntMatrix{{0, 1}, {1, 0}}) == -1);  // needs a pivot swap
}

TEST_CASE("det agrees with cofactor expansion [derived]") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = random_matrix(rng, 1 + i % 6, false);
        CHECK(exact::det(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("solve: lutz diagram right-hand side [known]") {
    RatVec x = exact::solve(IntMatrix{{0, -1}, {-1, 2}}, {0, -2});
    CHECK(x == RatVec{Rational(2), Rational(0)});
    CHECK(exact::dot(x, IntVec{0, -2}) == 0);
}

TEST_CASE("solve: Cramer's rule by hand [derived]") {
    RatVec x = exact::solve(IntMatrix{{2, 1}, {1, 0}}, {0, -2});
    CHECK(x == RatVec{Rational(-2), Rational(4)});
    CHECK(exact::dot(x, IntVec{0, -2}) == -8);
}

TEST_CASE("solve: identity and errors [trivial]") {
    CHECK(exact::solve(IntMatrix::identity(3), {4, -5, 6}) == RatVec{Rational(4), Rational(-5), Rational(6)});
    CHECK_THROWS_AS(exact::solve(IntMatrix{{1, 2}, {2, 4}}, {1, 1}), Error);
    CHECK_THROWS_AS(exact::solve(IntMatrix::identity(2), {1, 1, 1}), Error);
}

TEST_CASE("solve round-trips exactly [derived]") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long long> e(-20, 20);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = random_matrix(rng, 1 + i % 6, false);
        if (exact::det(m) == 0) continue;
        IntVec b;
        for (std::size_t k = 0; k < m.size(); ++k) b.push_back(e(rng));
        RatVec x = exact::solve(m, b);
        for (std::size_t r = 0; r < m.size(); ++r) {
            Rational s = 0;
            for (std::size_t c = 0; c < m.size(); ++c) s += Rational(m(r, c)) * x[c];
            CHECK(s == Rational(b[r]));
        }
    }
}

TEST_CASE("signature: chain matrix n = 3 [known]") { CHECK(exact::signature(chain(3)) == -4); }

TEST_CASE("signature: all-linked matrix n = 4 [known]") { CHECK(exact::signature(all_linked(4)) == 3); }

TEST_CASE("signature: zero and hyperbolic [trivial]") {
    CHECK(exact::signature(IntMatrix(1)) == 0);
    CHECK(exact::signature(IntMatrix(0)) == 0);
    CHECK(exact::signature(IntMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(exact::signature(IntMatrix{{0, -1}, {-1, 2}}) == 0);
    CHECK(exact::signature(IntMatrix::identity(4)) == 4);
    CHECK_THROWS_AS(exact::signature(IntMatrix{{0, 1}, {2, 0}}), Error);
}

TEST_CASE("signature matches the Sturm oracle [derived]") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m = random_matrix(rng, 1 + i % 5, true);
        CHECK(exact::signature(m) == oracle::sturm_signature(m));
    }
    // Zero diagonals and repeated eigenvalues.
    CHECK(oracle::sturm_signature(all_linked(4)) == 3);
    CHECK(oracle::sturm_signature(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}) == 0);
    CHECK(oracle::sturm_signature(IntMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, -2}}) == 1);
}

TEST_CASE("signature is bounded and has the parity of the rank [derived]") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = random_matrix(rng, 1 + i % 5, true);
        const int s = exact::signature(m), r = exact::rank(m);
        CHECK(std::abs(s) <= r);
        CHECK((s - r) % 2 == 0);
        if (exact::det(m) != 0) CHECK(r == static_cast<int>(m.size()));
    }
}

TEST_CASE("inverse_row: first row of the chain inverse [known]") {
    for (std::size_t n = 1; n <= 6; ++n) {
        RatVec row = exact::inverse_row(chain(n), 0);
        for (std::size_t j = 0; j <= n; ++j) {
            const long long mag = static_cast<long long>(n + 1 - j);
            CHECK(row[j] == Rational(j % 2 == 0 ? -mag : mag));
        }
    }
}

TEST_CASE("inverse_row: identity and 2x2 [trivial]") {
    CHECK(exact::inverse_row(IntMatrix::identity(3), 1) == RatVec{Rational(0), Rational(1), Rational(0)});
    CHECK(exact::inverse_row(IntMatrix{{0, -1}, {-1, 2}}, 0) == RatVec{Rational(-2), Rational(-1)});
    CHECK_THROWS_AS(exact::inverse_row(IntMatrix{{1, 1}, {1, 1}}, 0), Error);
    CHECK_THROWS_AS(exact::inverse_row(IntMatrix::identity(2), 2), Error);
}

TEST_CASE("det times inverse is the integral adjugate [derived]") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = random_matrix(rng, 1 + i % 6, false);
        const Int d = exact::det(m);
        if (d == 0) continue;
        auto inv = exact::inverse(m);
        IntMatrix adj = exact::adjugate(m);
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) {
                Rational v = Rational(d) * inv[r][c];
                CHECK(v.is_integer());
                CHECK(v.to_int() == adj(r, c));
            }
    }
}

TEST_CASE("matrix helpers [trivial]") {
    IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m.transposed() == IntMatrix{{1, 3}, {2, 4}});
    CHECK_FALSE(m.is_symmetric());
    CHECK(IntMatrix{{1, 2}, {2, 1}}.is_symmetric());
    CHECK(exact::mul(m, {1, 1}) == IntVec{3, 7});
    CHECK(exact::dot(IntVec{1, 2}, IntVec{3, 4}) == 11);
}

}

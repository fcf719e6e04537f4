#pragma once

// Slopes on the boundary tori of the Hopf link complement, SL(2,Z)
// normalisation, negative continued fractions and the resulting counts of
// tight minimally twisting contact structures.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leghopf/exact.hpp"

namespace leghopf::slopes {

// A vector (x, y) is the curve x*mu + y*lambda; its slope is y/x.
struct Vec2 {
    Int x, y;
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

Rational slope_of(const Vec2& v);

struct SL2 {
    Int a = 1, b = 0, c = 0, d = 1;

    Int det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    friend SL2 operator*(const SL2& l, const SL2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
                l.c * r.b + l.d * r.d};
    }
    friend bool operator==(const SL2&, const SL2&) = default;
};

// Parabolic element I + v w with v = (1,-1)^T, w = (1,1); it fixes (1,-1).
SL2 stabilizer_power(long long k);

using CFrac = std::vector<Int>;

CFrac cfrac(const Rational& s);
Rational cfrac_eval(const CFrac& c);
Int honda_count(const CFrac& c);
std::string cfrac_str(const CFrac& c);

struct Normalization {
    Rational s1p;       // image of the slope t1, finite and <= -1
    SL2 A;              // A (t0,1)^T = (1,-1)^T
    long long k = 0;    // power of the stabilizer composed after the base map
    long long iterations = 0;
    std::vector<Rational> trail;  // slopes visited, may contain infinity
};

inline constexpr long long kDefaultMaxIter = 10000;

Normalization normalize(long long t0, long long t1, long long max_iter = kDefaultMaxIter);

struct TightCount {
    bool integral_family = false;
    Int n = 0;  // meaningful only when !integral_family

    static TightCount family() { return {true, 0}; }
    static TightCount finite(Int v) { return {false, std::move(v)}; }
    std::string str() const;
    friend bool operator==(const TightCount&, const TightCount&) = default;
};

// True when (t0, t1) must be swapped into the ranges covered by the case
// list: t1 < 0 <= t0, t1 = 0 < t0, and 1 <= t0 < t1.
bool role_swap_needed(long long t0, long long t1);

TightCount count_tight(long long t0, long long t1, long long max_iter = kDefaultMaxIter);

long long count_twisting(long long t0, long long t1, long long n, bool up_to_diffeo,
                         long long max_iter = kDefaultMaxIter);

} // namespace leghopf::slopes

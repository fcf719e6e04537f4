#include "leghopf/slopes.hpp"

#include <sstream>

namespace leghopf::slopes {

Rational slope_of(const Vec2& v) {
    if (v.x == 0) {
        if (v.y == 0) throw Error(Errc::OutOfRange, "slope of the zero vector");
        return Rational::infinity();
    }
    return Rational(v.y, v.x);
}

SL2 stabilizer_power(long long k) {
    Int kk = k;
    return {1 + kk, kk, -kk, 1 - kk};
}

CFrac cfrac(const Rational& s) {
    if (s.is_infinite() || s >= Rational(-1))
        throw Error(Errc::OutOfRange, "cfrac needs s < -1, got " + s.str());
    CFrac out;
    Rational cur = s;
    for (;;) {
        Rational r = floor_r(cur);
        out.push_back(r.to_int());
        if (r == cur) break;
        cur = Rational(1) / (r - cur);
    }
    return out;
}

Rational cfrac_eval(const CFrac& c) {
    if (c.empty()) throw Error(Errc::OutOfRange, "empty continued fraction");
    Rational v(c.back());
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) v = Rational(*it) - Rational(1) / v;
    return v;
}

Int honda_count(const CFrac& c) {
    if (c.empty()) throw Error(Errc::OutOfRange, "empty continued fraction");
    Int n = c.back();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) n *= c[i] + 1;
    return n < 0 ? Int(-n) : n;
}

std::string cfrac_str(const CFrac& c) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

// The base map A0 = [[0,1],[-1,t0-1]] sends (t0,1) to (1,-1).  Stabilizer
// powers B^k move u = A0 (1,t1) to u + k(x+y)(1,-1), i.e. slope c/X - 1 with
// c = x + y and X = x + k c, so the target interval (-inf,-1] is X c < 0.
// Since X c = x c + k c^2, lowering k is always the way in.
Normalization normalize(long long t0, long long t1, long long max_iter) {
    Normalization out;
    SL2 a0{0, 1, -1, Int(t0) - 1};
    Vec2 u = a0.apply({1, t1});
    const Int c = u.x + u.y;
    out.trail.push_back(slope_of(u));

    long long k = 0;
    if (c != 0 && !(u.x != 0 && u.x * c < 0)) {
        for (;;) {
            if (out.iterations >= max_iter)
                throw Error(Errc::IterationLimit, "normalize exceeded " + std::to_string(max_iter) +
                                                      " iterations");
            --k;
            ++out.iterations;
            Int X = u.x + Int(k) * c;
            Vec2 w{X, u.y - Int(k) * c};
            out.trail.push_back(slope_of(w));
            if (X * c < 0) break;
        }
    }
    out.k = k;
    out.A = stabilizer_power(k) * a0;
    out.s1p = slope_of(out.A.apply({1, t1}));
    return out;
}

std::string TightCount::str() const { return integral_family ? "integral-family" : n.str(); }

bool role_swap_needed(long long t0, long long t1) {
    if (t0 >= 0 && t1 < 0) return true;
    if (t1 == 0 && t0 > 0) return true;
    if (t0 >= 1 && t1 >= 1 && t0 < t1) return true;
    return false;
}

TightCount count_tight(long long t0, long long t1, long long max_iter) {
    if (role_swap_needed(t0, t1)) std::swap(t0, t1);
    Normalization nz = normalize(t0, t1, max_iter);
    if (nz.s1p == Rational(-1)) return TightCount::family();
    return TightCount::finite(honda_count(cfrac(nz.s1p)));
}

long long count_twisting(long long t0, long long t1, long long n, bool up_to_diffeo,
                         long long max_iter) {
    if (n < 1) throw Error(Errc::OutOfRange, "twisting must be at least 1");
    if (!up_to_diffeo) return 2;
    if (role_swap_needed(t0, t1)) std::swap(t0, t1);
    return normalize(t0, t1, max_iter).s1p == Rational(-1) ? 1 : 2;
}

} // namespace leghopf::slopes

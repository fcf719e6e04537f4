#pragma once

// Exact rationals (with an optional point at infinity) and integer linear
// algebra over arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "leghopf/error.hpp"

namespace leghopf {

using Int = boost::multiprecision::cpp_int;
using BigQ = boost::multiprecision::cpp_rational;

// p/q in lowest terms with q > 0, or the single unsigned infinity used for
// vertical slopes.  Arithmetic on infinity throws; comparison treats it as
// unordered except for equality.
class Rational {
public:
    Rational() = default;
    Rational(long long v) : q_(v) {}
    Rational(const Int& v) : q_(v) {}
    Rational(const BigQ& v) : q_(v) {}
    Rational(const Int& num, const Int& den);

    static Rational infinity();

    bool is_infinite() const noexcept { return inf_; }
    bool is_integer() const;
    Int num() const;
    Int den() const;
    const BigQ& value() const;  // throws on infinity
    Int to_int() const;         // throws unless integral
    long long to_ll() const;    // throws unless integral and in range

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    // Ordering among finite values; throws InfiniteValue if either is infinite.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p" for integers, "p/q" otherwise, "inf" for infinity.
    std::string str() const;

    // Accepts "p", "p/q", "inf"; throws OutOfRange on malformed text or q = 0.
    static Rational parse(const std::string& text);

private:
    bool inf_ = false;
    BigQ q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational floor_r(const Rational& r);

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const;
    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

namespace exact {

Int det(const IntMatrix& m);

// Exact x with M x = b.
RatVec solve(const IntMatrix& m, const IntVec& b);

RatVec inverse_row(const IntMatrix& m, std::size_t i);

// Positive minus negative inertia, by congruence over Q.
int signature(const IntMatrix& m);

int rank(const IntMatrix& m);

// M^{-1} as exact rationals, row-major.
std::vector<RatVec> inverse(const IntMatrix& m);

// Adjugate, so that M * adj(M) = det(M) * I.
IntMatrix adjugate(const IntMatrix& m);

Rational dot(const RatVec& a, const IntVec& b);
Rational dot(const IntVec& a, const IntVec& b);
IntVec mul(const IntMatrix& m, const IntVec& v);

} // namespace exact
} // namespace leghopf

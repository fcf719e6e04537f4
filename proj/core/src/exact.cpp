#include "leghopf/exact.hpp"

#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace leghopf {

const char* errc_name(Errc c) noexcept {
    switch (c) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::InfiniteValue: return "InfiniteValue";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroTbKnot: return "ZeroTbKnot";
    case Errc::NotS3: return "NotS3";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::BadParams: return "BadParams";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotHalfInteger: return "NotHalfInteger";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::IterationLimit: return "IterationLimit";
    case Errc::InvalidDiagram: return "InvalidDiagram";
    }
    return "Unknown";
}

// ---- Rational ---------------------------------------------------------------

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    // cpp_rational rejects a negative denominator in its two-argument form.
    q_ = den < 0 ? BigQ(Int(-num), Int(-den)) : BigQ(num, den);
}

Rational Rational::infinity() {
    Rational r;
    r.inf_ = true;
    return r;
}

bool Rational::is_integer() const {
    return !inf_ && boost::multiprecision::denominator(q_) == 1;
}

Int Rational::num() const {
    if (inf_) throw Error(Errc::InfiniteValue, "numerator of infinity");
    return boost::multiprecision::numerator(q_);
}

Int Rational::den() const {
    if (inf_) throw Error(Errc::InfiniteValue, "denominator of infinity");
    return boost::multiprecision::denominator(q_);
}

const BigQ& Rational::value() const {
    if (inf_) throw Error(Errc::InfiniteValue, "value of infinity");
    return q_;
}

Int Rational::to_int() const {
    if (!is_integer()) throw Error(Errc::OutOfRange, "not an integer: " + str());
    return boost::multiprecision::numerator(q_);
}

long long Rational::to_ll() const {
    Int v = to_int();
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error(Errc::OutOfRange, "does not fit in 64 bits: " + str());
    return v.convert_to<long long>();
}

Rational Rational::operator-() const {
    if (inf_) return *this;
    return Rational(BigQ(-q_));
}

Rational& Rational::operator+=(const Rational& o) {
    if (inf_ || o.inf_) throw Error(Errc::InfiniteValue, "addition with infinity");
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (inf_ || o.inf_) throw Error(Errc::InfiniteValue, "subtraction with infinity");
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (inf_ || o.inf_) throw Error(Errc::InfiniteValue, "multiplication with infinity");
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (inf_ || o.inf_) throw Error(Errc::InfiniteValue, "division with infinity");
    if (o.q_ == 0) throw Error(Errc::DivisionByZero, "division by zero");
    q_ /= o.q_;
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.inf_ || b.inf_) throw Error(Errc::InfiniteValue, "ordering with infinity");
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (a.q_ > b.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (inf_) return "inf";
    std::string s = boost::multiprecision::numerator(q_).str();
    Int d = boost::multiprecision::denominator(q_);
    if (d != 1) s += "/" + d.str();
    return s;
}

Rational Rational::parse(const std::string& text) {
    if (text == "inf") return infinity();
    auto parse_int = [&](const std::string& t) -> Int {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) throw Error(Errc::OutOfRange, "malformed rational: " + text);
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') throw Error(Errc::OutOfRange, "malformed rational: " + text);
        return Int(t[0] == '+' ? t.substr(1) : t);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw Error(Errc::OutOfRange, "zero denominator: " + text);
    return Rational(parse_int(text.substr(0, slash)), d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational floor_r(const Rational& r) {
    Int n = r.num(), d = r.den();
    Int q = n / d;  // truncates toward zero
    if (n % d != 0 && n < 0) q -= 1;
    return Rational(q);
}

// ---- IntMatrix --------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw Error(Errc::DimensionMismatch, "matrix must be square");
        std::size_t j = 0;
        for (long long v : row) a_[i * n_ + j++] = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

namespace exact {

using QMat = std::vector<std::vector<BigQ>>;

static QMat to_q(const IntMatrix& m) {
    QMat a(m.size(), std::vector<BigQ>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = BigQ(m(i, j));
    return a;
}

// Bareiss: every intermediate entry is a minor of the input, so division is exact.
Int det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RatVec solve(const IntMatrix& m, const IntVec& b) {
    const std::size_t n = m.size();
    if (b.size() != n) throw Error(Errc::DimensionMismatch, "solve: rhs length differs from matrix size");
    QMat a = to_q(m);
    std::vector<BigQ> rhs(b.begin(), b.end());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw Error(Errc::SingularMatrix, "solve: singular matrix");
        std::swap(a[k], a[p]);
        std::swap(rhs[k], rhs[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            BigQ f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational(BigQ(rhs[i] / a[i][i]));
    return x;
}

RatVec inverse_row(const IntMatrix& m, std::size_t i) {
    if (i >= m.size()) throw Error(Errc::IndexOutOfRange, "inverse_row: row index");
    // Row i of M^{-1} is the solution of M^T y = e_i.
    IntVec e(m.size(), 0);
    e[i] = 1;
    return solve(m.transposed(), e);
}

std::vector<RatVec> inverse(const IntMatrix& m) {
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < m.size(); ++i) rows.push_back(inverse_row(m, i));
    return rows;
}

IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t n = m.size();
    IntMatrix adj(n);
    if (n == 0) return adj;
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Int d = det(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : Int(-d);
        }
    }
    return adj;
}

// Congruence diagonalisation: a nonzero diagonal pivot contributes its sign;
// with an all-zero diagonal but a nonzero entry a_ij the 2x2 block
// [[0,b],[b,0]] is hyperbolic and contributes one + and one -.
int signature(const IntMatrix& m) {
    if (!m.is_symmetric()) throw Error(Errc::NotSymmetric, "signature needs a symmetric matrix");
    QMat a = to_q(m);
    int sig = 0;
    while (!a.empty()) {
        const std::size_t n = a.size();
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i][i] != 0) { p = i; break; }
        if (p < n) {
            BigQ piv = a[p][p];
            sig += piv > 0 ? 1 : -1;
            QMat b;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == p) continue;
                std::vector<BigQ> row;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == p) continue;
                    row.push_back(a[i][j] - a[i][p] * a[p][j] / piv);
                }
                b.push_back(std::move(row));
            }
            a = std::move(b);
            continue;
        }
        std::size_t r = n, c = n;
        for (std::size_t i = 0; i < n && r == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[i][j] != 0) { r = i; c = j; break; }
        if (r == n) break;  // zero matrix: remaining inertia is null
        // Schur complement of the block B = [[0,b],[b,0]], B^{-1} = [[0,1/b],[1/b,0]].
        BigQ inv_b = 1 / a[r][c];
        QMat b;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || i == c) continue;
            std::vector<BigQ> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == r || j == c) continue;
                // X B^{-1} X^T with X = [a_ir, a_ic]
                BigQ corr = (a[i][r] * a[c][j] + a[i][c] * a[r][j]) * inv_b;
                row.push_back(a[i][j] - corr);
            }
            b.push_back(std::move(row));
        }
        a = std::move(b);
    }
    return sig;
}

int rank(const IntMatrix& m) {
    QMat a = to_q(m);
    const std::size_t n = m.size();
    int rk = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && a[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(a[row], a[p]);
        for (std::size_t i = row + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            BigQ f = a[i][col] / a[row][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rk;
    }
    return rk;
}

Rational dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot: length mismatch");
    BigQ s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].value() * BigQ(b[i]);
    return Rational(s);
}

Rational dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return Rational(s);
}

IntVec mul(const IntMatrix& m, const IntVec& v) {
    if (v.size() != m.size()) throw Error(Errc::DimensionMismatch, "mul: length mismatch");
    IntVec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

} // namespace exact
} // namespace leghopf

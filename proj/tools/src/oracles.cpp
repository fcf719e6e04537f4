#include "leghopf_app/oracles.hpp"

namespace leghopf::oracle {

namespace {

using Poly = std::vector<BigQ>;  // low to high

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly deriv(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * BigQ(static_cast<long long>(i)));
    trim(d);
    return d;
}

// a = q b + r; b nonzero.
void divmod(Poly a, const Poly& b, Poly& q, Poly& r) {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigQ(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        BigQ f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    r = a;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        BigQ lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

int sign(const BigQ& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int changes(const std::vector<int>& signs) {
    int count = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

// Distinct positive and negative roots of p, with p(0) != 0.
std::pair<int, int> sturm_counts(const Poly& p) {
    std::vector<Poly> seq{p, deriv(p)};
    while (!seq.back().empty()) {
        Poly q, r;
        divmod(seq[seq.size() - 2], seq.back(), q, r);
        for (auto& c : r) c = -c;
        seq.push_back(r);
    }
    seq.pop_back();
    std::vector<int> at_zero, at_pos, at_neg;
    for (const auto& s : seq) {
        at_zero.push_back(sign(s.front()));
        at_pos.push_back(sign(s.back()));
        at_neg.push_back(sign(s.back()) * ((s.size() - 1) % 2 == 0 ? 1 : -1));
    }
    return {changes(at_zero) - changes(at_pos), changes(at_neg) - changes(at_zero)};
}

} // namespace

Int cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        IntMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Int term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Int(-term);
    }
    return total;
}

// Faddeev-LeVerrier.
std::vector<BigQ> char_poly(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<BigQ> c(n + 1, BigQ(0));
    c[n] = 1;
    std::vector<std::vector<BigQ>> mk(n, std::vector<BigQ>(n, BigQ(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<BigQ>> next(n, std::vector<BigQ>(n, BigQ(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                BigQ s = (i == j) ? c[n - k + 1] : BigQ(0);
                for (std::size_t l = 0; l < n; ++l) s += BigQ(m(i, l)) * mk[l][j];
                next[i][j] = s;
            }
        mk = next;
        BigQ tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += BigQ(m(i, l)) * mk[l][i];
        c[n - k] = -tr / BigQ(static_cast<long long>(k));
    }
    return c;
}

int sturm_signature(const IntMatrix& m) {
    Poly p = char_poly(m);
    std::size_t zeros = 0;
    while (zeros < p.size() && p[zeros] == 0) ++zeros;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zeros));
    // Roots of multiplicity > k are the roots of g_k, g_{k+1} = gcd(g_k, g_k').
    int pos = 0, neg = 0;
    Poly g = p;
    trim(g);
    while (g.size() > 1) {
        auto [a, b] = sturm_counts(g);
        pos += a;
        neg += b;
        g = gcd(g, deriv(g));
    }
    return pos - neg;
}

BigQ nested_fraction(const std::vector<BigQ>& entries) {
    if (entries.empty()) return 0;
    // Continuants: p_k/q_k with p_k = r_k p_{k-1} - p_{k-2}.
    BigQ p_prev = 1, p = entries[0], q_prev = 0, q = 1;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        BigQ p_next = entries[i] * p - p_prev;
        BigQ q_next = entries[i] * q - q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    return p / q;
}

} // namespace leghopf::oracle

#include "leghopf/classify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>


namespace leghopf::classify {

namespace {

const Rational kMinusHalf(-1, 2);
const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

long long sgn_pow(long long n) { return (n % 2 == 0) ? 1 : -1; }  // (-1)^n

Realization make(long long t0, long long r0, long long t1, long long r1, const Rational& d3,
                 const char* source) {
    Realization r;
    r.t0 = t0;
    r.r0 = r0;
    r.t1 = t1;
    r.r1 = r1;
    r.d3 = d3;
    r.type0 = component_type(t0, r0, d3);
    r.type1 = component_type(t1, r1, d3);
    r.source = source;
    return r;
}

void add_pair(std::vector<Realization>& out, long long t0, long long r0, long long t1, long long r1,
              const Rational& d3, const char* source) {
    out.push_back(make(t0, r0, t1, r1, d3, source));
    out.push_back(make(t0, -r0, t1, -r1, d3, source));
}

// The table lists case (d) with t0 = 0, so its layout differs from the
// counting convention at t0 = 0 > t1 and at t1 = 0 > t0.
bool table_swap_needed(long long t0, long long t1) {
    if (t0 >= 1 && t1 < 0) return true;
    if (t1 == 0 && t0 != 0) return true;
    return t0 >= 1 && t1 >= 1 && t0 < t1;
}

Realization swapped(const Realization& r) {
    Realization s = r;
    std::swap(s.t0, s.t1);
    std::swap(s.r0, s.r1);
    std::swap(s.type0, s.type1);
    return s;
}

// Table rows with (t0, t1) already in the canonical orientation.
std::vector<Realization> se_canonical(long long t0, long long t1) {
    std::vector<Realization> out;
    if (t0 < 0 && t1 < 0) return out;
    if (t0 < 0 && t1 >= 2) {
        const long long K = -t0, n = t1 - 2, e = sgn_pow(n);
        for (long long k = 0; k <= K; ++k) {
            const long long l = K - k;
            add_pair(out, t0, l - k - e, t1, -e * (n + 1), kHalf, "b1");
        }
    } else if (t0 < 0 && t1 == 1) {
        for (long long r0 = t0 - 1; r0 <= -t0 + 1; r0 += 2) out.push_back(make(t0, r0, 1, 0, kHalf, "b2"));
    } else if (t0 == 0) {
        add_pair(out, 0, 1, t1, t1 - 1, kHalf, "d");
    } else if (t0 == 1 && t1 == 1) {
        out.push_back(make(1, 0, 1, 0, kHalf, "c1"));
    } else if (t0 == 2 && t1 == 1) {
        add_pair(out, 2, 3, 1, 2, kMinusHalf, "c2");
    } else if (t0 == 3 && t1 == 1) {
        add_pair(out, 3, 4, 1, 2, kMinusHalf, "c2");
        out.push_back(make(3, 0, 1, 0, kThreeHalves, "c2"));
    } else if (t0 == 2 && t1 == 2) {
        add_pair(out, 2, 3, 2, 3, kMinusHalf, "c2");
        add_pair(out, 2, 1, 2, 1, kThreeHalves, "c2");
    } else if (t0 >= 4 && t1 == 1) {
        add_pair(out, t0, t0 + 1, 1, 2, kMinusHalf, "c3");
        add_pair(out, t0, t0 - 3, 1, 0, kThreeHalves, "c3");
    } else if (t0 >= 3 && t1 == 2) {
        add_pair(out, t0, t0 + 1, 2, 3, kMinusHalf, "c3");
        add_pair(out, t0, t0 - 1, 2, 1, kThreeHalves, "c3");
        add_pair(out, t0, t0 - 3, 2, -1, kThreeHalves, "c3");
    } else if (t0 >= 3 && t1 >= 3) {
        add_pair(out, t0, t0 + 1, t1, t1 + 1, kMinusHalf, "c4");
        add_pair(out, t0, t0 - 1, t1, t1 - 1, kThreeHalves, "c4");
        add_pair(out, t0, t0 - 3, t1, -(t1 - 1), kThreeHalves, "c4");
        add_pair(out, t0, t0 - 1, t1, -(t1 - 3), kThreeHalves, "c4");
    }
    return out;
}

} // namespace

const char* comp_type_name(CompType t) {
    switch (t) {
    case CompType::TightAmbient: return "tight";
    case CompType::Loose: return "loose";
    case CompType::Exceptional: return "exc";
    }
    return "?";
}

std::string Realization::str() const {
    std::ostringstream os;
    os << '(' << t0 << ',' << r0 << ',' << t1 << ',' << r1 << ") d3=" << d3.str() << ' '
       << comp_type_name(type0) << '/' << comp_type_name(type1);
    if (twisting) os << " twisting=" << twisting;
    return os.str();
}

static auto key(const Realization& r) {
    return std::make_tuple(r.t0, r.r0, r.t1, r.r1, r.d3.value());
}

bool same_invariants(const Realization& a, const Realization& b) { return key(a) == key(b); }
bool invariants_less(const Realization& a, const Realization& b) { return key(a) < key(b); }

void sort_unique(std::vector<Realization>& rows) {
    std::sort(rows.begin(), rows.end(), invariants_less);
    rows.erase(std::unique(rows.begin(), rows.end(), same_invariants), rows.end());
}

bool exceptional_unknot_check(long long tb, long long rot) {
    return tb >= 1 && (rot == tb - 1 || rot == -(tb - 1));
}

CompType component_type(long long tb, long long rot, const Rational& d3) {
    return (d3 == kHalf && exceptional_unknot_check(tb, rot)) ? CompType::Exceptional : CompType::Loose;
}

std::vector<Realization> tight_realizations(long long t0, long long t1) {
    if (t0 >= 0 || t1 >= 0) throw Error(Errc::OutOfRange, "tight realisations need t0, t1 < 0");
    std::vector<Realization> out;
    for (long long r0 = t0 + 1; r0 <= -t0 - 1; r0 += 2)
        for (long long r1 = t1 + 1; r1 <= -t1 - 1; r1 += 2) {
            Realization r;
            r.t0 = t0;
            r.r0 = r0;
            r.t1 = t1;
            r.r1 = r1;
            r.d3 = kMinusHalf;
            r.type0 = r.type1 = CompType::TightAmbient;
            r.source = "a";
            out.push_back(r);
        }
    sort_unique(out);
    return out;
}

std::vector<Realization> strongly_exceptional(long long t0, long long t1) {
    const bool swap = table_swap_needed(t0, t1);
    std::vector<Realization> out = swap ? se_canonical(t1, t0) : se_canonical(t0, t1);
    if (swap)
        for (auto& r : out) r = swapped(r);
    sort_unique(out);
    return out;
}

std::vector<Realization> realizations_at_index(long long t0, long long t1, long long p) {
    if (p < 0) throw Error(Errc::OutOfRange, "cut index must be nonnegative");
    // Mixed signs are handled with t0 <= 0 <= t1.
    const bool both_pos = t0 > 0 && t1 > 0;
    const bool both_neg = t0 < 0 && t1 < 0;
    const bool swap = !both_pos && !both_neg && t0 > 0;
    if (swap) std::swap(t0, t1);
    long long twist;
    if (both_pos) {
        if (p < 2) throw Error(Errc::OutOfRange, "both tb positive needs cut index >= 2");
        twist = p - 2;
    } else if (both_neg) {
        twist = p;
    } else {
        if (p < 1) throw Error(Errc::OutOfRange, "mixed signs need cut index >= 1");
        twist = p - 1;
    }
    std::vector<Realization> out;
    const char* src = "e";
    if (p % 2 == 0)
        add_pair(out, t0, t0 + 1, t1, t1 + 1, kMinusHalf, src);
    else
        add_pair(out, t0, t0 - 1, t1, -(t1 - 1), kHalf, src);
    for (auto& r : out) {
        r.twisting = twist;
        if (both_neg && p == 0) {
            r.type0 = r.type1 = CompType::TightAmbient;
        } else {
            r.type0 = CompType::Loose;
            r.type1 = (!both_pos && !both_neg && p == 1 && t1 >= 1) ? CompType::Exceptional
                                                                   : CompType::Loose;
        }
        if (swap) r = swapped(r);
    }
    sort_unique(out);
    return out;
}

long long cut_index_for_twisting(long long t0, long long t1, long long n) {
    if (t0 > 0 && t1 > 0) return n + 2;
    if (t0 < 0 && t1 < 0) return n;
    return n + 1;
}

std::vector<Realization> twisting_realizations(long long t0, long long t1, long long n) {
    if (n < 1) throw Error(Errc::OutOfRange, "twisting must be at least 1");
    return realizations_at_index(t0, t1, cut_index_for_twisting(t0, t1, n));
}

static bool half_integer(const Rational& d) {
    return !d.is_infinite() && d.den() == 2;
}

bool loose_realization_exists(long long t0, long long r0, long long t1, long long r1,
                              const Rational& d) {
    if (!half_integer(d)) throw Error(Errc::NotHalfInteger, "d must lie in Z + 1/2, got " + d.str());
    return (t0 + r0) % 2 != 0 && (t1 + r1) % 2 != 0;
}

const char* move_name(Move m) {
    switch (m) {
    case Move::StabPlus: return "stab+";
    case Move::StabMinus: return "stab-";
    case Move::SumK10: return "sumK10";
    }
    return "?";
}

// Minimal plan: s stabilisations and m connected sums with
// 2m - s = dtb, (#plus - #minus) = drot; s = max(|drot|, -dtb).
std::vector<Move> loose_plan(std::pair<long long, long long> start,
                             std::pair<long long, long long> target) {
    if ((start.first + start.second) % 2 == 0 || (target.first + target.second) % 2 == 0)
        throw Error(Errc::ParityMismatch, "tb + rot must be odd at both ends");
    const long long dtb = target.first - start.first;
    const long long drot = target.second - start.second;
    const long long s = std::max(std::llabs(drot), -dtb);
    const long long m = (dtb + s) / 2;
    const long long plus = (s + drot) / 2, minus = (s - drot) / 2;
    std::vector<Move> plan;
    plan.insert(plan.end(), plus, Move::StabPlus);
    plan.insert(plan.end(), minus, Move::StabMinus);
    plan.insert(plan.end(), m, Move::SumK10);
    return plan;
}

std::pair<long long, long long> replay(std::pair<long long, long long> st, const std::vector<Move>& plan) {
    for (Move mv : plan) {
        switch (mv) {
        case Move::StabPlus: st = {st.first - 1, st.second + 1}; break;
        case Move::StabMinus: st = {st.first - 1, st.second - 1}; break;
        case Move::SumK10: st = {st.first + 2, st.second}; break;
        }
    }
    return st;
}

std::pair<long long, long long> torus_knot_invariants(const TorusKnotSpec& s) {
    if (std::gcd(s.a, s.b) != 1) throw Error(Errc::NotCoprime, "torus knot needs gcd(a,b) = 1");
    if (s.orient != 1 && s.orient != -1) throw Error(Errc::BadParams, "orientation must be +1 or -1");
    if (s.p < 0) throw Error(Errc::BadParams, "p must be nonnegative");
    return {s.a * s.b, s.orient * (s.a + sgn_pow(s.p) * s.b)};
}

CutModel cut_model_constants(long long p) {
    if (p < 0) throw Error(Errc::BadParams, "p must be nonnegative");
    CutModel c;
    c.d3 = (p % 2 == 0) ? kMinusHalf : kHalf;
    c.sl_c = sgn_pow(p + 1);
    c.hopf = (-c.d3 - kHalf).to_ll();
    return c;
}

Rational d3_connected_sum(const Rational& d, const Rational& dp) {
    if (!half_integer(d) || !half_integer(dp)) throw Error(Errc::NotHalfInteger, "d3 values lie in Z + 1/2");
    return d + dp + kHalf;
}

long long sl_pushoff(long long tb, long long rot) { return tb - rot; }

int min_alpha_index(int sign_a, int sign_b) {
    if (sign_a > 0 && sign_b > 0) return 2;
    if (sign_a < 0 && sign_b < 0) return 0;
    return 1;
}

std::vector<Realization> summary_patterns(long long t0, long long t1) {
    if (t0 < 1 || t1 < 1) throw Error(Errc::OutOfRange, "summary table covers t0, t1 >= 1");
    const bool swap = t0 < t1;
    if (swap) std::swap(t0, t1);
    std::vector<Realization> out;
    add_pair(out, t0, t0 + 1, t1, t1 + 1, kMinusHalf, "summary");
    if (t0 >= 3 || (t0 == 2 && t1 == 2)) add_pair(out, t0, t0 - 3, t1, -(t1 - 1), kThreeHalves, "summary");
    if (t0 >= 3 && t1 >= 2) add_pair(out, t0, t0 - 1, t1, -(t1 - 3), kThreeHalves, "summary");
    if (t0 >= 3 && t1 >= 3) add_pair(out, t0, t0 - 1, t1, t1 - 1, kThreeHalves, "summary");
    if (swap)
        for (auto& r : out) r = swapped(r);
    sort_unique(out);
    return out;
}

const char* b1_range_note() {
    return "case b1: the stated range lists r0 in {t0, t0+2, ..., -t0}, which violates the "
           "tb+rot parity rule; rows follow the table formula r0 = +-(l - k - (-1)^n)";
}

} // namespace leghopf::classify

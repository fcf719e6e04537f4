#include "leghopf/families.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace leghopf::families {

using classify::CompType;
using surgery::ComponentKnot;
using surgery::SurgeryDiagram;
using surgery::SurgeryKnot;

namespace {

const Rational kMinusHalf(-1, 2);
const Rational kHalf(1, 2);
const Rational kThreeHalves(3, 2);

long long sgn_pow(long long n) { return (n % 2 == 0) ? 1 : -1; }

class Builder {
public:
    std::size_t knot(long long tb, long long rot, int coeff) {
        knots_.push_back({tb, rot, coeff});
        return knots_.size() - 1;
    }
    void link(std::size_t i, std::size_t j, long long v) { links_.push_back({i, j, v}); }
    // Consecutive knots of a chain linked -1.
    void chain(const std::vector<std::size_t>& ix) {
        for (std::size_t i = 0; i + 1 < ix.size(); ++i) link(ix[i], ix[i + 1], -1);
    }
    std::size_t size() const { return knots_.size(); }

    // Component given by its linking numbers with the surgery knots.
    void component(long long tb, long long rot, IntVec lk, const char* orientation = "cw") {
        comps_.push_back({tb, rot, std::move(lk), orientation});
    }

    // Legendrian push-off of knot i: same tb/rot, lk(K_i) = tb_i, lk(K_j) = lk(K_i,K_j).
    // A reversed push-off negates rot and every linking number.
    void pushoff(std::size_t i, bool reversed = false) {
        IntVec lk(knots_.size(), 0);
        for (const auto& [a, b, v] : links_) {
            if (a == i) lk[b] += v;
            if (b == i) lk[a] += v;
        }
        lk[i] = knots_[i].tb;
        Int rot = knots_[i].rot;
        if (reversed) {
            for (auto& v : lk) v = -v;
            rot = -rot;
        }
        comps_.push_back({knots_[i].tb, rot, std::move(lk), reversed ? "ccw" : "cw"});
    }

    // Reverse component c in place.
    void reverse(std::size_t c) {
        comps_[c].rot = -comps_[c].rot;
        for (auto& v : comps_[c].lk) v = -v;
        comps_[c].orientation = comps_[c].orientation == "cw" ? "ccw" : "cw";
    }

    SurgeryDiagram finish(long long lk_pre) {
        SurgeryDiagram d;
        d.knots = knots_;
        d.offdiag = IntMatrix(knots_.size());
        for (const auto& [a, b, v] : links_) {
            d.offdiag(a, b) += v;
            d.offdiag(b, a) += v;
        }
        d.components = comps_;
        if (comps_.size() == 2) d.lk_pre = {{0, lk_pre}, {lk_pre, 0}};
        d.s3 = true;
        return d;
    }

private:
    std::vector<SurgeryKnot> knots_;
    std::vector<std::tuple<std::size_t, std::size_t, long long>> links_;
    std::vector<ComponentKnot> comps_;
};

ExpectedRow row(long long t0, long long r0, long long t1, long long r1, const Rational& d3,
                CompType ty0, CompType ty1) {
    return {t0, r0, t1, r1, d3, ty0, ty1};
}

// Row and its sign-reversed partner; a single row when they coincide.
std::vector<ExpectedRow> pair_rows(long long t0, long long r0, long long t1, long long r1,
                                   const Rational& d3, CompType ty0, CompType ty1) {
    std::vector<ExpectedRow> v{row(t0, r0, t1, r1, d3, ty0, ty1)};
    if (r0 != 0 || r1 != 0) v.push_back(row(t0, -r0, t1, -r1, d3, ty0, ty1));
    return v;
}

constexpr CompType L = CompType::Loose;
constexpr CompType X = CompType::Exceptional;

// The four c4 row shapes for t0, t1 >= 3.
enum class C4Row { PlusPlus, MinusOneSame, MinusThreeOpp, MinusOneOpp };

// Which c4 row a diagram variant realises.  The d3 = -1/2 row comes from the
// variant whose rotation signs match the parities of (n, m); the rest follow
// from flipping one or both signs.
C4Row c4_row(int variant, long long n, long long m) {
    const int a_bit = (variant - 1) / 2, b_bit = (variant - 1) % 2;
    const int x = a_bit ^ static_cast<int>(n % 2);
    const int y = b_bit ^ static_cast<int>(m % 2);
    if (x == 0 && y == 0) return C4Row::PlusPlus;
    if (x == 1 && y == 1) return C4Row::MinusOneSame;
    if (x == 0) return C4Row::MinusOneOpp;
    return C4Row::MinusThreeOpp;
}

std::string side_str(Side s) { return s == Side::L ? "L" : "R"; }

std::string row_key(const ExpectedRow& r) {
    std::ostringstream os;
    os << '(' << r.t0 << ',' << r.r0 << ',' << r.t1 << ',' << r.r1 << ") d3=" << r.d3.str();
    return os.str();
}

} // namespace

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::B1: return "B1";
    case Kind::B2: return "B2";
    case Kind::C2_31: return "C2_31";
    case Kind::C2_22: return "C2_22";
    case Kind::C3_T01: return "C3_T01";
    case Kind::C3_T02: return "C3_T02";
    case Kind::C4: return "C4";
    case Kind::D: return "D";
    case Kind::LUTZ_NEG: return "LUTZ_NEG";
    case Kind::LUTZ_POS: return "LUTZ_POS";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    for (Kind k : {Kind::B1, Kind::B2, Kind::C2_31, Kind::C2_22, Kind::C3_T01, Kind::C3_T02, Kind::C4,
                   Kind::D, Kind::LUTZ_NEG, Kind::LUTZ_POS})
        if (s == kind_name(k)) return k;
    throw Error(Errc::BadParams, "unknown family: " + s);
}

std::string FamilyId::str() const {
    std::ostringstream os;
    os << kind_name(kind);
    switch (kind) {
    case Kind::B1: os << '(' << k << ',' << l << ',' << n << ')'; break;
    case Kind::B2: os << '(' << k << ',' << l << ')'; break;
    case Kind::C2_31:
    case Kind::C2_22: os << '(' << side_str(side) << ')'; break;
    case Kind::C3_T01: os << '(' << side_str(side) << ',' << n << ')'; break;
    case Kind::C3_T02: os << '(' << variant << ',' << n << ')'; break;
    case Kind::C4: os << '(' << variant << ',' << n << ',' << m << ')'; break;
    case Kind::D: os << '(' << n << ')'; break;
    case Kind::LUTZ_NEG:
    case Kind::LUTZ_POS: break;
    }
    return os.str();
}

std::string ExpectedRow::str() const {
    return row_key(*this) + " " + classify::comp_type_name(type0) + "/" + classify::comp_type_name(type1);
}

void check_params(const FamilyId& id) {
    auto bad = [&](const char* why) { throw Error(Errc::BadParams, id.str() + ": " + why); };
    if (id.k < 0 || id.l < 0 || id.n < 0 || id.m < 0) bad("parameters must be nonnegative");
    switch (id.kind) {
    case Kind::B1:
        if (id.k + id.l < 1) bad("needs k + l >= 1");
        break;
    case Kind::D:
        if (id.n < 2) bad("needs n >= 2");
        break;
    case Kind::C3_T02:
        if (id.variant < 1 || id.variant > 3) bad("variant must be 1..3");
        break;
    case Kind::C4:
        if (id.variant < 1 || id.variant > 4) bad("variant must be 1..4");
        break;
    default: break;
    }
}

SurgeryDiagram instantiate(const FamilyId& id) {
    check_params(id);
    Builder b;
    switch (id.kind) {
    case Kind::B1: {
        // Chain: one tb=-2 knot with coeff +1, then n knots tb=-1 with coeff -1.
        std::vector<std::size_t> ch{b.knot(-2, 1, 1)};
        for (long long i = 0; i < id.n; ++i) ch.push_back(b.knot(-1, 0, -1));
        b.chain(ch);
        const std::size_t N = b.size();
        IntVec lk0(N, 0), lk1(N, 0);
        lk0[N - 1] = -1;
        lk1[0] = -1;
        b.component(-(id.k + id.l + 1), id.l - id.k, lk0);
        b.component(1, 0, lk1);
        if (id.n % 2 == 1) b.reverse(1);  // positive Hopf link needs opposite orientations
        return b.finish(0);
    }
    case Kind::B2: {
        auto k0 = b.knot(-1, 0, 1), k1 = b.knot(-1, 0, 1);
        b.link(k0, k1, -1);
        b.component(-1 - (id.k + id.l), id.l - id.k, {-1, -1});  // stabilised copy of L1
        b.pushoff(k0);
        return b.finish(-1);
    }
    case Kind::C2_31:
    case Kind::C2_22: {
        // One knot K (tb -3 resp. -4) and unknot push-offs, all pairwise linked -1.
        const bool t31 = id.kind == Kind::C2_31;
        const long long tb = t31 ? -3 : -4;
        const long long rot = t31 ? (id.side == Side::L ? 2 : 0) : (id.side == Side::L ? 3 : 1);
        const int nunknots = t31 ? 3 : 2;
        std::vector<std::size_t> all{b.knot(tb, rot, 1)};
        for (int i = 0; i < nunknots; ++i) all.push_back(b.knot(-1, 0, 1));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) b.link(all[i], all[j], -1);
        b.pushoff(all[0], /*reversed=*/true);
        b.pushoff(all[1]);
        return b.finish(1);
    }
    case Kind::C3_T01: {
        const long long s = id.side == Side::L ? 1 : -1;
        std::vector<std::size_t> ch{b.knot(-2, s, 1)};
        for (long long i = 0; i < id.n; ++i) ch.push_back(b.knot(-1, 0, -1));
        auto h = b.knot(-2, 1, -1);
        ch.push_back(h);
        b.chain(ch);
        std::vector<std::size_t> p;
        for (int i = 0; i < 3; ++i) p.push_back(b.knot(-1, 0, 1));
        for (std::size_t i = 0; i < p.size(); ++i) {
            b.link(p[i], h, -1);
            for (std::size_t j = i + 1; j < p.size(); ++j) b.link(p[i], p[j], -1);
        }
        b.pushoff(ch[0]);
        b.pushoff(p[0]);
        if (id.n % 2 == 1) b.reverse(1);
        return b.finish(0);
    }
    case Kind::C3_T02: {
        // Linear chain F, n knots of framing -2, G; L0, L1 push-offs of F, G.
        const bool even = id.n % 2 == 0;
        long long g = 0;
        if (id.variant == 1) g = even ? -2 : 2;
        if (id.variant == 3) g = even ? 2 : -2;
        std::vector<std::size_t> ch{b.knot(-2, 1, 1)};
        for (long long i = 0; i < id.n; ++i) ch.push_back(b.knot(-1, 0, -1));
        ch.push_back(b.knot(-3, g, 1));
        b.chain(ch);
        b.pushoff(ch.front());
        b.pushoff(ch.back());
        long long pre = id.n == 0 ? -1 : 0;  // push-offs inherit lk(F, G)
        if (even) {
            b.reverse(1);
            pre = -pre;
        }
        return b.finish(pre);
    }
    case Kind::C4: {
        const long long a = id.variant <= 2 ? -1 : 1;
        const long long bb = (id.variant % 2 == 1) ? -1 : 1;
        std::vector<std::size_t> fch{b.knot(-2, a, 1)};
        for (long long i = 0; i < id.n; ++i) fch.push_back(b.knot(-1, 0, -1));
        auto h = b.knot(-2, 1, -1);
        fch.push_back(h);
        std::vector<std::size_t> ach{h};
        for (long long i = 0; i < id.m; ++i) ach.push_back(b.knot(-1, 0, -1));
        ach.push_back(b.knot(-2, bb, 1));
        b.chain(fch);
        b.chain(ach);
        b.pushoff(fch.front());
        b.pushoff(ach.back());
        if ((id.n + id.m) % 2 == 1) b.reverse(1);
        return b.finish(0);
    }
    case Kind::D: {
        std::vector<std::size_t> all{b.knot(-2, 1, 1)};
        for (long long i = 0; i < id.n; ++i) all.push_back(b.knot(-1, 0, 1));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) b.link(all[i], all[j], -1);
        b.pushoff(all[1]);
        b.pushoff(all[0]);
        return b.finish(-1);
    }
    case Kind::LUTZ_NEG: {
        // Matrix [[0,-1],[-1,2]] and rotation vector (0,-2) as given in the classification.
        auto k0 = b.knot(-1, 0, 1), k1 = b.knot(1, -2, 1);
        b.link(k0, k1, -1);
        return b.finish(0);
    }
    case Kind::LUTZ_POS: {
        // tb=1 trefoil and its push-off with two negative stabilisations.
        auto k0 = b.knot(1, 0, 1), k1 = b.knot(-1, -2, 1);
        b.link(k0, k1, 1);
        return b.finish(0);
    }
    }
    throw Error(Errc::BadParams, "unhandled family");
}

Rational expected_d3(const FamilyId& id) {
    check_params(id);
    switch (id.kind) {
    case Kind::B1:
    case Kind::B2:
    case Kind::D:
    case Kind::LUTZ_NEG: return kHalf;
    case Kind::LUTZ_POS: return Rational(-3, 2);
    case Kind::C2_31:
    case Kind::C2_22: return id.side == Side::L ? kMinusHalf : kThreeHalves;
    case Kind::C3_T01: return ((id.side == Side::L) == (id.n % 2 == 0)) ? kThreeHalves : kMinusHalf;
    case Kind::C3_T02: return id.variant == 1 ? kMinusHalf : kThreeHalves;
    case Kind::C4: return c4_row(id.variant, id.n, id.m) == C4Row::PlusPlus ? kMinusHalf : kThreeHalves;
    }
    return kHalf;
}

std::vector<ExpectedRow> expected(const FamilyId& id) {
    check_params(id);
    switch (id.kind) {
    case Kind::B1: {
        const long long t0 = -(id.k + id.l), e = sgn_pow(id.n);
        return pair_rows(t0, id.l - id.k - e, id.n + 2, -e * (id.n + 1), kHalf, L, X);
    }
    case Kind::B2: {
        const long long t0 = 1 - (id.k + id.l);
        // k = l = 0 is the doubly exceptional (1,0,1,0).
        return pair_rows(t0, id.l - id.k, 1, 0, kHalf, t0 == 1 ? X : L, X);
    }
    case Kind::C2_31:
        if (id.side == Side::L) return pair_rows(3, 4, 1, 2, kMinusHalf, L, L);
        return pair_rows(3, 0, 1, 0, kThreeHalves, L, L);
    case Kind::C2_22:
        if (id.side == Side::L) return pair_rows(2, 3, 2, 3, kMinusHalf, L, L);
        return pair_rows(2, 1, 2, 1, kThreeHalves, L, L);
    case Kind::C3_T01: {
        const long long t0 = id.n + 4;
        if (expected_d3(id) == kMinusHalf) return pair_rows(t0, t0 + 1, 1, 2, kMinusHalf, L, L);
        return pair_rows(t0, t0 - 3, 1, 0, kThreeHalves, L, L);
    }
    case Kind::C3_T02: {
        const long long t0 = id.n + 3;
        if (id.variant == 1) return pair_rows(t0, t0 + 1, 2, 3, kMinusHalf, L, L);
        if (id.variant == 2) return pair_rows(t0, t0 - 1, 2, 1, kThreeHalves, L, L);
        return pair_rows(t0, t0 - 3, 2, -1, kThreeHalves, L, L);
    }
    case Kind::C4: {
        const long long t0 = id.n + 3, t1 = id.m + 3;
        switch (c4_row(id.variant, id.n, id.m)) {
        case C4Row::PlusPlus: return pair_rows(t0, t0 + 1, t1, t1 + 1, kMinusHalf, L, L);
        case C4Row::MinusOneSame: return pair_rows(t0, t0 - 1, t1, t1 - 1, kThreeHalves, L, L);
        case C4Row::MinusThreeOpp: return pair_rows(t0, t0 - 3, t1, -(t1 - 1), kThreeHalves, L, L);
        case C4Row::MinusOneOpp: return pair_rows(t0, t0 - 1, t1, -(t1 - 3), kThreeHalves, L, L);
        }
        break;
    }
    case Kind::D: {
        const long long t1 = 2 - id.n;
        return pair_rows(0, 1, t1, t1 - 1, kHalf, L, L);
    }
    case Kind::LUTZ_NEG:
    case Kind::LUTZ_POS: return {};
    }
    return {};
}

Cancellation cancellation(const FamilyId& id) {
    SurgeryDiagram d = instantiate(id);
    Cancellation c;
    for (const auto& k : d.knots)
        if (k.coeff == 1) ++c.plus_knots;
    auto pair = [&](std::size_t i, std::string who) { c.pairs.emplace_back(i, std::move(who)); };
    switch (id.kind) {
    case Kind::B1: pair(0, "L1"); break;
    case Kind::B2:
        pair(0, "L1");
        c.tight_residual = 1;  // the other tb=-1 unknot gives tight S^1 x S^2
        break;
    case Kind::C2_31:
    case Kind::C2_22:
        pair(0, "L0");
        pair(1, "L1");
        for (std::size_t i = 2; i < d.knots.size(); ++i) pair(i, "push-off of L1 #" + std::to_string(i - 1));
        break;
    case Kind::C3_T01: {
        pair(0, "L0");
        const std::size_t p0 = d.knots.size() - 3;
        pair(p0, "L1");
        pair(p0 + 1, "push-off of L1 #1");
        pair(p0 + 2, "push-off of L1 #2");
        break;
    }
    case Kind::C3_T02:
    case Kind::C4:
        pair(0, "L0");
        pair(d.knots.size() - 1, "L1");
        break;
    case Kind::D:
        pair(0, "L1");
        pair(1, "L0");
        for (std::size_t i = 2; i < d.knots.size(); ++i) pair(i, "push-off of L0 #" + std::to_string(i - 1));
        break;
    case Kind::LUTZ_NEG:
    case Kind::LUTZ_POS:
        // Overtwisted on purpose; nothing is cancelled.
        c.tight_residual = 0;
        break;
    }
    return c;
}

std::string VerifyReport::str() const {
    std::ostringstream os;
    os << id.str() << (ok() ? " ok" : " MISMATCH");
    for (const auto& r : computed) os << "\n  " << r.str();
    for (const auto& m : mismatches) os << "\n  " << m.field << ": got " << m.got << ", want " << m.want;
    return os.str();
}

VerifyReport verify_diagram(const FamilyId& id, const SurgeryDiagram& d) {
    VerifyReport rep;
    rep.id = id;
    auto miss = [&](std::string field, std::string got, std::string want) {
        rep.mismatches.push_back({std::move(field), std::move(got), std::move(want)});
    };
    try {
        d.validate();
        Int det = exact::det(surgery::linking_matrix(d));
        if (det != 1 && det != -1) miss("det M", det.str(), "+-1");

        const Rational d3 = surgery::d3_after(d);
        if (d3 != expected_d3(id)) miss("d3", d3.str(), expected_d3(id).str());

        if (id.kind == Kind::LUTZ_NEG || id.kind == Kind::LUTZ_POS) return rep;

        if (id.kind == Kind::B1) {
            const Int want = sgn_pow(id.n + 1);
            Int dm0 = exact::det(surgery::extended_matrix(d, 0));
            if (det != want) miss("det M", det.str(), want.str());
            if (dm0 != want) miss("det M0", dm0.str(), want.str());
        }

        std::vector<ExpectedRow> got;
        for (const SurgeryDiagram& dd : {d, surgery::reversed_components(d)}) {
            surgery::Summary s = surgery::summarize(dd);  // includes the parity check
            ExpectedRow r;
            r.t0 = s.tb[0].to_ll();
            r.r0 = s.rot[0].to_ll();
            r.t1 = s.tb[1].to_ll();
            r.r1 = s.rot[1].to_ll();
            r.d3 = s.d3.d3;
            r.type0 = classify::component_type(r.t0, r.r0, r.d3);
            r.type1 = classify::component_type(r.t1, r.r1, r.d3);
            got.push_back(r);
            if (s.lk[0][1] != Rational(1)) miss("lk_after", s.lk[0][1].str(), "1");
            if (!(s.d3.d3 == kMinusHalf || s.d3.d3 == kHalf || s.d3.d3 == kThreeHalves))
                miss("d3 range", s.d3.d3.str(), "-1/2, 1/2 or 3/2");
        }
        auto less = [](const ExpectedRow& a, const ExpectedRow& b) { return row_key(a) < row_key(b); };
        auto same = [](const ExpectedRow& a, const ExpectedRow& b) { return row_key(a) == row_key(b); };
        std::sort(got.begin(), got.end(), less);
        got.erase(std::unique(got.begin(), got.end(), same), got.end());
        rep.computed = got;

        std::vector<ExpectedRow> want = expected(id);
        std::sort(want.begin(), want.end(), less);
        auto join = [](const std::vector<ExpectedRow>& v) {
            std::string s;
            for (const auto& r : v) s += (s.empty() ? "" : "; ") + r.str();
            return s;
        };
        if (got != want) miss("rows", join(got), join(want));

        const Cancellation c = cancellation(id);
        if (c.uncancelled() != 0) miss("uncancelled (+1)", std::to_string(c.uncancelled()), "0");
    } catch (const Error& e) {
        miss("error", e.what(), "none");
    }
    return rep;
}

VerifyReport verify(const FamilyId& id) { return verify_diagram(id, instantiate(id)); }

std::vector<FamilyId> sweep_grid() {
    std::vector<FamilyId> g;
    for (long long k = 0; k <= 4; ++k)
        for (long long l = 0; l <= 4; ++l)
            if (k + l >= 1)
                for (long long n = 0; n <= 5; ++n) g.push_back(FamilyId::b1(k, l, n));
    for (long long k = 0; k <= 6; ++k)
        for (long long l = 0; k + l <= 6; ++l) g.push_back(FamilyId::b2(k, l));
    for (Side s : {Side::L, Side::R}) {
        g.push_back(FamilyId::c2_31(s));
        g.push_back(FamilyId::c2_22(s));
        for (long long n = 0; n <= 5; ++n) g.push_back(FamilyId::c3_t01(s, n));
    }
    for (int v = 1; v <= 3; ++v)
        for (long long n = 0; n <= 5; ++n) g.push_back(FamilyId::c3_t02(v, n));
    for (int v = 1; v <= 4; ++v)
        for (long long n = 0; n <= 4; ++n)
            for (long long m = 0; m <= 4; ++m) g.push_back(FamilyId::c4(v, n, m));
    for (long long n = 2; n <= 8; ++n) g.push_back(FamilyId::d(n));
    g.push_back(FamilyId::lutz_neg());
    g.push_back(FamilyId::lutz_pos());
    return g;
}

} // namespace leghopf::families

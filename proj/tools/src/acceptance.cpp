#include "leghopf_app/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "leghopf/classify.hpp"
#include "leghopf/families.hpp"
#include "leghopf/slopes.hpp"
#include "leghopf/surgery.hpp"
#include "leghopf_app/oracles.hpp"

namespace leghopf::acceptance {

namespace {

using classify::Realization;
using families::FamilyId;
using families::Side;

// Collects failures; keeps only the first few messages.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 5) msgs_ += (msgs_.empty() ? "" : "; ") + what;
    }
    bool ok() const { return failures_ == 0; }
    std::string summary(const std::string& note = "") const {
        std::ostringstream os;
        os << checks_ << " checks";
        if (failures_ > 0) os << ", " << failures_ << " failed: " << msgs_;
        if (!note.empty()) os << "; " << note;
        return os.str();
    }
    long checks() const { return checks_; }

private:
    long checks_ = 0, failures_ = 0;
    std::string msgs_;
};

std::string cell(long long a, long long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ---- 1: tight counts against the closed forms ------------------------------

struct Closed {
    std::string label;
    bool family = false;
    long long n = 0;
};

// The closed-form case list, applied to (t0, t1) as given.
std::optional<Closed> closed_form_as_is(long long t0, long long t1) {
    if (t0 < 0 && t1 < 0) {
        if (t0 == -1 && t1 == -1) return Closed{"a2", true};
        return Closed{"a1", false, t0 * t1};
    }
    if (t0 < 0 && t1 >= 2) return Closed{"b1", false, 2 * std::llabs(t0 - 1)};
    if (t0 < 0 && t1 == 1) return Closed{"b2", false, std::llabs(t0 - 2)};
    if (t0 == 1 && t1 == 1) return Closed{"c1", true};
    if (t0 == 2 && t1 == 1) return Closed{"c2", false, 2};
    if (t0 == 3 && t1 == 1) return Closed{"c2", false, 3};
    if (t0 == 2 && t1 == 2) return Closed{"c2", false, 4};
    if (t0 >= 4 && t1 == 1) return Closed{"c3", false, 4};
    if (t0 >= 3 && t1 == 2) return Closed{"c3", false, 6};
    if (t0 >= t1 && t1 >= 3) return Closed{"c4", false, 8};
    if (t0 == 0) return Closed{"d", false, 2};
    return std::nullopt;
}

std::optional<Closed> closed_form(long long t0, long long t1) {
    if (auto c = closed_form_as_is(t0, t1)) return c;
    return closed_form_as_is(t1, t0);
}

Result c1_counts() {
    Check ck;
    int family_cells = 0;
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -8; t1 <= 8; ++t1) {
            auto want = closed_form(t0, t1);
            if (!want) {
                ck.expect(false, cell(t0, t1) + " not covered by any case");
                continue;
            }
            slopes::TightCount got = slopes::count_tight(t0, t1);
            const bool swap = slopes::role_swap_needed(t0, t1);
            const auto nz = swap ? slopes::normalize(t1, t0) : slopes::normalize(t0, t1);
            ck.expect(nz.iterations <= std::llabs(t0 * t1) + 4, cell(t0, t1) + " normalize took " +
                                                                     std::to_string(nz.iterations) + " iterations");
            if (want->family) {
                ++family_cells;
                ck.expect(got.integral_family, cell(t0, t1) + " " + want->label + ": want integral family, got " + got.str());
            } else {
                ck.expect(!got.integral_family && got.n == want->n,
                          cell(t0, t1) + " " + want->label + ": want " + std::to_string(want->n) + ", got " + got.str());
            }
        }
    return {1, "tight counts on [-8,8]^2", ck.ok(),
            ck.summary(std::to_string(family_cells) + " integral-family cells (-1,-1),(1,1)")};
}

// ---- 2: continued fractions -------------------------------------------------

std::vector<BigQ> to_q(const slopes::CFrac& c) {
    std::vector<BigQ> out;
    for (const auto& v : c) out.emplace_back(v);
    return out;
}

Result c2_cfrac() {
    Check ck;
    for (long long p = 1; p <= 12; ++p) {
        Rational s(Int(-(p + 1)), Int(p));
        slopes::CFrac want(static_cast<std::size_t>(p), Int(-2));
        ck.expect(slopes::cfrac(s) == want, "cfrac(-(p+1)/p), p=" + std::to_string(p));
        ck.expect(slopes::cfrac_eval(want) == s, "eval [-2 x p], p=" + std::to_string(p));
    }
    for (long long p = 0; p <= 12; ++p) {
        slopes::CFrac c(static_cast<std::size_t>(p), Int(-2));
        c.push_back(-3);
        Rational want(Int(-(2 * p + 3)), Int(2 * p + 1));
        ck.expect(slopes::cfrac_eval(c) == want, "[-2 x p,-3], p=" + std::to_string(p));
        ck.expect(slopes::cfrac(want) == c, "cfrac(-(2p+3)/(2p+1)), p=" + std::to_string(p));
    }
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long long> small(-50, 50);
    for (long long p = 1; p <= 6; ++p) {
        int done = 0;
        while (done < 100) {
            long long a = small(rng), b = small(rng);
            if (b == 0) continue;
            std::vector<BigQ> entries(static_cast<std::size_t>(p), BigQ(-2));
            entries.push_back(BigQ(a) / BigQ(b));
            const BigQ den = BigQ(p * a + (p - 1) * b);
            if (den == 0) continue;
            // Skip tails that make an intermediate denominator vanish.
            bool degenerate = false;
            BigQ x = BigQ(a) / BigQ(b);
            for (long long i = 0; i < p && !degenerate; ++i) {
                if (x == 0) degenerate = true;
                else x = BigQ(-2) - BigQ(1) / x;
            }
            if (degenerate) continue;
            const BigQ want = -BigQ((p + 1) * a + p * b) / den;
            ck.expect(oracle::nested_fraction(entries) == want,
                      "generalised expansion p=" + std::to_string(p) + " a/b=" + std::to_string(a) + "/" +
                          std::to_string(b));
            ++done;
        }
    }
    std::uniform_int_distribution<long long> den_d(1, 999999);
    for (int i = 0; i < 1000; ++i) {
        const long long q = den_d(rng);
        std::uniform_int_distribution<long long> num_d(q + 1, 1000000);
        const long long p = num_d(rng);
        Rational s(Int(-p), Int(q));
        slopes::CFrac c = slopes::cfrac(s);
        const bool entries_ok = std::all_of(c.begin(), c.end(), [](const Int& r) { return r <= -2; });
        ck.expect(entries_ok && !c.empty(), "entries <= -2 for " + s.str());
        ck.expect(static_cast<long long>(c.size()) <= s.num().convert_to<long long>() * -1, "length bound " + s.str());
        ck.expect(slopes::cfrac_eval(c) == s, "round trip " + s.str());
        ck.expect(Rational(oracle::nested_fraction(to_q(c))) == s, "oracle evaluation " + s.str());
    }
    return {2, "continued-fraction identities and round trips", ck.ok(), ck.summary()};
}

// ---- 3: Lutz diagrams -------------------------------------------------------

Result c3_lutz() {
    Check ck;
    const Rational neg = surgery::d3_after(families::instantiate(FamilyId::lutz_neg()));
    const Rational pos = surgery::d3_after(families::instantiate(FamilyId::lutz_pos()));
    const Rational empty = surgery::d3_after(surgery::SurgeryDiagram{});
    ck.expect(neg == Rational(1, 2), "LUTZ_NEG d3 = " + neg.str());
    ck.expect(pos == Rational(-3, 2), "LUTZ_POS d3 = " + pos.str());
    ck.expect(empty == Rational(-1, 2), "empty d3 = " + empty.str());
    ck.expect(surgery::linking_matrix(families::instantiate(FamilyId::lutz_neg())) == IntMatrix{{0, -1}, {-1, 2}},
              "LUTZ_NEG matrix");
    ck.expect(surgery::linking_matrix(families::instantiate(FamilyId::lutz_pos())) == IntMatrix{{2, 1}, {1, 0}},
              "LUTZ_POS matrix");
    return {3, "d3 of the Lutz-twist diagrams and the empty diagram", ck.ok(),
            ck.summary("d3 = " + neg.str() + ", " + pos.str() + ", " + empty.str())};
}

// ---- 4: worked examples -----------------------------------------------------

Result c4_golden() {
    Check ck;
    {
        auto d = families::instantiate(FamilyId::c2_31(Side::L));
        auto s = surgery::summarize(d);
        ck.expect(s.tb[0] == 3 && s.rot[0] == 4, "C2_31(L) L0 = (" + s.tb[0].str() + "," + s.rot[0].str() + ")");
        ck.expect(s.tb[1] == 1 && s.rot[1] == 2, "C2_31(L) L1 = (" + s.tb[1].str() + "," + s.rot[1].str() + ")");
        ck.expect(s.det == 1, "C2_31(L) det M = " + s.det.str());
        const Int m0 = exact::det(surgery::extended_matrix(d, 0));
        const Int m1 = exact::det(surgery::extended_matrix(d, 1));
        ck.expect(m0 == 6, "det M0 = " + m0.str());
        ck.expect(m1 == 2, "det M1 = " + m1.str());
        ck.expect(s.d3.sigma == 0, "sigma = " + std::to_string(s.d3.sigma));
        ck.expect(s.d3.c2 == -8, "c^2 = " + s.d3.c2.str());
        ck.expect(s.d3.d3 == Rational(-1, 2), "d3 = " + s.d3.d3.str());
        ck.expect(linking_matrix(d)(0, 0) == -2 && linking_matrix(d)(0, 1) == -1, "first row of M");
    }
    {
        auto s = surgery::summarize(families::instantiate(FamilyId::c2_31(Side::R)));
        ck.expect(s.rot[0] == 0 && s.rot[1] == 0, "C2_31(R) rot = (" + s.rot[0].str() + "," + s.rot[1].str() + ")");
        ck.expect(s.d3.d3 == Rational(3, 2), "C2_31(R) d3 = " + s.d3.d3.str());
    }
    for (long long n = 2; n <= 8; ++n) {
        auto s = surgery::summarize(families::instantiate(FamilyId::d(n)));
        const std::string tag = "D(" + std::to_string(n) + ")";
        ck.expect(s.tb[0] == 0 && s.rot[0] == -1, tag + " L0 = (" + s.tb[0].str() + "," + s.rot[0].str() + ")");
        ck.expect(s.tb[1] == 2 - n && s.rot[1] == n - 1, tag + " L1 = (" + s.tb[1].str() + "," + s.rot[1].str() + ")");
        ck.expect(s.d3.sigma == n - 1, tag + " sigma = " + std::to_string(s.d3.sigma));
        ck.expect(s.d3.c2 == n - 1, tag + " c^2 = " + s.d3.c2.str());
        ck.expect(s.d3.d3 == Rational(1, 2), tag + " d3 = " + s.d3.d3.str());
    }
    return {4, "worked examples C2_31(L/R) and D(2..8)", ck.ok(), ck.summary()};
}

// ---- 5: family sweep --------------------------------------------------------

Result c5_sweep() {
    Check ck;
    for (const auto& id : families::sweep_grid()) {
        auto rep = families::verify(id);
        ck.expect(rep.ok(), rep.ok() ? "" : rep.str());
    }
    return {5, "family sweep (tb, rot, d3, lk = +1, parity, cancellation)", ck.ok(), ck.summary()};
}

// ---- 6: classification cross-checks ----------------------------------------

using Key = std::tuple<long long, long long, long long, long long, std::string>;

Key key_of(long long t0, long long r0, long long t1, long long r1, const Rational& d3) {
    return {t0, r0, t1, r1, d3.str()};
}

// Independent transcription of the table of strongly exceptional links with
// t0, t1 >= 1, in the orientation t0 >= t1.
std::set<Key> summary_oracle(long long t0, long long t1) {
    const bool swap = t0 < t1;
    if (swap) std::swap(t0, t1);
    std::set<Key> out;
    auto add = [&](long long r0, long long r1, Rational d3) {
        for (int s : {1, -1}) {
            if (swap) out.insert(key_of(t1, s * r1, t0, s * r0, d3));
            else out.insert(key_of(t0, s * r0, t1, s * r1, d3));
        }
    };
    add(t0 + 1, t1 + 1, Rational(-1, 2));
    if (t0 >= 3 || (t0 == 2 && t1 == 2)) add(t0 - 3, -(t1 - 1), Rational(3, 2));
    if (t0 >= 3 && t1 >= 2) add(t0 - 1, -(t1 - 3), Rational(3, 2));
    if (t0 >= 3 && t1 >= 3) add(t0 - 1, t1 - 1, Rational(3, 2));
    return out;
}

std::set<Key> keys(const std::vector<Realization>& rows) {
    std::set<Key> out;
    for (const auto& r : rows) out.insert(key_of(r.t0, r.r0, r.t1, r.r1, r.d3));
    return out;
}

Result c6_classification() {
    Check ck;
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -8; t1 <= 8; ++t1) {
            if (t0 < 0 && t1 < 0) continue;
            auto rows = classify::strongly_exceptional(t0, t1);
            auto n = slopes::count_tight(t0, t1);
            if (n.integral_family) {
                ck.expect(rows.size() == 1, cell(t0, t1) + " integral family: want the unique realisation");
                continue;
            }
            ck.expect(Int(rows.size()) == n.n,
                      cell(t0, t1) + ": " + std::to_string(rows.size()) + " rows vs N = " + n.str());
        }
    for (long long t0 = -6; t0 <= -1; ++t0)
        for (long long t1 = -6; t1 <= -1; ++t1) {
            auto rows = classify::tight_realizations(t0, t1);
            ck.expect(static_cast<long long>(rows.size()) == t0 * t1, cell(t0, t1) + " tight count");
            ck.expect(keys(rows).size() == rows.size(), cell(t0, t1) + " tight rows distinct");
        }
    for (long long t0 = 1; t0 <= 6; ++t0)
        for (long long t1 = 1; t1 <= 6; ++t1) {
            // The first table line would put (1,+-2,1,+-2) at (1,1), where the
            // classification has the single integral-family realisation.
            if (t0 == 1 && t1 == 1) continue;
            auto want = summary_oracle(t0, t1);
            ck.expect(keys(classify::strongly_exceptional(t0, t1)) == want, cell(t0, t1) + " summary table");
            ck.expect(keys(classify::summary_patterns(t0, t1)) == want, cell(t0, t1) + " summary_patterns");
        }
    return {6, "strongly exceptional counts, tight counts, summary table", ck.ok(),
            ck.summary("cell (1,1) excluded from the summary comparison: integral family (c1)")};
}

// ---- 7: twisting ------------------------------------------------------------

Result c7_twisting() {
    Check ck;
    const std::vector<std::pair<long long, long long>> reps{{2, 1}, {1, 1}, {-1, -1}, {-3, 2}, {0, 4}};
    for (auto [t0, t1] : reps)
        for (long long n = 1; n <= 5; ++n) {
            const bool both_pos = t0 > 0 && t1 > 0, both_neg = t0 < 0 && t1 < 0;
            const long long p = both_pos ? n + 2 : (both_neg ? n : n + 1);
            const bool coincide = (p % 2 == 0 && t0 == -1 && t1 == -1) || (p % 2 == 1 && t0 == 1 && t1 == 1);
            auto rows = classify::twisting_realizations(t0, t1, n);
            const std::string tag = cell(t0, t1) + " n=" + std::to_string(n);
            ck.expect(rows.size() == (coincide ? 1u : 2u), tag + ": " + std::to_string(rows.size()) + " rows");
            for (const auto& r : rows) {
                ck.expect(r.twisting == n, tag + " twisting");
                ck.expect(r.d3 == (p % 2 == 0 ? Rational(-1, 2) : Rational(1, 2)), tag + " d3");
            }
        }
    auto boundary = classify::realizations_at_index(2, 1, 2);
    auto se = classify::strongly_exceptional(2, 1);
    ck.expect(keys(boundary) == keys(se), "(2,1) at p = 2 vs strongly exceptional");
    return {7, "twisting realisations and the p = 2 boundary", ck.ok(), ck.summary()};
}

// ---- 8: properties ----------------------------------------------------------

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> e(lo, hi);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = e(rng);
    return m;
}

surgery::SurgeryDiagram random_diagram(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nk(1, 4), coin(0, 1);
    std::uniform_int_distribution<long long> tb(-4, 3), lk(-2, 2), rot(-3, 3);
    for (;;) {
        surgery::SurgeryDiagram d;
        d.s3 = false;
        const std::size_t n = static_cast<std::size_t>(nk(rng));
        for (std::size_t i = 0; i < n; ++i) {
            long long t = tb(rng);
            if (t == 0) t = -1;
            long long r = rot(rng);
            if ((t + r) % 2 == 0) ++r;
            d.knots.push_back({Int(t), Int(r), coin(rng) ? 1 : -1});
        }
        d.offdiag = IntMatrix(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) d.offdiag(i, j) = d.offdiag(j, i) = lk(rng);
        for (int c = 0; c < 2; ++c) {
            surgery::ComponentKnot k;
            k.tb = tb(rng);
            k.rot = rot(rng);
            if ((k.tb + k.rot) % 2 == 0) k.rot += 1;
            for (std::size_t i = 0; i < n; ++i) k.lk.push_back(lk(rng));
            d.components.push_back(k);
        }
        d.lk_pre = {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
        if (exact::det(surgery::linking_matrix(d)) != 0) return d;
    }
}

// Everything but the parity report, which need not hold off S^3.
std::string fingerprint(const surgery::SurgeryDiagram& d) {
    std::ostringstream os;
    os << exact::det(surgery::linking_matrix(d)) << '|' << surgery::d3_after(d);
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        os << '|' << surgery::tb_after(d, i) << ',' << surgery::rot_after(d, i);
        for (std::size_t j = 0; j < d.components.size(); ++j)
            if (i != j) os << ',' << surgery::lk_after(d, i, j);
    }
    return os.str();
}

bool d3_in_table(const Rational& d) { return d == Rational(-1, 2) || d == Rational(1, 2) || d == Rational(3, 2); }

Result c8_properties() {
    Check ck;
    std::mt19937_64 rng(7177);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = random_symmetric(rng, static_cast<std::size_t>(dim(rng)), -3, 3);
        const int got = exact::signature(m), want = oracle::sturm_signature(m);
        std::ostringstream os;
        os << "signature " << got << " vs oracle " << want << " for " << m;
        ck.expect(got == want, os.str());
    }
    for (int i = 0; i < 100; ++i) {
        auto d = random_diagram(rng);
        const std::string base = fingerprint(d);
        const std::size_t n = d.knots.size();
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        ck.expect(fingerprint(surgery::reorient_knot(d, pick(rng))) == base, "reorientation changed " + base);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ck.expect(fingerprint(surgery::permute_knots(d, perm)) == base, "permutation changed " + base);
    }
    long rows = 0;
    auto parity = [&](const Realization& r, const std::string& where) {
        ++rows;
        ck.expect((r.t0 + r.r0) % 2 != 0 && (r.t1 + r.r1) % 2 != 0, where + " parity " + r.str());
    };
    for (long long t0 = -8; t0 <= 8; ++t0)
        for (long long t1 = -8; t1 <= 8; ++t1) {
            if (t0 < 0 && t1 < 0) {
                for (const auto& r : classify::tight_realizations(t0, t1)) parity(r, "tight");
            } else {
                for (const auto& r : classify::strongly_exceptional(t0, t1)) {
                    parity(r, "se");
                    ck.expect(d3_in_table(r.d3), "se d3 " + r.str());
                }
            }
            for (long long n = 1; n <= 3; ++n)
                for (const auto& r : classify::twisting_realizations(t0, t1, n)) parity(r, "twisting");
        }
    return {8, "signature oracle, knot relabelling invariance, parity, d3 range", ck.ok(),
            ck.summary(std::to_string(rows) + " enumerated realisations")};
}

using Runner = Result (*)();
constexpr Runner kRunners[] = {c1_counts, c2_cfrac, c3_lutz, c4_golden,
                               c5_sweep, c6_classification, c7_twisting, c8_properties};

// Wall-clock budgets of the criteria that carry one.
double budget(int id) { return id == 1 ? 1.0 : (id == 5 ? 5.0 : 0.0); }

} // namespace

Result criterion(int id) {
    if (id < 1 || id > 8) throw Error(Errc::BadParams, "criterion id must be in 1..8");
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
        r = kRunners[id - 1]();
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget(id) > 0 && r.seconds >= budget(id)) {
        r.pass = false;
        r.detail += "; over the " + std::to_string(static_cast<int>(budget(id))) + " s budget";
    }
    return r;
}

std::vector<Result> run_all() {
    std::vector<Result> out;
    for (int id = 1; id <= 8; ++id) out.push_back(criterion(id));
    return out;
}

std::string line(const Result& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f s", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + " (" + secs +
           ")  " + r.detail;
}

} // namespace leghopf::acceptance

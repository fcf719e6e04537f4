#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "leghopf/classify.hpp"
#include "leghopf/families.hpp"

using namespace leghopf;
using namespace leghopf::families;
using classify::CompType;

namespace {

Rational q(long long p, long long d) { return Rational(Int(p), Int(d)); }

using Key = std::tuple<long long, long long, long long, long long, std::string>;

Key key(long long t0, long long r0, long long t1, long long r1, const Rational& d3) {
    return {t0, r0, t1, r1, d3.str()};
}

std::set<Key> se_keys(long long t0, long long t1) {
    std::set<Key> out;
    for (const auto& r : classify::strongly_exceptional(t0, t1)) out.insert(key(r.t0, r.r0, r.t1, r.r1, r.d3));
    return out;
}

// Rows computed from the instances of one family, grouped by (t0, t1).
std::map<std::pair<long long, long long>, std::multiset<Key>> computed_by_cell(const std::vector<FamilyId>& ids) {
    std::map<std::pair<long long, long long>, std::multiset<Key>> out;
    for (const auto& id : ids) {
        auto rep = verify(id);
        REQUIRE_MESSAGE(rep.ok(), rep.str());
        for (const auto& r : rep.computed) out[{r.t0, r.t1}].insert(key(r.t0, r.r0, r.t1, r.r1, r.d3));
    }
    return out;
}

} // namespace

TEST_SUITE("families") {

TEST_CASE("instantiate: B1(1,2,0) is a single (-1)-framed knot [known]") {
    auto d = instantiate(FamilyId::b1(1, 2, 0));
    CHECK(surgery::linking_matrix(d) == IntMatrix{{-1}});
    CHECK(surgery::tb_after(d, 0) == -3);
}

TEST_CASE("instantiate: D(2) [known]") {
    auto d = instantiate(FamilyId::d(2));
    CHECK(surgery::linking_matrix(d) == IntMatrix{{-1, -1, -1}, {-1, 0, -1}, {-1, -1, 0}});
    CHECK(surgery::tb_after(d, 1) == 0);
    CHECK(d.components[0].lk == IntVec{-1, -1, -1});
    CHECK(d.components[1].lk == IntVec{-2, -1, -1});
}

TEST_CASE("instantiate: C2_31(L) [known]") {
    CHECK(surgery::d3_after(instantiate(FamilyId::c2_31(Side::L))) == q(-1, 2));
}

TEST_CASE("expected: B1(1,2,0) [known]") {
    auto rows = expected(FamilyId::b1(1, 2, 0));
    REQUIRE(rows.size() == 2);
    for (const auto& r : rows) {
        CHECK(r.t0 == -3);
        CHECK(r.r0 == 0);
        CHECK(r.t1 == 2);
        CHECK(std::llabs(r.r1) == 1);
        CHECK(r.d3 == q(1, 2));
        CHECK(r.type0 == CompType::Loose);
        CHECK(r.type1 == CompType::Exceptional);
    }
    CHECK(rows[0].r1 == -rows[1].r1);
}

TEST_CASE("expected: D(5) [known]") {
    std::set<std::pair<long long, long long>> rots;
    for (const auto& r : expected(FamilyId::d(5))) {
        CHECK(r.t0 == 0);
        CHECK(r.t1 == -3);
        CHECK(r.d3 == q(1, 2));
        CHECK(r.type0 == CompType::Loose);
        CHECK(r.type1 == CompType::Loose);
        rots.insert({r.r0, r.r1});
    }
    CHECK(rots == std::set<std::pair<long long, long long>>{{1, -4}, {-1, 4}});
}

TEST_CASE("expected: C4 with both parities even realises the d3 = -1/2 row [known]") {
    std::set<std::pair<long long, long long>> rots;
    for (const auto& r : expected(FamilyId::c4(1, 0, 0))) {
        CHECK(r.t0 == 3);
        CHECK(r.t1 == 3);
        CHECK(r.d3 == q(-1, 2));
        rots.insert({r.r0, r.r1});
    }
    CHECK(rots == std::set<std::pair<long long, long long>>{{4, 4}, {-4, -4}});
}

TEST_CASE("verify: the acceptance grid passes [known]") {
    auto grid = sweep_grid();
    CHECK(grid.size() > 300);
    for (const auto& id : grid) {
        auto rep = verify(id);
        CHECK_MESSAGE(rep.ok(), rep.str());
    }
}

TEST_CASE("verify: corrupted constants are caught [trivial]") {
    auto id = FamilyId::c2_31(Side::L);
    auto d = instantiate(id);
    d.components[0].tb -= 2;  // keeps parity, shifts tb
    auto rep = verify_diagram(id, d);
    CHECK_FALSE(rep.ok());
    bool saw_rows = false;
    for (const auto& m : rep.mismatches) saw_rows = saw_rows || m.field == "rows";
    CHECK(saw_rows);

    auto b1 = FamilyId::b1(2, 1, 3);
    auto e = instantiate(b1);
    e.lk_pre[0][1] = e.lk_pre[1][0] = e.lk_pre[0][1] + Rational(1);
    CHECK_FALSE(verify_diagram(b1, e).ok());

    auto dd = instantiate(FamilyId::d(4));
    dd.knots[1].rot = Int(2);  // tb=-1, rot=2 is not an unknot but keeps parity
    CHECK_FALSE(verify_diagram(FamilyId::d(4), dd).ok());
}

TEST_CASE("every instance presents S^3 [derived]") {
    for (const auto& id : sweep_grid()) {
        const Int det = exact::det(surgery::linking_matrix(instantiate(id)));
        CHECK_MESSAGE((det == 1 || det == -1), id.str());
    }
}

TEST_CASE("B1 determinants alternate with n [known]") {
    for (long long n = 0; n <= 7; ++n) {
        auto d = instantiate(FamilyId::b1(1, 1, n));
        const Int want = n % 2 == 0 ? -1 : 1;
        CHECK(exact::det(surgery::linking_matrix(d)) == want);
        CHECK(exact::det(surgery::extended_matrix(d, 0)) == want);
    }
}

TEST_CASE("component types follow the exceptional-unknot test [derived]") {
    for (const auto& id : sweep_grid())
        for (const auto& r : verify(id).computed) {
            const bool in_half = r.d3 == q(1, 2);
            CHECK((r.type0 == CompType::Exceptional) == (in_half && classify::exceptional_unknot_check(r.t0, r.r0)));
            CHECK((r.type1 == CompType::Exceptional) == (in_half && classify::exceptional_unknot_check(r.t1, r.r1)));
        }
}

TEST_CASE("C4 variants and parities cover the eight table rows [derived]") {
    std::vector<FamilyId> ids;
    for (int v = 1; v <= 4; ++v)
        for (long long n = 0; n <= 4; ++n)
            for (long long m = 0; m <= 4; ++m) ids.push_back(FamilyId::c4(v, n, m));
    auto cells = computed_by_cell(ids);
    CHECK(cells.size() == 25);
    for (const auto& [cell, rows] : cells) {
        std::set<Key> distinct(rows.begin(), rows.end());
        CHECK(rows.size() == 8);
        CHECK(distinct.size() == 8);
        CHECK(distinct == se_keys(cell.first, cell.second));
    }
}

TEST_CASE("C3 variants cover the table rows for t1 = 1 and t1 = 2 [derived]") {
    std::vector<FamilyId> ones, twos;
    for (long long n = 0; n <= 5; ++n) {
        ones.push_back(FamilyId::c3_t01(Side::L, n));
        ones.push_back(FamilyId::c3_t01(Side::R, n));
        for (int v = 1; v <= 3; ++v) twos.push_back(FamilyId::c3_t02(v, n));
    }
    for (const auto& [cell, rows] : computed_by_cell(ones)) {
        CHECK(cell.second == 1);
        CHECK(std::set<Key>(rows.begin(), rows.end()).size() == 4);
        CHECK(std::set<Key>(rows.begin(), rows.end()) == se_keys(cell.first, cell.second));
    }
    for (const auto& [cell, rows] : computed_by_cell(twos)) {
        CHECK(cell.second == 2);
        CHECK(std::set<Key>(rows.begin(), rows.end()).size() == 6);
        CHECK(std::set<Key>(rows.begin(), rows.end()) == se_keys(cell.first, cell.second));
    }
}

TEST_CASE("B1 instances with k + l fixed cover the b1 rows [derived]") {
    for (long long K = 1; K <= 4; ++K)
        for (long long n = 0; n <= 3; ++n) {
            std::vector<FamilyId> ids;
            for (long long k = 0; k <= K; ++k) ids.push_back(FamilyId::b1(k, K - k, n));
            auto cells = computed_by_cell(ids);
            REQUIRE(cells.size() == 1);
            const auto& [cell, rows] = *cells.begin();
            CHECK(std::set<Key>(rows.begin(), rows.end()) == se_keys(cell.first, cell.second));
        }
}

TEST_CASE("B2 instances with k + l fixed cover the t1 = 1 rows [derived]") {
    for (long long K = 2; K <= 6; ++K) {
        std::vector<FamilyId> ids;
        for (long long k = 0; k <= K; ++k) ids.push_back(FamilyId::b2(k, K - k));
        auto cells = computed_by_cell(ids);
        REQUIRE(cells.size() == 1);
        const auto& [cell, rows] = *cells.begin();
        CHECK(cell == std::make_pair(1 - K, 1LL));
        CHECK(std::set<Key>(rows.begin(), rows.end()) == se_keys(cell.first, cell.second));
    }
}

TEST_CASE("C2 diagrams give the small cells [known]") {
    std::set<Key> c22;
    for (Side s : {Side::L, Side::R})
        for (const auto& r : verify(FamilyId::c2_22(s)).computed) c22.insert(key(r.t0, r.r0, r.t1, r.r1, r.d3));
    CHECK(c22 == se_keys(2, 2));
    auto r = verify(FamilyId::c2_31(Side::R)).computed;
    REQUIRE(r.size() == 1);
    CHECK(key(r[0].t0, r[0].r0, r[0].t1, r[0].r1, r[0].d3) == key(3, 0, 1, 0, q(3, 2)));
}

TEST_CASE("strongly exceptional instances leave no (+1)-surgery uncancelled [known]") {
    for (const auto& id : sweep_grid()) {
        auto c = cancellation(id);
        // The Lutz diagrams carry no link and are overtwisted by design.
        if (id.kind == Kind::LUTZ_NEG || id.kind == Kind::LUTZ_POS) {
            CHECK_MESSAGE(c.uncancelled() > 0, id.str());
            continue;
        }
        CHECK_MESSAGE(c.uncancelled() == 0, id.str());
        CHECK(c.plus_knots >= c.pairs.size());
    }
}

TEST_CASE("ids: names, parsing and parameter ranges [trivial]") {
    CHECK(FamilyId::b1(1, 2, 0).str() == "B1(1,2,0)");
    CHECK(FamilyId::c4(2, 1, 0).str() == "C4(2,1,0)");
    CHECK(FamilyId::c2_31(Side::L).str() == "C2_31(L)");
    CHECK(FamilyId::lutz_pos().str() == "LUTZ_POS");
    CHECK(parse_kind("C3_T02") == Kind::C3_T02);
    CHECK_THROWS_AS(parse_kind("B3"), Error);
    auto bad = [](const FamilyId& id) {
        try {
            check_params(id);
        } catch (const Error& e) {
            return e.code() == Errc::BadParams;
        }
        return false;
    };
    CHECK(bad(FamilyId::b1(0, 0, 1)));
    CHECK(bad(FamilyId::d(1)));
    CHECK(bad(FamilyId::c3_t02(4, 0)));
    CHECK(bad(FamilyId::c4(0, 0, 0)));
    CHECK(bad(FamilyId::b2(-1, 0)));
    CHECK_FALSE(bad(FamilyId::b2(0, 0)));
    CHECK(expected(FamilyId::lutz_neg()).empty());
}

}

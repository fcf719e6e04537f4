#pragma once

// Parametric surgery diagrams realising the strongly exceptional Legendrian
// Hopf links, with their closed-form expected invariants.

#include <string>
#include <utility>
#include <vector>

#include "leghopf/classify.hpp"
#include "leghopf/surgery.hpp"

namespace leghopf::families {

enum class Kind { B1, B2, C2_31, C2_22, C3_T01, C3_T02, C4, D, LUTZ_NEG, LUTZ_POS };

enum class Side { L, R };

struct FamilyId {
    Kind kind = Kind::B1;
    long long k = 0, l = 0, n = 0, m = 0;
    Side side = Side::L;
    int variant = 1;

    static FamilyId b1(long long k, long long l, long long n) { return {Kind::B1, k, l, n}; }
    static FamilyId b2(long long k, long long l) { return {Kind::B2, k, l}; }
    static FamilyId c2_31(Side s) { return {Kind::C2_31, 0, 0, 0, 0, s}; }
    static FamilyId c2_22(Side s) { return {Kind::C2_22, 0, 0, 0, 0, s}; }
    static FamilyId c3_t01(Side s, long long n) { return {Kind::C3_T01, 0, 0, n, 0, s}; }
    static FamilyId c3_t02(int v, long long n) { return {Kind::C3_T02, 0, 0, n, 0, Side::L, v}; }
    static FamilyId c4(int v, long long n, long long m) { return {Kind::C4, 0, 0, n, m, Side::L, v}; }
    static FamilyId d(long long n) { return {Kind::D, 0, 0, n}; }
    static FamilyId lutz_neg() { return {Kind::LUTZ_NEG}; }
    static FamilyId lutz_pos() { return {Kind::LUTZ_POS}; }

    std::string str() const;  // e.g. "B1(1,2,0)", "C4(2,1,0)", "C2_31(L)"
};

const char* kind_name(Kind k);
Kind parse_kind(const std::string& s);  // throws BadParams

struct ExpectedRow {
    long long t0 = 0, r0 = 0, t1 = 0, r1 = 0;
    Rational d3;
    classify::CompType type0 = classify::CompType::Loose, type1 = classify::CompType::Loose;

    std::string str() const;
    friend bool operator==(const ExpectedRow&, const ExpectedRow&) = default;
};

// Throws BadParams outside the family's parameter range.
void check_params(const FamilyId& id);

surgery::SurgeryDiagram instantiate(const FamilyId& id);

// The realisation pair (or single row) of the table that the family
// instance realises; empty for the two Lutz diagrams (no link).
std::vector<ExpectedRow> expected(const FamilyId& id);

// Ambient d3 of the surgered manifold.
Rational expected_d3(const FamilyId& id);

// Which contact (+1)-surgeries are cancelled by contact (-1)-surgeries on
// link components or their Legendrian push-offs.
struct Cancellation {
    std::vector<std::pair<std::size_t, std::string>> pairs;  // (+1 knot index, canceller)
    std::size_t plus_knots = 0;
    // Uncancelled (+1)-surgeries on a tb = -1 unknot that leave the tight
    // S^1 x S^2 behind.
    std::size_t tight_residual = 0;

    std::size_t uncancelled() const { return plus_knots - pairs.size() - tight_residual; }
};

Cancellation cancellation(const FamilyId& id);

struct Mismatch {
    std::string field, got, want;
};

struct VerifyReport {
    FamilyId id;
    std::vector<ExpectedRow> computed;  // instance and its simultaneous reversal
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
    std::string str() const;
};

VerifyReport verify(const FamilyId& id);

// Same checks against an explicitly supplied diagram (negative controls).
VerifyReport verify_diagram(const FamilyId& id, const surgery::SurgeryDiagram& d);

// The parameter grid of the acceptance sweep.
std::vector<FamilyId> sweep_grid();

} // namespace leghopf::families

#pragma once

// Enumerators for the classification of Legendrian Hopf links in S^3 by
// their classical invariants, plus the closed forms of the contact-cut models.

#include <string>
#include <utility>
#include <vector>

#include "leghopf/exact.hpp"

namespace leghopf::classify {

enum class CompType { TightAmbient, Loose, Exceptional };

const char* comp_type_name(CompType t);       // "tight", "loose", "exc"

struct Realization {
    long long t0 = 0, r0 = 0, t1 = 0, r1 = 0;
    Rational d3{-1, 2};
    long long twisting = 0;
    CompType type0 = CompType::Loose, type1 = CompType::Loose;
    std::string source;  // case label, e.g. "b1", "c3", "e"

    std::string str() const;  // "(t0,r0,t1,r1) d3=.. type0/type1"
};

// Ordering on (t0, r0, t1, r1, d3); the key used for set comparisons.
bool same_invariants(const Realization& a, const Realization& b);
bool invariants_less(const Realization& a, const Realization& b);
void sort_unique(std::vector<Realization>& rows);

// Unknot (tb, rot) with tb >= 1 and |rot| = tb - 1.
bool exceptional_unknot_check(long long tb, long long rot);

// Exceptional unknots only live in xi_{1/2}, so the ambient d3 decides too.
CompType component_type(long long tb, long long rot, const Rational& d3);

std::vector<Realization> tight_realizations(long long t0, long long t1);
std::vector<Realization> strongly_exceptional(long long t0, long long t1);

// Twisting case at an explicit cut index p (the user-facing parameter is the
// twisting n; see twisting_realizations).
std::vector<Realization> realizations_at_index(long long t0, long long t1, long long p);
long long cut_index_for_twisting(long long t0, long long t1, long long n);
std::vector<Realization> twisting_realizations(long long t0, long long t1, long long n);

bool loose_realization_exists(long long t0, long long r0, long long t1, long long r1,
                              const Rational& d);

enum class Move { StabPlus, StabMinus, SumK10 };
const char* move_name(Move m);

std::vector<Move> loose_plan(std::pair<long long, long long> start,
                             std::pair<long long, long long> target);
std::pair<long long, long long> replay(std::pair<long long, long long> start,
                                       const std::vector<Move>& plan);

struct TorusKnotSpec {
    long long a = 1, b = 1;
    int orient = 1;  // +1 or -1
    long long p = 0;
};

std::pair<long long, long long> torus_knot_invariants(const TorusKnotSpec& s);

struct CutModel {
    Rational d3;
    long long sl_c = 0;
    long long hopf = 0;
};

CutModel cut_model_constants(long long p);

Rational d3_connected_sum(const Rational& d, const Rational& dp);

long long sl_pushoff(long long tb, long long rot);

// Signs are -1, 0, +1.
int min_alpha_index(int sign_a, int sign_b);

// Rows of the systematic table for t0, t1 >= 1 (roles swapped so t0 >= t1),
// instantiated at (t0, t1).  The (1,1) cell is the integral-family case and
// is not covered by the table.
std::vector<Realization> summary_patterns(long long t0, long long t1);

// Known misprint in the stated r0 range for case (b1).
const char* b1_range_note();

} // namespace leghopf::classify

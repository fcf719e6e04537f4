#pragma once

// Contact (+-1)-surgery diagrams in (S^3, xi_st) and the classical invariants
// of Legendrian link components after surgery.

#include <string>
#include <vector>

#include "leghopf/exact.hpp"

namespace leghopf::surgery {

struct SurgeryKnot {
    Int tb;
    Int rot;
    int coeff = -1;  // contact surgery coefficient, +1 or -1
};

struct ComponentKnot {
    Int tb;
    Int rot;
    IntVec lk;  // linking with each surgery knot
    std::string orientation = "cw";
};

struct SurgeryDiagram {
    std::vector<SurgeryKnot> knots;
    IntMatrix offdiag;  // lk(K_i, K_j); the diagonal is ignored
    std::vector<ComponentKnot> components;
    std::vector<RatVec> lk_pre;  // pre-surgery component-component linking
    bool s3 = true;

    // Shape and parity checks; throws InvalidDiagram.
    void validate() const;
};

IntMatrix linking_matrix(const SurgeryDiagram& d);
IntMatrix extended_matrix(const SurgeryDiagram& d, std::size_t i);
IntVec rot_vector(const SurgeryDiagram& d);

Rational tb_after(const SurgeryDiagram& d, std::size_t i);
Rational rot_after(const SurgeryDiagram& d, std::size_t i);
Rational lk_after(const SurgeryDiagram& d, std::size_t i, std::size_t j);

struct D3Terms {
    Rational c2;
    int sigma = 0;
    int chi = 1;
    int q = 0;
    Rational d3;
};

D3Terms d3_terms(const SurgeryDiagram& d);
Rational d3_after(const SurgeryDiagram& d);

struct ParityReport {
    bool applicable = false;  // only meaningful when |det M| = 1
    std::vector<Rational> sums;  // tb + rot per component
    bool ok = true;
};

// Throws ParityViolation when some tb + rot is not an odd integer.
ParityReport parity_check(const SurgeryDiagram& d);

// Everything at once, for reporting.
struct Summary {
    Int det;
    D3Terms d3;
    std::vector<Rational> tb, rot;
    std::vector<std::vector<Rational>> lk;  // lk_after, diagonal left at 0
    ParityReport parity;
};

Summary summarize(const SurgeryDiagram& d);

// Both components reversed simultaneously: negate rot_pre and lk_vec.
SurgeryDiagram reversed_components(const SurgeryDiagram& d);

// Change of auxiliary orientation of surgery knot j; leaves every output fixed.
SurgeryDiagram reorient_knot(const SurgeryDiagram& d, std::size_t j);

// Simultaneous relabelling of surgery knots: new index i holds old perm[i].
SurgeryDiagram permute_knots(const SurgeryDiagram& d, const std::vector<std::size_t>& perm);

} // namespace leghopf::surgery

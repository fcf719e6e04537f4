#pragma once

// Deliberately naive reference computations, independent of the core
// algorithms, used by the acceptance suite and the tests.

#include <vector>

#include "leghopf/exact.hpp"

namespace leghopf::oracle {

// Laplace expansion along the first row; exponential, fine for n <= 7.
Int cofactor_det(const IntMatrix& m);

// Characteristic polynomial det(x I - M), coefficients low to high.
std::vector<BigQ> char_poly(const IntMatrix& m);

// Positive minus negative eigenvalues, counted with multiplicity by Sturm
// sequences on the characteristic polynomial and its repeated gcds with
// derivatives.
int sturm_signature(const IntMatrix& m);

// r0 - 1/(r1 - 1/(... - 1/rk)) evaluated top-down as a nested fraction.
BigQ nested_fraction(const std::vector<BigQ>& entries);

} // namespace leghopf::oracle

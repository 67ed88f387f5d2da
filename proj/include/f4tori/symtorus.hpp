#pragma once

#include <optional>

#include "f4tori/extweyl.hpp"

namespace f4tori {

// Exponent data for (H n)^m: coordinate i of the torus part of (H n)^m is
// prod_j lambda_j^{C[i][j]}, times the diagonal sign h_part (valid when the
// underlying Weyl element has w^m = 1 so that n^m lies in the diagonal
// subgroup; otherwise h_part is empty and the residue n^m is kept open).
struct PowerFormula {
    Mat4 exponents;
    std::optional<int> h_part;  // bits over h1..h4
    TitsElt residue;            // n^m
    long m = 0;
    int w = 0;
};

// Row-reading conjugation matrix: coordinate i of H^n is
// prod_j lambda_j^{B[i][j]} for any n with the given Weyl part.
Mat4 conj_matrix(const WeylGroup& w, int u);

PowerFormula power_formula(const TitsGroup& tg, const TitsElt& n, long m);

// The coset T*n^u with n the fixed lift of the order-4 obstruction word has
// constant fourth power: (H n^u)^4 = h3^u for every H. Returns the bits of
// h3^u after asserting the zero exponent matrix.
int constant_fourth_power(const TitsGroup& tg, const TitsElt& u);

// Both sides of the commutation criterion for a = H1 u1, b = H2 u2 with
// [u1, u2] = 1: a and b commute iff (B(u2) - I) x1 == (B(u1) - I) x2 on
// discrete logs. Returns the pair of matrices.
std::pair<Mat4, Mat4> commute_criterion(const WeylGroup& w, int u1, int u2);

}  // namespace f4tori

#pragma once

#include "f4tori/util.hpp"

namespace f4tori {

// Smith normal form of a 4x4 integer matrix: U*M*V = D with U,V unimodular and
// D diagonal, d1 | d2 | d3 | d4, all d_i >= 0.
struct SmithNF {
    Mat4 U, V, D;
    std::array<i64, 4> diag() const { return {D.a[0][0], D.a[1][1], D.a[2][2], D.a[3][3]}; }
    i128 det_abs() const {
        i128 p = 1;
        for (int i = 0; i < 4; ++i) p *= D.a[i][i];
        return p < 0 ? -p : p;
    }
};

SmithNF smith_normal_form(const Mat4& M);

// Invariant factors of Z^n / <diag entries> given arbitrary cyclic orders:
// the canonical d1 | d2 | ... form of Z_{m1} x ... x Z_{mk}.
std::vector<u64> invariant_factors_of_cyclics(std::vector<u64> orders);

}  // namespace f4tori

#include "f4tori/symtorus.hpp"

namespace f4tori {

Mat4 conj_matrix(const WeylGroup& w, int u) { return w.bmat(u); }

PowerFormula power_formula(const TitsGroup& tg, const TitsElt& n, long m) {
    const WeylGroup& w = tg.weyl();
    require(m >= 1, "power_formula needs a positive exponent");
    int u = tg.weyl_part(n);
    PowerFormula pf;
    pf.m = m;
    pf.w = u;
    Mat4 acc{};
    Mat4 pw = Mat4::identity();
    for (long t = 0; t < m; ++t) {
        acc = acc + pw;
        pw = pw * w.bmat(u);
    }
    pf.exponents = acc;
    pf.residue = TitsGroup::power(n, m);
    if (tg.is_h(pf.residue)) pf.h_part = tg.h_bits(pf.residue);
    return pf;
}

int constant_fourth_power(const TitsGroup& tg, const TitsElt& u) {
    TitsWord base;
    base.tokens = {21, 8, 3, 2};
    TitsElt n = tg.evaluate(base);
    TitsElt nu = TitsGroup::multiply(TitsGroup::multiply(u, n), TitsGroup::inverse(u));
    PowerFormula pf = power_formula(tg, nu, 4);
    require(pf.exponents == Mat4{}, "fourth power of the twisted coset is not constant");
    require(pf.h_part.has_value(), "fourth power did not land in the diagonal subgroup");
    TitsElt h3u = TitsGroup::multiply(TitsGroup::multiply(u, tg.h_gen(3)), TitsGroup::inverse(u));
    require(tg.h_bits(h3u) == *pf.h_part, "fourth power is not the twisted h3");
    return *pf.h_part;
}

std::pair<Mat4, Mat4> commute_criterion(const WeylGroup& w, int u1, int u2) {
    Mat4 lhs = w.bmat(u2);
    Mat4 rhs = w.bmat(u1);
    for (int i = 0; i < 4; ++i) {
        lhs.a[i][i] -= 1;
        rhs.a[i][i] -= 1;
    }
    return {lhs, rhs};
}

}  // namespace f4tori

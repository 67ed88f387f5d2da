#include "f4tori/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace f4tori {

namespace {

void swap_rows(Mat4& M, Mat4& U, int i, int j) {
    std::swap(M.a[i], M.a[j]);
    std::swap(U.a[i], U.a[j]);
}

void swap_cols(Mat4& M, Mat4& V, int i, int j) {
    for (int r = 0; r < 4; ++r) std::swap(M.a[r][i], M.a[r][j]);
    for (int r = 0; r < 4; ++r) std::swap(V.a[r][i], V.a[r][j]);
}

void addmul_row(Mat4& M, Mat4& U, int dst, int src, i64 f) {
    for (int c = 0; c < 4; ++c) M.a[dst][c] += f * M.a[src][c];
    for (int c = 0; c < 4; ++c) U.a[dst][c] += f * U.a[src][c];
}

void addmul_col(Mat4& M, Mat4& V, int dst, int src, i64 f) {
    for (int r = 0; r < 4; ++r) M.a[r][dst] += f * M.a[r][src];
    for (int r = 0; r < 4; ++r) V.a[r][dst] += f * V.a[r][src];
}

void negate_row(Mat4& M, Mat4& U, int i) {
    for (int c = 0; c < 4; ++c) M.a[i][c] = -M.a[i][c];
    for (int c = 0; c < 4; ++c) U.a[i][c] = -U.a[i][c];
}

}  // namespace

SmithNF smith_normal_form(const Mat4& M0) {
    Mat4 M = M0;
    Mat4 U = Mat4::identity();
    Mat4 V = Mat4::identity();

    for (int t = 0; t < 4; ++t) {
        // Move a nonzero entry of minimal magnitude into the pivot position.
        while (true) {
            int pi = -1, pj = -1;
            i64 best = 0;
            for (int i = t; i < 4; ++i)
                for (int j = t; j < 4; ++j) {
                    i64 v = std::llabs(M.a[i][j]);
                    if (v != 0 && (pi < 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // rest of the matrix is zero
            if (pi != t) swap_rows(M, U, t, pi);
            if (pj != t) swap_cols(M, V, t, pj);

            bool clean = true;
            for (int i = t + 1; i < 4; ++i) {
                if (M.a[i][t] != 0) {
                    addmul_row(M, U, i, t, -(M.a[i][t] / M.a[t][t]));
                    if (M.a[i][t] != 0) clean = false;
                }
            }
            for (int j = t + 1; j < 4; ++j) {
                if (M.a[t][j] != 0) {
                    addmul_col(M, V, j, t, -(M.a[t][j] / M.a[t][t]));
                    if (M.a[t][j] != 0) clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide every remaining entry; if not, mix that row in and retry.
            bool divides_all = true;
            for (int i = t + 1; i < 4 && divides_all; ++i)
                for (int j = t + 1; j < 4 && divides_all; ++j)
                    if (M.a[i][j] % M.a[t][t] != 0) {
                        addmul_row(M, U, t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (M.a[t][t] < 0) negate_row(M, U, t);
    }

    SmithNF r;
    r.U = U;
    r.V = V;
    r.D = M;
    return r;
}

std::vector<u64> invariant_factors_of_cyclics(std::vector<u64> orders) {
    std::vector<u64> v;
    for (u64 o : orders)
        if (o > 1) v.push_back(o);
    // Repeatedly replace (a, b) by (gcd, lcm) until pairwise divisibility holds.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j) {
                u64 g = std::gcd(v[i], v[j]);
                if (v[i] % v[j] != 0 && v[j] % v[i] != 0) {
                    u64 l = v[i] / g * v[j];
                    v[i] = g;
                    v[j] = l;
                    changed = true;
                }
            }
        std::erase_if(v, [](u64 x) { return x == 1; });
    }
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace f4tori

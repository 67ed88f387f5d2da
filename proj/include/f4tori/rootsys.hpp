#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "f4tori/util.hpp"

namespace f4tori {

// A root of F4 in coordinates over the fundamental roots r1..r4.
struct Root {
    std::array<int, 4> c{};
    int index = 0;  // signed, in +-{1..24}; positive roots carry positive index
    bool is_long = false;
    int height = 0;
};

// The F4 root system: 48 roots, total order on positives, special/extraspecial
// pairs and the Chevalley structure constants N_{r,s} with positive sign at
// every extraspecial pair. Internally roots are indexed 0..47 with 0..23 the
// positive roots in catalog order and 24..47 their negatives.
class RootSystem {
  public:
    RootSystem();

    static constexpr int kRoots = 48;
    static constexpr int kPositive = 24;
    static constexpr int kDim = 52;  // 48 root vectors + 4 Cartan generators

    const Root& root(int signed_index) const;      // signed_index in +-{1..24}
    const Root& root_at(int internal) const { return roots_[internal]; }
    int internal_of(int signed_index) const;
    int signed_of(int internal) const { return internal < 24 ? internal + 1 : -(internal - 24 + 1); }
    int negate(int internal) const { return internal < 24 ? internal + 24 : internal - 24; }

    // Index of the root with the given coefficient vector, or -1.
    int find(const std::array<int, 4>& c) const;
    int sum(int i, int j) const;  // internal index of root_i + root_j, or -1

    // Twice the standard inner product (integral; long roots have norm 4 here).
    i64 ip2(int i, int j) const;
    // Cartan pairing <s, r-check> = 2(r,s)/(r,r).
    i64 pairing(int s, int r) const;
    // Reflection w_r(s), as an internal index.
    int reflect(int s, int r) const;

    // Total order on positive roots: height first, then first nonzero
    // coordinate of s - r positive.
    bool precede(int r, int s) const;

    // Largest k with s - k*r a root.
    int chain_down(int r, int s) const;

    // Structure constant N_{r,s} for roots with r+s a root.
    i64 nconst(int r, int s) const;

    // Special pairs (r,s): positive, r ≺ s, r+s a root. One extraspecial pair
    // per positive root of height >= 2.
    const std::vector<std::pair<int, int>>& special_pairs() const { return special_; }
    const std::vector<std::pair<int, int>>& extraspecial_pairs() const { return extraspecial_; }

    // Lie bracket of basis elements of the 52-dim algebra. Basis order:
    // 0..47 the root vectors e_i, 48..51 the Cartan elements h_{r1}..h_{r4}.
    // Returns the (sparse) coefficient vector of [x, y].
    std::array<i64, kDim> bracket(int x, int y) const;

    // Coefficients of the coroot of root i over the fundamental coroots.
    std::array<i64, 4> coroot(int i) const;

    // Exhaustive Jacobi check over all basis triples; returns the number of
    // failing triples (0 for a correct table).
    long jacobi_defect() const;

    // Cartan matrix C[i][j] = <r_j, r_i-check>.
    Mat4 cartan() const;

    std::string roots_json() const;
    std::string nconst_json() const;

  private:
    std::vector<Root> roots_;                  // 48, internal order
    std::array<std::array<int8_t, 48>, 48> sum_{};   // sum_[i][j] = index+1 or 0
    std::array<std::array<int8_t, 48>, 48> n_{};     // N_{i,j}, 0 when undefined
    std::vector<std::pair<int, int>> special_, extraspecial_;

    void build_roots();
    void build_constants();
    i64 nconst_reduce(int x, int y, std::array<std::array<int8_t, 48>, 48>& table,
                      std::array<std::array<uint8_t, 48>, 48>& known) const;
};

}  // namespace f4tori

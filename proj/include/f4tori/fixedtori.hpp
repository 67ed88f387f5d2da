#pragma once

#include <optional>
#include <unordered_set>

#include "f4tori/extweyl.hpp"
#include "f4tori/gfq.hpp"
#include "f4tori/snf.hpp"

namespace f4tori {

using Vec4 = std::array<u64, 4>;

// Element H*t of the normalizer, with the diagonal part of t folded into the
// coordinates: x is the discrete-log tuple of H and w indexes the Weyl part,
// the group element being H * canonical_lift(w).
struct NormElt {
    Vec4 x{};
    uint16_t w = 0;
    bool operator==(const NormElt& o) const { return w == o.w && x == o.x; }
};

struct NormEltHash {
    size_t operator()(const NormElt& e) const {
        u64 h = 0x9e3779b97f4a7c15ull ^ e.w;
        for (u64 v : e.x) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return (size_t)h;
    }
};

// The sigma-n fixed torus over F_{q^k} together with normalizer arithmetic.
// sigma acts on discrete logs by multiplication with q, conjugation by a Tits
// element acts by its B matrix, and membership of H*u follows the twisted
// fixed-point equation H = H^{sigma n} [n, u].
class TorusCtx {
  public:
    TorusCtx(const TitsGroup& tg, const TitsElt& n, i64 q, int k);

    const TitsGroup& tits() const { return tg_; }
    const WeylGroup& weyl() const { return tg_.weyl(); }
    const Field& field() const { return f_; }
    const TitsElt& lift_n() const { return n_; }
    int weyl_of_n() const { return wn_; }

    u64 mod() const { return f_.group_order(); }
    const std::vector<u64>& invariant_factors() const { return inv_factors_; }
    u128 torus_order() const { return torus_order_; }
    const std::vector<Vec4>& torus_generators() const { return tgens_; }
    const std::vector<u64>& torus_generator_orders() const { return tgen_orders_; }

    Vec4 h_dlog(int bits) const;
    Vec4 sigma_n(const Vec4& x) const;  // x -> q * B(w_n) * x
    bool in_torus(const Vec4& x) const;

    // Fold an arbitrary Tits element into (diagonal dlog, Weyl index).
    NormElt fold(const TitsElt& t) const;
    NormElt make(const Vec4& h, const TitsElt& t) const;

    NormElt identity() const { return NormElt{}; }
    NormElt mul(const NormElt& a, const NormElt& b) const;
    NormElt inv(const NormElt& a) const;
    long element_order(const NormElt& a) const;

    // Twisted commutator bits: [n, lift(u)] must be diagonal for u in C_W(w_n).
    std::optional<int> comm_bits(int u) const;

    // Membership of the element (x, u) in the sigma-n fixed normalizer.
    bool is_member(const NormElt& e) const;
    // One solution H of the membership equation for Weyl part u, if the
    // equation is solvable in this field.
    std::optional<Vec4> solve_member(int u) const;
    // Solvability of the membership equation over F_{q^{2k}} (arithmetic only).
    bool solvable_doubled(int u) const;

    std::vector<Vec4> torus_elements() const;  // all |T| of them

    // Subgroup closure with an element cap; throws if the cap is exceeded.
    std::vector<NormElt> closure(const std::vector<NormElt>& gens, size_t cap = 10000000) const;

    // Count and collect elements with trivial Weyl part.
    static std::vector<NormElt> torus_intersection(const std::vector<NormElt>& group);

  private:
    const TitsGroup& tg_;
    TitsElt n_;
    int wn_;
    Field f_;
    Mat4 qB_minus_I_;
    SmithNF snf_;
    std::vector<u64> inv_factors_;
    u128 torus_order_;
    std::vector<Vec4> tgens_;
    std::vector<u64> tgen_orders_;
    mutable std::unordered_map<int, std::optional<int>> comm_cache_;

    std::optional<Vec4> solve_linear(const Vec4& c) const;
};

// Invariant factors of q*B(w) - I over Z (field-independent).
std::vector<i64> torus_invariants_of(const WeylGroup& w, int u, i64 q);
u128 torus_order_of(const WeylGroup& w, int u, i64 q);

}  // namespace f4tori

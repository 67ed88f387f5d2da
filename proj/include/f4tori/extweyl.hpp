#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "f4tori/weylgrp.hpp"

namespace f4tori {

// Element of the extended Weyl group as a signed monomial map on the 48 root
// vectors: e_s -> sign * e_{target}. Entry m[s] = +-(target+1).
struct TitsElt {
    std::array<int8_t, 48> m{};

    bool operator==(const TitsElt& o) const { return m == o.m; }
    int target(int s) const { return std::abs(m[s]) - 1; }
    int sign(int s) const { return m[s] > 0 ? 1 : -1; }
};

struct TitsEltHash {
    size_t operator()(const TitsElt& t) const {
        size_t h = 1469598103934665603ull;
        for (int8_t v : t.m) {
            h ^= (uint8_t)v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Token stream for elements written as words in h1..h4, n1..n24 and the fixed
// lift n0 of the central involution.
struct TitsWord {
    // tokens: 1..24 = n_r, -1..-4 = h_r, 0 = n0
    std::vector<int> tokens;
};

class TitsGroup {
  public:
    explicit TitsGroup(const WeylGroup& w);

    const WeylGroup& weyl() const { return w_; }

    static TitsElt identity();
    static TitsElt multiply(const TitsElt& a, const TitsElt& b);
    static TitsElt inverse(const TitsElt& a);
    static TitsElt power(const TitsElt& a, long e);

    const TitsElt& n_gen(int r) const { return n_[r - 1]; }  // r in 1..24
    const TitsElt& h_gen(int r) const { return h_[r - 1]; }
    const TitsElt& n0() const { return n0_; }
    const std::vector<int>& n0_word() const { return n0_word_; }

    TitsElt h_element(int bits) const;       // bits over h1..h4
    int weyl_part(const TitsElt& t) const;   // index in W
    // Sign bits of an element of the diagonal subgroup (throws otherwise).
    int h_bits(const TitsElt& t) const;
    bool is_h(const TitsElt& t) const;

    // Product of n-generators along the fixed shortest word of w.
    const TitsElt& canonical_lift(int w) const { return lift_[w]; }

    // canonical_lift(u) * canonical_lift(v) = h(cocycle(u,v)) * canonical_lift(uv)
    int cocycle(int u, int v) const;

    // Sign eta with n_s n_r n_s^{-1} = n_{w_s(r)}(eta).
    int eta(int s, int r) const;  // internal root indices

    TitsElt evaluate(const TitsWord& word) const;
    static long element_order(const TitsElt& t);

    // Size of <n1..n4> by closure (cached after first call).
    size_t closure_order() const;

    std::string dump_json(bool with_cocycle) const;

  private:
    const WeylGroup& w_;
    std::array<TitsElt, 24> n_, ninv_, h_;
    TitsElt n0_;
    std::vector<int> n0_word_;
    std::vector<TitsElt> lift_;
    std::unordered_map<TitsElt, int, TitsEltHash> h_bits_;
    mutable std::vector<uint8_t> coc_;  // 1152*1152, built on demand
    mutable size_t closure_order_ = 0;

    void build_generators();
    void build_lifts();
};

}  // namespace f4tori

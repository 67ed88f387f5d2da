#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "f4tori/util.hpp"

namespace f4tori {

// F_{q^k} for odd prime powers q, in discrete-log form: nonzero elements are
// exponents of a fixed primitive generator g, so multiplication, powers and
// Frobenius (x -> x^q, i.e. e -> q*e) are exponent arithmetic mod q^k - 1.
// A concrete polynomial realization (deterministic irreducible polynomial,
// least primitive generator) is materialized on demand for cross-checks.
class Field {
  public:
    Field(i64 q, int k, i64 max_q = 13);

    i64 q() const { return q_; }
    int k() const { return k_; }
    u64 group_order() const { return order_; }  // q^k - 1

    u64 mul(u64 a, u64 b) const { return addmod(a, b, order_); }
    u64 inv(u64 a) const { return negmod(a, order_); }
    u64 pow(u64 a, i64 e) const;
    u64 frobenius(u64 a) const { return mulmod(a % order_, (u64)(q_ % (i64)order_), order_); }
    u64 minus_one() const { return order_ / 2; }
    u64 element_order(u64 a) const { return order_ / std::gcd((u64)order_, a); }

    // zeta with zeta^m = -1, chosen as g^{(q^k-1)/(2m)}; m may be negative
    // (the inverse root is used). Throws when 2|m| does not divide q^k - 1.
    u64 root_of_minus_one(i64 m) const;
    bool root_of_minus_one_exists(i64 m) const;

    // --- polynomial realization, for exactness cross-checks ---
    struct Poly {
        std::vector<int> c;  // coefficients mod p, little-endian
    };
    void realize() const;
    bool realized() const { return realized_; }
    i64 char_p() const { return p_; }
    int degree() const { return deg_; }
    const std::vector<int>& modulus() const;
    Poly generator_poly() const;
    Poly to_poly(u64 dlog) const;   // g^dlog as a polynomial
    Poly poly_mul(const Poly& a, const Poly& b) const;
    Poly poly_pow(const Poly& a, u128 e) const;

  private:
    i64 q_;
    int k_;
    u64 order_;
    i64 p_;
    int deg_;

    mutable bool realized_ = false;
    mutable std::vector<int> mod_;       // irreducible polynomial over F_p
    mutable std::vector<int> gen_;       // primitive generator
    mutable std::vector<u64> factors_;   // prime factors of order_
};

bool is_odd_prime_power(i64 q, i64& p_out, int& e_out);

}  // namespace f4tori

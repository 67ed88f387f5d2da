#include "f4tori/fixedtori.hpp"

#include <algorithm>
#include <numeric>

namespace f4tori {

namespace {

Mat4 qb_minus_i(const WeylGroup& w, int u, i64 q) {
    Mat4 m = w.bmat(u);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.a[i][j] *= q;
    for (int i = 0; i < 4; ++i) m.a[i][i] -= 1;
    return m;
}

}  // namespace

std::vector<i64> torus_invariants_of(const WeylGroup& w, int u, i64 q) {
    SmithNF s = smith_normal_form(qb_minus_i(w, u, q));
    std::vector<i64> out;
    for (i64 d : s.diag())
        if (d > 1) out.push_back(d);
    return out;
}

u128 torus_order_of(const WeylGroup& w, int u, i64 q) {
    return smith_normal_form(qb_minus_i(w, u, q)).det_abs();
}

TorusCtx::TorusCtx(const TitsGroup& tg, const TitsElt& n, i64 q, int k)
    : tg_(tg), n_(n), wn_(tg.weyl_part(n)), f_(q, k) {
    qB_minus_I_ = qb_minus_i(weyl(), wn_, q);
    snf_ = smith_normal_form(qB_minus_I_);
    torus_order_ = snf_.det_abs();
    require(torus_order_ > 0, "fixed torus is not finite");

    u64 m = mod();
    for (int i = 0; i < 4; ++i) {
        i64 d = snf_.D.a[i][i];
        u64 g = std::gcd((u64)d, m);
        if (d > 1) inv_factors_.push_back((u64)d);
        if (g <= 1) continue;
        // Generator: V * e_i * (m/g); its order in the torus is g.
        Vec4 y{};
        y[i] = m / g;
        Vec4 x = apply_mat_mod(snf_.V, y, m);
        tgens_.push_back(x);
        tgen_orders_.push_back(g);
    }
    // The torus lives inside F_{q^k} exactly when every invariant factor
    // divides q^k - 1; callers pick k = |w| which always suffices.
    u128 count = 1;
    for (u64 g : tgen_orders_) count *= g;
    require(count == torus_order_, "field too small for the fixed torus; enlarge k");
    for (const Vec4& g : tgens_) require(in_torus(g), "torus generator fails the fixed equation");
}

Vec4 TorusCtx::h_dlog(int bits) const {
    Vec4 x{};
    for (int i = 0; i < 4; ++i)
        if (bits & (1 << i)) x[i] = mod() / 2;
    return x;
}

Vec4 TorusCtx::sigma_n(const Vec4& x) const {
    Vec4 qx;
    for (int i = 0; i < 4; ++i) qx[i] = mulmod(x[i], (u64)(f_.q() % (i64)mod()), mod());
    return apply_mat_mod(weyl().bmat(wn_), qx, mod());
}

bool TorusCtx::in_torus(const Vec4& x) const {
    Vec4 y = apply_mat_mod(qB_minus_I_, x, mod());
    return y == Vec4{};
}

NormElt TorusCtx::fold(const TitsElt& t) const {
    int w = tg_.weyl_part(t);
    TitsElt h = TitsGroup::multiply(t, TitsGroup::inverse(tg_.canonical_lift(w)));
    NormElt e;
    e.w = (uint16_t)w;
    e.x = h_dlog(tg_.h_bits(h));
    return e;
}

NormElt TorusCtx::make(const Vec4& h, const TitsElt& t) const {
    NormElt e = fold(t);
    for (int i = 0; i < 4; ++i) e.x[i] = addmod(e.x[i], h[i] % mod(), mod());
    return e;
}

NormElt TorusCtx::mul(const NormElt& a, const NormElt& b) const {
    NormElt r;
    r.w = (uint16_t)weyl().mul(a.w, b.w);
    Vec4 bx = apply_mat_mod(weyl().bmat(a.w), b.x, mod());
    Vec4 c = h_dlog(tg_.cocycle(a.w, b.w));
    for (int i = 0; i < 4; ++i) r.x[i] = addmod(addmod(a.x[i], bx[i], mod()), c[i], mod());
    return r;
}

NormElt TorusCtx::inv(const NormElt& a) const {
    NormElt r;
    r.w = (uint16_t)weyl().inverse(a.w);
    Vec4 c = h_dlog(tg_.cocycle(a.w, r.w));
    Vec4 t;
    for (int i = 0; i < 4; ++i) t[i] = negmod(addmod(a.x[i], c[i], mod()), mod());
    r.x = apply_mat_mod(weyl().bmat(r.w), t, mod());
    return r;
}

long TorusCtx::element_order(const NormElt& a) const {
    NormElt x = a;
    NormElt e = identity();
    long k = 1;
    while (!(x == e)) {
        x = mul(x, a);
        ++k;
        require(k < (long)1e7, "element order runaway");
    }
    return k;
}

std::optional<int> TorusCtx::comm_bits(int u) const {
    auto it = comm_cache_.find(u);
    if (it != comm_cache_.end()) return it->second;
    TitsElt lu = tg_.canonical_lift(u);
    TitsElt c = TitsGroup::multiply(TitsGroup::multiply(n_, lu),
                                    TitsGroup::multiply(TitsGroup::inverse(n_), TitsGroup::inverse(lu)));
    std::optional<int> r;
    if (tg_.is_h(c)) r = tg_.h_bits(c);
    comm_cache_[u] = r;
    return r;
}

bool TorusCtx::is_member(const NormElt& e) const {
    auto cb = comm_bits(e.w);
    if (!cb) return false;
    Vec4 rhs = sigma_n(e.x);
    Vec4 c = h_dlog(*cb);
    for (int i = 0; i < 4; ++i) rhs[i] = addmod(rhs[i], c[i], mod());
    return rhs == e.x;
}

std::optional<Vec4> TorusCtx::solve_linear(const Vec4& c) const {
    // Solve (qB - I) x = -c = c (c is 2-torsion) via the Smith form.
    u64 m = mod();
    Vec4 uc = apply_mat_mod(snf_.U, c, m);
    Vec4 y{};
    for (int i = 0; i < 4; ++i) {
        i64 d = snf_.D.a[i][i];
        u64 g = std::gcd((u64)d, m);
        if (uc[i] % g != 0) return std::nullopt;
        // d * y = uc (mod m): y = (uc/g) * inv(d/g) mod (m/g)
        u64 mg = m / g;
        i128 xx, yy;
        egcd128((i128)((u64)d / g % mg), (i128)mg, xx, yy);
        i128 inv = xx % (i128)mg;
        if (inv < 0) inv += mg;
        y[i] = mulmod(uc[i] / g % mg, (u64)inv, mg);
    }
    Vec4 x = apply_mat_mod(snf_.V, y, m);
    return x;
}

std::optional<Vec4> TorusCtx::solve_member(int u) const {
    auto cb = comm_bits(u);
    if (!cb) return std::nullopt;
    auto x = solve_linear(h_dlog(*cb));
    if (!x) return std::nullopt;
    NormElt e;
    e.w = (uint16_t)u;
    e.x = *x;
    require(is_member(e), "membership solution fails verification");
    return x;
}

bool TorusCtx::solvable_doubled(int u) const {
    auto cb = comm_bits(u);
    if (!cb) return false;
    u128 m2 = (u128)mod() * ((u128)mod() + 2);  // q^{2k} - 1
    for (int i = 0; i < 4; ++i) {
        // c entries are 0 or (q^{2k}-1)/2 according to the bit pattern.
        (void)i;
    }
    // U*c mod m2 with c_i in {0, m2/2}.
    std::array<u128, 4> c{};
    for (int i = 0; i < 4; ++i)
        if (*cb & (1 << i)) c[i] = m2 / 2;
    for (int i = 0; i < 4; ++i) {
        i128 s = 0;
        for (int j = 0; j < 4; ++j) s += (i128)snf_.U.a[i][j] * (i128)c[j] % (i128)m2;
        i128 r = s % (i128)m2;
        if (r < 0) r += m2;
        u128 g = (u128)gcd128((i128)(u128)snf_.D.a[i][i], (i128)m2);
        if (g == 0) g = m2;
        if ((u128)r % g != 0) return false;
    }
    return true;
}

std::vector<Vec4> TorusCtx::torus_elements() const {
    std::vector<Vec4> out{Vec4{}};
    for (size_t gi = 0; gi < tgens_.size(); ++gi) {
        std::vector<Vec4> next;
        next.reserve(out.size() * tgen_orders_[gi]);
        Vec4 step{};
        for (u64 j = 0; j < tgen_orders_[gi]; ++j) {
            for (const Vec4& b : out) {
                Vec4 v;
                for (int i = 0; i < 4; ++i) v[i] = addmod(b[i], step[i], mod());
                next.push_back(v);
            }
            for (int i = 0; i < 4; ++i) step[i] = addmod(step[i], tgens_[gi][i], mod());
        }
        out = std::move(next);
    }
    return out;
}

std::vector<NormElt> TorusCtx::closure(const std::vector<NormElt>& gens, size_t cap) const {
    std::unordered_set<NormElt, NormEltHash> seen;
    std::vector<NormElt> order;
    seen.insert(identity());
    order.push_back(identity());
    for (size_t i = 0; i < order.size(); ++i) {
        for (const NormElt& g : gens) {
            NormElt v = mul(order[i], g);
            if (seen.insert(v).second) {
                order.push_back(v);
                require(order.size() <= cap, "closure exceeded the element cap");
            }
        }
    }
    return order;
}

std::vector<NormElt> TorusCtx::torus_intersection(const std::vector<NormElt>& group) {
    std::vector<NormElt> out;
    for (const NormElt& e : group)
        if (e.w == 0) out.push_back(e);
    return out;
}

}  // namespace f4tori

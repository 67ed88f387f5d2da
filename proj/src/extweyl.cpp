#include "f4tori/extweyl.hpp"

#include <deque>
#include <unordered_set>

#include "json.hpp"

namespace f4tori {

namespace {

constexpr int kDim = RootSystem::kDim;
using Mat52 = std::vector<std::array<i64, kDim>>;  // row-major kDim x kDim

Mat52 ident52() {
    Mat52 m(kDim);
    for (int i = 0; i < kDim; ++i) m[i][i] = 1;
    return m;
}

Mat52 mul52(const Mat52& a, const Mat52& b) {
    Mat52 r(kDim);
    for (int i = 0; i < kDim; ++i)
        for (int k = 0; k < kDim; ++k) {
            i64 v = a[i][k];
            if (v == 0) continue;
            for (int j = 0; j < kDim; ++j) r[i][j] += v * b[k][j];
        }
    return r;
}

// exp(ad(c * e_root)) on the adjoint module, exact integer matrix.
Mat52 exp_ad(const RootSystem& rs, int root, i64 c) {
    Mat52 ad(kDim);
    for (int y = 0; y < kDim; ++y) {
        auto b = rs.bracket(root, y);
        for (int i = 0; i < kDim; ++i) ad[i][y] = c * b[i];
    }
    Mat52 acc = ident52();
    Mat52 pw = ad;
    i64 fact = 1;
    for (int k = 1; k <= 4; ++k) {
        fact *= k;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                require(pw[i][j] % fact == 0, "divided power not integral");
                acc[i][j] += pw[i][j] / fact;
            }
        pw = mul52(pw, ad);
    }
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) require(pw[i][j] == 0, "ad nilpotency bound exceeded");
    return acc;
}

}  // namespace

TitsGroup::TitsGroup(const WeylGroup& w) : w_(w) {
    build_generators();
    build_lifts();
}

TitsElt TitsGroup::identity() {
    TitsElt t;
    for (int i = 0; i < 48; ++i) t.m[i] = (int8_t)(i + 1);
    return t;
}

TitsElt TitsGroup::multiply(const TitsElt& a, const TitsElt& b) {
    TitsElt r;
    for (int s = 0; s < 48; ++s) {
        int t = b.target(s), sg = b.sign(s);
        int u = a.target(t);
        sg *= a.sign(t);
        r.m[s] = (int8_t)(sg * (u + 1));
    }
    return r;
}

TitsElt TitsGroup::inverse(const TitsElt& a) {
    TitsElt r;
    for (int s = 0; s < 48; ++s) {
        int t = a.target(s), sg = a.sign(s);
        r.m[t] = (int8_t)(sg * (s + 1));
    }
    return r;
}

TitsElt TitsGroup::power(const TitsElt& a, long e) {
    TitsElt base = e < 0 ? inverse(a) : a;
    long n = e < 0 ? -e : e;
    TitsElt r = identity();
    while (n) {
        if (n & 1) r = multiply(r, base);
        base = multiply(base, base);
        n >>= 1;
    }
    return r;
}

void TitsGroup::build_generators() {
    const RootSystem& rs = w_.roots();
    for (int r = 0; r < 24; ++r) {
        // n_r = x_r(1) x_{-r}(-1) x_r(1), as the adjoint action.
        Mat52 xp = exp_ad(rs, r, 1);
        Mat52 xm = exp_ad(rs, rs.negate(r), -1);
        Mat52 m = mul52(mul52(xp, xm), xp);
        TitsElt t;
        for (int s = 0; s < 48; ++s) {
            int found = -1;
            i64 sign = 0;
            for (int i = 0; i < 48; ++i) {
                if (m[i][s] != 0) {
                    require(found < 0, "n_r action is not monomial on a root vector");
                    found = i;
                    sign = m[i][s];
                }
            }
            require(found >= 0 && (sign == 1 || sign == -1), "n_r column is not a signed unit");
            for (int i = 48; i < kDim; ++i)
                require(m[i][s] == 0, "n_r mixes root vectors into the Cartan part");
            require(found == rs.reflect(s, r), "n_r does not act by the reflection");
            t.m[s] = (int8_t)(sign * (found + 1));
        }
        n_[r] = t;
        ninv_[r] = inverse(t);
        h_[r] = multiply(t, t);
        require(!(h_[r] == identity()), "n_r^2 must be nontrivial in odd characteristic");
    }

    for (int bits = 0; bits < 16; ++bits) {
        TitsElt t = identity();
        for (int i = 0; i < 4; ++i)
            if (bits & (1 << i)) t = multiply(t, h_[i]);
        h_bits_[t] = bits;
    }
    require(h_bits_.size() == 16, "h-subgroup is not elementary abelian of order 16");

    // Fixed lift of the central involution; the first word is validated against
    // the identities it must satisfy, with one fallback word.
    for (auto word : {std::vector<int>{21, 8, 6, 3}, std::vector<int>{1, 3, 14, 2}}) {
        TitsElt t = identity();
        for (int r : word) t = multiply(t, n_[r - 1]);
        if (w_.amat(weyl_part(t)) == Mat4::identity().negated() &&
            multiply(t, t) == identity()) {
            n0_ = t;
            n0_word_ = word;
            break;
        }
    }
    require(!n0_word_.empty(), "no valid lift of the central involution found");
}

void TitsGroup::build_lifts() {
    lift_.resize(WeylGroup::kOrder);
    for (int u = 0; u < WeylGroup::kOrder; ++u) {
        TitsElt t = identity();
        for (int g : w_.word(u)) t = multiply(t, n_[g - 1]);
        lift_[u] = t;
        require(weyl_part(t) == u, "canonical lift projects to the wrong element");
    }
}

TitsElt TitsGroup::h_element(int bits) const {
    TitsElt t = identity();
    for (int i = 0; i < 4; ++i)
        if (bits & (1 << i)) t = multiply(t, h_[i]);
    return t;
}

int TitsGroup::weyl_part(const TitsElt& t) const {
    RootPerm p;
    for (int s = 0; s < 48; ++s) p[s] = (uint8_t)t.target(s);
    return w_.index_of_perm(p);
}

bool TitsGroup::is_h(const TitsElt& t) const { return h_bits_.count(t) > 0; }

int TitsGroup::h_bits(const TitsElt& t) const {
    auto it = h_bits_.find(t);
    require(it != h_bits_.end(), "element is not in the diagonal subgroup");
    return it->second;
}

int TitsGroup::cocycle(int u, int v) const {
    if (coc_.empty()) {
        coc_.assign((size_t)WeylGroup::kOrder * WeylGroup::kOrder, 0);
        for (int a = 0; a < WeylGroup::kOrder; ++a)
            for (int b = 0; b < WeylGroup::kOrder; ++b) {
                TitsElt t = multiply(multiply(lift_[a], lift_[b]),
                                     inverse(lift_[w_.mul(a, b)]));
                coc_[(size_t)a * WeylGroup::kOrder + b] = (uint8_t)h_bits(t);
            }
    }
    return coc_[(size_t)u * WeylGroup::kOrder + v];
}

int TitsGroup::eta(int s, int r) const {
    const RootSystem& rs = w_.roots();
    require(s < 24, "eta: conjugating root must be positive");
    TitsElt c = multiply(multiply(n_[s], (r < 24 ? n_[r] : ninv_[rs.negate(r)])), ninv_[s]);
    // c = n_{w_s(r)}(eta); for a negative image use n_{-t}(x) = n_t(-x).
    int u = rs.reflect(r, s);
    if (u < 24) {
        if (c == n_[u]) return 1;
        if (c == ninv_[u]) return -1;
    } else {
        int t = rs.negate(u);
        if (c == n_[t]) return -1;
        if (c == ninv_[t]) return 1;
    }
    throw std::runtime_error("eta: conjugate is not a monomial generator");
}

TitsElt TitsGroup::evaluate(const TitsWord& word) const {
    TitsElt t = identity();
    for (int tok : word.tokens) {
        if (tok == 0)
            t = multiply(t, n0_);
        else if (tok > 0)
            t = multiply(t, n_[tok - 1]);
        else
            t = multiply(t, h_[-tok - 1]);
    }
    return t;
}

long TitsGroup::element_order(const TitsElt& t) {
    TitsElt x = t;
    TitsElt e = identity();
    long k = 1;
    while (!(x == e)) {
        x = multiply(x, t);
        ++k;
        require(k <= 96, "element order exceeded the group exponent bound");
    }
    return k;
}

size_t TitsGroup::closure_order() const {
    if (closure_order_) return closure_order_;
    std::unordered_set<TitsElt, TitsEltHash> seen;
    std::deque<TitsElt> queue;
    seen.insert(identity());
    queue.push_back(identity());
    while (!queue.empty()) {
        TitsElt u = queue.front();
        queue.pop_front();
        for (int g = 0; g < 4; ++g) {
            TitsElt v = multiply(u, n_[g]);
            if (seen.insert(v).second) queue.push_back(v);
        }
    }
    closure_order_ = seen.size();
    return closure_order_;
}

std::string TitsGroup::dump_json(bool with_cocycle) const {
    const RootSystem& rs = w_.roots();
    nlohmann::json j;
    nlohmann::json etas = nlohmann::json::array();
    for (int s = 0; s < 24; ++s)
        for (int r = 0; r < 48; ++r)
            etas.push_back({{"s", rs.signed_of(s)}, {"r", rs.signed_of(r)}, {"eta", eta(s, r)}});
    j["eta"] = etas;
    j["n0_word"] = n0_word_;
    if (with_cocycle) {
        // Row w1 of the table as a hex string: digit at position w2 is the
        // h-bit mask of lift(w1) lift(w2) lift(w1 w2)^{-1}.
        nlohmann::json rows = nlohmann::json::array();
        for (int a = 0; a < WeylGroup::kOrder; ++a) {
            std::string row(WeylGroup::kOrder, '0');
            for (int b = 0; b < WeylGroup::kOrder; ++b) {
                int v = cocycle(a, b);
                row[b] = v < 10 ? char('0' + v) : char('a' + v - 10);
            }
            rows.push_back(row);
        }
        j["h_cocycle_rows"] = rows;
    }
    return j.dump();
}

}  // namespace f4tori

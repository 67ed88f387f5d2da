#include "f4tori/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"

namespace f4tori {

namespace {

// Gram matrix scaled by 2: diag 4,4,2,2 for the Dynkin diagram r1 - r2 => r3 - r4.
constexpr i64 kGram2[4][4] = {
    {4, -2, 0, 0},
    {-2, 4, -2, 0},
    {0, -2, 2, -1},
    {0, 0, -1, 2},
};

i64 ip2_vec(const std::array<int, 4>& x, const std::array<int, 4>& y) {
    i64 s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += (i64)x[i] * kGram2[i][j] * y[j];
    return s;
}

int height_of(const std::array<int, 4>& c) { return c[0] + c[1] + c[2] + c[3]; }

bool dec_lex(const std::array<int, 4>& a, const std::array<int, 4>& b) {
    return a > b;  // lexicographically decreasing
}

}  // namespace

RootSystem::RootSystem() {
    build_roots();
    build_constants();
}

void RootSystem::build_roots() {
    std::set<std::array<int, 4>> all;
    std::vector<std::array<int, 4>> work;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 4> e{};
        e[i] = 1;
        all.insert(e);
        work.push_back(e);
    }
    // Close under the simple reflections.
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        for (int i = 0; i < 4; ++i) {
            std::array<int, 4> e{};
            e[i] = 1;
            i64 p = 2 * ip2_vec(v, e) / ip2_vec(e, e);
            auto w = v;
            w[i] -= (int)p;
            if (all.insert(w).second) work.push_back(w);
        }
    }
    require(all.size() == kRoots, "root closure did not produce 48 roots");

    std::vector<std::array<int, 4>> pos;
    for (const auto& v : all) {
        bool nonneg = true, nonpos = true;
        for (int x : v) {
            if (x < 0) nonneg = false;
            if (x > 0) nonpos = false;
        }
        require(nonneg != nonpos, "root with mixed signs");
        if (nonneg) pos.push_back(v);
    }
    require(pos.size() == kPositive, "expected 24 positive roots");

    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = height_of(a), hb = height_of(b);
        if (ha != hb) return ha < hb;
        return dec_lex(a, b);
    });

    roots_.resize(kRoots);
    for (int i = 0; i < kPositive; ++i) {
        Root r;
        r.c = pos[i];
        r.index = i + 1;
        r.height = height_of(pos[i]);
        r.is_long = ip2_vec(pos[i], pos[i]) == 4;
        roots_[i] = r;
        Root m = r;
        for (auto& x : m.c) x = -x;
        m.index = -(i + 1);
        m.height = -r.height;
        roots_[i + 24] = m;
    }

    // The numbering convention must reproduce the catalog anchors; abort loudly
    // if it does not.
    auto anchors_ok = roots_[7].c == std::array<int, 4>{1, 1, 1, 0} &&
                      roots_[15].c == std::array<int, 4>{0, 1, 2, 2} &&
                      roots_[20].c == std::array<int, 4>{1, 2, 3, 2};
    require(anchors_ok, "root numbering anchors r8/r16/r21 violated");

    for (int i = 0; i < kRoots; ++i)
        for (int j = 0; j < kRoots; ++j) {
            std::array<int, 4> s;
            for (int t = 0; t < 4; ++t) s[t] = roots_[i].c[t] + roots_[j].c[t];
            int k = find(s);
            sum_[i][j] = (int8_t)(k + 1);
        }

    int longs = 0;
    for (int i = 0; i < kPositive; ++i) longs += roots_[i].is_long;
    require(longs == 12, "expected 12 long positive roots");
}

const Root& RootSystem::root(int signed_index) const { return roots_[internal_of(signed_index)]; }

int RootSystem::internal_of(int signed_index) const {
    require(signed_index != 0 && std::abs(signed_index) <= 24, "root index out of range");
    return signed_index > 0 ? signed_index - 1 : -signed_index - 1 + 24;
}

int RootSystem::find(const std::array<int, 4>& c) const {
    for (int i = 0; i < kRoots; ++i)
        if (roots_[i].c == c) return i;
    return -1;
}

int RootSystem::sum(int i, int j) const { return (int)sum_[i][j] - 1; }

i64 RootSystem::ip2(int i, int j) const { return ip2_vec(roots_[i].c, roots_[j].c); }

i64 RootSystem::pairing(int s, int r) const {
    i64 num = 2 * ip2(s, r);
    i64 den = ip2(r, r);
    require(num % den == 0, "non-integral Cartan pairing");
    return num / den;
}

int RootSystem::reflect(int s, int r) const {
    i64 p = pairing(s, r);
    std::array<int, 4> c;
    for (int t = 0; t < 4; ++t) c[t] = roots_[s].c[t] - (int)p * roots_[r].c[t];
    int k = find(c);
    require(k >= 0, "reflection left the root system");
    return k;
}

bool RootSystem::precede(int r, int s) const {
    const Root &a = roots_[r], &b = roots_[s];
    if (a.height != b.height) return a.height < b.height;
    for (int t = 0; t < 4; ++t) {
        int d = b.c[t] - a.c[t];
        if (d != 0) return d > 0;
    }
    return false;
}

int RootSystem::chain_down(int r, int s) const {
    int k = 0;
    std::array<int, 4> c = roots_[s].c;
    while (true) {
        for (int t = 0; t < 4; ++t) c[t] -= roots_[r].c[t];
        if (find(c) < 0) break;
        ++k;
    }
    return k;
}

i64 RootSystem::nconst(int r, int s) const {
    require(sum(r, s) >= 0, "nconst queried for a non-root sum");
    return n_[r][s];
}

// Reduce an arbitrary pair to the table of positive special pairs using
// antisymmetry, N_{-r,-s} = -N_{r,s}, and the cyclic relation
// N_{a,b}/(c,c) = N_{b,c}/(a,a) for a+b+c = 0.
i64 RootSystem::nconst_reduce(int x, int y, std::array<std::array<int8_t, 48>, 48>& table,
                              std::array<std::array<uint8_t, 48>, 48>& known) const {
    require(sum(x, y) >= 0, "nconst_reduce: sum not a root");
    if (known[x][y]) return table[x][y];
    i64 v;
    bool xp = x < 24, yp = y < 24;
    if (xp && yp) {
        require(precede(y, x), "positive special pair requested before computation");
        require(known[y][x], "positive special pair not yet computed");
        v = -table[y][x];
    } else if (!xp && !yp) {
        v = -nconst_reduce(negate(x), negate(y), table, known);
    } else if (!xp && yp) {
        v = -nconst_reduce(negate(x), negate(y), table, known);
    } else {
        int u = sum(x, y);
        if (u < 24) {
            // N_{x,y} = (u,u)/(x,x) * N_{y,-u}
            i64 t = ip2(u, u) * nconst_reduce(y, negate(u), table, known);
            require(t % ip2(x, x) == 0, "sign propagation: non-integral value");
            v = t / ip2(x, x);
        } else {
            // N_{x,y} = (u,u)/(y,y) * N_{-u,x}
            i64 t = ip2(u, u) * nconst_reduce(negate(u), x, table, known);
            require(t % ip2(y, y) == 0, "sign propagation: non-integral value");
            v = t / ip2(y, y);
        }
    }
    table[x][y] = (int8_t)v;
    known[x][y] = 1;
    return v;
}

void RootSystem::build_constants() {
    for (int t = 0; t < kPositive; ++t) {
        if (roots_[t].height < 2) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int r = 0; r < kPositive; ++r)
            for (int s = 0; s < kPositive; ++s)
                if (r != s && sum(r, s) == t && precede(r, s)) pairs.emplace_back(r, s);
        require(!pairs.empty(), "positive root of height >= 2 without a special decomposition");
        auto es = *std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return precede(a.first, b.first);
        });
        extraspecial_.push_back(es);
        for (auto& p : pairs) special_.push_back(p);
    }

    std::array<std::array<int8_t, 48>, 48> table{};
    std::array<std::array<uint8_t, 48>, 48> known{};

    auto is_extraspecial = [&](const std::pair<int, int>& p) {
        return std::find(extraspecial_.begin(), extraspecial_.end(), p) != extraspecial_.end();
    };

    // Order special pairs by height of the sum (extraspecial first within a
    // height) so that every value needed by the propagation is available.
    std::vector<std::pair<int, int>> order = special_;
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        int ha = roots_[sum(a.first, a.second)].height;
        int hb = roots_[sum(b.first, b.second)].height;
        if (ha != hb) return ha < hb;
        bool ea = is_extraspecial(a), eb = is_extraspecial(b);
        if (ea != eb) return ea;
        return a < b;
    });

    auto extraspecial_of = [&](int t) -> std::pair<int, int> {
        for (auto& p : extraspecial_)
            if (sum(p.first, p.second) == t) return p;
        throw std::runtime_error("missing extraspecial pair");
    };

    for (auto [r, s] : order) {
        int t = sum(r, s);
        auto [r1, s1] = extraspecial_of(t);
        i64 v;
        if (r == r1 && s == s1) {
            v = chain_down(r, s) + 1;
        } else {
            // Jacobi for (e_{-r}, e_{r1}, e_{s1}), whose indices sum to s:
            //   N_{r1,s1} N_{-r,t} + [s1-r root] N_{s1,-r} N_{r1,s1-r}
            //                      + [r1-r root] N_{-r,r1} N_{s1,r1-r} = 0,
            // and N_{-r,t} = (s,s)/(t,t) N_{r,s}.
            i64 acc = 0;
            if (sum(s1, negate(r)) >= 0) {
                i64 a = nconst_reduce(s1, negate(r), table, known);
                i64 b = nconst_reduce(r1, sum(s1, negate(r)), table, known);
                acc += a * b;
            }
            if (sum(negate(r), r1) >= 0) {
                i64 a = nconst_reduce(negate(r), r1, table, known);
                i64 b = nconst_reduce(s1, sum(negate(r), r1), table, known);
                acc += a * b;
            }
            i64 n11 = table[r1][s1];
            require(n11 != 0, "extraspecial constant missing during propagation");
            i64 numer = -ip2(t, t) * acc;
            i64 denom = ip2(s, s) * n11;
            require(numer % denom == 0, "sign propagation inconsistency");
            v = numer / denom;
        }
        require(std::llabs(v) == chain_down(r, s) + 1, "|N| != p+1 after propagation");
        table[r][s] = (int8_t)v;
        known[r][s] = 1;
    }

    for (int x = 0; x < kRoots; ++x)
        for (int y = 0; y < kRoots; ++y)
            if (sum(x, y) >= 0) nconst_reduce(x, y, table, known);
    n_ = table;

    for (auto& [r, s] : extraspecial_) require(n_[r][s] > 0, "extraspecial sign not positive");
    for (int x = 0; x < kRoots; ++x)
        for (int y = 0; y < kRoots; ++y)
            if (sum(x, y) >= 0) {
                require(n_[x][y] != 0, "vanishing structure constant");
                require(n_[x][y] == -n_[y][x], "antisymmetry violated");
                require(std::llabs(n_[x][y]) <= 2, "structure constant out of range for F4");
            }
}

std::array<i64, 4> RootSystem::coroot(int i) const {
    // r-check = sum a_j * (r_j, r_j)/(r, r) * r_j-check
    std::array<i64, 4> c{};
    for (int j = 0; j < 4; ++j) {
        std::array<int, 4> e{};
        e[j] = 1;
        int je = find(e);
        i64 num = (i64)roots_[i].c[j] * ip2(je, je);
        i64 den = ip2(i, i);
        require(num % den == 0, "non-integral coroot");
        c[j] = num / den;
    }
    return c;
}

std::array<i64, RootSystem::kDim> RootSystem::bracket(int x, int y) const {
    std::array<i64, kDim> out{};
    bool xe = x < 48, ye = y < 48;
    if (!xe && !ye) return out;  // Cartan is abelian
    if (!xe && ye) {
        // [h_i, e_s] = <s, r_i-check> e_s
        std::array<int, 4> e{};
        e[x - 48] = 1;
        out[y] = pairing(y, find(e));
        return out;
    }
    if (xe && !ye) {
        std::array<int, 4> e{};
        e[y - 48] = 1;
        out[x] = -pairing(x, find(e));
        return out;
    }
    if (negate(x) == y) {
        auto c = coroot(x);
        for (int j = 0; j < 4; ++j) out[48 + j] = c[j];
        return out;
    }
    int s = sum(x, y);
    if (s >= 0) out[s] = n_[x][y];
    return out;
}

long RootSystem::jacobi_defect() const {
    // Precompute brackets of basis pairs as (index, coeff) lists.
    struct Term {
        int idx;
        i64 c;
    };
    std::vector<std::vector<std::vector<Term>>> tab(kDim, std::vector<std::vector<Term>>(kDim));
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y) {
            auto b = bracket(x, y);
            for (int i = 0; i < kDim; ++i)
                if (b[i] != 0) tab[x][y].push_back({i, b[i]});
        }
    long defects = 0;
    std::array<i64, kDim> acc{};
    for (int x = 0; x < kDim; ++x)
        for (int y = 0; y < kDim; ++y)
            for (int z = 0; z < kDim; ++z) {
                acc.fill(0);
                for (const Term& t : tab[y][z])
                    for (const Term& u : tab[x][t.idx]) acc[u.idx] += t.c * u.c;
                for (const Term& t : tab[z][x])
                    for (const Term& u : tab[y][t.idx]) acc[u.idx] += t.c * u.c;
                for (const Term& t : tab[x][y])
                    for (const Term& u : tab[z][t.idx]) acc[u.idx] += t.c * u.c;
                for (int i = 0; i < kDim; ++i)
                    if (acc[i] != 0) {
                        ++defects;
                        break;
                    }
            }
    return defects;
}

Mat4 RootSystem::cartan() const {
    Mat4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) c.a[i][j] = pairing(j, i);
    return c;
}

std::string RootSystem::roots_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < kRoots; ++i) {
        const Root& r = roots_[i];
        j.push_back({{"index", r.index},
                     {"coeffs", r.c},
                     {"length", r.is_long ? "long" : "short"}});
    }
    return j.dump(2);
}

std::string RootSystem::nconst_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (int x = 0; x < kRoots; ++x)
        for (int y = 0; y < kRoots; ++y)
            if (sum(x, y) >= 0)
                j.push_back({{"r", signed_of(x)}, {"s", signed_of(y)}, {"n", (int)n_[x][y]}});
    return j.dump(2);
}

}  // namespace f4tori

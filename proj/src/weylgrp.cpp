#include "f4tori/weylgrp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "json.hpp"

namespace f4tori {

namespace {

std::string perm_key(const RootPerm& p) { return std::string((const char*)p.data(), p.size()); }

RootPerm compose(const RootPerm& u, const RootPerm& v) {
    RootPerm r;
    for (int i = 0; i < 48; ++i) r[i] = u[v[i]];
    return r;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
    build_elements();
    build_classes();
}

void WeylGroup::build_elements() {
    // Reflection data for all 24 positive roots.
    std::array<RootPerm, 24> rperm;
    std::array<Mat4, 24> rmat;
    for (int r = 0; r < 24; ++r) {
        for (int i = 0; i < 48; ++i) rperm[r][i] = (uint8_t)rs_.reflect(i, r);
        Mat4 A;
        for (int j = 0; j < 4; ++j) {
            std::array<int, 4> e{};
            e[j] = 1;
            int img = rs_.reflect(rs_.find(e), r);
            for (int i = 0; i < 4; ++i) A.a[i][j] = rs_.root_at(img).c[i];
        }
        rmat[r] = A;
    }

    RootPerm idp;
    for (int i = 0; i < 48; ++i) idp[i] = (uint8_t)i;
    perm_.push_back(idp);
    amat_.push_back(Mat4::identity());
    word_.push_back({});
    index_[perm_key(idp)] = 0;
    id_ = 0;

    // BFS over right-multiplication by the simple reflections; gives shortest
    // words with deterministic tie-breaking.
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int g = 0; g < 4; ++g) {
            RootPerm p = compose(perm_[u], rperm[g]);
            auto key = perm_key(p);
            if (index_.count(key)) continue;
            int idx = (int)perm_.size();
            index_[key] = idx;
            perm_.push_back(p);
            amat_.push_back(amat_[u] * rmat[g]);
            auto w = word_[u];
            w.push_back(g + 1);
            word_.push_back(std::move(w));
            queue.push_back(idx);
        }
    }
    require((int)perm_.size() == kOrder, "W(F4) must have order 1152");

    for (int r = 0; r < 24; ++r) refl_[r] = index_.at(perm_key(rperm[r]));

    // B = D^-1 A D with D = diag(1,1,2,2); integral on all of W.
    for (int u = 0; u < kOrder; ++u) {
        static const i64 d[4] = {1, 1, 2, 2};
        Mat4 B;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                i64 v = amat_[u].a[i][j] * d[j];
                require(v % d[i] == 0, "exponent matrix not integral");
                B.a[i][j] = v / d[i];
            }
        bmat_.push_back(B);
    }

    mul_.assign(kOrder, std::vector<uint16_t>(kOrder));
    for (int u = 0; u < kOrder; ++u)
        for (int v = 0; v < kOrder; ++v)
            mul_[u][v] = (uint16_t)index_.at(perm_key(compose(perm_[u], perm_[v])));

    inv_.assign(kOrder, 0);
    for (int u = 0; u < kOrder; ++u) {
        RootPerm p;
        for (int i = 0; i < 48; ++i) p[perm_[u][i]] = (uint8_t)i;
        inv_[u] = (uint16_t)index_.at(perm_key(p));
    }

    order_.assign(kOrder, 0);
    for (int u = 0; u < kOrder; ++u) {
        int x = u, k = 1;
        while (x != id_) {
            x = mul_[x][u];
            ++k;
        }
        order_[u] = k;
    }

    Mat4 negI = Mat4::identity().negated();
    w0_ = -1;
    for (int u = 0; u < kOrder; ++u)
        if (amat_[u] == negI) {
            w0_ = u;
            break;
        }
    require(w0_ >= 0, "central involution not found");
}

int WeylGroup::from_word(const std::vector<int>& word) const {
    int u = id_;
    for (int r : word) {
        require(r >= 1 && r <= 24, "reflection index out of range");
        u = mul_[u][refl_[r - 1]];
    }
    return u;
}

int WeylGroup::index_of_perm(const RootPerm& p) const {
    auto it = index_.find(perm_key(p));
    require(it != index_.end(), "permutation is not an element of W");
    return it->second;
}

void WeylGroup::build_classes() {
    class_of_.assign(kOrder, -1);
    for (int u = 0; u < kOrder; ++u) {
        if (class_of_[u] >= 0) continue;
        int c = (int)class_reps_.size();
        class_reps_.push_back(u);
        int count = 0;
        for (int g = 0; g < kOrder; ++g) {
            int x = mul_[mul_[g][u]][inv_[g]];
            if (class_of_[x] < 0) {
                class_of_[x] = c;
                ++count;
            }
        }
        class_sizes_.push_back(count);
    }
}

std::vector<int> WeylGroup::centralizer(int u) const {
    std::vector<int> c;
    for (int x = 0; x < kOrder; ++x)
        if (mul_[x][u] == mul_[u][x]) c.push_back(x);
    return c;
}

std::vector<int> WeylGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::vector<char> in(kOrder, 0);
    std::vector<int> out{id_};
    in[id_] = 1;
    for (size_t i = 0; i < out.size(); ++i)
        for (int g : gens) {
            int y = mul_[out[i]][g];
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> WeylGroup::abelian_invariants(const std::vector<int>& subgroup) const {
    // Derived subgroup by closing the commutator set, then cyclic structure of
    // the abelian quotient from element orders.
    std::vector<int> comms;
    for (int a : subgroup)
        for (int b : subgroup) {
            int c = mul_[mul_[mul_[a][b]][inv_[a]]][inv_[b]];
            comms.push_back(c);
        }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    std::vector<int> derived = subgroup_closure(comms);
    std::vector<char> in_d(kOrder, 0);
    for (int x : derived) in_d[x] = 1;

    // Cosets of the derived subgroup.
    std::map<int, int> coset_of;  // element -> coset id, keyed by min element
    std::vector<std::vector<int>> cosets;
    for (int x : subgroup) {
        if (coset_of.count(x)) continue;
        std::vector<int> cs;
        for (int d : derived) cs.push_back(mul_[x][d]);
        std::sort(cs.begin(), cs.end());
        int cid = (int)cosets.size();
        for (int y : cs) coset_of[y] = cid;
        cosets.push_back(cs);
    }
    int n = (int)cosets.size();
    auto qmul = [&](int a, int b) { return coset_of.at(mul_[cosets[a][0]][cosets[b][0]]); };
    int qid = coset_of.at(id_);

    // Orders in the quotient.
    std::vector<int> qorder(n, 0);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != qid) {
            x = qmul(x, a);
            ++k;
        }
        qorder[a] = k;
    }
    // For each prime p: if the p-part has cyclic factors p^l1 >= p^l2 >= ...,
    // then #\{x : x^{p^k} = 1\} = p^{sum_i min(li,k)}, so the increments of the
    // p-logs give the conjugate partition.
    std::vector<u64> invs;
    int m = n;
    for (int p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        std::vector<int> conj;  // conj[k-1] = #factors with exponent >= k
        i64 pk = 1;
        int prev = 1;
        while (true) {
            pk *= p;
            int c = 0;
            for (int a = 0; a < n; ++a)
                if (pk % qorder[a] == 0) ++c;
            int ratio = c / prev, e = 0;
            while (ratio > 1) {
                ratio /= p;
                ++e;
            }
            if (e == 0) break;
            conj.push_back(e);
            prev = c;
        }
        if (conj.empty()) continue;
        for (int j = 1; j <= conj[0]; ++j) {
            int lambda = 0;
            for (int a : conj)
                if (a >= j) ++lambda;
            u64 v = 1;
            for (int i = 0; i < lambda; ++i) v *= p;
            invs.push_back(v);
        }
    }
    return invariant_factors_of_cyclics(invs);
}

std::vector<int> WeylGroup::small_generating_set(const std::vector<int>& subgroup) const {
    size_t target = subgroup.size();
    if (target <= 1) return {};
    std::vector<int> cands = subgroup;
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
        if (order_[a] != order_[b]) return order_[a] > order_[b];
        return a < b;
    });
    std::vector<int> gens;
    size_t cur = 1;
    while (cur < target) {
        int best = -1;
        size_t best_size = cur;
        for (int c : cands) {
            if (c == id_) continue;
            auto g2 = gens;
            g2.push_back(c);
            size_t s = subgroup_closure(g2).size();
            if (s > best_size) {
                best_size = s;
                best = c;
                if (s == target) break;
            }
        }
        require(best >= 0, "generating set search stalled");
        gens.push_back(best);
        cur = best_size;
    }
    return gens;
}

std::string WeylGroup::classes_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (int c = 0; c < class_count(); ++c) {
        int rep = class_reps_[c];
        auto cent = centralizer(rep);
        j.push_back({{"representative_word", word_[rep]},
                     {"class_size", class_sizes_[c]},
                     {"element_order", order_[rep]},
                     {"centralizer_order", (int)cent.size()},
                     {"centralizer_abelian_invariants", abelian_invariants(cent)}});
    }
    return j.dump(2);
}

}  // namespace f4tori

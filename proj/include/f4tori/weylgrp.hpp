#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "f4tori/rootsys.hpp"
#include "f4tori/util.hpp"

namespace f4tori {

using RootPerm = std::array<uint8_t, 48>;

// W(F4), order 1152, with full multiplication table, conjugacy classes and
// centralizers. Elements are referred to by dense index. The matrix A of an
// element acts by columns: w(r_j) = sum_i A[i][j] r_i. The matrix B is the
// diag(1,1,2,2)-conjugate used for the torus exponent calculus; it is integral
// on all of W.
class WeylGroup {
  public:
    explicit WeylGroup(const RootSystem& rs);

    static constexpr int kOrder = 1152;

    const RootSystem& roots() const { return rs_; }

    int identity() const { return id_; }
    int w0() const { return w0_; }
    int size() const { return (int)perm_.size(); }

    int mul(int u, int v) const { return mul_[u][v]; }
    int inverse(int u) const { return inv_[u]; }
    int reflection(int r) const { return refl_[r - 1]; }  // r in 1..24
    int from_word(const std::vector<int>& word) const;

    const RootPerm& perm(int u) const { return perm_[u]; }
    const Mat4& amat(int u) const { return amat_[u]; }
    const Mat4& bmat(int u) const { return bmat_[u]; }
    int order(int u) const { return order_[u]; }
    int apply(int u, int root_internal) const { return perm_[u][root_internal]; }

    int index_of_perm(const RootPerm& p) const;

    // Shortest word in the simple reflections 1..4, fixed BFS tie-breaking.
    const std::vector<int>& word(int u) const { return word_[u]; }

    int class_of(int u) const { return class_of_[u]; }
    int class_count() const { return (int)class_reps_.size(); }
    int class_rep(int c) const { return class_reps_[c]; }
    int class_size(int c) const { return class_sizes_[c]; }
    bool conjugate(int u, int v) const { return class_of_[u] == class_of_[v]; }

    std::vector<int> centralizer(int u) const;
    // Invariant factors of the abelianization of the subgroup given by
    // element indices.
    std::vector<u64> abelian_invariants(const std::vector<int>& subgroup) const;
    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
    // Greedy small generating set of a subgroup (deterministic).
    std::vector<int> small_generating_set(const std::vector<int>& subgroup) const;

    std::string classes_json() const;

  private:
    const RootSystem& rs_;
    std::vector<RootPerm> perm_;
    std::vector<Mat4> amat_, bmat_;
    std::vector<std::vector<uint16_t>> mul_;
    std::vector<uint16_t> inv_;
    std::vector<int> order_;
    std::vector<std::vector<int>> word_;
    std::unordered_map<std::string, int> index_;
    std::array<int, 24> refl_{};
    int id_ = 0, w0_ = 0;

    std::vector<int> class_of_, class_reps_, class_sizes_;

    void build_elements();
    void build_classes();
};

}  // namespace f4tori

#pragma once

#include "lpcert/vertices.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lpcert {

// Square nonnegative matrix whose row and column sums are all one. The
// invariant is enforced at construction and every operation returns values
// that re-validate it.
class DoublyStochastic {
public:
    explicit DoublyStochastic(RMatrix entries);

    std::size_t n() const noexcept { return m_.rows(); }
    const RMatrix& matrix() const noexcept { return m_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    bool is_permutation() const;

    friend bool operator==(const DoublyStochastic&, const DoublyStochastic&) = default;

private:
    RMatrix m_;
};

// Permutation as row -> column assignment: row i carries its one in column
// sigma[i].
struct PermutationMatrix {
    std::vector<std::size_t> sigma;

    std::size_t n() const noexcept { return sigma.size(); }
    RMatrix to_matrix() const;

    friend bool operator==(const PermutationMatrix&, const PermutationMatrix&) = default;
};

// All n! permutations in lexicographic sigma order.
std::vector<PermutationMatrix> all_permutations(std::size_t n);

// Closed alternating walk through fractional entries: consecutive pairs share
// a row at even steps and a column at odd steps, wrapping around.
struct FractionalCycle {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    friend bool operator==(const FractionalCycle&, const FractionalCycle&) = default;
};

struct BvnTerm {
    Rational weight;
    PermutationMatrix perm;

    friend bool operator==(const BvnTerm&, const BvnTerm&) = default;
};

struct BvnDecomposition {
    std::vector<BvnTerm> terms;  // weights > 0, summing to one

    friend bool operator==(const BvnDecomposition&, const BvnDecomposition&) = default;
};

// Equality system cutting out the doubly stochastic polytope over vectorized
// matrices: one block of column sums, one block of row sums, all equal one.
struct DsConstraintSystem {
    RMatrix column_sums;  // n x n^2
    RMatrix row_sums;     // n x n^2
    RVector rhs;          // 2n ones

    RMatrix stacked() const;

    friend bool operator==(const DsConstraintSystem&, const DsConstraintSystem&) = default;
};

inline constexpr std::size_t kMaxBvnSize = 6;
inline constexpr std::size_t kMaxVertexCheckSize = 3;

// Column-stacked vectorization: entry (i, j) lands at position j*n + i.
RVector vectorize(const RMatrix& m);

DsConstraintSystem build_constraints(std::size_t n);

// Shortest closed alternating cycle through the first fractional entry, found
// by breadth-first search on the bipartite graph of fractional entries.
// Demands at least one fractional entry.
FractionalCycle find_fractional_cycle(const DoublyStochastic& p);

// Largest step the cycle tolerates: min over its entries of min(value,
// 1 - value).
Rational epsilon0(const DoublyStochastic& p, const FractionalCycle& cycle);

// The two shifted matrices whose midpoint is p: the first subtracts eps at
// even cycle positions and adds at odd ones, the second does the reverse.
// Demands 0 < eps < epsilon0.
std::pair<DoublyStochastic, DoublyStochastic> perturb_pair(const DoublyStochastic& p,
                                                           const FractionalCycle& cycle,
                                                           const Rational& eps);

// Exact convex decomposition into permutation matrices. Refuses n beyond
// kMaxBvnSize.
BvnDecomposition bvn_decompose(const DoublyStochastic& p);

// Checks that the basic solutions of the doubly stochastic system are exactly
// the n! permutation matrices. Refuses n beyond kMaxVertexCheckSize.
bool verify_vertex_set(std::size_t n);

}  // namespace lpcert

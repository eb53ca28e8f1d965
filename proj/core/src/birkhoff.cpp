#include "lpcert/birkhoff.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace lpcert {

namespace {

constexpr std::size_t knone = std::numeric_limits<std::size_t>::max();

bool is_fractional(const Rational& v) {
    return v > 0 && v < 1;
}

// A usable cycle alternates row moves and column moves, closes up, visits
// distinct fractional entries, and has even length at least four.
void require_cycle(const DoublyStochastic& p, const FractionalCycle& cycle) {
    const auto& pr = cycle.pairs;
    if (pr.size() < 4 || pr.size() % 2 != 0) {
        throw PreconditionError("fractional cycle must have even length at least four");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < pr.size(); ++k) {
        const auto& [r, c] = pr[k];
        if (r >= p.n() || c >= p.n()) {
            throw PreconditionError("fractional cycle entry out of range");
        }
        if (!is_fractional(p(r, c))) {
            throw PreconditionError("fractional cycle touches a non-fractional entry");
        }
        if (!seen.insert(pr[k]).second) {
            throw PreconditionError("fractional cycle repeats an entry");
        }
        const auto& [nr, nc] = pr[(k + 1) % pr.size()];
        if (k % 2 == 0 ? (r != nr) : (c != nc)) {
            throw PreconditionError("fractional cycle fails to alternate rows and columns");
        }
    }
}

}  // namespace

DoublyStochastic::DoublyStochastic(RMatrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) {
        throw PreconditionError("DoublyStochastic: matrix must be square");
    }
    if (m_.rows() == 0) throw PreconditionError("DoublyStochastic: empty matrix");
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m_(i, j) < 0) {
                throw PreconditionError("DoublyStochastic: negative entry at (" +
                                        std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                        ")");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < n; ++j) s += m_(i, j);
        if (s != 1) {
            throw PreconditionError("DoublyStochastic: row " + std::to_string(i + 1) +
                                    " sums to " + to_string(s));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < n; ++i) s += m_(i, j);
        if (s != 1) {
            throw PreconditionError("DoublyStochastic: column " + std::to_string(j + 1) +
                                    " sums to " + to_string(s));
        }
    }
}

bool DoublyStochastic::is_permutation() const {
    for (std::size_t i = 0; i < n(); ++i) {
        for (std::size_t j = 0; j < n(); ++j) {
            if (m_(i, j) != 0 && m_(i, j) != 1) return false;
        }
    }
    return true;
}

RMatrix PermutationMatrix::to_matrix() const {
    RMatrix m(sigma.size(), sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) m(i, sigma[i]) = 1;
    return m;
}

std::vector<PermutationMatrix> all_permutations(std::size_t n) {
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<PermutationMatrix> out;
    do {
        out.push_back(PermutationMatrix{sigma});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

RVector vectorize(const RMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("vectorize: matrix must be square");
    RVector v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) v[j * m.rows() + i] = m(i, j);
    }
    return v;
}

DsConstraintSystem build_constraints(std::size_t n) {
    if (n == 0) throw PreconditionError("build_constraints: n must be positive");
    DsConstraintSystem sys;
    sys.column_sums = RMatrix(n, n * n);
    sys.row_sums = RMatrix(n, n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            sys.column_sums(j, j * n + i) = 1;  // block j covers column j's entries
            sys.row_sums(j, i * n + j) = 1;     // position j inside every block
        }
    }
    sys.rhs = ones(2 * n);
    return sys;
}

RMatrix DsConstraintSystem::stacked() const {
    RMatrix m(column_sums.rows() + row_sums.rows(), column_sums.cols());
    for (std::size_t i = 0; i < column_sums.rows(); ++i) {
        for (std::size_t j = 0; j < column_sums.cols(); ++j) m(i, j) = column_sums(i, j);
    }
    for (std::size_t i = 0; i < row_sums.rows(); ++i) {
        for (std::size_t j = 0; j < row_sums.cols(); ++j) {
            m(column_sums.rows() + i, j) = row_sums(i, j);
        }
    }
    return m;
}

FractionalCycle find_fractional_cycle(const DoublyStochastic& p) {
    const std::size_t n = p.n();

    std::size_t r0 = knone;
    std::size_t c0 = knone;
    for (std::size_t i = 0; i < n && r0 == knone; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (is_fractional(p(i, j))) {
                r0 = i;
                c0 = j;
                break;
            }
        }
    }
    if (r0 == knone) {
        throw PreconditionError("find_fractional_cycle: no fractional entry");
    }

    // Each fractional entry sits in a row and a column that both contain
    // another fractional entry, so the bipartite graph of fractional entries
    // has even degrees away from boundaries; a path from r0 to c0 avoiding the
    // starting entry always exists. Breadth-first search picks the shortest,
    // scanning neighbors in index order for determinism.
    std::vector<std::size_t> row_parent(n, knone);  // column we came from
    std::vector<std::size_t> col_parent(n, knone);  // row we came from
    std::vector<char> row_seen(n, 0);
    std::vector<char> col_seen(n, 0);
    std::deque<std::pair<bool, std::size_t>> queue;  // (is_row, index)
    row_seen[r0] = 1;
    queue.emplace_back(true, r0);
    while (!queue.empty() && !col_seen[c0]) {
        auto [is_row, v] = queue.front();
        queue.pop_front();
        if (is_row) {
            for (std::size_t c = 0; c < n; ++c) {
                if (col_seen[c] || !is_fractional(p(v, c))) continue;
                if (v == r0 && c == c0) continue;  // the starting entry is off limits
                col_seen[c] = 1;
                col_parent[c] = v;
                queue.emplace_back(false, c);
            }
        } else {
            for (std::size_t r = 0; r < n; ++r) {
                if (row_seen[r] || !is_fractional(p(r, v))) continue;
                row_seen[r] = 1;
                row_parent[r] = v;
                queue.emplace_back(true, r);
            }
        }
    }
    if (!col_seen[c0]) {
        throw InternalError("find_fractional_cycle: fractional graph disconnected");
    }

    // Reconstruct r0 -> ... -> c0 and stitch the starting entry on front.
    std::vector<std::pair<std::size_t, std::size_t>> path;  // edges, reversed
    std::size_t col = c0;
    for (;;) {
        std::size_t row = col_parent[col];
        path.emplace_back(row, col);
        if (row == r0) break;
        col = row_parent[row];
        path.emplace_back(row, col);
    }
    FractionalCycle cycle;
    cycle.pairs.emplace_back(r0, c0);
    for (auto it = path.rbegin(); it != path.rend(); ++it) cycle.pairs.push_back(*it);

    require_cycle(p, cycle);
    return cycle;
}

Rational epsilon0(const DoublyStochastic& p, const FractionalCycle& cycle) {
    require_cycle(p, cycle);
    Rational best;
    bool first = true;
    for (const auto& [r, c] : cycle.pairs) {
        const Rational& v = p(r, c);
        Rational complement = Rational(1) - v;
        const Rational& margin = std::min(v, complement);
        if (first || margin < best) {
            best = margin;
            first = false;
        }
    }
    return best;
}

std::pair<DoublyStochastic, DoublyStochastic> perturb_pair(const DoublyStochastic& p,
                                                           const FractionalCycle& cycle,
                                                           const Rational& eps) {
    require_cycle(p, cycle);
    if (eps <= 0 || eps >= epsilon0(p, cycle)) {
        throw PreconditionError("perturb_pair: eps must lie strictly between 0 and epsilon0");
    }
    RMatrix q1 = p.matrix();
    RMatrix q2 = p.matrix();
    for (std::size_t k = 0; k < cycle.pairs.size(); ++k) {
        const auto& [r, c] = cycle.pairs[k];
        const Rational delta = (k % 2 == 0) ? -eps : eps;
        q1(r, c) += delta;
        q2(r, c) -= delta;
    }
    DoublyStochastic d1(std::move(q1));
    DoublyStochastic d2(std::move(q2));
    if (d1 == d2) throw InternalError("perturb_pair: perturbations coincide");
    for (std::size_t i = 0; i < p.n(); ++i) {
        for (std::size_t j = 0; j < p.n(); ++j) {
            Rational twice = d1(i, j) + d2(i, j);
            Rational expect = p(i, j) * 2;
            if (twice != expect) throw InternalError("perturb_pair: midpoint drifted");
        }
    }
    return {std::move(d1), std::move(d2)};
}

BvnDecomposition bvn_decompose(const DoublyStochastic& p) {
    if (p.n() > kMaxBvnSize) {
        throw CapacityError("bvn_decompose: size " + std::to_string(p.n()) +
                            " exceeds the limit of " + std::to_string(kMaxBvnSize));
    }
    std::vector<PermutationMatrix> perms = all_permutations(p.n());
    std::vector<RVector> points;
    points.reserve(perms.size());
    for (const auto& pm : perms) points.push_back(vectorize(pm.to_matrix()));

    SeparationResult sep = farkas_separate(vectorize(p.matrix()), points);
    auto* weights = std::get_if<ConvexWeights>(&sep);
    if (weights == nullptr) {
        throw InternalError("bvn_decompose: a separator excluded a doubly stochastic matrix "
                            "from the hull of the permutations");
    }

    BvnDecomposition out;
    RMatrix combo(p.n(), p.n());
    Rational total(0);
    for (std::size_t k = 0; k < perms.size(); ++k) {
        const Rational& w = weights->alpha[k];
        if (w == 0) continue;
        total += w;
        for (std::size_t i = 0; i < p.n(); ++i) combo(i, perms[k].sigma[i]) += w;
        out.terms.push_back(BvnTerm{w, perms[k]});
    }
    if (total != 1 || combo != p.matrix()) {
        throw InternalError("bvn_decompose: reconstruction failed re-check");
    }
    return out;
}

bool verify_vertex_set(std::size_t n) {
    if (n == 0) throw PreconditionError("verify_vertex_set: n must be positive");
    if (n > kMaxVertexCheckSize) {
        throw CapacityError("verify_vertex_set: size " + std::to_string(n) +
                            " exceeds the limit of " + std::to_string(kMaxVertexCheckSize));
    }
    DsConstraintSystem sys = build_constraints(n);
    VertexSet vs = enumerate_basic(sys.stacked(), sys.rhs);

    std::set<RVector> expected;
    for (const auto& pm : all_permutations(n)) expected.insert(vectorize(pm.to_matrix()));

    if (vs.vertices.size() != expected.size()) return false;
    for (const auto& v : vs.vertices) {
        if (expected.count(v.x) == 0) return false;
    }
    return true;
}

}  // namespace lpcert

#include "lpcert/generate.hpp"

#include <numeric>
#include <random>
#include <string>

namespace lpcert {

namespace {

// Modulo reduction keeps the stream portable; the slight bias is irrelevant
// for test corpora.
std::int64_t draw_int(std::mt19937_64& gen, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

LpProblem generate_random_lp(std::uint64_t seed, std::size_t m, std::size_t n) {
    if (n < 1) throw PreconditionError("generate_random_lp: n must be positive");
    if (n > kMaxEnumerationColumns || m > kMaxEnumerationColumns) {
        throw CapacityError("generate_random_lp: sizes beyond " +
                            std::to_string(kMaxEnumerationColumns) + " are not supported");
    }
    std::mt19937_64 gen(seed);

    RVector x0(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (draw_int(gen, 0, 1) == 0) {
            x0[j] = 0;
        } else {
            x0[j] = Rational(draw_int(gen, 1, 4), draw_int(gen, 1, 3));
        }
    }

    LpProblem prob;
    prob.A = RMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) prob.A(i, j) = draw_int(gen, -3, 3);
    }
    prob.b = matvec(prob.A, x0);
    prob.p = RVector(n);
    for (std::size_t j = 0; j < n; ++j) prob.p[j] = draw_int(gen, -4, 4);
    return prob;
}

DoublyStochastic generate_random_ds(std::uint64_t seed, std::size_t n) {
    if (n < 1) throw PreconditionError("generate_random_ds: n must be positive");
    if (n > kMaxEnumerationColumns) {
        throw CapacityError("generate_random_ds: sizes beyond " +
                            std::to_string(kMaxEnumerationColumns) + " are not supported");
    }
    std::mt19937_64 gen(seed);

    const std::size_t terms = static_cast<std::size_t>(draw_int(gen, 2, 5));
    std::vector<std::vector<std::size_t>> sigmas(terms);
    std::vector<std::int64_t> masses(terms);
    std::int64_t total = 0;
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::size_t>& sigma = sigmas[t];
        sigma.resize(n);
        std::iota(sigma.begin(), sigma.end(), std::size_t{0});
        for (std::size_t j = n; j > 1; --j) {  // Fisher-Yates with portable draws
            std::size_t k = static_cast<std::size_t>(draw_int(gen, 0, static_cast<std::int64_t>(j) - 1));
            std::swap(sigma[j - 1], sigma[k]);
        }
        masses[t] = draw_int(gen, 1, 9);
        total += masses[t];
    }

    RMatrix entries(n, n);
    for (std::size_t t = 0; t < terms; ++t) {
        const Rational w(masses[t], total);
        for (std::size_t i = 0; i < n; ++i) entries(i, sigmas[t][i]) += w;
    }
    return DoublyStochastic(std::move(entries));
}

}  // namespace lpcert

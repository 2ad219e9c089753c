// Test-side oracles: deliberately naive, independent reimplementations used
// to cross-check the library. Nothing here calls the code paths under test.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/linalg.hpp"

namespace oracles {

using namespace tricode;

// Determinant by cofactor expansion along the first row.
inline FieldElement det_cofactor(const Matrix& m) {
    const Field& F = m.field();
    uint32_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    uint32_t acc = 0;
    for (uint32_t j = 0; j < n; ++j) {
        if (m.raw(0, j) == 0) continue;
        Matrix minor(F, n - 1, n - 1);
        for (uint32_t r = 1; r < n; ++r) {
            uint32_t cc = 0;
            for (uint32_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.raw(r - 1, cc++) = m.raw(r, c);
            }
        }
        uint32_t term = F.rmul(m.raw(0, j), det_cofactor(minor).enc);
        if (j % 2) term = F.rneg(term);
        acc = F.radd(acc, term);
    }
    return {&F, acc};
}

// Weight distribution by a direct message loop with plain row combinations.
inline std::vector<uint64_t> weights_naive(const Matrix& g) {
    const Field& F = g.field();
    uint32_t q = F.size(), k = g.rows(), n = g.cols();
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) total *= q;
    std::vector<uint64_t> counts(n + 1, 0);
    std::vector<uint32_t> word(n);
    for (uint64_t msg = 0; msg < total; ++msg) {
        uint64_t rem = msg;
        std::fill(word.begin(), word.end(), 0);
        for (uint32_t i = 0; i < k; ++i) {
            uint32_t digit = uint32_t(rem % q);
            rem /= q;
            if (digit == 0) continue;
            for (uint32_t c = 0; c < n; ++c)
                word[c] = F.radd(word[c], F.rmul(digit, g.raw(i, c)));
        }
        uint32_t w = 0;
        for (uint32_t c = 0; c < n; ++c) w += word[c] != 0;
        counts[w]++;
    }
    return counts;
}

// Minimal polynomial over the prime field as the Frobenius-orbit product
// prod (X - x^{p^i}); returns prime-field coefficients, ascending.
inline std::vector<uint32_t> min_poly_prime(FieldElement x) {
    const Field& F = *x.field;
    uint32_t p = F.characteristic();
    std::vector<uint32_t> orbit{x.enc};
    for (;;) {
        uint32_t next = F.rpow(orbit.back(), p);
        if (next == orbit.front()) break;
        orbit.push_back(next);
    }
    // poly with big-field coefficients, multiply out the linear factors
    std::vector<uint32_t> poly{1};
    for (uint32_t root : orbit) {
        std::vector<uint32_t> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = F.radd(next[i + 1], poly[i]);
            next[i] = F.radd(next[i], F.rmul(F.rneg(root), poly[i]));
        }
        poly = std::move(next);
    }
    // coefficients must lie in the prime subfield (encodings < p)
    for (uint32_t c : poly)
        if (c >= p) throw std::logic_error("minimal polynomial not over the prime field");
    return poly;
}

// Dimension of rowspace(A) intersect rowspace(B) from an explicit basis:
// left-kernel vectors (u, v) of the stacked matrix give intersection vectors
// u A, which are then reduced.
inline uint32_t intersection_dim(const Matrix& a, const Matrix& b) {
    const Field& F = a.field();
    Matrix stacked = Matrix::vconcat(a, b);
    Matrix left_kernel = stacked.transpose().kernel_basis();
    if (left_kernel.rows() == 0) return 0;
    Matrix inter(F, left_kernel.rows(), a.cols());
    for (uint32_t r = 0; r < left_kernel.rows(); ++r)
        for (uint32_t j = 0; j < a.cols(); ++j) {
            uint32_t acc = 0;
            for (uint32_t i = 0; i < a.rows(); ++i)
                acc = F.radd(acc, F.rmul(left_kernel.raw(r, i), a.raw(i, j)));
            inter.raw(r, j) = acc;
        }
    return inter.rank();
}

// Random full(ish) matrix with a deterministic engine.
inline Matrix random_matrix(const Field& F, uint32_t rows, uint32_t cols, std::mt19937& rng) {
    Matrix m(F, rows, cols);
    std::uniform_int_distribution<uint32_t> dist(0, F.size() - 1);
    for (uint32_t i = 0; i < rows; ++i)
        for (uint32_t j = 0; j < cols; ++j) m.raw(i, j) = dist(rng);
    return m;
}

inline Matrix random_symmetric(const Field& F, uint32_t n, std::mt19937& rng) {
    Matrix m(F, n, n);
    std::uniform_int_distribution<uint32_t> dist(0, F.size() - 1);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i; j < n; ++j) m.raw(i, j) = m.raw(j, i) = dist(rng);
    return m;
}

// Random Toeplitz matrix (constant along every diagonal).
inline Matrix random_toeplitz(const Field& F, uint32_t n, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, F.size() - 1);
    std::vector<uint32_t> diag(2 * n - 1);
    for (auto& d : diag) d = dist(rng);
    Matrix m(F, n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) m.raw(i, j) = diag[n - 1 + int64_t(j) - int64_t(i)];
    return m;
}

}  // namespace oracles

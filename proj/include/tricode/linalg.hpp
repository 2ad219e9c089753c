#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tricode/galois.hpp"

namespace tricode {

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a closed-form spectrum is requested for b*c = 0; callers fall
/// back to direct matrix methods.
struct SpectralUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense polynomial over a field, coefficients ascending by degree, no
/// trailing zeros (the zero polynomial has an empty coefficient list).
class Poly {
public:
    Poly() = default;
    Poly(const Field& f, std::vector<uint32_t> coeffs);
    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }

    const Field& field() const { return *field_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

    FieldElement eval(FieldElement x) const;
    /// Evaluation with coefficients pushed through a context embedding.
    FieldElement eval_embedded(const UnityContext& ctx, FieldElement x, bool conj_coeffs = false) const;
    /// Coefficient-wise Frobenius conjugate (requires quadratic structure).
    Poly conj() const;

    bool operator==(const Poly&) const = default;

private:
    const Field* field_ = nullptr;
    std::vector<uint32_t> c_;
};

/// Polynomial text syntax: terms joined by `+`, each term `[coef*]x[^e]` or a
/// bare element literal, e.g. `x^9+x^8+x^4+x^3+x^2` or `w^2*x^4+x^3+x^2`.
Poly parse_poly(const Field& f, const std::string& text, std::size_t pos_offset = 0);
std::string format_poly(const Poly& p);

/// Row-major matrix over a field with exact arithmetic.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, uint32_t rows, uint32_t cols);
    static Matrix identity(const Field& f, uint32_t n);

    const Field& field() const { return *field_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }
    uint32_t& raw(uint32_t r, uint32_t c) { return v_[size_t(r) * cols_ + c]; }
    uint32_t raw(uint32_t r, uint32_t c) const { return v_[size_t(r) * cols_ + c]; }
    FieldElement at(uint32_t r, uint32_t c) const { return {field_, raw(r, c)}; }
    void set(uint32_t r, uint32_t c, FieldElement x);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(FieldElement s) const;
    Matrix transpose() const;
    Matrix conj() const;
    Matrix conj_transpose() const { return conj().transpose(); }
    Matrix pow(uint64_t k) const;

    FieldElement det() const;
    uint32_t rank() const;
    /// Reduced row echelon form; returns the rank.
    uint32_t rref();
    /// Nonzero rows of the RREF (a row-space basis).
    Matrix row_basis() const;
    /// Basis of the right kernel {x : M x = 0}, one solution per row.
    Matrix kernel_basis() const;

    static Matrix hconcat(const Matrix& a, const Matrix& b);
    static Matrix vconcat(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    const Field* field_ = nullptr;
    uint32_t rows_ = 0, cols_ = 0;
    std::vector<uint32_t> v_;
};

/// Horner evaluation of f at a square matrix (constant term times identity).
Matrix poly_eval_matrix(const Poly& f, const Matrix& a);

enum class TriKind { T, TPrime };

/// Parameters of the tridiagonal Toeplitz family: T has the off-diagonal
/// entries adjacent to the diagonal, T' at offsets +-2.
struct TridiagonalSpec {
    const Field* field = nullptr;
    TriKind kind = TriKind::T;
    uint32_t n = 0;
    uint32_t a = 0, b = 0, c = 0;  // encoded entries

    FieldElement ea() const { return {field, a}; }
    FieldElement eb() const { return {field, b}; }
    FieldElement ec() const { return {field, c}; }
};

Matrix build_tridiagonal(const TridiagonalSpec& spec);

/// Dickson polynomial of the second kind: E_0 = 1, E_1 = x,
/// E_n = x E_{n-1} - alpha E_{n-2}.
FieldElement dickson_eval(uint64_t n, FieldElement x, FieldElement alpha);

/// Characteristic polynomial value det(M - lambda I) in closed form:
/// E_n(a - lambda, bc) for T, and the half-order factorization for T'.
FieldElement char_poly_value(const TridiagonalSpec& spec, FieldElement lambda);
/// Same with lambda in a context extension (entries embedded).
FieldElement char_poly_value_in(const TridiagonalSpec& spec, const UnityContext& ctx,
                                FieldElement lambda);

struct SpectrumPiece {
    uint32_t n;  // order of the plain tridiagonal block
    uint32_t r;  // n+1 = p^r (m+1), gcd(m+1, p) = 1
    uint32_t m;
};

/// Eigenvalue multiset of a tridiagonal Toeplitz matrix in a computed
/// extension field. Multiplicities always sum to n, the product matches the
/// determinant, and every listed value is a root of the characteristic
/// polynomial.
struct SpectrumMultiset {
    UnityContext ctx;
    std::vector<std::pair<FieldElement, uint32_t>> pairs;  // (eigenvalue, multiplicity)
    std::vector<SpectrumPiece> pieces;

    uint32_t total_multiplicity() const;
};

/// Closed-form spectrum; requires b*c != 0 (throws SpectralUnavailableError
/// otherwise). `extra_orders` are additional root-of-unity orders the caller
/// wants available in the same context; `need_mu` requests a square root of
/// -1 in odd characteristic.
SpectrumMultiset eigen_spectrum(const TridiagonalSpec& spec,
                                std::span<const uint64_t> extra_orders = {},
                                bool need_mu = false);

}  // namespace tricode

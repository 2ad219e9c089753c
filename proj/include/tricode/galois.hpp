#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricode {

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

class Field;

/// Value of a finite field, tagged with its field. Arithmetic between elements
/// of different fields throws FieldError.
struct FieldElement {
    const Field* field = nullptr;
    uint32_t enc = 0;

    bool is_zero() const { return enc == 0; }
    bool operator==(const FieldElement&) const = default;

    FieldElement operator+(FieldElement rhs) const;
    FieldElement operator-(FieldElement rhs) const;
    FieldElement operator*(FieldElement rhs) const;
    FieldElement operator/(FieldElement rhs) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(int64_t e) const;
};

/// GF(p^m) with precomputed exponent/log tables over a polynomial basis.
///
/// The modulus is the first primitive monic degree-m polynomial over GF(p) in
/// ascending order of the base-p encoding of its non-leading coefficients, so
/// construction is deterministic. The distinguished generator is the class of
/// the indeterminate. Elements are encoded as integers in [0, q) whose base-p
/// digits are the coordinates in the polynomial basis.
///
/// Instances are interned: Field::get(p, m) always returns the same object,
/// immutable after construction and safe for concurrent reads.
class Field {
public:
    static const Field& get(uint32_t p, uint32_t m);

    /// Global size cap on p^m (default 2^20).
    static void set_size_limit(uint64_t limit);
    static uint64_t size_limit();

    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    uint32_t size() const { return q_; }

    /// Monic modulus, coefficients ascending by degree (length m+1).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, one_enc()}; }
    FieldElement generator() const { return {this, exp_[1 % (q_ - 1)]}; }
    FieldElement element(uint32_t enc) const;
    FieldElement from_int(int64_t v) const;
    /// generator^e
    FieldElement exp(uint64_t e) const { return {this, rexp(e % (q_ - 1))}; }

    bool has_quadratic_subfield() const { return m_ % 2 == 0; }
    uint32_t quadratic_subfield_size() const;

    // Raw encoded arithmetic (hot paths).
    uint32_t radd(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return radd_slow(a, b);
    }
    uint32_t rsub(uint32_t a, uint32_t b) const { return radd(a, rneg(b)); }
    uint32_t rneg(uint32_t a) const;
    uint32_t rmul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    uint32_t rinv(uint32_t a) const;
    uint32_t rdiv(uint32_t a, uint32_t b) const { return rmul(a, rinv(b)); }
    uint32_t rpow(uint32_t a, int64_t e) const;
    uint32_t rexp(uint64_t e) const { return exp_[e % (q_ - 1)]; }
    /// Discrete log base the generator; UINT32_MAX for zero.
    uint32_t rlog(uint32_t a) const { return log_[a]; }
    uint32_t rconj(uint32_t a) const;

    bool is_square(uint32_t a) const;
    std::optional<uint32_t> rsqrt(uint32_t a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(uint32_t p, uint32_t m);
    uint32_t one_enc() const { return 1; }
    uint32_t radd_slow(uint32_t a, uint32_t b) const;

    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;   // size q-1, exp_[e] = generator^e
    std::vector<uint32_t> log_;   // size q, log_[0] = UINT32_MAX
    std::vector<uint32_t> add_table_;  // q*q, only for small q
};

/// Frobenius conjugate x -> x^sqrt(q); requires even extension degree.
FieldElement conjugate(FieldElement x);

/// Square root: total in characteristic 2; in odd characteristic present only
/// for quadratic residues, returning the root with the smaller discrete log.
std::optional<FieldElement> sqrt(FieldElement x);

/// Extension GF(q^s) of a base field together with distinguished roots of
/// unity and the compatible embedding of the base field.
struct UnityContext {
    const Field* base = nullptr;
    const Field* ext = nullptr;
    uint64_t ext_power = 1;   // s, with |ext| = |base|^s
    uint64_t root_log = 0;    // discrete log in ext of the base generator's image
    uint64_t theta_order = 1;
    FieldElement theta;                // exact order theta_order
    std::optional<FieldElement> mu;    // mu^2 = -1 (odd characteristic only)

    /// Homomorphic embedding base -> ext (preserves minimal polynomials).
    FieldElement embed(FieldElement x) const;
    /// Element of exact multiplicative order `order` (must divide |ext|-1).
    FieldElement root_of_unity(uint64_t order) const;
};

/// Minimal extension of `base` containing an element of exact order k
/// (gcd(k, char) = 1 required) and, when requested in odd characteristic, a
/// square root of -1.
UnityContext unity_context(const Field& base, uint64_t k, bool need_mu);

/// As unity_context but for several orders at once; `need_even_power` forces
/// an even extension degree s (used to make a designated base element square).
UnityContext unity_context_multi(const Field& base, std::span<const uint64_t> orders,
                                 bool need_mu, bool need_even_power = false);

/// Element text syntax: `0`, `1`, `w`, `w^e`, or an integer literal for a
/// prime-subfield element.
FieldElement parse_element(const Field& f, const std::string& text, std::size_t pos_offset = 0);
std::string format_element(FieldElement x);

}  // namespace tricode

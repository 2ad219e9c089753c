#include "tricode/linalg.hpp"

#include <algorithm>
#include <map>

namespace tricode {

Poly::Poly(const Field& f, std::vector<uint32_t> coeffs) : field_(&f), c_(std::move(coeffs)) {
    for (uint32_t x : c_)
        if (x >= f.size()) throw FieldError("coefficient encoding out of range");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement Poly::eval(FieldElement x) const {
    if (x.field != field_) throw FieldError("field mismatch in polynomial evaluation");
    const Field& F = *field_;
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = F.radd(F.rmul(acc, x.enc), c_[i]);
    return {field_, acc};
}

FieldElement Poly::eval_embedded(const UnityContext& ctx, FieldElement x, bool conj_coeffs) const {
    if (field_ != ctx.base) throw FieldError("polynomial not over the context's base field");
    if (x.field != ctx.ext) throw FieldError("evaluation point not in the context's extension");
    const Field& E = *ctx.ext;
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        uint32_t ce = conj_coeffs ? field_->rconj(c_[i]) : c_[i];
        acc = E.radd(E.rmul(acc, x.enc), ctx.embed({field_, ce}).enc);
    }
    return {ctx.ext, acc};
}

Poly Poly::conj() const {
    std::vector<uint32_t> c(c_);
    for (auto& x : c) x = field_->rconj(x);
    return Poly(*field_, std::move(c));
}

Poly parse_poly(const Field& f, const std::string& text, std::size_t pos_offset) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty polynomial", pos_offset);
    std::vector<uint32_t> coeffs;
    auto bump = [&](size_t deg, FieldElement v) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = f.radd(coeffs[deg], v.enc);
    };
    size_t i = 0;
    while (i < t.size()) {
        size_t j = t.find('+', i);
        if (j == std::string::npos) j = t.size();
        std::string term = t.substr(i, j - i);
        if (term.empty()) throw ParseError("empty term in polynomial '" + text + "'", pos_offset + i);
        size_t xp = term.find('x');
        if (xp == std::string::npos) {
            bump(0, parse_element(f, term, pos_offset + i));
        } else {
            std::string cs = term.substr(0, xp);
            if (!cs.empty() && cs.back() == '*') cs.pop_back();
            FieldElement coef = cs.empty() ? f.one() : parse_element(f, cs, pos_offset + i);
            std::string es = term.substr(xp + 1);
            size_t deg = 1;
            if (!es.empty()) {
                if (es[0] != '^' || es.size() < 2 ||
                    es.find_first_not_of("0123456789", 1) != std::string::npos)
                    throw ParseError("bad term '" + term + "'", pos_offset + i);
                try {
                    deg = std::stoull(es.substr(1));
                } catch (const std::out_of_range&) {
                    throw ParseError("degree overflow in term '" + term + "'", pos_offset + i);
                }
                if (deg > 4096) throw ParseError("degree too large in '" + term + "'", pos_offset + i);
            }
            bump(deg, coef);
        }
        i = j + 1;
    }
    return Poly(f, std::move(coeffs));
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const Field& f = p.field();
    std::string out;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        uint32_t c = p.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        std::string cs = format_element({&f, c});
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

Matrix::Matrix(const Field& f, uint32_t rows, uint32_t cols)
    : field_(&f), rows_(rows), cols_(cols), v_(size_t(rows) * cols, 0) {}

Matrix Matrix::identity(const Field& f, uint32_t n) {
    Matrix m(f, n, n);
    for (uint32_t i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
}

void Matrix::set(uint32_t r, uint32_t c, FieldElement x) {
    if (x.field != field_) throw FieldError("field mismatch in matrix assignment");
    raw(r, c) = x.enc;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldError("field mismatch in matrix product");
    if (cols_ != rhs.rows_) throw DimensionError("dimension mismatch in matrix product");
    const Field& F = *field_;
    Matrix r(F, rows_, rhs.cols_);
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t k = 0; k < cols_; ++k) {
            uint32_t a = raw(i, k);
            if (a == 0) continue;
            for (uint32_t j = 0; j < rhs.cols_; ++j)
                r.raw(i, j) = F.radd(r.raw(i, j), F.rmul(a, rhs.raw(k, j)));
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldError("field mismatch in matrix sum");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("dimension mismatch in matrix sum");
    Matrix r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_->radd(v_[i], rhs.v_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldError("field mismatch in matrix difference");
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionError("dimension mismatch in matrix difference");
    Matrix r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = field_->rsub(v_[i], rhs.v_[i]);
    return r;
}

Matrix Matrix::scaled(FieldElement s) const {
    if (s.field != field_) throw FieldError("field mismatch in matrix scaling");
    Matrix r = *this;
    for (auto& x : r.v_) x = field_->rmul(x, s.enc);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(*field_, cols_, rows_);
    for (uint32_t i = 0; i < rows_; ++i)
        for (uint32_t j = 0; j < cols_; ++j) r.raw(j, i) = raw(i, j);
    return r;
}

Matrix Matrix::conj() const {
    Matrix r = *this;
    for (auto& x : r.v_) x = field_->rconj(x);
    return r;
}

Matrix Matrix::pow(uint64_t k) const {
    if (rows_ != cols_) throw DimensionError("matrix power needs a square matrix");
    Matrix acc = identity(*field_, rows_);
    Matrix base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

FieldElement Matrix::det() const {
    if (rows_ != cols_) throw DimensionError("determinant needs a square matrix");
    const Field& F = *field_;
    Matrix w = *this;
    uint32_t d = 1;
    bool flip = false;
    for (uint32_t c = 0; c < cols_; ++c) {
        uint32_t piv = UINT32_MAX;
        for (uint32_t r = c; r < rows_; ++r)
            if (w.raw(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv == UINT32_MAX) return F.zero();
        if (piv != c) {
            for (uint32_t j = 0; j < cols_; ++j) std::swap(w.raw(piv, j), w.raw(c, j));
            flip = !flip;
        }
        uint32_t pv = w.raw(c, c);
        d = F.rmul(d, pv);
        uint32_t pinv = F.rinv(pv);
        for (uint32_t r = c + 1; r < rows_; ++r) {
            uint32_t factor = F.rmul(w.raw(r, c), pinv);
            if (factor == 0) continue;
            for (uint32_t j = c; j < cols_; ++j)
                w.raw(r, j) = F.rsub(w.raw(r, j), F.rmul(factor, w.raw(c, j)));
        }
    }
    if (flip) d = F.rneg(d);
    return {field_, d};
}

uint32_t Matrix::rref() {
    const Field& F = *field_;
    uint32_t rank = 0;
    for (uint32_t c = 0; c < cols_ && rank < rows_; ++c) {
        uint32_t piv = UINT32_MAX;
        for (uint32_t r = rank; r < rows_; ++r)
            if (raw(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv == UINT32_MAX) continue;
        if (piv != rank)
            for (uint32_t j = 0; j < cols_; ++j) std::swap(raw(piv, j), raw(rank, j));
        uint32_t pinv = F.rinv(raw(rank, c));
        for (uint32_t j = 0; j < cols_; ++j) raw(rank, j) = F.rmul(raw(rank, j), pinv);
        for (uint32_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            uint32_t factor = raw(r, c);
            if (factor == 0) continue;
            for (uint32_t j = 0; j < cols_; ++j)
                raw(r, j) = F.rsub(raw(r, j), F.rmul(factor, raw(rank, j)));
        }
        ++rank;
    }
    return rank;
}

uint32_t Matrix::rank() const {
    Matrix w = *this;
    return w.rref();
}

Matrix Matrix::row_basis() const {
    Matrix w = *this;
    uint32_t rank = w.rref();
    Matrix r(*field_, rank, cols_);
    for (uint32_t i = 0; i < rank; ++i)
        for (uint32_t j = 0; j < cols_; ++j) r.raw(i, j) = w.raw(i, j);
    return r;
}

Matrix Matrix::kernel_basis() const {
    const Field& F = *field_;
    Matrix w = *this;
    uint32_t rank = w.rref();
    std::vector<uint32_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols_, false);
    for (uint32_t i = 0, c = 0; i < rank; ++i) {
        while (w.raw(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Matrix k(F, cols_ - rank, cols_);
    uint32_t row = 0;
    for (uint32_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        k.raw(row, free) = 1;
        for (uint32_t i = 0; i < rank; ++i) k.raw(row, pivot_col[i]) = F.rneg(w.raw(i, free));
        ++row;
    }
    return k;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldError("field mismatch in concatenation");
    if (a.rows_ != b.rows_) throw DimensionError("row count mismatch in concatenation");
    Matrix r(*a.field_, a.rows_, a.cols_ + b.cols_);
    for (uint32_t i = 0; i < a.rows_; ++i) {
        for (uint32_t j = 0; j < a.cols_; ++j) r.raw(i, j) = a.raw(i, j);
        for (uint32_t j = 0; j < b.cols_; ++j) r.raw(i, a.cols_ + j) = b.raw(i, j);
    }
    return r;
}

Matrix Matrix::vconcat(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw FieldError("field mismatch in concatenation");
    if (a.cols_ != b.cols_) throw DimensionError("column count mismatch in concatenation");
    Matrix r(*a.field_, a.rows_ + b.rows_, a.cols_);
    for (uint32_t i = 0; i < a.rows_; ++i)
        for (uint32_t j = 0; j < a.cols_; ++j) r.raw(i, j) = a.raw(i, j);
    for (uint32_t i = 0; i < b.rows_; ++i)
        for (uint32_t j = 0; j < a.cols_; ++j) r.raw(a.rows_ + i, j) = b.raw(i, j);
    return r;
}

Matrix poly_eval_matrix(const Poly& f, const Matrix& a) {
    if (&f.field() != &a.field()) throw FieldError("field mismatch in matrix evaluation");
    if (a.rows() != a.cols()) throw DimensionError("polynomial evaluation needs a square matrix");
    const Field& F = a.field();
    Matrix acc(F, a.rows(), a.cols());
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * a;
        uint32_t c = f.coeffs()[i];
        for (uint32_t d = 0; d < a.rows(); ++d) acc.raw(d, d) = F.radd(acc.raw(d, d), c);
    }
    return acc;
}

Matrix build_tridiagonal(const TridiagonalSpec& spec) {
    if (spec.n < 1) throw DimensionError("tridiagonal order must be at least 1");
    const Field& F = *spec.field;
    Matrix m(F, spec.n, spec.n);
    uint32_t off = spec.kind == TriKind::T ? 1 : 2;
    for (uint32_t i = 0; i < spec.n; ++i) {
        m.raw(i, i) = spec.a;
        if (i + off < spec.n) {
            m.raw(i, i + off) = spec.c;
            m.raw(i + off, i) = spec.b;
        }
    }
    return m;
}

FieldElement dickson_eval(uint64_t n, FieldElement x, FieldElement alpha) {
    const Field& F = *x.field;
    if (alpha.field != x.field) throw FieldError("field mismatch in Dickson evaluation");
    uint32_t prev = 1;  // E_0
    if (n == 0) return {x.field, prev};
    uint32_t cur = x.enc;  // E_1
    for (uint64_t i = 2; i <= n; ++i) {
        uint32_t next = F.rsub(F.rmul(x.enc, cur), F.rmul(alpha.enc, prev));
        prev = cur;
        cur = next;
    }
    return {x.field, cur};
}

namespace {

// Half orders for the +-2 offset kind: det factors through the two
// interleaved plain tridiagonal blocks.
std::pair<uint32_t, uint32_t> tprime_halves(uint32_t n) {
    if (n % 2 == 0) return {n / 2, n / 2};
    return {(n - 1) / 2, (n + 1) / 2};
}

FieldElement char_poly_value_plain(const Field& F, uint32_t n, uint32_t a, uint32_t bc,
                                   FieldElement lambda) {
    FieldElement x{&F, F.rsub(a, lambda.enc)};
    return dickson_eval(n, x, {&F, bc});
}

}  // namespace

FieldElement char_poly_value(const TridiagonalSpec& spec, FieldElement lambda) {
    if (lambda.field != spec.field) throw FieldError("field mismatch in char_poly_value");
    const Field& F = *spec.field;
    uint32_t bc = F.rmul(spec.b, spec.c);
    if (spec.kind == TriKind::T) return char_poly_value_plain(F, spec.n, spec.a, bc, lambda);
    auto [n1, n2] = tprime_halves(spec.n);
    FieldElement v1 = n1 ? char_poly_value_plain(F, n1, spec.a, bc, lambda) : F.one();
    FieldElement v2 = n2 ? char_poly_value_plain(F, n2, spec.a, bc, lambda) : F.one();
    return v1 * v2;
}

FieldElement char_poly_value_in(const TridiagonalSpec& spec, const UnityContext& ctx,
                                FieldElement lambda) {
    if (spec.field != ctx.base) throw FieldError("spec not over the context's base field");
    const Field& E = *ctx.ext;
    uint32_t a = ctx.embed(spec.ea()).enc;
    uint32_t bc = E.rmul(ctx.embed(spec.eb()).enc, ctx.embed(spec.ec()).enc);
    if (spec.kind == TriKind::T) return char_poly_value_plain(E, spec.n, a, bc, lambda);
    auto [n1, n2] = tprime_halves(spec.n);
    FieldElement v1 = n1 ? char_poly_value_plain(E, n1, a, bc, lambda) : E.one();
    FieldElement v2 = n2 ? char_poly_value_plain(E, n2, a, bc, lambda) : E.one();
    return v1 * v2;
}

uint32_t SpectrumMultiset::total_multiplicity() const {
    uint32_t s = 0;
    for (auto& [v, m] : pairs) s += m;
    return s;
}

namespace {

struct PieceDecomp {
    uint32_t n, r, m;
    uint64_t theta_order;  // m+1 in even characteristic, 2(m+1) in odd
};

PieceDecomp decompose(uint32_t n, uint32_t p) {
    uint32_t np1 = n + 1, r = 0;
    while (np1 % p == 0) {
        np1 /= p;
        ++r;
    }
    uint32_t m = np1 - 1;
    uint64_t order = p == 2 ? uint64_t(m + 1) : 2 * uint64_t(m + 1);
    return {n, r, m, order};
}

uint32_t ipow_u32(uint32_t b, uint32_t e) {
    uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

SpectrumMultiset eigen_spectrum(const TridiagonalSpec& spec, std::span<const uint64_t> extra_orders,
                                bool need_mu) {
    const Field& F = *spec.field;
    uint32_t p = F.characteristic();
    uint32_t bc = F.rmul(spec.b, spec.c);
    if (bc == 0)
        throw SpectralUnavailableError("closed-form spectrum requires b*c != 0");

    std::vector<PieceDecomp> decomps;
    if (spec.kind == TriKind::T) {
        decomps.push_back(decompose(spec.n, p));
    } else {
        auto [n1, n2] = tprime_halves(spec.n);
        if (n1) decomps.push_back(decompose(n1, p));
        if (n2) decomps.push_back(decompose(n2, p));
    }

    std::vector<uint64_t> orders;
    for (auto& d : decomps) orders.push_back(d.theta_order);
    orders.insert(orders.end(), extra_orders.begin(), extra_orders.end());
    // In odd characteristic a nonsquare b*c forces an even-degree extension
    // so that sqrt(bc) exists there.
    bool need_even = p != 2 && !F.is_square(bc);
    UnityContext ctx = unity_context_multi(F, orders, need_mu, need_even);
    const Field& E = *ctx.ext;

    // sqrt(bc) in the extension; explicit closed-form roots when the shape
    // provides them, generic square root otherwise.
    uint32_t w;
    if (spec.c == spec.b) {
        w = ctx.embed(spec.eb()).enc;
    } else if (F.has_quadratic_subfield() && spec.c == F.rconj(spec.b) &&
               F.rconj(spec.a) == spec.a) {
        uint64_t qs = F.quadratic_subfield_size();
        uint64_t e = p == 2 ? (qs + 1) * uint64_t(F.size()) / 2 : (qs + 1) / 2;
        w = ctx.embed({&F, F.rpow(spec.b, int64_t(e))}).enc;
    } else if (F.is_square(bc)) {
        w = ctx.embed({&F, *F.rsqrt(bc)}).enc;
    } else {
        w = *E.rsqrt(ctx.embed({&F, bc}).enc);
    }

    uint32_t a = ctx.embed(spec.ea()).enc;
    std::map<uint32_t, uint32_t> mult;  // eigenvalue encoding -> multiplicity
    for (auto& d : decomps) {
        FieldElement theta = ctx.root_of_unity(d.theta_order);
        if (p == 2) {
            if (d.r >= 1) mult[a] += ipow_u32(2, d.r) - 1;
            for (uint32_t i = 1; i <= d.m / 2; ++i) {
                uint32_t ti = E.radd(theta.pow(i).enc, theta.pow(-int64_t(i)).enc);
                uint32_t lam = E.rsub(a, E.rmul(w, ti));
                mult[lam] += ipow_u32(2, d.r + 1);
            }
        } else {
            uint32_t pr = ipow_u32(p, d.r);
            if (d.r >= 1) {
                uint32_t twob = E.radd(w, w);
                mult[E.rsub(a, twob)] += (pr - 1) / 2;
                mult[E.radd(a, twob)] += (pr - 1) / 2;
            }
            for (uint32_t i = 1; i <= d.m; ++i) {
                uint32_t ti = E.radd(theta.pow(i).enc, theta.pow(-int64_t(i)).enc);
                uint32_t lam = E.rsub(a, E.rmul(w, ti));
                mult[lam] += pr;
            }
        }
    }

    SpectrumMultiset s;
    s.ctx = ctx;
    for (auto& [enc, m] : mult) s.pairs.push_back({FieldElement{&E, enc}, m});
    for (auto& d : decomps) s.pieces.push_back({d.n, d.r, d.m});
    return s;
}

}  // namespace tricode

#include "tricode/galois.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>

namespace tricode {

namespace {

std::atomic<uint64_t> g_size_limit{uint64_t(1) << 20};

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over GF(p) as digit vectors (ascending degree), used only
// while searching for the field modulus.
using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    size_t m = mod.size() - 1;  // mod is monic of degree m
    for (size_t d = r.size(); d-- > m;) {
        uint32_t t = r[d];
        if (t == 0) continue;
        r[d] = 0;
        for (size_t i = 0; i < m; ++i)
            r[d - m + i] = (r[d - m + i] + t * (p - mod[i])) % p;
    }
    r.resize(m);
    ptrim(r);
    return r;
}

PVec ppowmod(PVec base, uint64_t e, const PVec& mod, uint32_t p) {
    PVec r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

bool pis_one(const PVec& a) { return a.size() == 1 && a[0] == 1; }

// x has multiplicative order q-1 modulo `mod` iff mod is primitive (this also
// forces irreducibility).
bool x_has_full_order(const PVec& mod, uint32_t p, uint64_t q) {
    PVec x = (mod.size() - 1 == 1) ? PVec{(p - mod[0]) % p} : PVec{0, 1};
    ptrim(x);
    if (!pis_one(ppowmod(x, q - 1, mod, p))) return false;
    for (uint64_t r : prime_factors(q - 1))
        if (pis_one(ppowmod(x, (q - 1) / r, mod, p))) return false;
    return true;
}

}  // namespace

void Field::set_size_limit(uint64_t limit) { g_size_limit.store(limit); }
uint64_t Field::size_limit() { return g_size_limit.load(); }

const Field& Field::get(uint32_t p, uint32_t m) {
    static std::mutex mtx;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, m))).first;
    return *it->second;
}

Field::Field(uint32_t p, uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) throw FieldError("characteristic must be prime");
    if (m < 1) throw FieldError("extension degree must be at least 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > size_limit())
            throw SizeLimitError("field size " + std::to_string(p) + "^" + std::to_string(m) +
                                 " exceeds the configured limit");
    }
    q_ = uint32_t(q);

    // Deterministic modulus: first primitive candidate by ascending encoding
    // of the non-leading coefficients.
    for (uint64_t enc = 1; enc < q; ++enc) {
        if (enc % p == 0) continue;  // need a nonzero constant term
        PVec mod(m + 1, 0);
        uint64_t v = enc;
        for (uint32_t i = 0; i < m; ++i) {
            mod[i] = uint32_t(v % p);
            v /= p;
        }
        mod[m] = 1;
        if (x_has_full_order(mod, p, q)) {
            modulus_ = mod;
            break;
        }
    }
    if (modulus_.empty()) throw FieldError("no primitive modulus found");

    // Exponent table: repeatedly multiply by x and reduce.
    exp_.resize(q_ - 1);
    log_.assign(q_, UINT32_MAX);
    std::vector<uint32_t> digits(m, 0);
    digits[0] = 1;
    for (uint32_t e = 0; e < q_ - 1; ++e) {
        uint32_t enc = 0;
        for (uint32_t i = m; i-- > 0;) enc = enc * p + digits[i];
        exp_[e] = enc;
        log_[enc] = e;
        // times x
        uint32_t top = digits[m - 1];
        for (uint32_t i = m; i-- > 1;) digits[i] = digits[i - 1];
        digits[0] = 0;
        if (top) {
            for (uint32_t i = 0; i < m; ++i)
                digits[i] = (digits[i] + top * (p - modulus_[i])) % p;
        }
    }

    if (p_ != 2 && q_ <= 512) {
        add_table_.resize(size_t(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b < q_; ++b)
                add_table_[size_t(a) * q_ + b] = radd_slow(a, b);
    }
}

uint32_t Field::radd_slow(uint32_t a, uint32_t b) const {
    uint32_t r = 0, mult = 1;
    while (a || b) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::rneg(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t r = 0, mult = 1;
    while (a) {
        uint32_t d = a % p_;
        r += mult * (d ? p_ - d : 0);
        a /= p_;
        mult *= p_;
    }
    return r;
}

uint32_t Field::rinv(uint32_t a) const {
    if (a == 0) throw FieldError("inversion of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint32_t Field::rpow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        throw FieldError("negative power of zero");
    }
    __int128 le = __int128(log_[a]) * e;
    int64_t ord = q_ - 1;
    int64_t r = int64_t(le % ord);
    if (r < 0) r += ord;
    return exp_[r];
}

uint32_t Field::quadratic_subfield_size() const {
    if (!has_quadratic_subfield()) throw FieldError("field has no quadratic subfield structure");
    uint32_t s = 1;
    for (uint32_t i = 0; i < m_ / 2; ++i) s *= p_;
    return s;
}

uint32_t Field::rconj(uint32_t a) const {
    uint32_t s = quadratic_subfield_size();
    if (a == 0) return 0;
    return exp_[(uint64_t(log_[a]) * s) % (q_ - 1)];
}

bool Field::is_square(uint32_t a) const {
    if (p_ == 2 || a == 0) return true;
    return log_[a] % 2 == 0;
}

std::optional<uint32_t> Field::rsqrt(uint32_t a) const {
    if (a == 0) return 0u;
    uint32_t e = log_[a];
    if (p_ == 2) {
        // squaring is the Frobenius, so halve the exponent mod q-1 (odd)
        uint64_t half = e % 2 == 0 ? e / 2 : (uint64_t(e) + q_ - 1) / 2;
        return exp_[half % (q_ - 1)];
    }
    if (e % 2 != 0) return std::nullopt;
    uint32_t r1 = e / 2;
    uint32_t r2 = (r1 + (q_ - 1) / 2) % (q_ - 1);
    return exp_[std::min(r1, r2)];
}

FieldElement Field::element(uint32_t enc) const {
    if (enc >= q_) throw FieldError("element encoding out of range");
    return {this, enc};
}

FieldElement Field::from_int(int64_t v) const {
    int64_t r = v % p_;
    if (r < 0) r += p_;
    return {this, uint32_t(r)};
}

namespace {
const Field& same_field(FieldElement a, FieldElement b) {
    if (a.field != b.field) throw FieldError("field mismatch");
    return *a.field;
}
}  // namespace

FieldElement FieldElement::operator+(FieldElement rhs) const {
    return {field, same_field(*this, rhs).radd(enc, rhs.enc)};
}
FieldElement FieldElement::operator-(FieldElement rhs) const {
    return {field, same_field(*this, rhs).rsub(enc, rhs.enc)};
}
FieldElement FieldElement::operator*(FieldElement rhs) const {
    return {field, same_field(*this, rhs).rmul(enc, rhs.enc)};
}
FieldElement FieldElement::operator/(FieldElement rhs) const {
    return {field, same_field(*this, rhs).rdiv(enc, rhs.enc)};
}
FieldElement FieldElement::operator-() const { return {field, field->rneg(enc)}; }
FieldElement FieldElement::inverse() const { return {field, field->rinv(enc)}; }
FieldElement FieldElement::pow(int64_t e) const { return {field, field->rpow(enc, e)}; }

FieldElement conjugate(FieldElement x) { return {x.field, x.field->rconj(x.enc)}; }

std::optional<FieldElement> sqrt(FieldElement x) {
    auto r = x.field->rsqrt(x.enc);
    if (!r) return std::nullopt;
    return FieldElement{x.field, *r};
}

FieldElement UnityContext::embed(FieldElement x) const {
    if (x.field != base) throw FieldError("embed: element not in the context's base field");
    if (x.enc == 0) return ext->zero();
    uint64_t qe = ext->size();
    return {ext, ext->rexp((uint64_t(base->rlog(x.enc)) * root_log) % (qe - 1))};
}

FieldElement UnityContext::root_of_unity(uint64_t order) const {
    uint64_t qe = ext->size();
    if (order == 0 || (qe - 1) % order != 0)
        throw FieldError("no root of unity of order " + std::to_string(order) + " in GF(" +
                         std::to_string(qe) + ")");
    return {ext, ext->rexp((qe - 1) / order)};
}

UnityContext unity_context_multi(const Field& base, std::span<const uint64_t> orders,
                                 bool need_mu, bool need_even_power) {
    uint32_t p = base.characteristic();
    for (uint64_t k : orders)
        if (k == 0 || k % p == 0)
            throw FieldError("root-of-unity order must be nonzero and coprime to the characteristic");
    bool odd = p != 2;
    uint64_t q = base.size();

    uint64_t s = 0, qs = 1;
    for (;;) {
        ++s;
        qs *= q;
        if (qs > Field::size_limit())
            throw SizeLimitError("required extension exceeds the field size limit");
        bool ok = true;
        for (uint64_t k : orders) ok = ok && (qs - 1) % k == 0;
        if (need_mu && odd) ok = ok && (qs - 1) % 4 == 0;
        if (need_even_power) ok = ok && s % 2 == 0;
        if (ok) break;
    }

    UnityContext ctx;
    ctx.base = &base;
    ctx.ext = &Field::get(p, base.degree() * uint32_t(s));
    ctx.ext_power = s;

    // Embedding: smallest-log root of the base modulus among the subfield of
    // order q inside ext. Mapping generator -> root is the field embedding.
    const Field& E = *ctx.ext;
    uint64_t step = (qs - 1) / (q - 1);
    bool found = false;
    for (uint64_t j = 0; j < q - 1 && !found; ++j) {
        uint32_t h = E.rexp(j * step);
        uint32_t acc = 0;
        const auto& mod = base.modulus();
        // prime-subfield coefficients encode identically in base and ext
        for (size_t i = mod.size(); i-- > 0;) acc = E.radd(E.rmul(acc, h), mod[i]);
        if (acc == 0) {
            ctx.root_log = j * step;
            found = true;
        }
    }
    if (!found) throw FieldError("embedding root not found");  // cannot happen

    ctx.theta_order = orders.empty() ? 1 : orders[0];
    ctx.theta = ctx.root_of_unity(ctx.theta_order);
    if (need_mu && odd) ctx.mu = ctx.root_of_unity(4);
    return ctx;
}

UnityContext unity_context(const Field& base, uint64_t k, bool need_mu) {
    uint64_t orders[1] = {k};
    return unity_context_multi(base, orders, need_mu);
}

FieldElement parse_element(const Field& f, const std::string& text, std::size_t pos_offset) {
    std::string t;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw ParseError("empty element", pos_offset);
    if (t == "w") return f.generator();
    try {
        if (t.rfind("w^", 0) == 0) {
            const std::string es = t.substr(2);
            if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad exponent in element '" + text + "'", pos_offset);
            return f.exp(std::stoull(es));
        }
        if (t.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad element '" + text + "'", pos_offset);
        return f.from_int(int64_t(std::stoll(t)));
    } catch (const std::out_of_range&) {
        throw ParseError("numeric overflow in element '" + text + "'", pos_offset);
    }
}

std::string format_element(FieldElement x) {
    if (x.enc == 0) return "0";
    if (x.enc < x.field->characteristic()) return std::to_string(x.enc);
    uint32_t e = x.field->rlog(x.enc);
    if (e == 1) return "w";
    return "w^" + std::to_string(e);
}

}  // namespace tricode

#include "tricode/codes.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace tricode {

LinearCode LinearCode::from_generator(const Matrix& g, Inner inner) {
    bool nonzero = false;
    for (uint32_t i = 0; i < g.rows() && !nonzero; ++i)
        for (uint32_t j = 0; j < g.cols() && !nonzero; ++j) nonzero = g.raw(i, j) != 0;
    if (!nonzero) throw DimensionError("generator matrix is zero");
    if (inner == Inner::Hermitian && !g.field().has_quadratic_subfield())
        throw FieldError("Hermitian codes need a field with quadratic structure");
    return from_row_space(g, inner);
}

LinearCode LinearCode::from_row_space(const Matrix& g, Inner inner) {
    Matrix basis = g.row_basis();
    uint32_t n = g.cols(), k = basis.rows();
    return LinearCode(std::move(basis), n, k, inner);
}

LinearCode dual(const LinearCode& c) {
    Matrix k = c.generator().kernel_basis();
    if (c.inner() == Inner::Hermitian) k = k.conj();
    return LinearCode::from_row_space(k, c.inner());
}

Matrix gram_matrix(const LinearCode& c) {
    const Matrix& g = c.generator();
    return c.inner() == Inner::Euclidean ? g * g.transpose() : g * g.conj_transpose();
}

uint32_t hull_dimension(const LinearCode& c) { return c.dimension() - gram_matrix(c).rank(); }

bool is_lcd(const LinearCode& c) { return hull_dimension(c) == 0; }

namespace {

uint64_t pow_saturated(uint32_t q, uint32_t k) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > UINT64_MAX / q) return UINT64_MAX;
        total *= q;
    }
    return total;
}

// Binary path: rows packed into 64-bit words, Gray-code walk over messages.
void enumerate_binary(const Matrix& g, uint64_t lo, uint64_t hi, std::vector<uint64_t>& counts) {
    uint32_t k = g.rows(), n = g.cols();
    uint32_t words = (n + 63) / 64;
    std::vector<uint64_t> rows(size_t(k) * words, 0);
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (g.raw(i, j)) rows[size_t(i) * words + j / 64] |= uint64_t(1) << (j % 64);

    std::vector<uint64_t> state(words, 0);
    uint64_t gray = lo ^ (lo >> 1);
    for (uint32_t i = 0; i < k; ++i)
        if (gray >> i & 1)
            for (uint32_t w = 0; w < words; ++w) state[w] ^= rows[size_t(i) * words + w];

    auto weight = [&] {
        uint32_t s = 0;
        for (uint32_t w = 0; w < words; ++w) s += std::popcount(state[w]);
        return s;
    };
    counts[weight()]++;
    for (uint64_t idx = lo + 1; idx < hi; ++idx) {
        uint32_t bit = std::countr_zero(idx);
        for (uint32_t w = 0; w < words; ++w) state[w] ^= rows[size_t(bit) * words + w];
        counts[weight()]++;
    }
}

// Generic path: odometer walk over base-q messages; each digit step applies a
// sparse precomputed delta row and updates the weight incrementally.
void enumerate_generic(const Matrix& g, uint64_t lo, uint64_t hi, std::vector<uint64_t>& counts) {
    const Field& F = g.field();
    uint32_t q = F.size(), k = g.rows(), n = g.cols();

    struct Delta {
        std::vector<std::pair<uint32_t, uint32_t>> entries;  // (column, value)
    };
    // delta[row][j]: change when the row's digit steps from j to (j+1) mod q
    std::vector<Delta> deltas(size_t(k) * q);
    for (uint32_t i = 0; i < k; ++i)
        for (uint32_t j = 0; j < q; ++j) {
            uint32_t step = F.rsub((j + 1) % q, j);
            Delta& d = deltas[size_t(i) * q + j];
            for (uint32_t col = 0; col < n; ++col) {
                uint32_t v = F.rmul(step, g.raw(i, col));
                if (v) d.entries.push_back({col, v});
            }
        }

    std::vector<uint32_t> digits(k, 0);
    std::vector<uint32_t> word(n, 0);
    uint32_t weight = 0;
    {
        uint64_t rem = lo;
        for (uint32_t i = 0; i < k; ++i) {
            digits[i] = uint32_t(rem % q);
            rem /= q;
        }
        for (uint32_t i = 0; i < k; ++i) {
            if (digits[i] == 0) continue;
            for (uint32_t col = 0; col < n; ++col)
                word[col] = F.radd(word[col], F.rmul(digits[i], g.raw(i, col)));
        }
        for (uint32_t col = 0; col < n; ++col) weight += word[col] != 0;
    }

    auto apply = [&](const Delta& d) {
        for (auto [col, v] : d.entries) {
            uint32_t old = word[col];
            uint32_t nw = F.radd(old, v);
            word[col] = nw;
            weight += (nw != 0) - (old != 0);
        }
    };

    counts[weight]++;
    for (uint64_t idx = lo + 1; idx < hi; ++idx) {
        uint32_t pos = 0;
        for (;;) {
            uint32_t j = digits[pos];
            apply(deltas[size_t(pos) * q + j]);
            digits[pos] = (j + 1) % q;
            if (digits[pos] != 0) break;
            ++pos;  // carried
        }
        counts[weight]++;
    }
}

}  // namespace

std::vector<uint64_t> weight_distribution(const LinearCode& c, uint64_t budget, uint32_t workers) {
    const Matrix& g = c.generator();
    uint32_t q = c.field().size(), k = c.dimension(), n = c.length();
    std::vector<uint64_t> counts(n + 1, 0);
    if (k == 0) {
        counts[0] = 1;
        return counts;
    }
    uint64_t total = pow_saturated(q, k);
    if (total > budget) throw BudgetError(total, budget);

    workers = std::max<uint32_t>(1, std::min<uint32_t>(workers, 64));
    if (workers == 1 || total < 1 << 16) {
        if (q == 2)
            enumerate_binary(g, 0, total, counts);
        else
            enumerate_generic(g, 0, total, counts);
        return counts;
    }
    std::vector<std::vector<uint64_t>> partial(workers, std::vector<uint64_t>(n + 1, 0));
    std::vector<std::thread> pool;
    for (uint32_t w = 0; w < workers; ++w) {
        uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            if (q == 2)
                enumerate_binary(g, lo, hi, partial[w]);
            else
                enumerate_generic(g, lo, hi, partial[w]);
        });
    }
    for (auto& t : pool) t.join();
    for (auto& p : partial)
        for (uint32_t i = 0; i <= n; ++i) counts[i] += p[i];
    return counts;
}

uint32_t min_distance(const LinearCode& c, uint64_t budget, uint32_t workers) {
    auto w = weight_distribution(c, budget, workers);
    for (uint32_t i = 1; i < w.size(); ++i)
        if (w[i]) return i;
    throw DimensionError("zero code has no nonzero codeword");
}

std::vector<uint64_t> macwilliams_dual_distribution(const std::vector<uint64_t>& w, uint32_t n,
                                                    uint32_t k, uint32_t q) {
    if (w.size() != size_t(n) + 1) throw DimensionError("weight distribution has wrong length");
    if (n > 64) throw DimensionError("MacWilliams transform supported up to length 64");
    uint64_t qk = 1;
    for (uint32_t i = 0; i < k; ++i) qk *= q;
    uint64_t sum = 0;
    for (uint64_t a : w) sum += a;
    if (sum != qk || w[0] != 1) throw DimensionError("malformed weight distribution");

    // binomials up to n
    std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
    for (uint32_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (uint32_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    std::vector<__int128> qm1pow(n + 1, 1);
    for (uint32_t i = 1; i <= n; ++i) qm1pow[i] = qm1pow[i - 1] * (q - 1);

    std::vector<uint64_t> b(n + 1, 0);
    for (uint32_t j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (uint32_t i = 0; i <= n; ++i) {
            if (w[i] == 0) continue;
            __int128 kr = 0;  // Krawtchouk K_j(i)
            for (uint32_t s = 0; s <= j && s <= i; ++s) {
                if (j - s > n - i) continue;
                __int128 term = qm1pow[j - s] * binom[i][s] * binom[n - i][j - s];
                kr += (s % 2 == 0) ? term : -term;
            }
            acc += __int128(w[i]) * kr;
        }
        if (acc < 0 || acc % __int128(qk) != 0)
            throw DimensionError("MacWilliams transform did not produce integers");
        b[j] = uint64_t(acc / __int128(qk));
    }
    return b;
}

bool is_formally_self_dual(const LinearCode& c, uint64_t budget, uint32_t workers) {
    auto w = weight_distribution(c, budget, workers);
    auto b = macwilliams_dual_distribution(w, c.length(), c.dimension(), c.field().size());
    return w == b;
}

int64_t griesmer_defect(uint32_t n, uint32_t k, uint32_t d, uint32_t q) {
    if (k < 1 || d < 1) throw DimensionError("Griesmer defect needs K >= 1 and D >= 1");
    uint64_t sum = 0, qi = 1;
    for (uint32_t i = 0; i < k; ++i) {
        sum += (d + qi - 1) / qi;
        if (qi <= UINT64_MAX / q) qi *= q;
        // once q^i >= d every remaining term is 1, so saturation is harmless
    }
    return int64_t(n) - int64_t(sum);
}

CodeReport analyze(const LinearCode& c, const std::string& construction_echo, uint64_t budget,
                   uint32_t workers) {
    CodeReport r;
    r.n = c.length();
    r.k = c.dimension();
    r.q = c.field().size();
    r.inner = c.inner();
    r.hull_dim = hull_dimension(c);
    r.lcd = r.hull_dim == 0;
    r.construction = construction_echo;
    r.weights = weight_distribution(c, budget, workers);
    for (uint32_t i = 1; i <= r.n; ++i)
        if (r.weights[i]) {
            r.d = i;
            break;
        }
    r.fsd = r.weights == macwilliams_dual_distribution(r.weights, r.n, r.k, r.q);
    r.griesmer = griesmer_defect(r.n, r.k, r.d, r.q);
    return r;
}

std::string format_report_line(const CodeReport& r) {
    std::string s = "[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                    std::to_string(r.d) + "]_" + std::to_string(r.q);
    s += r.inner == Inner::Euclidean ? " inner=E" : " inner=H";
    s += " hull=" + std::to_string(r.hull_dim);
    s += std::string(" lcd=") + (r.lcd ? "y" : "n");
    s += std::string(" fsd=") + (r.fsd ? "y" : "n");
    s += " griesmer_defect=" + std::to_string(r.griesmer);
    return s;
}

}  // namespace tricode

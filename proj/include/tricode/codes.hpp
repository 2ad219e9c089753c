#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tricode/linalg.hpp"

namespace tricode {

/// Enumeration over q^K messages would exceed the configured budget. The
/// condition is recoverable; `required` carries the needed enumeration size
/// (saturated at UINT64_MAX).
struct BudgetError : std::runtime_error {
    BudgetError(uint64_t required_, uint64_t budget_)
        : std::runtime_error("enumeration of " + std::to_string(required_) +
                             " codewords exceeds budget " + std::to_string(budget_)),
          required(required_),
          budget(budget_) {}
    uint64_t required;
    uint64_t budget;
};

inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 26;

enum class Inner { Euclidean, Hermitian };

/// [N, K] linear code held as a reduced full-rank generator basis. The
/// original row space is preserved by the reduction.
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& g, Inner inner);
    /// Internal/dual use: accepts an empty row space (K = 0).
    static LinearCode from_row_space(const Matrix& g, Inner inner);

    const Field& field() const { return gen_.field(); }
    uint32_t length() const { return n_; }
    uint32_t dimension() const { return k_; }
    const Matrix& generator() const { return gen_; }
    Inner inner() const { return inner_; }

private:
    LinearCode(Matrix gen, uint32_t n, uint32_t k, Inner inner)
        : gen_(std::move(gen)), n_(n), k_(k), inner_(inner) {}
    Matrix gen_;
    uint32_t n_, k_;
    Inner inner_;
};

/// Dual code under the code's inner product.
LinearCode dual(const LinearCode& c);

/// G G^T (Euclidean) or G conj(G)^T (Hermitian); always K x K.
Matrix gram_matrix(const LinearCode& c);

/// dim(C intersect C-dual) = K - rank(gram).
uint32_t hull_dimension(const LinearCode& c);

/// Trivial hull, i.e. the Gram matrix is invertible.
bool is_lcd(const LinearCode& c);

/// Exact weight distribution A_0..A_N by message-space enumeration
/// (Gray-coded word-packed walk for q = 2, odometer walk otherwise).
std::vector<uint64_t> weight_distribution(const LinearCode& c, uint64_t budget = kDefaultBudget,
                                          uint32_t workers = 1);

/// Exact minimum nonzero weight.
uint32_t min_distance(const LinearCode& c, uint64_t budget = kDefaultBudget, uint32_t workers = 1);

/// Weight distribution of the dual code from the distribution of the code,
/// via the Krawtchouk transform; exact integer arithmetic throughout.
std::vector<uint64_t> macwilliams_dual_distribution(const std::vector<uint64_t>& w, uint32_t n,
                                                    uint32_t k, uint32_t q);

/// Same weight distribution as the dual (which conjugation never changes, so
/// one transform serves both inner products).
bool is_formally_self_dual(const LinearCode& c, uint64_t budget = kDefaultBudget,
                           uint32_t workers = 1);

/// N - sum_{i<K} ceil(D / q^i); nonnegative for every real code.
int64_t griesmer_defect(uint32_t n, uint32_t k, uint32_t d, uint32_t q);

struct CodeReport {
    uint32_t n = 0, k = 0, d = 0;
    uint32_t q = 0;
    Inner inner = Inner::Euclidean;
    uint32_t hull_dim = 0;
    bool lcd = false;
    bool fsd = false;
    int64_t griesmer = 0;
    std::vector<uint64_t> weights;
    std::string construction;  // echo of the construction this came from
};

CodeReport analyze(const LinearCode& c, const std::string& construction_echo = "",
                   uint64_t budget = kDefaultBudget, uint32_t workers = 1);

/// `[N,K,D]_q inner=E|H hull=l lcd=y/n fsd=y/n griesmer_defect=g`
std::string format_report_line(const CodeReport& r);

}  // namespace tricode

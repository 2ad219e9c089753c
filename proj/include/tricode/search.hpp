#pragma once

#include <vector>

#include "tricode/constructions.hpp"

namespace tricode {

/// Exhaustive polynomial-tuple search over one tridiagonal matrix. Candidates
/// are the (t-1)-tuples of polynomials of degree <= max_degree with
/// coefficients drawn from coeff_set; survivors of the LCD filter get their
/// exact minimum distance computed.
struct SearchConfig {
    TridiagonalSpec tridiag;
    Inner inner = Inner::Euclidean;
    uint32_t t = 2;
    uint32_t max_degree = 3;
    std::vector<uint32_t> coeff_set;  // encoded field elements
    uint64_t budget = kDefaultBudget;
    uint32_t workers = 1;
    bool spectral_filter = true;  // false: filter with the Gram oracle instead
    uint64_t max_candidates = uint64_t(1) << 20;
};

struct SearchRow {
    uint64_t candidate_index = 0;  // position in the enumeration (the tie-break)
    std::vector<Poly> polys;
    CodeReport report;
};

struct SearchResult {
    uint64_t space_size = 0;
    std::vector<SearchRow> rows;  // distance descending, then candidate index
};

/// Number of candidate tuples the config spans (saturating at UINT64_MAX).
uint64_t search_space_size(const SearchConfig& cfg);

SearchResult run_search(const SearchConfig& cfg);

}  // namespace tricode

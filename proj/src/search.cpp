#include "tricode/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace tricode {

namespace {

std::vector<Poly> candidate_polys(const SearchConfig& cfg, uint64_t index) {
    const Field& F = *cfg.tridiag.field;
    uint32_t coeffs_per_poly = cfg.max_degree + 1;
    uint32_t npolys = cfg.t - 1;
    std::vector<Poly> polys;
    polys.reserve(npolys);
    uint64_t rem = index;
    for (uint32_t pi = 0; pi < npolys; ++pi) {
        std::vector<uint32_t> c(coeffs_per_poly);
        for (uint32_t ci = 0; ci < coeffs_per_poly; ++ci) {
            c[ci] = cfg.coeff_set[rem % cfg.coeff_set.size()];
            rem /= cfg.coeff_set.size();
        }
        polys.push_back(Poly(F, std::move(c)));
    }
    return polys;
}

}  // namespace

uint64_t search_space_size(const SearchConfig& cfg) {
    if (cfg.t < 2) throw DimensionError("search needs index t >= 2");
    if (cfg.coeff_set.empty()) return 0;
    uint32_t positions = (cfg.max_degree + 1) * (cfg.t - 1);
    uint64_t space = 1;
    for (uint32_t i = 0; i < positions; ++i) {
        if (space > UINT64_MAX / cfg.coeff_set.size()) return UINT64_MAX;
        space *= cfg.coeff_set.size();
    }
    return space;
}

SearchResult run_search(const SearchConfig& cfg) {
    SearchResult out;
    uint64_t space = search_space_size(cfg);
    out.space_size = space;
    if (space == 0) return out;
    if (space > cfg.max_candidates)
        throw DimensionError("search space of " +
                             (space == UINT64_MAX ? std::string("more than 2^64")
                                                  : std::to_string(space)) +
                             " candidates exceeds the configured maximum " +
                             std::to_string(cfg.max_candidates));

    std::vector<std::optional<SearchRow>> hits(space);
    auto eval_candidate = [&](uint64_t idx) {
        ConstructionSpec spec;
        spec.tridiag = cfg.tridiag;
        spec.inner = cfg.inner;
        spec.payload = DerivativePayload{candidate_polys(cfg, idx)};
        bool lcd = cfg.spectral_filter ? spectral_verdict(spec).decision == HullDecision::Lcd
                                       : is_lcd(build_code(spec));
        if (!lcd) return;
        SearchRow row;
        row.candidate_index = idx;
        row.polys = spec.derivative().polys;
        row.report = analyze(build_code(spec), format_construction(spec), cfg.budget, 1);
        hits[idx] = std::move(row);
    };

    uint32_t workers = std::max<uint32_t>(1, cfg.workers);
    if (workers == 1) {
        for (uint64_t idx = 0; idx < space; ++idx) eval_candidate(idx);
    } else {
        std::atomic<uint64_t> next{0};
        std::vector<std::thread> pool;
        for (uint32_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (uint64_t i = next++; i < space; i = next++) eval_candidate(i);
            });
        for (auto& t : pool) t.join();
    }

    for (auto& h : hits)
        if (h) out.rows.push_back(std::move(*h));
    std::stable_sort(out.rows.begin(), out.rows.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.report.d != b.report.d) return a.report.d > b.report.d;
        return a.candidate_index < b.candidate_index;
    });
    return out;
}

}  // namespace tricode

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tricode/constructions.hpp"

using namespace tricode;

namespace {

Matrix from_rows(const Field& f, std::vector<std::vector<const char*>> rows) {
    Matrix m(f, uint32_t(rows.size()), uint32_t(rows[0].size()));
    for (uint32_t i = 0; i < m.rows(); ++i)
        for (uint32_t j = 0; j < m.cols(); ++j) m.raw(i, j) = parse_element(f, rows[i][j]).enc;
    return m;
}

bool verdict_matches_oracle(const ConstructionSpec& spec) {
    PredicateVerdict v = spectral_verdict(spec);
    uint32_t hull = hull_dimension(build_code(spec));
    bool lcd_agree = (v.decision == HullDecision::Lcd) == (hull == 0);
    bool onedim_ok = v.decision != HullDecision::OneDimHull || hull == 1;
    bool notlcd_ok = v.decision != HullDecision::NotLcd || hull >= 1;
    return lcd_agree && onedim_ok && notlcd_ok;
}

}  // namespace

TEST_CASE("derivative generator: quaternary Hermitian order 6, pinned") {
    const Field& F4 = Field::get(2, 2);
    ConstructionSpec spec = parse_construction("q=4 kind=T n=6 a=1 b=w^2 c=w inner=H f=w*x^3+x");
    Matrix g = derivative_generator(spec);
    Matrix expected = Matrix::hconcat(
        Matrix::identity(F4, 6),
        from_rows(F4, {{"1", "1", "1", "w", "0", "0"},
                       {"w", "w^2", "w", "1", "w", "0"},
                       {"w^2", "w^2", "w^2", "w", "1", "w"},
                       {"w", "w^2", "w^2", "w^2", "w", "1"},
                       {"0", "w", "w^2", "w^2", "w^2", "1"},
                       {"0", "0", "w", "w^2", "w", "1"}}));
    CHECK(g == expected);
}

TEST_CASE("derivative code basics") {
    SUBCASE("zero polynomial gives (I | 0) with distance 1, LCD") {
        ConstructionSpec spec = parse_construction("q=3 kind=T n=4 a=1 b=1 inner=E f=0");
        CodeReport r = analyze(build_code(spec));
        CHECK(r.n == 8);
        CHECK(r.k == 4);
        CHECK(r.d == 1);
        CHECK(r.lcd);
        CHECK(spectral_verdict(spec).decision == HullDecision::Lcd);
    }
    SUBCASE("ternary order 2, index 3") {
        ConstructionSpec spec = parse_construction("q=3 kind=T n=2 a=1 b=1 inner=E f=x;x+1");
        CodeReport r = analyze(build_code(spec));
        CHECK(r.n == 6);
        CHECK(r.k == 2);
        CHECK(r.d == 4);
    }
}

TEST_CASE("power generators, pinned") {
    SUBCASE("binary order 6 cubed") {
        ConstructionSpec spec = parse_construction("q=2 kind=T n=6 a=1 b=1 inner=E k=3");
        Matrix g = power_generator(spec);
        const Field& F2 = Field::get(2, 1);
        Matrix expected = Matrix::hconcat(Matrix::identity(F2, 6),
                                          from_rows(F2, {{"0", "1", "1", "1", "0", "0"},
                                                         {"1", "1", "0", "1", "1", "0"},
                                                         {"1", "0", "1", "0", "1", "1"},
                                                         {"1", "1", "0", "1", "0", "1"},
                                                         {"0", "1", "1", "0", "1", "1"},
                                                         {"0", "0", "1", "1", "1", "0"}}));
        CHECK(g == expected);
    }
    SUBCASE("order 4 squared over GF(5)") {
        ConstructionSpec spec = parse_construction("q=5 kind=T n=4 a=1 b=1 inner=E k=2");
        const Field& F5 = Field::get(5, 1);
        Matrix expected = Matrix::hconcat(Matrix::identity(F5, 4),
                                          from_rows(F5, {{"2", "2", "1", "0"},
                                                         {"2", "3", "2", "1"},
                                                         {"1", "2", "3", "2"},
                                                         {"0", "1", "2", "2"}}));
        CHECK(power_generator(spec) == expected);
    }
    SUBCASE("k=1 is (I | T)") {
        ConstructionSpec spec = parse_construction("q=2 kind=T n=5 a=1 b=1 inner=E k=1");
        Matrix g = power_generator(spec);
        const Field& F2 = Field::get(2, 1);
        CHECK(g == Matrix::hconcat(Matrix::identity(F2, 5), build_tridiagonal(spec.tridiag)));
    }
}

TEST_CASE("payload decomposition and validation") {
    CHECK(make_power_payload(12, 2).k_prime == 3);
    CHECK(make_power_payload(12, 2).t == 2);
    CHECK(make_power_payload(12, 3).k_prime == 4);
    CHECK(make_power_payload(7, 5).k_prime == 7);
    CHECK_THROWS_AS(make_power_payload(0, 2), DimensionError);
    // Euclidean shape needs c = b
    CHECK_THROWS_AS(parse_construction("q=3 kind=T n=3 a=1 b=1 c=2 inner=E f=x"), FieldError);
    // Hermitian shape needs c = conj(b) and a in the subfield
    CHECK_THROWS_AS(parse_construction("q=4 kind=T n=3 a=1 b=w c=w inner=H f=x"), FieldError);
    CHECK_THROWS_AS(parse_construction("q=4 kind=T n=3 a=w b=w c=w^2 inner=H f=x"), FieldError);
    // power codes are Euclidean
    CHECK_THROWS_AS(parse_construction("q=4 kind=T n=3 a=1 b=w c=w^2 inner=H k=2"), FieldError);
}

TEST_CASE("spectral predicates on pinned cases") {
    SUBCASE("binary order 5, f = x is not LCD; determinant oracle agrees") {
        ConstructionSpec spec = parse_construction("q=2 kind=T n=5 a=1 b=1 inner=E f=x");
        PredicateVerdict v = lcd_by_spectrum_euclidean(spec);
        CHECK(v.decision != HullDecision::Lcd);
        const Field& F2 = Field::get(2, 1);
        Matrix t = build_tridiagonal(spec.tridiag);
        Matrix gram = Matrix::identity(F2, 5) + t * t;
        CHECK(oracles::det_cofactor(gram).is_zero());
        CHECK_FALSE(is_lcd(build_code(spec)));
    }
    SUBCASE("all-zero polynomials are LCD in every characteristic") {
        for (const char* s : {"q=2 kind=T n=4 a=1 b=1 inner=E f=0", "q=5 kind=T n=4 a=2 b=1 inner=E f=0;0",
                              "q=4 kind=T n=3 a=1 b=w c=w^2 inner=H f=0"}) {
            ConstructionSpec spec = parse_construction(s);
            CHECK(spectral_verdict(spec).decision == HullDecision::Lcd);
            CHECK(is_lcd(build_code(spec)));
        }
    }
    SUBCASE("binary order 12 witness facts") {
        ConstructionSpec spec =
            parse_construction("q=2 kind=T n=12 a=1 b=1 inner=E f=x^9+x^8+x^4+x^3+x^2");
        PredicateVerdict v = lcd_by_spectrum_euclidean(spec);
        CHECK(v.decision == HullDecision::Lcd);
        CHECK(v.witness_set.size() == 6);
        for (auto& s : v.witness_set) CHECK(s != v.ctx->ext->one());
    }
    SUBCASE("one-dimension hull over GF(5), order 7") {
        ConstructionSpec spec =
            parse_construction("q=5 kind=T n=7 a=1 b=1 inner=E f=x^4+2*x^3+3*x^2+x");
        PredicateVerdict v = one_dim_hull_by_spectrum(spec);
        CHECK(v.decision == HullDecision::OneDimHull);
        CHECK(v.hit_multiplicity == 1);
        CHECK(hull_dimension(build_code(spec)) == 1);
        // exactly one of +-mu is hit, once
        REQUIRE(v.ctx.has_value());
        REQUIRE(v.ctx->mu.has_value());
        FieldElement mu = *v.ctx->mu;
        int mu_hits = 0, neg_mu_hits = 0;
        for (auto& s : v.witness_set) {
            if (s == mu) ++mu_hits;
            if (s == -mu) ++neg_mu_hits;
        }
        CHECK(mu_hits + neg_mu_hits == 1);
    }
    SUBCASE("inner-product tag is enforced") {
        ConstructionSpec spec = parse_construction("q=2 kind=T n=4 a=1 b=1 inner=E f=x");
        CHECK_THROWS_AS(lcd_by_spectrum_hermitian(spec), FieldError);
        ConstructionSpec pw = parse_construction("q=2 kind=T n=4 a=1 b=1 inner=E k=2");
        CHECK_THROWS_AS(lcd_by_spectrum_euclidean(pw), DimensionError);
        CHECK(lcd_power_by_spectrum(pw).spectral);
    }
}

TEST_CASE("b = 0 routes to the Gram oracle with an annotation") {
    ConstructionSpec spec = parse_construction("q=5 kind=T n=3 a=2 b=0 inner=E f=x+1");
    PredicateVerdict v = spectral_verdict(spec);
    CHECK_FALSE(v.spectral);
    CHECK(v.note.find("unavailable") != std::string::npos);
    // T(a,0,0) = aI, so f(A) = f(a) I and the gram is (1 + f(a)^2) I
    const Field& F5 = Field::get(5, 1);
    FieldElement fa = parse_poly(F5, "x+1").eval(F5.from_int(2));
    bool expect_lcd = !(F5.one() + fa * fa).is_zero();
    CHECK((v.decision == HullDecision::Lcd) == expect_lcd);
    CHECK(verdict_matches_oracle(spec));

    ConstructionSpec pw = parse_construction("q=2 kind=T n=3 a=1 b=0 inner=E k=2");
    PredicateVerdict vp = spectral_verdict(pw);
    CHECK_FALSE(vp.spectral);
    CHECK(verdict_matches_oracle(pw));
}

TEST_CASE("predicate-oracle agreement, exhaustive small sweeps") {
    SUBCASE("binary derivative, all polynomials of degree <= 4, n <= 5") {
        const Field& F2 = Field::get(2, 1);
        for (uint32_t n = 2; n <= 5; ++n)
            for (uint32_t a = 0; a < 2; ++a)
                for (uint32_t fenc = 0; fenc < 32; ++fenc) {
                    std::vector<uint32_t> coeffs;
                    for (uint32_t i = 0; i < 5; ++i) coeffs.push_back(fenc >> i & 1);
                    ConstructionSpec spec;
                    spec.tridiag = {&F2, TriKind::T, n, a, 1, 1};
                    spec.payload = DerivativePayload{{Poly(F2, coeffs)}};
                    CHECK(verdict_matches_oracle(spec));
                }
    }
    SUBCASE("quaternary Hermitian derivative, sampled coefficients") {
        const Field& F4 = Field::get(2, 2);
        std::mt19937 rng(41);
        for (int trial = 0; trial < 300; ++trial) {
            uint32_t n = 2 + rng() % 5;
            uint32_t b = 1 + rng() % 3;
            std::vector<uint32_t> coeffs(1 + rng() % 5);
            for (auto& c : coeffs) c = rng() % 4;
            ConstructionSpec spec;
            spec.tridiag = {&F4, TriKind::T, n, uint32_t(rng() % 2), b, F4.rconj(b)};
            spec.inner = Inner::Hermitian;
            spec.payload = DerivativePayload{{Poly(F4, coeffs)}};
            CHECK(verdict_matches_oracle(spec));
        }
    }
    SUBCASE("power codes against the derivative route with f = x^k") {
        const Field& F4 = Field::get(2, 2);
        for (uint32_t n = 2; n <= 5; ++n)
            for (uint32_t a = 0; a < 4; ++a)
                for (uint32_t b = 1; b < 4; ++b)
                    for (uint64_t k : {1u, 2u, 4u}) {  // k' = 1 cases
                        ConstructionSpec pw;
                        pw.tridiag = {&F4, TriKind::T, n, a, b, b};
                        pw.payload = make_power_payload(k, 2);
                        ConstructionSpec der = pw;
                        std::vector<uint32_t> coeffs(k + 1, 0);
                        coeffs[k] = 1;
                        der.payload = DerivativePayload{{Poly(F4, coeffs)}};
                        CHECK(spectral_verdict(pw).decision == spectral_verdict(der).decision);
                        CHECK(verdict_matches_oracle(pw));
                    }
    }
}

TEST_CASE("minus-one eigenvalue of a squared symmetric matrix corresponds to +-mu") {
    // det tests in a common extension holding a square root of -1
    std::mt19937 rng(53);
    for (uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
        const Field& F = q == 4 ? Field::get(2, 2) : q == 9 ? Field::get(3, 2) : Field::get(q, 1);
        bool even = F.characteristic() == 2;
        UnityContext ctx = unity_context(F, 1, /*need_mu=*/!even);
        const Field& E = *ctx.ext;
        for (int trial = 0; trial < 40; ++trial) {
            uint32_t n = 1 + rng() % 4;
            Matrix a = oracles::random_symmetric(F, n, rng);
            Matrix ae(E, n, n);
            for (uint32_t i = 0; i < n; ++i)
                for (uint32_t j = 0; j < n; ++j) ae.raw(i, j) = ctx.embed(a.at(i, j)).enc;
            Matrix eye = Matrix::identity(E, n);
            bool square_hits = (ae * ae + eye).det().is_zero();
            bool direct_hits;
            if (even) {
                direct_hits = (ae + eye).det().is_zero();
            } else {
                Matrix mu_eye = eye.scaled(*ctx.mu);
                direct_hits = (ae - mu_eye).det().is_zero() || (ae + mu_eye).det().is_zero();
            }
            CHECK(square_hits == direct_hits);
        }
    }
}

TEST_CASE("spaced-kind LCD equivalence with the half orders") {
    const Field& F3 = Field::get(3, 1);
    std::vector<Poly> fs = {parse_poly(F3, "x"), parse_poly(F3, "x^2"), parse_poly(F3, "x+1")};
    for (uint32_t order = 4; order <= 7; ++order)
        for (uint32_t a = 0; a < 3; ++a)
            for (uint32_t b = 1; b < 3; ++b)
                for (const Poly& f : fs) {
                    ConstructionSpec spec;
                    spec.tridiag = {&F3, TriKind::TPrime, order, a, b, b};
                    spec.payload = DerivativePayload{{f}};
                    bool via_halves = tprime_lcd_equivalence(spec);
                    bool direct_spectral = spectral_verdict(spec).decision == HullDecision::Lcd;
                    bool via_gram = is_lcd(build_code(spec));
                    CHECK(via_halves == via_gram);
                    CHECK(direct_spectral == via_gram);
                }
}

TEST_CASE("construction text format round trips") {
    for (const char* s : {"q=2 kind=T n=12 a=1 b=1 c=1 inner=E f=x^9+x^8+x^4+x^3+x^2",
                          "q=4 kind=T n=6 a=1 b=w^2 c=w inner=H f=w*x^3+x",
                          "q=5 kind=T n=4 a=1 b=1 c=1 inner=E k=2",
                          "q=3 kind=T' n=5 a=2 b=1 c=1 inner=E f=x;x+1"}) {
        ConstructionSpec spec = parse_construction(s);
        CHECK(format_construction(spec) == s);
        CHECK(format_construction(parse_construction(format_construction(spec))) ==
              format_construction(spec));
    }
    CHECK_THROWS_AS(parse_construction("q=6 kind=T n=2 a=1 b=1 inner=E f=x"), ParseError);
    CHECK_THROWS_AS(parse_construction("q=2 kind=T n=2 a=1 b=1 inner=E"), ParseError);
    CHECK_THROWS_AS(parse_construction("q=2 kind=T n=2 a=1 b=1 inner=E f=x k=2"), ParseError);
    CHECK_THROWS_AS(parse_construction("q=2 kind=Q n=2 a=1 b=1 inner=E f=x"), ParseError);
    CHECK_THROWS_AS(parse_construction("nonsense"), ParseError);
}

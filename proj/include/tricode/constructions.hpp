#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tricode/codes.hpp"
#include "tricode/linalg.hpp"

namespace tricode {

/// Payload of a derivative code: the polynomial list f_1..f_{t-1}.
struct DerivativePayload {
    std::vector<Poly> polys;
    uint32_t index() const { return uint32_t(polys.size()) + 1; }  // t
};

/// Payload of a power code: the exponent k with its decomposition
/// k = p^t * k', gcd(k', p) = 1.
struct PowerPayload {
    uint64_t k = 1;
    uint64_t k_prime = 1;
    uint32_t t = 0;
};

/// A derivative code (I | f_1(A) | ... | f_{t-1}(A)) or power code (I | A^k)
/// built from a tridiagonal Toeplitz matrix A.
struct ConstructionSpec {
    TridiagonalSpec tridiag;
    Inner inner = Inner::Euclidean;
    std::variant<DerivativePayload, PowerPayload> payload;

    const Field& field() const { return *tridiag.field; }
    bool is_derivative() const { return std::holds_alternative<DerivativePayload>(payload); }
    const DerivativePayload& derivative() const { return std::get<DerivativePayload>(payload); }
    const PowerPayload& power() const { return std::get<PowerPayload>(payload); }

    /// Shape and payload invariants; throws on violation.
    void validate() const;
};

PowerPayload make_power_payload(uint64_t k, uint32_t p);

/// The raw (unreduced) generator matrix of the construction.
Matrix build_generator(const ConstructionSpec& spec);
LinearCode build_code(const ConstructionSpec& spec);

Matrix derivative_generator(const ConstructionSpec& spec);
LinearCode derivative_code(const ConstructionSpec& spec);
Matrix power_generator(const ConstructionSpec& spec);
LinearCode power_code(const ConstructionSpec& spec);

enum class HullDecision { Lcd, NotLcd, OneDimHull, Inconclusive };

/// Outcome of a spectral hull test. `hit_multiplicity` counts, with algebraic
/// multiplicity, the eigenvalues that violate the invertibility condition:
/// 0 hits means LCD, exactly 1 means a one-dimension hull, and 2 or more
/// means not LCD (the exact hull dimension then comes from the Gram oracle).
struct PredicateVerdict {
    HullDecision decision = HullDecision::Inconclusive;
    uint32_t hit_multiplicity = 0;
    bool spectral = false;  // false: Gram fallback (b*c = 0 or context too large)
    std::vector<FieldElement> witness_set;  // forbidden-value set in the extension
    std::optional<UnityContext> ctx;
    std::string note;
};

/// Spectral hull verdict for any construction (dispatches on payload/inner).
PredicateVerdict spectral_verdict(const ConstructionSpec& spec);

PredicateVerdict lcd_by_spectrum_euclidean(const ConstructionSpec& spec);
PredicateVerdict lcd_by_spectrum_hermitian(const ConstructionSpec& spec);
PredicateVerdict one_dim_hull_by_spectrum(const ConstructionSpec& spec);
PredicateVerdict lcd_power_by_spectrum(const ConstructionSpec& spec);

/// LCD verdict for a T'-based derivative code computed from the verdicts of
/// the plain T codes of the half orders (order 2n reduces to order n; order
/// 2n+1 to orders n and n+1).
bool tprime_lcd_equivalence(const ConstructionSpec& tprime_spec);

/// Construction-spec text format (one per line):
///   q=<p^m> kind=T|T' n=<int> a=<elt> b=<elt> [c=<elt>] inner=E|H
///   (f=<poly>[;<poly>...] | k=<int>)
/// When c is omitted it defaults to b (Euclidean) or b^q (Hermitian).
ConstructionSpec parse_construction(const std::string& line);
std::string format_construction(const ConstructionSpec& spec);

}  // namespace tricode

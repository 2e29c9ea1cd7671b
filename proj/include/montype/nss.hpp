#ifndef MONTYPE_NSS_HPP
#define MONTYPE_NSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/newton.hpp"
#include "montype/numeric.hpp"
#include "montype/type_invariants.hpp"

namespace montype {

/// Membership certificate for one generator of the raised radical:
/// monomial = divisor * cofactor with divisor a generator of the ideal.
struct InclusionCertificate {
    ExponentVector monomial;
    ExponentVector divisor;
    ExponentVector cofactor;
};

struct InclusionResult {
    bool holds;
    std::vector<InclusionCertificate> certificates;
    std::optional<ExponentVector> violation;  // set when holds is false
};

struct BrianconSkodaResult {
    bool holds;
    std::optional<ExponentVector> violation;
};

struct GeometricBoundResult {
    bool holds;
    int max_degree;   // d
    Int bound;        // d^n
    Rat ttype_value;
};

struct NssReport {
    Rat ttype_value;
    Int exponent_n;  // ceil(n * ttype)
    bool inclusion_holds;
    Int sigma_min;
    bool bs_holds;
    Int geometric_bound;  // d^n
    bool geometric_ok;
    int max_degree;
    InclusionResult inclusion;
    BrianconSkodaResult briancon_skoda;
};

/// Nullstellensatz exponent ceil(n * ttype(I)), with an exact rational
/// ceiling.
inline Int nss_exponent(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("nss_exponent requires a proper nonzero ideal");
    return ceil_rat(Rat(I.ambient_dim()) * ttype(I).value);
}

/// Checks radical(I)^ceil(n*ttype) <= I generator by generator, returning
/// the dividing generator and cofactor for each. A false result is not a
/// legitimate outcome — the inclusion is a proved theorem — so callers
/// treat it as an implementation bug.
inline InclusionResult verify_nss_inclusion(const MonomialIdeal& I) {
    Int N = nss_exponent(I);
    MonomialIdeal raised = power(radical(I), static_cast<int>(N));
    InclusionResult result{true, {}, std::nullopt};
    for (const auto& u : raised.generators()) {
        const ExponentVector* divisor = nullptr;
        for (const auto& g : I.generators()) {
            if (divides(g, u)) {
                divisor = &g;
                break;
            }
        }
        if (!divisor) {
            result.holds = false;
            result.violation = u;
            return result;
        }
        ExponentVector cof(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) cof[j] = u[j] - (*divisor)[j];
        result.certificates.push_back({u, *divisor, cof});
    }
    return result;
}

/// Smallest sigma >= 1 with radical(I)^sigma <= I, found by incrementing
/// sigma with the radical power carried along incrementally. Theorem
/// bound: sigma <= ceil(n * ttype), enforced as a hard stop.
inline Int sigma_min(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("sigma_min requires a proper nonzero ideal");
    MonomialIdeal rad = radical(I);
    Int cap = nss_exponent(I);
    MonomialIdeal pow = rad;
    for (Int sigma = 1; sigma <= cap; ++sigma) {
        if (contains(I, pow)) return sigma;
        pow = product(pow, rad);
    }
    throw TheoremViolationError("no sigma <= ceil(n*ttype) with radical^sigma inside " +
                                I.to_string());
}

/// closure(I^n) <= I, the Briancon-Skoda inclusion in ambient dimension n.
inline BrianconSkodaResult verify_briancon_skoda(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("verify_briancon_skoda requires a proper nonzero ideal");
    MonomialIdeal closure_pow = closure_generators(I, I.ambient_dim());
    for (const auto& u : closure_pow.generators())
        if (!member(u, I)) return {false, u};
    return {true, std::nullopt};
}

/// ttype(I) <= d^n with d the largest generator degree: the affine
/// consequence of the projective degree bound, with the ideal globally
/// generated after twisting by d times a hyperplane.
inline GeometricBoundResult verify_geometric_bound(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("verify_geometric_bound requires a proper nonzero ideal");
    GeometricBoundResult result;
    result.max_degree = max_generator_degree(I);
    result.bound = mp::pow(Int(result.max_degree), static_cast<unsigned>(I.ambient_dim()));
    result.ttype_value = ttype(I).value;
    result.holds = result.ttype_value <= Rat(result.bound);
    return result;
}

/// Full verification bundle for one ideal.
inline NssReport nss_report(const MonomialIdeal& I) {
    NssReport report;
    report.ttype_value = ttype(I).value;
    report.exponent_n = ceil_rat(Rat(I.ambient_dim()) * report.ttype_value);
    report.inclusion = verify_nss_inclusion(I);
    report.inclusion_holds = report.inclusion.holds;
    report.sigma_min = sigma_min(I);
    report.briancon_skoda = verify_briancon_skoda(I);
    report.bs_holds = report.briancon_skoda.holds;
    GeometricBoundResult geo = verify_geometric_bound(I);
    report.geometric_bound = geo.bound;
    report.geometric_ok = geo.holds;
    report.max_degree = geo.max_degree;
    return report;
}

}  // namespace montype

#endif

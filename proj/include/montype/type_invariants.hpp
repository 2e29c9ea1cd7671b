#ifndef MONTYPE_TYPE_INVARIANTS_HPP
#define MONTYPE_TYPE_INVARIANTS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/jets.hpp"
#include "montype/lp.hpp"
#include "montype/newton.hpp"
#include "montype/numeric.hpp"
#include "montype/polynomial.hpp"

namespace montype {

/// A monomial valuation: nonnegative rational weights, not all zero.
/// Stands in for an exceptional divisor of the normalized blow-up (for
/// monomial ideals those are torus-invariant) and equally for the
/// monomial arc t -> (c_1 t^{w_1}, ..., c_n t^{w_n}).
struct WeightVector {
    std::vector<Rat> weights;

    explicit WeightVector(std::vector<Rat> w) : weights(std::move(w)) {
        bool positive = false;
        for (const Rat& x : weights) {
            if (x < 0) throw PreconditionError("weights must be nonnegative");
            if (x > 0) positive = true;
        }
        if (!positive) throw PreconditionError("weight vector must have a positive entry");
    }

    static WeightVector from_integers(const std::vector<Int>& w) {
        std::vector<Rat> r(w.size());
        for (std::size_t j = 0; j < w.size(); ++j) r[j] = Rat(w[j]);
        return WeightVector(std::move(r));
    }

    int dim() const { return static_cast<int>(weights.size()); }

    /// Unique scaling to primitive nonnegative integers.
    std::vector<Int> primitive() const { return primitive_integer_direction(weights); }

    int positive_count() const {
        int c = 0;
        for (const Rat& x : weights)
            if (x > 0) ++c;
        return c;
    }
};

/// One maximizing valuation: weight w with r = h_ideal(w), m = h_den(w),
/// ratio r/m, and the dimension of the coordinate subspace the associated
/// arc is centered on (n minus the number of positive weights).
struct Witness {
    WeightVector weight;
    Rat r;
    Rat m;
    Rat ratio;
    int center_dim;
};

/// Exact value of a type invariant together with every maximizing weight
/// found (one per linear program attaining the optimum, deduplicated).
/// denominator_ideal is m for T and the radical for the Nullstellensatz
/// invariant.
struct TypeReport {
    Rat value;
    std::vector<Witness> witnesses;
    MonomialIdeal source;
    MonomialIdeal denominator_ideal;
};

namespace detail {

/// max over w >= 0 of h_I(w) / h_D(w), h the support functions, solved as
/// one LP per generator s of D. Fixing the denominator's minimizing
/// generator and scaling it to <w,s> = 1 linearizes the fractional
/// objective; the union over s covers every admissible w, and conversely
/// each feasible w realizes its ratio through an actual monomial arc, so
/// the max over the programs is exactly the invariant. Each program is
/// bounded: Rueckert gives D^sigma <= I for some sigma, hence
/// t <= h_I(w) <= sigma * h_D(w) = sigma on the feasible set.
inline TypeReport fractional_max(const MonomialIdeal& ideal, const MonomialIdeal& den) {
    const int n = ideal.ambient_dim();
    const auto& gens = ideal.generators();
    const auto& den_gens = den.generators();

    TypeReport report{Rat(0), {}, ideal, den};
    std::vector<std::vector<Int>> seen;

    for (std::size_t s = 0; s < den_gens.size(); ++s) {
        // Variables w_1..w_n, t; all nonnegative (t >= 0 cuts nothing:
        // every feasible w has ratio >= 1 because I <= D forces
        // h_I >= h_D = 1).
        LinearProgram lp(n + 1);
        lp.mark_all_nonneg();
        lp.objective[n] = 1;  // maximize t
        for (const auto& u : gens) {
            std::vector<Rat> row(n + 1, Rat(0));
            for (int j = 0; j < n; ++j) row[j] = -u[j];
            row[n] = 1;
            lp.add_constraint(std::move(row), Relation::LessEq, Rat(0));  // t <= <w,u>
        }
        for (std::size_t s2 = 0; s2 < den_gens.size(); ++s2) {
            std::vector<Rat> row(n + 1, Rat(0));
            for (int j = 0; j < n; ++j) row[j] = den_gens[s2][j];
            lp.add_constraint(std::move(row), s2 == s ? Relation::Equal : Relation::GreaterEq,
                              Rat(1));
        }

        LPOutcome out = solve(lp);
        if (out.status != LPStatus::Optimal)
            throw InternalError("type program " + std::to_string(s) + " for " +
                                ideal.to_string() + " did not come back optimal");

        if (!report.witnesses.empty() && out.value < report.value) continue;
        if (out.value > report.value || report.witnesses.empty()) {
            report.value = out.value;
            report.witnesses.clear();
            seen.clear();
        }

        WeightVector w(std::vector<Rat>(out.witness.begin(), out.witness.begin() + n));
        std::vector<Int> prim = w.primitive();
        if (std::find(seen.begin(), seen.end(), prim) != seen.end()) continue;
        seen.push_back(prim);

        Witness witness{WeightVector::from_integers(prim), Rat(0), Rat(0), Rat(0),
                        n - w.positive_count()};
        witness.r = support_value(prim, ideal);
        witness.m = support_value(prim, den);
        witness.ratio = witness.r / witness.m;
        if (witness.ratio != report.value || witness.ratio * witness.m != witness.r)
            throw InternalError("witness ratio disagrees with LP optimum for " +
                                ideal.to_string());
        report.witnesses.push_back(std::move(witness));
    }

    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& a, const Witness& b) {
                  return a.weight.primitive() < b.weight.primitive();
              });
    return report;
}

}  // namespace detail

/// T of an m-primary monomial ideal: max over monomial valuations w of
/// h_I(w) / min_j w_j, one LP per coordinate pinned as the minimum.
/// Bounded because each pure power x_j^{a_j} caps program j at a_j.
inline TypeReport type_m_primary(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("type requires a proper nonzero ideal");
    if (!is_m_primary(I))
        throw PreconditionError(
            "ideal is not m-primary (zero locus is positive-dimensional); "
            "use ttype for the Nullstellensatz invariant");
    return detail::fractional_max(I, MonomialIdeal::maximal(I.ambient_dim()));
}

/// The Nullstellensatz invariant: max over monomial valuations of
/// h_I(w) / h_radical(w). Coincides with T on m-primary input, where the
/// radical is m.
inline TypeReport ttype(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("ttype requires a proper nonzero ideal");
    return detail::fractional_max(I, radical(I));
}

/// Boundary type of the model domain built on the ideal: 2 T(I).
inline Rat boundary_type(const MonomialIdeal& I) { return 2 * type_m_primary(I).value; }

/// Monomial witness curves realizing a report: for each witness weight w,
/// the arc t -> (c_j t^{w_j}) with seeded nonzero rational coefficients
/// (constant c_j where w_j = 0). Each arc is verified by jet evaluation to
/// reproduce (r, m) exactly; on a cancellation the coefficients are
/// redrawn a bounded number of times. Cancellation cannot happen for
/// monomial ideals, but the retry loop keeps the function honest if it is
/// ever pointed at a non-generic draw.
inline std::vector<Arc> witness_curves(const TypeReport& report, std::uint64_t coeff_seed) {
    if (report.witnesses.empty())
        throw PreconditionError("report carries no witnesses");
    const int n = report.source.ambient_dim();
    std::vector<Polynomial> num_gens = PolynomialIdeal::from_monomial(report.source).generators();
    std::vector<Polynomial> den_gens =
        PolynomialIdeal::from_monomial(report.denominator_ideal).generators();

    std::vector<Arc> arcs;
    SplitMix64 rng(coeff_seed);
    for (const Witness& witness : report.witnesses) {
        std::vector<Int> w = witness.weight.primitive();
        Int r_int = numerator(witness.r);   // integral: integer weights, lattice generators
        Int m_int = numerator(witness.m);
        if (std::max(r_int, m_int) > 1000000)
            throw PreconditionError("witness orders too large for jet verification");
        int trunc = static_cast<int>(std::max(r_int, m_int)) + 1;

        bool placed = false;
        for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
            std::vector<Rat> coeffs(n);
            for (int j = 0; j < n; ++j) coeffs[j] = rng.nonzero_rational();
            Arc arc = Arc::monomial(w, coeffs, trunc);
            arc.seed = coeff_seed;
            OrderResult num = ideal_pullback_order(arc, num_gens);
            OrderResult den = ideal_pullback_order(arc, den_gens);
            if (num == OrderResult::exactly(static_cast<int>(r_int)) &&
                den == OrderResult::exactly(static_cast<int>(m_int))) {
                arcs.push_back(std::move(arc));
                placed = true;
            }
        }
        if (!placed) {
            ExponentVector v(n);
            for (int j = 0; j < n; ++j) v[j] = static_cast<int>(w[j]);
            throw GenericityError("coefficient draws kept cancelling for witness weight " +
                                  exponent_to_string(v));
        }
    }
    return arcs;
}

}  // namespace montype

#endif

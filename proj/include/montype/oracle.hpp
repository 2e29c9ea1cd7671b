#ifndef MONTYPE_ORACLE_HPP
#define MONTYPE_ORACLE_HPP

#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/lp.hpp"
#include "montype/newton.hpp"
#include "montype/numeric.hpp"
#include "montype/type_invariants.hpp"

namespace montype {

/// Enumeration bounds for the brute-force oracles. The committed defaults
/// live in data/oracle_config.json; keeping them fixed makes oracle runs
/// reproducible. entry_caps[n-1] bounds the lattice box side used for the
/// closure cross-check in dimension n (the cost grows like cap^n).
struct OracleConfig {
    int weight_bound = 12;
    int dimension_cap = 4;
    std::vector<int> entry_caps = {12, 8, 5, 4};
    std::uint64_t seed = 20260810;

    int entry_cap_for(int n) const {
        if (n <= 0) throw PreconditionError("dimension must be positive");
        if (n <= static_cast<int>(entry_caps.size())) return entry_caps[n - 1];
        return 3;
    }
};

struct BruteTypeResult {
    Rat value;
    std::vector<Int> best_weight;
};

/// Exhaustive maximum of the weight ratio over the integer box
/// {0..B}^n: a certified lower bound for the LP pipeline, with equality
/// once B covers a witness. Deliberately reimplements the weight/value
/// arithmetic inline — the oracle must not share code with the support
/// function it is checking.
inline BruteTypeResult brute_type(const MonomialIdeal& I, const MonomialIdeal& denominator,
                                  int weight_bound) {
    if (!I.is_proper_nonzero() || !denominator.is_proper_nonzero())
        throw PreconditionError("brute_type requires proper nonzero ideals");
    if (I.ambient_dim() != denominator.ambient_dim())
        throw DimensionMismatchError("numerator/denominator dimension mismatch");
    if (weight_bound < 1) throw PreconditionError("weight bound must be >= 1");
    const int n = I.ambient_dim();

    auto min_value = [n](const std::vector<int>& w, const std::vector<ExponentVector>& gens) {
        long long best = -1;
        for (const auto& u : gens) {
            long long s = 0;
            for (int j = 0; j < n; ++j) s += static_cast<long long>(w[j]) * u[j];
            if (best < 0 || s < best) best = s;
        }
        return best;
    };

    BruteTypeResult result{Rat(0), {}};
    std::vector<int> w(n, 0);
    while (true) {
        // advance odometer; skip the all-zero weight
        int j = n - 1;
        while (j >= 0 && w[j] == weight_bound) w[j--] = 0;
        if (j < 0) break;
        ++w[j];

        long long den = min_value(w, denominator.generators());
        if (den > 0) {
            long long num = min_value(w, I.generators());
            Rat ratio(num, den);
            if (result.best_weight.empty() || ratio > result.value) {
                result.value = ratio;
                result.best_weight.assign(w.begin(), w.end());
            }
        }
    }
    if (result.best_weight.empty())
        throw PreconditionError("no weight with positive denominator value in the box");
    return result;
}

/// Membership of u in k*P(I) decided by LP feasibility of
/// u = sum_i lambda_i * (k g_i) + slack, sum lambda = 1, everything
/// nonnegative. Independent of the facet pathway.
inline bool convex_member(const ExponentVector& u, const MonomialIdeal& I, int k) {
    if (static_cast<int>(u.size()) != I.ambient_dim())
        throw DimensionMismatchError("convex membership query in wrong dimension");
    if (!I.is_proper_nonzero())
        throw PreconditionError("convex_member requires a proper nonzero ideal");
    if (k < 1) throw PreconditionError("power scale k must be >= 1");
    const int n = I.ambient_dim();
    const auto& gens = I.generators();
    const int num_lambda = static_cast<int>(gens.size());

    LinearProgram lp(num_lambda + n);  // lambdas then slacks
    lp.mark_all_nonneg();
    {
        std::vector<Rat> row(num_lambda + n, Rat(0));
        for (int i = 0; i < num_lambda; ++i) row[i] = 1;
        lp.add_constraint(std::move(row), Relation::Equal, Rat(1));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> row(num_lambda + n, Rat(0));
        for (int i = 0; i < num_lambda; ++i) row[i] = Rat(k * gens[i][j]);
        row[num_lambda + j] = 1;
        lp.add_constraint(std::move(row), Relation::Equal, Rat(u[j]));
    }
    return solve(lp).status == LPStatus::Optimal;
}

struct CrossCheckReport {
    bool passed = true;
    long long points_checked = 0;
    std::vector<std::string> mismatches;

    void fail(std::string what) {
        passed = false;
        mismatches.push_back(std::move(what));
    }
};

/// Certifies the facet/LP pipeline against the brute-force oracles on one
/// ideal: (a) facet closure membership agrees with convex-combination
/// feasibility on every lattice point of the capped box, for k = 1..n;
/// (b) the enumerated type never exceeds the LP value, with equality once
/// the box covers a witness; (c) every facet is valid at all generators
/// and tight at one.
inline CrossCheckReport cross_check(const MonomialIdeal& I, const OracleConfig& cfg) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("cross_check requires a proper nonzero ideal");
    const int n = I.ambient_dim();
    if (n > cfg.dimension_cap)
        throw PreconditionError("ideal dimension exceeds the oracle cap");
    CrossCheckReport report;

    // (a) closure membership equivalence on the capped lattice box.
    NewtonPolyhedron np(I);
    const int cap = cfg.entry_cap_for(n);
    for (int k = 1; k <= n; ++k) {
        ExponentVector u(n, 0);
        while (true) {
            bool facet = np.contains_scaled(u, k);
            bool convex = convex_member(u, I, k);
            ++report.points_checked;
            if (facet != convex)
                report.fail("closure mismatch at " + exponent_to_string(u) + ", k=" +
                            std::to_string(k) + ": facets say " + std::to_string(facet) +
                            ", convex oracle says " + std::to_string(convex));
            int j = n - 1;
            while (j >= 0 && u[j] == cap) u[j--] = 0;
            if (j < 0) break;
            ++u[j];
        }
    }

    // (b) brute-force type vs the LP pipeline.
    TypeReport pipeline = ttype(I);
    BruteTypeResult brute = brute_type(I, radical(I), cfg.weight_bound);
    if (brute.value > pipeline.value)
        report.fail("brute-force ratio " + rat_to_string(brute.value) +
                    " exceeds pipeline value " + rat_to_string(pipeline.value));
    Int max_entry = 0;
    for (const auto& witness : pipeline.witnesses)
        for (const Int& e : witness.weight.primitive()) max_entry = std::max(max_entry, e);
    if (max_entry <= cfg.weight_bound && brute.value != pipeline.value)
        report.fail("brute-force ratio " + rat_to_string(brute.value) +
                    " misses pipeline value " + rat_to_string(pipeline.value) +
                    " although the box covers the witness");

    // (c) facet validity and tightness.
    for (const auto& f : np.facets()) {
        bool tight = false;
        for (const auto& g : I.generators()) {
            Int v = 0;
            for (int j = 0; j < n; ++j) v += f.normal[j] * g[j];
            if (v < f.offset)
                report.fail("facet violated by generator " + exponent_to_string(g));
            if (v == f.offset) tight = true;
        }
        if (!tight) report.fail("facet with offset " + f.offset.str() + " tight nowhere");
    }

    return report;
}

}  // namespace montype

#endif

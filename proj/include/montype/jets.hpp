#ifndef MONTYPE_JETS_HPP
#define MONTYPE_JETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/numeric.hpp"
#include "montype/polynomial.hpp"

namespace montype {

/// Vanishing order of a truncated series: either an exact order k < N,
/// or the marker "at least N" when every computed coefficient is zero.
struct OrderResult {
    bool finite;
    int value;

    static OrderResult exactly(int k) { return {true, k}; }
    static OrderResult at_least(int n) { return {false, n}; }

    std::string to_string() const {
        return finite ? std::to_string(value) : (">=" + std::to_string(value));
    }
    bool operator==(const OrderResult& o) const = default;
};

/// Truncated formal power series in one variable t with exact rational
/// coefficients, indices 0..N-1. All arithmetic is exact below the
/// truncation degree; there is no division anywhere (orders never need it).
class Jet {
  public:
    explicit Jet(int truncation) : coeffs_(check(truncation), Rat(0)) {}

    static Jet constant(int truncation, const Rat& c) {
        Jet j(truncation);
        j.coeffs_[0] = c;
        return j;
    }

    /// c * t^k (zero jet when k >= truncation).
    static Jet monomial(int truncation, const Rat& c, int k) {
        Jet j(truncation);
        if (k < 0) throw PreconditionError("jet exponent must be >= 0");
        if (k < truncation) j.coeffs_[k] = c;
        return j;
    }

    int truncation() const { return static_cast<int>(coeffs_.size()); }
    const Rat& operator[](int i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    OrderResult order() const {
        for (int i = 0; i < truncation(); ++i)
            if (coeffs_[i] != 0) return OrderResult::exactly(i);
        return OrderResult::at_least(truncation());
    }

    Jet& operator+=(const Jet& o) {
        match(o);
        for (int i = 0; i < truncation(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    Jet operator+(const Jet& o) const {
        Jet r = *this;
        r += o;
        return r;
    }

    Jet operator*(const Jet& o) const {
        match(o);
        const int n = truncation();
        Jet r(n);
        for (int i = 0; i < n; ++i) {
            if (coeffs_[i] == 0) continue;  // sparse arcs make this skip pay off
            for (int j = 0; i + j < n; ++j) {
                if (o.coeffs_[j] == 0) continue;
                r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        return r;
    }

    Jet pow(int e) const {
        if (e < 0) throw PreconditionError("jet power must be >= 0");
        Jet result = Jet::constant(truncation(), Rat(1));
        Jet base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    Jet scaled(const Rat& c) const {
        Jet r = *this;
        for (Rat& x : r.coeffs_) x *= c;
        return r;
    }

  private:
    static int check(int n) {
        if (n < 1) throw PreconditionError("jet truncation must be >= 1");
        return n;
    }
    void match(const Jet& o) const {
        if (truncation() != o.truncation())
            throw PreconditionError("jet truncation mismatch");
    }

    std::vector<Rat> coeffs_;
};

/// A truncated holomorphic arc t -> (gamma_1(t), ..., gamma_n(t)).
/// Components with a nonzero constant term are allowed when the arc is
/// centered away from the origin (used for arcs that meet Z elsewhere);
/// components may also be identically zero (arcs inside a coordinate
/// subspace). At least one component must be non-constant.
struct Arc {
    std::vector<Jet> components;
    std::vector<Int> weights;  // source weights when monomial-built, else empty
    std::uint64_t seed = 0;

    int dim() const { return static_cast<int>(components.size()); }

    bool centered_off_origin() const {
        for (const Jet& c : components)
            if (c[0] != 0) return true;
        return false;
    }

    void check_valid() const {
        if (components.empty()) throw PreconditionError("arc needs >= 1 component");
        bool nonconstant = false;
        for (const Jet& c : components)
            for (int i = 1; i < c.truncation() && !nonconstant; ++i)
                if (c[i] != 0) nonconstant = true;
        if (!nonconstant) throw PreconditionError("arc must be non-constant");
    }

    /// Monomial arc: component j is c_j t^{w_j}, a nonzero constant c_j
    /// when w_j = 0.
    static Arc monomial(const std::vector<Int>& w, const std::vector<Rat>& coeffs,
                        int truncation) {
        if (w.size() != coeffs.size()) throw PreconditionError("weight/coefficient mismatch");
        Arc a;
        a.weights = w;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j] < 0) throw PreconditionError("arc weights must be >= 0");
            if (coeffs[j] == 0) throw PreconditionError("arc coefficients must be nonzero");
            int e = static_cast<int>(w[j]);
            a.components.push_back(Jet::monomial(truncation, coeffs[j], e));
        }
        a.check_valid();
        return a;
    }

    /// Axis arc: component `axis` is c t^k, all others identically zero.
    static Arc axis(int n, int axis, int k, const Rat& c, int truncation) {
        if (axis < 0 || axis >= n) throw PreconditionError("axis out of range");
        if (k < 1) throw PreconditionError("axis exponent must be >= 1");
        Arc a;
        a.weights.assign(n, Int(0));
        a.weights[axis] = k;
        for (int j = 0; j < n; ++j)
            a.components.push_back(j == axis ? Jet::monomial(truncation, c, k)
                                             : Jet(truncation));
        a.check_valid();
        return a;
    }

    /// Least order among the components; the order of the pulled-back
    /// maximal ideal. Identically-zero components do not contribute.
    OrderResult min_component_order() const {
        OrderResult best = OrderResult::at_least(components[0].truncation());
        for (const Jet& c : components) {
            OrderResult o = c.order();
            if (o.finite && (!best.finite || o.value < best.value)) best = o;
        }
        return best;
    }
};

/// Substitute the arc into f by exact jet arithmetic.
inline Jet evaluate_on_arc(const Arc& arc, const Polynomial& f) {
    if (f.ambient_dim() != arc.dim())
        throw DimensionMismatchError("polynomial/arc dimension mismatch");
    const int n = arc.components[0].truncation();
    Jet acc(n);
    for (const auto& [expo, coeff] : f.terms()) {
        Jet term = Jet::constant(n, coeff);
        for (int j = 0; j < arc.dim(); ++j)
            if (expo[j] > 0) term = term * arc.components[j].pow(expo[j]);
        acc += term;
    }
    return acc;
}

/// Order of f along the arc: ord_0(f(gamma(t))).
inline OrderResult pullback_order(const Arc& arc, const Polynomial& f) {
    return evaluate_on_arc(arc, f).order();
}

/// Order of the pulled-back ideal: the minimum over generators. The
/// result is exact as soon as one generator has order below the
/// truncation; ">= N" propagates only when every generator reaches it.
inline OrderResult ideal_pullback_order(const Arc& arc, const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw PreconditionError("ideal needs >= 1 generator");
    OrderResult best = OrderResult::at_least(arc.components[0].truncation());
    for (const Polynomial& g : gens) {
        OrderResult o = pullback_order(arc, g);
        if (o.finite && (!best.finite || o.value < best.value)) best = o;
    }
    return best;
}

/// True when f visibly pulls back to the zero series: every term contains
/// a variable whose arc component is identically zero. (Sufficient, not
/// necessary; cancellations are handled by truncation escalation instead.)
inline bool pullback_identically_zero(const Arc& arc, const Polynomial& f) {
    std::vector<bool> zero_comp(arc.dim());
    for (int j = 0; j < arc.dim(); ++j) zero_comp[j] = arc.components[j].is_zero();
    for (const auto& [expo, coeff] : f.terms()) {
        bool term_dies = false;
        for (int j = 0; j < arc.dim() && !term_dies; ++j)
            if (expo[j] > 0 && zero_comp[j]) term_dies = true;
        if (!term_dies) return false;
    }
    return true;
}

struct ProbeStrategy {
    int weight_bound = 6;
    int truncation = 64;
    int max_truncation = 1024;
    std::uint64_t seed = 1;
};

struct ProbeResult {
    Rat lower_bound;
    bool any_scored = false;
    std::optional<Arc> best_arc;
    Rat best_numerator;
    Rat best_denominator;
    std::vector<std::string> inconclusive;  // arcs undecided at the truncation cap
};

namespace detail {

inline std::uint64_t arc_seed(std::uint64_t base, const std::vector<Int>& w, bool axis) {
    std::uint64_t h = base ^ (axis ? 0x517CC1B727220A95ull : 0);
    for (const Int& x : w) h = (h ^ static_cast<std::uint64_t>(x)) * 0x100000001B3ull;
    return h;
}

inline std::vector<Rat> draw_coefficients(std::uint64_t seed, int n) {
    SplitMix64 rng(seed);
    std::vector<Rat> c(n);
    for (int j = 0; j < n; ++j) c[j] = rng.nonzero_rational();
    return c;
}

}  // namespace detail

/// Arc-enumeration lower bound for the type: the maximum, over monomial
/// arcs with positive integer weights <= B plus all weighted axis arcs,
/// of ord(gamma^* ideal) / ord(gamma^* m). Sound for any input (every
/// enumerated arc realizes its ratio); exact on m-primary monomial ideals
/// once B covers the witness weights. Arcs whose numerator stays ">= N"
/// get their truncation doubled up to the cap; if still undecided and not
/// provably zero they are reported as inconclusive, and arcs lying inside
/// the zero locus of every generator are discarded. Ties keep the first
/// arc in enumeration order (full monomial arcs in lexicographic weight
/// order, then axis arcs).
inline ProbeResult probe_type(const PolynomialIdeal& ideal, const ProbeStrategy& strategy) {
    if (!ideal.all_vanish_at_origin())
        throw PreconditionError("probe requires generators vanishing at the origin");
    if (strategy.weight_bound < 1) throw PreconditionError("weight bound must be >= 1");
    if (strategy.truncation <= strategy.weight_bound)
        throw PreconditionError("truncation must exceed the weight bound");
    const int n = ideal.ambient_dim();
    const auto& gens = ideal.generators();

    ProbeResult result;
    result.lower_bound = 0;

    auto consider = [&](const std::vector<Int>& w, bool axis_kind, int axis, int axis_exp) {
        std::uint64_t seed = detail::arc_seed(strategy.seed, w, axis_kind);
        std::vector<Rat> coeffs = detail::draw_coefficients(seed, n);
        for (int trunc = strategy.truncation;; trunc *= 2) {
            Arc arc = axis_kind ? Arc::axis(n, axis, axis_exp, coeffs[axis], trunc)
                                : Arc::monomial(w, coeffs, trunc);
            arc.seed = seed;
            OrderResult num = ideal_pullback_order(arc, gens);
            if (!num.finite) {
                bool all_zero = true;
                for (const Polynomial& g : gens)
                    if (!pullback_identically_zero(arc, g)) all_zero = false;
                if (all_zero) return;  // arc sits inside the zero locus: not admissible
                if (trunc * 2 > strategy.max_truncation) {
                    ExponentVector v(n);
                    for (int j = 0; j < n; ++j) v[j] = static_cast<int>(w[j]);
                    result.inconclusive.push_back("weights " + exponent_to_string(v) +
                                                  " undecided at truncation " +
                                                  std::to_string(trunc));
                    return;
                }
                continue;
            }
            OrderResult den = arc.min_component_order();  // finite: some component moves
            Rat ratio = Rat(num.value, den.value);
            if (!result.any_scored || ratio > result.lower_bound) {
                result.any_scored = true;
                result.lower_bound = ratio;
                result.best_arc = arc;
                result.best_numerator = num.value;
                result.best_denominator = den.value;
            }
            return;
        }
    };

    // Full monomial arcs, weights in {1..B}^n, lexicographic order.
    std::vector<Int> w(n, Int(1));
    while (true) {
        consider(w, false, 0, 0);
        int j = n - 1;
        while (j >= 0 && w[j] == strategy.weight_bound) w[j--] = 1;
        if (j < 0) break;
        ++w[j];
    }
    // Weighted axes.
    for (int axis = 0; axis < n; ++axis) {
        for (int k = 1; k <= strategy.weight_bound; ++k) {
            std::vector<Int> aw(n, Int(0));
            aw[axis] = k;
            consider(aw, true, axis, k);
        }
    }
    return result;
}

}  // namespace montype

#endif

#ifndef MONTYPE_NUMERIC_HPP
#define MONTYPE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace montype {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer. Expression templates are disabled so the
/// types behave like ordinary value types in generic code.
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Int int_gcd(const Int& a, const Int& b) { return mp::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return mp::lcm(a, b); }

/// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
    Int num = numerator(q);
    Int den = denominator(q);  // > 0 by canonical form
    Int quot = num / den;
    if (num % den != 0 && num > 0) ++quot;
    return quot;
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
    Int num = numerator(q);
    Int den = denominator(q);
    Int quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return quot;
}

/// Exact decimal-free rendering: "p/q", or just "p" when q == 1.
inline std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Scale a rational vector to the unique primitive integer vector with the
/// same direction (entries multiplied by the lcm of denominators, then
/// divided by their gcd). The input must be nonzero.
inline std::vector<Int> primitive_integer_direction(const std::vector<Rat>& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = int_lcm(lcm_den, denominator(x));
    std::vector<Int> out;
    out.reserve(v.size());
    Int g = 0;
    for (const Rat& x : v) {
        Int e = numerator(x) * (lcm_den / denominator(x));
        g = int_gcd(g, e);
        out.push_back(e);
    }
    for (Int& e : out) e /= g;  // g != 0 since v is nonzero
    return out;
}

/// Divide an integer vector by the gcd of its entries. Nonzero input.
inline std::vector<Int> make_primitive(std::vector<Int> v) {
    Int g = 0;
    for (const Int& e : v) g = int_gcd(g, e);
    for (Int& e : v) e /= g;
    return v;
}

/// Deterministic 64-bit generator (splitmix64). Used wherever seeded
/// pseudo-randomness is part of a reproducibility contract; std::mt19937
/// distributions are not pinned across standard library implementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound >= 1.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Nonzero rational with small numerator and denominator.
    Rat nonzero_rational() {
        Int num = Int(1 + below(9));
        if (next() & 1) num = -num;
        Int den = Int(1 + below(4));
        return Rat(num, den);
    }

  private:
    std::uint64_t state_;
};

}  // namespace montype

#endif

#ifndef MONTYPE_POLYNOMIAL_HPP
#define MONTYPE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/numeric.hpp"

namespace montype {

/// Sparse polynomial with exact rational coefficients. Terms are kept in a
/// map ordered lexicographically by exponent, zero coefficients are never
/// stored, and a polynomial must have at least one term.
class Polynomial {
  public:
    Polynomial(int n, std::map<ExponentVector, Rat> terms)
        : dim_(n), terms_(std::move(terms)) {
        if (n < 1) throw PreconditionError("ambient dimension must be >= 1");
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (static_cast<int>(it->first.size()) != dim_)
                throw DimensionMismatchError("term exponent length does not match dimension");
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
        if (terms_.empty()) throw PreconditionError("polynomial must have at least one term");
    }

    /// The monomial x^u.
    static Polynomial monomial(int n, const ExponentVector& u) {
        return Polynomial(n, {{u, Rat(1)}});
    }

    int ambient_dim() const { return dim_; }
    const std::map<ExponentVector, Rat>& terms() const { return terms_; }

    bool vanishes_at_origin() const { return !terms_.count(ExponentVector(dim_, 0)); }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Exponent of the unique term; only valid for monomials.
    const ExponentVector& monomial_exponent() const {
        if (!is_monomial()) throw PreconditionError("polynomial is not a monomial");
        return terms_.begin()->first;
    }

    bool operator==(const Polynomial& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

  private:
    int dim_;
    std::map<ExponentVector, Rat> terms_;
};

/// A finitely generated polynomial ideal, used by the arc prober. Unlike
/// MonomialIdeal there is no canonical form; the generator list is taken
/// as given.
class PolynomialIdeal {
  public:
    PolynomialIdeal(int n, std::vector<Polynomial> gens) : dim_(n), gens_(std::move(gens)) {
        if (n < 1) throw PreconditionError("ambient dimension must be >= 1");
        if (gens_.empty()) throw PreconditionError("polynomial ideal needs >= 1 generator");
        for (const auto& g : gens_)
            if (g.ambient_dim() != dim_)
                throw DimensionMismatchError("generator dimension mismatch");
    }

    static PolynomialIdeal from_monomial(const MonomialIdeal& I) {
        if (!I.is_proper_nonzero())
            throw PreconditionError("expected a proper nonzero monomial ideal");
        std::vector<Polynomial> gens;
        gens.reserve(I.generators().size());
        for (const auto& u : I.generators())
            gens.push_back(Polynomial::monomial(I.ambient_dim(), u));
        return PolynomialIdeal(I.ambient_dim(), std::move(gens));
    }

    int ambient_dim() const { return dim_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    bool all_monomial() const {
        for (const auto& g : gens_)
            if (!g.is_monomial()) return false;
        return true;
    }

    bool all_vanish_at_origin() const {
        for (const auto& g : gens_)
            if (!g.vanishes_at_origin()) return false;
        return true;
    }

  private:
    int dim_;
    std::vector<Polynomial> gens_;
};

}  // namespace montype

#endif

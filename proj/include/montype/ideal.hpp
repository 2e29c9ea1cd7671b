#ifndef MONTYPE_IDEAL_HPP
#define MONTYPE_IDEAL_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/numeric.hpp"

namespace montype {

/// Exponent vector of a monomial x1^u1 * ... * xn^un. Entries are
/// nonnegative and the length is the ambient dimension.
using ExponentVector = std::vector<int>;

inline bool divides(const ExponentVector& g, const ExponentVector& u) {
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] > u[j]) return false;
    return true;
}

inline ExponentVector exponent_sum(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector s(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
    return s;
}

inline int total_degree(const ExponentVector& u) {
    return std::accumulate(u.begin(), u.end(), 0);
}

/// 0/1 support vector of u.
inline ExponentVector support_vector(const ExponentVector& u) {
    ExponentVector s(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) s[j] = u[j] > 0 ? 1 : 0;
    return s;
}

inline std::string exponent_to_string(const ExponentVector& u) {
    std::string s = "(";
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(u[j]);
    }
    return s + ")";
}

/// A monomial ideal in n variables, stored through its unique minimal
/// generating set. Generators are kept pairwise incomparable under
/// componentwise <= and sorted lexicographically, so structural equality
/// is ideal equality. The zero ideal is representable (no generators,
/// is_zero flag); the unit ideal is the one generated by (0,...,0).
/// Both are rejected by the invariant-computing operations downstream.
class MonomialIdeal {
  public:
    /// Zero ideal in dimension n.
    static MonomialIdeal zero(int n) {
        MonomialIdeal I;
        I.dim_ = check_dim(n);
        I.is_zero_ = true;
        return I;
    }

    /// Ideal generated by the given exponent vectors; the stored set is
    /// the componentwise-minimal subset, canonically ordered.
    MonomialIdeal(int n, std::vector<ExponentVector> gens) : dim_(check_dim(n)) {
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != dim_)
                throw DimensionMismatchError("generator length " + std::to_string(g.size()) +
                                             " does not match ambient dimension " +
                                             std::to_string(dim_));
            for (int e : g)
                if (e < 0) throw PreconditionError("negative exponent in generator");
        }
        if (gens.empty()) {
            is_zero_ = true;
            return;
        }
        gens_ = minimal_elements(std::move(gens));
    }

    /// Maximal ideal m = (x1,...,xn).
    static MonomialIdeal maximal(int n) {
        std::vector<ExponentVector> gens;
        for (int j = 0; j < n; ++j) {
            ExponentVector e(n, 0);
            e[j] = 1;
            gens.push_back(e);
        }
        return MonomialIdeal(n, std::move(gens));
    }

    int ambient_dim() const { return dim_; }
    bool is_zero() const { return is_zero_; }
    bool is_unit() const { return !is_zero_ && total_degree(gens_.front()) == 0; }
    /// Proper: contained in m and nonzero.
    bool is_proper_nonzero() const { return !is_zero_ && !is_unit(); }
    const std::vector<ExponentVector>& generators() const { return gens_; }

    bool operator==(const MonomialIdeal& o) const {
        return dim_ == o.dim_ && is_zero_ == o.is_zero_ && gens_ == o.gens_;
    }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_zero_) return "(0)";
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) s += ", ";
            s += exponent_to_string(gens_[i]);
        }
        return s + ")";
    }

  private:
    MonomialIdeal() = default;

    static int check_dim(int n) {
        if (n < 1) throw PreconditionError("ambient dimension must be >= 1");
        return n;
    }

    static std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> gens) {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        // Scan in order of total degree: a divisor never has larger degree.
        std::stable_sort(gens.begin(), gens.end(),
                         [](const ExponentVector& a, const ExponentVector& b) {
                             return total_degree(a) < total_degree(b);
                         });
        std::vector<ExponentVector> minimal;
        for (const auto& u : gens) {
            bool dominated = false;
            for (const auto& g : minimal) {
                if (divides(g, u)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) minimal.push_back(u);
        }
        std::sort(minimal.begin(), minimal.end());
        return minimal;
    }

    int dim_ = 1;
    bool is_zero_ = false;
    std::vector<ExponentVector> gens_;
};

/// Ideal generated by the componentwise-minimal elements of gens.
/// An empty input yields the zero ideal.
inline MonomialIdeal minimalize(int n, std::vector<ExponentVector> gens) {
    if (gens.empty()) return MonomialIdeal::zero(n);
    return MonomialIdeal(n, std::move(gens));
}

/// Monomial membership: x^u lies in I iff some generator divides it.
inline bool member(const ExponentVector& u, const MonomialIdeal& I) {
    if (static_cast<int>(u.size()) != I.ambient_dim())
        throw DimensionMismatchError("membership query in wrong dimension");
    for (const auto& g : I.generators())
        if (divides(g, u)) return true;
    return false;
}

/// Ideal containment I <= J, decided generator by generator.
inline bool contains(const MonomialIdeal& J, const MonomialIdeal& I) {
    if (I.ambient_dim() != J.ambient_dim())
        throw DimensionMismatchError("containment query in wrong dimension");
    if (I.is_zero()) return true;
    if (J.is_zero()) return false;
    for (const auto& g : I.generators())
        if (!member(g, J)) return false;
    return true;
}

/// Product ideal I*J (pairwise generator sums, minimalized).
inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient_dim() != J.ambient_dim())
        throw DimensionMismatchError("product of ideals in different dimensions");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal::zero(I.ambient_dim());
    std::vector<ExponentVector> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(exponent_sum(a, b));
    return MonomialIdeal(I.ambient_dim(), std::move(gens));
}

/// k-th power of I, k >= 1: sums over all size-k multisets of generators,
/// then minimalized. Multisets are enumerated directly; corpus sizes keep
/// this tame and duplicates collapse in a set before minimalization.
inline MonomialIdeal power(const MonomialIdeal& I, int k) {
    if (k < 1) throw PreconditionError("power exponent must be >= 1 (unit ideal out of scope)");
    if (I.is_zero()) return I;
    const auto& gens = I.generators();
    std::set<ExponentVector> sums;
    ExponentVector acc(I.ambient_dim(), 0);
    // Multisets as nondecreasing index sequences.
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            sums.insert(acc);
            return;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            for (int j = 0; j < I.ambient_dim(); ++j) acc[j] += gens[i][j];
            self(self, i, left - 1);
            for (int j = 0; j < I.ambient_dim(); ++j) acc[j] -= gens[i][j];
        }
    };
    rec(rec, 0, k);
    return MonomialIdeal(I.ambient_dim(),
                         std::vector<ExponentVector>(sums.begin(), sums.end()));
}

/// Radical of a monomial ideal: generated by the squarefree supports of
/// the generators.
inline MonomialIdeal radical(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("radical requires a proper nonzero ideal");
    std::vector<ExponentVector> supports;
    supports.reserve(I.generators().size());
    for (const auto& g : I.generators()) supports.push_back(support_vector(g));
    return MonomialIdeal(I.ambient_dim(), std::move(supports));
}

/// Dimension of the zero locus Z(I): the zero locus of a monomial ideal
/// is a union of coordinate subspaces, and {x_j = 0 : j in H} lies in it
/// exactly when H meets the support of every generator. The dimension is
/// therefore n minus the size of a minimum hitting set. Exhaustive search
/// over variable subsets, smallest first.
inline int dim_zero_locus(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("dim_zero_locus requires a proper nonzero ideal");
    const int n = I.ambient_dim();
    const auto& gens = I.generators();
    for (int size = 1; size <= n; ++size) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            bool hits_all = true;
            for (const auto& g : gens) {
                bool hit = false;
                for (int j = 0; j < n && !hit; ++j)
                    if ((mask >> j & 1u) && g[j] > 0) hit = true;
                if (!hit) {
                    hits_all = false;
                    break;
                }
            }
            if (hits_all) return n - size;
        }
    }
    throw InternalError("no hitting set found for a nonzero ideal");  // unreachable
}

/// True iff the zero locus is exactly the origin, i.e. every variable
/// has a pure-power generator.
inline bool is_m_primary(const MonomialIdeal& I) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("is_m_primary requires a proper nonzero ideal");
    const int n = I.ambient_dim();
    std::vector<bool> pure(n, false);
    for (const auto& g : I.generators()) {
        int nonzero = -1;
        bool single = true;
        for (int j = 0; j < n; ++j) {
            if (g[j] > 0) {
                if (nonzero >= 0) {
                    single = false;
                    break;
                }
                nonzero = j;
            }
        }
        if (single && nonzero >= 0) pure[nonzero] = true;
    }
    return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

/// Largest total degree among the minimal generators.
inline int max_generator_degree(const MonomialIdeal& I) {
    if (I.is_zero()) throw PreconditionError("max_generator_degree requires a nonzero ideal");
    int d = 0;
    for (const auto& g : I.generators()) d = std::max(d, total_degree(g));
    return d;
}

}  // namespace montype

#endif

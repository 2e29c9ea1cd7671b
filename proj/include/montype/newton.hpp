#ifndef MONTYPE_NEWTON_HPP
#define MONTYPE_NEWTON_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "montype/double_description.hpp"
#include "montype/errors.hpp"
#include "montype/ideal.hpp"
#include "montype/numeric.hpp"

namespace montype {

/// One facet inequality <normal, u> >= offset of a Newton polyhedron.
/// The normal is a primitive nonnegative integer vector; because the
/// polyhedron is spanned by lattice points, the tight offset
/// min_{generators u} <normal, u> is itself an integer.
struct Facet {
    std::vector<Int> normal;
    Int offset;

    bool operator==(const Facet& o) const = default;
};

/// Newton polyhedron P(I) = conv(generator exponents) + nonnegative
/// orthant, stored through its irredundant H-representation. Lattice
/// points of k*P(I) are exactly the exponents in the integral closure of
/// I^k, which is what all closure queries below reduce to.
class NewtonPolyhedron {
  public:
    explicit NewtonPolyhedron(const MonomialIdeal& I) : source_(I) {
        if (!I.is_proper_nonzero())
            throw PreconditionError("Newton polyhedron requires a proper nonzero ideal");
        const int n = I.ambient_dim();
        const auto& gens = I.generators();

        if (gens.size() == 1) {
            // Principal ideal: P is the translated orthant, facets x_j >= g_j.
            for (int j = 0; j < n; ++j) {
                Facet f;
                f.normal.assign(n, Int(0));
                f.normal[j] = 1;
                f.offset = gens[0][j];
                facets_.push_back(std::move(f));
            }
        } else {
            // Facets of P correspond to the extreme rays (a, a0) of the polar
            // cone {(a, a0) : <a, v> + a0 >= 0 for generators v, a >= 0},
            // computed by double description in R^{n+1}. The ray (0, 1) is the
            // homogenizing facet and is dropped.
            std::vector<std::vector<Int>> rows;
            for (const auto& v : gens) {
                std::vector<Int> row(n + 1);
                for (int j = 0; j < n; ++j) row[j] = v[j];
                row[n] = 1;
                rows.push_back(std::move(row));
            }
            for (int j = 0; j < n; ++j) {
                std::vector<Int> row(n + 1, Int(0));
                row[j] = 1;
                rows.push_back(std::move(row));
            }
            for (auto& ray : extreme_rays(std::move(rows))) {
                bool zero_normal = true;
                for (int j = 0; j < n && zero_normal; ++j)
                    if (ray[j] != 0) zero_normal = false;
                if (zero_normal) continue;
                Facet f;
                f.normal.assign(ray.begin(), ray.begin() + n);
                f.normal = make_primitive(std::move(f.normal));
                // Recompute the offset as the support value, which makes the
                // tightness invariant hold by construction.
                f.offset = min_weight_value(f.normal, gens);
                facets_.push_back(std::move(f));
            }
        }
        std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
            return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
        });
    }

    int ambient_dim() const { return source_.ambient_dim(); }
    const std::vector<Facet>& facets() const { return facets_; }
    const MonomialIdeal& source() const { return source_; }

    /// Membership of u in k*P: all facet inequalities scaled by k.
    bool contains_scaled(const ExponentVector& u, int k) const {
        if (static_cast<int>(u.size()) != ambient_dim())
            throw DimensionMismatchError("closure membership query in wrong dimension");
        if (k < 1) throw PreconditionError("power scale k must be >= 1");
        for (const auto& f : facets_) {
            Int lhs = 0;
            for (std::size_t j = 0; j < f.normal.size(); ++j) lhs += f.normal[j] * u[j];
            if (lhs < k * f.offset) return false;
        }
        return true;
    }

    static Int min_weight_value(const std::vector<Int>& w,
                                const std::vector<ExponentVector>& gens) {
        Int best = 0;
        bool first = true;
        for (const auto& u : gens) {
            Int s = 0;
            for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * u[j];
            if (first || s < best) {
                best = s;
                first = false;
            }
        }
        return best;
    }

  private:
    MonomialIdeal source_;
    std::vector<Facet> facets_;
};

inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& I) {
    return NewtonPolyhedron(I);
}

/// Support value h_I(w) = min over minimal generators u of <w, u>. For the
/// monomial arc t -> (c_j t^{w_j}) this is the vanishing order of the
/// pulled-back ideal.
inline Rat support_value(const std::vector<Rat>& w, const MonomialIdeal& I) {
    if (static_cast<int>(w.size()) != I.ambient_dim())
        throw DimensionMismatchError("weight vector length does not match ideal dimension");
    if (!I.is_proper_nonzero())
        throw PreconditionError("support value requires a proper nonzero ideal");
    for (const Rat& x : w)
        if (x < 0) throw PreconditionError("weight entries must be nonnegative");
    Rat best;
    bool first = true;
    for (const auto& u : I.generators()) {
        Rat s = 0;
        for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * u[j];
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

inline Rat support_value(const std::vector<Int>& w, const MonomialIdeal& I) {
    std::vector<Rat> wr(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) wr[j] = Rat(w[j]);
    return support_value(wr, I);
}

/// Valuative membership test: u lies in the integral closure of I^k iff
/// u is a lattice point of k*P(I).
inline bool closure_member(const ExponentVector& u, const MonomialIdeal& I, int k) {
    return NewtonPolyhedron(I).contains_scaled(u, k);
}

/// Minimal monomial generators of the integral closure of I^k: the
/// componentwise-minimal lattice points of k*P(I). Every minimal point
/// lies in the box prod_j [0, k*M_j] with M_j the largest j-th entry of a
/// generator: beyond that a point stays in k*P after subtracting e_j,
/// since the convex-combination part of any decomposition contributes at
/// most k*M_j to coordinate j. Points are scanned in graded order so the
/// dominance filter against already-accepted points yields exactly the
/// minimal members.
inline MonomialIdeal closure_generators(const MonomialIdeal& I, int k) {
    if (!I.is_proper_nonzero())
        throw PreconditionError("closure requires a proper nonzero ideal");
    if (k < 1) throw PreconditionError("power scale k must be >= 1");
    const int n = I.ambient_dim();

    if (I.generators().size() == 1) {
        ExponentVector g = I.generators()[0];
        for (int j = 0; j < n; ++j) g[j] *= k;
        return MonomialIdeal(n, {g});
    }

    NewtonPolyhedron np(I);
    ExponentVector box(n, 0);
    for (const auto& g : I.generators())
        for (int j = 0; j < n; ++j) box[j] = std::max(box[j], g[j]);
    for (int j = 0; j < n; ++j) box[j] *= k;

    std::vector<ExponentVector> points;
    ExponentVector u(n, 0);
    while (true) {
        points.push_back(u);
        int j = n - 1;
        while (j >= 0 && u[j] == box[j]) u[j--] = 0;
        if (j < 0) break;
        ++u[j];
    }
    std::sort(points.begin(), points.end(), [](const ExponentVector& a, const ExponentVector& b) {
        int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });

    std::vector<ExponentVector> minimal;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& m : minimal) {
            if (divides(m, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated && np.contains_scaled(p, k)) minimal.push_back(p);
    }
    return MonomialIdeal(n, std::move(minimal));
}

}  // namespace montype

#endif

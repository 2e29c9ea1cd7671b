#ifndef MONTYPE_DOUBLE_DESCRIPTION_HPP
#define MONTYPE_DOUBLE_DESCRIPTION_HPP

#include <algorithm>
#include <vector>

#include "montype/errors.hpp"
#include "montype/numeric.hpp"

namespace montype {

/// Incremental double description: extreme rays of a pointed polyhedral
/// cone {y in Q^d : A y >= 0} given by inequality rows A (m x d, integer).
///
/// The cone must be pointed, i.e. rank(A) = d. The algorithm seeds the ray
/// set with the extreme rays of a simplicial cone cut out by d linearly
/// independent rows (the columns of the inverse basis matrix) and inserts
/// the remaining rows one at a time, combining adjacent rays across the
/// new hyperplane. Adjacency uses the combinatorial test: two rays are
/// adjacent iff no third ray is tight on every row the pair is jointly
/// tight on. All rays are kept as primitive integer vectors, so the whole
/// computation is exact.
class DoubleDescription {
  public:
    explicit DoubleDescription(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw PreconditionError("double description needs >= 1 row");
        d_ = rows_[0].size();
        for (const auto& r : rows_)
            if (r.size() != d_) throw DimensionMismatchError("ragged constraint matrix");
    }

    std::vector<std::vector<Int>> extreme_rays() {
        std::vector<std::size_t> basis = independent_rows();
        seed_from_basis(basis);

        std::vector<char> processed(rows_.size(), 0);
        for (std::size_t i : basis) processed[i] = 1;
        refresh_tight_sets(processed);

        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (processed[i]) continue;
            insert_row(i);
            processed[i] = 1;
            refresh_tight_sets(processed);
        }

        std::sort(rays_.begin(), rays_.end());
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
        return rays_;
    }

  private:
    static Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
        Int s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
        return s;
    }

    /// Greedy selection of d linearly independent rows (throws if rank < d,
    /// i.e. the cone is not pointed).
    std::vector<std::size_t> independent_rows() const {
        std::vector<std::vector<Rat>> echelon;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < rows_.size() && chosen.size() < d_; ++i) {
            std::vector<Rat> v(d_);
            for (std::size_t j = 0; j < d_; ++j) v[j] = Rat(rows_[i][j]);
            for (const auto& e : echelon) {
                std::size_t p = 0;
                while (p < d_ && e[p] == 0) ++p;
                if (p < d_ && v[p] != 0) {
                    Rat f = v[p] / e[p];
                    for (std::size_t j = p; j < d_; ++j) v[j] -= f * e[j];
                }
            }
            if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; })) {
                echelon.push_back(std::move(v));
                chosen.push_back(i);
            }
        }
        if (chosen.size() < d_)
            throw PreconditionError("constraint matrix is rank deficient: cone is not pointed");
        return chosen;
    }

    /// Initial rays: columns of B^{-1} where B stacks the chosen rows.
    /// {y : By >= 0} = B^{-1} * (nonnegative orthant), so those columns are
    /// exactly the extreme rays of the seed cone.
    void seed_from_basis(const std::vector<std::size_t>& basis) {
        std::vector<std::vector<Rat>> aug(d_, std::vector<Rat>(2 * d_, Rat(0)));
        for (std::size_t i = 0; i < d_; ++i) {
            for (std::size_t j = 0; j < d_; ++j) aug[i][j] = Rat(rows_[basis[i]][j]);
            aug[i][d_ + i] = 1;
        }
        for (std::size_t col = 0; col < d_; ++col) {
            std::size_t piv = col;
            while (piv < d_ && aug[piv][col] == 0) ++piv;
            if (piv == d_) throw InternalError("singular basis in double description seed");
            std::swap(aug[piv], aug[col]);
            Rat p = aug[col][col];
            for (auto& x : aug[col]) x /= p;
            for (std::size_t r = 0; r < d_; ++r) {
                if (r == col || aug[r][col] == 0) continue;
                Rat f = aug[r][col];
                for (std::size_t j = 0; j < 2 * d_; ++j) aug[r][j] -= f * aug[col][j];
            }
        }
        rays_.clear();
        for (std::size_t j = 0; j < d_; ++j) {
            std::vector<Rat> col(d_);
            for (std::size_t i = 0; i < d_; ++i) col[i] = aug[i][d_ + j];
            rays_.push_back(primitive_integer_direction(col));
        }
    }

    void refresh_tight_sets(const std::vector<char>& processed) {
        tight_.assign(rays_.size(), std::vector<bool>(rows_.size(), false));
        for (std::size_t r = 0; r < rays_.size(); ++r)
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (processed[i] && dot(rows_[i], rays_[r]) == 0) tight_[r][i] = true;
    }

    bool adjacent(std::size_t p, std::size_t q) const {
        std::vector<bool> common(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) common[i] = tight_[p][i] && tight_[q][i];
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (r == p || r == q) continue;
            bool covers = true;
            for (std::size_t i = 0; i < rows_.size() && covers; ++i)
                if (common[i] && !tight_[r][i]) covers = false;
            if (covers) return false;
        }
        return true;
    }

    void insert_row(std::size_t row) {
        const auto& a = rows_[row];
        std::vector<Int> value(rays_.size());
        for (std::size_t r = 0; r < rays_.size(); ++r) value[r] = dot(a, rays_[r]);

        std::vector<std::vector<Int>> next;
        for (std::size_t r = 0; r < rays_.size(); ++r)
            if (value[r] >= 0) next.push_back(rays_[r]);

        for (std::size_t p = 0; p < rays_.size(); ++p) {
            if (value[p] <= 0) continue;
            for (std::size_t q = 0; q < rays_.size(); ++q) {
                if (value[q] >= 0 || !adjacent(p, q)) continue;
                std::vector<Int> combo(d_);
                for (std::size_t j = 0; j < d_; ++j)
                    combo[j] = value[p] * rays_[q][j] - value[q] * rays_[p][j];
                next.push_back(make_primitive(std::move(combo)));
            }
        }
        rays_ = std::move(next);
    }

    std::vector<std::vector<Int>> rows_;
    std::size_t d_ = 0;
    std::vector<std::vector<Int>> rays_;
    std::vector<std::vector<bool>> tight_;
};

/// Convenience wrapper.
inline std::vector<std::vector<Int>> extreme_rays(std::vector<std::vector<Int>> rows) {
    return DoubleDescription(std::move(rows)).extreme_rays();
}

}  // namespace montype

#endif

#ifndef MONTYPE_LP_HPP
#define MONTYPE_LP_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "montype/errors.hpp"
#include "montype/numeric.hpp"

namespace montype {

enum class Relation { LessEq, GreaterEq, Equal };

struct Constraint {
    std::vector<Rat> coeffs;
    Relation rel;
    Rat rhs;
};

/// A linear program in general form: maximize objective subject to mixed
/// <=, >=, = constraints. Variables are free unless marked nonnegative.
struct LinearProgram {
    explicit LinearProgram(int num_vars)
        : num_vars(num_vars), objective(num_vars, Rat(0)), nonneg(num_vars, false) {
        if (num_vars < 1) throw PreconditionError("LP needs >= 1 variable");
    }

    void add_constraint(std::vector<Rat> coeffs, Relation rel, Rat rhs) {
        if (static_cast<int>(coeffs.size()) != num_vars)
            throw PreconditionError("constraint length does not match variable count");
        constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
    }

    void mark_all_nonneg() { nonneg.assign(num_vars, true); }

    int num_vars;
    std::vector<Rat> objective;
    std::vector<Constraint> constraints;
    std::vector<bool> nonneg;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
    LPStatus status;
    Rat value;                 // optimal objective value (when Optimal)
    std::vector<Rat> witness;  // feasible point attaining value (when Optimal)
    std::vector<Rat> ray;      // feasible improving direction (when Unbounded)
};

/// Two-phase primal simplex over exact rationals with Bland's rule, which
/// rules out cycling, so termination is unconditional. Free variables are
/// split into differences of nonnegative ones. The returned witness is
/// re-verified against every constraint before the outcome is handed back;
/// a failure there is an internal bug, not a caller error.
class SimplexSolver {
  public:
    explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) {
        if (lp.constraints.empty()) throw PreconditionError("LP needs >= 1 constraint");
    }

    LPOutcome solve() {
        build_tableau();
        if (!phase_one()) return {LPStatus::Infeasible, Rat(0), {}, {}};
        int entering = phase_two();
        if (entering >= 0) {
            LPOutcome out{LPStatus::Unbounded, Rat(0), {}, {}};
            out.ray = recover_ray(entering);
            return out;
        }
        LPOutcome out{LPStatus::Optimal, Rat(0), recover_witness(), {}};
        for (int i = 0; i < lp_.num_vars; ++i) out.value += lp_.objective[i] * out.witness[i];
        verify_witness(out);
        return out;
    }

  private:
    // Column layout: structural columns (free variables occupy two, p - q),
    // then slack/surplus columns, then artificial columns; Bland's rule
    // uses this fixed order.
    void build_tableau() {
        col_of_var_.clear();
        normalized_rel_.clear();
        int cols = 0;
        for (int i = 0; i < lp_.num_vars; ++i) {
            col_of_var_.push_back(cols);
            cols += lp_.nonneg[i] ? 1 : 2;
        }
        structural_cols_ = cols;

        const std::size_t m = lp_.constraints.size();
        rows_.assign(m, {});
        rhs_.assign(m, Rat(0));
        for (std::size_t r = 0; r < m; ++r) {
            const Constraint& c = lp_.constraints[r];
            std::vector<Rat> row(structural_cols_, Rat(0));
            for (int i = 0; i < lp_.num_vars; ++i) {
                row[col_of_var_[i]] = c.coeffs[i];
                if (!lp_.nonneg[i]) row[col_of_var_[i] + 1] = -c.coeffs[i];
            }
            Rat b = c.rhs;
            Relation rel = c.rel;
            if (b < 0) {  // normalize to b >= 0
                for (Rat& x : row) x = -x;
                b = -b;
                if (rel == Relation::LessEq)
                    rel = Relation::GreaterEq;
                else if (rel == Relation::GreaterEq)
                    rel = Relation::LessEq;
            }
            rows_[r] = std::move(row);
            rhs_[r] = std::move(b);
            normalized_rel_.push_back(rel);
        }

        // Slack / surplus columns.
        slack_col_.assign(m, -1);
        for (std::size_t r = 0; r < m; ++r) {
            if (normalized_rel_[r] == Relation::Equal) continue;
            slack_col_[r] = total_cols();
            for (std::size_t i = 0; i < m; ++i)
                rows_[i].push_back(i == r ? (normalized_rel_[r] == Relation::LessEq ? Rat(1) : Rat(-1))
                                          : Rat(0));
        }
        first_artificial_ = total_cols();

        // Artificial columns: every >= and = row gets one; <= rows start
        // with their slack basic.
        basis_.assign(m, -1);
        for (std::size_t r = 0; r < m; ++r) {
            if (normalized_rel_[r] == Relation::LessEq) {
                basis_[r] = slack_col_[r];
                continue;
            }
            int col = total_cols();
            for (std::size_t i = 0; i < m; ++i) rows_[i].push_back(i == r ? Rat(1) : Rat(0));
            basis_[r] = col;
        }
    }

    int total_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

    /// Minimize the sum of artificials. Returns false when infeasible.
    bool phase_one() {
        if (first_artificial_ == total_cols()) return true;  // all rows slack-basic
        std::vector<Rat> cost(total_cols(), Rat(0));
        for (int j = first_artificial_; j < total_cols(); ++j) cost[j] = 1;
        load_cost_row(cost);
        run_simplex();
        if (objective_value_ != 0) return false;
        expel_artificials();
        return true;
    }

    /// Maximize the real objective (as minimize of its negation).
    /// Returns -1 at optimality, or the entering column certifying
    /// unboundedness.
    int phase_two() {
        std::vector<Rat> cost(total_cols(), Rat(0));
        for (int i = 0; i < lp_.num_vars; ++i) {
            cost[col_of_var_[i]] = -lp_.objective[i];
            if (!lp_.nonneg[i]) cost[col_of_var_[i] + 1] = lp_.objective[i];
        }
        load_cost_row(cost);
        return run_simplex();
    }

    void load_cost_row(const std::vector<Rat>& cost) {
        cost_ = cost;
        objective_value_ = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (cost_[basis_[r]] == 0) continue;
            Rat f = cost_[basis_[r]];
            for (int j = 0; j < total_cols(); ++j) cost_[j] -= f * rows_[r][j];
            objective_value_ -= f * rhs_[r];
        }
    }

    /// Bland's rule simplex on the current cost row. Returns -1 at
    /// optimality or the entering column when unbounded. Artificial
    /// columns never enter the basis.
    int run_simplex() {
        const int limit = std::min(first_artificial_, total_cols());
        while (true) {
            int entering = -1;
            for (int j = 0; j < limit; ++j) {
                if (cost_[j] < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return -1;

            int leaving = -1;
            Rat best_ratio;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (rows_[r][entering] <= 0) continue;
                Rat ratio = rhs_[r] / rows_[r][entering];
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[r] < basis_[leaving])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return entering;  // unbounded direction
            pivot(leaving, entering);
        }
    }

    void pivot(int row, int col) {
        Rat p = rows_[row][col];
        for (int j = 0; j < total_cols(); ++j) rows_[row][j] /= p;
        rhs_[row] /= p;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(r) == row || rows_[r][col] == 0) continue;
            Rat f = rows_[r][col];
            for (int j = 0; j < total_cols(); ++j) rows_[r][j] -= f * rows_[row][j];
            rhs_[r] -= f * rhs_[row];
        }
        if (cost_[col] != 0) {
            Rat f = cost_[col];
            for (int j = 0; j < total_cols(); ++j) cost_[j] -= f * rows_[row][j];
            objective_value_ -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    /// After a zero-value phase one, pivot artificials out of the basis;
    /// rows that cannot pivot on any real column are redundant and are
    /// dropped.
    void expel_artificials() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < first_artificial_) continue;
            int col = -1;
            for (int j = 0; j < first_artificial_ && col < 0; ++j)
                if (rows_[r][j] != 0) col = j;
            if (col >= 0) pivot(static_cast<int>(r), col);
        }
        // Drop redundant rows and all artificial columns.
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        std::vector<int> basis;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] >= first_artificial_) continue;  // redundant zero row
            rows_[r].resize(first_artificial_);
            rows.push_back(std::move(rows_[r]));
            rhs.push_back(std::move(rhs_[r]));
            basis.push_back(basis_[r]);
        }
        rows_ = std::move(rows);
        rhs_ = std::move(rhs);
        basis_ = std::move(basis);
    }

    std::vector<Rat> recover_witness() const {
        std::vector<Rat> cols(total_cols(), Rat(0));
        for (std::size_t r = 0; r < rows_.size(); ++r) cols[basis_[r]] = rhs_[r];
        std::vector<Rat> x(lp_.num_vars);
        for (int i = 0; i < lp_.num_vars; ++i) {
            x[i] = cols[col_of_var_[i]];
            if (!lp_.nonneg[i]) x[i] -= cols[col_of_var_[i] + 1];
        }
        return x;
    }

    /// Improving feasible direction from an unbounded entering column:
    /// entering coordinate 1, basic coordinates minus the column entries.
    std::vector<Rat> recover_ray(int entering) const {
        std::vector<Rat> cols(total_cols(), Rat(0));
        cols[entering] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) cols[basis_[r]] -= rows_[r][entering];
        std::vector<Rat> d(lp_.num_vars);
        for (int i = 0; i < lp_.num_vars; ++i) {
            d[i] = cols[col_of_var_[i]];
            if (!lp_.nonneg[i]) d[i] -= cols[col_of_var_[i] + 1];
        }
        return d;
    }

    void verify_witness(const LPOutcome& out) const {
        for (int i = 0; i < lp_.num_vars; ++i)
            if (lp_.nonneg[i] && out.witness[i] < 0)
                throw InternalError("simplex witness violates nonnegativity");
        for (const Constraint& c : lp_.constraints) {
            Rat lhs = 0;
            for (int i = 0; i < lp_.num_vars; ++i) lhs += c.coeffs[i] * out.witness[i];
            bool ok = c.rel == Relation::LessEq      ? lhs <= c.rhs
                      : c.rel == Relation::GreaterEq ? lhs >= c.rhs
                                                     : lhs == c.rhs;
            if (!ok) throw InternalError("simplex witness violates a constraint");
        }
    }

    const LinearProgram& lp_;
    std::vector<int> col_of_var_;
    int structural_cols_ = 0;
    int first_artificial_ = 0;
    std::vector<std::vector<Rat>> rows_;
    std::vector<Rat> rhs_;
    std::vector<Rat> cost_;
    Rat objective_value_;
    std::vector<int> basis_;
    std::vector<int> slack_col_;
    std::vector<Relation> normalized_rel_;
};

inline LPOutcome solve(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

}  // namespace montype

#endif

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mssms/rational.hpp"

namespace mssms {

// min c.x subject to the rows and 0 <= x_j <= upper_j (upper may be absent).
struct LpRow {
    enum class Sense { LE, GE, EQ };
    std::vector<std::pair<int, Rat>> coeffs;
    Sense sense;
    Rat rhs;
};

struct LinearProgram {
    int num_vars = 0;
    std::vector<Rat> objective;
    std::vector<std::optional<Rat>> upper;
    std::vector<LpRow> rows;
};

struct SimplexSolution {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Infeasible;
    std::vector<Rat> x;  // structural variables only
    Rat objective;
    long long pivots = 0;
};

// Dense two-phase primal simplex over exact rationals, with [0, u] bounds
// handled implicitly (nonbasic variables rest at either bound). Pivot choice
// is Dantzig's rule until the objective stalls, then permanently Bland's rule,
// which cannot cycle. Before returning, the optimum is re-checked in exact
// arithmetic: primal feasibility, zero reduced costs on the basis, sign-valid
// reduced costs off it, and consistency of the reduced-cost row with a dual
// vector recovered from the slack/artificial columns.
class SimplexSolver {
public:
    explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) { build(); }

    SimplexSolution solve() {
        SimplexSolution out;
        // Phase 1: minimize the artificial total.
        if (art_begin_ < cols()) {
            run_phase(z1_, z1val_, /*allow_artificials=*/true);
            if (z1val_ != 0) {
                out.status = SimplexSolution::Status::Infeasible;
                return out;
            }
            evict_artificials();
            for (int j = art_begin_; j < cols(); ++j) up_[j] = Rat(0);  // locked
        }
        bool bounded = run_phase(z2_, z2val_, /*allow_artificials=*/false);
        if (!bounded) {
            out.status = SimplexSolution::Status::Unbounded;
            return out;
        }
        out.status = SimplexSolution::Status::Optimal;
        out.x = extract();
        out.objective = 0;
        for (int j = 0; j < lp_.num_vars; ++j) out.objective += lp_.objective[j] * out.x[j];
        out.pivots = pivots_;
        check_certificate(out);
        return out;
    }

private:
    enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };

    int rows() const { return static_cast<int>(tab_.size()); }
    int cols() const { return n_total_; }

    void build() {
        const int m = static_cast<int>(lp_.rows.size());
        const int n = lp_.num_vars;
        slack_begin_ = n;
        int n_slack = 0;
        for (const auto& row : lp_.rows)
            if (row.sense != LpRow::Sense::EQ) ++n_slack;
        art_begin_ = n + n_slack;

        std::vector<std::vector<Rat>> dense(m, std::vector<Rat>(n, Rat(0)));
        b_.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            for (const auto& [j, v] : lp_.rows[i].coeffs) {
                if (j < 0 || j >= n) throw std::invalid_argument("row coefficient out of range");
                dense[i][j] += v;
            }
            b_[i] = lp_.rows[i].rhs;
        }

        // Slack columns, then sign-normalize so b >= 0; rows whose slack ends
        // up with coefficient -1 (and EQ rows) get an artificial.
        std::vector<Rat> slack_coeff(m, Rat(0));
        std::vector<int> slack_col(m, -1);
        int next_slack = slack_begin_;
        for (int i = 0; i < m; ++i) {
            if (lp_.rows[i].sense != LpRow::Sense::EQ) {
                slack_col[i] = next_slack++;
                slack_coeff[i] = lp_.rows[i].sense == LpRow::Sense::LE ? Rat(1) : Rat(-1);
            }
        }
        std::vector<int> art_col(m, -1);
        int next_art = art_begin_;
        for (int i = 0; i < m; ++i) {
            if (b_[i] < 0) {
                for (auto& v : dense[i]) v = -v;
                slack_coeff[i] = -slack_coeff[i];
                b_[i] = -b_[i];
            }
            if (slack_col[i] < 0 || slack_coeff[i] < 0) art_col[i] = next_art++;
        }
        n_total_ = next_art;

        tab_.assign(m, std::vector<Rat>(n_total_, Rat(0)));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) tab_[i][j] = dense[i][j];
            if (slack_col[i] >= 0) tab_[i][slack_col[i]] = slack_coeff[i];
            if (art_col[i] >= 0) tab_[i][art_col[i]] = 1;
        }

        up_.assign(n_total_, std::nullopt);
        for (int j = 0; j < n; ++j) up_[j] = lp_.upper[j];

        state_.assign(n_total_, VarState::AtLower);
        basis_.assign(m, -1);
        beta_.assign(m, Rat(0));
        for (int i = 0; i < m; ++i) {
            basis_[i] = art_col[i] >= 0 ? art_col[i] : slack_col[i];
            state_[basis_[i]] = VarState::Basic;
            beta_[i] = b_[i];
        }

        // Objective rows, with basic columns eliminated. Initially only
        // artificials (phase-1 cost 1) can be basic with nonzero cost.
        z1_.assign(n_total_, Rat(0));
        z2_.assign(n_total_, Rat(0));
        for (int j = art_begin_; j < n_total_; ++j) z1_[j] = 1;
        for (int j = 0; j < n; ++j) z2_[j] = lp_.objective[j];
        z1val_ = 0;
        z2val_ = 0;
        for (int i = 0; i < m; ++i) {
            if (basis_[i] >= art_begin_) {
                for (int j = 0; j < n_total_; ++j) z1_[j] -= tab_[i][j];
                z1val_ += beta_[i];
            }
        }
    }

    Rat upper_or_throw(int j) const { return *up_[j]; }

    // One phase of the bounded-variable simplex; returns false on unbounded.
    bool run_phase(std::vector<Rat>& z, Rat& zval, bool allow_artificials) {
        bool bland = false;
        int stall = 0;
        const int stall_limit = 2 * (rows() + cols()) + 16;
        while (true) {
            int enter = -1;
            Rat best_score = 0;
            const int scan_end = allow_artificials ? cols() : art_begin_;
            for (int j = 0; j < scan_end; ++j) {
                if (state_[j] == VarState::Basic) continue;
                bool improving = (state_[j] == VarState::AtLower) ? z[j] < 0 : z[j] > 0;
                if (!improving) continue;
                if (up_[j] && *up_[j] == 0) continue;  // locked column
                if (bland) {
                    enter = j;
                    break;
                }
                Rat score = z[j] < 0 ? Rat(-z[j]) : z[j];
                if (enter == -1 || score > best_score) {
                    enter = j;
                    best_score = score;
                }
            }
            if (enter == -1) return true;  // optimal for this phase

            const int dir = state_[enter] == VarState::AtLower ? 1 : -1;
            std::optional<Rat> t;
            int leave_row = -1;  // -1 with t set: bound flip of the entering var
            if (up_[enter]) {
                t = upper_or_throw(enter);
            }
            for (int i = 0; i < rows(); ++i) {
                Rat a = dir * tab_[i][enter];
                if (a == 0) continue;
                std::optional<Rat> limit;
                if (a > 0) {
                    limit = beta_[i] / a;
                } else if (up_[basis_[i]]) {
                    limit = (upper_or_throw(basis_[i]) - beta_[i]) / -a;
                }
                if (!limit) continue;
                if (!t || *limit < *t ||
                    (*limit == *t && leave_row != -1 && basis_[i] < basis_[leave_row]) ||
                    (*limit == *t && leave_row == -1)) {
                    // On ties prefer a basis change with the smallest leaving
                    // column (Bland); a tied bound flip loses to rows.
                    if (!t || *limit < *t || leave_row == -1 || basis_[i] < basis_[leave_row]) {
                        t = limit;
                        leave_row = i;
                    }
                }
            }
            if (!t) return false;  // unbounded direction

            Rat step = *t;
            Rat delta = z[enter] * dir * step;
            zval += delta;
            z2val_ += z2_[enter] * dir * step;  // cheap to keep both in sync
            if (leave_row == -1) {
                // Entering variable runs to its opposite bound.
                for (int i = 0; i < rows(); ++i)
                    if (tab_[i][enter] != 0) beta_[i] -= dir * tab_[i][enter] * step;
                state_[enter] = dir == 1 ? VarState::AtUpper : VarState::AtLower;
            } else {
                pivot(leave_row, enter, dir, step);
            }
            if (delta == 0) {
                if (!bland && ++stall > stall_limit) bland = true;
            } else {
                stall = 0;
            }
        }
    }

    void pivot(int r, int enter, int dir, const Rat& step) {
        const int leave = basis_[r];
        // Leaving variable lands exactly on the bound that limited the step.
        Rat a = dir * tab_[r][enter];
        state_[leave] = a > 0 ? VarState::AtLower : VarState::AtUpper;

        Rat enter_value = (state_[enter] == VarState::AtUpper ? upper_or_throw(enter) : Rat(0)) + dir * step;
        for (int i = 0; i < rows(); ++i)
            if (i != r && tab_[i][enter] != 0) beta_[i] -= dir * tab_[i][enter] * step;

        Rat piv = tab_[r][enter];
        for (auto& v : tab_[r]) v /= piv;
        for (int i = 0; i < rows(); ++i) {
            if (i == r || tab_[i][enter] == 0) continue;
            Rat f = tab_[i][enter];
            for (int j = 0; j < cols(); ++j)
                if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
        }
        for (auto* zrow : {&z1_, &z2_}) {
            Rat f = (*zrow)[enter];
            if (f == 0) continue;
            for (int j = 0; j < cols(); ++j)
                if (tab_[r][j] != 0) (*zrow)[j] -= f * tab_[r][j];
        }
        basis_[r] = enter;
        state_[enter] = VarState::Basic;
        beta_[r] = std::move(enter_value);
        ++pivots_;
    }

    // Degenerate basic artificials are swapped for any real column in their
    // row; an all-zero row is redundant and keeps its artificial pinned at 0.
    void evict_artificials() {
        for (int r = 0; r < rows(); ++r) {
            if (basis_[r] < art_begin_) continue;
            if (beta_[r] != 0) throw std::logic_error("artificial basic with nonzero value after phase 1");
            for (int j = 0; j < art_begin_; ++j) {
                if (state_[j] == VarState::Basic || tab_[r][j] == 0) continue;
                int dir = state_[j] == VarState::AtLower ? 1 : -1;
                pivot(r, j, dir, Rat(0));
                break;
            }
        }
    }

    std::vector<Rat> extract() const {
        std::vector<Rat> x(n_total_, Rat(0));
        for (int j = 0; j < n_total_; ++j)
            if (state_[j] == VarState::AtUpper) x[j] = *up_[j];
        for (int i = 0; i < rows(); ++i) x[basis_[i]] = beta_[i];
        return {x.begin(), x.begin() + lp_.num_vars};
    }

    // Exact optimality certificate on the final tableau.
    void check_certificate(const SimplexSolution& sol) const {
        for (int j = 0; j < lp_.num_vars; ++j) {
            if (sol.x[j] < 0) throw std::logic_error("simplex: negative variable");
            if (lp_.upper[j] && sol.x[j] > *lp_.upper[j]) throw std::logic_error("simplex: upper bound violated");
        }
        for (const auto& row : lp_.rows) {
            Rat lhs = 0;
            for (const auto& [j, v] : row.coeffs) lhs += v * sol.x[j];
            bool ok = row.sense == LpRow::Sense::LE   ? lhs <= row.rhs
                      : row.sense == LpRow::Sense::GE ? lhs >= row.rhs
                                                      : lhs == row.rhs;
            if (!ok) throw std::logic_error("simplex: primal infeasible result");
        }
        for (int j = 0; j < cols(); ++j) {
            if (state_[j] == VarState::Basic) {
                if (z2_[j] != 0) throw std::logic_error("simplex: basic reduced cost nonzero");
            } else if (j < art_begin_) {
                bool locked = up_[j] && *up_[j] == 0;
                if (!locked && state_[j] == VarState::AtLower && z2_[j] < 0)
                    throw std::logic_error("simplex: negative reduced cost at lower bound");
                if (!locked && state_[j] == VarState::AtUpper && z2_[j] > 0)
                    throw std::logic_error("simplex: positive reduced cost at upper bound");
            }
        }
    }

    const LinearProgram& lp_;
    int slack_begin_ = 0, art_begin_ = 0, n_total_ = 0;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> b_, beta_, z1_, z2_;
    Rat z1val_, z2val_;
    std::vector<int> basis_;
    std::vector<VarState> state_;
    long long pivots_ = 0;
};

inline SimplexSolution solve_lp(const LinearProgram& lp) { return SimplexSolver(lp).solve(); }

// Independent primal re-check of a claimed solution against the original
// model: bounds, every row, and the objective value.
inline std::optional<std::string> verify_lp_solution(const LinearProgram& lp, const SimplexSolution& sol) {
    if (sol.status != SimplexSolution::Status::Optimal) return "solution not optimal";
    if (static_cast<int>(sol.x.size()) != lp.num_vars) return "solution size mismatch";
    for (int j = 0; j < lp.num_vars; ++j) {
        if (sol.x[j] < 0) return "variable below lower bound";
        if (lp.upper[j] && sol.x[j] > *lp.upper[j]) return "variable above upper bound";
    }
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        Rat lhs = 0;
        for (const auto& [j, v] : lp.rows[i].coeffs) lhs += v * sol.x[j];
        const auto& row = lp.rows[i];
        bool ok = row.sense == LpRow::Sense::LE   ? lhs <= row.rhs
                  : row.sense == LpRow::Sense::GE ? lhs >= row.rhs
                                                  : lhs == row.rhs;
        if (!ok) return "row " + std::to_string(i) + " violated";
    }
    Rat obj = 0;
    for (int j = 0; j < lp.num_vars; ++j) obj += lp.objective[j] * sol.x[j];
    if (obj != sol.objective) return "objective mismatch";
    return std::nullopt;
}

}  // namespace mssms

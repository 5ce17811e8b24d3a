#include "codebounds/lp.hpp"

#include <stdexcept>

namespace cb {

void LinearProgram::add_row(std::vector<Rational> coef, Sense s, Rational rhs) {
    if (coef.size() != objective.size()) throw DimensionError("row length differs from variable count");
    rows.push_back({std::move(coef), s, std::move(rhs)});
}

void LinearProgram::fix(std::size_t var, Rational value) {
    if (fixed.size() < objective.size()) fixed.resize(objective.size());
    fixed.at(var) = std::move(value);
}

namespace {

struct Standard {
    // Rows of [A' | rhs], all rhs >= 0.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<int> flip;       // +1 or -1 per row
    std::size_t n_orig = 0;
    std::size_t n_total = 0;
    std::size_t first_art = 0;   // columns >= first_art are artificial
    std::vector<int> basis;
};

// Gathers rows and fixings into one list of constraints.
std::vector<LpRow> all_rows(const LinearProgram& lp) {
    std::vector<LpRow> rows = lp.rows;
    for (std::size_t j = 0; j < lp.fixed.size(); ++j) {
        if (!lp.fixed[j]) continue;
        LpRow r;
        r.coef.assign(lp.num_vars(), 0);
        r.coef[j] = 1;
        r.sense = Sense::EQ;
        r.rhs = *lp.fixed[j];
        rows.push_back(std::move(r));
    }
    return rows;
}

Standard standardize(const LinearProgram& lp, const std::vector<LpRow>& rows) {
    Standard s;
    const std::size_t m = rows.size(), n = lp.num_vars();
    s.n_orig = n;
    std::size_t n_slack = 0, n_art = 0;
    std::vector<Sense> sense(m);
    for (std::size_t i = 0; i < m; ++i) {
        sense[i] = rows[i].sense;
        s.flip.push_back(1);
        if (rows[i].rhs < 0) {
            s.flip[i] = -1;
            if (sense[i] == Sense::LE)
                sense[i] = Sense::GE;
            else if (sense[i] == Sense::GE)
                sense[i] = Sense::LE;
        }
        if (sense[i] != Sense::EQ) ++n_slack;
        if (sense[i] != Sense::LE) ++n_art;
    }
    s.first_art = n + n_slack;
    s.n_total = n + n_slack + n_art;
    s.a.assign(m, std::vector<Rational>(s.n_total, 0));
    s.b.resize(m);
    s.basis.resize(m);
    std::size_t slack = n, art = s.first_art;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) s.a[i][j] = rows[i].coef[j] * s.flip[i];
        s.b[i] = rows[i].rhs * s.flip[i];
        if (sense[i] == Sense::LE) {
            s.a[i][slack] = 1;
            s.basis[i] = static_cast<int>(slack++);
        } else {
            if (sense[i] == Sense::GE) s.a[i][slack++] = -1;
            s.a[i][art] = 1;
            s.basis[i] = static_cast<int>(art++);
        }
    }
    return s;
}

class Tableau {
public:
    Tableau(const Standard& s) : t_(s.a), rhs_(s.b), basis_(s.basis) {}

    // Maximizes cost^T x over columns < allowed; returns false if unbounded.
    bool optimize(const std::vector<Rational>& cost, std::size_t allowed) {
        const std::size_t m = t_.size();
        for (;;) {
            int enter = -1;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (is_basic(j)) continue;
                Rational rc = cost[j];
                for (std::size_t i = 0; i < m; ++i)
                    if (t_[i][j] != 0) rc -= cost[basis_[i]] * t_[i][j];
                if (rc > 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = rhs_[i] / t_[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        Rational p = t_[r][c];
        for (auto& v : t_[r]) v /= p;
        rhs_[r] /= p;
        for (std::size_t i = 0; i < t_.size(); ++i) {
            if (i == r || t_[i][c] == 0) continue;
            Rational f = t_[i][c];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
            rhs_[i] -= f * rhs_[r];
        }
        basis_[r] = static_cast<int>(c);
    }

    bool is_basic(std::size_t j) const {
        for (int b : basis_)
            if (b == static_cast<int>(j)) return true;
        return false;
    }

    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> rhs_;
    std::vector<int> basis_;
};

// Solves M^T y = rhs for square M given by basis columns of A.
std::vector<Rational> solve_transposed(const std::vector<std::vector<Rational>>& a, const std::vector<int>& basis,
                                       const std::vector<Rational>& cb) {
    const std::size_t m = basis.size();
    // Row k of the system: sum_i a[i][basis[k]] y_i = cb[k].
    std::vector<std::vector<Rational>> sys(m, std::vector<Rational>(m + 1));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) sys[k][i] = a[i][basis[k]];
        sys[k][m] = cb[k];
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && sys[piv][col] == 0) ++piv;
        if (piv == m) throw std::logic_error("singular basis");
        std::swap(sys[piv], sys[col]);
        Rational p = sys[col][col];
        for (auto& v : sys[col]) v /= p;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || sys[r][col] == 0) continue;
            Rational f = sys[r][col];
            for (std::size_t j = col; j <= m; ++j) sys[r][j] -= f * sys[col][j];
        }
    }
    std::vector<Rational> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = sys[i][m];
    return y;
}

} // namespace

LpSolution solve_lp_exact(const LinearProgram& lp) {
    const auto rows = all_rows(lp);
    Standard s = standardize(lp, rows);
    Tableau tab(s);
    LpSolution sol;
    const std::size_t m = rows.size();

    // Phase 1: maximize minus the sum of artificials.
    if (s.first_art < s.n_total) {
        std::vector<Rational> c1(s.n_total, 0);
        for (std::size_t j = s.first_art; j < s.n_total; ++j) c1[j] = -1;
        tab.optimize(c1, s.n_total);
        Rational infeas = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (tab.basis_[i] >= static_cast<int>(s.first_art)) infeas += tab.rhs_[i];
        if (infeas != 0) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive zero-level artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis_[i] < static_cast<int>(s.first_art)) continue;
            for (std::size_t j = 0; j < s.first_art; ++j)
                if (tab.t_[i][j] != 0 && !tab.is_basic(j)) {
                    tab.pivot(i, j);
                    break;
                }
        }
    }

    std::vector<Rational> c2(s.n_total, 0);
    for (std::size_t j = 0; j < s.n_orig; ++j) c2[j] = lp.objective[j];
    if (!tab.optimize(c2, s.first_art)) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }
    sol.status = LpStatus::Optimal;
    sol.primal.assign(s.n_orig, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis_[i] < static_cast<int>(s.n_orig)) sol.primal[tab.basis_[i]] = tab.rhs_[i];
    sol.optimum = 0;
    for (std::size_t j = 0; j < s.n_orig; ++j) sol.optimum += lp.objective[j] * sol.primal[j];

    if (m > 0) {
        std::vector<Rational> cbv(m);
        for (std::size_t k = 0; k < m; ++k) cbv[k] = c2[tab.basis_[k]];
        auto y = solve_transposed(s.a, tab.basis_, cbv);
        sol.dual.resize(m);
        for (std::size_t i = 0; i < m; ++i) sol.dual[i] = y[i] * s.flip[i];
    }
    sol.certificate_ok = verify_certificate(lp, sol);
    return sol;
}

bool verify_certificate(const LinearProgram& lp, const LpSolution& sol) {
    if (sol.status != LpStatus::Optimal) return false;
    const auto rows = all_rows(lp);
    const std::size_t n = lp.num_vars();
    if (sol.primal.size() != n || sol.dual.size() != rows.size()) return false;
    for (const auto& x : sol.primal)
        if (x < 0) return false;
    Rational dual_obj = 0;
    std::vector<Rational> reduced(lp.objective.begin(), lp.objective.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const Rational& y = sol.dual[i];
        Rational lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += r.coef[j] * sol.primal[j];
        switch (r.sense) {
        case Sense::LE:
            if (lhs > r.rhs || y < 0) return false;
            break;
        case Sense::GE:
            if (lhs < r.rhs || y > 0) return false;
            break;
        case Sense::EQ:
            if (lhs != r.rhs) return false;
            break;
        }
        if (y * (lhs - r.rhs) != 0) return false;
        dual_obj += y * r.rhs;
        for (std::size_t j = 0; j < n; ++j) reduced[j] -= y * r.coef[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (reduced[j] > 0) return false;
        if (reduced[j] * sol.primal[j] != 0) return false;
    }
    return dual_obj == sol.optimum;
}

} // namespace cb

#pragma once

#include "codebounds/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cb {

enum class Sense { LE, GE, EQ };

struct LpRow {
    std::vector<Rational> coef;
    Sense sense = Sense::GE;
    Rational rhs = 0;
};

/// maximize c^T x subject to rows, x >= 0, with optional per-variable fixings.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<std::optional<Rational>> fixed;
    std::vector<std::string> names;

    std::size_t num_vars() const { return objective.size(); }
    void add_row(std::vector<Rational> coef, Sense s, Rational rhs);
    void fix(std::size_t var, Rational value);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational optimum = 0;
    std::vector<Rational> primal;
    /// One multiplier per row, followed by one per fixed variable.
    std::vector<Rational> dual;
    bool certificate_ok = false;
};

/// Two-phase primal simplex with Bland's rule in exact rational arithmetic.
/// On optimality the dual multipliers are checked for feasibility, equal
/// objective and complementary slackness.
LpSolution solve_lp_exact(const LinearProgram& lp);

/// Independent verification of an optimal (primal, dual) pair.
bool verify_certificate(const LinearProgram& lp, const LpSolution& sol);

} // namespace cb

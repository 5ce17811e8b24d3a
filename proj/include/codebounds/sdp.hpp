#pragma once

#include "codebounds/code.hpp"
#include "codebounds/lp.hpp"
#include "codebounds/orbit.hpp"
#include "codebounds/reduction.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cb {

enum class Family { Hamming4, CwA3, CwA4, CwB4, Lee3, LeeInf3 };

Family parse_family(const std::string& s);
std::string family_name(Family f);

struct SdpVariable {
    OrbitKey key;
    Integer orbit_size = 1;
};

/// Upper-triangle entry (i <= j, 0-based) of a block: constant + sum coef * z.
struct SdpEntry {
    int i = 0;
    int j = 0;
    Rational constant = 0;
    std::vector<std::pair<int, Rational>> terms; // sorted by variable index
};

struct SdpBlock {
    std::string label;
    int dim = 0;
    std::vector<SdpEntry> entries; // sorted by (i, j)
};

/// maximize sum_v objective[v] z_v subject to every block being PSD and z >= 0.
/// Coefficients are exact unless `exact` is false, in which case they hold
/// the binary value of a double.
struct SdpProgram {
    std::string family;
    int q = 2, n = 0, d = 0;
    std::optional<int> w;
    Metric metric = Metric::Hamming;
    SymbolGroup group = SymbolGroup::Symmetric;
    bool exact = true;
    int max_code_size = 0;
    bool complemented = false; // weight normalized via complementation
    std::vector<SdpVariable> vars;
    std::vector<Rational> objective;
    std::vector<SdpBlock> blocks;
    std::vector<std::string> notes;

    std::size_t num_vars() const { return vars.size(); }
};

SdpProgram gen_hamming_quadruple(int q, int n, int d);
SdpProgram gen_cw(int n, int d, int w, Family level);
SdpProgram gen_lee_triple(int q, int n, int d);
SdpProgram gen_leeinf_triple(int q, int n, int d);
SdpProgram generate(Family f, int q, int n, int d, std::optional<int> w);

/// Delsarte LP in the variables a_0..a_n, read off from the reduced 1x1 blocks
/// of the pair program. Row t is the block for the composition (n-t, t),
/// scaled so that the coefficient of a_0 is 1.
LinearProgram gen_delsarte_via_reduction(int q, int n, int d);

struct EvalReport {
    bool feasible = false;
    double objective = 0;
    double min_eigenvalue = 0;
    bool violates_constraints = false;
    std::vector<double> z;
};

/// z(omega) = #{S subset of C : S in omega} / |omega|.
EvalReport evaluate_at_code(const SdpProgram& p, const Code& c);

/// Block values at a variable assignment (dense, symmetric).
std::vector<Eigen::MatrixXd> evaluate_blocks(const SdpProgram& p, const std::vector<double>& z);

struct DualSolution {
    std::vector<Eigen::MatrixXd> blocks; // one per program block
    std::vector<double> x_var;           // nonnegativity multipliers, one per variable
};

struct ForbiddenReport {
    std::vector<int> forbidden; // variable indices
    std::vector<double> epsilon;
    std::vector<double> c;
    double dual_objective = 0;
};

/// Flags variable v when X_v > 0 and c_v / X_v < lower_bound. `code_size` is
/// a known lower bound for the optimum (the size of a known code).
ForbiddenReport analyze_dual(const SdpProgram& p, const DualSolution& x, double lower_bound, double code_size);

void emit_sdpa(const SdpProgram& p, std::ostream& out);
std::string emit_sdpa(const SdpProgram& p);
SdpProgram parse_sdpa(std::istream& in);
SdpProgram parse_sdpa_string(const std::string& s);

/// Reads a dual matrix in "blkno i j value" lines (1-based, upper triangle);
/// the final block number refers to the diagonal nonnegativity block.
DualSolution read_dual(const SdpProgram& p, std::istream& in);

} // namespace cb

#pragma once

#include "codebounds/code.hpp"
#include "codebounds/oracle.hpp"
#include "codebounds/rational.hpp"

#include <optional>

namespace cb {

/// Circular graph C_{d,q}: vertices Z_q, adjacent when circular distance < d.
struct CircularParams {
    long d = 0;
    long q = 0;
    CircularParams(long d_, long q_);
    Rational ratio() const { return Rational(q, d); }
};

/// Closed form for the Lovasz theta number of C_{d,q}.
double theta_circular(long d, long q);

/// q_n = (1 + r^n (r - 2)) / (r - 1).
Integer qn(long r, long n);

/// {t * (1, r, ..., r^(n-1)) mod q_n : t in Z_{q_n}}.
Code circular_construction(long r, long n);

/// {t * (1, 7, 7^2, 7^3, 7^4) mod 382}: independent in C_{108,382}^5.
Code independent_382();

/// The listed 367-word independent set of C_7^5.
Code c7_367();

struct PipelineReport {
    long start = 0;          // words of the 382-set
    long mapped_distinct = 0;
    long after_removal = 0;  // |M|
    long residual_vertices = 0;
    long residual_edges = 0;
    long added = 0;
    long final_size = 0;
    bool extension_exact = false;
    Code result;
};

constexpr long kPipelineMaxResidual = 2000;

/// Shift the 382-set, map x -> floor(x / divisor) into Z_7, drop every word
/// adjacent in C_7^5 to another one, then extend by a maximum independent set.
/// The extension is skipped (extension_exact false, added 0) when more than
/// kPipelineMaxResidual words remain compatible with the kept ones.
PipelineReport c7_pipeline(const Word& shift, const Rational& divisor);

/// The shift (40,123,40,123,40) and divisor 109/2.
Word c7_default_shift();
Rational c7_default_divisor();

constexpr long kUpperCheckUniverse = 2000;

/// alpha(C_{q_{n-1}, q_n}^n) <= q_n via the oracle; empty when q_n^n exceeds
/// kUpperCheckUniverse or the search budget runs out.
std::optional<bool> upper_bound_check(long r, long n, const SearchBudget& budget = {60'000'000, 60.0});

} // namespace cb

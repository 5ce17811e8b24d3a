#pragma once

#include "codebounds/lp.hpp"

namespace cb {

/// K_t(x) = sum_j (-1)^j C(x,j) C(n-x,t-j) (q-1)^(t-j).
Rational krawtchouk(long q, long n, long t, long x);

/// E_i(x) = sum_j (-1)^j C(x,j) C(w-x,i-j) C(n-w-x,i-j).
Rational eberlein(long n, long w, long i, long x);

struct DelsarteResult {
    Rational value;
    Integer floor;
    LinearProgram lp;
    LpSolution solution;
    /// Effective parameters after normalization (odd d, w > n/2).
    long d = 0;
    long w = 0;
    bool normalized = false;
};

/// Variables a_0..a_n; a_0 = 1, a_1..a_{d-1} = 0, sum_i K_t(i) a_i >= 0.
LinearProgram delsarte_hamming_lp(long q, long n, long d);
DelsarteResult delsarte_hamming(long q, long n, long d);

/// Variables a_{2i}, i = 0..w; a_0 = 1, a_{2i} = 0 for 0 < 2i < d,
/// sum_i E_i(k) / (C(w,i)C(n-w,i)) a_{2i} >= 0 for k = 1..w.
LinearProgram delsarte_johnson_lp(long n, long d, long w);
DelsarteResult delsarte_johnson(long n, long d, long w);

} // namespace cb

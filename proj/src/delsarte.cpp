#include "codebounds/delsarte.hpp"

namespace cb {

Rational krawtchouk(long q, long n, long t, long x) {
    if (t < 0 || t > n || x < 0 || x > n) throw DomainError("krawtchouk index out of range");
    Integer s = 0;
    Integer qm1 = q - 1;
    for (long j = 0; j <= t; ++j) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), qm1.get_mpz_t(), static_cast<unsigned long>(t - j));
        Integer term = binom(x, j) * binom(n - x, t - j) * pw;
        if (j % 2) s -= term;
        else s += term;
    }
    return Rational(s);
}

Rational eberlein(long n, long w, long i, long x) {
    if (i < 0 || x < 0 || x > w || w > n) throw DomainError("eberlein index out of range");
    Integer s = 0;
    for (long j = 0; j <= i; ++j) {
        Integer term = binom(x, j) * binom(w - x, i - j) * binom(n - w - x, i - j);
        if (j % 2) s -= term;
        else s += term;
    }
    return Rational(s);
}

LinearProgram delsarte_hamming_lp(long q, long n, long d) {
    if (q < 2 || d < 1 || d > n) throw DomainError("delsarte_hamming requires q >= 2 and 1 <= d <= n");
    LinearProgram lp;
    lp.objective.assign(n + 1, 1);
    lp.fixed.resize(n + 1);
    for (long i = 0; i <= n; ++i) lp.names.push_back("a" + std::to_string(i));
    lp.fix(0, 1);
    for (long i = 1; i < d; ++i) lp.fix(i, 0);
    for (long t = 1; t <= n; ++t) {
        std::vector<Rational> row(n + 1);
        for (long i = 0; i <= n; ++i) row[i] = krawtchouk(q, n, t, i);
        lp.add_row(std::move(row), Sense::GE, 0);
    }
    return lp;
}

static DelsarteResult finish(LinearProgram lp, long d, long w, bool normalized) {
    DelsarteResult r;
    r.lp = std::move(lp);
    r.solution = solve_lp_exact(r.lp);
    if (r.solution.status != LpStatus::Optimal) throw std::logic_error("Delsarte LP not optimal");
    r.value = r.solution.optimum;
    r.floor = floor_of(r.value);
    r.d = d;
    r.w = w;
    r.normalized = normalized;
    return r;
}

DelsarteResult delsarte_hamming(long q, long n, long d) {
    return finish(delsarte_hamming_lp(q, n, d), d, 0, false);
}

LinearProgram delsarte_johnson_lp(long n, long d, long w) {
    if (w < 0 || 2 * w > n || d % 2) throw DomainError("delsarte_johnson_lp requires even d and w <= n/2");
    LinearProgram lp;
    lp.objective.assign(w + 1, 1);
    lp.fixed.resize(w + 1);
    for (long i = 0; i <= w; ++i) lp.names.push_back("a" + std::to_string(2 * i));
    lp.fix(0, 1);
    for (long i = 1; 2 * i < d && i <= w; ++i) lp.fix(i, 0);
    for (long k = 1; k <= w; ++k) {
        std::vector<Rational> row(w + 1);
        for (long i = 0; i <= w; ++i) row[i] = eberlein(n, w, i, k) / Rational(binom(w, i) * binom(n - w, i));
        lp.add_row(std::move(row), Sense::GE, 0);
    }
    return lp;
}

DelsarteResult delsarte_johnson(long n, long d, long w) {
    if (n < 0 || w < 0 || w > n || d < 1) throw DomainError("delsarte_johnson parameters out of range");
    bool normalized = false;
    if (2 * w > n) {
        w = n - w;
        normalized = true;
    }
    if (d % 2) {
        ++d;
        normalized = true;
    }
    return finish(delsarte_johnson_lp(n, d, w), d, w, normalized);
}

} // namespace cb

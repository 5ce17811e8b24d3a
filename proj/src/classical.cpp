#include "codebounds/classical.hpp"

namespace cb {

std::optional<BoundResult> plotkin(long q, long n, long d) {
    if (q < 2) throw DomainError("plotkin requires q >= 2");
    Integer num = Integer(q) * d;
    Integer den = num - Integer(q - 1) * n;
    if (den <= 0) return std::nullopt;
    BoundResult r;
    r.value = num / den;
    r.method = "plotkin";
    r.certificate["numerator"] = num.get_str();
    r.certificate["denominator"] = den.get_str();
    return r;
}

BoundResult shorten_bound(long q, long n, long d, const BoundResult& inner) {
    BoundResult r;
    r.value = Integer(q) * inner.value;
    r.method = "shorten";
    r.certificate["inner"] = inner.value.get_str();
    r.certificate["inner_method"] = inner.method;
    r.certificate["inner_n"] = std::to_string(n - 1);
    r.certificate["d"] = std::to_string(d);
    return r;
}

Integer h_value(long q, long n, long d, long M) {
    if (q < 2 || M < 0) throw DomainError("h_value requires q >= 2 and M >= 0");
    long m = (M + q - 1) / q;
    long r = q * m - M;
    return binom(M, 2) * (n - d) - Integer(n) * (Integer(q - r) * binom(m, 2) + Integer(r) * binom(m - 1, 2));
}

std::optional<BoundResult> divisibility_bound(long q, long n, long d) {
    if (q < 2) throw DomainError("divisibility_bound requires q >= 2");
    Integer den = Integer(q) * d - Integer(q - 1) * (n - 1);
    if (den <= 0) return std::nullopt;
    if (Integer(d) % den != 0) return std::nullopt;
    Integer m = Integer(d) / den;
    if (m <= 0) return std::nullopt;
    if (n - d != 0 && (m * (n - 1)) % (n - d) == 0) return std::nullopt;
    for (long r = q - 1; r >= 1; --r) {
        Integer lhs = Integer(n) * (n - 1 - d) * (r - 1) * r;
        Integer rhs = Integer(q - r + 1) * (Integer(q) * m * (q + r - 2) - 2 * r);
        if (lhs < rhs) {
            BoundResult b;
            b.value = Integer(q) * q * m - r - 1;
            b.method = "divisibility";
            b.certificate["m"] = m.get_str();
            b.certificate["r"] = std::to_string(r);
            return b;
        }
    }
    return std::nullopt;
}

Code plotkin_complete(const Code& c, long d) {
    const long q = c.q(), n = c.n();
    if (q * d != (q - 1) * n) throw DomainError("plotkin_complete requires qd = (q-1)n");
    if (static_cast<long>(c.size()) != q * n - 1) throw DomainError("plotkin_complete requires |C| = qn - 1");
    auto dm = min_distance(Metric::Hamming, c);
    if (dm && *dm < d) throw DomainError("plotkin_complete requires d_min >= d");
    Word u(n);
    for (long j = 0; j < n; ++j) {
        std::vector<long> cnt(q, 0);
        for (const auto& w : c.words()) ++cnt[w[j]];
        int found = -1;
        for (long s = 0; s < q; ++s) {
            if (cnt[s] == n - 1) {
                if (found >= 0) throw DomainError("column has no unique deficient symbol");
                found = static_cast<int>(s);
            } else if (cnt[s] != n) {
                throw DomainError("column is not balanced up to one symbol");
            }
        }
        if (found < 0) throw DomainError("column has no deficient symbol");
        u[j] = found;
    }
    std::vector<Word> ws = c.words();
    ws.push_back(u);
    Code out(static_cast<int>(q), static_cast<int>(n), std::move(ws));
    auto dm2 = min_distance(Metric::Hamming, out);
    if (dm2 && *dm2 < d) throw DomainError("completion violates the distance");
    return out;
}

} // namespace cb

#pragma once

#include "codebounds/code.hpp"
#include "codebounds/rational.hpp"

#include <map>
#include <optional>
#include <string>

namespace cb {

struct BoundResult {
    Integer value;
    std::string method;
    std::map<std::string, std::string> certificate;
};

/// q-ary Plotkin bound; empty when qd <= (q-1)n.
std::optional<BoundResult> plotkin(long q, long n, long d);

/// A_q(n,d) <= q * A_q(n-1,d).
BoundResult shorten_bound(long q, long n, long d, const BoundResult& inner);

/// h(q,n,d,M) = C(M,2)(n-d) - n[(q-r)C(m,2) + rC(m-1,2)], m = ceil(M/q), r = qm - M.
Integer h_value(long q, long n, long d, long M);

/// Bound q^2 m - r - 1 when m = d/(qd-(q-1)(n-1)) is a positive integer,
/// (n-d) does not divide m(n-1) and some r in [1, q-1] qualifies.
std::optional<BoundResult> divisibility_bound(long q, long n, long d);

/// Completes a (n,d)_q code of size qn-1 with qd = (q-1)n to size qn.
Code plotkin_complete(const Code& c, long d);

} // namespace cb

#include "codebounds/tableau.hpp"

#include <functional>

namespace cb {

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<int> Partition::dual() const {
    std::vector<int> d(parts.empty() ? 0 : parts[0], 0);
    for (int p : parts)
        for (int i = 0; i < p; ++i) ++d[i];
    return d;
}

std::vector<Partition> partitions(int n, int max_height) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back({cur});
            return;
        }
        if (static_cast<int>(cur.size()) == max_height) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (max_height >= 0) rec(n, n);
    return out;
}

std::vector<int> Tableau::reading() const {
    std::vector<int> r;
    for (const auto& row : rows) r.insert(r.end(), row.begin(), row.end());
    return r;
}

int Tableau::count(int symbol, int row) const {
    if (row >= static_cast<int>(rows.size())) return 0;
    int c = 0;
    for (int x : rows[row]) c += (x == symbol);
    return c;
}

int Tableau::count(int symbol) const {
    int c = 0;
    for (const auto& row : rows)
        for (int x : row) c += (x == symbol);
    return c;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, int m) {
    std::vector<Tableau> out;
    if (lambda.height() > m) return out;
    Tableau t;
    t.shape = lambda;
    t.rows.resize(lambda.height());
    for (int j = 0; j < lambda.height(); ++j) t.rows[j].assign(lambda.parts[j], 0);
    const int h = lambda.height();
    const auto col_height = lambda.dual();
    std::function<void(int, int)> rec = [&](int j, int i) {
        if (j == h) {
            out.push_back(t);
            return;
        }
        if (i == lambda.parts[j]) {
            rec(j + 1, 0);
            return;
        }
        int lo = 1;
        if (i > 0) lo = std::max(lo, t.rows[j][i - 1]);
        if (j > 0) lo = std::max(lo, t.rows[j - 1][i] + 1);
        // Leave room for strictly increasing entries in the rows above.
        int hi = m - (col_height[i] - 1 - j);
        for (int v = lo; v <= hi; ++v) {
            t.rows[j][i] = v;
            rec(j, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(k, 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == k - 1) {
            cur[idx] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            cur[idx] = v;
            rec(idx + 1, rest - v);
        }
    };
    rec(0, n);
    return out;
}

} // namespace cb

#include "codebounds/ptau.hpp"

#include <functional>
#include <map>
#include <numeric>

namespace cb {

PAlgorithm default_algorithm(int m) { return m <= 3 ? PAlgorithm::Count : PAlgorithm::Diffop; }

namespace {

void check_shapes(const Tableau& tau, const Tableau& sigma, int m) {
    if (tau.shape != sigma.shape) throw DomainError("p_tau_sigma: tableau shapes differ");
    for (const auto* t : {&tau, &sigma})
        for (const auto& row : t->rows)
            for (int x : row)
                if (x < 1 || x > m) throw DomainError("p_tau_sigma: entry outside [1, m]");
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// det of the t x t submatrix with rows v and columns w (1-based entries).
RPoly det_sub(const std::vector<int>& v, const std::vector<int>& w, int m) {
    const std::size_t t = v.size();
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    RPoly out;
    do {
        Monomial mono;
        for (std::size_t j = 0; j < t; ++j) mono.push_back(xvar(v[j], w[perm[j]], m));
        std::sort(mono.begin(), mono.end());
        out.add(mono, Rational(perm_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// All tuples in [m]^t with pairwise distinct entries.
std::vector<std::vector<int>> distinct_tuples(int m, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(m + 1, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == t) {
            out.push_back(cur);
            return;
        }
        for (int s = 1; s <= m; ++s) {
            if (used[s]) continue;
            used[s] = true;
            cur.push_back(s);
            rec();
            cur.pop_back();
            used[s] = false;
        }
    };
    rec();
    return out;
}

RPoly p_count(const Tableau& tau, const Tableau& sigma, int m) {
    const auto& lam = tau.shape.parts;
    const int h = static_cast<int>(lam.size());
    if (h == 0) return RPoly::constant(1);
    // Residual symbol counts per row: R[j][s], U[j][s].
    std::vector<std::vector<int>> R(h, std::vector<int>(m + 1, 0)), U = R;
    for (int j = 0; j < h; ++j)
        for (int s = 1; s <= m; ++s) {
            R[j][s] = tau.count(s, j);
            U[j][s] = sigma.count(s, j);
        }
    Integer col_stab = 1;
    for (int c : tau.shape.dual()) col_stab *= factorial(c);

    RPoly total;
    RPoly acc = RPoly::constant(1);
    Rational weight = 1;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<RPoly>> det_pow;
    auto power = [&](const std::vector<int>& v, const std::vector<int>& w, int e) -> const RPoly& {
        auto& cache = det_pow[{v, w}];
        if (cache.empty()) cache.push_back(RPoly::constant(1));
        while (static_cast<int>(cache.size()) <= e) {
            if (cache.size() == 1) cache.push_back(det_sub(v, w, m));
            else cache.push_back(cache.back() * cache[1]);
        }
        return cache[e];
    };

    // Process column heights from h down to 1.
    std::function<void(int)> by_height;
    std::function<void(int, int, const std::vector<std::pair<std::vector<int>, std::vector<int>>>&, std::size_t, int)>
        choose;
    by_height = [&](int t) {
        if (t == 0) {
            RPoly term = acc;
            term *= weight * Rational(col_stab);
            total += term;
            return;
        }
        int ncols = lam[t - 1] - (t < h ? lam[t] : 0);
        auto vt = distinct_tuples(m, t);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
        for (const auto& v : vt)
            for (const auto& w : vt) pairs.emplace_back(v, w);
        weight *= Rational(factorial(ncols));
        choose(t, ncols, pairs, 0, 0);
        weight /= Rational(factorial(ncols));
    };
    choose = [&](int t, int left, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs,
                 std::size_t idx, int) {
        if (left == 0) {
            // Row t-1 receives no further contributions.
            for (int s = 1; s <= m; ++s)
                if (R[t - 1][s] != 0 || U[t - 1][s] != 0) return;
            by_height(t - 1);
            return;
        }
        if (idx == pairs.size()) return;
        const auto& [v, w] = pairs[idx];
        // Maximum multiplicity allowed by the residual counts.
        int cap = left;
        for (int j = 0; j < t; ++j) {
            cap = std::min(cap, R[j][v[j]]);
            cap = std::min(cap, U[j][w[j]]);
        }
        for (int k = cap; k >= 0; --k) {
            if (k > 0) {
                for (int j = 0; j < t; ++j) {
                    R[j][v[j]] -= k;
                    U[j][w[j]] -= k;
                }
                RPoly saved = acc;
                acc = acc * power(v, w, k);
                Rational wsave = weight;
                weight /= Rational(factorial(k));
                choose(t, left - k, pairs, idx + 1, 0);
                weight = wsave;
                acc = std::move(saved);
                for (int j = 0; j < t; ++j) {
                    R[j][v[j]] += k;
                    U[j][w[j]] += k;
                }
            } else {
                choose(t, left, pairs, idx + 1, 0);
            }
        }
    };
    by_height(h);
    return total;
}

// d_{s->j} = sum_i x_{s,i} d/dx_{j,i}.
RPoly apply_row_op(const RPoly& p, int s, int j, int m) {
    RPoly out;
    for (int i = 1; i <= m; ++i) {
        RPoly d = p.derivative(xvar(j, i, m));
        if (d.is_zero()) continue;
        out += d * RPoly::variable(xvar(s, i, m));
    }
    return out;
}

// d*_{j->s} = sum_i x_{i,s} d/dx_{i,j}.
RPoly apply_col_op(const RPoly& p, int j, int s, int m) {
    RPoly out;
    for (int i = 1; i <= m; ++i) {
        RPoly d = p.derivative(xvar(i, j, m));
        if (d.is_zero()) continue;
        out += d * RPoly::variable(xvar(i, s, m));
    }
    return out;
}

RPoly p_diffop(const Tableau& tau, const Tableau& sigma, int m) {
    const auto& lam = tau.shape.parts;
    const int h = static_cast<int>(lam.size());
    auto lam_at = [&](int k) { return k <= h ? lam[k - 1] : 0; };
    RPoly P = RPoly::constant(1);
    for (int k = 1; k <= m; ++k) {
        int e = lam_at(k) - lam_at(k + 1);
        if (e == 0) continue;
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 1);
        RPoly base = det_sub(idx, idx, m);
        base *= Rational(factorial(k));
        P = P * base.pow(e);
    }
    for (int j = m - 1; j >= 1; --j) {
        for (int s = m; s >= j + 1; --s) {
            int r = j <= h ? tau.count(s, j - 1) : 0;
            int u = j <= h ? sigma.count(s, j - 1) : 0;
            for (int a = 0; a < u; ++a) P = apply_col_op(P, j, s, m);
            for (int a = 0; a < r; ++a) P = apply_row_op(P, s, j, m);
            P *= Rational(1) / Rational(factorial(r) * factorial(u));
        }
    }
    return P;
}

// Distinct row-wise rearrangements of a tableau.
std::vector<std::vector<std::vector<int>>> row_arrangements(const Tableau& t) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur = t.rows;
    for (auto& r : cur) std::sort(r.begin(), r.end());
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == cur.size()) {
            out.push_back(cur);
            return;
        }
        std::vector<int> row = cur[j];
        std::sort(row.begin(), row.end());
        do {
            cur[j] = row;
            rec(j + 1);
        } while (std::next_permutation(row.begin(), row.end()));
    };
    rec(0);
    return out;
}

// Column permutations as maps cell -> cell over cells (row, col), with signs.
struct CellPerm {
    std::vector<std::pair<int, int>> image; // indexed by reading order
    int sign;
};

std::vector<CellPerm> column_group(const Partition& shape) {
    std::vector<std::pair<int, int>> cells;
    for (int j = 0; j < shape.height(); ++j)
        for (int i = 0; i < shape.parts[j]; ++i) cells.emplace_back(j, i);
    auto heights = shape.dual();
    std::vector<std::vector<std::vector<int>>> per_col;
    for (int h : heights) {
        std::vector<int> p(h);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> all;
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        per_col.push_back(all);
    }
    std::vector<CellPerm> out;
    std::vector<std::size_t> choice(heights.size(), 0);
    for (;;) {
        CellPerm cp;
        cp.sign = 1;
        for (std::size_t c = 0; c < heights.size(); ++c) cp.sign *= perm_sign(per_col[c][choice[c]]);
        for (auto [j, i] : cells) cp.image.emplace_back(per_col[i][choice[i]][j], i);
        out.push_back(std::move(cp));
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == per_col[k].size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

RPoly p_brute(const Tableau& tau, const Tableau& sigma, int m) {
    auto ta = row_arrangements(tau);
    auto sa = row_arrangements(sigma);
    auto cg = column_group(tau.shape);
    std::vector<std::pair<int, int>> cells;
    for (int j = 0; j < tau.shape.height(); ++j)
        for (int i = 0; i < tau.shape.parts[j]; ++i) cells.emplace_back(j, i);
    RPoly out;
    for (const auto& t1 : ta)
        for (const auto& s1 : sa)
            for (const auto& c : cg)
                for (const auto& c2 : cg) {
                    Monomial mono;
                    for (std::size_t y = 0; y < cells.size(); ++y) {
                        auto [ja, ia] = c.image[y];
                        auto [jb, ib] = c2.image[y];
                        mono.push_back(xvar(t1[ja][ia], s1[jb][ib], m));
                    }
                    std::sort(mono.begin(), mono.end());
                    out.add(mono, Rational(c.sign * c2.sign));
                }
    return out;
}

} // namespace

RPoly p_tau_sigma(const Tableau& tau, const Tableau& sigma, int m, PAlgorithm alg) {
    check_shapes(tau, sigma, m);
    switch (alg) {
    case PAlgorithm::Count: return p_count(tau, sigma, m);
    case PAlgorithm::Diffop: return p_diffop(tau, sigma, m);
    case PAlgorithm::Brute: return p_brute(tau, sigma, m);
    }
    return {};
}

} // namespace cb

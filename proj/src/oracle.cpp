#include "codebounds/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace cb {

namespace {

using Bits = std::vector<std::uint64_t>;

inline bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }
inline void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void reset(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool none(const Bits& b) {
    for (auto x : b)
        if (x) return false;
    return true;
}

// Bitset branch and bound with greedy colouring bounds.
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bits> adj, int nv, const SearchBudget& budget)
        : adj_(std::move(adj)), nv_(nv), words_((nv + 63) / 64), budget_(budget),
          start_(std::chrono::steady_clock::now()) {}

    CliqueResult run(const std::vector<int>& forced) {
        Bits p(words_, 0);
        for (int v = 0; v < nv_; ++v) set(p, v);
        for (int f : forced) {
            cur_.push_back(f);
            for (int k = 0; k < words_; ++k) p[k] &= adj_[f][k];
        }
        best_ = cur_;
        if (!none(p)) expand(p);
        CliqueResult r;
        r.vertices = best_;
        std::sort(r.vertices.begin(), r.vertices.end());
        r.exact = !aborted_;
        r.nodes = nodes_;
        return r;
    }

private:
    bool out_of_budget() {
        if (nodes_ > budget_.node_limit) return true;
        if ((nodes_ & 4095) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (el > budget_.time_limit_s) return true;
        }
        return false;
    }

    void expand(Bits p) {
        if (aborted_) return;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        std::vector<int> order, colour;
        Bits uncoloured = p;
        int c = 0;
        while (!none(uncoloured)) {
            ++c;
            Bits q = uncoloured;
            while (!none(q)) {
                int v = -1;
                for (int k = 0; k < words_; ++k)
                    if (q[k]) {
                        v = k * 64 + __builtin_ctzll(q[k]);
                        break;
                    }
                reset(uncoloured, v);
                reset(q, v);
                for (int k = 0; k < words_; ++k) q[k] &= ~adj_[v][k];
                order.push_back(v);
                colour.push_back(c);
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur_.size()) + colour[i] <= static_cast<int>(best_.size())) return;
            int v = order[i];
            cur_.push_back(v);
            Bits np(words_);
            for (int k = 0; k < words_; ++k) np[k] = p[k] & adj_[v][k];
            if (none(np)) {
                if (cur_.size() > best_.size()) best_ = cur_;
            } else {
                expand(np);
            }
            cur_.pop_back();
            reset(p, v);
            if (aborted_) return;
        }
    }

    std::vector<Bits> adj_;
    int nv_;
    int words_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<int> cur_, best_;
    long nodes_ = 0;
    bool aborted_ = false;
};

std::vector<Word> universe(int q, int n, std::optional<long> w) {
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= q;
        if (total > kOracleMaxUniverse * 64L) throw DomainError("oracle universe too large");
    }
    std::vector<Word> out;
    Word cur(n, 0);
    for (long t = 0; t < total; ++t) {
        if (!w || hamming_weight(cur) == *w) out.push_back(cur);
        for (int i = n - 1; i >= 0; --i) {
            if (++cur[i] < q) break;
            cur[i] = 0;
        }
    }
    if (static_cast<long>(out.size()) > kOracleMaxUniverse) throw DomainError("oracle universe too large");
    return out;
}

} // namespace

CliqueResult max_clique(const std::vector<std::vector<std::uint8_t>>& adj, const SearchBudget& budget) {
    const int nv = static_cast<int>(adj.size());
    if (nv == 0) return {{}, true, 0};
    std::vector<Bits> a(nv, Bits((nv + 63) / 64, 0));
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            if (i != j && adj[i][j]) set(a[i], j);
    return CliqueSearch(std::move(a), nv, budget).run({});
}

CliqueResult max_independent_set(int nv, const std::vector<std::pair<int, int>>& edges, const SearchBudget& budget) {
    std::vector<std::vector<std::uint8_t>> comp(nv, std::vector<std::uint8_t>(nv, 1));
    for (int i = 0; i < nv; ++i) comp[i][i] = 0;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= nv || b >= nv) throw DomainError("edge endpoint out of range");
        comp[a][b] = comp[b][a] = 0;
    }
    return max_clique(comp, budget);
}

OracleResult max_code(int q, int n, long d, Metric m, std::optional<long> w, const SearchBudget& budget) {
    if (q < 2 || n < 1) throw DomainError("oracle needs q >= 2 and n >= 1");
    if (w && m != Metric::Hamming) throw DomainError("weight restriction needs the Hamming metric");
    auto words = universe(q, n, w);
    OracleResult res;
    if (words.empty()) {
        res.witness = Code(q, n, {});
        res.exact = true;
        return res;
    }
    // Keep only words compatible with the forced first word.
    std::vector<Word> cand{words[0]};
    for (std::size_t i = 1; i < words.size(); ++i)
        if (distance(m, q, words[0], words[i]) >= d) cand.push_back(words[i]);
    const int nv = static_cast<int>(cand.size());
    std::vector<Bits> adj(nv, Bits((nv + 63) / 64, 0));
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (distance(m, q, cand[i], cand[j]) >= d) {
                set(adj[i], j);
                set(adj[j], i);
            }
    auto cr = CliqueSearch(std::move(adj), nv, budget).run({0});
    std::vector<Word> wit;
    for (int v : cr.vertices) wit.push_back(cand[v]);
    res.size = static_cast<long>(wit.size());
    res.witness = Code(q, n, std::move(wit));
    res.exact = cr.exact;
    res.nodes = cr.nodes;
    return res;
}

OracleResult alpha_circular(int q, int d, int n, const SearchBudget& budget) {
    if (d < 1 || q < 2 * d) throw DomainError("circular graph needs q >= 2d");
    return max_code(q, n, d, Metric::LeeInf, std::nullopt, budget);
}

ExtensionResult max_independent_extension(const Code& c, Metric m, long d, long max_residual,
                                          const SearchBudget& budget) {
    auto words = universe(c.q(), c.n(), std::nullopt);
    std::vector<Word> residual;
    for (const auto& x : words) {
        bool ok = true;
        for (const auto& y : c.words())
            if (distance(m, c.q(), x, y) < d) {
                ok = false;
                break;
            }
        if (ok) residual.push_back(x);
    }
    ExtensionResult res;
    res.residual_vertices = static_cast<long>(residual.size());
    if (res.residual_vertices > max_residual) throw DomainError("residual graph too large for exact extension");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < residual.size(); ++i)
        for (std::size_t j = i + 1; j < residual.size(); ++j)
            if (distance(m, c.q(), residual[i], residual[j]) < d) edges.emplace_back(i, j);
    res.residual_edges = static_cast<long>(edges.size());
    auto mis = max_independent_set(static_cast<int>(residual.size()), edges, budget);
    std::vector<Word> added, all = c.words();
    for (int v : mis.vertices) {
        added.push_back(residual[v]);
        all.push_back(residual[v]);
    }
    res.added = Code(c.q(), c.n(), std::move(added));
    res.code = Code(c.q(), c.n(), std::move(all));
    res.exact = mis.exact;
    return res;
}

} // namespace cb

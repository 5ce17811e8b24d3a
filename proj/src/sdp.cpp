#include "codebounds/sdp.hpp"

#include "codebounds/delsarte.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace cb {

Family parse_family(const std::string& s) {
    if (s == "hamming4") return Family::Hamming4;
    if (s == "cw-a3") return Family::CwA3;
    if (s == "cw-a4") return Family::CwA4;
    if (s == "cw-b4") return Family::CwB4;
    if (s == "lee3") return Family::Lee3;
    if (s == "leeinf3") return Family::LeeInf3;
    throw DomainError("unknown family: " + s);
}

std::string family_name(Family f) {
    switch (f) {
    case Family::Hamming4: return "hamming4";
    case Family::CwA3: return "cw-a3";
    case Family::CwA4: return "cw-a4";
    case Family::CwB4: return "cw-b4";
    case Family::Lee3: return "lee3";
    case Family::LeeInf3: return "leeinf3";
    }
    return "?";
}

namespace {

struct KeyRegistry {
    std::unordered_map<OrbitKey, int, OrbitKeyHash> ids;
    std::vector<OrbitKey> keys;
    int intern(const OrbitKey& k) {
        auto [it, ins] = ids.emplace(k, static_cast<int>(keys.size()));
        if (ins) keys.push_back(k);
        return it->second;
    }
};

struct CodeRules {
    int q;
    int n;
    int d;
    Metric metric;
    SymbolGroup group;
};

// Maps a monomial to the orbit of the code it describes: per coordinate the
// fixed symbols followed by the class representative.
MonomialMapper make_mapper(const ReductionInput& in, const ReductionLayout& layout, const CodeRules& rules,
                           KeyRegistry& reg) {
    return [&in, &layout, rules, &reg](const Monomial& mono) -> int {
        auto parts = layout.split(mono);
        std::vector<std::vector<int>> cols;
        for (std::size_t s = 0; s < parts.size(); ++s)
            for (int c : parts[s]) {
                std::vector<int> col = in.segments[s].fixed;
                const auto& rep = layout.classes[s].reps[c];
                col.insert(col.end(), rep.begin(), rep.end());
                cols.push_back(std::move(col));
            }
        if (static_cast<int>(cols.size()) != rules.n) throw DimensionError("monomial degree differs from n");
        const std::size_t k = cols.empty() ? 0 : cols[0].size();
        std::vector<Word> words(k, Word(rules.n));
        for (int i = 0; i < rules.n; ++i)
            for (std::size_t r = 0; r < k; ++r) words[r][i] = cols[i][r];
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b)
                if (distance(rules.metric, rules.q, words[a], words[b]) < rules.d) return -1;
        return reg.intern(canonical_orbit(words, rules.q, rules.group));
    };
}

template <class S>
SdpBlock to_block(const ReducedBlock<S>& b) {
    SdpBlock out;
    out.label = b.label;
    out.dim = b.dim;
    for (int i = 0; i < b.dim; ++i)
        for (int j = i; j < b.dim; ++j) {
            const auto& lf = b.at(i, j);
            if (lf.is_zero()) continue;
            SdpEntry e;
            e.i = i;
            e.j = j;
            e.constant = scalar_to_rational(lf.constant);
            for (const auto& [k, c] : lf.terms) e.terms.emplace_back(k, scalar_to_rational(c));
            out.entries.push_back(std::move(e));
        }
    return out;
}

class Builder {
public:
    explicit Builder(CodeRules rules) : rules_(rules) {}

    template <class S>
    void add(ReductionInput in) {
        ReductionLayout layout = make_layout(in);
        auto mapper = make_mapper(in, layout, rules_, reg_);
        for (const auto& b : reduce<S>(in, layout, mapper, true))
            if (b.dim > 0) blocks_.push_back(to_block(b));
    }

    // Renumbers key ids to variables sorted by key and fills the program.
    void finish(SdpProgram& p, const Rational& singleton_weight) {
        std::vector<char> used(reg_.keys.size(), 0);
        for (const auto& b : blocks_)
            for (const auto& e : b.entries)
                for (const auto& [k, c] : e.terms) used[k] = 1;
        std::vector<int> order;
        for (std::size_t k = 0; k < used.size(); ++k)
            if (used[k]) order.push_back(static_cast<int>(k));
        std::sort(order.begin(), order.end(), [&](int a, int b) { return reg_.keys[a] < reg_.keys[b]; });
        std::vector<int> newid(reg_.keys.size(), -1);
        for (std::size_t v = 0; v < order.size(); ++v) newid[order[v]] = static_cast<int>(v);
        for (int k : order) {
            SdpVariable var;
            var.key = reg_.keys[k];
            var.orbit_size = orbit_size(var.key, p.q, p.group);
            p.vars.push_back(var);
            p.objective.push_back(var.key.size == 1 ? singleton_weight : Rational(0));
        }
        for (auto& b : blocks_) {
            for (auto& e : b.entries) {
                for (auto& t : e.terms) t.first = newid[t.first];
                std::sort(e.terms.begin(), e.terms.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
            }
            p.blocks.push_back(std::move(b));
        }
    }

private:
    CodeRules rules_;
    KeyRegistry reg_;
    std::vector<SdpBlock> blocks_;
};

Segment make_segment(int length, RepKind kind, int q, BaseAction action, std::vector<int> fixed = {}) {
    Segment s;
    s.length = length;
    s.rep = rep_set(kind, q);
    s.action = action;
    s.fixed = std::move(fixed);
    return s;
}

bool dist_ok(int dist, int d) { return dist == 0 || dist >= d; }

Integer ipow(long base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

} // namespace

SdpProgram gen_hamming_quadruple(int q, int n, int d) {
    if (q < 2 || n < 1 || d < 1 || d > n + 1) throw DomainError("hamming4 needs q >= 2 and 1 <= d <= n + 1");
    SdpProgram p;
    p.family = "hamming4";
    p.q = q;
    p.n = n;
    p.d = d;
    p.metric = Metric::Hamming;
    p.group = SymbolGroup::Symmetric;
    p.max_code_size = 4;
    Builder b({q, n, d, Metric::Hamming, SymbolGroup::Symmetric});
    ReductionInput in;
    in.segments.push_back(make_segment(n, RepKind::SqPairs, q, {q, 2, SymbolGroup::Symmetric}));
    const int k = static_cast<int>(in.segments[0].rep.m.size());
    in.row_filter = [n, d, k](const std::vector<std::vector<int>>& c) {
        int equal = c[0][0] + c[1][0];
        if (!dist_ok(n - equal, d)) return false;
        int odd = c[1].size() > 1 ? c[1][1] : 0;
        if (k >= 3) odd += c[2][0];
        return odd % 2 == 0;
    };
    in.border = true;
    b.add<CheckedInt>(in);
    b.finish(p, Rational(ipow(q, n)));
    return p;
}

SdpProgram gen_cw(int n, int d, int w, Family level) {
    if (level != Family::CwA3 && level != Family::CwA4 && level != Family::CwB4)
        throw DomainError("gen_cw: level must be a3, a4 or b4");
    if (n < 1 || w < 0 || w > n || d < 1) throw DomainError("gen_cw needs 0 <= w <= n and d >= 1");
    SdpProgram p;
    p.family = family_name(level);
    p.q = 2;
    p.n = n;
    p.metric = Metric::Hamming;
    p.group = SymbolGroup::Trivial;
    if (2 * w > n) {
        w = n - w;
        p.complemented = true;
        p.notes.push_back("weight normalized by complementation");
    }
    if (d % 2 == 1) {
        ++d;
        p.notes.push_back("odd d raised to the next even value");
    }
    p.d = d;
    p.w = w;
    p.max_code_size = level == Family::CwA3 ? 3 : 4;
    Builder b({2, n, d, Metric::Hamming, SymbolGroup::Trivial});

    // D empty, pairs of words (xi = 1).
    {
        ReductionInput in;
        in.segments.push_back(make_segment(n, RepKind::TrivialF2, 2, {2, 1, SymbolGroup::Trivial}));
        in.row_filter = [w](const std::vector<std::vector<int>>& c) { return c[0][1] == w; };
        in.border = true;
        in.label_prefix = "D=empty xi=1 ";
        b.add<CheckedInt>(in);
    }
    // D empty, quadruples of words (xi = 2).
    if (level == Family::CwA4) {
        ReductionInput in;
        in.segments.push_back(make_segment(n, RepKind::IdentityQ, 4, {2, 2, SymbolGroup::Trivial}));
        in.row_filter = [w, d](const std::vector<std::vector<int>>& c) {
            const auto& x = c[0];
            return x[1] + x[3] == w && x[2] + x[3] == w && dist_ok(x[1] + x[2], d);
        };
        in.border = true;
        in.label_prefix = "D=empty xi=2 ";
        b.add<CheckedInt>(in);
    }
    // |D| = 1 (t = 0) and |D| = 2 (d/2 <= t <= w).
    std::vector<int> ts = {0};
    if (level != Family::CwA3)
        for (int t = std::max(1, d / 2); t <= w && t <= n - w; ++t) ts.push_back(t);
    const int v1[4] = {1, 1, 0, 0};
    const int v2[4] = {0, 1, 1, 0};
    for (int t : ts) {
        ReductionInput in;
        const int len[4] = {t, w - t, t, n - w - t};
        for (int s = 0; s < 4; ++s)
            in.segments.push_back(make_segment(len[s], RepKind::TrivialF2, 2, {2, 1, SymbolGroup::Trivial},
                                               {v1[s], v2[s]}));
        in.row_filter = [w, d, n, v1, v2](const std::vector<std::vector<int>>& c) {
            int weight = 0, d1 = 0, d2 = 0;
            for (int s = 0; s < 4; ++s) {
                weight += c[s][1];
                d1 += v1[s] ? c[s][0] : c[s][1];
                d2 += v2[s] ? c[s][0] : c[s][1];
            }
            (void)n;
            return weight == w && dist_ok(d1, d) && dist_ok(d2, d);
        };
        in.label_prefix = t == 0 ? "|D|=1 " : "|D|=2 t=" + std::to_string(t) + " ";
        b.add<CheckedInt>(in);
    }
    b.finish(p, Rational(binom(n, w)));
    return p;
}

namespace {

SdpProgram gen_lee_common(int q, int n, int d, Metric metric) {
    if (q < 2 || n < 1 || d < 1) throw DomainError("Lee programs need q >= 2, n >= 1, d >= 1");
    SdpProgram p;
    p.family = metric == Metric::Lee ? "lee3" : "leeinf3";
    p.q = q;
    p.n = n;
    p.d = d;
    p.metric = metric;
    p.group = SymbolGroup::Dihedral;
    p.exact = false;
    p.max_code_size = 3;
    Builder b({q, n, d, metric, SymbolGroup::Dihedral});
    {
        ReductionInput in;
        in.segments.push_back(make_segment(n, RepKind::Dihedral, q, {q, 1, SymbolGroup::Dihedral}));
        in.border = true;
        in.label_prefix = "D=empty ";
        b.add<double>(in);
    }
    {
        ReductionInput in;
        in.segments.push_back(make_segment(n, RepKind::S2Reflection, q, {q, 1, SymbolGroup::Reflection}, {0}));
        in.label_prefix = "|D|=1 ";
        b.add<CheckedInt>(in);
    }
    b.finish(p, Rational(ipow(q, n)));
    return p;
}

} // namespace

SdpProgram gen_lee_triple(int q, int n, int d) { return gen_lee_common(q, n, d, Metric::Lee); }
SdpProgram gen_leeinf_triple(int q, int n, int d) { return gen_lee_common(q, n, d, Metric::LeeInf); }

SdpProgram generate(Family f, int q, int n, int d, std::optional<int> w) {
    switch (f) {
    case Family::Hamming4: return gen_hamming_quadruple(q, n, d);
    case Family::CwA3:
    case Family::CwA4:
    case Family::CwB4:
        if (!w) throw DomainError("constant-weight families need --w");
        return gen_cw(n, d, *w, f);
    case Family::Lee3: return gen_lee_triple(q, n, d);
    case Family::LeeInf3: return gen_leeinf_triple(q, n, d);
    }
    throw DomainError("unknown family");
}

LinearProgram gen_delsarte_via_reduction(int q, int n, int d) {
    if (q < 2 || n < 1 || d < 1 || d > n) throw DomainError("delsarte via reduction needs 1 <= d <= n");
    ReductionInput in;
    in.segments.push_back(make_segment(n, RepKind::SqSingle, q, {q, 1, SymbolGroup::Symmetric}));
    ReductionLayout layout = make_layout(in);
    // Class ids: representatives (0,0) and (0,1). Map a monomial to its
    // number of (0,1) factors, i.e. the distance of the pair; zero below d.
    int cls01 = -1;
    for (int c = 0; c < layout.classes[0].size(); ++c)
        if (layout.classes[0].reps[c] == std::vector<int>{0, 1}) cls01 = c;
    MonomialMapper mapper = [cls01, d](const Monomial& m) -> int {
        int i = static_cast<int>(std::count(m.begin(), m.end(), static_cast<std::uint16_t>(cls01)));
        return (i == 0 || i >= d) ? i : -1;
    };
    auto blocks = reduce<CheckedInt>(in, layout, mapper, false);
    if (static_cast<int>(blocks.size()) != n + 1) throw std::logic_error("unexpected block count");

    LinearProgram lp;
    lp.objective.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) lp.names.push_back("a" + std::to_string(i));
    for (int t = 0; t <= n; ++t) {
        const auto& lf = blocks[t].at(0, 0);
        auto it0 = lf.terms.find(0);
        if (it0 == lf.terms.end()) throw std::logic_error("missing a_0 coefficient");
        Rational scale = scalar_to_rational(it0->second);
        std::vector<Rational> row(n + 1, 0);
        for (const auto& [i, c] : lf.terms) {
            Rational conv = Rational(binom(n, i) * ipow(q - 1, i));
            row[i] = scalar_to_rational(c) / conv / scale;
        }
        if (t == 0)
            lp.objective = row;
        else
            lp.add_row(row, Sense::GE, 0);
    }
    lp.fix(0, 1);
    for (int i = 1; i < d; ++i) lp.fix(i, 0);
    return lp;
}

std::vector<Eigen::MatrixXd> evaluate_blocks(const SdpProgram& p, const std::vector<double>& z) {
    std::vector<Eigen::MatrixXd> out;
    for (const auto& b : p.blocks) {
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(b.dim, b.dim);
        for (const auto& e : b.entries) {
            double v = e.constant.get_d();
            for (const auto& [k, c] : e.terms) v += c.get_d() * z.at(k);
            M(e.i, e.j) = v;
            M(e.j, e.i) = v;
        }
        out.push_back(std::move(M));
    }
    return out;
}

namespace {

double min_eig(const Eigen::MatrixXd& M) {
    if (M.rows() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace

EvalReport evaluate_at_code(const SdpProgram& p, const Code& c_in) {
    if (c_in.q() != p.q || c_in.n() != p.n) throw DimensionError("code does not match program parameters");
    std::vector<Word> words = c_in.words();
    if (p.complemented)
        for (auto& w : words)
            for (auto& x : w) x = 1 - x;
    EvalReport rep;
    if (p.w)
        for (const auto& w : words)
            if (hamming_weight(w) != *p.w) rep.violates_constraints = true;
    std::unordered_map<OrbitKey, int, OrbitKeyHash> index;
    for (std::size_t v = 0; v < p.vars.size(); ++v) index.emplace(p.vars[v].key, static_cast<int>(v));
    std::vector<Integer> counts(p.vars.size(), 0);
    std::vector<Word> sub;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!sub.empty()) {
            for (std::size_t a = 0; a + 1 < sub.size(); ++a)
                if (distance(p.metric, p.q, sub[a], sub.back()) < p.d) rep.violates_constraints = true;
            auto it = index.find(canonical_orbit(sub, p.q, p.group));
            if (it != index.end()) counts[it->second] += 1;
        }
        if (static_cast<int>(sub.size()) == p.max_code_size) return;
        for (std::size_t i = start; i < words.size(); ++i) {
            sub.push_back(words[i]);
            rec(i + 1);
            sub.pop_back();
        }
    };
    rec(0);
    rep.z.resize(p.vars.size());
    for (std::size_t v = 0; v < p.vars.size(); ++v)
        rep.z[v] = Rational(Rational(counts[v]) / Rational(p.vars[v].orbit_size)).get_d();
    for (std::size_t v = 0; v < p.vars.size(); ++v) rep.objective += p.objective[v].get_d() * rep.z[v];
    double worst = 0;
    bool psd = true;
    auto mats = evaluate_blocks(p, rep.z);
    for (const auto& M : mats) {
        double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
        double e = min_eig(M);
        worst = std::min(worst, e / scale);
        if (e < -1e-9 * scale) psd = false;
    }
    rep.min_eigenvalue = worst;
    rep.feasible = psd && !rep.violates_constraints;
    return rep;
}

ForbiddenReport analyze_dual(const SdpProgram& p, const DualSolution& x, double lower_bound, double code_size) {
    if (x.blocks.size() != p.blocks.size() || x.x_var.size() != p.vars.size())
        throw DimensionError("dual solution does not match the program");
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (x.blocks[b].rows() != p.blocks[b].dim || x.blocks[b].cols() != p.blocks[b].dim)
            throw DimensionError("dual block " + std::to_string(b + 1) + " has the wrong size");
        double scale = std::max(1.0, x.blocks[b].cwiseAbs().maxCoeff());
        if (min_eig(x.blocks[b]) < -1e-12 * scale)
            throw DomainError("dual block " + std::to_string(b + 1) + " (" + p.blocks[b].label + ") is not PSD");
    }
    for (std::size_t v = 0; v < x.x_var.size(); ++v)
        if (x.x_var[v] < 0) throw DomainError("dual nonnegativity entry " + std::to_string(v + 1) + " is negative");
    ForbiddenReport r;
    const std::size_t V = p.vars.size();
    // <A, X> with A symmetric given by its upper triangle.
    std::vector<double> coef_dot(V, 0.0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (const auto& e : p.blocks[b].entries) {
            const double mult = e.i == e.j ? 1.0 : 2.0;
            const double xv = x.blocks[b](e.i, e.j);
            r.dual_objective += mult * e.constant.get_d() * xv;
            for (const auto& [k, c] : e.terms) coef_dot[k] += mult * c.get_d() * xv;
        }
    r.epsilon.resize(V);
    double err = 0;
    for (std::size_t v = 0; v < V; ++v) {
        // F_v is minus the coefficient matrix of z_v, including its 1x1 block.
        const double f_dot = -(coef_dot[v] + x.x_var[v]);
        r.epsilon[v] = f_dot - p.objective[v].get_d();
        err += std::abs(r.epsilon[v]);
    }
    r.c.resize(V);
    for (std::size_t v = 0; v < V; ++v) {
        r.c[v] = r.dual_objective - code_size + err;
        if (x.x_var[v] > 0 && r.c[v] / x.x_var[v] < lower_bound) r.forbidden.push_back(static_cast<int>(v));
    }
    return r;
}

} // namespace cb

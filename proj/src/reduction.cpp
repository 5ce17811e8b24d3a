#include "codebounds/reduction.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <type_traits>
#include <unordered_map>

namespace cb {

template <class S>
bool LinForm<S>::is_zero() const {
    return constant == 0 && terms.empty();
}

template struct LinForm<CheckedInt>;
template struct LinForm<double>;

std::vector<std::vector<int>> ReductionLayout::split(const Monomial& m) const {
    std::vector<std::vector<int>> out(classes.size());
    for (auto v : m) {
        std::size_t s = 0;
        while (s + 1 < offsets.size() && static_cast<int>(v) >= offsets[s + 1]) ++s;
        out[s].push_back(static_cast<int>(v) - offsets[s]);
    }
    return out;
}

ReductionLayout make_layout(const ReductionInput& in) {
    ReductionLayout l;
    for (const auto& seg : in.segments) {
        if (seg.rep.zsize != seg.action.zsize())
            throw DimensionError("representative set and base action disagree on |Z|");
        l.offsets.push_back(l.total_classes);
        l.classes.push_back(LambdaClasses::build(seg.action));
        l.total_classes += l.classes.back().size();
    }
    if (l.total_classes > 65535) throw DomainError("too many class variables");
    return l;
}

namespace {

struct Factor {
    int seg;
    int idx;
    int m;
};

std::vector<Factor> factors_of(const ReductionInput& in) {
    std::vector<Factor> f;
    for (std::size_t s = 0; s < in.segments.size(); ++s)
        for (std::size_t i = 0; i < in.segments[s].rep.m.size(); ++i)
            f.push_back({static_cast<int>(s), static_cast<int>(i), in.segments[s].rep.m[i]});
    return f;
}

std::string vec_str(const std::vector<int>& v) {
    std::ostringstream o;
    o << '[';
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    o << ']';
    return o.str();
}

} // namespace

std::vector<BlockShape> enumerate_blocks(const ReductionInput& in) {
    const auto factors = factors_of(in);
    std::vector<BlockShape> out;
    std::vector<int> sizes(factors.size(), 0);
    std::vector<Partition> shapes(factors.size());

    std::function<void(std::size_t)> choose_lambda = [&](std::size_t f) {
        if (f < factors.size()) {
            for (const auto& lam : partitions(sizes[f], factors[f].m)) {
                shapes[f] = lam;
                choose_lambda(f + 1);
            }
            return;
        }
        BlockShape b;
        b.sizes = sizes;
        b.shapes = shapes;
        std::vector<std::vector<Tableau>> tabs;
        for (std::size_t g = 0; g < factors.size(); ++g) tabs.push_back(semistandard_tableaux(shapes[g], factors[g].m));
        std::vector<Tableau> cur(factors.size());
        std::vector<std::vector<int>> counts(factors.size());
        std::function<void(std::size_t)> rows = [&](std::size_t g) {
            if (g == factors.size()) {
                if (in.row_filter) {
                    for (std::size_t h = 0; h < factors.size(); ++h) {
                        counts[h].assign(factors[h].m, 0);
                        for (int s = 1; s <= factors[h].m; ++s) counts[h][s - 1] = cur[h].count(s);
                    }
                    if (!in.row_filter(counts)) return;
                }
                b.rows.push_back(cur);
                return;
            }
            for (const auto& t : tabs[g]) {
                cur[g] = t;
                rows(g + 1);
            }
        };
        rows(0);
        if (b.rows.empty()) return;
        if (in.border) {
            bool all_first = true;
            for (std::size_t g = 0; g < factors.size(); ++g) {
                const int len = in.segments[factors[g].seg].length;
                if (factors[g].idx == 0) {
                    if (sizes[g] != len || shapes[g].height() > 1) all_first = false;
                } else if (sizes[g] != 0) {
                    all_first = false;
                }
            }
            b.bordered = all_first;
        }
        std::ostringstream lab;
        lab << in.label_prefix << "n=";
        std::vector<int> nv(sizes.begin(), sizes.end());
        lab << vec_str(nv) << " lambda=[";
        for (std::size_t g = 0; g < shapes.size(); ++g) lab << (g ? "," : "") << vec_str(shapes[g].parts);
        lab << ']';
        b.label = lab.str();
        out.push_back(std::move(b));
    };

    std::function<void(std::size_t, std::size_t)> choose_comp = [&](std::size_t s, std::size_t f0) {
        if (s == in.segments.size()) {
            choose_lambda(0);
            return;
        }
        const int k = static_cast<int>(in.segments[s].rep.m.size());
        for (const auto& c : compositions(in.segments[s].length, k)) {
            for (int i = 0; i < k; ++i) sizes[f0 + i] = c[i];
            choose_comp(s + 1, f0 + k);
        }
    };
    choose_comp(0, 0);
    return out;
}

namespace {

template <class S>
S to_scalar(const Rational& r) {
    if constexpr (std::is_same_v<S, CheckedInt>)
        return checked_from_rational(r);
    else if constexpr (std::is_same_v<S, double>)
        return r.get_d();
    else
        return r;
}

template <class S>
Poly<S> convert(const RPoly& p) {
    Poly<S> out;
    for (const auto& [m, c] : p.terms()) out.add(m, to_scalar<S>(c));
    return out;
}

template <class S>
class Engine {
public:
    Engine(const ReductionInput& in, const ReductionLayout& layout) : in_(in), layout_(layout) {
        factors_ = factors_of(in);
        for (const auto& f : factors_) {
            const auto& seg = in.segments[f.seg];
            const auto& cls = layout.classes[f.seg];
            const int off = layout.offsets[f.seg];
            std::vector<std::vector<Poly<S>>> F;
            if constexpr (std::is_same_v<S, double>) {
                F = f_table_double(seg.rep, cls, off)[f.idx];
            } else {
                if (!seg.rep.exact) throw DomainError("exact reduction requested for an inexact representative set");
                auto R = f_table(seg.rep, cls, off)[f.idx];
                for (auto& row : R) {
                    F.emplace_back();
                    for (auto& e : row) F.back().push_back(convert<S>(e));
                }
            }
            F_.push_back(std::move(F));
        }
        psub_.resize(factors_.size());
        pow_.resize(factors_.size());
    }

    const Poly<S>& psub(std::size_t f, const Tableau& tau, const Tableau& sigma) {
        auto key = std::make_pair(tau, sigma);
        auto it = psub_[f].find(key);
        if (it != psub_[f].end()) return it->second;
        const int m = factors_[f].m;
        const RPoly& p = pxpoly(m, tau, sigma);
        Poly<S> out;
        for (const auto& [mono, c] : p.terms()) {
            Poly<S> t = Poly<S>::constant(to_scalar<S>(c));
            std::size_t i = 0;
            while (i < mono.size()) {
                std::size_t j = i;
                while (j < mono.size() && mono[j] == mono[i]) ++j;
                t = t * power(f, mono[i] / m, mono[i] % m, static_cast<int>(j - i));
                i = j;
            }
            out += t;
        }
        return psub_[f].emplace(key, std::move(out)).first->second;
    }

    Poly<S> entry_poly(const std::vector<Tableau>& tau, const std::vector<Tableau>& sigma) {
        Poly<S> acc = Poly<S>::constant(S(1));
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            if (tau[f].shape.size() == 0) continue;
            acc = acc * psub(f, tau[f], sigma[f]);
            if (acc.is_zero()) break;
        }
        return acc;
    }

    Poly<S> border_poly(const Tableau& tau) {
        // Factor 0 of the (single) segment; tau is a one-row tableau.
        const auto& seg = in_.segments[factors_[0].seg];
        const auto& cls = layout_.classes[factors_[0].seg];
        const int off = layout_.offsets[factors_[0].seg];
        Integer coef = factorial(tau.shape.size());
        Poly<S> acc = Poly<S>::constant(S(1));
        for (int s = 1; s <= factors_[0].m; ++s) {
            int c = tau.count(s);
            if (c == 0) continue;
            coef /= factorial(c);
            Poly<S> f;
            if constexpr (std::is_same_v<S, double>)
                f = diagonal_form_double(seg.rep.Bd[0][s - 1], cls, off);
            else
                f = convert<S>(diagonal_form(seg.rep.B[0][s - 1], cls, off));
            acc = acc * f.pow(c);
        }
        acc *= to_scalar<S>(Rational(coef));
        return acc;
    }

private:
    const RPoly& pxpoly(int m, const Tableau& tau, const Tableau& sigma) {
        auto key = std::make_tuple(m, tau, sigma);
        auto it = pcache_.find(key);
        if (it != pcache_.end()) return it->second;
        return pcache_.emplace(key, p_tau_sigma(tau, sigma, m, default_algorithm(m))).first->second;
    }

    const Poly<S>& power(std::size_t f, int a, int b, int e) {
        auto key = std::make_tuple(a, b, e);
        auto it = pow_[f].find(key);
        if (it != pow_[f].end()) return it->second;
        Poly<S> v = e == 1 ? F_[f][a][b] : power(f, a, b, e - 1) * F_[f][a][b];
        return pow_[f].emplace(key, std::move(v)).first->second;
    }

    const ReductionInput& in_;
    const ReductionLayout& layout_;
    std::vector<Factor> factors_;
    std::vector<std::vector<std::vector<Poly<S>>>> F_;
    std::vector<std::map<std::pair<Tableau, Tableau>, Poly<S>>> psub_;
    std::vector<std::map<std::tuple<int, int, int>, Poly<S>>> pow_;
    std::map<std::tuple<int, Tableau, Tableau>, RPoly> pcache_;
};

template <class S>
void clean(LinForm<S>& lf) {
    if constexpr (std::is_same_v<S, double>) {
        double scale = std::abs(lf.constant);
        for (auto& [k, c] : lf.terms) scale = std::max(scale, std::abs(c));
        const double eps = 1e-11 * std::max(1.0, scale);
        for (auto it = lf.terms.begin(); it != lf.terms.end();)
            it = std::abs(it->second) <= eps ? lf.terms.erase(it) : std::next(it);
        if (std::abs(lf.constant) <= eps) lf.constant = 0;
    } else {
        for (auto it = lf.terms.begin(); it != lf.terms.end();)
            it = it->second == 0 ? lf.terms.erase(it) : std::next(it);
    }
}

template <class S>
LinForm<S> map_poly(const Poly<S>& p, const MonomialMapper& mapper,
                    std::unordered_map<Monomial, int, MonomialHash>& cache) {
    LinForm<S> lf;
    for (const auto& [mono, c] : p.terms()) {
        int id;
        auto it = cache.find(mono);
        if (it != cache.end()) {
            id = it->second;
        } else {
            id = mapper(mono);
            cache.emplace(mono, id);
        }
        if (id < 0) continue;
        auto [pos, inserted] = lf.terms.emplace(id, c);
        if (!inserted) pos->second += c;
    }
    clean(lf);
    return lf;
}

template <class S>
ReducedBlock<S> prune_block(ReducedBlock<S> b) {
    std::vector<int> keep;
    for (int i = 0; i < b.dim; ++i) {
        bool zero = true;
        for (int j = 0; j < b.dim && zero; ++j) zero = b.at(i, j).is_zero();
        if (!zero) keep.push_back(i);
    }
    if (static_cast<int>(keep.size()) == b.dim) return b;
    ReducedBlock<S> out;
    out.label = b.label;
    out.bordered = b.bordered;
    out.dim = static_cast<int>(keep.size());
    out.entries.resize(keep.size() * keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = std::move(b.at(keep[i], keep[j]));
    return out;
}

} // namespace

template <class S>
std::vector<ReducedBlock<S>> reduce(const ReductionInput& in, const ReductionLayout& layout,
                                    const MonomialMapper& mapper, bool prune) {
    Engine<S> eng(in, layout);
    std::unordered_map<Monomial, int, MonomialHash> cache;
    std::vector<ReducedBlock<S>> out;
    for (const auto& shape : enumerate_blocks(in)) {
        const int R = static_cast<int>(shape.rows.size());
        ReducedBlock<S> b;
        b.label = shape.label;
        b.bordered = shape.bordered;
        b.dim = R + (shape.bordered ? 1 : 0);
        b.entries.resize(static_cast<std::size_t>(b.dim) * b.dim);
        for (int i = 0; i < R; ++i)
            for (int j = in.symmetric ? i : 0; j < R; ++j) {
                auto lf = map_poly(eng.entry_poly(shape.rows[i], shape.rows[j]), mapper, cache);
                if (in.symmetric && i != j) b.at(j, i) = lf;
                b.at(i, j) = std::move(lf);
            }
        if (shape.bordered) {
            const int e = R;
            b.at(e, e).constant = S(1);
            for (int i = 0; i < R; ++i) {
                auto lf = map_poly(eng.border_poly(shape.rows[i][0]), mapper, cache);
                b.at(e, i) = lf;
                b.at(i, e) = std::move(lf);
            }
        }
        out.push_back(prune ? prune_block(std::move(b)) : std::move(b));
    }
    return out;
}

template std::vector<ReducedBlock<CheckedInt>> reduce<CheckedInt>(const ReductionInput&, const ReductionLayout&,
                                                                  const MonomialMapper&, bool);
template std::vector<ReducedBlock<double>> reduce<double>(const ReductionInput&, const ReductionLayout&,
                                                          const MonomialMapper&, bool);

RPoly product_p(const ReductionInput& in, const ReductionLayout& layout, const std::vector<Tableau>& tau,
                const std::vector<Tableau>& sigma) {
    Engine<Rational> eng(in, layout);
    return eng.entry_poly(tau, sigma);
}

} // namespace cb

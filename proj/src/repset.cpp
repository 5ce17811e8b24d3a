#include "codebounds/repset.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace cb {

namespace {

int mod(int a, int q) { return ((a % q) + q) % q; }

} // namespace

std::vector<int> canonical_column(SymbolGroup g, int q, const std::vector<int>& col) {
    switch (g) {
    case SymbolGroup::Trivial: return col;
    case SymbolGroup::Symmetric: {
        std::vector<int> label(q, -1), out(col.size());
        int next = 0;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (label[col[i]] < 0) label[col[i]] = next++;
            out[i] = label[col[i]];
        }
        return out;
    }
    case SymbolGroup::Reflection: {
        std::vector<int> neg(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) neg[i] = mod(-col[i], q);
        return std::min(col, neg);
    }
    case SymbolGroup::Dihedral: {
        std::vector<int> best, cur(col.size());
        for (int s : {1, -1})
            for (int r = 0; r < q; ++r) {
                for (std::size_t i = 0; i < col.size(); ++i) cur[i] = mod(s * col[i] + r, q);
                if (best.empty() || cur < best) best = cur;
            }
        return best;
    }
    }
    return col;
}

Integer column_orbit_size(SymbolGroup g, int q, const std::vector<int>& col) {
    switch (g) {
    case SymbolGroup::Trivial: return 1;
    case SymbolGroup::Symmetric: {
        std::set<int> d(col.begin(), col.end());
        Integer r = 1;
        for (std::size_t i = 0; i < d.size(); ++i) r *= q - static_cast<int>(i);
        return r;
    }
    case SymbolGroup::Reflection:
    case SymbolGroup::Dihedral: {
        std::set<std::vector<int>> imgs;
        std::vector<int> cur(col.size());
        int rots = g == SymbolGroup::Dihedral ? q : 1;
        for (int s : {1, -1})
            for (int r = 0; r < rots; ++r) {
                for (std::size_t i = 0; i < col.size(); ++i) cur[i] = mod(s * col[i] + r, q);
                imgs.insert(cur);
            }
        return static_cast<long>(imgs.size());
    }
    }
    return 1;
}

int BaseAction::zsize() const {
    int z = 1;
    for (int i = 0; i < r; ++i) z *= q;
    return z;
}

std::vector<int> BaseAction::decode(int z) const {
    std::vector<int> s(r);
    for (int i = r - 1; i >= 0; --i) {
        s[i] = z % q;
        z /= q;
    }
    return s;
}

int BaseAction::encode(const std::vector<int>& symbols) const {
    int z = 0;
    for (int x : symbols) z = z * q + x;
    return z;
}

LambdaClasses LambdaClasses::build(const BaseAction& a) {
    LambdaClasses lc;
    lc.action = a;
    const int Z = a.zsize();
    std::map<std::vector<int>, long> seen;
    std::vector<std::vector<int>> canon(static_cast<std::size_t>(Z) * Z);
    for (int z = 0; z < Z; ++z)
        for (int zp = 0; zp < Z; ++zp) {
            auto s = a.decode(z);
            auto t = a.decode(zp);
            s.insert(s.end(), t.begin(), t.end());
            auto c = canonical_column(a.group, a.q, s);
            ++seen[c];
            canon[static_cast<std::size_t>(z) * Z + zp] = std::move(c);
        }
    std::map<std::vector<int>, int> label;
    for (auto& [rep, cnt] : seen) {
        label[rep] = static_cast<int>(lc.reps.size());
        lc.reps.push_back(rep);
        lc.sizes.push_back(cnt);
    }
    lc.class_of.resize(canon.size());
    for (std::size_t i = 0; i < canon.size(); ++i) lc.class_of[i] = label[canon[i]];
    return lc;
}

std::string rep_kind_name(RepKind k) {
    switch (k) {
    case RepKind::SqSingle: return "sq_single";
    case RepKind::SqPairs: return "sq_pairs";
    case RepKind::S2Reflection: return "s2_reflection";
    case RepKind::Dihedral: return "dihedral";
    case RepKind::TrivialF2: return "trivial_f2";
    case RepKind::IdentityQ: return "identity_q";
    }
    return "?";
}

BaseAction base_action_for(RepKind kind, int q) {
    switch (kind) {
    case RepKind::SqSingle: return {q, 1, SymbolGroup::Symmetric};
    case RepKind::SqPairs: return {q, 2, SymbolGroup::Symmetric};
    case RepKind::S2Reflection: return {q, 1, SymbolGroup::Reflection};
    case RepKind::Dihedral: return {q, 1, SymbolGroup::Dihedral};
    case RepKind::TrivialF2: return {2, 1, SymbolGroup::Trivial};
    case RepKind::IdentityQ: return {q, 1, SymbolGroup::Trivial};
    }
    return {};
}

namespace {

using Vec = std::vector<Rational>;

Vec unit(int size, int i) {
    Vec v(size, 0);
    v[i] = 1;
    return v;
}

// Matrix over [q]^2 flattened with index a*q+b.
struct Mat {
    int q;
    Vec v;
    explicit Mat(int q_) : q(q_), v(static_cast<std::size_t>(q_) * q_, 0) {}
    Rational& at(int a, int b) { return v[static_cast<std::size_t>(a) * q + b]; }
    Mat& add(int a, int b, int c) {
        at(a, b) += c;
        return *this;
    }
};

Mat transpose(Mat m) {
    Mat t(m.q);
    for (int a = 0; a < m.q; ++a)
        for (int b = 0; b < m.q; ++b) t.at(a, b) = m.at(b, a);
    return t;
}

Mat lin(const Mat& x, int cx, const Mat& y, int cy) {
    Mat r(x.q);
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = x.v[i] * cx + y.v[i] * cy;
    return r;
}

RepresentativeSet sq_pairs(int q) {
    RepresentativeSet rs;
    Mat I(q), J(q), D(q), N(q);
    for (int a = 0; a < q; ++a) {
        I.at(a, a) = 1;
        for (int b = 0; b < q; ++b) J.at(a, b) = 1;
    }
    D.add(0, 0, 1).add(1, 1, -1);
    for (int b = 0; b < q; ++b) N.add(0, b, 1).add(1, b, -1);
    Mat Nt = transpose(N);
    rs.B.push_back({I.v, lin(J, 1, I, -1).v});
    std::vector<Vec> b2 = {D.v, lin(N, 1, Nt, -1).v};
    if (q >= 3) b2.push_back(lin(lin(N, 1, Nt, 1), 1, D, -2).v);
    rs.B.push_back(b2);
    if (q >= 3) {
        Mat B3(q);
        B3.add(0, 1, 1).add(1, 2, 1).add(2, 0, 1).add(1, 0, -1).add(2, 1, -1).add(0, 2, -1);
        rs.B.push_back({B3.v});
    }
    if (q >= 4) {
        Mat B4(q);
        B4.add(0, 2, 1).add(2, 1, -1).add(1, 3, 1).add(3, 0, -1);
        B4.add(2, 0, 1).add(1, 2, -1).add(3, 1, 1).add(0, 3, -1);
        rs.B.push_back({B4.v});
    }
    return rs;
}

} // namespace

RepresentativeSet rep_set(RepKind kind, int q) {
    if (q < 2) throw DomainError("representative set needs q >= 2");
    RepresentativeSet rs;
    switch (kind) {
    case RepKind::SqSingle: {
        rs.B.push_back({Vec(q, 1)});
        Vec d(q, 0);
        d[0] = 1;
        d[1] = -1;
        rs.B.push_back({d});
        break;
    }
    case RepKind::SqPairs: rs = sq_pairs(q); break;
    case RepKind::S2Reflection: {
        std::vector<Vec> b1 = {unit(q, 0)}, b2;
        for (int i = 1; i <= q / 2; ++i) {
            Vec v(q, 0);
            v[i] += 1;
            v[q - i] += 1;
            b1.push_back(v);
        }
        for (int i = 1; i <= (q - 1) / 2; ++i) {
            Vec v(q, 0);
            v[i] = 1;
            v[q - i] = -1;
            b2.push_back(v);
        }
        rs.B.push_back(b1);
        if (!b2.empty()) rs.B.push_back(b2);
        break;
    }
    case RepKind::Dihedral: {
        rs.exact = false;
        for (int j = 0; j <= q / 2; ++j) {
            std::vector<double> v(q);
            for (int x = 0; x < q; ++x) v[x] = std::cos(2 * std::numbers::pi * j * x / q);
            rs.Bd.push_back({v});
        }
        break;
    }
    case RepKind::TrivialF2:
        if (q != 2) throw DomainError("trivial_f2 requires q = 2");
        rs.B.push_back({unit(2, 0), unit(2, 1)});
        break;
    case RepKind::IdentityQ: {
        std::vector<Vec> b;
        for (int i = 0; i < q; ++i) b.push_back(unit(q, i));
        rs.B.push_back(b);
        break;
    }
    }
    rs.kind = kind;
    rs.q = q;
    rs.zsize = base_action_for(kind, q).zsize();
    if (rs.exact) {
        for (const auto& Bi : rs.B) {
            std::vector<std::vector<double>> d;
            for (const auto& col : Bi) {
                std::vector<double> c;
                for (const auto& x : col) c.push_back(x.get_d());
                d.push_back(c);
            }
            rs.Bd.push_back(d);
        }
    }
    for (const auto& Bi : rs.Bd) rs.m.push_back(static_cast<int>(Bi.size()));
    return rs;
}

namespace {

template <class S, class V>
std::vector<std::vector<std::vector<Poly<S>>>> f_generic(const std::vector<std::vector<std::vector<V>>>& B,
                                                         const LambdaClasses& cls, int off) {
    std::vector<std::vector<std::vector<Poly<S>>>> out;
    const int Z = cls.action.zsize();
    for (const auto& Bi : B) {
        const std::size_t m = Bi.size();
        std::vector<std::vector<Poly<S>>> F(m, std::vector<Poly<S>>(m));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t h = 0; h < m; ++h)
                for (int x = 0; x < Z; ++x) {
                    if (Bi[j][x] == 0) continue;
                    for (int y = 0; y < Z; ++y) {
                        if (Bi[h][y] == 0) continue;
                        F[j][h].add(Monomial{static_cast<std::uint16_t>(off + cls.of(x, y))}, S(Bi[j][x] * Bi[h][y]));
                    }
                }
        out.push_back(std::move(F));
    }
    return out;
}

} // namespace

std::vector<std::vector<std::vector<RPoly>>> f_table(const RepresentativeSet& rs, const LambdaClasses& cls,
                                                     int var_offset) {
    if (!rs.exact) throw DomainError("f_table: representative set is not exact");
    return f_generic<Rational>(rs.B, cls, var_offset);
}

std::vector<std::vector<std::vector<DPoly>>> f_table_double(const RepresentativeSet& rs, const LambdaClasses& cls,
                                                            int var_offset) {
    return f_generic<double>(rs.Bd, cls, var_offset);
}

RPoly diagonal_form(const std::vector<Rational>& b, const LambdaClasses& cls, int off) {
    RPoly p;
    for (std::size_t z = 0; z < b.size(); ++z)
        p.add(Monomial{static_cast<std::uint16_t>(off + cls.of(static_cast<int>(z), static_cast<int>(z)))}, b[z]);
    return p;
}

DPoly diagonal_form_double(const std::vector<double>& b, const LambdaClasses& cls, int off) {
    DPoly p;
    for (std::size_t z = 0; z < b.size(); ++z)
        p.add(Monomial{static_cast<std::uint16_t>(off + cls.of(static_cast<int>(z), static_cast<int>(z)))}, b[z]);
    return p;
}

} // namespace cb

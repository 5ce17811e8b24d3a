#include "codebounds/code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace cb {

Metric parse_metric(const std::string& s) {
    if (s == "hamming") return Metric::Hamming;
    if (s == "lee") return Metric::Lee;
    if (s == "lee_inf" || s == "leeinf" || s == "lee-inf") return Metric::LeeInf;
    throw DomainError("unknown metric: " + s);
}

std::string metric_name(Metric m) {
    switch (m) {
    case Metric::Hamming: return "hamming";
    case Metric::Lee: return "lee";
    case Metric::LeeInf: return "lee_inf";
    }
    return "?";
}

Code::Code(int q, int n, std::vector<Word> words) : q_(q), n_(n), words_(std::move(words)) {
    if (q < 1 || q > kMaxAlphabet) throw DomainError("alphabet size out of range");
    if (n < 0) throw DomainError("negative length");
    for (const auto& w : words_) {
        if (static_cast<int>(w.size()) != n) throw DimensionError("word length differs from n");
        for (int s : w)
            if (s < 0 || s >= q) throw DomainError("symbol outside [0, q)");
    }
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
        throw DomainError("duplicate word in code");
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

long distance(Metric m, int q, const Word& u, const Word& v) {
    if (u.size() != v.size()) throw DimensionError("words of different length");
    long acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        int a = u[i], b = v[i];
        if (a < 0 || b < 0 || a >= q || b >= q) throw DimensionError("symbol outside alphabet");
        if (m == Metric::Hamming) {
            acc += (a != b);
            continue;
        }
        int x = std::abs(a - b);
        int c = std::min(x, q - x);
        if (m == Metric::Lee)
            acc += c;
        else
            acc = std::max<long>(acc, c);
    }
    return acc;
}

long hamming_weight(const Word& w) {
    return std::count_if(w.begin(), w.end(), [](int s) { return s != 0; });
}

std::optional<long> min_distance(Metric m, const Code& c) {
    if (c.size() <= 1) return std::nullopt;
    long best = -1;
    const auto& ws = c.words();
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j) {
            long d = distance(m, c.q(), ws[i], ws[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

std::vector<Rational> distance_distribution(const Code& c) {
    if (c.empty()) throw DomainError("distance distribution of empty code");
    std::vector<Integer> cnt(c.n() + 1, 0);
    const auto& ws = c.words();
    for (std::size_t i = 0; i < ws.size(); ++i) {
        cnt[0] += 1;
        for (std::size_t j = i + 1; j < ws.size(); ++j) cnt[distance(Metric::Hamming, c.q(), ws[i], ws[j])] += 2;
    }
    std::vector<Rational> out(c.n() + 1);
    for (int i = 0; i <= c.n(); ++i) {
        out[i] = Rational(cnt[i], static_cast<long>(c.size()));
        out[i].canonicalize();
    }
    return out;
}

std::vector<long> weight_distribution(const Code& c) {
    std::vector<long> out(c.n() + 1, 0);
    for (const auto& w : c.words()) ++out[hamming_weight(w)];
    return out;
}

GroupElement GroupElement::identity(SymbolAction kind, int q, int n) {
    GroupElement g;
    g.kind = kind;
    g.perm.resize(n);
    for (int i = 0; i < n; ++i) g.perm[i] = i;
    if (kind == SymbolAction::Full) {
        std::vector<int> id(q);
        for (int s = 0; s < q; ++s) id[s] = s;
        g.maps.assign(n, id);
    } else {
        g.rot.assign(n, 0);
        g.reflect.assign(n, false);
    }
    return g;
}

int GroupElement::apply_symbol(int col, int x, int q) const {
    switch (kind) {
    case SymbolAction::Full: return maps[col][x];
    case SymbolAction::Dihedral: {
        int y = reflect[col] ? (q - x) % q : x;
        return (y + rot[col]) % q;
    }
    case SymbolAction::Reflection: return reflect[col] ? (q - x) % q : x;
    }
    return x;
}

static void check_group(const GroupElement& g, int q, int n) {
    if (static_cast<int>(g.perm.size()) != n) throw DimensionError("group element length mismatch");
    std::vector<int> seen(n, 0);
    for (int p : g.perm) {
        if (p < 0 || p >= n || seen[p]++) throw DomainError("column map is not a permutation");
    }
    if (g.kind == SymbolAction::Full) {
        if (static_cast<int>(g.maps.size()) != n) throw DimensionError("symbol map count mismatch");
        for (const auto& m : g.maps) {
            if (static_cast<int>(m.size()) != q) throw DimensionError("symbol map size mismatch");
            std::vector<int> s(q, 0);
            for (int x : m)
                if (x < 0 || x >= q || s[x]++) throw DomainError("symbol map is not a bijection");
        }
    } else {
        if (static_cast<int>(g.reflect.size()) != n) throw DimensionError("symbol map count mismatch");
        if (g.kind == SymbolAction::Dihedral && static_cast<int>(g.rot.size()) != n)
            throw DimensionError("rotation count mismatch");
    }
}

Word apply_group(const GroupElement& g, int q, const Word& w) {
    const int n = static_cast<int>(w.size());
    Word out(n);
    for (int i = 0; i < n; ++i) out[g.perm[i]] = g.apply_symbol(i, w[i], q);
    return out;
}

Code apply_group(const GroupElement& g, const Code& c) {
    check_group(g, c.q(), c.n());
    std::vector<Word> ws;
    ws.reserve(c.size());
    for (const auto& w : c.words()) ws.push_back(apply_group(g, c.q(), w));
    return Code(c.q(), c.n(), std::move(ws));
}

namespace {

using Bits = std::vector<std::uint64_t>;

void require_binary(const Code& c) {
    if (c.q() != 2) throw DomainError("F2 operation on a code with q != 2");
}

Bits to_bits(const Word& w) {
    Bits b((w.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) b[i / 64] |= std::uint64_t{1} << (i % 64);
    return b;
}

Word from_bits(const Bits& b, int n) {
    Word w(n);
    for (int i = 0; i < n; ++i) w[i] = static_cast<int>((b[i / 64] >> (i % 64)) & 1U);
    return w;
}

bool bit(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1U; }

void xor_into(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

// Reduced row echelon basis; pivots returned alongside.
std::vector<Bits> echelon(std::vector<Bits> rows, int n, std::vector<int>* pivots) {
    std::vector<Bits> basis;
    std::vector<int> piv;
    int r = 0;
    for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (bit(rows[i], col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && bit(rows[i], col)) xor_into(rows[i], rows[r]);
        piv.push_back(col);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = piv;
    return rows;
}

Code span_of_basis(const std::vector<Bits>& basis, int n) {
    if (basis.size() > 26) throw DomainError("F2 span too large to enumerate");
    std::vector<Word> out;
    const std::size_t total = std::size_t{1} << basis.size();
    Bits cur((n + 63) / 64, 0);
    out.reserve(total);
    // Gray code enumeration.
    for (std::size_t k = 0; k < total; ++k) {
        if (k) {
            int flip = __builtin_ctzll(k);
            xor_into(cur, basis[flip]);
        }
        out.push_back(from_bits(cur, n));
    }
    return Code(2, n, std::move(out));
}

std::vector<Bits> rows_of(const Code& c) {
    std::vector<Bits> rows;
    for (const auto& w : c.words()) rows.push_back(to_bits(w));
    return rows;
}

} // namespace

int f2_rank(const Code& c) {
    require_binary(c);
    return static_cast<int>(echelon(rows_of(c), c.n(), nullptr).size());
}

Code f2_span(const Code& c) {
    require_binary(c);
    return span_of_basis(echelon(rows_of(c), c.n(), nullptr), c.n());
}

Code f2_dual(const Code& c) {
    require_binary(c);
    const int n = c.n();
    std::vector<int> piv;
    auto basis = echelon(rows_of(c), n, &piv);
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    // One dual basis vector per free column.
    std::vector<Bits> dual;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Bits v((n + 63) / 64, 0);
        v[f / 64] |= std::uint64_t{1} << (f % 64);
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (bit(basis[r], f)) v[piv[r] / 64] |= std::uint64_t{1} << (piv[r] % 64);
        dual.push_back(v);
    }
    return span_of_basis(dual, n);
}

VerifyReport verify_code(const Code& c, Metric m, long d, std::optional<long> w) {
    VerifyReport r;
    r.size = c.size();
    r.dmin = min_distance(m, c);
    if (!c.empty()) {
        long w0 = hamming_weight(c[0]);
        for (const auto& x : c.words())
            if (hamming_weight(x) != w0) r.weight_uniform = false;
        if (r.weight_uniform) r.weight = w0;
    }
    bool dist_ok = !r.dmin || *r.dmin >= d;
    bool weight_ok = !w || (r.weight_uniform && (c.empty() || r.weight == *w));
    r.pass = dist_ok && weight_ok;
    return r;
}

Code read_code(std::istream& in) {
    std::string line;
    int q = -1, n = -1;
    std::vector<Word> words;
    std::set<Word> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (q < 0) {
            std::string kq, kn;
            long qq = -1, nn = -1;
            if (!(ls >> kq >> qq >> kn >> nn) || kq != "q" || kn != "n")
                throw DomainError("line " + std::to_string(lineno) + ": expected header 'q <q> n <n>'");
            if (qq < 1 || qq > kMaxAlphabet) throw DomainError("alphabet size out of range (max 65536)");
            if (nn < 0) throw DomainError("negative length");
            q = static_cast<int>(qq);
            n = static_cast<int>(nn);
            continue;
        }
        Word w;
        long s;
        while (ls >> s) {
            if (s < 0 || s >= q) throw DomainError("line " + std::to_string(lineno) + ": symbol out of range");
            w.push_back(static_cast<int>(s));
        }
        if (!ls.eof()) throw DomainError("line " + std::to_string(lineno) + ": malformed symbol");
        if (static_cast<int>(w.size()) != n)
            throw DomainError("line " + std::to_string(lineno) + ": word length differs from n");
        if (!seen.insert(w).second) throw DomainError("line " + std::to_string(lineno) + ": duplicate word");
        words.push_back(std::move(w));
    }
    if (q < 0) throw DomainError("missing header line");
    return Code(q, n, std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return read_code(f);
}

void write_code(std::ostream& out, const Code& c, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "q " << c.q() << " n " << c.n() << '\n';
    for (const auto& w : c.words()) {
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << '\n';
    }
}

Word word_from_digits(const std::string& s) {
    Word w;
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw DomainError("non-digit in word string");
        w.push_back(ch - '0');
    }
    return w;
}

} // namespace cb

#include "codebounds/sdp.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace cb {

namespace {

std::string fmt_double(double v) {
    if (v == 0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_value(const Rational& r, bool exact) {
    if (exact && r.get_den() == 1) return r.get_num().get_str();
    return fmt_double(r.get_d());
}

Rational parse_value(const std::string& s) {
    bool integer = !s.empty();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!(std::isdigit(static_cast<unsigned char>(s[i])) || (i == 0 && (s[i] == '-' || s[i] == '+'))))
            integer = false;
    if (integer) return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
    std::size_t pos = 0;
    double d = std::stod(s, &pos);
    if (pos != s.size()) throw DomainError("malformed number in SDPA file: " + s);
    return Rational(d);
}

std::string group_name(SymbolGroup g) {
    switch (g) {
    case SymbolGroup::Symmetric: return "symmetric";
    case SymbolGroup::Dihedral: return "dihedral";
    case SymbolGroup::Reflection: return "reflection";
    case SymbolGroup::Trivial: return "trivial";
    }
    return "?";
}

SymbolGroup parse_group(const std::string& s) {
    if (s == "symmetric") return SymbolGroup::Symmetric;
    if (s == "dihedral") return SymbolGroup::Dihedral;
    if (s == "reflection") return SymbolGroup::Reflection;
    if (s == "trivial") return SymbolGroup::Trivial;
    throw DomainError("unknown symbol group: " + s);
}

} // namespace

void emit_sdpa(const SdpProgram& p, std::ostream& out) {
    const std::size_t V = p.num_vars();
    out << "\" codebounds family=" << p.family << " q=" << p.q << " n=" << p.n << " d=" << p.d
        << " w=" << (p.w ? std::to_string(*p.w) : std::string("-")) << " metric=" << metric_name(p.metric)
        << " group=" << group_name(p.group) << " exact=" << (p.exact ? 1 : 0) << " kmax=" << p.max_code_size
        << " complemented=" << (p.complemented ? 1 : 0) << "\n";
    out << "\" primal: maximize sum_v b_v z_v subject to M(z) = C + sum_v z_v A_v PSD and z >= 0\n";
    out << "\" SDPA form: c = -b, F0 = -C, F_v = A_v, x = z; X equals M; the last block is the diagonal z >= 0\n";
    for (const auto& note : p.notes) out << "\" note " << note << "\n";
    for (std::size_t b = 0; b < p.blocks.size(); ++b) out << "\" block " << b + 1 << ' ' << p.blocks[b].label << "\n";
    for (std::size_t v = 0; v < V; ++v)
        out << "\" var " << v + 1 << ' ' << p.vars[v].key.to_string() << ' ' << p.vars[v].orbit_size.get_str() << "\n";
    out << V << "\n";
    const std::size_t nb = p.blocks.size() + (V > 0 ? 1 : 0);
    out << nb << "\n";
    for (std::size_t b = 0; b < p.blocks.size(); ++b) out << (b ? " " : "") << p.blocks[b].dim;
    if (V > 0) out << (p.blocks.empty() ? "" : " ") << "-" << V;
    out << "\n";
    for (std::size_t v = 0; v < V; ++v) out << (v ? " " : "") << fmt_value(-p.objective[v], p.exact);
    out << "\n";
    std::vector<std::tuple<int, int, int, int, std::string>> lines;
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
        for (const auto& e : p.blocks[b].entries) {
            const int blk = static_cast<int>(b) + 1;
            if (e.constant != 0) lines.emplace_back(0, blk, e.i + 1, e.j + 1, fmt_value(-e.constant, p.exact));
            for (const auto& [v, c] : e.terms) lines.emplace_back(v + 1, blk, e.i + 1, e.j + 1, fmt_value(c, p.exact));
        }
    const int diag = static_cast<int>(p.blocks.size()) + 1;
    for (std::size_t v = 0; v < V; ++v)
        lines.emplace_back(static_cast<int>(v) + 1, diag, static_cast<int>(v) + 1, static_cast<int>(v) + 1, "1");
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a), std::get<3>(a)) <
               std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b), std::get<3>(b));
    });
    for (const auto& [m, b, i, j, v] : lines) out << m << ' ' << b << ' ' << i << ' ' << j << ' ' << v << "\n";
}

std::string emit_sdpa(const SdpProgram& p) {
    std::ostringstream o;
    emit_sdpa(p, o);
    return o.str();
}

SdpProgram parse_sdpa(std::istream& in) {
    SdpProgram p;
    std::vector<std::string> labels;
    std::vector<SdpVariable> vars;
    std::vector<std::string> body;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '"' || line[0] == '*') {
            std::istringstream ls(line.substr(1));
            std::string tag;
            ls >> tag;
            if (tag == "codebounds") {
                std::string kv;
                while (ls >> kv) {
                    auto eq = kv.find('=');
                    if (eq == std::string::npos) continue;
                    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
                    if (k == "family") p.family = v;
                    else if (k == "q") p.q = std::stoi(v);
                    else if (k == "n") p.n = std::stoi(v);
                    else if (k == "d") p.d = std::stoi(v);
                    else if (k == "w") p.w = v == "-" ? std::nullopt : std::optional<int>(std::stoi(v));
                    else if (k == "metric") p.metric = parse_metric(v);
                    else if (k == "group") p.group = parse_group(v);
                    else if (k == "exact") p.exact = v == "1";
                    else if (k == "kmax") p.max_code_size = std::stoi(v);
                    else if (k == "complemented") p.complemented = v == "1";
                }
            } else if (tag == "note") {
                std::string rest;
                std::getline(ls, rest);
                p.notes.push_back(rest.empty() ? rest : rest.substr(1));
            } else if (tag == "block") {
                int idx;
                ls >> idx;
                std::string rest;
                std::getline(ls, rest);
                labels.push_back(rest.empty() ? rest : rest.substr(1));
            } else if (tag == "var") {
                int idx;
                std::string key, size;
                ls >> idx >> key >> size;
                SdpVariable v;
                v.key = OrbitKey::parse(key);
                v.orbit_size = Integer(size);
                vars.push_back(v);
            }
            continue;
        }
        for (char& ch : line)
            if (ch == ',' || ch == '{' || ch == '}' || ch == '(' || ch == ')') ch = ' ';
        body.push_back(line);
    }
    std::istringstream bs([&] {
        std::string all;
        for (const auto& l : body) all += l + "\n";
        return all;
    }());
    long mdim, nblock;
    if (!(bs >> mdim >> nblock)) throw DomainError("SDPA file: missing header");
    std::vector<long> sizes(nblock);
    for (auto& s : sizes)
        if (!(bs >> s)) throw DomainError("SDPA file: missing block sizes");
    std::vector<std::string> c(mdim);
    for (auto& x : c)
        if (!(bs >> x)) throw DomainError("SDPA file: missing objective");
    p.objective.clear();
    for (const auto& x : c) p.objective.push_back(-parse_value(x));
    if (vars.size() != static_cast<std::size_t>(mdim)) vars.assign(mdim, SdpVariable{});
    p.vars = vars;
    int diag = -1;
    for (long b = 0; b < nblock; ++b) {
        if (sizes[b] < 0) {
            diag = static_cast<int>(b) + 1;
            continue;
        }
        SdpBlock blk;
        blk.dim = static_cast<int>(sizes[b]);
        blk.label = b < static_cast<long>(labels.size()) ? labels[b] : "";
        p.blocks.push_back(blk);
    }
    std::vector<std::map<std::pair<int, int>, SdpEntry>> ents(p.blocks.size());
    long m, b, i, j;
    std::string val;
    while (bs >> m >> b >> i >> j >> val) {
        if (b == diag) continue;
        if (b < 1 || b > static_cast<long>(p.blocks.size())) throw DomainError("SDPA file: bad block number");
        if (i > j) std::swap(i, j);
        auto& e = ents[b - 1][{static_cast<int>(i) - 1, static_cast<int>(j) - 1}];
        e.i = static_cast<int>(i) - 1;
        e.j = static_cast<int>(j) - 1;
        Rational v = parse_value(val);
        if (m == 0)
            e.constant = -v;
        else
            e.terms.emplace_back(static_cast<int>(m) - 1, v);
    }
    for (std::size_t k = 0; k < p.blocks.size(); ++k)
        for (auto& [ij, e] : ents[k]) {
            std::sort(e.terms.begin(), e.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            p.blocks[k].entries.push_back(std::move(e));
        }
    return p;
}

SdpProgram parse_sdpa_string(const std::string& s) {
    std::istringstream in(s);
    return parse_sdpa(in);
}

DualSolution read_dual(const SdpProgram& p, std::istream& in) {
    DualSolution x;
    for (const auto& b : p.blocks) x.blocks.push_back(Eigen::MatrixXd::Zero(b.dim, b.dim));
    x.x_var.assign(p.num_vars(), 0.0);
    const long diag = static_cast<long>(p.blocks.size()) + 1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '"' || line[0] == '#') continue;
        std::istringstream ls(line);
        long b, i, j;
        double v;
        if (!(ls >> b >> i >> j >> v)) throw DomainError("dual file: malformed line: " + line);
        if (b == diag) {
            if (i != j || i < 1 || i > static_cast<long>(p.num_vars())) throw DomainError("dual file: bad diagonal entry");
            x.x_var[i - 1] = v;
            continue;
        }
        if (b < 1 || b > static_cast<long>(p.blocks.size())) throw DomainError("dual file: bad block number");
        auto& M = x.blocks[b - 1];
        if (i < 1 || j < 1 || i > M.rows() || j > M.rows()) throw DomainError("dual file: index out of range");
        M(i - 1, j - 1) = v;
        M(j - 1, i - 1) = v;
    }
    return x;
}

} // namespace cb

// Command-line front end for the codebounds library.
#include "codebounds/classical.hpp"
#include "codebounds/constructions.hpp"
#include "codebounds/delsarte.hpp"
#include "codebounds/oracle.hpp"
#include "codebounds/sdp.hpp"
#include "codebounds/shannon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace cb;

namespace {

struct Output {
    bool as_json = false;
    std::string command;
    json params = json::object();
    json result = json::object();
    json certificate = json::object();
    std::vector<std::string> lines;

    void add(const std::string& key, const json& value) {
        result[key] = value;
        lines.push_back(key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()));
    }
    void print() const {
        if (as_json) {
            json j;
            j["command"] = command;
            j["params"] = params;
            j["result"] = result;
            j["certificate"] = certificate;
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
    }
};

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json rational_json(const Rational& r) { return to_string(r); }

json certificate_json(const BoundResult& b) {
    json c = json::object();
    for (const auto& [k, v] : b.certificate) c[k] = v;
    return c;
}

json code_summary(const Code& c) {
    json j;
    j["q"] = c.q();
    j["n"] = c.n();
    j["size"] = c.size();
    return j;
}

void write_code_to(const std::string& path, const Code& c, const std::string& comment) {
    if (path.empty() || path == "-") {
        write_code(std::cout, c, comment);
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot open " + path + " for writing");
    write_code(f, c, comment);
}

Rational parse_rational(const std::string& s) {
    Rational r;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        r = Rational(Integer(digits), den);
    } else if (r.set_str(s, 10) != 0) {
        throw DomainError("not a rational number: " + s);
    }
    r.canonicalize();
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds, programs and constructions for error-correcting codes"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "Emit one JSON object");

    // bound
    auto* bound = app.add_subcommand("bound", "Classical and LP upper bounds");
    bound->require_subcommand(1);
    long q = 0, n = 0, d = 0, w = -1, M = 0, r = 0, times = 1, tsize = 0;
    std::string scheme = "hamming", metric = "hamming", family, outpath, input, flips = "0", base = "extended";

    auto* b_plotkin = bound->add_subcommand("plotkin", "q-ary Plotkin bound");
    auto* b_h = bound->add_subcommand("h", "h(q,n,d,M)");
    auto* b_div = bound->add_subcommand("divisibility", "Divisibility bound");
    auto* b_del = bound->add_subcommand("delsarte", "Delsarte LP bound");
    auto* b_theta = bound->add_subcommand("theta", "Lovasz theta of a circular graph");
    for (auto* s : {b_plotkin, b_h, b_div}) {
        s->add_option("--q", q)->required();
        s->add_option("--n", n)->required();
        s->add_option("--d", d)->required();
    }
    b_h->add_option("--M", M)->required();
    b_del->add_option("--scheme", scheme)->check(CLI::IsMember({"hamming", "johnson"}));
    b_del->add_option("--q", q);
    b_del->add_option("--n", n)->required();
    b_del->add_option("--d", d)->required();
    b_del->add_option("--w", w);
    b_theta->add_option("--d", d)->required();
    b_theta->add_option("--q", q)->required();

    // sdpgen
    auto* sdpgen = app.add_subcommand("sdpgen", "Generate a reduced program in SDPA sparse format");
    sdpgen->add_option("--family", family)->required();
    sdpgen->add_option("--q", q);
    sdpgen->add_option("--n", n)->required();
    sdpgen->add_option("--d", d)->required();
    sdpgen->add_option("--w", w);
    sdpgen->add_option("-o,--output", outpath);

    // construct
    auto* construct = app.add_subcommand("construct", "Explicit codes");
    construct->require_subcommand(1);
    construct->add_option("-o,--output", outpath);
    auto* c_golay = construct->add_subcommand("golay", "Extended binary Golay code");
    auto* c_golay_perfect = construct->add_subcommand("golay-perfect", "Binary Golay code of length 23");
    auto* c_golay_short = construct->add_subcommand("golay-shortened", "Shortened Golay code");
    c_golay_short->add_option("--times", times)->required();
    c_golay_short->add_option("--base", base)->check(CLI::IsMember({"extended", "perfect"}));
    auto* c_golay_w = construct->add_subcommand("golay-weight", "Words of one weight in a Golay code");
    c_golay_w->add_option("--w", w)->required();
    c_golay_w->add_option("--base", base)->check(CLI::IsMember({"extended", "perfect"}));
    auto* c_lee579 = construct->add_subcommand("lee-5-7-9", "Equidistant Lee code over Z_5");
    auto* c_lee646 = construct->add_subcommand("lee-6-4-6", "Lee code of size 18 over Z_6");
    auto* c_coset = construct->add_subcommand("coset20", "Coset-flip (20,8) code");
    c_coset->add_option("--flips", flips, "16-bit mask in hex");
    auto* c_net = construct->add_subcommand("net", "Symmetric net incidence matrix from a code");
    c_net->add_option("--from", input)->required();
    auto* c_circ = construct->add_subcommand("circular", "Independent set in a circular graph power");
    c_circ->add_option("--r", r)->required();
    c_circ->add_option("--n", n)->required();
    auto* c_c7 = construct->add_subcommand("c7-367", "Listed independent set of C_7^5");
    auto* c_382 = construct->add_subcommand("independent-382", "382-word independent set");
    auto* c_pipe = construct->add_subcommand("c7-pipeline", "Derive an independent set of C_7^5");
    std::vector<int> shift = c7_default_shift();
    std::string divisor = "109/2";
    c_pipe->add_option("--shift", shift)->expected(5);
    c_pipe->add_option("--divisor", divisor);
    for (auto* s : construct->get_subcommands({})) s->add_option("-o,--output", outpath);

    // verify
    auto* verify = app.add_subcommand("verify", "Check a code file");
    verify->add_option("--metric", metric);
    verify->add_option("--d", d)->required();
    verify->add_option("--w", w);
    verify->add_option("file", input)->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Exhaustive search on small instances");
    oracle->require_subcommand(1);
    auto* o_max = oracle->add_subcommand("max-code", "Maximum code size");
    o_max->add_option("--q", q)->required();
    o_max->add_option("--n", n)->required();
    o_max->add_option("--d", d)->required();
    o_max->add_option("--metric", metric);
    o_max->add_option("--w", w);
    auto* o_alpha = oracle->add_subcommand("alpha-circular", "Independence number of a circular graph power");
    o_alpha->add_option("--q", q)->required();
    o_alpha->add_option("--d", d)->required();
    o_alpha->add_option("--n", n)->required();
    double time_limit = 600;
    for (auto* s : {o_max, o_alpha}) s->add_option("--time-limit", time_limit);

    // orbits
    auto* orbits = app.add_subcommand("orbits", "Program variable counts");
    orbits->require_subcommand(1);
    auto* o_count = orbits->add_subcommand("count", "Number of program variables");
    o_count->add_option("--family", family)->required();
    o_count->add_option("--q", q);
    o_count->add_option("--n", n)->required();
    o_count->add_option("--d", d)->required();
    o_count->add_option("--w", w);

    // analyze-dual
    auto* adual = app.add_subcommand("analyze-dual", "Find variables that a dual solution forces to zero");
    std::string program_path, dual_path;
    double lower_bound = 0, code_size = 0;
    adual->add_option("--program", program_path)->required();
    adual->add_option("--dual", dual_path)->required();
    adual->add_option("--lower-bound", lower_bound)->required();
    adual->add_option("--code-size", code_size)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto opt_w = [&]() -> std::optional<long> { return w >= 0 ? std::optional<long>(w) : std::nullopt; };

    try {
        if (*bound) {
            out.command = "bound";
            if (*b_plotkin) {
                out.params = {{"bound", "plotkin"}, {"q", q}, {"n", n}, {"d", d}};
                auto b = plotkin(q, n, d);
                if (!b) throw DomainError("plotkin bound needs qd > (q-1)n");
                out.add("value", b->value.get_str());
                out.certificate = certificate_json(*b);
            } else if (*b_h) {
                out.params = {{"bound", "h"}, {"q", q}, {"n", n}, {"d", d}, {"M", M}};
                out.add("value", h_value(q, n, d, M).get_str());
            } else if (*b_div) {
                out.params = {{"bound", "divisibility"}, {"q", q}, {"n", n}, {"d", d}};
                auto b = divisibility_bound(q, n, d);
                if (!b) throw DomainError("divisibility bound does not apply");
                out.add("value", b->value.get_str());
                out.certificate = certificate_json(*b);
            } else if (*b_del) {
                out.params = {{"bound", "delsarte"}, {"scheme", scheme}, {"n", n}, {"d", d}};
                DelsarteResult res;
                if (scheme == "hamming") {
                    if (q < 2) throw DomainError("--q is required for the hamming scheme");
                    out.params["q"] = q;
                    res = delsarte_hamming(q, n, d);
                } else {
                    if (w < 0) throw DomainError("--w is required for the johnson scheme");
                    out.params["w"] = w;
                    res = delsarte_johnson(n, d, w);
                }
                out.add("value", res.floor.get_str());
                out.add("optimum", to_string(res.value));
                out.certificate["certificate_ok"] = res.solution.certificate_ok;
                json dual = json::array();
                for (const auto& y : res.solution.dual) dual.push_back(rational_json(y));
                out.certificate["dual"] = dual;
                json primal = json::array();
                for (const auto& x : res.solution.primal) primal.push_back(rational_json(x));
                out.certificate["primal"] = primal;
            } else if (*b_theta) {
                out.params = {{"bound", "theta"}, {"d", d}, {"q", q}};
                out.add("value", fmt12(theta_circular(d, q)));
            }
        } else if (*sdpgen) {
            out.command = "sdpgen";
            Family f = parse_family(family);
            out.params = {{"family", family}, {"q", q}, {"n", n}, {"d", d}};
            if (w >= 0) out.params["w"] = w;
            auto p = generate(f, static_cast<int>(q), static_cast<int>(n), static_cast<int>(d),
                              w >= 0 ? std::optional<int>(static_cast<int>(w)) : std::nullopt);
            const std::string text = emit_sdpa(p);
            if (outpath.empty() || outpath == "-") {
                std::cout << text;
                return 0;
            }
            std::ofstream fo(outpath);
            if (!fo) throw DomainError("cannot open " + outpath + " for writing");
            fo << text;
            out.add("variables", p.num_vars());
            out.add("blocks", p.blocks.size());
            out.add("output", outpath);
        } else if (*construct) {
            out.command = "construct";
            Code c;
            std::string name;
            if (*c_golay) {
                name = "golay";
                c = golay_extended();
            } else if (*c_golay_perfect) {
                name = "golay-perfect";
                c = golay_perfect();
            } else if (*c_golay_short) {
                name = "golay-shortened";
                out.params["times"] = times;
                out.params["base"] = base;
                c = base == "perfect" ? golay_perfect_shortened(static_cast<int>(times))
                                      : golay_shortened(static_cast<int>(times));
            } else if (*c_golay_w) {
                name = "golay-weight";
                out.params["w"] = w;
                out.params["base"] = base;
                c = weight_class(base == "perfect" ? golay_perfect() : golay_extended(), w);
            } else if (*c_lee579) {
                name = "lee-5-7-9";
                c = lee_5_7_9();
            } else if (*c_lee646) {
                name = "lee-6-4-6";
                c = lee_6_4_6();
            } else if (*c_coset) {
                name = "coset20";
                unsigned long mask = std::stoul(flips, nullptr, 16);
                if (mask > 0xffff) throw DomainError("flip mask exceeds 16 bits");
                out.params["flips"] = flips;
                c = coset20(static_cast<std::uint16_t>(mask));
            } else if (*c_net) {
                out.params = {{"construction", "net"}, {"from", input}};
                auto net = net_from_code(read_code_file(input));
                auto chk = check_net(net);
                out.add("mu", net.mu);
                out.add("q", net.q);
                out.add("axioms", chk.ok() ? "pass" : "fail");
                std::ostringstream m;
                for (const auto& row : net.incidence) {
                    for (auto x : row) m << int(x);
                    m << "\n";
                }
                if (outpath.empty() || outpath == "-") {
                    out.print();
                    if (!out.as_json) std::cout << m.str();
                } else {
                    std::ofstream fo(outpath);
                    fo << m.str();
                    out.print();
                }
                return chk.ok() ? 0 : 1;
            } else if (*c_circ) {
                name = "circular";
                out.params["r"] = r;
                out.params["n"] = n;
                c = circular_construction(r, n);
            } else if (*c_c7) {
                name = "c7-367";
                c = c7_367();
            } else if (*c_382) {
                name = "independent-382";
                c = independent_382();
            } else if (*c_pipe) {
                name = "c7-pipeline";
                out.params["shift"] = shift;
                out.params["divisor"] = divisor;
                auto rep = c7_pipeline(shift, parse_rational(divisor));
                out.certificate = {{"start", rep.start},
                                   {"mapped_distinct", rep.mapped_distinct},
                                   {"after_removal", rep.after_removal},
                                   {"residual_vertices", rep.residual_vertices},
                                   {"residual_edges", rep.residual_edges},
                                   {"added", rep.added},
                                   {"exact", rep.extension_exact}};
                c = rep.result;
            }
            out.params["construction"] = name;
            if (outpath.empty() && !out.as_json) {
                write_code(std::cout, c, name);
                return 0;
            }
            if (!outpath.empty()) write_code_to(outpath, c, name);
            out.result = code_summary(c);
            out.lines = {"size: " + std::to_string(c.size())};
        } else if (*verify) {
            out.command = "verify";
            Metric m = parse_metric(metric);
            out.params = {{"metric", metric_name(m)}, {"d", d}, {"file", input}};
            auto c = read_code_file(input);
            auto rep = verify_code(c, m, d, opt_w());
            out.add("result", rep.pass ? "pass" : "fail");
            out.add("size", rep.size);
            out.add("min_distance", rep.dmin ? json(*rep.dmin) : json("inf"));
            if (rep.weight) out.add("weight", *rep.weight);
            out.print();
            return rep.pass ? 0 : 1;
        } else if (*oracle) {
            out.command = "oracle";
            SearchBudget budget;
            budget.time_limit_s = time_limit;
            OracleResult res;
            if (*o_max) {
                Metric m = parse_metric(metric);
                out.params = {{"oracle", "max-code"}, {"q", q}, {"n", n}, {"d", d}, {"metric", metric_name(m)}};
                if (w >= 0) out.params["w"] = w;
                res = max_code(static_cast<int>(q), static_cast<int>(n), d, m, opt_w(), budget);
            } else {
                out.params = {{"oracle", "alpha-circular"}, {"q", q}, {"d", d}, {"n", n}};
                res = alpha_circular(static_cast<int>(q), static_cast<int>(d), static_cast<int>(n), budget);
            }
            out.add("size", res.size);
            out.add("exact", res.exact);
            json wit = json::array();
            for (const auto& word : res.witness.words()) {
                std::string s;
                for (int x : word) s += (res.witness.q() <= 10 ? std::to_string(x) : std::to_string(x) + ",");
                wit.push_back(s);
            }
            out.certificate["witness"] = wit;
            out.certificate["nodes"] = res.nodes;
        } else if (*orbits) {
            out.command = "orbits";
            Family f = parse_family(family);
            out.params = {{"family", family}, {"q", q}, {"n", n}, {"d", d}};
            if (w >= 0) out.params["w"] = w;
            auto p = generate(f, static_cast<int>(q), static_cast<int>(n), static_cast<int>(d),
                              w >= 0 ? std::optional<int>(static_cast<int>(w)) : std::nullopt);
            out.add("variables", p.num_vars());
            out.add("blocks", p.blocks.size());
        } else if (*adual) {
            out.command = "analyze-dual";
            out.params = {{"program", program_path}, {"dual", dual_path}, {"lower_bound", lower_bound},
                          {"code_size", code_size}};
            std::ifstream pf(program_path);
            if (!pf) throw DomainError("cannot open " + program_path);
            auto p = parse_sdpa(pf);
            std::ifstream df(dual_path);
            if (!df) throw DomainError("cannot open " + dual_path);
            auto x = read_dual(p, df);
            auto rep = analyze_dual(p, x, lower_bound, code_size);
            json keys = json::array();
            for (int v : rep.forbidden) keys.push_back(p.vars[v].key.to_string());
            out.add("forbidden", keys);
            out.add("dual_objective", fmt12(rep.dual_objective));
        }
        out.print();
        return 0;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

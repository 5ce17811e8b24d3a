// Acceptance runner: `acceptance N` checks criterion N and prints one
// PASS/FAIL line. Exit status is 0 on PASS.
#include "codebounds/classical.hpp"
#include "codebounds/constructions.hpp"
#include "codebounds/delsarte.hpp"
#include "codebounds/oracle.hpp"
#include "codebounds/ptau.hpp"
#include "codebounds/reduction.hpp"
#include "codebounds/sdp.hpp"
#include "codebounds/shannon.hpp"
#include "codebounds/tableau.hpp"

#include <Eigen/Dense>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cb;

namespace {

// Pinned tolerances and time limits (seconds).
constexpr double kThetaTol = 1e-9;
constexpr double kObjectiveTol = 1e-9;
constexpr double kPsdTol = 1e-9;
constexpr double kLimitDelsarteHamming = 1.0;
constexpr double kLimitDelsarteJohnson = 5.0;
constexpr double kLimitConstructions = 30.0;
constexpr double kLimitCircular = 60.0;
constexpr double kLimitVariableCounts = 600.0;
constexpr double kLimitProperties = 600.0;
constexpr double kLimitOracle = 600.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const Integer& z) { return to_string(z); }

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream o;
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    return o.str();
}

// ---------------------------------------------------------------- 1
void c1(Report& r) {
    struct Row {
        long q, n, d, value;
    };
    const Row rows[] = {{4, 6, 3, 179},  {4, 7, 3, 614},  {4, 7, 4, 179}, {5, 7, 4, 625},
                        {5, 7, 5, 125},  {5, 8, 6, 75},   {5, 9, 6, 375}, {5, 11, 6, 9375},
                        {4, 9, 6, 128},  {4, 11, 8, 64}, {4, 12, 8, 242}, {3, 16, 11, 33}};
    for (const auto& x : rows) {
        auto t0 = Clock::now();
        auto res = delsarte_hamming(x.q, x.n, x.d);
        const double dt = since(t0);
        const std::string tag = "D_" + std::to_string(x.q) + "(" + std::to_string(x.n) + "," + std::to_string(x.d) + ")";
        r.check(res.floor == x.value, tag + " = " + str(res.floor) + ", expected " + std::to_string(x.value));
        r.check(res.solution.certificate_ok && verify_certificate(res.lp, res.solution), tag + " certificate");
        r.check(dt < kLimitDelsarteHamming, tag + " took " + std::to_string(dt) + " s");
    }
}

// ---------------------------------------------------------------- 2
void c2(Report& r) {
    struct Row {
        long n, d, w, value;
    };
    const Row rows[] = {{17, 6, 7, 249}, {19, 6, 8, 751},  {25, 8, 8, 948},
                        {22, 8, 10, 758}, {22, 8, 11, 805}, {22, 10, 10, 82}};
    for (const auto& x : rows) {
        auto t0 = Clock::now();
        auto res = delsarte_johnson(x.n, x.d, x.w);
        const double dt = since(t0);
        const std::string tag =
            "D(" + std::to_string(x.n) + "," + std::to_string(x.d) + "," + std::to_string(x.w) + ")";
        r.check(res.floor == x.value, tag + " floor " + str(res.floor) + ", expected " + std::to_string(x.value));
        r.check(res.solution.certificate_ok && verify_certificate(res.lp, res.solution), tag + " certificate");
        r.check(dt < kLimitDelsarteJohnson, tag + " took " + std::to_string(dt) + " s");
    }
}

// ---------------------------------------------------------------- 3
void c3(Report& r) {
    const long want[] = {0, 0, 1, 3, 6, 10, 8, 7, 7, 8, 10};
    std::vector<std::string> got;
    for (long k = 15, i = 0; k >= 5; --k, ++i) {
        const Integer h = h_value(5, 7, 6, k);
        got.push_back(str(h));
        r.check(h == want[i], "h(5,7,6," + std::to_string(k) + ") = " + str(h));
    }
    r.note("h = " + join(got));
}

// ---------------------------------------------------------------- 4
void c4(Report& r) {
    struct Row {
        long q, n, d, value;
        const char* m;
        const char* rr;
    };
    for (const auto& x : {Row{5, 8, 6, 70, "3", "4"}, Row{4, 11, 8, 60, "4", "3"}}) {
        auto b = divisibility_bound(x.q, x.n, x.d);
        const std::string tag = "A_" + std::to_string(x.q) + "(" + std::to_string(x.n) + "," + std::to_string(x.d) + ")";
        if (!b) {
            r.check(false, tag + " divisibility bound not applicable");
            continue;
        }
        r.check(b->value == x.value, tag + " <= " + str(b->value));
        r.check(b->certificate.count("m") && b->certificate.at("m") == x.m, tag + " m");
        r.check(b->certificate.count("r") && b->certificate.at("r") == x.rr, tag + " r");
    }
}

// ---------------------------------------------------------------- 5
void c5(Report& r) {
    auto p = plotkin(5, 7, 6);
    r.check(p.has_value() && p->value == 15, "A_5(7,6) Plotkin bound");
}

// ---------------------------------------------------------------- 6
void c6(Report& r) {
    auto t0 = Clock::now();
    auto g = golay_extended();
    r.check(g.size() == 4096, "extended Golay size");
    r.check(min_distance(Metric::Hamming, g) == 8L, "extended Golay d_min");

    std::vector<long> profile(23, 0);
    const long weights[] = {0, 7, 8, 11, 12, 15, 16};
    const long counts[] = {1, 176, 330, 672, 616, 176, 77};
    for (int i = 0; i < 7; ++i) profile[weights[i]] = counts[i];
    r.check(weight_distribution(golay_perfect_shortened(1)) == profile, "once-shortened weight profile");

    std::vector<Rational> dd(21, 0);
    dd[0] = 1;
    dd[8] = 130;
    dd[12] = 120;
    dd[16] = 5;
    r.check(distance_distribution(golay_shortened(4)) == dd, "quadruply shortened distance distribution");

    auto lee = lee_5_7_9();
    bool equi = lee.size() == 15;
    for (std::size_t i = 0; i < lee.size(); ++i)
        for (std::size_t j = i + 1; j < lee.size(); ++j) equi = equi && distance(Metric::Lee, 5, lee[i], lee[j]) == 9;
    r.check(equi, "lee_5_7_9 equidistant 9");
    bool balanced = true;
    for (int c = 0; c < 7; ++c) {
        std::vector<int> cnt(5, 0);
        for (const auto& w : lee.words()) ++cnt[w[c]];
        for (int s = 0; s < 5; ++s) balanced = balanced && cnt[s] == 3;
    }
    r.check(balanced, "lee_5_7_9 column balance");
    auto l6 = lee_6_4_6();
    r.check(l6.size() == 18 && min_distance(Metric::Lee, l6) == 6L, "lee_6_4_6");

    int good = 0;
    for (auto m : coset20_table_masks()) {
        auto c = coset20(m);
        bool ok = c.size() == 256 && c.n() == 20 && min_distance(Metric::Hamming, c) == 8L;
        auto a = distance_distribution(c);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != 0 && i % 4) ok = false;
        good += ok;
    }
    r.check(coset20_table_masks().size() == 15 && good == 15, "coset codes valid: " + std::to_string(good) + "/15");

    auto words = net_example_words();
    auto net = net_from_words(3, words);
    r.check(net.incidence == net_example_incidence(), "net incidence matches the example");
    r.check(check_net(net).ok(), "net axioms");
    r.check(code_from_net(net) == Code(3, 3, words), "net round trip");
    const double dt = since(t0);
    r.check(dt < kLimitConstructions, "constructions took " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- 7
void c7(Report& r) {
    auto t0 = Clock::now();
    auto c = c7_367();
    r.check(c.size() == 367 && verify_code(c, Metric::LeeInf, 2).pass, "c7_367 independent in C_7^5");
    auto s = independent_382();
    r.check(s.size() == 382 && verify_code(s, Metric::LeeInf, 108).pass, "382-set Lee-infinity distance >= 108");
    for (long rr = 3; rr <= 5; ++rr)
        for (long n = 1; n <= 4; ++n) {
            auto cc = circular_construction(rr, n);
            const bool ok = Integer(static_cast<long>(cc.size())) == qn(rr, n) &&
                            verify_code(cc, Metric::LeeInf, qn(rr, n - 1).get_si()).pass;
            r.check(ok, "circular_construction(" + std::to_string(rr) + "," + std::to_string(n) + ")");
        }
    auto p = c7_pipeline(c7_default_shift(), c7_default_divisor());
    r.note("pipeline " + std::to_string(p.after_removal) + "/" + std::to_string(p.residual_vertices) + "/" +
           std::to_string(p.residual_edges) + "/+" + std::to_string(p.added) + " -> " + std::to_string(p.final_size));
    r.check(p.after_removal == 327, "|M| = " + std::to_string(p.after_removal));
    r.check(p.residual_vertices == 71, "residual vertices " + std::to_string(p.residual_vertices));
    r.check(p.residual_edges == 85, "residual edges " + std::to_string(p.residual_edges));
    r.check(p.added == 40 && p.extension_exact, "extension adds " + std::to_string(p.added));
    r.check(p.final_size == 367 && verify_code(p.result, Metric::LeeInf, 2).pass, "pipeline result");
    const double dt = since(t0);
    r.check(dt < kLimitCircular, "circular checks took " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- 8
void c8(Report& r) {
    auto t0 = Clock::now();
    struct Row {
        int q, d;
        long counts[5];
    };
    const Row rows[] = {{5, 2, {2, 9, 48, 214, 799}}, {7, 2, {3, 43, 423, 3161, 19023}}, {7, 3, {2, 12, 137, 1316, 9745}}};
    for (const auto& x : rows) {
        std::vector<long> got;
        for (int n = 1; n <= 5; ++n) {
            const long v = static_cast<long>(gen_leeinf_triple(x.q, n, x.d).vars.size());
            got.push_back(v);
            r.check(v == x.counts[n - 1], "leeinf(" + std::to_string(x.q) + "," + std::to_string(n) + "," +
                                              std::to_string(x.d) + ") variables " + std::to_string(v) +
                                              ", expected " + std::to_string(x.counts[n - 1]));
        }
        r.note("q=" + std::to_string(x.q) + " d=" + std::to_string(x.d) + ": " + join(got));
    }
    const double dt = since(t0);
    r.check(dt < kLimitVariableCounts, "variable counts took " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- 9
void c9(Report& r) {
    const double t5 = theta_circular(2, 5), t7 = theta_circular(2, 7);
    r.check(std::abs(t5 - std::sqrt(5.0)) <= kThetaTol, "theta(C_5)");
    r.check(t7 > 3.3176 && t7 < 3.3177, "theta(C_7)");
    for (long ratio : {3L, 4L, 5L})
        for (long d = 1; d <= 5; ++d) {
            const double t = theta_circular(d, ratio * d);
            r.check(std::abs(t - ratio) <= kThetaTol,
                    "theta(C_{" + std::to_string(d) + "," + std::to_string(ratio * d) + "})");
        }
    char buf[96];
    std::snprintf(buf, sizeof buf, "theta(C_5)=%.12g theta(C_7)=%.12g", t5, t7);
    r.note(buf);
}

// ---------------------------------------------------------------- 10
int ipow(int b, int e) {
    int v = 1;
    while (e-- > 0) v *= b;
    return v;
}

void c10_p(Report& r) {
    std::mt19937 rng(20240101);
    int agree = 0;
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 3);
        auto shapes = partitions(n, m);
        const auto& lam = shapes[rng() % shapes.size()];
        auto tabs = semistandard_tableaux(lam, m);
        const auto& tau = tabs[rng() % tabs.size()];
        const auto& sigma = tabs[rng() % tabs.size()];
        auto a = p_tau_sigma(tau, sigma, m, PAlgorithm::Count);
        auto b = p_tau_sigma(tau, sigma, m, PAlgorithm::Diffop);
        auto c = p_tau_sigma(tau, sigma, m, PAlgorithm::Brute);
        agree += (a == b && b == c);
    }
    r.check(agree == 200, "(a) p triple agreement " + std::to_string(agree) + "/200");
}

void c10_rsk(Report& r) {
    bool ok = true;
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= 8; ++n) {
            Integer s = 0;
            for (const auto& lam : partitions(n, n)) {
                Integer k = static_cast<long>(semistandard_tableaux(lam, m).size());
                s += k * k;
            }
            ok = ok && s == binom(m * m + n - 1, n);
        }
    r.check(ok, "(b) RSK identity");
}

void c10_dense(Report& r) {
    std::mt19937 rng(7);
    std::normal_distribution<double> g;
    int agree = 0, psd = 0, total = 0;
    const std::pair<int, int> qn_list[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
    for (int t = 0; t < 50; ++t) {
        const auto [q, n] = qn_list[t % 6];
        ReductionInput in;
        Segment s;
        s.length = n;
        s.action = base_action_for(RepKind::SqSingle, q);
        s.rep = rep_set(RepKind::SqSingle, q);
        in.segments.push_back(s);
        in.symmetric = false;
        auto layout = make_layout(in);
        const auto& cls = layout.classes[0];
        const int D = ipow(q, n);
        std::map<Monomial, int> ids;
        std::vector<int> id(static_cast<std::size_t>(D) * D);
        for (int x = 0; x < D; ++x)
            for (int y = 0; y < D; ++y) {
                Monomial mono;
                for (int i = 0, a = x, b = y; i < n; ++i, a /= q, b /= q)
                    mono.push_back(static_cast<std::uint16_t>(cls.of(a % q, b % q)));
                std::sort(mono.begin(), mono.end());
                id[static_cast<std::size_t>(x) * D + y] = ids.emplace(mono, static_cast<int>(ids.size())).first->second;
            }
        Eigen::MatrixXd V(D, 2);
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < 2; ++j) V(i, j) = g(rng);
        Eigen::MatrixXd G = V * V.transpose();
        std::vector<double> z(ids.size(), 0), cnt(ids.size(), 0);
        for (int x = 0; x < D; ++x)
            for (int y = 0; y < D; ++y) {
                z[id[static_cast<std::size_t>(x) * D + y]] += G(x, y);
                cnt[id[static_cast<std::size_t>(x) * D + y]] += 1;
            }
        for (std::size_t i = 0; i < z.size(); ++i) z[i] /= cnt[i];
        Eigen::MatrixXd A(D, D);
        for (int x = 0; x < D; ++x)
            for (int y = 0; y < D; ++y) A(x, y) = z[id[static_cast<std::size_t>(x) * D + y]];
        const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues()(0);
        const double scale = std::max(1.0, A.norm());
        const double shift = -lmin + (t % 2 ? -0.05 : 0.05) * scale;
        z[id[0]] += shift; // the all-diagonal class
        for (int x = 0; x < D; ++x) A(x, x) += shift;
        const bool dense = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(A).eigenvalues()(0) >= -kPsdTol * scale;
        auto blocks = reduce<double>(in, layout, [&](const Monomial& m) { return ids.at(m); }, false);
        bool reduced = true;
        for (const auto& b : blocks) {
            Eigen::MatrixXd M(b.dim, b.dim);
            for (int i = 0; i < b.dim; ++i)
                for (int j = 0; j < b.dim; ++j) {
                    double v = b.at(i, j).constant;
                    for (const auto& [k, c] : b.at(i, j).terms) v += c * z[k];
                    M(i, j) = v;
                }
            if (Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(M).eigenvalues()(0) < -kPsdTol * std::max(1.0, M.norm()))
                reduced = false;
        }
        agree += dense == reduced;
        psd += dense;
        ++total;
    }
    r.check(agree == total && psd > 0 && psd < total,
            "(c) dense PSD equivalence " + std::to_string(agree) + "/" + std::to_string(total) + ", PSD cases " +
                std::to_string(psd));
}

Code from_rows(int q, const std::vector<Word>& w) { return Code(q, static_cast<int>(w.front().size()), w); }

void c10_eval(Report& r) {
    struct Case {
        std::string name;
        SdpProgram program;
        Code code;
    };
    std::vector<Case> cases;
    std::set<std::string> families;
    cases.push_back({"hamming4 repetition (2,5,5)", gen_hamming_quadruple(2, 5, 5),
                     from_rows(2, {Word(5, 0), Word(5, 1)})});
    cases.push_back({"hamming4 (3,4,3)", gen_hamming_quadruple(3, 4, 3), max_code(3, 4, 3, Metric::Hamming).witness});
    cases.push_back({"hamming4 (2,6,3)", gen_hamming_quadruple(2, 6, 3), max_code(2, 6, 3, Metric::Hamming).witness});
    {
        std::vector<Word> d;
        for (const auto& s : coset20_generators()) {
            Word w;
            for (char ch : s) w.push_back(ch == '0');
            d.push_back(w);
        }
        cases.push_back({"cw-a3 (20,8,4) complemented D", gen_cw(20, 8, 4, Family::CwA3), from_rows(2, d)});
        cases.push_back({"cw-b4 (20,8,4) complemented D", gen_cw(20, 8, 4, Family::CwB4), from_rows(2, d)});
    }
    cases.push_back({"cw-a4 (9,4,3)", gen_cw(9, 4, 3, Family::CwA4), max_code(2, 9, 4, Metric::Hamming, 3L).witness});
    cases.push_back({"cw-b4 (8,4,4)", gen_cw(8, 4, 4, Family::CwB4), max_code(2, 8, 4, Metric::Hamming, 4L).witness});
    cases.push_back({"lee3 (6,4,6) lee_6_4_6", gen_lee_triple(6, 4, 6), lee_6_4_6()});
    cases.push_back({"lee3 (5,3,3)", gen_lee_triple(5, 3, 3), max_code(5, 3, 3, Metric::Lee).witness});
    {
        std::vector<Word> w;
        for (int t = 0; t < 14; ++t) w.push_back({t, 3 * t % 14, 9 * t % 14});
        cases.push_back({"leeinf3 (14,3,5) t(1,3,9)", gen_leeinf_triple(14, 3, 5), from_rows(14, w)});
    }
    cases.push_back({"leeinf3 (5,2,2) circular r=3", gen_leeinf_triple(5, 2, 2), circular_construction(3, 2)});
    cases.push_back({"leeinf3 (11,2,3) circular r=4", gen_leeinf_triple(11, 2, 3), circular_construction(4, 2)});
    int ok = 0;
    for (const auto& c : cases) {
        auto e = evaluate_at_code(c.program, c.code);
        const bool good = e.feasible && std::abs(e.objective - static_cast<double>(c.code.size())) <=
                                            kObjectiveTol * std::max(1.0, static_cast<double>(c.code.size()));
        r.check(good, "(d) " + c.name + " objective " + std::to_string(e.objective));
        if (good) {
            ++ok;
            families.insert(c.program.family.substr(0, 3) == "cw-" ? "cw" : c.program.family);
        }
    }
    r.check(ok >= 10 && families.size() == 4,
            "(d) feasible codes " + std::to_string(ok) + ", families " + std::to_string(families.size()));
}

void c10_delsarte(Report& r) {
    int ok = 0, total = 0;
    for (int q = 2; q <= 5; ++q)
        for (int n = 1; n <= 8; ++n)
            for (int d = 1; d <= n; ++d) {
                auto sol = solve_lp_exact(gen_delsarte_via_reduction(q, n, d));
                ok += sol.status == LpStatus::Optimal && sol.optimum == delsarte_hamming(q, n, d).value;
                ++total;
            }
    r.check(ok == total, "(e) Delsarte via reduction " + std::to_string(ok) + "/" + std::to_string(total));
}

void c10_sdpa(Report& r) {
    int ok = 0, total = 0;
    for (const auto& p : {gen_hamming_quadruple(2, 4, 2), gen_hamming_quadruple(3, 3, 2), gen_cw(8, 4, 3, Family::CwA4),
                          gen_cw(9, 4, 4, Family::CwB4), gen_lee_triple(5, 3, 3), gen_leeinf_triple(7, 2, 2)}) {
        const std::string s = emit_sdpa(p);
        ok += emit_sdpa(parse_sdpa_string(s)) == s;
        ++total;
    }
    r.check(ok == total, "(f) SDPA round trip " + std::to_string(ok) + "/" + std::to_string(total));
}

void c10(Report& r) {
    auto t0 = Clock::now();
    const std::pair<const char*, void (*)(Report&)> parts[] = {{"a", c10_p},    {"b", c10_rsk},      {"c", c10_dense},
                                                               {"d", c10_eval}, {"e", c10_delsarte}, {"f", c10_sdpa}};
    for (const auto& [name, fn] : parts) {
        auto t1 = Clock::now();
        fn(r);
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%s) %.1fs", name, since(t1));
        r.note(buf);
    }
    const double dt = since(t0);
    r.check(dt < kLimitProperties, "property suites took " + std::to_string(dt) + " s");
}

// ---------------------------------------------------------------- 11
void c11(Report& r) {
    auto t0 = Clock::now();
    const SearchBudget budget{100'000'000, 120.0};
    auto a5 = alpha_circular(5, 2, 2, budget), a7 = alpha_circular(7, 2, 2, budget);
    r.check(a5.exact && a5.size == 5, "alpha(C_5^2) = " + std::to_string(a5.size));
    r.check(a7.exact && a7.size == 10, "alpha(C_7^2) = " + std::to_string(a7.size));

    int instances = 0;
    auto tag3 = [](const char* f, long a, long b, long c) {
        return std::string(f) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    };
    auto close = [](double x, double y) { return std::abs(x - y) <= kObjectiveTol * std::max(1.0, y); };

    struct H {
        int q, n, d;
        long a;
    };
    const H hamming[] = {{2, 6, 3, 8},  {2, 7, 3, 16}, {2, 8, 4, 16}, {2, 8, 5, 4},  {2, 10, 6, 6}, {2, 12, 8, 4},
                         {2, 9, 6, 4},  {3, 4, 3, 9},  {3, 5, 3, 18}, {3, 6, 4, 18}, {3, 5, 4, 6},  {3, 6, 5, 4},
                         {4, 4, 3, 16}, {4, 5, 4, 16}, {5, 5, 5, 5},  {3, 4, 2, 27}, {5, 4, 3, 25}};
    for (const auto& x : hamming) {
        const std::string tag = tag3("A_q", x.q, x.n, x.d);
        auto o = max_code(x.q, x.n, x.d, Metric::Hamming, std::nullopt, budget);
        r.check(o.exact && o.size == x.a, tag + " oracle " + std::to_string(o.size));
        r.check(delsarte_hamming(x.q, x.n, x.d).floor >= o.size, tag + " Delsarte");
        if (auto p = plotkin(x.q, x.n, x.d)) r.check(p->value >= o.size, tag + " Plotkin");
        if (auto v = divisibility_bound(x.q, x.n, x.d)) r.check(v->value >= o.size, tag + " divisibility");
        if (ipow(x.q, x.n) <= 256) {
            auto e = evaluate_at_code(gen_hamming_quadruple(x.q, x.n, x.d), o.witness);
            r.check(e.feasible && close(e.objective, static_cast<double>(o.size)), tag + " quadruple program at witness");
        }
        ++instances;
    }
    struct W {
        int n, d, w;
        long a;
    };
    const W cw[] = {{9, 4, 3, 12}, {12, 6, 4, 9}, {10, 6, 5, 6}, {8, 4, 3, 8},
                    {9, 4, 4, 18}, {10, 6, 4, 5}, {7, 4, 3, 7},  {9, 6, 4, 3}};
    for (const auto& x : cw) {
        const std::string tag = tag3("A", x.n, x.d, x.w);
        auto o = max_code(2, x.n, x.d, Metric::Hamming, x.w, budget);
        r.check(o.exact && o.size == x.a, tag + " oracle " + std::to_string(o.size));
        r.check(delsarte_johnson(x.n, x.d, x.w).floor >= o.size, tag + " Delsarte");
        auto e = evaluate_at_code(gen_cw(x.n, x.d, x.w, Family::CwB4), o.witness);
        r.check(e.feasible && close(e.objective, static_cast<double>(o.size)), tag + " cw-b4 program at witness");
        ++instances;
    }
    const H lee[] = {{5, 3, 3, 15}, {7, 3, 5, 9}, {6, 3, 4, 14}, {6, 4, 6, 18}, {5, 4, 5, 9}};
    for (const auto& x : lee) {
        const std::string tag = tag3("A^L_q", x.q, x.n, x.d);
        auto o = max_code(x.q, x.n, x.d, Metric::Lee, std::nullopt, budget);
        r.check(o.exact && o.size == x.a, tag + " oracle " + std::to_string(o.size));
        auto e = evaluate_at_code(gen_lee_triple(x.q, x.n, x.d), o.witness);
        r.check(e.feasible && close(e.objective, static_cast<double>(o.size)), tag + " lee3 program at witness");
        ++instances;
    }
    struct C {
        int q, d, n;
        long a;
    };
    const C circ[] = {{5, 2, 2, 5},  {7, 2, 2, 10}, {5, 2, 3, 10}, {6, 2, 3, 27}, {9, 2, 2, 18},
                      {11, 2, 2, 27}, {10, 3, 2, 10}, {8, 3, 3, 12}, {7, 3, 3, 8}};
    for (const auto& x : circ) {
        const std::string tag = tag3("alpha", x.q, x.d, x.n);
        auto o = alpha_circular(x.q, x.d, x.n, budget);
        r.check(o.exact && o.size == x.a, tag + " oracle " + std::to_string(o.size));
        const double th = std::pow(theta_circular(x.d, x.q), x.n);
        r.check(th + 1e-9 >= static_cast<double>(o.size), tag + " theta^n");
        long rr = 3;
        while (Rational(x.q, x.d) >= rr) ++rr;
        r.check(qn(rr, x.n) >= o.size, tag + " q_n with r = " + std::to_string(rr));
        if (ipow(x.q, x.n) <= 1000) {
            auto e = evaluate_at_code(gen_leeinf_triple(x.q, x.n, x.d), o.witness);
            r.check(e.feasible && close(e.objective, static_cast<double>(o.size)), tag + " leeinf3 program at witness");
        }
        ++instances;
    }
    r.check(instances >= 30, "instances " + std::to_string(instances));
    r.note(std::to_string(instances) + " oracle instances");
    const double dt = since(t0);
    r.check(dt < kLimitOracle, "oracle checks took " + std::to_string(dt) + " s");
}

const std::map<int, std::pair<std::string, void (*)(Report&)>> kCriteria = {
    {1, {"Delsarte Hamming values", c1}},
    {2, {"Delsarte Johnson floors", c2}},
    {3, {"h table", c3}},
    {4, {"divisibility bounds", c4}},
    {5, {"Plotkin bound", c5}},
    {6, {"constructions", c6}},
    {7, {"circular constructions and C7 pipeline", c7}},
    {8, {"Lee-infinity variable counts", c8}},
    {9, {"theta closed form", c9}},
    {10, {"property suites", c10}},
    {11, {"oracle cross-checks", c11}},
};

int run(int id) {
    auto it = kCriteria.find(id);
    if (it == kCriteria.end()) {
        std::fprintf(stderr, "unknown criterion %d\n", id);
        return 2;
    }
    Report rep;
    auto t0 = Clock::now();
    try {
        it->second.second(rep);
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("exception: ") + e.what());
    }
    const double dt = since(t0);
    for (const auto& n : rep.notes) std::printf("  note: %s\n", n.c_str());
    for (const auto& f : rep.failures) std::printf("  fail: %s\n", f.c_str());
    std::printf("criterion %d (%s): %s [%.2fs]\n", id, it->second.first.c_str(), rep.failures.empty() ? "PASS" : "FAIL",
                dt);
    return rep.failures.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        int bad = 0;
        for (const auto& [id, _] : kCriteria) bad += run(id) != 0;
        return bad ? 1 : 0;
    }
    return run(std::atoi(argv[1]));
}

#include "codebounds/code.hpp"
#include "codebounds/oracle.hpp"
#include "codebounds/shannon.hpp"
#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace cb;

TEST_SUITE("shannon") {

TEST_CASE("theta closed form") {
    CHECK(std::abs(theta_circular(2, 5) - std::sqrt(5.0)) < 1e-9);
    CHECK(theta_circular(2, 7) > 3.3176);
    CHECK(theta_circular(2, 7) < 3.3177);
    CHECK(std::abs(theta_circular(3, 9) - 3) < 1e-9);
    for (long d = 1; d <= 6; ++d)
        for (long t = 2; t <= 5; ++t) CHECK(std::abs(theta_circular(d, t * d) - t) < 1e-9);
    for (long q = 5; q <= 101; q += 2) {
        const double c = std::cos(std::numbers::pi / q);
        CHECK(std::abs(theta_circular(2, q) - q * c / (1 + c)) < 1e-9);
    }
    CHECK_THROWS_AS(theta_circular(3, 5), DomainError);
    CHECK(CircularParams(2, 7).ratio() == Rational(7, 2));
}

TEST_CASE("q_n sequence") {
    const long want[] = {1, 2, 5, 14, 41};
    for (long n = 0; n <= 4; ++n) CHECK(qn(3, n) == want[n]);
    for (long r = 3; r <= 9; ++r)
        for (long n = 1; n <= 12; ++n) {
            CHECK(qn(r, n) == r * qn(r, n - 1) - 1);
            CHECK(Rational(qn(r, n), qn(r, n - 1)) < r);
        }
    CHECK(qn(4, 2) == 11);
    CHECK_THROWS_AS(qn(2, 3), DomainError);
}

TEST_CASE("circular construction") {
    for (long r = 3; r <= 5; ++r)
        for (long n = 1; n <= 4; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            auto c = circular_construction(r, n);
            const long q = qn(r, n).get_si();
            CHECK(static_cast<long>(c.size()) == q);
            CHECK(c.q() == q);
            auto v = verify_code(c, Metric::LeeInf, qn(r, n - 1).get_si());
            CHECK(v.pass);
            for (int col = 0; col < n; ++col) {
                std::vector<int> seen(q, 0);
                for (const auto& w : c.words()) ++seen[w[col]];
                for (long s = 0; s < q; ++s) CHECK(seen[s] == 1);
            }
        }
    auto small = circular_construction(3, 1);
    CHECK(small == Code(2, 1, {{0}, {1}}));
    auto a14 = circular_construction(3, 3);
    CHECK(a14.contains({1, 3, 9}));
    CHECK_THROWS_AS(circular_construction(2, 2), DomainError);
}

TEST_CASE("upper bound check") {
    for (long r = 3; r <= 5; ++r) {
        auto ok = upper_bound_check(r, 2);
        REQUIRE(ok.has_value());
        CHECK(*ok);
    }
    CHECK(alpha_circular(5, 2, 2).size == qn(3, 2));
    CHECK_FALSE(upper_bound_check(5, 4).has_value());
}

TEST_CASE("scaling d and q together keeps alpha") {
    struct Inst {
        int q, d, n;
    };
    for (auto [q, d, n] : {Inst{5, 2, 2}, Inst{7, 2, 2}, Inst{8, 3, 2}, Inst{3, 1, 3}}) {
        auto base = alpha_circular(q, d, n);
        REQUIRE(base.exact);
        for (int t = 2; t <= 3; ++t) {
            if (std::pow(t * q, n) > 2e4) continue;
            auto scaled = alpha_circular(t * q, t * d, n, {50'000'000, 60.0});
            if (!scaled.exact) continue;
            CHECK(scaled.size == base.size);
        }
    }
}

TEST_CASE("listed and derived C7 sets") {
    auto c = c7_367();
    CHECK(c.size() == 367);
    CHECK(c.q() == 7);
    CHECK(c.n() == 5);
    CHECK(verify_code(c, Metric::LeeInf, 2).pass);
    CHECK(std::pow(367.0, 0.2) > 3.2578);
    auto s = independent_382();
    CHECK(s.size() == 382);
    CHECK(verify_code(s, Metric::LeeInf, 108).pass);
}

TEST_CASE("pipeline") {
    auto rep = c7_pipeline(c7_default_shift(), c7_default_divisor());
    CHECK(rep.start == 382);
    CHECK(rep.after_removal == 327);
    CHECK(rep.residual_vertices == 71);
    CHECK(rep.residual_edges == 85);
    CHECK(rep.added == 40);
    CHECK(rep.final_size == 367);
    CHECK(rep.extension_exact);
    CHECK(verify_code(rep.result, Metric::LeeInf, 2).pass);

    auto collapse = c7_pipeline(Word(5, 0), Rational(1000));
    CHECK(collapse.mapped_distinct == 1);
    CHECK(collapse.after_removal <= 1);
    CHECK_FALSE(collapse.extension_exact);
    CHECK(collapse.final_size == collapse.after_removal);
    CHECK_THROWS_AS(c7_pipeline(Word(5, 0), Rational(0)), DomainError);
}

}

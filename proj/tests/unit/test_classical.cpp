#include "codebounds/classical.hpp"
#include "codebounds/constructions.hpp"
#include "codebounds/oracle.hpp"
#include "doctest.h"

using namespace cb;

TEST_SUITE("classical") {

TEST_CASE("plotkin") {
    CHECK(plotkin(5, 7, 6)->value == 15);
    CHECK(plotkin(2, 3, 3)->value == 2);
    CHECK_FALSE(plotkin(5, 5, 4).has_value());  // qd = (q-1)n
    CHECK_FALSE(plotkin(2, 7, 3).has_value());
    CHECK_THROWS_AS(plotkin(1, 3, 3), DomainError);
}

TEST_CASE("shorten_bound") {
    auto p = *plotkin(5, 7, 6);
    CHECK(shorten_bound(5, 8, 6, p).value == 75);
    BoundResult one;
    one.value = 1;
    CHECK(shorten_bound(7, 3, 3, one).value == 7);
    BoundResult sixty;
    sixty.value = 60;
    CHECK(shorten_bound(4, 12, 8, sixty).value == 240);
}

TEST_CASE("h table for (5,7,6)") {
    const long want[] = {0, 0, 1, 3, 6, 10, 8, 7, 7, 8, 10};
    for (long k = 15, i = 0; k >= 5; --k, ++i) CHECK(h_value(5, 7, 6, k) == want[i]);
}

TEST_CASE("h identity at integral d") {
    // d = (q-1)m(n-1)/(qm-1) integral: h(q, n-1, d, qm-t) = (n-1-d) C(t,2).
    int checked = 0;
    for (long q = 2; q <= 7; ++q)
        for (long m = 1; m <= 6; ++m)
            for (long n = 2; n <= 40; ++n) {
                long num = (q - 1) * m * (n - 1), den = q * m - 1;
                if (num % den) continue;
                long d = num / den;
                for (long t = 0; t < q; ++t) {
                    CHECK(h_value(q, n - 1, d, q * m - t) == Integer(n - 1 - d) * binom(t, 2));
                    ++checked;
                }
            }
    CHECK(checked > 50);
}

TEST_CASE("divisibility bound") {
    auto a = divisibility_bound(5, 8, 6);
    REQUIRE(a);
    CHECK(a->value == 70);
    CHECK(a->certificate.at("m") == "3");
    CHECK(a->certificate.at("r") == "4");
    auto b = divisibility_bound(4, 11, 8);
    REQUIRE(b);
    CHECK(b->value == 60);
    CHECK(b->certificate.at("m") == "4");
    CHECK(b->certificate.at("r") == "3");
    for (long q : {5L, 9L, 13L}) {
        auto c = divisibility_bound(q, q + 3, q + 1);
        REQUIRE(c);
        CHECK(c->value == Integer(q * q * (q + 1) / 2 - q));
    }
}

TEST_CASE("plotkin_complete") {
    auto words = net_example_words();
    for (std::size_t drop = 0; drop < words.size(); ++drop) {
        std::vector<Word> rest;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (i != drop) rest.push_back(words[i]);
        auto full = plotkin_complete(Code(3, 3, rest), 2);
        CHECK(full == Code(3, 3, words));
        CHECK(*min_distance(Metric::Hamming, full) >= 2);
    }
    CHECK_THROWS_AS(plotkin_complete(Code(3, 3, words), 2), DomainError);
}

TEST_CASE("bounds dominate small oracle values") {
    struct Inst {
        int q, n, d;
    };
    for (auto [q, n, d] : {Inst{2, 3, 3}, Inst{2, 4, 3}, Inst{3, 3, 3}, Inst{3, 4, 3}, Inst{4, 3, 3}, Inst{2, 5, 4},
                           Inst{3, 3, 2}, Inst{5, 3, 3}}) {
        auto o = max_code(q, n, d, Metric::Hamming);
        REQUIRE(o.exact);
        if (auto p = plotkin(q, n, d)) CHECK(p->value >= o.size);
        if (auto v = divisibility_bound(q, n, d)) CHECK(v->value >= o.size);
    }
}

}

#include "codebounds/shannon.hpp"

#include "codebounds/oracle.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace cb {

namespace {

const char* const kC7Words =
    "02020 02112 02204 02306 02461 02553 03645 03040 03032 03124 03226 03311 "
    "03403 14144 14231 14323 14415 14510 15602 15064 15166 15251 15343 15430 "
    "15522 16614 16016 16101 16263 16355 16450 16542 10636 10021 10113 10205 "
    "10300 10462 10554 11656 11041 11033 11125 11220 11312 11404 11506 12661 "
    "12053 12145 12240 12232 12324 12426 12511 13603 13065 13160 13252 13344 "
    "13446 13431 24010 24102 24264 24366 24451 24543 25630 25022 25114 25216 "
    "25301 25463 25555 26650 26042 26034 26136 26221 26313 26405 26500 20662 "
    "20054 20156 20241 20233 20325 20420 20512 21604 21006 21161 21253 21345 "
    "21440 21432 22626 22011 22103 22265 22360 22452 22544 23631 23023 23115 "
    "23210 23302 23464 23566 34130 34222 34314 34416 34501 35663 35055 35150 "
    "35242 35234 35336 35421 35513 36605 36000 36162 36254 36356 36441 36433 "
    "30620 30012 30104 30206 30361 30453 30545 31632 31024 31126 31211 31303 "
    "31465 31560 32652 32044 32131 32223 32315 32410 32502 33664 33066 33151 "
    "33243 33235 33330 33422 44616 44001 44163 44255 44350 44442 44434 44536 "
    "45621 45013 45105 45200 45362 45454 45556 46633 46025 46120 46212 46304 "
    "46406 46561 40653 40045 40132 40224 40326 40411 40503 41665 41060 41152 "
    "41244 41331 41423 41515 42610 42002 42164 42266 42351 42443 42435 43622 "
    "43014 43116 43201 43363 43455 43550 54634 54036 54121 54213 54305 54400 "
    "54562 55654 55056 55141 55133 55225 55320 55412 55504 56606 56061 56153 "
    "56245 56332 56424 56526 50611 50003 50165 50260 50352 50444 51623 51015 "
    "51110 51202 51364 51551 52643 52635 52030 52122 52214 53655 53134 64332 "
    "64424 64526 65611 65003 65260 65352 65444 65546 66623 66110 66202 66364 "
    "66466 66551 60643 60645 60030 60122 60214 60316 60401 60563 61050 61142 "
    "61134 61236 61321 61413 62600 62062 62154 62256 62341 62333 62520 63612 "
    "63004 63106 63261 63353 63445 63540 64532 04026 04111 04203 04460 04552 "
    "05644 05031 05123 05310 05402 05564 06666 06051 06143 06230 06322 06414 "
    "06516 00601 00063 00155 00250 00342 00334 00436 01613 01100 01262 01354 "
    "01456 01541 02625 00521 01005 02533 03565 04052 04365 04624 04660 05046 "
    "05225 10534 14246 15435 22524 24615 24651 32046 34035 34043 36525 40040 "
    "41246 42530 43514 45641 50531 51456 52400 52563 53050 53142 53320 53412 "
    "56340 61505 62425 64154 64340 65105 66025 "
    ;

long to_long_checked(const Integer& v, const char* what) {
    if (!v.fits_slong_p()) throw DomainError(std::string(what) + " too large");
    return v.get_si();
}

} // namespace

CircularParams::CircularParams(long d_, long q_) : d(d_), q(q_) {
    if (d < 1 || q < 2 * d) throw DomainError("circular graph needs d >= 1 and q >= 2d");
}

double theta_circular(long d, long q) {
    CircularParams p(d, q);
    const double pi = std::numbers::pi;
    double sum = 0;
    for (long i = 0; i < d; ++i) {
        double prod = 1;
        for (long j = 1; j < d; ++j) {
            double c = std::cos(static_cast<double>((q * j) / d) * 2 * pi / q);
            prod *= (std::cos(2 * pi * i / d) - c) / (1 - c);
        }
        sum += prod;
    }
    return static_cast<double>(p.q) / p.d * sum;
}

Integer qn(long r, long n) {
    if (r < 3) throw DomainError("q_n needs r >= 3");
    if (n < 0) throw DomainError("q_n needs n >= 0");
    Integer rn = 1;
    for (long i = 0; i < n; ++i) rn *= r;
    return (1 + rn * (r - 2)) / (r - 1);
}

Code circular_construction(long r, long n) {
    if (n < 1) throw DomainError("construction needs n >= 1");
    const long q = to_long_checked(qn(r, n), "q_n");
    if (q > kMaxAlphabet) throw DomainError("q_n exceeds the alphabet limit");
    std::vector<Word> words;
    for (long t = 0; t < q; ++t) {
        Word w(n);
        long m = 1;
        for (long i = 0; i < n; ++i) {
            w[i] = static_cast<int>((t * m) % q);
            m = (m * r) % q;
        }
        words.push_back(std::move(w));
    }
    return Code(static_cast<int>(q), static_cast<int>(n), std::move(words));
}

Code independent_382() {
    std::vector<Word> words;
    for (long t = 0; t < 382; ++t) {
        Word w(5);
        long m = 1;
        for (int i = 0; i < 5; ++i) {
            w[i] = static_cast<int>((t * m) % 382);
            m = (m * 7) % 382;
        }
        words.push_back(std::move(w));
    }
    return Code(382, 5, std::move(words));
}

Code c7_367() {
    std::istringstream in(kC7Words);
    std::vector<Word> words;
    std::string s;
    while (in >> s) words.push_back(word_from_digits(s));
    return Code(7, 5, std::move(words));
}

Word c7_default_shift() { return {40, 123, 40, 123, 40}; }
Rational c7_default_divisor() { return Rational(109, 2); }

PipelineReport c7_pipeline(const Word& shift, const Rational& divisor) {
    if (divisor <= 0) throw DomainError("divisor must be positive");
    if (shift.size() != 5) throw DimensionError("shift must have length 5");
    const Code base = independent_382();
    PipelineReport rep;
    rep.start = static_cast<long>(base.size());

    std::vector<Word> mapped;
    for (const auto& w : base.words()) {
        Word m(5);
        for (int i = 0; i < 5; ++i) {
            long x = ((w[i] + shift[i]) % 382 + 382) % 382;
            m[i] = static_cast<int>(to_long_checked(floor_of(Rational(x) / divisor), "symbol") % 7);
        }
        mapped.push_back(std::move(m));
    }
    rep.mapped_distinct = static_cast<long>(std::set<Word>(mapped.begin(), mapped.end()).size());

    std::set<Word> kept;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        bool conflict = false;
        for (std::size_t j = 0; j < mapped.size() && !conflict; ++j)
            if (mapped[j] != mapped[i] && distance(Metric::LeeInf, 7, mapped[i], mapped[j]) < 2) conflict = true;
        if (!conflict) kept.insert(mapped[i]);
    }
    rep.after_removal = static_cast<long>(kept.size());

    const Code m(7, 5, std::vector<Word>(kept.begin(), kept.end()));
    rep.result = m;
    rep.final_size = rep.after_removal;
    // Words compatible with every kept word; too many of them means the
    // extension step is skipped and the report stops at |M|.
    long residual = 0;
    Word w(5, 0);
    for (int idx = 0; idx < 16807; ++idx) {
        for (int i = 4, r = idx; i >= 0; --i, r /= 7) w[i] = r % 7;
        bool free = true;
        for (const auto& u : m.words())
            if (distance(Metric::LeeInf, 7, u, w) < 2) {
                free = false;
                break;
            }
        residual += free;
    }
    rep.residual_vertices = residual;
    if (residual > kPipelineMaxResidual) return rep;
    auto ext = max_independent_extension(m, Metric::LeeInf, 2, kPipelineMaxResidual);
    rep.residual_vertices = ext.residual_vertices;
    rep.residual_edges = ext.residual_edges;
    rep.added = static_cast<long>(ext.added.size());
    rep.final_size = static_cast<long>(ext.code.size());
    rep.extension_exact = ext.exact;
    rep.result = ext.code;
    return rep;
}

std::optional<bool> upper_bound_check(long r, long n, const SearchBudget& budget) {
    if (n < 1) throw DomainError("upper bound check needs n >= 1");
    const Integer q = qn(r, n), d = qn(r, n - 1);
    Integer universe = 1;
    for (long i = 0; i < n; ++i) universe *= q;
    if (universe > kUpperCheckUniverse) return std::nullopt;
    auto res = alpha_circular(static_cast<int>(q.get_si()), static_cast<int>(d.get_si()), static_cast<int>(n), budget);
    if (!res.exact) return std::nullopt;
    return res.size <= q.get_si();
}

} // namespace cb

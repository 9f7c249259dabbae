#include <doctest.h>

#include <algorithm>

#include "thetacodes/codes.hpp"
#include "thetacodes/enumerators.hpp"
#include "thetacodes/error.hpp"
#include "thetacodes/parallel.hpp"
#include "thetacodes/search.hpp"
#include "thetacodes/theta.hpp"

using namespace thetacodes;

TEST_SUITE("search") {

TEST_CASE("next levels stay in the ring and skip inadmissible values") {
    auto ells = [](int p, int ell) {
        std::vector<std::int64_t> out;
        for (const auto& l : next_levels(Level::make(ell), p)) out.push_back(l.ell);
        return out;
    };
    CHECK(ells(2, 7) == std::vector<std::int64_t>{15, 23});
    CHECK(ells(5, 19) == std::vector<std::int64_t>{39, 59});
    // 11 + 12 = 23, 11 + 24 = 35, 11 + 36 = 47
    CHECK(ells(3, 11) == std::vector<std::int64_t>{23, 35});
    for (auto l : ells(3, 7)) CHECK(check_admissible(3, l).ctx == check_admissible(3, 7).ctx);
}

TEST_CASE("family members are distinct closed codes") {
    const SearchSpec spec{2, Level::make(7), 2, SpanKind::Module, VectorDomain::AllR};
    const auto codes = enumerate_family(spec);
    CHECK(codes.size() == 25);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        CHECK(is_additively_closed(codes[i]));
        CHECK(codes[i].provenance.has_value());
        if (i > 0) CHECK(codes[i - 1].words < codes[i].words);
    }
}

TEST_CASE("p = 2, n = 2, ell = 7 collision") {
    const SearchSpec spec{2, Level::make(7), 2, SpanKind::Module, VectorDomain::AllR};
    const CollisionReport r = find_collisions(spec);
    REQUIRE(r.classes.size() == 1);
    const auto& c = r.classes[0];
    std::vector<WeightEnumerator> want = {parse_swe("X^2 + 2XZ + Z^2", 2), parse_swe("X^2 + Y^2 + 2Z^2", 2)};
    std::sort(want.begin(), want.end());
    CHECK(c.swes == want);
    REQUIRE(c.checks.size() == 2);
    CHECK(c.checks[0].level.ell == 15);
    CHECK(c.checks[0].separated);
    // The shared series is the swe evaluated at ell = 7.
    const auto vars = swe_series(Level::make(7), 2, spec.precision);
    CHECK(qs_equal_to(c.series, evaluate(want[0], vars), spec.precision));
}

TEST_CASE("p = 5, n = 2, ell = 19 code collision") {
    const SearchSpec spec{5, Level::make(19), 2, SpanKind::Module, VectorDomain::FpOnly};
    const CollisionReport r = find_collisions(spec);
    REQUIRE(r.classes.size() == 1);
    const auto& s = r.classes[0].series;
    CHECK(s.integer_coeff(0) == 1);
    CHECK(s.integer_coeff(5) == 4);
    CHECK(s.integer_coeff(10) == 4);
    CHECK(s.integer_coeff(15) == 0);
    CHECK(s.integer_coeff(20) == 4);
    CHECK(s.integer_coeff(25) == 16);
    const RingContext ctx = check_admissible(5, 19).ctx;
    const RingElement w{0, 1};
    const WeightEnumerator a = swe(build_code(w, w, {{0, 0}, {1, 0}}, SpanKind::Module, ctx));
    const WeightEnumerator b = swe(build_code(w, {1, 1}, {{1, 0}, {2, 0}}, SpanKind::Module, ctx));
    CHECK(std::find(r.classes[0].swes.begin(), r.classes[0].swes.end(), a) != r.classes[0].swes.end());
    CHECK(std::find(r.classes[0].swes.begin(), r.classes[0].swes.end(), b) != r.classes[0].swes.end());
}

TEST_CASE("collision classes hold at double precision") {
    for (const auto& spec : {SearchSpec{2, Level::make(7), 3, SpanKind::Module, VectorDomain::AllR},
                             SearchSpec{3, Level::make(11), 3, SpanKind::Module, VectorDomain::AllR},
                             SearchSpec{5, Level::make(11), 2, SpanKind::Fp, VectorDomain::FpOnly}}) {
        const CollisionReport r = find_collisions(spec, false);
        REQUIRE_FALSE(r.classes.empty());
        const Rational twice = spec.precision * 2;
        const auto vars = swe_series(spec.level, spec.p, twice);
        for (const auto& c : r.classes) {
            const QSeries first = evaluate(c.swes.front(), vars);
            for (const auto& w : c.swes) CHECK(qs_equal_to(evaluate(w, vars), first, spec.precision));
            CHECK(qs_equal_to(first, c.series, spec.precision));
        }
    }
}

TEST_CASE("count table cells") {
    const auto cells = count_table(2, SpanKind::Module, VectorDomain::AllR, {7}, {2});
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].swe_count == 10);
    CHECK(cells[0].theta_count == 9);
}

TEST_CASE("results do not depend on the thread count") {
    const SearchSpec spec{3, Level::make(7), 2, SpanKind::Fp, VectorDomain::AllR};
    set_thread_count(1);
    const auto one = enumerate_family(spec);
    set_thread_count(4);
    const auto four = enumerate_family(spec);
    set_thread_count(0);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].words == four[i].words);
        CHECK(one[i].provenance == four[i].provenance);
    }
}

TEST_CASE("guard against oversized families") {
    const SearchSpec spec{5, Level::make(19), 6, SpanKind::Module, VectorDomain::AllR};
    CHECK_THROWS_AS(enumerate_family(spec), Error);
}

TEST_CASE("domain names") {
    CHECK(parse_vector_domain("fp") == VectorDomain::FpOnly);
    CHECK(std::string(vector_domain_name(VectorDomain::AllR)) == "all");
    CHECK_THROWS_AS(parse_vector_domain("bogus"), Error);
}

}

#include <doctest.h>

#include <random>

#include "thetacodes/codes.hpp"
#include "thetacodes/error.hpp"

using namespace thetacodes;

namespace {

Word random_word(std::mt19937& rng, int p, int n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(element_at(static_cast<int>(rng() % (p * p)), p));
    return w;
}

bool has_unit(const Word& v, const RingContext& ctx) {
    for (auto x : v)
        if (ring_is_unit(x, ctx)) return true;
    return false;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("word encoding round-trips") {
    for (int p : {2, 3, 5})
        for (std::uint64_t i = 0; i < word_space_size(p, 2); ++i) CHECK(encode_word(decode_word(i, p, 2), p) == i);
    CHECK(word_space_size(5, 3) == 15625);
}

TEST_CASE("reduction of u - v w") {
    CHECK(reduce(3, 1, 2) == RingElement{1, 1});
    CHECK(reduce(-1, 4, 5) == RingElement{4, 1});
}

TEST_CASE("dual of a vector with a unit entry has p^(2(n-1)) words") {
    std::mt19937 rng(7);
    for (auto [p, ell] : std::vector<std::pair<int, int>>{{2, 7}, {2, 11}, {3, 7}, {3, 11}, {5, 19}, {5, 3}}) {
        const RingContext ctx = check_admissible(p, ell).ctx;
        for (int n = 1; n <= (p == 5 ? 2 : 3); ++n)
            for (int t = 0; t < 10; ++t) {
                const Word v = random_word(rng, p, n);
                const auto dual = dual_of_span(v, ctx);
                for (auto u : dual) CHECK(hermitian_dot(decode_word(u, p, n), v, ctx).is_zero());
                if (has_unit(v, ctx)) CHECK(dual.size() == ipow(p, 2 * (n - 1)));
            }
    }
}

TEST_CASE("codes are closed under addition and their scalars") {
    std::mt19937 rng(11);
    for (auto [p, ell] : std::vector<std::pair<int, int>>{{2, 7}, {2, 3}, {3, 7}, {3, 11}, {5, 19}}) {
        const RingContext ctx = check_admissible(p, ell).ctx;
        for (int t = 0; t < 12; ++t) {
            const int n = 1 + static_cast<int>(rng() % 2);
            const Word v = random_word(rng, p, n);
            const RingElement a1 = element_at(static_cast<int>(rng() % (p * p)), p);
            const RingElement a2 = element_at(static_cast<int>(rng() % (p * p)), p);
            const Code m = build_code(a1, a2, v, SpanKind::Module, ctx);
            const Code f = build_code(a1, a2, v, SpanKind::Fp, ctx);
            CHECK(is_additively_closed(m));
            CHECK(is_scalar_closed(m, SpanKind::Module));
            CHECK(is_additively_closed(f));
            CHECK(is_scalar_closed(f, SpanKind::Fp));
            CHECK(f.size() <= m.size());
            for (std::size_t i = 0; i < f.size(); ++i) CHECK(m.contains(f.word(i)));
            CHECK(m.contains(Word(n, RingElement{})));
        }
    }
}

TEST_CASE("F_p span need not be an R-module") {
    const RingContext ctx = check_admissible(3, 7).ctx;
    const Word v{{1, 0}};
    CHECK(span_of(v, ctx, SpanKind::Fp).size() == 3);
    CHECK(span_of(v, ctx, SpanKind::Module).size() == 9);
    const Code c = build_code({1, 0}, {0, 0}, v, SpanKind::Fp, ctx);
    CHECK_FALSE(is_scalar_closed(c, SpanKind::Module));
}

TEST_CASE("known p = 2 code") {
    const RingContext ctx = check_admissible(2, 7).ctx;
    const Code c = build_code({1, 0}, {0, 0}, {{1, 0}, {1, 1}}, SpanKind::Module, ctx);
    CHECK(c.size() == 4);
    CHECK(c.contains({{0, 1}, {0, 0}}));
    CHECK(c.provenance.has_value());
}

TEST_CASE("code equality and context checks") {
    const RingContext a = check_admissible(2, 7).ctx, b = check_admissible(2, 3).ctx;
    const Code c1 = Code::from_words(a, 1, {{{1, 0}}, {{0, 0}}, {{1, 0}}}, SpanKind::Module);
    CHECK(c1.size() == 2);
    const Code c2 = Code::from_words(a, 1, {{{0, 0}}, {{1, 0}}}, SpanKind::Module);
    CHECK(code_equal(c1, c2));
    const Code c3 = Code::from_words(b, 1, {{{0, 0}}}, SpanKind::Module);
    CHECK_THROWS_AS(code_equal(c1, c3), Error);
}

}

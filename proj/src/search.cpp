#include "thetacodes/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thetacodes/parallel.hpp"
#include "thetacodes/theta.hpp"

namespace thetacodes {

const char* vector_domain_name(VectorDomain v) noexcept { return v == VectorDomain::AllR ? "all" : "fp"; }

VectorDomain parse_vector_domain(const std::string& s) {
    if (s == "all") return VectorDomain::AllR;
    if (s == "fp") return VectorDomain::FpOnly;
    throw Error(Errc::ParseError, "vector domain must be all or fp, got '" + s + "'");
}

namespace {

std::vector<Word> vector_domain(const RingContext& ctx, int n, VectorDomain dom) {
    std::vector<Word> out;
    const std::uint64_t total = word_space_size(ctx.p, n);
    for (std::uint64_t x = 0; x < total; ++x) {
        Word w = decode_word(x, ctx.p, n);
        if (dom == VectorDomain::FpOnly &&
            std::any_of(w.begin(), w.end(), [](const RingElement& e) { return e.b != 0; }))
            continue;
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

std::vector<Code> enumerate_family(const SearchSpec& spec) {
    const Admissible adm = check_admissible(spec.p, spec.level.ell);
    const RingContext& ctx = adm.ctx;
    if (word_space_size(ctx.p, spec.n) > kEnumerationGuard)
        throw Error(Errc::GuardExceeded, "family enumeration needs p^(2n) <= 1e8");
    const auto vs = vector_domain(ctx, spec.n, spec.vectors);
    const int q = ctx.size();

    // Per-v results, merged in v order so the kept triple does not depend on scheduling.
    std::vector<std::vector<Code>> per_v(vs.size());
    parallel_for(vs.size(), [&](std::size_t i) {
        const auto dual = dual_of_span(vs[i], ctx);
        std::set<std::vector<std::uint64_t>> seen;
        for (int i1 = 0; i1 < q; ++i1)
            for (int i2 = 0; i2 < q; ++i2) {
                Code c = build_code_with_dual(element_at(i1, ctx.p), element_at(i2, ctx.p), vs[i], spec.span, ctx, dual);
                if (seen.insert(c.words).second) per_v[i].push_back(std::move(c));
            }
    });

    std::map<std::vector<std::uint64_t>, Code> all;
    for (auto& bucket : per_v)
        for (auto& c : bucket) {
            auto key = c.words;
            all.emplace(std::move(key), std::move(c));
        }
    std::vector<Code> out;
    out.reserve(all.size());
    for (auto& [k, c] : all) out.push_back(std::move(c));
    return out;
}

std::vector<Level> next_levels(const Level& level, int p, int count) {
    std::vector<Level> out;
    for (std::int64_t ell = level.ell + 4LL * p; static_cast<int>(out.size()) < count; ell += 4LL * p)
        if (is_square_free(ell) && ell % p != 0) out.push_back(Level::make(ell));
    return out;
}

namespace {

struct Grouping {
    std::map<WeightEnumerator, Generators> swes;
    // Theta series (as its term list) -> swes giving it.
    std::map<QSeries::Terms, std::vector<WeightEnumerator>> thetas;
};

Grouping group(const SearchSpec& spec, const std::vector<Code>& codes) {
    Grouping g;
    for (const auto& c : codes) g.swes.emplace(swe(c), *c.provenance);
    const auto args = swe_series(spec.level, spec.p, spec.precision);
    for (const auto& [w, gens] : g.swes) g.thetas[evaluate(w, args).terms()].push_back(w);
    return g;
}

}  // namespace

CollisionReport find_collisions(const SearchSpec& spec, bool check_separation) {
    const auto codes = enumerate_family(spec);
    const Grouping g = group(spec, codes);
    CollisionReport r;
    r.spec = spec;
    r.code_count = codes.size();
    r.swe_count = g.swes.size();
    r.theta_count = g.thetas.size();
    const auto args = swe_series(spec.level, spec.p, spec.precision);
    const auto later = check_separation ? next_levels(spec.level, spec.p) : std::vector<Level>{};
    for (const auto& [terms, ws] : g.thetas) {
        if (ws.size() < 2) continue;
        CollisionClass cls;
        cls.swes = ws;
        std::sort(cls.swes.begin(), cls.swes.end());
        for (const auto& w : cls.swes) cls.representatives.push_back(g.swes.at(w));
        cls.series = evaluate(cls.swes.front(), args);
        for (const auto& lv : later) {
            const auto at = swe_series(lv, spec.p, spec.precision);
            std::set<QSeries::Terms> distinct;
            for (const auto& w : cls.swes) distinct.insert(evaluate(w, at).terms());
            cls.checks.push_back({lv, distinct.size() == cls.swes.size()});
        }
        r.classes.push_back(std::move(cls));
    }
    std::sort(r.classes.begin(), r.classes.end(),
              [](const CollisionClass& x, const CollisionClass& y) { return x.swes.front() < y.swes.front(); });
    return r;
}

std::vector<CountCell> count_table(int p, SpanKind span, VectorDomain vectors, const std::vector<std::int64_t>& ells,
                                   const std::vector<int>& ns, Rational precision) {
    std::vector<CountCell> out;
    for (int n : ns)
        for (auto ell : ells) {
            SearchSpec spec{p, Level::make(ell), n, span, vectors, precision};
            const Grouping g = group(spec, enumerate_family(spec));
            out.push_back({n, ell, g.swes.size(), g.thetas.size()});
        }
    return out;
}

}  // namespace thetacodes

#include "thetacodes/json_io.hpp"

#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace thetacodes {

namespace {

// Integers that fit in 64 bits are plain JSON numbers; larger ones are decimal strings.
Json big(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class big_from(const Json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    throw Error(Errc::ParseError, "expected an integer");
}

}  // namespace

Json to_json(const QSeries& s) {
    Json terms = Json::array();
    for (const auto& [k, c] : s.terms()) terms.push_back(Json::array({k, big(c)}));
    return Json{{"scale", s.scale()}, {"precision", s.precision().str()}, {"terms", terms}};
}

QSeries series_from_json(const Json& j) {
    QSeries s(j.at("scale").get<std::int64_t>(), Rational::parse(j.at("precision").get<std::string>()));
    for (const auto& t : j.at("terms")) s.add_term(t.at(0).get<std::int64_t>(), big_from(t.at(1)));
    return s;
}

Json to_json(RingElement x) { return Json::array({x.a, x.b}); }

RingElement element_from_json(const Json& j, int p) {
    return {static_cast<int>(mod(j.at(0).get<std::int64_t>(), p)), static_cast<int>(mod(j.at(1).get<std::int64_t>(), p))};
}

std::string ell_class(const RingContext& ctx) {
    const std::int64_t m = 4LL * ctx.p;
    return "ell = " + std::to_string(mod(4LL * ctx.d_mod_p - 1, m)) + " mod " + std::to_string(m);
}

namespace {

RingContext context_from_class(int p, const std::string& cls) {
    std::int64_t r = 0, m = 0;
    if (std::sscanf(cls.c_str(), "ell = %ld mod %ld", &r, &m) != 2 || m != 4LL * p || mod(r, 4) != 3)
        throw Error(Errc::ParseError, "bad ell_class '" + cls + "'");
    return RingContext::make(p, (r + 1) / 4);
}

Json word_json(const Word& w) {
    Json out = Json::array();
    for (auto x : w) out.push_back(to_json(x));
    return out;
}

Word word_from(const Json& j, int p) {
    Word w;
    for (const auto& x : j) w.push_back(element_from_json(x, p));
    return w;
}

}  // namespace

Json to_json(const Code& c) {
    Json j{{"p", c.ctx.p}, {"ell_class", ell_class(c.ctx)}, {"n", c.n}, {"span", span_kind_name(c.span)}};
    if (c.provenance)
        j["generators"] = Json{{"a1", to_json(c.provenance->a1)},
                               {"a2", to_json(c.provenance->a2)},
                               {"v", word_json(c.provenance->v)}};
    Json words = Json::array();
    for (std::size_t i = 0; i < c.size(); ++i) words.push_back(word_json(c.word(i)));
    j["words"] = words;
    return j;
}

Code code_from_json(const Json& j) {
    const int p = j.at("p").get<int>();
    const RingContext ctx = context_from_class(p, j.at("ell_class").get<std::string>());
    const int n = j.at("n").get<int>();
    const SpanKind span = parse_span_kind(j.value("span", std::string("module")));
    std::optional<Generators> gens;
    if (j.contains("generators")) {
        const auto& g = j.at("generators");
        gens = Generators{element_from_json(g.at("a1"), p), element_from_json(g.at("a2"), p), word_from(g.at("v"), p)};
        if (static_cast<int>(gens->v.size()) != n) throw Error(Errc::ArityMismatch, "generator vector length differs from n");
    }
    if (!j.contains("words")) {
        if (!gens) throw Error(Errc::ParseError, "code needs words or generators");
        return build_code(gens->a1, gens->a2, gens->v, span, ctx);
    }
    std::vector<Word> ws;
    for (const auto& w : j.at("words")) ws.push_back(word_from(w, p));
    Code c = Code::from_words(ctx, n, ws, span);
    c.provenance = gens;
    return c;
}

Json to_json(const WeightEnumerator& w) {
    Json terms = Json::array();
    for (const auto& [e, c] : w.terms()) terms.push_back(Json::array({e, big(c)}));
    return Json{{"vars", w.variable_count()}, {"degree", w.degree()}, {"terms", terms}};
}

WeightEnumerator enumerator_from_json(const Json& j) {
    WeightEnumerator w(j.at("vars").get<int>(), j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) w.add(t.at(0).get<Exponents>(), big_from(t.at(1)));
    return w;
}

Json to_json(const KernelReport& r) {
    Json tried = Json::array();
    for (const auto& t : r.truncations_tried) tried.push_back(Json{{"truncation", t.truncation}, {"nullity", t.nullity}});
    Json basis = Json::array();
    for (const auto& v : r.kernel_basis) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(big(x));
        basis.push_back(row);
    }
    return Json{{"p", r.p},
                {"ell", r.level.ell},
                {"n", r.n},
                {"truncation", r.truncation},
                {"rows", r.rows},
                {"cols", r.cols},
                {"rank", r.rank},
                {"nullity", r.nullity},
                {"method", r.method},
                {"stabilized", r.stabilized},
                {"truncations_tried", tried},
                {"monomials", r.monomials},
                {"kernel_basis", basis}};
}

namespace {

Json generators_json(const Generators& g) {
    return Json{{"a1", to_json(g.a1)}, {"a2", to_json(g.a2)}, {"v", word_json(g.v)}};
}

}  // namespace

Json to_json(const CollisionReport& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json swes = Json::array();
        for (std::size_t i = 0; i < c.swes.size(); ++i)
            swes.push_back(Json{{"swe", format_swe(c.swes[i], r.spec.p)},
                                {"enumerator", to_json(c.swes[i])},
                                {"generators", generators_json(c.representatives[i])}});
        Json checks = Json::array();
        for (const auto& s : c.checks) checks.push_back(Json{{"ell", s.level.ell}, {"separated", s.separated}});
        classes.push_back(Json{{"members", swes}, {"series", to_json(c.series)}, {"separation", checks}});
    }
    return Json{{"p", r.spec.p},
                {"ell", r.spec.level.ell},
                {"n", r.spec.n},
                {"span", span_kind_name(r.spec.span)},
                {"vectors", vector_domain_name(r.spec.vectors)},
                {"precision", r.spec.precision.str()},
                {"codes", r.code_count},
                {"swe_count", r.swe_count},
                {"theta_count", r.theta_count},
                {"classes", classes}};
}

std::string count_table_csv(const std::vector<CountCell>& cells) {
    std::set<std::int64_t> ells;
    std::map<int, std::map<std::int64_t, CountCell>> grid;
    for (const auto& c : cells) {
        ells.insert(c.ell);
        grid[c.n][c.ell] = c;
    }
    std::ostringstream os;
    os << "n";
    for (auto ell : ells) os << "," << ell << "_swe," << ell << "_theta";
    os << "\n";
    for (const auto& [n, row] : grid) {
        os << n;
        for (auto ell : ells) {
            auto it = row.find(ell);
            if (it == row.end())
                os << ",,";
            else
                os << "," << it->second.swe_count << "," << it->second.theta_count;
        }
        os << "\n";
    }
    return os.str();
}

std::string nullity_table_csv(const std::vector<std::int64_t>& ells, const std::vector<int>& ns,
                              const std::vector<std::vector<int>>& nullity) {
    std::ostringstream os;
    os << "n";
    for (auto ell : ells) os << "," << ell;
    os << "\n";
    for (std::size_t i = 0; i < ns.size(); ++i) {
        os << ns[i];
        for (std::size_t j = 0; j < ells.size(); ++j) os << "," << nullity.at(i).at(j);
        os << "\n";
    }
    return os.str();
}

}  // namespace thetacodes

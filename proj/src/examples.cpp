#include "thetacodes/examples.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "thetacodes/enumerators.hpp"
#include "thetacodes/search.hpp"
#include "thetacodes/theta.hpp"

namespace thetacodes {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_linear(const std::string& text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw Error(Errc::ParseError, "empty ring element");
    std::int64_t x = 0, y = 0;
    for (const auto& term : split(s, '+')) {
        if (term.empty()) throw Error(Errc::ParseError, "cannot parse element '" + text + "'");
        const bool has_w = term.back() == 'w';
        const std::string digits = has_w ? term.substr(0, term.size() - 1) : term;
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error(Errc::ParseError, "cannot parse element '" + text + "'");
        const std::int64_t c = digits.empty() ? 1 : std::stoll(digits);
        (has_w ? y : x) += c;
    }
    return {x, y};
}

}  // namespace

RingElement parse_ring_element(const std::string& text, int p) {
    auto [x, y] = parse_linear(text);
    return {static_cast<int>(mod(x, p)), static_cast<int>(mod(y, p))};
}

RingElement parse_printed_element(const std::string& text, int p) {
    auto [x, y] = parse_linear(text);
    return element_of({static_cast<int>(mod(x, p)), static_cast<int>(mod(y, p))}, p);
}

Word parse_printed_word(const std::string& text, int p) {
    std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw Error(Errc::ParseError, "word must be parenthesized: '" + text + "'");
    Word w;
    for (const auto& part : split(s.substr(1, s.size() - 2), ',')) w.push_back(parse_printed_element(part, p));
    return w;
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_printed_series(const std::string& text) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (auto term : split(strip_spaces(text), '+')) {
        std::erase_if(term, [](char c) { return c == '{' || c == '}'; });
        if (term.empty() || term == "...") continue;
        auto q = term.find('q');
        std::string coef = term.substr(0, q);
        std::int64_t c = coef.empty() ? 1 : std::stoll(coef);
        std::int64_t e = 0;
        if (q != std::string::npos) {
            e = 1;
            if (q + 1 < term.size()) {
                if (term[q + 1] != '^') throw Error(Errc::ParseError, "bad series term '" + term + "'");
                e = std::stoll(term.substr(q + 2));
            }
        }
        out.emplace_back(e, c);
    }
    return out;
}

namespace {

std::vector<Example> make_registry() {
    std::vector<Example> reg;
    const std::string kFactorA = "X^2+Y^2+2Z^2", kLine = "X+Z";

    reg.push_back(Example{
        "p2-n3-l7",
        "length 3 over F2xF2, equal theta at ell=7",
        2, 3, SpanKind::Module, 7, {15},
        {{"C1", "w", "w+1", {"0", "1", "1"}, "X^3+X^2Z+XY^2+2XZ^2+Y^2Z+2Z^3",
          {"(0,0,0)", "(0,w,w)", "(w+1,0,0)", "(w+1,w,w)", "(0,w+1,w+1)", "(0,1,1)", "(w+1,w+1,w+1)", "(w+1,1,1)"},
          {{kFactorA, 1}, {kLine, 1}}},
         {"C2", "w", "w+1", {"0", "0", "1"}, "X^3+3X^2Z+3XZ^2+Z^3",
          {"(0,0,0)", "(0,0,w)", "(w+1,0,0)", "(w+1,0,w)", "(0,w+1,0)", "(0,w+1,w)", "(w+1,w+1,0)", "(w+1,w+1,w)"},
          {{kLine, 3}}}},
        {{7, -1, "1 + 6q^2 + 24q^4 + 56q^6 + 114q^8 + 168q^10"},
         {15, 0, "1 + 4q^2 + 8q^4 + 18q^6 + 36q^8 + 34q^10"},
         {15, 1, "1 + 12q^4 + 6q^6 + 48q^8 + 54q^10"}}});

    reg.push_back(Example{
        "p2-n2-l7",
        "length 2 over F2xF2, equal theta at ell=7",
        2, 2, SpanKind::Module, 7, {15},
        {{"C1", "w", "w+1", {"1", "1"}, "X^2+Y^2+2Z^2", {"(0,0)", "(1,1)", "(w,w)", "(w+1,w+1)"}, {}},
         {"C2", "w", "w+1", {"0", "1"}, "X^2+2XZ+Z^2", {"(0,0)", "(0,w)", "(w+1,0)", "(w+1,w)"}, {{kLine, 2}}}},
        {{7, -1, "1 + 4q^2 + 12q^4 + 16q^6 + 28q^8 + 24q^10 + 48q^12"},
         {15, 0, "1 + 4q^2 + 4q^4 + 12q^8 + 24q^10 + 8q^12"},
         {15, 1, "1 + 8q^4 + 4q^6 + 16q^8 + 20q^10 + 4q^12"}}});

    reg.push_back(Example{
        "p2-n3-concat",
        "length 3 over F2xF2, concatenations of shorter codes, equal theta at ell=7",
        2, 3, SpanKind::Module, 7, {15},
        {{"C1", "w", "1", {"0", "1", "1"}, "X^3 + X^2Y + XY^2 + Y^3 + 2X^2Z + 2Y^2Z + 2XZ^2 + 2YZ^2 + 4Z^3",
          {"(0,0,0)", "(0,w,w)", "(0,1,1)", "(0,w+1,w+1)", "(w,0,0)", "(w,w,w)", "(w,1,1)", "(w,w+1,w+1)", "(1,0,0)",
           "(1,w,w)", "(1,1,1)", "(1,w+1,w+1)", "(w+1,0,0)", "(w+1,w,w)", "(w+1,1,1)", "(w+1,w+1,w+1)"},
          {{kFactorA, 1}, {"X+Y+2Z", 1}}},
         {"C2", "1", "w", {"0", "0", "1"}, "X^3 + X^2Y + 4X^2Z + 2XYZ + 5XZ^2 + YZ^2 + 2Z^3",
          {"(0,0,0)", "(0,0,w)", "(0,0,1)", "(0,0,w+1)", "(w,0,0)", "(w,0,w)", "(w,0,1)", "(w,0,w+1)", "(0,w,0)",
           "(0,w,w)", "(0,w,1)", "(0,w,w+1)", "(w,w,0)", "(w,w,w)", "(w,w,1)", "(w,w,w+1)"},
          {{kLine, 2}, {"X+Y+2Z", 1}}}},
        {{7, -1, "1 + 2q + 8q^2 + 8q^3 + 34q^4 + 24q^5 + 88q^6 + 34q^7 + 172q^8"},
         {15, 0, "1 + 2q + 4q^2 + 8q^3 + 10q^4 + 8q^5 + 28q^6 + 52q^8"},
         {15, 1, "1 + 2q + 14q^4 + 16q^5 + 8q^6 + 8q^7 + 64q^8"}}});

    reg.push_back(Example{
        "p2-n3-new",
        "length 3 over F2xF2, not concatenations, equal theta at ell=7",
        2, 3, SpanKind::Module, 7, {15},
        {{"C1", "1", "w", {"1", "1", "1"}, "X^3 + Y^3 + 3X^2Z + 3Y^2Z + 3XZ^2 + 3YZ^2 + 2Z^3",
          {"(0,0,0)", "(w,w,w)", "(1,1,1)", "(w+1,w+1,w+1)", "(w,w,0)", "(0,0,w)", "(w+1,w+1,1)", "(1,1,w+1)",
           "(0,w,w)", "(w,0,0)", "(1,w+1,w+1)", "(w+1,1,1)", "(w,0,w)", "(0,w,0)", "(w+1,1,w+1)", "(1,w+1,1)"},
          {}},
         {"C2", "w", "1", {"1", "1", "w+1"}, "X^3 + XY^2 + X^2Z + 2XYZ + 3Y^2Z + 4XZ^2 + 2YZ^2 + 2Z^3",
          {"(0,0,0)", "(w+1,w+1,0)", "(1,1,0)", "(w,w,0)", "(0,0,w+1)", "(w+1,w+1,w+1)", "(1,1,w+1)", "(w,w,w+1)",
           "(0,w,1)", "(w+1,1,1)", "(1,w+1,1)", "(w,0,1)", "(0,w,w)", "(w+1,1,w)", "(1,w+1,w)", "(w,0,w)"},
          {}}},
        {{7, -1, "1 + 6q^2 + 8q^3 + 48q^4 + 24q^5 + 88q^6 + 48q^7 + 138q^8 + 48q^9"},
         {15, 0, "1 + 8q^3 + 12q^4 + 30q^6 + 72q^8 + 24q^9 + 54q^10"},
         {15, 1, "1 + 4q^2 + 8q^4 + 8q^5 + 34q^6 + 8q^7 + 60q^8 + 32q^9 + 50q^10"}}});

    reg.push_back(Example{
        "p2-n4-f4",
        "length 4 over F4, equal theta at ell=3",
        2, 4, SpanKind::Module, 3, {11},
        {{"C1", "1", "1", {"w", "w", "w", "w"}, "X^4 + 6X^2Y^2 + Y^4 + 12X^2Z^2 + 24XYZ^2 + 12Y^2Z^2 + 8Z^4", {}, {}},
         {"C2", "1", "1", {"w", "w", "1", "1"},
          "X^4 + 2X^2Y^2 + Y^4 + 8X^2YZ + 8XY^2Z + 8X^2Z^2 + 8XYZ^2 + 8Y^2Z^2 + 8XZ^3 + 8YZ^3 + 4Z^4", {}, {}}},
        {{3, -1, "1 + 72q^2 + 192q^3 + 504q^4 + 576q^5 + 2280q^6 + 1728q^7 + 4248q^8 + 4800q^9"},
         {11, 0, "1 + 24q^2 + 24q^4 + 144q^6 + 192q^7 + 312q^8 + 384q^9"},
         {11, 1, "1 + 8q^2 + 56q^4 + 64q^5 + 96q^6 + 128q^7 + 344q^8 + 320q^9"}}});

    // C_{n,1} = C(w, w+1, (0,...,0,1,1)) and C_{n,2} = C(w, w+1, (0,...,0,0,1)).
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::string> v1(static_cast<std::size_t>(n), "0"), v2 = v1;
        v1[static_cast<std::size_t>(n - 2)] = v1[static_cast<std::size_t>(n - 1)] = "1";
        v2[static_cast<std::size_t>(n - 1)] = "1";
        std::vector<std::pair<std::string, int>> f1{{kFactorA, 1}};
        if (n > 2) f1.emplace_back(kLine, n - 2);
        reg.push_back(Example{"p2-family-n" + std::to_string(n),
                              "two-parameter family over F2xF2 at length " + std::to_string(n) +
                                  ", equal theta at ell=7",
                              2, n, SpanKind::Module, 7, {15, 23},
                              {{"C1", "w", "w+1", v1, "", {}, f1}, {"C2", "w", "w+1", v2, "", {}, {{kLine, n}}}},
                              {}});
    }

    const std::int64_t kP3Sep = 19;
    reg.push_back(Example{
        "p3-fp-l7-pair1",
        "F3-submodule codes of length 3 over F9, equal theta at ell=7",
        3, 3, SpanKind::Fp, 7, {kP3Sep},
        {{"C1", "w+1", "1", {"1", "w", "w+1"},
          "X^3 + 2Y^3 + 4XZ^2 + 4YZ^2 + 2Z^3 + 2XZW + 6YZW + 2Z^2W + 2YW^2 + 2ZW^2", {}, {}},
         {"C2", "w", "w", {"w+1", "w+1", "w+2"},
          "X^3 + 2XYZ + 2Y^2Z + 2XZ^2 + 4YZ^2 + 2Z^3 + 2Y^2W + 2XZW + 4YZW + 2Z^2W + 4ZW^2", {}, {}}},
        {{7, -1, "1 + 2q^3 + 4q^4 + 4q^5 + 12q^6 + 12q^7 + 8q^8 + 22q^9 + 42q^10"},
         {19, 0, "1 + 2q^3 + 6q^6 + 12q^9 + 4q^10"},
         {19, 1, "1 + 2q^6 + 2q^7 + 12q^9 + 6q^10"}}});
    reg.push_back(Example{
        "p3-fp-l7-pair2",
        "F3-submodule codes of length 3 over F9, equal theta at ell=7",
        3, 3, SpanKind::Fp, 7, {kP3Sep},
        {{"C1", "w", "w+1", {"w", "w", "w+2"}, "X^3 + 2XY^2 + 2XZ^2 + 4YZ^2 + 2Z^3 + 10YZW + 4Z^2W + 2XW^2", {}, {}},
         {"C2", "w", "2w+1", {"1", "w+1", "w+2"},
          "X^3 + 2X^2Z + 2Y^2Z + 4YZ^2 + 2Z^3 + 2XYW + 8YZW + 4Z^2W + 2ZW^2", {}, {}}},
        {{7, -1, "1 + 2q^2 + 2q^4 + 8q^5 + 2q^6 + 20q^7 + 22q^8 + 6q^9 + 38q^10"},
         {19, 0, "1 + 2q^2 + 4q^5 + 2q^8 + 6q^9 + 2q^10"},
         {19, 1, "1 + 2q^5 + 2q^7 + 4q^8 + 6q^9 + 4q^10"}}});
    reg.push_back(Example{
        "p3-fp-l7-pair3",
        "F3-submodule codes of length 3 over F9, equal theta at ell=7",
        3, 3, SpanKind::Fp, 7, {kP3Sep},
        {{"C1", "1", "w", {"1", "w", "w+1"},
          "X^3 + 2XYZ + 2Y^2Z + 4XZ^2 + 2YZ^2 + 2Z^3 + 2Y^2W + 6YZW + 4Z^2W + 2W^3", {}, {}},
         {"C2", "1", "w", {"1", "1", "w+2"},
          "X^3 + 2XYZ + 4Y^2Z + 2XZ^2 + 2YZ^2 + 2Z^3 + 2XZW + 4YZW + 4Z^2W + 2YW^2 + 2ZW^2", {}, {}}},
        {{7, -1, "1 + 2q^3 + 6q^4 + 2q^5 + 8q^6 + 16q^7 + 10q^8 + 20q^9 + 40q^10"},
         {19, 0, "1 + 2q^6 + 2q^7 + 12q^9 + 8q^10"},
         {19, 1, "1 + 2q^6 + 4q^7 + 8q^9 + 10q^10"}}});

    reg.push_back(Example{
        "p3-fp-l11-pair",
        "F3-submodule codes of length 3 over F3xF3, equal theta at ell=11",
        3, 3, SpanKind::Fp, 11, {23},
        {{"C1", "w", "2w+1", {"0", "1", "1"}, "X^3 + 2X^2Z + 4XZ^2 + 8Z^3 + 4XYW + 8YZW", {}, {}},
         {"C2", "w", "2w+1", {"1", "1", "1"}, "X^3 + 2Y^3 + 6XZ^2 + 4Z^3 + 12YZW + 2W^3", {}, {}}},
        {{11, -1, "1 + 2q^3 + 12q^6 + 40q^9 + 38q^12 + 88q^15"},
         {23, 0, "1 + 2q^6 + 14q^9 + 14q^12 + 24q^15"},
         {23, 1, "1 + 2q^3 + 6q^6 + 12q^9 + 8q^12 + 24q^15"}}});

    reg.push_back(Example{
        "p5-codes-l19",
        "codes of length 2 over F5xF5, equal theta at ell=19",
        5, 2, SpanKind::Module, 19, {39},
        {{"C1", "w", "w", {"0", "1"}, "X1^2 + 4X1X3 + 4X3^2 + 4X1X5 + 8X3X5 + 4X5^2", {}, {}},
         {"C2", "w", "w+1", {"1", "2"}, "X1^2 + 8X3X5 + 4X2X6 + 8X4X8 + 4X7X9", {}, {}}},
        {{19, -1, "1 + 4q^5 + 4q^10 + 4q^20 + 16q^25 + 16q^30 + 8q^35"},
         {39, 0, "1 + 4q^10 + 4q^20 + 4q^25 + 4q^30 + 8q^35 + 16q^40"},
         {39, 1, "1 + 4q^5 + 4q^10 + 4q^20 + 8q^25 + 4q^40 + 4q^45"}}});

    reg.push_back(Example{
        "p5-fp-l11",
        "F5-submodule codes of length 2 over F5xF5, equal theta at ell=11",
        5, 2, SpanKind::Fp, 11, {31},
        {{"C1", "1", "3w+1", {"1", "3"}, "X1^2 + 8X3X5 + 4X2X6 + 8X4X8 + 4X7X9", {}, {}},
         {"C2", "w+1", "w+1", {"0", "1"}, "X1^2 + 4X1X4 + 4X4^2 + 4X1X8 + 8X4X8 + 4X8^2", {}, {}}},
        {{11, -1, "1 + 4q^5 + 4q^10 + 8q^15 + 20q^20 + 16q^25"},
         {31, 0, "1 + 4q^5 + 4q^10 + 4q^20 + 8q^25"},
         {31, 1, "1 + 4q^10 + 8q^20 + 4q^25"}}});
    return reg;
}

}  // namespace

const std::vector<Example>& example_registry() {
    static const std::vector<Example> reg = make_registry();
    return reg;
}

const Example& find_example(const std::string& name) {
    for (const auto& ex : example_registry())
        if (ex.name == name) return ex;
    throw Error(Errc::UnknownExample, "no example named '" + name + "'");
}

Code build_printed_code(const Example& ex, const PrintedCode& c) {
    const RingContext ctx = check_admissible(ex.p, ex.ell).ctx;
    Word v;
    for (const auto& x : c.v) v.push_back(parse_printed_element(x, ex.p));
    return build_code(parse_printed_element(c.a1, ex.p), parse_printed_element(c.a2, ex.p), v, ex.span, ctx);
}

bool ExampleReport::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

namespace {

WeightEnumerator product_of(const std::vector<std::pair<std::string, int>>& factors, int p) {
    WeightEnumerator out;
    bool first = true;
    for (const auto& [text, k] : factors) {
        WeightEnumerator f = poly_pow(parse_swe(text, p), k);
        out = first ? f : poly_mul(out, f);
        first = false;
    }
    return out;
}

std::string compare_printed(const QSeries& s, const std::string& printed) {
    const auto want = parse_printed_series(printed);
    std::int64_t top = 0;
    std::map<std::int64_t, std::int64_t> expect;
    for (const auto& [e, c] : want) {
        expect[e] += c;
        top = std::max(top, e);
    }
    std::ostringstream diff;
    for (std::int64_t e = 0; e <= top; ++e) {
        mpz_class got = s.integer_coeff(e);
        std::int64_t exp = expect.count(e) ? expect[e] : 0;
        if (got != exp) diff << " q^" << e << ": printed " << exp << ", computed " << got.get_str() << ";";
    }
    return diff.str();
}

void theta_checks(const Example& ex, const std::vector<WeightEnumerator>& ws, const std::string& tag,
                  std::vector<Check>& out) {
    const Rational prec(kDefaultPrecision);
    auto series_at = [&](std::int64_t ell) {
        const auto args = swe_series(Level::make(ell), ex.p, prec);
        std::vector<QSeries> s;
        for (const auto& w : ws) s.push_back(evaluate(w, args));
        return s;
    };
    for (const auto& t : ex.thetas) {
        const auto s = series_at(t.ell);
        for (std::size_t i = 0; i < ws.size(); ++i) {
            if (t.code >= 0 && static_cast<std::size_t>(t.code) != i) continue;
            std::string diff = compare_printed(s[i], t.series);
            out.push_back({tag + " theta " + ex.codes[i].name + " at ell=" + std::to_string(t.ell) + " matches printed",
                           diff.empty(), diff});
        }
    }
    out.push_back({tag + " swes differ", ws[0] != ws[1], format_swe(ws[0], ex.p)});
    const auto eq = series_at(ex.ell);
    out.push_back({tag + " equal theta at ell=" + std::to_string(ex.ell) + " below q^61", qs_equal_to(eq[0], eq[1], prec),
                   eq[0].str() + " vs " + eq[1].str()});
    for (auto ell : ex.separated) {
        const auto s = series_at(ell);
        out.push_back({tag + " different theta at ell=" + std::to_string(ell), !qs_equal_to(s[0], s[1], prec), s[0].str()});
    }
}

}  // namespace

ExampleReport verify_example(const std::string& name) {
    const Example& ex = find_example(name);
    const RingContext ctx = check_admissible(ex.p, ex.ell).ctx;
    ExampleReport r{ex.name, {}};
    std::vector<WeightEnumerator> built, printed;
    for (const auto& pc : ex.codes) {
        const Code code = build_printed_code(ex, pc);
        const WeightEnumerator w = swe(code);
        const WeightEnumerator expected = pc.swe.empty() ? product_of(pc.factors, ex.p) : parse_swe(pc.swe, ex.p);
        built.push_back(w);
        printed.push_back(expected);
        r.checks.push_back({pc.name + " swe from generators", w == expected,
                            "expected " + format_swe(expected, ex.p) + ", built " + format_swe(w, ex.p) + " (" +
                                std::to_string(code.size()) + " words)"});
        if (!pc.words.empty()) {
            std::vector<Word> ws;
            for (const auto& s : pc.words) ws.push_back(parse_printed_word(s, ex.p));
            const Code listed = Code::from_words(ctx, ex.n, ws, ex.span);
            r.checks.push_back({pc.name + " word list", listed.words == code.words,
                                std::to_string(listed.size()) + " printed words, " + std::to_string(code.size()) +
                                    " built"});
        }
        if (!pc.factors.empty() && !pc.swe.empty()) {
            const WeightEnumerator prod = product_of(pc.factors, ex.p);
            r.checks.push_back({pc.name + " factorization", prod == expected, format_swe(prod, ex.p)});
        }
    }
    theta_checks(ex, built, "[generators]", r.checks);
    theta_checks(ex, printed, "[printed swe]", r.checks);
    return r;
}

}  // namespace thetacodes

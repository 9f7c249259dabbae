#include "thetacodes/enumerators.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "thetacodes/codes.hpp"
#include "thetacodes/theta.hpp"

namespace thetacodes {

WeightEnumerator::WeightEnumerator(int variable_count, int degree) : vars_(variable_count), degree_(degree) {}

void WeightEnumerator::add(const Exponents& e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != vars_) throw Error(Errc::ArityMismatch, "exponent vector has wrong length");
    int deg = 0;
    for (int x : e) deg += x;
    if (deg != degree_) throw Error(Errc::ArityMismatch, "monomial degree differs from enumerator degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class WeightEnumerator::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class WeightEnumerator::coefficient_sum() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

WeightEnumerator cwe(const Code& code) {
    const int p = code.ctx.p, q = p * p;
    WeightEnumerator w(q, code.n);
    std::map<Exponents, long> counts;
    Exponents e(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::fill(e.begin(), e.end(), 0);
        for (const auto& x : code.word(i)) ++e[static_cast<std::size_t>(label_index(label_of(x, p), p))];
        ++counts[e];
    }
    for (const auto& [ex, c] : counts) w.add(ex, mpz_class(c));
    return w;
}

namespace {

struct SweLayout {
    std::vector<int> var_of_label;
    std::vector<CosetLabel> labels;
    std::vector<std::string> names;
};

SweLayout make_layout(int p) {
    const OrbitTable& t = orbit_table(p);
    SweLayout L;
    std::vector<std::pair<CosetLabel, std::string>> named;
    if (p == 2) {
        named = {{{0, 0}, "X"}, {{1, 0}, "Y"}, {{0, 1}, "Z"}};
    } else if (p == 3) {
        named = {{{0, 0}, "X"}, {{1, 0}, "Y"}, {{0, 1}, "Z"}, {{1, 1}, "W"}};
    } else if (p == 5) {
        named = {{{0, 0}, "X1"}, {{1, 0}, "X2"}, {{0, 1}, "X3"}, {{1, 1}, "X4"}, {{0, 2}, "X5"},
                 {{2, 0}, "X6"}, {{2, 1}, "X7"}, {{1, 2}, "X8"}, {{1, 3}, "X9"}};
    } else {
        for (std::size_t i = 0; i < t.size(); ++i) named.emplace_back(t.representative(i), "x" + std::to_string(i + 1));
    }
    std::vector<int> var_of_orbit(t.size(), -1);
    for (std::size_t v = 0; v < named.size(); ++v) {
        var_of_orbit[static_cast<std::size_t>(t.orbit_of[label_index(named[v].first, p)])] = static_cast<int>(v);
        L.labels.push_back(named[v].first);
        L.names.push_back(named[v].second);
    }
    L.var_of_label.resize(static_cast<std::size_t>(p * p));
    for (int i = 0; i < p * p; ++i) L.var_of_label[i] = var_of_orbit[static_cast<std::size_t>(t.orbit_of[i])];
    return L;
}

const SweLayout& layout(int p) {
    static std::mutex mu;
    static std::map<int, SweLayout> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, make_layout(p)).first;
    return it->second;
}

}  // namespace

const std::vector<int>& swe_variable_of_label(int p) { return layout(p).var_of_label; }
std::vector<CosetLabel> swe_variable_labels(int p) { return layout(p).labels; }
int swe_variable_count(int p) { return static_cast<int>(layout(p).labels.size()); }
std::vector<std::string> swe_variable_names(int p) { return layout(p).names; }

std::vector<QSeries> swe_series(const Level& level, int p, Rational precision) {
    std::vector<QSeries> out;
    for (auto l : swe_variable_labels(p)) out.push_back(*coset_theta(level, p, l, precision));
    return out;
}

WeightEnumerator symmetrize(const WeightEnumerator& w, int p) {
    if (w.variable_count() != p * p) throw Error(Errc::ArityMismatch, "symmetrize expects a complete enumerator");
    const auto& var = swe_variable_of_label(p);
    WeightEnumerator out(swe_variable_count(p), w.degree());
    for (const auto& [e, c] : w.terms()) {
        Exponents s(static_cast<std::size_t>(out.variable_count()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) s[static_cast<std::size_t>(var[i])] += e[i];
        out.add(s, c);
    }
    return out;
}

WeightEnumerator swe(const Code& code) { return symmetrize(cwe(code), code.ctx.p); }

WeightEnumerator poly_mul(const WeightEnumerator& x, const WeightEnumerator& y) {
    if (x.variable_count() != y.variable_count()) throw Error(Errc::ArityMismatch, "variable counts differ");
    WeightEnumerator out(x.variable_count(), x.degree() + y.degree());
    for (const auto& [ex, cx] : x.terms())
        for (const auto& [ey, cy] : y.terms()) {
            Exponents e = ex;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += ey[i];
            out.add(e, cx * cy);
        }
    return out;
}

WeightEnumerator poly_pow(const WeightEnumerator& x, int k) {
    WeightEnumerator out(x.variable_count(), 0);
    out.add(Exponents(static_cast<std::size_t>(x.variable_count()), 0), 1);
    for (int i = 0; i < k; ++i) out = poly_mul(out, x);
    return out;
}

namespace {

WeightEnumerator combine(const WeightEnumerator& x, const WeightEnumerator& y, int sign) {
    if (x.variable_count() != y.variable_count() || x.degree() != y.degree())
        throw Error(Errc::ArityMismatch, "enumerators differ in variables or degree");
    WeightEnumerator out = x;
    for (const auto& [e, c] : y.terms()) out.add(e, sign * c);
    return out;
}

using Dense = std::vector<mpz_class>;

Dense dense_mul(const Dense& a, const Dense& b, std::size_t count) {
    Dense out(count);
    for (std::size_t i = 0; i < a.size() && i < count; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < count; ++j)
            if (b[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return out;
}

}  // namespace

WeightEnumerator poly_add(const WeightEnumerator& x, const WeightEnumerator& y) { return combine(x, y, 1); }
WeightEnumerator poly_sub(const WeightEnumerator& x, const WeightEnumerator& y) { return combine(x, y, -1); }

QSeries evaluate(const WeightEnumerator& w, const std::vector<QSeries>& args) {
    if (static_cast<int>(args.size()) != w.variable_count())
        throw Error(Errc::ArityMismatch, "evaluate: " + std::to_string(args.size()) + " arguments for " +
                                             std::to_string(w.variable_count()) + " variables");
    Rational prec = args.empty() ? Rational(INT64_MAX) : args.front().precision();
    bool integral = true;
    for (const auto& a : args) {
        prec = min(prec, a.precision());
        integral = integral && a.scale() == 1;
    }
    if (!integral) {
        QSeries total(1, prec);
        for (const auto& [e, c] : w.terms()) {
            QSeries term = QSeries::constant(c, prec);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term = qs_mul(term, args[i]);
            total = qs_add(total, term);
        }
        return total.normalized();
    }
    // Integer exponents below prec: 0 .. count-1.
    const std::size_t count = static_cast<std::size_t>((prec.num + prec.den - 1) / prec.den);
    std::vector<std::vector<Dense>> powers(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
        int top = 0;
        for (const auto& [e, c] : w.terms()) top = std::max(top, e[i]);
        Dense base = args[i].dense(static_cast<std::int64_t>(count));
        Dense one(count);
        if (count) one[0] = 1;
        powers[i].push_back(one);
        for (int k = 1; k <= top; ++k) powers[i].push_back(dense_mul(powers[i].back(), base, count));
    }
    Dense total(count);
    for (const auto& [e, c] : w.terms()) {
        Dense term;
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term = first ? powers[i][e[i]] : dense_mul(term, powers[i][e[i]], count);
            first = false;
        }
        if (first) {
            term.assign(count, 0);
            if (count) term[0] = 1;
        }
        for (std::size_t k = 0; k < count; ++k)
            if (term[k] != 0) mpz_addmul(total[k].get_mpz_t(), c.get_mpz_t(), term[k].get_mpz_t());
    }
    QSeries out(1, prec);
    for (std::size_t k = 0; k < count; ++k) out.add_term(static_cast<std::int64_t>(k), total[k]);
    return out;
}

bool poly_identity_check(const WeightEnumerator& lhs, const WeightEnumerator& rhs, int p, std::int64_t ell,
                         Rational precision) {
    if (lhs.variable_count() != rhs.variable_count() || lhs.degree() != rhs.degree())
        throw Error(Errc::ArityMismatch, "identity sides differ in variables or degree");
    Admissible adm = check_form_level(p, ell);
    auto args = swe_series(adm.level, p, precision);
    return qs_equal_to(evaluate(lhs, args), evaluate(rhs, args), precision);
}

std::string format_poly(const WeightEnumerator& w, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    // std::map orders exponent vectors ascending; descending is graded lex for a fixed degree.
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (mag != 1 || constant) os << mag.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << names.at(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string format_swe(const WeightEnumerator& w, int p) { return format_poly(w, swe_variable_names(p)); }

WeightEnumerator parse_swe(const std::string& text, int p) {
    const auto names = swe_variable_names(p);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '_' && ch != '*') s += ch;
    auto fail = [&](const std::string& why) { return Error(Errc::ParseError, "cannot parse '" + text + "': " + why); };
    std::vector<std::pair<Exponents, mpz_class>> terms;
    std::size_t i = 0;
    int degree = -1;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw fail("expected + or -");
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
        Exponents e(names.size(), 0);
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            // Longest matching variable name.
            std::size_t best = names.size(), len = 0;
            for (std::size_t v = 0; v < names.size(); ++v)
                if (s.compare(i, names[v].size(), names[v]) == 0 && names[v].size() > len) best = v, len = names[v].size();
            if (best == names.size()) throw fail("unknown variable at '" + s.substr(i) + "'");
            i += len;
            int power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string pd;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) pd += s[i++];
                if (pd.empty()) throw fail("missing exponent");
                power = std::stoi(pd);
            }
            e[best] += power;
        }
        int deg = 0;
        for (int x : e) deg += x;
        if (degree >= 0 && deg != degree) throw fail("inhomogeneous polynomial");
        degree = deg;
        terms.emplace_back(e, sign * c);
    }
    if (degree < 0) throw fail("empty polynomial");
    WeightEnumerator w(static_cast<int>(names.size()), degree);
    for (const auto& [e, c] : terms) w.add(e, c);
    return w;
}

}  // namespace thetacodes

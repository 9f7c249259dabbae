#include "thetacodes/qseries.hpp"

#include <numeric>
#include <sstream>

#include "thetacodes/error.hpp"

namespace thetacodes {

namespace {

using i128 = __int128;

std::int64_t checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::InternalScaleError, "rational overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (d == 0) throw Error(Errc::ParseError, "zero denominator");
    if (den < 0) num = -num, den = -den;
    std::int64_t g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational Rational::parse(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad rational '" + s + "'");
    }
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return i128(x.num) * y.den <=> i128(y.num) * x.den;
}

Rational operator*(const Rational& x, std::int64_t m) { return Rational(checked(i128(x.num) * m), x.den); }

Rational operator/(const Rational& x, std::int64_t m) { return Rational(x.num, checked(i128(x.den) * m)); }

Rational min(const Rational& x, const Rational& y) { return x < y ? x : y; }

QSeries::QSeries(std::int64_t scale, Rational precision) : scale_(scale), precision_(precision) {
    if (scale <= 0) throw Error(Errc::InternalScaleError, "scale must be positive");
}

QSeries QSeries::constant(const mpz_class& c, Rational precision) {
    QSeries s(1, precision);
    s.add_term(0, c);
    return s;
}

QSeries QSeries::from_dense(const std::vector<mpz_class>& coeffs) {
    QSeries s(1, Rational(static_cast<std::int64_t>(coeffs.size())));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) s.terms_.emplace(static_cast<std::int64_t>(k), coeffs[k]);
    return s;
}

bool QSeries::in_range(std::int64_t k) const noexcept {
    return k >= 0 && i128(k) * precision_.den < i128(precision_.num) * scale_;
}

void QSeries::add_term(std::int64_t k, const mpz_class& c) {
    if (c == 0 || !in_range(k)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class QSeries::coeff(std::int64_t k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class QSeries::integer_coeff(std::int64_t e) const { return coeff(checked(i128(e) * scale_)); }

QSeries QSeries::rescaled(std::int64_t s) const {
    if (s % scale_ != 0) throw Error(Errc::InternalScaleError, "rescale to a non-multiple scale");
    const std::int64_t f = s / scale_;
    QSeries out(s, precision_);
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), checked(i128(k) * f), c);
    return out;
}

QSeries QSeries::normalized() const {
    std::int64_t g = scale_;
    for (const auto& [k, c] : terms_) g = std::gcd(g, k);
    if (g == 0) g = scale_;
    QSeries out(scale_ / g, precision_);
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k / g, c);
    return out;
}

QSeries QSeries::truncated(Rational bound) const {
    QSeries out(scale_, min(bound, precision_));
    for (const auto& [k, c] : terms_) {
        if (!out.in_range(k)) break;
        out.terms_.emplace_hint(out.terms_.end(), k, c);
    }
    return out;
}

std::vector<mpz_class> QSeries::dense(std::int64_t count) const {
    std::vector<mpz_class> out(static_cast<std::size_t>(count));
    for (const auto& [k, c] : terms_) {
        if (k % scale_ != 0) throw Error(Errc::InternalScaleError, "non-integer exponent in dense view");
        std::int64_t e = k / scale_;
        if (e >= count) break;
        out[static_cast<std::size_t>(e)] = c;
    }
    return out;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = c == 1 && k != 0;
        if (!unit) os << c.get_str();
        if (k == 0) continue;
        os << "q";
        if (scale_ == 1) {
            if (k != 1) os << "^" << k;
        } else {
            Rational e(k, scale_);
            os << "^(" << e.num;
            if (e.den != 1) os << "/" << e.den;
            os << ")";
        }
    }
    if (first) os << "0";
    os << " + O(q^" << (precision_.den == 1 ? std::to_string(precision_.num) : "(" + precision_.str() + ")") << ")";
    return os.str();
}

namespace {

std::pair<QSeries, QSeries> common_scale(const QSeries& x, const QSeries& y) {
    std::int64_t s = std::lcm(x.scale(), y.scale());
    return {x.rescaled(s), y.rescaled(s)};
}

}  // namespace

QSeries qs_add(const QSeries& x, const QSeries& y) {
    auto [a, b] = common_scale(x, y);
    QSeries out(a.scale(), min(a.precision(), b.precision()));
    for (const auto& [k, c] : a.terms()) out.add_term(k, c);
    for (const auto& [k, c] : b.terms()) out.add_term(k, c);
    return out;
}

QSeries qs_mul(const QSeries& x, const QSeries& y) {
    auto [a, b] = common_scale(x, y);
    QSeries out(a.scale(), min(a.precision(), b.precision()));
    // Exponents are nonnegative, so a product term is in range only if both factors are.
    std::map<std::int64_t, mpz_class> acc;
    for (const auto& [ka, ca] : a.terms()) {
        if (!out.in_range(ka)) break;
        for (const auto& [kb, cb] : b.terms()) {
            if (!out.in_range(ka + kb)) break;
            mpz_class& slot = acc[ka + kb];
            mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    for (const auto& [k, c] : acc) out.add_term(k, c);
    return out;
}

QSeries qs_scalar(const QSeries& x, const mpz_class& c) {
    QSeries out(x.scale(), x.precision());
    for (const auto& [k, v] : x.terms()) out.add_term(k, v * c);
    return out;
}

QSeries qs_substitute_power(const QSeries& x, std::int64_t m) {
    if (m <= 0) throw Error(Errc::InternalScaleError, "substitution power must be positive");
    QSeries out(x.scale(), x.precision() * m);
    for (const auto& [k, c] : x.terms()) out.add_term(checked(i128(k) * m), c);
    return out;
}

bool qs_equal_to(const QSeries& x, const QSeries& y, Rational bound) {
    if (bound > x.precision() || bound > y.precision())
        throw Error(Errc::InsufficientPrecision, "comparison bound " + bound.str() + " exceeds series precision");
    auto [a, b] = common_scale(x.truncated(bound), y.truncated(bound));
    return a.terms() == b.terms();
}

}  // namespace thetacodes

#pragma once

// Truncated formal power series in q with exponents k/scale and a carried
// precision bound B: every exponent < B is exact, nothing is claimed beyond.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace thetacodes {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    std::string str() const;
    static Rational parse(const std::string& s);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);
};

Rational operator*(const Rational& x, std::int64_t m);
Rational operator/(const Rational& x, std::int64_t m);
Rational min(const Rational& x, const Rational& y);

class QSeries {
  public:
    using Terms = std::map<std::int64_t, mpz_class>;

    QSeries() = default;
    QSeries(std::int64_t scale, Rational precision);

    /// The constant c with the given precision.
    static QSeries constant(const mpz_class& c, Rational precision);
    /// Integer-exponent series from dense coefficients; precision = coeffs.size().
    static QSeries from_dense(const std::vector<mpz_class>& coeffs);

    std::int64_t scale() const noexcept { return scale_; }
    const Rational& precision() const noexcept { return precision_; }
    const Terms& terms() const noexcept { return terms_; }

    /// True iff q^(k/scale) lies below the precision bound.
    bool in_range(std::int64_t k) const noexcept;
    /// Adds c to the coefficient of q^(k/scale); dropped when out of range.
    void add_term(std::int64_t k, const mpz_class& c);
    mpz_class coeff(std::int64_t k) const;
    /// Coefficient of q^e for an integer exponent e, on any scale.
    mpz_class integer_coeff(std::int64_t e) const;

    /// Same series on scale s (a multiple of the current scale).
    QSeries rescaled(std::int64_t s) const;
    /// Rewrites onto the smallest scale representing all exponents.
    QSeries normalized() const;
    QSeries truncated(Rational bound) const;

    /// Dense integer coefficients of q^0 .. q^(count-1); scale must reduce to 1.
    std::vector<mpz_class> dense(std::int64_t count) const;

    std::string str() const;

    bool operator==(const QSeries&) const = default;

  private:
    std::int64_t scale_ = 1;
    Rational precision_{0};
    Terms terms_;
};

QSeries qs_add(const QSeries& x, const QSeries& y);
QSeries qs_mul(const QSeries& x, const QSeries& y);
QSeries qs_scalar(const QSeries& x, const mpz_class& c);
QSeries qs_substitute_power(const QSeries& x, std::int64_t m);
/// Throws InsufficientPrecision when bound exceeds either precision.
bool qs_equal_to(const QSeries& x, const QSeries& y, Rational bound);

}  // namespace thetacodes

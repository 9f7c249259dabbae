#pragma once

// Complete and symmetric weight enumerators stored as sparse maps from
// exponent vectors to integer coefficients.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "thetacodes/arith.hpp"
#include "thetacodes/qseries.hpp"

namespace thetacodes {

struct Code;

using Exponents = std::vector<int>;

class WeightEnumerator {
  public:
    WeightEnumerator() = default;
    WeightEnumerator(int variable_count, int degree);

    int variable_count() const noexcept { return vars_; }
    int degree() const noexcept { return degree_; }
    const std::map<Exponents, mpz_class>& terms() const noexcept { return terms_; }

    /// Adds c to the coefficient of the monomial; zero results are removed.
    void add(const Exponents& e, const mpz_class& c);
    mpz_class coeff(const Exponents& e) const;
    mpz_class coefficient_sum() const;

    bool operator==(const WeightEnumerator&) const = default;
    auto operator<=>(const WeightEnumerator& o) const { return terms_ <=> o.terms_; }

  private:
    int vars_ = 0;
    int degree_ = 0;
    std::map<Exponents, mpz_class> terms_;
};

WeightEnumerator cwe(const Code& code);
/// Merges complete-enumerator variables along Klein orbits.
WeightEnumerator symmetrize(const WeightEnumerator& w, int p);
WeightEnumerator swe(const Code& code);

WeightEnumerator poly_mul(const WeightEnumerator& x, const WeightEnumerator& y);
WeightEnumerator poly_pow(const WeightEnumerator& x, int k);
WeightEnumerator poly_add(const WeightEnumerator& x, const WeightEnumerator& y);
WeightEnumerator poly_sub(const WeightEnumerator& x, const WeightEnumerator& y);

/// Sum of coeff * prod args_i^e_i; precision is the minimum over args.
QSeries evaluate(const WeightEnumerator& w, const std::vector<QSeries>& args);

/// True iff lhs and rhs evaluate to the same series at the level's orbit
/// series below the given precision.
bool poly_identity_check(const WeightEnumerator& lhs, const WeightEnumerator& rhs, int p, std::int64_t ell,
                         Rational precision);

/// Symmetric-enumerator variable of each label, indexed by label_index.
/// Variables follow the naming order below, not orbit_table order.
const std::vector<int>& swe_variable_of_label(int p);
/// One label per swe variable, the one the variable is named after.
std::vector<CosetLabel> swe_variable_labels(int p);
int swe_variable_count(int p);

/// Coset series of each swe variable at the level.
std::vector<QSeries> swe_series(const Level& level, int p, Rational precision);

/// Variable names of the symmetric enumerator: X,Y,Z (p=2), X,Y,Z,W (p=3),
/// X1..X9 (p=5), x1..xk in orbit_table order otherwise.
std::vector<std::string> swe_variable_names(int p);

/// Renders terms in descending graded-lex order, e.g. "X^2 + 2XZ + Z^2".
std::string format_poly(const WeightEnumerator& w, const std::vector<std::string>& names);
std::string format_swe(const WeightEnumerator& w, int p);
/// Parses a polynomial in the swe variables of p; degree inferred.
WeightEnumerator parse_swe(const std::string& text, int p);

}  // namespace thetacodes

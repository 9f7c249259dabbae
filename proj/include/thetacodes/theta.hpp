#pragma once

#include <memory>
#include <vector>

#include "thetacodes/arith.hpp"
#include "thetacodes/qseries.hpp"

namespace thetacodes {

struct Code;

/// Q_d(x, y) = x^2 + xy + d y^2.
std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y) noexcept;

/// theta_{p,j}(q) = sum_n q^((n + j/2p)^2), on scale 4p^2.
QSeries one_dim_theta(int p, std::int64_t j, Rational precision);

enum class CosetMethod { Direct, Factored };

/// Theta series of the coset a - b w + p O_K, by enumerating Q_d(mp+a, np+b).
QSeries coset_theta_direct(const Level& level, int p, CosetLabel label, Rational precision);
/// Same series from the two products of one-dimensional series.
QSeries coset_theta_factored(const Level& level, int p, CosetLabel label, Rational precision);

/// Memoized coset series, keyed by the label's orbit representative.
std::shared_ptr<const QSeries> coset_theta(const Level& level, int p, CosetLabel label, Rational precision);

/// One series per Klein orbit, in orbit_table order.
std::vector<QSeries> orbit_series(const Level& level, int p, Rational precision);
/// One series per label, indexed by label_index.
std::vector<QSeries> label_series(const Level& level, int p, Rational precision);

/// Theta series of Lambda_ell(C) via the complete weight enumerator.
QSeries code_theta(const Level& level, const Code& code, Rational precision);

/// Brute-force Construction A count; n <= 3 and precision <= 40 only.
QSeries code_theta_oracle(const Level& level, const Code& code, Rational precision);

}  // namespace thetacodes

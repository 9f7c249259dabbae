#include "thetacodes/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "thetacodes/codes.hpp"
#include "thetacodes/enumerators.hpp"

namespace thetacodes {

std::int64_t norm_form(std::int64_t d, std::int64_t x, std::int64_t y) noexcept { return x * x + x * y + d * y * y; }

QSeries one_dim_theta(int p, std::int64_t j, Rational precision) {
    if (p < 1) throw Error(Errc::NotPrime, "one_dim_theta needs p >= 1");
    const std::int64_t s = 4LL * p * p;
    QSeries out(s, precision);
    // Exponent (n + j/2p)^2 has index (2pn + j)^2 on scale 4p^2.
    const double reach = std::sqrt(static_cast<double>(precision.num) / static_cast<double>(precision.den)) + 1.0;
    const std::int64_t nmax = static_cast<std::int64_t>(reach) + std::llabs(j) / (2 * p) + 2;
    for (std::int64_t n = -nmax; n <= nmax; ++n) {
        std::int64_t t = 2LL * p * n + j;
        out.add_term(t * t, 1);
    }
    return out;
}

namespace {

void require_unramified(const Level& level, int p) {
    if (level.ell % p == 0) throw Error(Errc::PDividesEll, "coset series need p not dividing ell");
}

}  // namespace

QSeries coset_theta_direct(const Level& level, int p, CosetLabel label, Rational precision) {
    require_unramified(level, p);
    const std::int64_t d = level.d, ell = level.ell;
    QSeries out(1, precision);
    // 4 Q_d(x, y) = (2x + y)^2 + ell y^2, so ell y^2 < 4B and |2x + y| < sqrt(4B - ell y^2).
    const double B = static_cast<double>(precision.num) / static_cast<double>(precision.den);
    const std::int64_t ymax = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(B / static_cast<double>(ell)))) + p;
    for (std::int64_t y = -ymax; y <= ymax; ++y) {
        if (mod(y - label.b, p) != 0) continue;
        double rem = 4.0 * B - static_cast<double>(ell) * static_cast<double>(y) * static_cast<double>(y);
        if (rem < 0) continue;
        double s = std::sqrt(rem);
        std::int64_t lo = static_cast<std::int64_t>(std::floor((-static_cast<double>(y) - s) / 2.0)) - p;
        std::int64_t hi = static_cast<std::int64_t>(std::ceil((-static_cast<double>(y) + s) / 2.0)) + p;
        lo += mod(label.a - lo, p);
        for (std::int64_t x = lo; x <= hi; x += p) out.add_term(norm_form(d, x, y), 1);
    }
    return out;
}

QSeries coset_theta_factored(const Level& level, int p, CosetLabel label, Rational precision) {
    require_unramified(level, p);
    const std::int64_t a = label.a, b = label.b, ell = level.ell, pp = std::int64_t(p) * p;
    auto lhs = [&](std::int64_t j) { return qs_substitute_power(one_dim_theta(p, j, precision / (pp * ell)), pp * ell); };
    auto rhs = [&](std::int64_t j) { return qs_substitute_power(one_dim_theta(p, j, precision / pp), pp); };
    QSeries sum = qs_add(qs_mul(lhs(b), rhs(2 * a + b)), qs_mul(lhs(b + p), rhs(2 * a + b + p)));
    QSeries out(1, precision);
    for (const auto& [k, c] : sum.terms()) {
        if (k % sum.scale() != 0)
            throw Error(Errc::InternalScaleError, "factored coset series has a non-integer exponent");
        out.add_term(k / sum.scale(), c);
    }
    return out;
}

std::shared_ptr<const QSeries> coset_theta(const Level& level, int p, CosetLabel label, Rational precision) {
    using Key = std::tuple<std::int64_t, int, int, std::int64_t, std::int64_t>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const QSeries>> memo;
    const OrbitTable& t = orbit_table(p);
    CosetLabel rep = t.representative(static_cast<std::size_t>(t.orbit_of[label_index(
        {static_cast<int>(mod(label.a, p)), static_cast<int>(mod(label.b, p))}, p)]));
    Key key{level.ell, p, label_index(rep, p), precision.num, precision.den};
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto series = std::make_shared<const QSeries>(coset_theta_direct(level, p, rep, precision));
    std::lock_guard lock(mu);
    // First insertion wins; a concurrent duplicate computed the same value.
    return memo.emplace(key, std::move(series)).first->second;
}

std::vector<QSeries> orbit_series(const Level& level, int p, Rational precision) {
    const OrbitTable& t = orbit_table(p);
    std::vector<QSeries> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(*coset_theta(level, p, t.representative(i), precision));
    return out;
}

std::vector<QSeries> label_series(const Level& level, int p, Rational precision) {
    std::vector<QSeries> out;
    for (int i = 0; i < p * p; ++i) out.push_back(*coset_theta(level, p, label_at(i, p), precision));
    return out;
}

QSeries code_theta(const Level& level, const Code& code, Rational precision) {
    return evaluate(swe(code), swe_series(level, code.ctx.p, precision));
}

QSeries code_theta_oracle(const Level& level, const Code& code, Rational precision) {
    if (code.n > 3 || precision > Rational(40))
        throw Error(Errc::GuardExceeded, "oracle limited to n <= 3 and precision <= 40");
    require_unramified(level, code.ctx.p);
    const int p = code.ctx.p;
    // All O_K elements u - v w with Q_d(u, v) < precision, with their reductions.
    struct Point {
        std::int64_t norm;
        int element;
    };
    std::vector<Point> points;
    const double B = static_cast<double>(precision.num) / static_cast<double>(precision.den);
    const std::int64_t vmax = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(B / static_cast<double>(level.ell)))) + 1;
    const std::int64_t umax = static_cast<std::int64_t>(std::ceil(std::sqrt(B))) + vmax + 1;
    for (std::int64_t v = -vmax; v <= vmax; ++v)
        for (std::int64_t u = -umax; u <= umax; ++u) {
            std::int64_t nf = norm_form(level.d, u, v);
            if (Rational(nf) < precision) points.push_back({nf, element_index(reduce(u, v, p), p)});
        }
    std::sort(points.begin(), points.end(), [](const Point& x, const Point& y) { return x.norm < y.norm; });
    std::vector<char> in_code(static_cast<std::size_t>(word_space_size(p, code.n)), 0);
    for (auto w : code.words) in_code[w] = 1;
    const std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    QSeries out(1, precision);
    std::map<std::int64_t, long> acc;
    auto recurse = [&](auto&& self, int depth, std::int64_t norm, std::uint64_t word) -> void {
        if (depth == code.n) {
            if (in_code[word]) ++acc[norm];
            return;
        }
        for (const auto& pt : points) {
            std::int64_t total = norm + pt.norm;
            if (!(Rational(total) < precision)) break;
            self(self, depth + 1, total, word * q + static_cast<std::uint64_t>(pt.element));
        }
    };
    recurse(recurse, 0, 0, 0);
    for (const auto& [k, c] : acc) out.add_term(k, mpz_class(c));
    return out;
}

}  // namespace thetacodes

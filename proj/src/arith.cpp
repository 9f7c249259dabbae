#include "thetacodes/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace thetacodes {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotSquareFree: return "NotSquareFree";
        case Errc::NotThreeMod4: return "NotThreeMod4";
        case Errc::PDividesEll: return "PDividesEll";
        case Errc::NotPrime: return "NotPrime";
        case Errc::InsufficientPrecision: return "InsufficientPrecision";
        case Errc::InternalScaleError: return "InternalScaleError";
        case Errc::GuardExceeded: return "GuardExceeded";
        case Errc::ContextMismatch: return "ContextMismatch";
        case Errc::ArityMismatch: return "ArityMismatch";
        case Errc::EmptyKernel: return "EmptyKernel";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::UnknownExample: return "UnknownExample";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

bool is_square_free(std::int64_t n) noexcept {
    if (n < 1) return false;
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept {
    using u128 = unsigned __int128;
    std::uint64_t result = 1 % m, b = static_cast<std::uint64_t>(mod(base, m));
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * b % m);
        b = static_cast<std::uint64_t>(u128(b) * b % m);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

int legendre(std::int64_t a, std::int64_t p) noexcept {
    std::int64_t r = mod(a, p);
    if (r == 0) return 0;
    if (p == 2) return 1;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Level Level::make(std::int64_t ell) {
    if (ell <= 0 || !is_square_free(ell))
        throw Error(Errc::NotSquareFree, "level " + std::to_string(ell) + " is not square-free");
    return from_form(ell);
}

Level Level::from_form(std::int64_t ell) {
    if (ell <= 0 || mod(ell, 4) != 3)
        throw Error(Errc::NotThreeMod4, "level " + std::to_string(ell) + " is not 3 mod 4");
    return Level{ell, (ell + 1) / 4};
}

const char* ring_kind_name(RingKind k) noexcept { return k == RingKind::Split ? "split" : "field"; }

RingContext RingContext::make(int p, std::int64_t d) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    RingContext ctx;
    ctx.p = p;
    ctx.d_mod_p = static_cast<int>(mod(d, p));
    // x^2 + x + d splits mod p iff its discriminant 1 - 4d = -ell is a nonzero square.
    if (p == 2) {
        ctx.kind = ctx.d_mod_p == 0 ? RingKind::Split : RingKind::Field;
    } else {
        int ls = legendre(1 - 4 * static_cast<std::int64_t>(ctx.d_mod_p), p);
        if (ls == 0) throw Error(Errc::PDividesEll, "p divides ell (ramified case)");
        ctx.kind = ls == 1 ? RingKind::Split : RingKind::Field;
    }
    return ctx;
}

namespace {

Admissible admissible_from(int p, Level level) {
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (level.ell % p == 0)
        throw Error(Errc::PDividesEll,
                    std::to_string(p) + " divides " + std::to_string(level.ell) + " (F_p + uF_p case)");
    return {level, RingContext::make(p, level.d)};
}

}  // namespace

Admissible check_admissible(int p, std::int64_t ell) { return admissible_from(p, Level::make(ell)); }

Admissible check_form_level(int p, std::int64_t ell) { return admissible_from(p, Level::from_form(ell)); }

RingElement ring_add(RingElement x, RingElement y, const RingContext& ctx) noexcept {
    return {(x.a + y.a) % ctx.p, (x.b + y.b) % ctx.p};
}

RingElement ring_neg(RingElement x, const RingContext& ctx) noexcept {
    return {(ctx.p - x.a) % ctx.p, (ctx.p - x.b) % ctx.p};
}

RingElement ring_mul(RingElement x, RingElement y, const RingContext& ctx) noexcept {
    const int p = ctx.p;
    // w^2 = -w - d
    int a = static_cast<int>(mod(x.a * y.a - ctx.d_mod_p * x.b * y.b, p));
    int b = static_cast<int>(mod(x.a * y.b + x.b * y.a - x.b * y.b, p));
    return {a, b};
}

RingElement ring_conj(RingElement x, const RingContext& ctx) noexcept {
    // conj(w) = -1 - w
    return {static_cast<int>(mod(x.a - x.b, ctx.p)), static_cast<int>(mod(-x.b, ctx.p))};
}

bool ring_is_unit(RingElement x, const RingContext& ctx) noexcept {
    // x * conj(x) = Q_d(a, -b) is the norm; x is a unit iff it is nonzero mod p.
    std::int64_t n = std::int64_t(x.a) * x.a - std::int64_t(x.a) * x.b + std::int64_t(ctx.d_mod_p) * x.b * x.b;
    return mod(n, ctx.p) != 0;
}

CosetLabel label_of(RingElement x, int p) noexcept { return {x.a, static_cast<int>(mod(-x.b, p))}; }

RingElement element_of(CosetLabel label, int p) noexcept { return {label.a, static_cast<int>(mod(-label.b, p))}; }

std::vector<CosetLabel> klein_orbit(CosetLabel l, int p) {
    auto m = [p](std::int64_t v) { return static_cast<int>(mod(v, p)); };
    std::vector<CosetLabel> out{
        {m(l.a), m(l.b)}, {m(-l.a - l.b), m(l.b)}, {m(-l.a), m(-l.b)}, {m(l.a + l.b), m(-l.b)}};
    std::sort(out.begin(), out.end(), [](CosetLabel x, CosetLabel y) {
        return std::tie(x.b, x.a) < std::tie(y.b, y.a);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

OrbitTable OrbitTable::make(int p) {
    OrbitTable t;
    t.p = p;
    t.orbit_of.assign(static_cast<std::size_t>(p * p), -1);
    // Scanning labels in (b, a) order makes each orbit's first-seen member its
    // canonical representative and orders orbits by representative.
    for (int b = 0; b < p; ++b) {
        for (int a = 0; a < p; ++a) {
            if (t.orbit_of[label_index({a, b}, p)] >= 0) continue;
            auto orb = klein_orbit({a, b}, p);
            int id = static_cast<int>(t.orbits.size());
            for (auto l : orb) t.orbit_of[label_index(l, p)] = id;
            t.orbits.push_back(std::move(orb));
        }
    }
    return t;
}

const OrbitTable& orbit_table(int p) {
    static std::mutex mu;
    static std::map<int, OrbitTable> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, OrbitTable::make(p)).first;
    return it->second;
}

std::string format_element(RingElement x) {
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
    } else {
        if (x.b != 1) os << x.b;
        os << 'w';
        if (x.a != 0) os << '+' << x.a;
    }
    return os.str();
}

std::string format_label(CosetLabel l) {
    return "(" + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
}

}  // namespace thetacodes

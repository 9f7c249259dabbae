#pragma once

// Number-theoretic predicates and the quotient ring R = O_K / p O_K for
// K = Q(sqrt(-ell)), ell = 4d - 1, O_K = Z[w], w^2 + w + d = 0.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "thetacodes/error.hpp"

namespace thetacodes {

bool is_prime(std::int64_t n) noexcept;
bool is_square_free(std::int64_t n) noexcept;
std::int64_t mod(std::int64_t a, std::int64_t m) noexcept;
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) noexcept;
/// Euler's criterion; returns 0 when p | a.
int legendre(std::int64_t a, std::int64_t p) noexcept;

/// Level ell of K = Q(sqrt(-ell)); ell = 4d - 1.
struct Level {
    std::int64_t ell = 0;
    std::int64_t d = 0;

    /// Validated constructor: ell square-free and ell = 3 mod 4.
    static Level make(std::int64_t ell);
    /// Only requires ell = 3 mod 4. The norm form x^2 + xy + d y^2 is then the
    /// norm form of the order Z[w]; used for nullity tables that list
    /// non-square-free levels such as 27.
    static Level from_form(std::int64_t ell);

    auto operator<=>(const Level&) const = default;
};

enum class RingKind { Split, Field };

const char* ring_kind_name(RingKind k) noexcept;

struct RingContext {
    int p = 2;
    int d_mod_p = 0;
    RingKind kind = RingKind::Split;

    static RingContext make(int p, std::int64_t d);

    int size() const noexcept { return p * p; }
    bool operator==(const RingContext&) const = default;
};

/// a + b w with a, b residues mod p.
struct RingElement {
    int a = 0;
    int b = 0;

    bool is_zero() const noexcept { return a == 0 && b == 0; }
    auto operator<=>(const RingElement&) const = default;
};

/// Labels the coset a - b w + p O_K.
struct CosetLabel {
    int a = 0;
    int b = 0;

    auto operator<=>(const CosetLabel&) const = default;
};

/// Result of validating a (p, ell) pair.
struct Admissible {
    Level level;
    RingContext ctx;
};

Admissible check_admissible(int p, std::int64_t ell);
/// Like check_admissible but accepts non-square-free ell (see Level::from_form).
Admissible check_form_level(int p, std::int64_t ell);

RingElement ring_add(RingElement x, RingElement y, const RingContext& ctx) noexcept;
RingElement ring_neg(RingElement x, const RingContext& ctx) noexcept;
RingElement ring_mul(RingElement x, RingElement y, const RingContext& ctx) noexcept;
RingElement ring_conj(RingElement x, const RingContext& ctx) noexcept;
bool ring_is_unit(RingElement x, const RingContext& ctx) noexcept;

/// Dense index a + p*b of an element, in [0, p^2).
inline int element_index(RingElement x, int p) noexcept { return x.a + p * x.b; }
inline RingElement element_at(int idx, int p) noexcept { return {idx % p, idx / p}; }

// The sign convention r_{a+pb+1} = a - b w lives in these two functions only.
CosetLabel label_of(RingElement x, int p) noexcept;
RingElement element_of(CosetLabel label, int p) noexcept;

/// Index a + p*b of a label; variable z_{i+1} of the complete enumerator.
inline int label_index(CosetLabel l, int p) noexcept { return l.a + p * l.b; }
inline CosetLabel label_at(int idx, int p) noexcept { return {idx % p, idx / p}; }

/// Orbit of (a, b) under (a,b) -> (-a-b,b), (-a,-b), (a+b,-b), sorted by (b, a).
std::vector<CosetLabel> klein_orbit(CosetLabel label, int p);

/// Partition of (Z/p)^2 into Klein orbits. Orbits are ordered by their
/// canonical representative (the (b, a)-least member, which is front()).
struct OrbitTable {
    int p = 2;
    std::vector<std::vector<CosetLabel>> orbits;
    std::vector<int> orbit_of;  // label_index -> orbit index

    static OrbitTable make(int p);
    std::size_t size() const noexcept { return orbits.size(); }
    CosetLabel representative(std::size_t i) const { return orbits.at(i).front(); }
};

const OrbitTable& orbit_table(int p);

std::string format_element(RingElement x);
std::string format_label(CosetLabel l);

}  // namespace thetacodes

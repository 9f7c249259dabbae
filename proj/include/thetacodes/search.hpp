#pragma once

// Exhaustive search over the family C(a1, a2, v) = a1 <v> + a2 <v>^perp,
// grouping codes by symmetric weight enumerator and by truncated theta series.

#include <cstdint>
#include <string>
#include <vector>

#include "thetacodes/arith.hpp"
#include "thetacodes/codes.hpp"
#include "thetacodes/enumerators.hpp"
#include "thetacodes/qseries.hpp"

namespace thetacodes {

enum class VectorDomain { AllR, FpOnly };

const char* vector_domain_name(VectorDomain v) noexcept;
VectorDomain parse_vector_domain(const std::string& s);

inline constexpr std::int64_t kDefaultPrecision = 61;

struct SearchSpec {
    int p = 2;
    Level level;
    int n = 2;
    SpanKind span = SpanKind::Module;
    VectorDomain vectors = VectorDomain::AllR;
    Rational precision{kDefaultPrecision};
};

/// All distinct codes of the family, ordered by word list. Each code keeps
/// the first generator triple that produced it, scanning v, then a1, then a2
/// in index order.
std::vector<Code> enumerate_family(const SearchSpec& spec);

/// The next `count` admissible levels ell + 4p, ell + 8p, ... (same ring).
std::vector<Level> next_levels(const Level& level, int p, int count = 2);

struct Separation {
    Level level;
    bool separated = false;  // every swe of the class has its own series here
};

struct CollisionClass {
    std::vector<WeightEnumerator> swes;          // sorted
    std::vector<Generators> representatives;     // one triple per swe
    QSeries series;                              // the shared truncated series
    std::vector<Separation> checks;
};

struct CollisionReport {
    SearchSpec spec;
    std::size_t code_count = 0;
    std::size_t swe_count = 0;
    std::size_t theta_count = 0;
    std::vector<CollisionClass> classes;  // sorted by lowest swe
};

CollisionReport find_collisions(const SearchSpec& spec, bool check_separation = true);

struct CountCell {
    int n = 0;
    std::int64_t ell = 0;
    std::size_t swe_count = 0;
    std::size_t theta_count = 0;
};

std::vector<CountCell> count_table(int p, SpanKind span, VectorDomain vectors, const std::vector<std::int64_t>& ells,
                                   const std::vector<int>& ns, Rational precision = Rational(kDefaultPrecision));

}  // namespace thetacodes

#pragma once

// Codes over R = O_K / p O_K, materialized as sorted word sets. A word of
// length n is packed base p^2, first coordinate most significant, so integer
// order is lexicographic order on the per-coordinate a + p*b encoding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetacodes/arith.hpp"

namespace thetacodes {

enum class SpanKind { Module, Fp };

const char* span_kind_name(SpanKind k) noexcept;
SpanKind parse_span_kind(const std::string& s);

using Word = std::vector<RingElement>;

struct Generators {
    RingElement a1;
    RingElement a2;
    Word v;

    bool operator==(const Generators&) const = default;
};

/// Upper bound on p^(2n) for exhaustive enumeration of R^n.
inline constexpr std::uint64_t kEnumerationGuard = 100'000'000;

std::uint64_t word_space_size(int p, int n);
std::uint64_t encode_word(const Word& w, int p);
Word decode_word(std::uint64_t code, int p, int n);

struct Code {
    RingContext ctx;
    int n = 0;
    std::vector<std::uint64_t> words;  // sorted, unique
    SpanKind span = SpanKind::Module;
    std::optional<Generators> provenance;

    std::size_t size() const noexcept { return words.size(); }
    Word word(std::size_t i) const { return decode_word(words.at(i), ctx.p, n); }
    bool contains(const Word& w) const;

    /// Builds from arbitrary words; sorts and deduplicates.
    static Code from_words(const RingContext& ctx, int n, const std::vector<Word>& ws, SpanKind span);
};

/// rho: u - v w in O_K reduces to the ring pair (u mod p, -v mod p).
RingElement reduce(std::int64_t u, std::int64_t v, int p) noexcept;

/// Hermitian inner product sum_j x_j conj(y_j).
RingElement hermitian_dot(const Word& x, const Word& y, const RingContext& ctx) noexcept;

/// All u in R^n with u . conj(v) = 0, by exhaustive enumeration.
std::vector<std::uint64_t> dual_of_span(const Word& v, const RingContext& ctx);

/// <v> under R-scalars (Module) or F_p-scalars (Fp).
std::vector<std::uint64_t> span_of(const Word& v, const RingContext& ctx, SpanKind span);

/// C(a1, a2, v) = a1 <v> + a2 <v>^perp.
Code build_code(RingElement a1, RingElement a2, const Word& v, SpanKind span, const RingContext& ctx);
/// Same, with the dual already computed (the search reuses it across a1, a2).
Code build_code_with_dual(RingElement a1, RingElement a2, const Word& v, SpanKind span, const RingContext& ctx,
                          const std::vector<std::uint64_t>& dual);

/// Set equality; ContextMismatch when ring or length differ.
bool code_equal(const Code& c1, const Code& c2);

/// Closure checks used by tests; exhaustive over word pairs.
bool is_additively_closed(const Code& c);
bool is_scalar_closed(const Code& c, SpanKind span);

std::string format_word(const Word& w);

}  // namespace thetacodes

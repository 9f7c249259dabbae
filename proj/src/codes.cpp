#include "thetacodes/codes.hpp"

#include <algorithm>

namespace thetacodes {

const char* span_kind_name(SpanKind k) noexcept { return k == SpanKind::Module ? "module" : "fp"; }

SpanKind parse_span_kind(const std::string& s) {
    if (s == "module") return SpanKind::Module;
    if (s == "fp") return SpanKind::Fp;
    throw Error(Errc::ParseError, "unknown span kind '" + s + "'");
}

std::uint64_t word_space_size(int p, int n) {
    std::uint64_t q = static_cast<std::uint64_t>(p) * p, total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > kEnumerationGuard) return kEnumerationGuard + 1;
        total *= q;
    }
    return total;
}

std::uint64_t encode_word(const Word& w, int p) {
    std::uint64_t q = static_cast<std::uint64_t>(p) * p, code = 0;
    for (auto x : w) code = code * q + static_cast<std::uint64_t>(element_index(x, p));
    return code;
}

Word decode_word(std::uint64_t code, int p, int n) {
    std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    Word w(static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        w[static_cast<std::size_t>(j)] = element_at(static_cast<int>(code % q), p);
        code /= q;
    }
    return w;
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), encode_word(w, ctx.p));
}

Code Code::from_words(const RingContext& ctx, int n, const std::vector<Word>& ws, SpanKind span) {
    Code c;
    c.ctx = ctx;
    c.n = n;
    c.span = span;
    c.words.reserve(ws.size());
    for (const auto& w : ws) {
        if (static_cast<int>(w.size()) != n) throw Error(Errc::ArityMismatch, "word length differs from code length");
        c.words.push_back(encode_word(w, ctx.p));
    }
    std::sort(c.words.begin(), c.words.end());
    c.words.erase(std::unique(c.words.begin(), c.words.end()), c.words.end());
    return c;
}

RingElement reduce(std::int64_t u, std::int64_t v, int p) noexcept {
    return {static_cast<int>(mod(u, p)), static_cast<int>(mod(-v, p))};
}

RingElement hermitian_dot(const Word& x, const Word& y, const RingContext& ctx) noexcept {
    RingElement acc{};
    for (std::size_t j = 0; j < x.size() && j < y.size(); ++j)
        acc = ring_add(acc, ring_mul(x[j], ring_conj(y[j], ctx), ctx), ctx);
    return acc;
}

namespace {

// Digit-level tables for packed words.
struct WordOps {
    int p, n, q;
    std::vector<int> add, mul;  // q x q tables on element indices

    WordOps(const RingContext& ctx, int len) : p(ctx.p), n(len), q(ctx.p * ctx.p) {
        add.resize(static_cast<std::size_t>(q * q));
        mul.resize(static_cast<std::size_t>(q * q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                add[i * q + j] = element_index(ring_add(element_at(i, p), element_at(j, p), ctx), p);
                mul[i * q + j] = element_index(ring_mul(element_at(i, p), element_at(j, p), ctx), p);
            }
    }

    std::uint64_t plus(std::uint64_t x, std::uint64_t y) const {
        std::uint64_t out = 0, place = 1;
        for (int j = 0; j < n; ++j) {
            int dx = static_cast<int>(x % q), dy = static_cast<int>(y % q);
            out += place * static_cast<std::uint64_t>(add[dx * q + dy]);
            place *= static_cast<std::uint64_t>(q);
            x /= q;
            y /= q;
        }
        return out;
    }

    std::uint64_t scale(int c, std::uint64_t x) const {
        std::uint64_t out = 0, place = 1;
        for (int j = 0; j < n; ++j) {
            out += place * static_cast<std::uint64_t>(mul[c * q + static_cast<int>(x % q)]);
            place *= static_cast<std::uint64_t>(q);
            x /= q;
        }
        return out;
    }
};

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<int> scalars(const RingContext& ctx, SpanKind span) {
    std::vector<int> out;
    if (span == SpanKind::Module) {
        for (int i = 0; i < ctx.size(); ++i) out.push_back(i);
    } else {
        for (int c = 0; c < ctx.p; ++c) out.push_back(element_index({c, 0}, ctx.p));
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> dual_of_span(const Word& v, const RingContext& ctx) {
    const int n = static_cast<int>(v.size());
    const std::uint64_t total = word_space_size(ctx.p, n);
    if (total > kEnumerationGuard)
        throw Error(Errc::GuardExceeded, "p^(2n) exceeds the enumeration guard for dual computation");
    const int p = ctx.p, q = p * p;
    // u . conj(v) is additive in u, so precompute each coordinate's contribution.
    std::vector<std::vector<RingElement>> contrib(static_cast<std::size_t>(n), std::vector<RingElement>(q));
    for (int j = 0; j < n; ++j) {
        RingElement cv = ring_conj(v[static_cast<std::size_t>(j)], ctx);
        for (int i = 0; i < q; ++i) contrib[j][i] = ring_mul(element_at(i, p), cv, ctx);
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        RingElement acc{};
        std::uint64_t rest = code;
        for (int j = n - 1; j >= 0; --j) {
            acc = ring_add(acc, contrib[j][static_cast<int>(rest % q)], ctx);
            rest /= q;
        }
        if (acc.is_zero()) out.push_back(code);
    }
    return out;
}

std::vector<std::uint64_t> span_of(const Word& v, const RingContext& ctx, SpanKind span) {
    WordOps ops(ctx, static_cast<int>(v.size()));
    std::uint64_t code = encode_word(v, ctx.p);
    std::vector<std::uint64_t> out;
    for (int c : scalars(ctx, span)) out.push_back(ops.scale(c, code));
    sort_unique(out);
    return out;
}

Code build_code_with_dual(RingElement a1, RingElement a2, const Word& v, SpanKind span, const RingContext& ctx,
                          const std::vector<std::uint64_t>& dual) {
    const int n = static_cast<int>(v.size());
    WordOps ops(ctx, n);
    const int i1 = element_index(a1, ctx.p), i2 = element_index(a2, ctx.p);
    std::vector<std::uint64_t> left, right;
    for (auto x : span_of(v, ctx, span)) left.push_back(ops.scale(i1, x));
    for (auto y : dual) right.push_back(ops.scale(i2, y));
    sort_unique(left);
    sort_unique(right);
    Code c;
    c.ctx = ctx;
    c.n = n;
    c.span = span;
    c.provenance = Generators{a1, a2, v};
    c.words.reserve(left.size() * right.size());
    for (auto x : left)
        for (auto y : right) c.words.push_back(ops.plus(x, y));
    sort_unique(c.words);
    return c;
}

Code build_code(RingElement a1, RingElement a2, const Word& v, SpanKind span, const RingContext& ctx) {
    return build_code_with_dual(a1, a2, v, span, ctx, dual_of_span(v, ctx));
}

bool code_equal(const Code& c1, const Code& c2) {
    if (!(c1.ctx == c2.ctx) || c1.n != c2.n) throw Error(Errc::ContextMismatch, "codes over different rings or lengths");
    return c1.words == c2.words;
}

bool is_additively_closed(const Code& c) {
    WordOps ops(c.ctx, c.n);
    for (auto x : c.words)
        for (auto y : c.words)
            if (!std::binary_search(c.words.begin(), c.words.end(), ops.plus(x, y))) return false;
    return true;
}

bool is_scalar_closed(const Code& c, SpanKind span) {
    WordOps ops(c.ctx, c.n);
    for (int s : scalars(c.ctx, span))
        for (auto x : c.words)
            if (!std::binary_search(c.words.begin(), c.words.end(), ops.scale(s, x))) return false;
    return true;
}

std::string format_word(const Word& w) {
    std::string out = "(";
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j) out += ",";
        out += format_element(w[j]);
    }
    return out + ")";
}

}  // namespace thetacodes

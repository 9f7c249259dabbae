#include "thetacodes/kernel.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "thetacodes/parallel.hpp"
#include "thetacodes/theta.hpp"

namespace thetacodes {

std::vector<Exponents> monomials(int k, int n) {
    std::vector<Exponents> out;
    Exponents e(static_cast<std::size_t>(k), 0);
    // Depth-first with the largest exponent on the earliest variable first.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == k - 1) {
            e[static_cast<std::size_t>(i)] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, left - x);
        }
    };
    if (k > 0) rec(rec, 0, n);
    return out;
}

IntVector ThetaMatrix::column(std::size_t c) const {
    IntVector out;
    out.reserve(entries.size());
    for (const auto& row : entries) out.push_back(row[c]);
    return out;
}

ThetaMatrix build_matrix(int p, const Level& level, int n, int truncation) {
    const std::size_t len = static_cast<std::size_t>(truncation) + 1;
    const int k = swe_variable_count(p);
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> base(static_cast<std::size_t>(k));
    {
        auto series = swe_series(level, p, Rational(static_cast<std::int64_t>(len)));
        for (int i = 0; i < k; ++i) {
            auto dense = series[static_cast<std::size_t>(i)].dense(static_cast<std::int64_t>(len));
            for (std::size_t r = 0; r < len; ++r)
                if (dense[r] != 0) base[static_cast<std::size_t>(i)].emplace_back(r, dense[r]);
        }
    }
    // Column of e = column of (e minus its first variable) times that variable's series.
    std::map<Exponents, IntVector> prev;
    IntVector one(len);
    one[0] = 1;
    prev.emplace(Exponents(static_cast<std::size_t>(k), 0), one);
    for (int deg = 1; deg <= n; ++deg) {
        auto mons = monomials(k, deg);
        std::vector<IntVector> cols(mons.size());
        parallel_for(mons.size(), [&](std::size_t idx) {
            Exponents parent = mons[idx];
            std::size_t v = 0;
            while (parent[v] == 0) ++v;
            --parent[v];
            const IntVector& src = prev.at(parent);
            IntVector dst(len);
            for (const auto& [off, c] : base[v])
                for (std::size_t r = 0; r + off < len; ++r)
                    if (src[r] != 0) mpz_addmul(dst[r + off].get_mpz_t(), src[r].get_mpz_t(), c.get_mpz_t());
            cols[idx] = std::move(dst);
        });
        prev.clear();
        for (std::size_t i = 0; i < mons.size(); ++i) prev.emplace(mons[i], std::move(cols[i]));
    }
    ThetaMatrix m;
    m.p = p;
    m.level = level;
    m.n = n;
    m.truncation = truncation;
    m.monomials = monomials(k, n);
    m.entries.assign(len, IntVector(m.monomials.size()));
    for (std::size_t c = 0; c < m.monomials.size(); ++c) {
        const IntVector& col = prev.at(m.monomials[c]);
        for (std::size_t r = 0; r < len; ++r) m.entries[r][c] = col[r];
    }
    return m;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
    IntVector out(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0 && m[r][c] != 0) mpz_addmul(out[r].get_mpz_t(), m[r][c].get_mpz_t(), v[c].get_mpz_t());
    return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 P) { return static_cast<u64>(u128(a) * b % P); }

u64 powmod(u64 a, u64 e, u64 P) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, P);
        a = mulmod(a, a, P);
        e >>= 1;
    }
    return r;
}

// Deterministic sequence of primes just below 2^62.
u64 nth_prime(std::size_t i) {
    static std::vector<u64> cache;
    static std::mutex mu;
    std::lock_guard lock(mu);
    mpz_class x = (mpz_class(1) << 62) - 1;
    if (!cache.empty()) x = mpz_class(static_cast<unsigned long>(cache.back())) - 1;
    while (cache.size() <= i) {
        while (mpz_probab_prime_p(x.get_mpz_t(), 40) == 0) --x;
        cache.push_back(x.get_ui());
        --x;
    }
    return cache[i];
}

struct ModRref {
    u64 P = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<u64>> rows;  // rank rows, pivot entries 1, Gauss-Jordan reduced
};

ModRref rref_mod(const IntMatrix& m, std::size_t cols, u64 P) {
    std::vector<std::vector<u64>> a(m.size(), std::vector<u64>(cols));
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = mpz_fdiv_ui(m[r][c].get_mpz_t(), P);
    ModRref out;
    out.P = P;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        u64 inv = powmod(a[rank][c], P - 2, P);
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv, P);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            u64 f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (a[rank][j] == 0) continue;
                u64 t = mulmod(f, a[rank][j], P);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + P - t;
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    a.resize(rank);
    out.rows = std::move(a);
    return out;
}

std::vector<std::size_t> free_columns(const std::vector<std::size_t>& pivots, std::size_t cols) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (k < pivots.size() && pivots[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

// a/b with |a|, b <= sqrt(M/2) and a = b x mod M, if one exists.
bool rational_reconstruct(const mpz_class& x, const mpz_class& M, mpz_class& num, mpz_class& den) {
    mpz_class bound = sqrt(M / 2);
    mpz_class r0 = M, r1 = x % M, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += M;
    while (r1 > bound) {
        mpz_class qt = r0 / r1;
        mpz_class r2 = r0 - qt * r1;
        mpz_class t2 = t0 - qt * t1;
        r0 = r1, r1 = r2, t0 = t1, t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    num = t1 < 0 ? mpz_class(-r1) : r1;
    den = abs(t1);
    return gcd(num, den) == 1;
}

void make_primitive(IntVector& v) {
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return;
    auto first = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return x != 0; });
    if (*first < 0) g = -g;
    for (auto& x : v) x /= g;
}

bool is_zero_vector(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// Reconstructs kernel vectors of the RREF from CRT residues; false if any entry fails.
bool reconstruct(const std::vector<std::vector<mpz_class>>& residues, const mpz_class& M,
                 const std::vector<std::size_t>& pivots, const std::vector<std::size_t>& frees, std::size_t cols,
                 std::vector<IntVector>& out) {
    out.clear();
    for (std::size_t f = 0; f < frees.size(); ++f) {
        // Entries of one RREF column share a denominator; fold it in as we go.
        mpz_class D = 1;
        std::vector<mpz_class> nums(pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            mpz_class y = (residues[i][f] * D) % M;
            mpz_class a, b;
            if (!rational_reconstruct(y, M, a, b)) return false;
            if (b != 1) {
                for (std::size_t j = 0; j < i; ++j) nums[j] *= b;
                D *= b;
            }
            nums[i] = a;
        }
        IntVector v(cols);
        v[frees[f]] = D;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = nums[i];
        make_primitive(v);
        out.push_back(std::move(v));
    }
    return true;
}

constexpr std::size_t kMaxPrimes = 256;

}  // namespace

ExactKernel bareiss_kernel(const IntMatrix& m, std::size_t cols) {
    IntMatrix a = m;
    mpz_class prev = 1;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        const mpz_class pv = a[rank][c];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank) continue;
            const mpz_class f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                mpz_class t = pv * a[i][j] - f * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pv;
        pivots.push_back(c);
        ++rank;
    }
    ExactKernel out;
    out.rank = static_cast<int>(rank);
    out.method = "bareiss";
    // After fraction-free Gauss-Jordan every pivot equals the last one.
    for (std::size_t f : free_columns(pivots, cols)) {
        IntVector v(cols);
        v[f] = prev;
        for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -a[i][f];
        make_primitive(v);
        out.basis.push_back(std::move(v));
    }
    return out;
}

ExactKernel exact_kernel(const IntMatrix& m, std::size_t cols) {
    ExactKernel out;
    out.method = "modular";
    if (m.empty() || cols == 0) {
        for (std::size_t f = 0; f < cols; ++f) {
            IntVector v(cols);
            v[f] = 1;
            out.basis.push_back(std::move(v));
        }
        return out;
    }
    ModRref ref = rref_mod(m, cols, nth_prime(0));
    std::vector<std::vector<mpz_class>> residues;
    mpz_class M;
    std::vector<IntVector> candidate, previous;
    auto reset = [&](const ModRref& r) {
        ref = r;
        auto frees = free_columns(ref.pivots, cols);
        residues.assign(ref.pivots.size(), std::vector<mpz_class>(frees.size()));
        for (std::size_t i = 0; i < ref.pivots.size(); ++i)
            for (std::size_t f = 0; f < frees.size(); ++f)
                residues[i][f] = static_cast<unsigned long>(ref.P - ref.rows[i][frees[f]]) % ref.P;
        M = static_cast<unsigned long>(ref.P);
        previous.clear();
    };
    reset(ref);
    auto frees = free_columns(ref.pivots, cols);
    if (frees.empty()) {
        out.rank = static_cast<int>(cols);
        return out;
    }
    for (std::size_t k = 1; k < kMaxPrimes; ++k) {
        frees = free_columns(ref.pivots, cols);
        if (reconstruct(residues, M, ref.pivots, frees, cols, candidate)) {
            // Verify only once two prime counts agree; exact checks are the costly part.
            if (candidate == previous) {
                bool ok = true;
                for (const auto& v : candidate)
                    if (!is_zero_vector(mat_vec(m, v))) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    out.rank = static_cast<int>(ref.pivots.size());
                    out.basis = candidate;
                    return out;
                }
            }
            previous = candidate;
        }
        ModRref next = rref_mod(m, cols, nth_prime(k));
        if (next.pivots.size() > ref.pivots.size() ||
            (next.pivots.size() == ref.pivots.size() && next.pivots < ref.pivots)) {
            reset(next);
            continue;
        }
        if (next.pivots != ref.pivots) continue;  // rank dropped mod this prime
        mpz_class P = static_cast<unsigned long>(next.P);
        mpz_class Minv;
        mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), P.get_mpz_t());
        for (std::size_t i = 0; i < ref.pivots.size(); ++i)
            for (std::size_t f = 0; f < frees.size(); ++f) {
                mpz_class r = static_cast<unsigned long>((next.P - next.rows[i][frees[f]]) % next.P);
                mpz_class& x = residues[i][f];
                mpz_class t = ((r - x) * Minv) % P;
                if (t < 0) t += P;
                x += M * t;
            }
        M *= P;
    }
    return bareiss_kernel(m, cols);
}

KernelReport exact_nullity(const ThetaMatrix& m) {
    ExactKernel k = exact_kernel(m.entries, m.cols());
    KernelReport r;
    r.p = m.p;
    r.level = m.level;
    r.n = m.n;
    r.truncation = m.truncation;
    r.rows = m.rows();
    r.cols = m.cols();
    r.rank = k.rank;
    r.nullity = static_cast<int>(m.cols()) - k.rank;
    r.monomials = m.monomials;
    r.kernel_basis = std::move(k.basis);
    r.method = k.method;
    r.truncations_tried.push_back({m.truncation, r.nullity});
    return r;
}

KernelReport stabilized_nullity(int p, const Level& level, int n, int ceiling) {
    int T = std::max<std::int64_t>(17, 4 * n + level.ell);
    std::vector<TruncationStep> tried;
    KernelReport last;
    for (;;) {
        if (T > ceiling)
            throw Error(Errc::BudgetExceeded, "truncation " + std::to_string(T) + " exceeds ceiling " +
                                                  std::to_string(ceiling));
        last = exact_nullity(build_matrix(p, level, n, T));
        if (!tried.empty() && last.nullity > tried.back().nullity)
            throw Error(Errc::InternalScaleError, "nullity increased with truncation");
        tried.push_back({T, last.nullity});
        std::size_t s = tried.size();
        if (s >= 3 && tried[s - 1].nullity == tried[s - 2].nullity && tried[s - 2].nullity == tried[s - 3].nullity)
            break;
        T *= 2;
    }
    last.truncations_tried = tried;
    last.stabilized = true;
    return last;
}

WeightEnumerator relation_polynomial(const KernelReport& report, const IntVector& v) {
    WeightEnumerator w(swe_variable_count(report.p), report.n);
    for (std::size_t c = 0; c < v.size(); ++c) w.add(report.monomials[c], v[c]);
    return w;
}

std::pair<WeightEnumerator, WeightEnumerator> kernel_to_relation(const KernelReport& report, std::size_t index) {
    if (report.kernel_basis.empty()) throw Error(Errc::EmptyKernel, "nullity 0: no relation to render");
    const IntVector& v = report.kernel_basis.at(index);
    const int k = swe_variable_count(report.p);
    WeightEnumerator lhs(k, report.n), rhs(k, report.n);
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] > 0) lhs.add(report.monomials[c], v[c]);
        if (v[c] < 0) rhs.add(report.monomials[c], -v[c]);
    }
    return {lhs, rhs};
}

}  // namespace thetacodes

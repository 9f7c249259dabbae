#pragma once

// The monomial-theta matrix M_{ell,n}: one column per degree-n monomial in the
// swe variables, holding the coefficients of q^0..q^T of its theta series.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "thetacodes/arith.hpp"
#include "thetacodes/enumerators.hpp"

namespace thetacodes {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Degree-n exponent vectors in k variables, graded lex (X^n first).
std::vector<Exponents> monomials(int k, int n);

struct ThetaMatrix {
    int p = 2;
    Level level;
    int n = 0;
    int truncation = 0;  // rows are q^0 .. q^T
    std::vector<Exponents> monomials;
    IntMatrix entries;  // (T+1) x monomials.size()

    std::size_t rows() const noexcept { return entries.size(); }
    std::size_t cols() const noexcept { return monomials.size(); }
    IntVector column(std::size_t c) const;
};

ThetaMatrix build_matrix(int p, const Level& level, int n, int truncation);

struct TruncationStep {
    int truncation;
    int nullity;
};

struct KernelReport {
    int p = 2;
    Level level;
    int n = 0;
    int truncation = 0;
    std::size_t rows = 0, cols = 0;
    int rank = 0;
    int nullity = 0;
    std::vector<Exponents> monomials;
    std::vector<IntVector> kernel_basis;  // primitive, first nonzero entry positive
    bool stabilized = false;
    std::vector<TruncationStep> truncations_tried;
    std::string method;  // "modular" or "bareiss"
};

/// Rank and kernel of an integer matrix. The modular path gives a lower bound
/// on the rank from several primes and an upper bound by exhibiting
/// cols - rank independent kernel vectors verified exactly over Z; if that
/// certificate cannot be completed it falls back to fraction-free elimination.
struct ExactKernel {
    int rank = 0;
    std::vector<IntVector> basis;
    std::string method;
};
ExactKernel exact_kernel(const IntMatrix& m, std::size_t cols);
/// Fraction-free Gauss-Jordan elimination over Z.
ExactKernel bareiss_kernel(const IntMatrix& m, std::size_t cols);

KernelReport exact_nullity(const ThetaMatrix& m);

inline constexpr int kDefaultTruncationCeiling = 2048;

/// Nullity at T0 = max(17, 4n + ell), doubling T until the nullity is the
/// same at three consecutive truncations.
KernelReport stabilized_nullity(int p, const Level& level, int n, int ceiling = kDefaultTruncationCeiling);

/// Splits a kernel vector into positive and negative parts: lhs - rhs is the relation.
std::pair<WeightEnumerator, WeightEnumerator> kernel_to_relation(const KernelReport& report, std::size_t index = 0);
/// Relation polynomial sum_c v_c m_c for an arbitrary vector.
WeightEnumerator relation_polynomial(const KernelReport& report, const IntVector& v);

/// Multiplies a matrix by an integer vector exactly.
IntVector mat_vec(const IntMatrix& m, const IntVector& v);

}  // namespace thetacodes

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fauxtree/matrix.hpp"
#include "fauxtree/polynomial.hpp"

namespace fauxtree {

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class det_int(const IntMatrix& m);

/// Exact determinant of a square rational-polynomial matrix whose entries
/// have degree at most `entry_degree_bound`.
///
/// The determinant (degree at most rows * bound) is sampled at the integer
/// points 0..rows*bound; each sample scales every row to integers by the lcm
/// of its denominators, takes det_int, and divides the multipliers back out.
/// The samples are then interpolated.
RatPoly det_poly(const PolyMatrix& m, int entry_degree_bound);

/// The unique polynomial of degree < points.size() through (points[i], values[i]).
RatPoly interpolate(std::span<const mpq_class> points, std::span<const mpq_class> values);

/// Small integer matrix used by the multimodular kernels.
using SmallIntMatrix = Matrix<std::int64_t>;

/// det(xI - m) for an integer matrix, computed modulo enough 62-bit primes
/// (Hessenberg reduction per prime) and lifted by Chinese remaindering
/// against a Hadamard-type coefficient bound.
IntPoly charpoly_multimodular(const SmallIntMatrix& m);

/// det(x * diag(d) - a) for an integer matrix `a` and nonzero integer diagonal `d`.
IntPoly pencil_det_multimodular(std::span<const std::int64_t> d, const SmallIntMatrix& a);

/// The prime moduli used by the multimodular kernels (all below 2^62).
std::span<const std::uint64_t> modular_primes();

}  // namespace fauxtree

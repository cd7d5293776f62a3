#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fauxtree/graph.hpp"
#include "fauxtree/matrix.hpp"
#include "fauxtree/polynomial.hpp"

namespace fauxtree {

enum class MatrixKind {
  Adjacency,            ///< A
  Laplacian,            ///< L = D - A
  SignlessLaplacian,    ///< Q = D + A
  NormalizedAdjacency,  ///< D^{-1/2} A D^{-1/2}
};

/// Short labels used in files and on the command line: A, L, Q, NA.
std::string_view kind_label(MatrixKind kind);
std::optional<MatrixKind> parse_kind(std::string_view label);

class SpectrumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A spectrum, represented exactly by its monic characteristic polynomial.
/// Integer-valued for A, L and Q; rational for the normalized adjacency.
struct Spectrum {
  MatrixKind kind = MatrixKind::Adjacency;
  RatPoly charpoly;

  int order() const { return charpoly.degree(); }
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Integer matrix of the given kind (A, L or Q).
IntMatrix integer_matrix(const Graph& g, MatrixKind kind);

/// Exact characteristic polynomial. For the normalized adjacency it is
/// det(xD - A) / det(D), the characteristic polynomial of the similar matrix
/// D^{-1} A; graphs with an isolated vertex are rejected for that kind.
Spectrum char_poly(const Graph& g, MatrixKind kind);

/// Same polynomial computed by evaluation/interpolation with Bareiss
/// determinants instead of the multimodular kernel (slower; cross-check route).
Spectrum char_poly_by_interpolation(const Graph& g, MatrixKind kind);

bool cospectral(const Graph& a, const Graph& b, MatrixKind kind);

/// Largest k such that (x - r)^k divides the characteristic polynomial.
int root_multiplicity(const Spectrum& s, const mpq_class& r);

/// Kirchhoff count: determinant of a principal (n-1)-minor of L.
mpz_class spanning_tree_count(const Graph& g);

/// Product of the eigenvalues, (-1)^n times the constant coefficient.
mpq_class det_from_spectrum(const Spectrum& s);

/// Product of the nonzero eigenvalues: (-1)^(n-k) times the lowest nonzero
/// coefficient, where k is the multiplicity of 0.
mpq_class nonzero_eigenvalue_product(const Spectrum& s);

/// Negated coefficient of x^(n-1): the sum of the eigenvalues.
mpq_class trace_from_spectrum(const Spectrum& s);

}  // namespace fauxtree

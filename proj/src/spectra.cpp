#include "fauxtree/spectra.hpp"

#include "fauxtree/algebra.hpp"

namespace fauxtree {

std::string_view kind_label(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "A";
    case MatrixKind::Laplacian: return "L";
    case MatrixKind::SignlessLaplacian: return "Q";
    case MatrixKind::NormalizedAdjacency: return "NA";
  }
  return "?";
}

std::optional<MatrixKind> parse_kind(std::string_view label) {
  if (label == "A") return MatrixKind::Adjacency;
  if (label == "L") return MatrixKind::Laplacian;
  if (label == "Q") return MatrixKind::SignlessLaplacian;
  if (label == "NA") return MatrixKind::NormalizedAdjacency;
  return std::nullopt;
}

namespace {

// Off-diagonal sign and whether the degree sits on the diagonal.
std::pair<int, int> integer_pattern(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return {1, 0};
    case MatrixKind::Laplacian: return {-1, 1};
    case MatrixKind::SignlessLaplacian: return {1, 1};
    case MatrixKind::NormalizedAdjacency: break;
  }
  throw SpectrumError("normalized adjacency has no integer matrix");
}

SmallIntMatrix small_matrix(const Graph& g, int off, int diag) {
  const int n = g.order();
  SmallIntMatrix m(n, n, 0);
  for (int u = 0; u < n; ++u) {
    m(u, u) = diag * degree(g, u);
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) m(u, v) = off;
  }
  return m;
}

void require_no_isolated(const Graph& g) {
  if (g.order() == 0 || min_degree(g) == 0) {
    throw SpectrumError("normalized adjacency needs a graph without isolated vertices");
  }
}

mpz_class degree_product(const Graph& g) {
  mpz_class prod = 1;
  for (int v = 0; v < g.order(); ++v) prod *= degree(g, v);
  return prod;
}

}  // namespace

IntMatrix integer_matrix(const Graph& g, MatrixKind kind) {
  auto [off, diag] = integer_pattern(kind);
  const int n = g.order();
  IntMatrix m(n, n, mpz_class(0));
  for (int u = 0; u < n; ++u) {
    m(u, u) = diag * degree(g, u);
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) m(u, v) = off;
  }
  return m;
}

Spectrum char_poly(const Graph& g, MatrixKind kind) {
  if (kind == MatrixKind::NormalizedAdjacency) {
    require_no_isolated(g);
    std::vector<std::int64_t> deg(g.order());
    for (int v = 0; v < g.order(); ++v) deg[v] = degree(g, v);
    IntPoly p = pencil_det_multimodular(deg, small_matrix(g, 1, 0));
    mpq_class scale(mpz_class(1), degree_product(g));
    scale.canonicalize();
    return Spectrum{kind, to_rational(p) * scale};
  }
  auto [off, diag] = integer_pattern(kind);
  return Spectrum{kind, to_rational(charpoly_multimodular(small_matrix(g, off, diag)))};
}

Spectrum char_poly_by_interpolation(const Graph& g, MatrixKind kind) {
  const int n = g.order();
  PolyMatrix m(n, n);
  if (kind == MatrixKind::NormalizedAdjacency) {
    require_no_isolated(g);
    // x D - A
    for (int u = 0; u < n; ++u) {
      m(u, u) = RatPoly::monomial(mpq_class(degree(g, u)), 1);
      for (int v = 0; v < n; ++v)
        if (g.adjacent(u, v)) m(u, v) = RatPoly(mpq_class(-1));
    }
    RatPoly p = det_poly(m, 1);
    mpq_class scale(mpz_class(1), degree_product(g));
    scale.canonicalize();
    return Spectrum{kind, p * scale};
  }
  // x I - M
  const IntMatrix im = integer_matrix(g, kind);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      RatPoly e(mpq_class(-im(u, v)));
      if (u == v) e += RatPoly::x();
      m(u, v) = e;
    }
  }
  return Spectrum{kind, det_poly(m, 1)};
}

bool cospectral(const Graph& a, const Graph& b, MatrixKind kind) {
  if (a.order() != b.order()) throw SpectrumError("cospectral: vertex counts differ");
  return char_poly(a, kind).charpoly == char_poly(b, kind).charpoly;
}

int root_multiplicity(const Spectrum& s, const mpq_class& r) {
  if (s.charpoly.is_zero()) throw SpectrumError("zero polynomial has no root multiplicity");
  const RatPoly factor = RatPoly::linear_root(r);
  RatPoly p = s.charpoly;
  int k = 0;
  while (p.degree() >= 1 && p(r) == 0) {
    p = divexact(p, factor);
    ++k;
  }
  return k;
}

mpz_class spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  const IntMatrix lap = integer_matrix(g, MatrixKind::Laplacian);
  IntMatrix minor(n - 1, n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) minor(i - 1, j - 1) = lap(i, j);
  return det_int(minor);
}

mpq_class det_from_spectrum(const Spectrum& s) {
  mpq_class c = s.charpoly.coeff(0);
  return (s.order() % 2 == 0) ? c : mpq_class(-c);
}

mpq_class nonzero_eigenvalue_product(const Spectrum& s) {
  int k = 0;
  while (k <= s.order() && s.charpoly.coeff(k) == 0) ++k;
  mpq_class c = s.charpoly.coeff(k);
  return ((s.order() - k) % 2 == 0) ? c : mpq_class(-c);
}

mpq_class trace_from_spectrum(const Spectrum& s) {
  return -s.charpoly.coeff(s.order() - 1);
}

}  // namespace fauxtree

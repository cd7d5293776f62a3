#include "fauxtree/word.hpp"

namespace fauxtree {
namespace {

constexpr int kStates = 7;

mpq_class frac(long num, long den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

void check_pq(int p, int q) {
  if (p < 1 || q < 2) throw WordError("transfer system needs p >= 1 and q >= 2");
}

// Row patterns per state for the single and double letters.
enum Pattern { E, T };

int pattern_value(Pattern pat, int state) { return (pat == T && state >= 4) ? 0 : 1; }

PolyMatrix to_poly(const RatMatrix& m) {
  PolyMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = RatPoly(m(i, j));
  return r;
}

}  // namespace

TransferMatrixSet transfer_matrices(int p, int q) {
  check_pq(p, q);
  const long s = p + q;
  const RatPoly x = RatPoly::x();
  const RatPoly lift = RatPoly::monomial(mpq_class(1), p + q - 3);
  const RatPoly x2 = RatPoly::monomial(mpq_class(1), 2);

  TransferMatrixSet m;
  m.p = p;
  m.q = q;

  m.i_row = PolyMatrix(1, kStates);
  for (int j = 0; j < kStates; ++j) m.i_row(0, j) = x * (j < 4 ? mpq_class(1) : frac(s, q));

  const std::vector<RatPoly> s_diag{
      x2,
      RatPoly(frac(-(p - 1) * (q - 2), p * q)),
      RatPoly(frac(-(p - 1), p * q)),
      RatPoly(frac(-(p - 1), q * s)),
      RatPoly(frac(-(q - 2), p * s)),
      RatPoly(frac(-1, p * s)),
      RatPoly(frac(-1, s * s)),
  };
  const Pattern s_rows[kStates] = {E, E, E, T, E, E, T};
  m.s_mat = PolyMatrix(kStates, kStates);
  for (int i = 0; i < kStates; ++i) {
    const RatPoly entry = lift * s_diag[i];
    for (int j = 0; j < kStates; ++j)
      if (pattern_value(s_rows[i], j)) m.s_mat(i, j) = entry;
  }

  const std::vector<RatPoly> d_diag{
      x2,
      RatPoly(frac(-(p - 1) * (q - 2), p * q)),
      RatPoly(frac(-(p - 1), q * s)),
      RatPoly(frac(-(p - 1), q * s)),
      RatPoly(frac(-(q - 2), p * s)),
      RatPoly(frac(-1, s * s)),
      RatPoly(frac(-1, s * s)),
  };
  const Pattern d_rows[kStates][2] = {{E, E}, {E, E}, {T, E}, {E, T}, {E, E}, {T, E}, {E, T}};
  m.d_mat = PolyMatrix(kStates, kStates * kStates);
  for (int i = 0; i < kStates; ++i) {
    const RatPoly entry = lift * d_diag[i];
    for (int a = 0; a < kStates; ++a)
      for (int b = 0; b < kStates; ++b)
        if (pattern_value(d_rows[i][0], a) && pattern_value(d_rows[i][1], b))
          m.d_mat(i, kStates * a + b) = entry;
  }

  const std::vector<RatPoly> e_vals{
      x2,
      RatPoly(frac(-(p - 1) * (q - 2), p * q)),
      RatPoly(frac(-(p - 1), p * q)),
      RatPoly(frac(-(p - 1), p * q)),
      RatPoly(frac(-(q - 2), p * s)),
      RatPoly(frac(-1, p * s)),
      RatPoly(frac(-1, p * s)),
  };
  m.e_col = PolyMatrix(kStates, 1);
  for (int i = 0; i < kStates; ++i) m.e_col(i, 0) = lift * e_vals[i];
  return m;
}

namespace {

PolyMatrix evaluate(const WordTree& w, const TransferMatrixSet& m, std::vector<PolyMatrix>* states) {
  PolyMatrix v;
  switch (w.kind()) {
    case WordTree::Kind::End: v = m.e_col; break;
    case WordTree::Kind::Single: v = m.s_mat * evaluate(w.children()[0], m, states); break;
    case WordTree::Kind::Double: {
      PolyMatrix plus = evaluate(w.children()[0], m, states);
      PolyMatrix minus = evaluate(w.children()[1], m, states);
      v = m.d_mat * kron(plus, minus);
      break;
    }
  }
  if (states) states->push_back(v);
  return v;
}

}  // namespace

RatPoly transfer_charpoly(const ExtendedWord& w, int p, int q, std::vector<PolyMatrix>* states) {
  const TransferMatrixSet m = transfer_matrices(p, q);
  return (m.i_row * evaluate(w.body, m, states))(0, 0);
}

RatMatrix intertwiner(int p, int q) {
  check_pq(p, q);
  if (p + q < 4) throw WordError("intertwiner needs p + q >= 4");
  const long s = p + q;
  const mpq_class a = frac(s * (p - 1) * (q - 2), p * q * (s - 3));
  const mpq_class b = frac(s * (p - 1) * (p - 1), p * q * (s - 1) * (s - 3));
  const mpq_class c = frac(s * (p - 1), p * (s - 1));
  const mpq_class d = frac(q - 2, p * (s - 3));
  const mpq_class e = frac(p - 1, p * (s - 1) * (s - 3));
  const mpq_class f = frac(q, p * (s - 1));
  RatMatrix u(kStates, kStates, mpq_class(0));
  u(0, 0) = 1;
  u(1, 1) = 1, u(1, 4) = a;
  u(2, 2) = 1, u(2, 4) = b, u(2, 5) = c;
  u(3, 3) = 1, u(3, 4) = b, u(3, 6) = c;
  u(4, 4) = d;
  u(5, 4) = e, u(5, 5) = f;
  u(6, 4) = e, u(6, 6) = f;
  return u;
}

IntertwinerReport verify_intertwiner(int p, int q) {
  const PolyMatrix u = to_poly(intertwiner(p, q));
  const TransferMatrixSet base = transfer_matrices(1, p + q - 1);
  const TransferMatrixSet m = transfer_matrices(p, q);
  IntertwinerReport r;
  r.u1 = base.i_row == m.i_row * u;
  r.u2 = u * base.s_mat == m.s_mat * u;
  r.u3 = u * base.d_mat == m.d_mat * kron(u, u);
  r.u4 = u * base.e_col == m.e_col;
  return r;
}

}  // namespace fauxtree

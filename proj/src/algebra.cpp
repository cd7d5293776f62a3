#include "fauxtree/algebra.hpp"

#include <cmath>
#include <sstream>

namespace fauxtree {

// ---------------------------------------------------------------------------
// Formatting

std::vector<std::string> coefficient_strings(const RatPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  return out;
}

std::vector<std::string> coefficient_strings(const IntPoly& p) {
  return coefficient_strings(to_rational(p));
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    mpq_class c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || k == 0) os << c.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::string to_string(const IntPoly& p) { return to_string(to_rational(p)); }

// ---------------------------------------------------------------------------
// Determinants

mpz_class det_int(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_int needs a square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatPoly interpolate(std::span<const mpq_class> points, std::span<const mpq_class> values) {
  if (points.size() != values.size()) throw std::invalid_argument("interpolation size mismatch");
  const std::size_t n = points.size();
  // Newton divided differences, in place.
  std::vector<mpq_class> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
    }
  }
  RatPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * RatPoly::linear_root(points[i]) + RatPoly(dd[i]);
  }
  return result;
}

RatPoly det_poly(const PolyMatrix& m, int entry_degree_bound) {
  if (!m.is_square()) throw std::invalid_argument("det_poly needs a square matrix");
  const int n = m.rows();
  for (const auto& e : m.entries()) {
    if (e.degree() > entry_degree_bound) {
      throw std::invalid_argument("matrix entry exceeds the stated degree bound");
    }
  }
  const int result_bound = n * std::max(entry_degree_bound, 0);
  std::vector<mpq_class> points, values;
  for (int t = 0; t <= result_bound; ++t) {
    const mpq_class x(t);
    IntMatrix sample(n, n);
    mpz_class multiplier = 1;
    for (int i = 0; i < n; ++i) {
      std::vector<mpq_class> row(n);
      mpz_class row_lcm = 1;
      for (int j = 0; j < n; ++j) {
        row[j] = m(i, j)(x);
        mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), row[j].get_den_mpz_t());
      }
      for (int j = 0; j < n; ++j) sample(i, j) = row[j].get_num() * (row_lcm / row[j].get_den());
      multiplier *= row_lcm;
    }
    points.push_back(x);
    mpq_class value(det_int(sample), multiplier);
    value.canonicalize();
    values.push_back(value);
  }
  return interpolate(points, values);
}

// ---------------------------------------------------------------------------
// Multimodular characteristic polynomials

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, b = mulmod(b, b, p)) {
    if (e & 1) r = mulmod(r, b, p);
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr int kPrimeBits = 61;  // every modulus exceeds 2^61

u64 to_residue(std::int64_t v, u64 p) {
  if (v >= 0) return static_cast<u64>(v) % p;
  u64 r = static_cast<u64>(-(v + 1)) % p;  // avoids overflow at INT64_MIN
  return submod(p - 1, r, p);
}

// Characteristic polynomial det(xI - h) mod p of a dense matrix, by reduction
// to upper Hessenberg form followed by the standard three-term recurrence.
std::vector<u64> charpoly_mod(std::vector<u64> h, int n, u64 p) {
  auto at = [&](int i, int j) -> u64& { return h[static_cast<std::size_t>(i) * n + j]; };
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = j + 1;
    while (pivot < n && at(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(j + 1, c));
      for (int r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, j + 1));
    }
    const u64 inv = invmod(at(j + 1, j), p);
    for (int k = j + 2; k < n; ++k) {
      if (at(k, j) == 0) continue;
      const u64 u = mulmod(at(k, j), inv, p);
      for (int c = 0; c < n; ++c) at(k, c) = submod(at(k, c), mulmod(u, at(j + 1, c), p), p);
      for (int r = 0; r < n; ++r) at(r, j + 1) = addmod(at(r, j + 1), mulmod(u, at(r, k), p), p);
    }
  }
  // polys[m] holds the characteristic polynomial of the leading m x m block.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {1};
  for (int m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const auto& prev = polys[m - 1];
    const u64 diag = at(m - 1, m - 1);
    for (int k = 0; k < m; ++k) {
      cur[k + 1] = addmod(cur[k + 1], prev[k], p);
      cur[k] = submod(cur[k], mulmod(diag, prev[k], p), p);
    }
    u64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = mulmod(t, at(m - i, m - i - 1), p);
      if (t == 0) break;
      const u64 f = mulmod(t, at(m - i - 1, m - 1), p);
      if (f == 0) continue;
      const auto& lower = polys[m - i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) cur[k] = submod(cur[k], mulmod(f, lower[k], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

// Lifts residue vectors (one per prime) to integers in the symmetric range.
IntPoly crt_lift(const std::vector<std::vector<u64>>& residues) {
  const auto primes = modular_primes();
  const std::size_t len = residues.front().size();
  std::vector<mpz_class> coeffs(len);
  for (std::size_t k = 0; k < len; ++k) {
    mpz_class x = static_cast<unsigned long>(residues[0][k]);
    mpz_class modulus = static_cast<unsigned long>(primes[0]);
    for (std::size_t j = 1; j < residues.size(); ++j) {
      const u64 p = primes[j];
      mpz_class pz = static_cast<unsigned long>(p);
      mpz_class xm = x % pz;
      if (xm < 0) xm += pz;
      const u64 x_mod = xm.get_ui();
      mpz_class mm = modulus % pz;
      const u64 m_mod = mm.get_ui();
      const u64 step = mulmod(submod(residues[j][k], x_mod, p), invmod(m_mod, p), p);
      x += modulus * static_cast<unsigned long>(step);
      modulus *= pz;
    }
    if (2 * x > modulus) x -= modulus;
    coeffs[k] = x;
  }
  return IntPoly(std::move(coeffs));
}

std::size_t primes_for_bits(double bits) {
  const double needed = std::ceil(bits) + 2;
  auto count = static_cast<std::size_t>(std::ceil(needed / kPrimeBits));
  if (count > modular_primes().size()) throw std::overflow_error("coefficient bound too large");
  return std::max<std::size_t>(count, 1);
}

}  // namespace

std::span<const std::uint64_t> modular_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    for (u64 c = (u64{1} << 62) - 57; out.size() < 32; c -= 2) {
      if (is_prime_u64(c)) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

IntPoly charpoly_multimodular(const SmallIntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly needs a square matrix");
  const int n = m.rows();
  if (n == 0) return IntPoly(1);
  // |coefficient| <= prod_i (1 + |row_i|_2) bounds every sum of principal minors.
  double bits = 0;
  for (int i = 0; i < n; ++i) {
    double sq = 0;
    for (int j = 0; j < n; ++j) sq += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    bits += std::log2(1.0 + std::sqrt(sq));
  }
  const std::size_t count = primes_for_bits(bits);
  std::vector<std::vector<u64>> residues;
  for (std::size_t j = 0; j < count; ++j) {
    const u64 p = modular_primes()[j];
    std::vector<u64> h(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) h[static_cast<std::size_t>(r) * n + c] = to_residue(m(r, c), p);
    residues.push_back(charpoly_mod(std::move(h), n, p));
  }
  return crt_lift(residues);
}

IntPoly pencil_det_multimodular(std::span<const std::int64_t> d, const SmallIntMatrix& a) {
  const int n = a.rows();
  if (!a.is_square() || static_cast<int>(d.size()) != n) {
    throw std::invalid_argument("pencil shape mismatch");
  }
  if (n == 0) return IntPoly(1);
  // det(xD - A) = sum_S x^|S| prod_{S} d_i * (minor of -A on the complement),
  // so |coefficient| <= prod_i (|d_i| + |row_i(A)|_2).
  double bits = 0;
  for (int i = 0; i < n; ++i) {
    if (d[i] == 0) throw std::invalid_argument("pencil diagonal must be nonzero");
    double sq = 0;
    for (int j = 0; j < n; ++j) sq += static_cast<double>(a(i, j)) * static_cast<double>(a(i, j));
    bits += std::log2(1.0 + std::abs(static_cast<double>(d[i])) + std::sqrt(sq));
  }
  const std::size_t count = primes_for_bits(bits);
  std::vector<std::vector<u64>> residues;
  for (std::size_t j = 0; j < count; ++j) {
    const u64 p = modular_primes()[j];
    std::vector<u64> h(static_cast<std::size_t>(n) * n);
    u64 det_d = 1;
    for (int r = 0; r < n; ++r) {
      const u64 dr = to_residue(d[r], p);
      det_d = mulmod(det_d, dr, p);
      const u64 inv = invmod(dr, p);
      for (int c = 0; c < n; ++c) h[static_cast<std::size_t>(r) * n + c] = mulmod(inv, to_residue(a(r, c), p), p);
    }
    std::vector<u64> cp = charpoly_mod(std::move(h), n, p);
    for (auto& c : cp) c = mulmod(c, det_d, p);
    residues.push_back(std::move(cp));
  }
  return crt_lift(residues);
}

}  // namespace fauxtree

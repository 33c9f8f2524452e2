#include "nccount/algebraic.hpp"

#include <stdexcept>

namespace nccount {

namespace {

// Sparse view of an equation coefficient: nonzero (z-index, value) pairs.
template <class V>
using SparseVec = std::vector<std::pair<int, V>>;

template <class Ring>
SparseVec<typename Ring::value> sparsify(const SeriesT<Ring>& s) {
  SparseVec<typename Ring::value> out;
  for (int i = 0; i <= s.order(); ++i)
    if (!Ring::is_zero(s.c[i])) out.emplace_back(i, s.c[i]);
  return out;
}

template <class Ring>
void conv_add(std::vector<typename Ring::value>& dst,
              const SparseVec<typename Ring::value>& a,
              const std::vector<typename Ring::value>& b, int bval) {
  // dst += a * b, where b is only nonzero at indices >= bval.
  const int W = static_cast<int>(dst.size()) - 1;
  for (const auto& [i, av] : a) {
    for (int j = bval; i + j <= W && j < static_cast<int>(b.size()); ++j) {
      if (Ring::is_zero(b[j])) continue;
      dst[i + j] = Ring::add(dst[i + j], Ring::mul(av, b[j]));
    }
  }
}

// Order-by-order branch extension.  When the z = 0 specialization of the
// equation has a multiple root at the seed value, the next coefficient of Y
// enters P(Y) only at order n + v, where v is the z-valuation of P_Y along
// the branch; extraction divides by the leading coefficient there.
template <class Ring>
SeriesT<Ring> solve_core(const std::vector<SeriesT<Ring>>& coeffs,
                         const std::vector<typename Ring::value>& seed, int T,
                         int margin) {
  using V = typename Ring::value;
  const int D = static_cast<int>(coeffs.size()) - 1;
  const int W = T + margin;
  const int s = static_cast<int>(seed.size());
  if (s < 1) throw std::invalid_argument("solve_algebraic: empty seed");

  std::vector<SparseVec<V>> A(D + 1);
  for (int d = 0; d <= D; ++d) A[d] = sparsify(coeffs[d]);

  std::vector<V> y(W + 1, Ring::zero());
  for (int i = 0; i < s && i <= W; ++i) y[i] = seed[i];

  // Powers of the current truncation of Y.
  std::vector<std::vector<V>> pw(D + 1, std::vector<V>(W + 1, Ring::zero()));
  pw[0][0] = Ring::one();
  for (int d = 1; d <= D; ++d)
    for (int i = 0; i <= W; ++i) {
      if (Ring::is_zero(pw[d - 1][i])) continue;
      for (int j = 0; i + j <= W && j < s; ++j) {
        if (Ring::is_zero(y[j])) continue;
        pw[d][i + j] = Ring::add(pw[d][i + j], Ring::mul(pw[d - 1][i], y[j]));
      }
    }

  std::vector<V> resid(W + 1, Ring::zero());  // P(Y)
  std::vector<V> deriv(W + 1, Ring::zero());  // P_Y(Y)
  for (int d = 0; d <= D; ++d) {
    conv_add<Ring>(resid, A[d], pw[d], 0);
    if (d >= 1) {
      SparseVec<V> dA;
      for (const auto& [i, av] : A[d]) dA.emplace_back(i, Ring::mul(av, V(Rational(d))));
      conv_add<Ring>(deriv, dA, pw[d - 1], 0);
    }
  }

  int v = -1;
  for (int i = 0; i <= W; ++i)
    if (!Ring::is_zero(deriv[i])) {
      v = i;
      break;
    }
  if (v < 0 || v + 2 > margin)
    throw std::runtime_error("ambiguous seed, extend it");
  if (s <= v) throw std::runtime_error("ambiguous seed, extend it");
  const V b = deriv[v];

  for (int j = 0; j < std::min(s + v, W + 1); ++j)
    if (!Ring::is_zero(resid[j])) throw std::runtime_error("branch mismatch");

  std::vector<std::vector<V>> delta(D + 1);
  for (int n = s; n <= T; ++n) {
    auto u_opt = Ring::exact_div(Ring::neg(resid[n + v]), b);
    if (!u_opt) throw std::runtime_error("branch mismatch");
    V u = *u_opt;
    y[n] = u;
    if (Ring::is_zero(u)) continue;

    // delta_d = (Y + u z^n)^d - Y^d, from the powers before the update.
    std::vector<V> upow(D + 1, Ring::one());
    for (int j = 1; j <= D; ++j) upow[j] = Ring::mul(upow[j - 1], u);
    for (int d = 1; d <= D; ++d) {
      delta[d].assign(W + 1, Ring::zero());
      for (int j = 1; j <= d; ++j) {
        if (j * n > W) break;
        V f = Ring::mul(upow[j], V(Rational(binomial(d, j))));
        const auto& base = pw[d - j];
        for (int i = 0; i + j * n <= W; ++i) {
          if (Ring::is_zero(base[i])) continue;
          delta[d][i + j * n] = Ring::add(delta[d][i + j * n], Ring::mul(f, base[i]));
        }
      }
    }
    for (int d = 1; d <= D; ++d) {
      conv_add<Ring>(resid, A[d], delta[d], n);
      if (d + 1 <= D) {
        SparseVec<V> dA;
        for (const auto& [i, av] : A[d + 1])
          dA.emplace_back(i, Ring::mul(av, V(Rational(d + 1))));
        conv_add<Ring>(deriv, dA, delta[d], n);
      }
      for (int i = n; i <= W; ++i)
        if (!Ring::is_zero(delta[d][i])) pw[d][i] = Ring::add(pw[d][i], delta[d][i]);
    }
  }

  SeriesT<Ring> out(T);
  for (int i = 0; i <= T; ++i) out.c[i] = y[i];
  return out;
}

template <class Ring>
SeriesT<Ring> solve_dispatch(const std::vector<SeriesT<Ring>>& coeffs,
                             const std::vector<typename Ring::value>& seed, int T) {
  // Retry with a larger working margin if the derivative valuation is deep.
  for (int margin : {6, 14, 30}) {
    try {
      return solve_core<Ring>(coeffs, seed, T, margin);
    } catch (const std::runtime_error& e) {
      if (std::string(e.what()) == "ambiguous seed, extend it" && margin < 30) continue;
      throw;
    }
  }
  throw std::runtime_error("ambiguous seed, extend it");
}

}  // namespace

Series solve_algebraic(const IntPolynomial& p, const std::vector<Rational>& seed, int T) {
  auto coeffs = equation_coefficients_univariate(p, T + 32);
  return solve_dispatch<RationalRing>(coeffs, seed, T);
}

WSeries solve_algebraic_bivariate(const IntPolynomial& p, const std::vector<WPoly>& seed,
                                  int T) {
  auto coeffs = equation_coefficients_bivariate(p, T + 32);
  return solve_dispatch<WPolyRing>(coeffs, seed, T);
}

namespace {

template <class Ring>
bool check_equation(const IntPolynomial& p, const SeriesT<Ring>& y,
                    const std::vector<SeriesT<Ring>>& coeffs) {
  const int T = y.order();
  SeriesT<Ring> acc(T);
  // Horner in Y.
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    acc = series_mul(acc, y);
    acc = series_add(acc, coeffs[d].truncated(T));
  }
  (void)p;
  for (int i = 0; i <= T; ++i)
    if (!Ring::is_zero(acc.c[i])) return false;
  return true;
}

}  // namespace

bool satisfies_equation(const IntPolynomial& p, const Series& y) {
  return check_equation<RationalRing>(p, y, equation_coefficients_univariate(p, y.order()));
}

bool satisfies_equation(const IntPolynomial& p, const WSeries& y) {
  return check_equation<WPolyRing>(p, y, equation_coefficients_bivariate(p, y.order()));
}

// ---------------------------------------------------------------------------
// Forest composition fixed point.
//
// F = 1 + sum_m c_m(w) (zF)^m is solved order by order with integer
// arithmetic: maintaining the powers X^m of X = zF, the coefficient of z^n
// in X^m only needs coefficients of F below n.  This realizes the iteration
// F <- 1 + T(zF), whose k-th pass fixes the k-th coefficient.
// ---------------------------------------------------------------------------

namespace {

using WInt = std::vector<Int>;  // dense in w

void wadd_scaled(WInt& dst, const WInt& a, const Int& f, int shift) {
  if (f == 0) return;
  if (dst.size() < a.size() + shift) dst.resize(a.size() + shift, Int(0));
  for (size_t i = 0; i < a.size(); ++i) dst[i + shift] += a[i] * f;
}

void wadd_mul(WInt& dst, const WInt& a, const WInt& b) {
  if (a.empty() || b.empty()) return;
  if (dst.size() < a.size() + b.size() - 1) dst.resize(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) dst[i + j] += a[i] * b[j];
  }
}

// unmarked[m], marked[m]: integer coefficients of the two tree series.
std::vector<WInt> forest_fixed_point(const std::vector<Int>& unmarked,
                                     const std::vector<Int>& marked, int T) {
  std::vector<WInt> f(T + 1);
  f[0] = {Int(1)};
  // xpow[m] holds coefficients of X^m, X = zF; xpow[m][n] for n = m..T.
  std::vector<std::vector<WInt>> xpow(T + 1);
  for (int m = 1; m <= T; ++m) xpow[m].resize(T + 1);
  auto xcoef = [&](int n) -> const WInt& { return f[n - 1]; };

  for (int n = 1; n <= T; ++n) {
    if (n >= 1) xpow[1][n] = xcoef(n);
    for (int m = 2; m <= n; ++m) {
      WInt acc;
      for (int j = m - 1; j <= n - 1; ++j) wadd_mul(acc, xpow[m - 1][j], xcoef(n - j));
      xpow[m][n] = std::move(acc);
    }
    WInt fn;
    for (int m = 1; m <= n; ++m) {
      if (m < static_cast<int>(unmarked.size()))
        wadd_scaled(fn, xpow[m][n], unmarked[m], 0);
      if (m < static_cast<int>(marked.size()))
        wadd_scaled(fn, xpow[m][n], marked[m], 1);  // one factor w per component
    }
    while (!fn.empty() && fn.back() == 0) fn.pop_back();
    f[n] = std::move(fn);
  }
  return f;
}

std::vector<Int> integer_coeffs(const Series& s) {
  std::vector<Int> out(s.order() + 1);
  for (int i = 0; i <= s.order(); ++i) {
    if (denominator(s.c[i]) != 1)
      throw std::invalid_argument("tree series must have integer coefficients");
    out[i] = numerator(s.c[i]);
  }
  return out;
}

WSeries to_wseries(const std::vector<WInt>& f) {
  WSeries out(static_cast<int>(f.size()) - 1);
  for (size_t n = 0; n < f.size(); ++n) {
    WPoly p;
    p.c.reserve(f[n].size());
    for (const auto& x : f[n]) p.c.push_back(Rational(x));
    p.trim();
    out.c[n] = std::move(p);
  }
  return out;
}

void require_tree_series(const Series& tree) {
  if (tree.order() >= 0 && tree.c[0] != 0)
    throw std::invalid_argument("forest_from_tree: tree series must have zero constant term");
}

}  // namespace

Series forest_from_tree(const Series& tree) {
  require_tree_series(tree);
  auto f = forest_fixed_point(integer_coeffs(tree), {}, tree.order());
  return specialize_w(to_wseries(f), Rational(1));
}

WSeries forest_from_tree_marked(const Series& tree) {
  require_tree_series(tree);
  return to_wseries(forest_fixed_point({}, integer_coeffs(tree), tree.order()));
}

WSeries forest_from_trees(const Series& unmarked, const Series& marked) {
  require_tree_series(unmarked);
  require_tree_series(marked);
  if (unmarked.order() != marked.order())
    throw std::invalid_argument("forest_from_trees: truncation orders differ");
  return to_wseries(
      forest_fixed_point(integer_coeffs(unmarked), integer_coeffs(marked), unmarked.order()));
}

// ---------------------------------------------------------------------------
// Equation reconstruction by exact linear algebra.  Candidate ansatz sizes
// are screened modulo a 61-bit prime; the kernel coefficients (small in
// practice) are then lifted by rational reconstruction and the result is
// verified by exact substitution, falling back to a rational elimination if
// the lift fails.
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kPrime - 2); }

uint64_t to_mod(const Rational& q) {
  Int num = numerator(q) % kPrime;
  if (num < 0) num += kPrime;
  uint64_t n = static_cast<uint64_t>(num);
  Int den = denominator(q) % kPrime;
  uint64_t d = static_cast<uint64_t>(den);
  return d == 1 ? n : mulmod(n, invmod(d));
}

// Rational reconstruction a/b ~ c (mod p) with |a|, b <= sqrt(p/2).
bool rational_reconstruct(uint64_t c, Rational& out) {
  Int r0 = Int(kPrime), t0 = 0;
  Int r1 = Int(c), t1 = 1;
  const Int bound = Int(1) << 30;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1, t2 = t0 - q * t1;
    r0 = r1;
    t0 = t1;
    r1 = r2;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  Int a = t1 < 0 ? Int(-r1) : r1;
  Int b = abs(t1);
  if (boost::multiprecision::gcd(a, b) != 1) return false;
  out = Rational(a, b);
  return true;
}

struct ModKernel {
  bool found = false;
  std::vector<uint64_t> vec;
};

ModKernel kernel_vector_mod(std::vector<std::vector<uint64_t>> m, int n_cols) {
  const int n_rows = static_cast<int>(m.size());
  std::vector<int> pivot_of_col(n_cols, -1);
  int row = 0;
  for (int col = 0; col < n_cols && row < n_rows; ++col) {
    int pr = -1;
    for (int r = row; r < n_rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    uint64_t inv = invmod(m[row][col]);
    for (int c = col; c < n_cols; ++c) m[row][c] = mulmod(m[row][c], inv);
    for (int r = 0; r < n_rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      uint64_t f = m[r][col];
      for (int c = col; c < n_cols; ++c) {
        uint64_t sub = mulmod(f, m[row][c]);
        m[r][c] = m[r][c] >= sub ? m[r][c] - sub : m[r][c] + kPrime - sub;
      }
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (int col = 0; col < n_cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    ModKernel kr;
    kr.found = true;
    kr.vec.assign(n_cols, 0);
    kr.vec[col] = 1;
    for (int c = 0; c < n_cols; ++c)
      if (pivot_of_col[c] >= 0) {
        uint64_t v = m[pivot_of_col[c]][col];
        kr.vec[c] = v == 0 ? 0 : kPrime - v;
      }
    return kr;
  }
  return {};
}

struct KernelResult {
  bool found = false;
  std::vector<Rational> vec;
};

// Kernel vector of the column space (one solution of M x = 0, x != 0), or
// not found when the kernel is trivial.  M is row-major, n_cols columns.
KernelResult kernel_vector(std::vector<std::vector<Rational>> m, int n_cols) {
  const int n_rows = static_cast<int>(m.size());
  std::vector<int> pivot_of_col(n_cols, -1);
  int row = 0;
  for (int col = 0; col < n_cols && row < n_rows; ++col) {
    int pr = -1;
    for (int r = row; r < n_rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[row], m[pr]);
    Rational inv = m[row][col];
    for (int c = col; c < n_cols; ++c) m[row][c] /= inv;
    for (int r = 0; r < n_rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c < n_cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // First free column gives a kernel vector.
  for (int col = 0; col < n_cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    KernelResult kr;
    kr.found = true;
    kr.vec.assign(n_cols, Rational(0));
    kr.vec[col] = 1;
    for (int c = 0; c < n_cols; ++c)
      if (pivot_of_col[c] >= 0) kr.vec[c] = -m[pivot_of_col[c]][col];
    return kr;
  }
  return {};
}

}  // namespace

namespace {

IntPolynomial poly_from_coeffs(const std::vector<Rational>& vec, int dy, int dz, int dw) {
  Int den = 1;
  for (const auto& x : vec) den = boost::multiprecision::lcm(den, denominator(x));
  IntPolynomial p;
  int col = 0;
  for (int d = 0; d <= dy; ++d)
    for (int i = 0; i <= dz; ++i)
      for (int j = 0; j <= dw; ++j, ++col) {
        if (vec[col] == 0) continue;
        p.add_term(numerator(vec[col]) * (den / denominator(vec[col])), i, j, d);
      }
  return p;
}

}  // namespace

IntPolynomial equation_from_series(const WSeries& y, int max_ydeg, int max_zdeg,
                                   int max_wdeg) {
  const int N = y.order();
  // Powers of the series, shared across ansatz sizes.
  std::vector<WSeries> ypow(max_ydeg + 1, WSeries(N));
  ypow[0].c[0] = WPolyRing::one();
  for (int d = 1; d <= max_ydeg; ++d) ypow[d] = series_mul(ypow[d - 1], y);
  // Modular image of the powers for the ansatz screen.
  std::vector<std::vector<std::vector<uint64_t>>> ypow_mod(max_ydeg + 1);
  for (int d = 0; d <= max_ydeg; ++d) {
    ypow_mod[d].resize(N + 1);
    for (int n = 0; n <= N; ++n) {
      const WPoly& q = ypow[d].c[n];
      ypow_mod[d][n].resize(q.degree() + 1);
      for (int k = 0; k <= q.degree(); ++k) ypow_mod[d][n][k] = to_mod(q.coeff(k));
    }
  }
  auto mod_entry = [&](int d, int n, int k) -> uint64_t {
    if (n < 0 || k < 0 || n > N) return 0;
    const auto& v = ypow_mod[d][n];
    return k < static_cast<int>(v.size()) ? v[k] : 0;
  };

  for (int dy = 2; dy <= max_ydeg; ++dy) {
    for (int total = 1; total <= max_zdeg + max_wdeg; ++total) {
      for (int dz = std::max(1, total - max_wdeg); dz <= std::min(total, max_zdeg); ++dz) {
        int dw = total - dz;
        const int n_cols = (dz + 1) * (dw + 1) * (dy + 1);
        // Enough equations to overdetermine; verified against the full
        // series afterwards.
        int rows_needed = n_cols + 16;
        int n_max = 0;
        {
          int cnt = 0;
          while (n_max < N && cnt < rows_needed) {
            ++n_max;
            cnt += n_max + dw + 1;
          }
          if (cnt < rows_needed) continue;  // series too short for this ansatz
        }
        auto build_mod = [&](int upto) {
          std::vector<std::vector<uint64_t>> mm;
          for (int n = 0; n <= upto; ++n) {
            for (int k = 0; k <= n + dw; ++k) {
              std::vector<uint64_t> rowv(n_cols, 0);
              int col = 0;
              bool nonzero = false;
              for (int d = 0; d <= dy; ++d)
                for (int i = 0; i <= dz; ++i)
                  for (int j = 0; j <= dw; ++j, ++col) {
                    // term z^i w^j Y^d contributes at (n, k) from (n-i, k-j)
                    uint64_t val = mod_entry(d, n - i, k - j);
                    if (val) {
                      rowv[col] = val;
                      nonzero = true;
                    }
                  }
              if (nonzero) mm.push_back(std::move(rowv));
            }
          }
          return mm;
        };
        auto mk = kernel_vector_mod(build_mod(n_max), n_cols);
        if (!mk.found) continue;
        // Confirm against every available coefficient before lifting;
        // under-determined screens can produce spurious kernels.
        mk = kernel_vector_mod(build_mod(N), n_cols);
        if (!mk.found) continue;

        // Lift the modular kernel vector coordinatewise.
        std::vector<Rational> lifted(n_cols);
        bool ok = true;
        for (int c = 0; c < n_cols && ok; ++c)
          ok = rational_reconstruct(mk.vec[c], lifted[c]);
        if (ok) {
          IntPolynomial p = poly_from_coeffs(lifted, dy, dz, dw);
          if (!p.zero()) {
            p = p.primitive_part();
            if (satisfies_equation(p, y)) return p;
          }
        }
        // Unlucky prime or large coefficients: exact elimination.
        std::vector<std::vector<Rational>> m;
        for (int n = 0; n <= N; ++n) {
          for (int k = 0; k <= n + dw; ++k) {
            std::vector<Rational> rowv(n_cols, Rational(0));
            int col = 0;
            bool nonzero = false;
            for (int d = 0; d <= dy; ++d)
              for (int i = 0; i <= dz; ++i)
                for (int j = 0; j <= dw; ++j, ++col) {
                  if (n - i < 0 || k - j < 0) continue;
                  Rational val = ypow[d].c[n - i].coeff(k - j);
                  if (val != 0) {
                    rowv[col] = val;
                    nonzero = true;
                  }
                }
            if (nonzero) m.push_back(std::move(rowv));
          }
        }
        auto kr = kernel_vector(std::move(m), n_cols);
        if (!kr.found) continue;
        IntPolynomial p = poly_from_coeffs(kr.vec, dy, dz, dw);
        if (p.zero()) continue;
        p = p.primitive_part();
        if (satisfies_equation(p, y)) return p;
      }
    }
  }
  throw std::runtime_error("equation_from_series: no algebraic relation within degree caps");
}

}  // namespace nccount

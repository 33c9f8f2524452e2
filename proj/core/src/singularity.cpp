#include "nccount/singularity.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nccount {

namespace {

// Least squares with a tiny dense normal-equations solve.
Real least_squares_constant(const std::vector<std::pair<Real, std::vector<Real>>>& rows) {
  const int k = static_cast<int>(rows.front().second.size());
  std::vector<std::vector<Real>> m(k, std::vector<Real>(k, Real(0)));
  std::vector<Real> rhs(k, Real(0));
  for (const auto& [y, basis] : rows) {
    for (int i = 0; i < k; ++i) {
      rhs[i] += basis[i] * y;
      for (int j = 0; j < k; ++j) m[i][j] += basis[i] * basis[j];
    }
  }
  // Gaussian elimination with partial pivoting.
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r)
      if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    if (m[col][col] == 0) throw std::runtime_error("least squares: singular system");
    for (int r = col + 1; r < k; ++r) {
      Real f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (int c = col; c < k; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Real> x(k);
  for (int r = k - 1; r >= 0; --r) {
    Real s = rhs[r];
    for (int c = r + 1; c < k; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x[0];  // coefficient of the constant basis function
}

}  // namespace

Real ratio_extrapolate(const Series& s, int use_last) {
  auto ratios = coefficient_ratios(s);
  if (static_cast<int>(ratios.size()) < 6)
    throw std::invalid_argument("ratio_extrapolate: series too short");
  int first = std::max<int>(0, static_cast<int>(ratios.size()) - use_last);
  std::vector<std::pair<Real, std::vector<Real>>> rows;
  for (size_t i = first; i < ratios.size(); ++i) {
    Real n(ratios[i].first);
    rows.push_back({ratios[i].second,
                    {Real(1), 1 / n, 1 / (n * sqrt(n)), 1 / (n * n)}});
  }
  return least_squares_constant(rows);
}

Real gamma_from_fit(const Series& s, const Real& rho) {
  const int T = s.order();
  std::vector<std::pair<Real, std::vector<Real>>> rows;
  Real zn = pow(rho, T / 2);
  for (int n = T / 2; n <= T; ++n, zn *= rho) {
    if (s.c[n] == 0) continue;
    Real nn(n);
    Real y = to_real(s.c[n]) * zn * nn * sqrt(nn);
    rows.push_back({y, {Real(1), 1 / sqrt(nn), 1 / nn}});
  }
  if (rows.size() < 6) throw std::invalid_argument("gamma_from_fit: series too short");
  return least_squares_constant(rows);
}

Real subexponential_constant(const IntPolynomial& eq, const Real& rho, const Real& tau) {
  Real gz = eq.derivative(VZ).eval(rho, 1, tau);
  Real gyy = eq.derivative(VY).derivative(VY).eval(rho, 1, tau);
  Real radicand = rho * gz / (2 * pi_value() * gyy);
  if (radicand <= 0) {
    std::ostringstream os;
    os << "subexponential constant: negative radicand (G_z = " << gz
       << ", G_yy = " << gyy << ")";
    throw std::runtime_error(os.str());
  }
  return sqrt(radicand);
}

namespace {

// Newton iterations on y -> P(z0, y) in high precision.
Real newton_refine(const std::vector<ZPoly>& cy, const Real& z0, Real y) {
  std::vector<Real> a(cy.size());
  for (size_t d = 0; d < cy.size(); ++d) a[d] = cy[d].eval(z0);
  for (int it = 0; it < 300; ++it) {
    Real p = 0, dp = 0;
    for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d) {
      dp = dp * y + p;
      p = p * y + a[d];
    }
    if (dp == 0) break;
    Real step = p / dp;
    y -= step;
    if (abs(step) <= Real("1e-85") * (1 + abs(y))) break;
  }
  return y;
}

// Branch value Y(rho-): partial sum deep inside the disk, then continuation
// along z = rho (1 - 2^-j) with Newton corrections.
Real continue_branch(const std::vector<ZPoly>& cy, const Series& s, const Real& rho) {
  Real z0 = rho / 2;
  Real y = series_eval(s, z0);
  y = newton_refine(cy, z0, y);
  for (int j = 2; j <= 40; ++j) {
    Real z = rho * (1 - pow(Real(2), -j));
    y = newton_refine(cy, z, y);
  }
  return y;
}

// All real roots of the polynomial with coefficients a[d] (in y), by sign
// scanning plus bisection; good enough for the low-degree G_y sections.
std::vector<Real> real_roots(std::vector<Real> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  std::vector<Real> roots;
  if (a.size() <= 1) return roots;
  auto eval = [&](const Real& y) {
    Real p = 0;
    for (int d = static_cast<int>(a.size()) - 1; d >= 0; --d) p = p * y + a[d];
    return p;
  };
  Real mx = 0;
  for (const auto& v : a) mx = std::max(mx, abs(v));
  Real bound = 1 + mx / abs(a.back());
  const int grid = 4096;
  Real prev = eval(-bound);
  Real prev_y = -bound;
  for (int i = 1; i <= grid; ++i) {
    Real y = -bound + 2 * bound * i / grid;
    Real cur = eval(y);
    if (cur == 0) {
      roots.push_back(y);
    } else if (prev != 0 && ((prev > 0) != (cur > 0))) {
      Real lo = prev_y, hi = y;
      for (int it = 0; it < 400; ++it) {
        Real mid = (lo + hi) / 2;
        Real fm = eval(mid);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0) == (prev > 0)) lo = mid;
        else hi = mid;
        if (hi - lo < Real("1e-85")) break;
      }
      roots.push_back((lo + hi) / 2);
    }
    prev = cur;
    prev_y = y;
  }
  return roots;
}

std::map<std::pair<int, int>, SingularityReport>& report_cache() {
  static std::map<std::pair<int, int>, SingularityReport> m;
  return m;
}
std::mutex report_mu;

}  // namespace

SingularityReport dominant_singularity(GraphClass cls, int T) {
  {
    std::scoped_lock lk(report_mu);
    auto it = report_cache().find({static_cast<int>(cls), T});
    if (it != report_cache().end()) return it->second;
  }

  SingularityReport rep;
  rep.cls = cls;
  rep.truncation = T;
  const IntPolynomial& eq = equation_for(cls);
  Series s = class_series(cls, T);
  rep.ratio_estimate = ratio_extrapolate(s);

  ZPoly disc = to_zpoly(discriminant_y(eq));
  Rational width(1, boost::multiprecision::pow(Int(10), 80));
  auto enclosures = isolate_positive_roots(disc, width);

  bool have_rho = false;
  Real rho;
  for (const auto& iv : enclosures) {
    CandidateRoot cand;
    cand.value = iv.value();
    Real rel = abs(cand.value - rep.ratio_estimate) / rep.ratio_estimate;
    if (rel <= Real("0.02")) {
      cand.accepted = true;
      cand.reason = "accepted: matches coefficient-ratio estimate";
      if (!have_rho) {
        rho = cand.value;
        have_rho = true;
      }
    } else {
      cand.reason = "rejected: ratio estimate " + format_real(rep.ratio_estimate) +
                    " disagrees (candidate " + format_real(cand.value) + ")";
    }
    rep.candidates.push_back(std::move(cand));
  }
  if (!have_rho)
    throw std::runtime_error("singularity selection failed: ratio estimate " +
                             format_real(rep.ratio_estimate) +
                             " matches no discriminant root of " + class_name(cls));
  rep.rho = rho;
  rep.omega = 1 / rho;

  // tau: the multiple root of P(rho, .) nearest the continued branch value.
  auto cy_poly = coefficients_in_y(eq.specialize_w1());
  std::vector<ZPoly> cy;
  for (const auto& q : cy_poly) cy.push_back(to_zpoly(q));
  Real branch = continue_branch(cy, s, rho);

  std::vector<Real> gy_coeffs(cy.size() > 1 ? cy.size() - 1 : 0);
  for (size_t d = 1; d < cy.size(); ++d) gy_coeffs[d - 1] = cy[d].eval(rho) * Real(d);
  Real scale = 0;
  for (const auto& q : cy) scale += abs(q.eval(rho));
  bool have_tau = false;
  Real tau, best_dist;
  for (const Real& y : real_roots(gy_coeffs)) {
    Real p = 0;
    for (int d = static_cast<int>(cy.size()) - 1; d >= 0; --d) p = p * y + cy[d].eval(rho);
    if (abs(p) > scale * Real("1e-40")) continue;  // simple root of G, not singular
    Real dist = abs(y - branch);
    if (!have_tau || dist < best_dist) {
      tau = y;
      best_dist = dist;
      have_tau = true;
    }
  }
  if (!have_tau)
    throw std::runtime_error("singularity selection failed: no double root of the section at rho");
  rep.tau = tau;

  rep.g_y = eq.derivative(VY).eval(rho, 1, tau);
  rep.g_yy = eq.derivative(VY).derivative(VY).eval(rho, 1, tau);
  rep.g_z = eq.derivative(VZ).eval(rho, 1, tau);
  rep.gamma = subexponential_constant(eq, rho, tau);

  std::scoped_lock lk(report_mu);
  report_cache().emplace(std::make_pair(static_cast<int>(cls), T), rep);
  return rep;
}

ComponentRate component_rate(GraphClass cls, int T) {
  if (!has_bivariate(cls))
    throw std::invalid_argument("component_rate: class has no bivariate refinement");
  SingularityReport rep = dominant_singularity(cls);
  const IntPolynomial& bp = bivariate_equation_for(cls);
  IntPolynomial disc = discriminant_y(bp);
  Real dz = disc.derivative(VZ).eval(rep.rho, 1, 0);
  Real dw = disc.derivative(VW).eval(rep.rho, 1, 0);
  Real scale = 0;
  for (const auto& [e, c] : disc.terms) scale += abs(Real(c) * pow(rep.rho, e[0]));
  if (abs(dz) <= scale * Real("1e-50"))
    throw std::runtime_error("degenerate factor");
  ComponentRate out;
  out.kappa = (dw / dz) / rep.rho;  // kappa = -rho'(1)/rho, rho'(1) = -D_w/D_z
  out.n = T;
  out.finite_mean = to_real(component_mean(cls, T));
  return out;
}

Rational component_mean(GraphClass cls, int n) {
  WSeries b = class_bivariate_series(cls, n);
  const WPoly& p = b.c[n];
  Rational num = 0, den = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    num += p.coeff(k) * Rational(k);
    den += p.coeff(k);
  }
  if (den == 0) throw std::runtime_error("component_mean: empty class at this size");
  return num / den;
}

Rational component_tail_probability(GraphClass cls, int n, int threshold) {
  WSeries b = class_bivariate_series(cls, n);
  const WPoly& p = b.c[n];
  Rational num = 0, den = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    den += p.coeff(k);
    if (k >= threshold) num += p.coeff(k);
  }
  if (den == 0) throw std::runtime_error("component_tail_probability: empty class");
  return num / den;
}

}  // namespace nccount

#include "nccount/roots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nccount {

namespace {

using QP = std::vector<Rational>;

void qtrim(QP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QP to_qp(const ZPoly& f) {
  QP r;
  for (const auto& x : f.c) r.push_back(Rational(x));
  qtrim(r);
  return r;
}

QP qderiv(const QP& a) {
  QP r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rational(static_cast<int>(i)));
  return r;
}

QP qneg_rem(QP a, const QP& b) {
  // -(a mod b)
  if (b.empty()) throw std::runtime_error("sturm: zero divisor");
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qtrim(a);
  }
  for (auto& x : a) x = -x;
  return a;
}

Rational qeval(const QP& a, const Rational& x) {
  Rational r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

struct Sturm {
  std::vector<QP> chain;

  explicit Sturm(const QP& f) {
    chain.push_back(f);
    QP d = qderiv(f);
    qtrim(d);
    if (!d.empty()) chain.push_back(d);
    while (chain.back().size() > 1) {
      QP r = qneg_rem(chain[chain.size() - 2], chain.back());
      if (r.empty()) break;
      chain.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& p : chain) {
      Rational val = qeval(p, x);
      int s = val > 0 ? 1 : (val < 0 ? -1 : 0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Number of distinct roots in (a, b], assuming f(a) != 0.
  int count(const Rational& a, const Rational& b) const {
    return variations(a) - variations(b);
  }
};

}  // namespace

int descartes_variations(const ZPoly& f) {
  int v = 0, last = 0;
  for (const auto& x : f.c) {
    int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

RootInterval refine_root(const ZPoly& f, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  Rational flo = f.eval(iv.lo);
  Rational fhi = f.eval(iv.hi);
  if (flo == 0) return {iv.lo, iv.lo};
  if (fhi == 0) return {iv.hi, iv.hi};
  if ((flo > 0) == (fhi > 0))
    throw std::logic_error("refine_root: interval does not bracket a sign change");
  while (iv.hi - iv.lo > width) {
    Rational mid = iv.mid();
    Rational fm = f.eval(mid);
    if (fm == 0) return {mid, mid};
    if ((fm > 0) == (flo > 0)) {
      iv.lo = mid;
      flo = fm;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<RootInterval> isolate_positive_roots(const ZPoly& f, const Rational& width) {
  std::vector<RootInterval> out;
  if (f.zero()) throw std::invalid_argument("isolate_positive_roots: zero polynomial");
  ZPoly sf = squarefree_part(f);
  // Drop the root at zero, if any; only positive roots are wanted.
  while (!sf.c.empty() && sf.c.front() == 0) sf.c.erase(sf.c.begin());
  if (sf.degree() < 1) return out;
  if (descartes_variations(sf) == 0) return out;  // no positive roots at all

  // Cauchy bound: all roots have |x| < 1 + max |a_i| / |a_d|.
  Int lead = abs(sf.c.back());
  Int mx = 0;
  for (const auto& x : sf.c) mx = std::max(mx, Int(abs(x)));
  Rational bound = 1 + Rational(mx, lead);

  QP q = to_qp(sf);
  Sturm sturm(q);
  const int total_variations = descartes_variations(sf);

  struct Piece {
    Rational lo, hi;
    int count;
  };
  std::deque<Piece> work;
  int c0 = sturm.count(Rational(0), bound);
  if (c0 > 0) work.push_back({Rational(0), bound, c0});

  int found = 0;
  while (!work.empty()) {
    Piece p = work.front();
    work.pop_front();
    if (p.count == 1) {
      out.push_back(refine_root(sf, {p.lo, p.hi}, width));
      ++found;
      continue;
    }
    Rational mid = (p.lo + p.hi) / 2;
    // Avoid bisecting exactly at a root.
    Rational step = (p.hi - p.lo) / 64;
    while (qeval(q, mid) == 0) mid += step;
    int left = sturm.count(p.lo, mid);
    if (left > 0) work.push_back({p.lo, mid, left});
    if (p.count - left > 0) work.push_back({mid, p.hi, p.count - left});
  }
  if (found > total_variations)
    throw std::logic_error("isolate_positive_roots: more roots than sign variations");
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace nccount

#include "sl2/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>

#include "sl2/errors.hpp"

namespace sl2::quad {

void Rule::append(const Rule& other) {
  x.insert(x.end(), other.x.begin(), other.x.end());
  w.insert(w.end(), other.w.begin(), other.w.end());
}

namespace {

Rule build_gauss_legendre(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return r;
}

// Kronrod 15-point extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

Estimate gk15(const std::function<cplx(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const cplx fc = f(c);
  cplx kron = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const cplx f1 = f(c - dx), f2 = f(c + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

const Rule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Rule>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Rule>(build_gauss_legendre(n));
  return *slot;
}

Rule composite(std::span<const double> edges, int order) {
  const Rule& base = gauss_legendre(order);
  Rule r;
  if (edges.size() < 2) return r;
  r.x.reserve((edges.size() - 1) * order);
  r.w.reserve((edges.size() - 1) * order);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double c = 0.5 * (edges[i] + edges[i + 1]);
    const double h = 0.5 * (edges[i + 1] - edges[i]);
    for (int k = 0; k < order; ++k) {
      r.x.push_back(c + h * base.x[k]);
      r.w.push_back(h * base.w[k]);
    }
  }
  return r;
}

std::vector<double> geometric_edges(double lo, double hi, double ratio) {
  std::vector<double> e{lo};
  while (e.back() * ratio < hi) e.push_back(e.back() * ratio);
  e.push_back(hi);
  return e;
}

std::vector<double> uniform_edges(double lo, double hi, int panels) {
  std::vector<double> e(panels + 1);
  for (int i = 0; i <= panels; ++i) e[i] = lo + (hi - lo) * i / panels;
  return e;
}

Estimate adaptive(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                  double rel_tol, int max_intervals) {
  struct Piece {
    double a, b;
    Estimate est;
    bool operator<(const Piece& o) const { return est.error < o.est.error; }
  };
  std::priority_queue<Piece> heap;
  Estimate first = gk15(f, a, b);
  heap.push({a, b, first});
  cplx total = first.value;
  double err = first.error;
  int count = 1;
  while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (count >= max_intervals)
      throw ConvergenceError("adaptive quadrature: interval budget exhausted");
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Estimate l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
    total += l.value + r.value - worst.est.value;
    err += l.error + r.error - worst.est.error;
    heap.push({worst.a, mid, l});
    heap.push({mid, worst.b, r});
    ++count;
    if (mid == worst.a || mid == worst.b) break;
  }
  // Re-sum to shed the cancellation accumulated by the running updates.
  cplx sum = 0.0;
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().est.value;
    esum += heap.top().est.error;
    heap.pop();
  }
  return {sum, esum};
}

cplx apply(const Rule& rule, const std::function<cplx(double)>& f) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.w[i] * f(rule.x[i]);
  return s;
}

}  // namespace sl2::quad

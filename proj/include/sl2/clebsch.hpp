#pragma once

#include <complex>
#include <vector>

#include "sl2/sampled.hpp"

namespace sl2 {

// C(l1, l2, l2 + s; j, m, j + m) with l1 = -1/2 + i lambda1 principal and
// l2, l2 + s discrete.
struct CGQuery {
  double lambda1 = 0.0;
  int l2 = 1;
  int s = 0;
  int j = 0;
  int m = 2;
};

struct MuStats {
  double mass = 0.0;
  double mean = 0.0;      // of x under mu / mass
  double variance = 0.0;  // likewise
};

// mu = (l2 + s + 1/2) calP^{l2}_{l2+1, m} calP^{l2+s}_{l2+s+1, j+m} dx on [1, inf).
// Integrated in T = (x-1)/(x+1), where mu is a Beta-type density.
// Throws IndexError unless m > l2, l2 + s >= 0, j + m > l2 + s.
MuStats mu_stats(int l2, int m, int s, int j);

// Closed form of the total mass: 2 (l2+s+1/2) c_{j1} c_{j2} B(a + 1, 2 l2 + s + 1)
// with a = (j1 + j2)/2, j1 = m - l2 - 1, j2 = j + m - l2 - s - 1.
double mu_mass_exact(int l2, int m, int s, int j);

// int frakP^{l1}_{sj} d mu
cplx cg_triple_integral(const CGQuery& q);

// |C(l1, l2, l2+s; s, l2+1, l2+s+1)|^2, clamped to [0, 1 + 1e-6]; 0 when l2 + s < 0.
double cg_diag_modulus2(double lambda1, int l2, int s);

// C(l1, l2, l2+s; j, m, j+m), with the diagonal coefficient taken positive.
// Zero when j + m <= l2 + s or l2 + s < 0. Throws InstabilityError when the
// diagonal modulus is below 0.1.
cplx cg_general(const CGQuery& q);

struct Prop2Row {
  int l2 = 0;
  int m = 0;
  cplx computed;
  cplx target;
  double abs_error = 0.0;
};

// For each l2, m = floor(kappa l2): |cg_general - frakP^{l1}_{sj}(kappa)|.
// Throws DomainError for kappa <= 1.
std::vector<Prop2Row> verify_prop2(double lambda1, int j, int s, double kappa,
                                   const std::vector<int>& l2_list);

// sum over s in [s_min, s_max] of |C(l1, l2, l2+s; j, m, j+m)|^2; terms whose
// diagonal coefficient is unstable are skipped and counted in `skipped`.
double column_energy(double lambda1, int l2, int j, int m, int s_min, int s_max,
                     int* skipped = nullptr);

}  // namespace sl2

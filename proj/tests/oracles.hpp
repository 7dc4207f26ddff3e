#pragma once

// Independent numerical oracles for the test suite.  Nothing here shares
// code with the library: the Gauss-Legendre tables are frozen literals,
// triangle integration goes through the collapsed-square substitution, and
// exact monomial integrals come from the factorial identity
//   int_T xi^a eta^b = a! b! / (a+b+2)!
// over the triangle {xi >= 0, eta >= 0, xi + eta <= 1}.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

namespace oracle {

struct GLPoint {
  double s;
  double w;
};

// 12-point Gauss-Legendre rule on [0,1]; exact through degree 23.
inline constexpr std::array<GLPoint, 12> kGL12 = {{
    {0.009219682876640378, 0.02358766819325601},
    {0.0479413718147626, 0.05346966299765944},
    {0.11504866290284765, 0.08003916427167306},
    {0.20634102285669126, 0.10158371336153282},
    {0.31608425050090994, 0.11674626826917732},
    {0.43738329574426554, 0.12457352290670134},
    {0.5626167042557344, 0.12457352290670134},
    {0.6839157494990901, 0.11674626826917732},
    {0.7936589771433087, 0.10158371336153282},
    {0.8849513370971523, 0.08003916427167306},
    {0.9520586281852375, 0.05346966299765944},
    {0.9907803171233596, 0.02358766819325601},
}};

// 16-point Gauss-Legendre rule on [0,1]; exact through degree 31.
inline constexpr std::array<GLPoint, 16> kGL16 = {{
    {0.005299532504175031, 0.013576229705877019},
    {0.0277124884633837, 0.031126761969323853},
    {0.06718439880608412, 0.047579255841246296},
    {0.1222977958224985, 0.062314485627767015},
    {0.19106187779867811, 0.07479799440828838},
    {0.2709916111713863, 0.08457825969750131},
    {0.35919822461037054, 0.0913017075224618},
    {0.4524937450811813, 0.09472530522753429},
    {0.5475062549188188, 0.09472530522753429},
    {0.6408017753896295, 0.0913017075224618},
    {0.7290083888286136, 0.08457825969750131},
    {0.8089381222013219, 0.07479799440828838},
    {0.8777022041775016, 0.062314485627767015},
    {0.9328156011939159, 0.047579255841246296},
    {0.9722875115366163, 0.031126761969323853},
    {0.994700467495825, 0.013576229705877019},
}};

// Collapsed-square triangle quadrature: xi = u, eta = v (1 - u), with
// Jacobian (1 - u).  Exact whenever the mapped integrand stays within the
// tensor rule's degree, i.e. for all polynomials the tests throw at it.
template <class Rule, class F>
double integrate_triangle(const Rule& rule, F&& f) {
  double total = 0.0;
  for (const GLPoint& pu : rule) {
    for (const GLPoint& pv : rule) {
      total += pu.w * pv.w * (1.0 - pu.s) * f(pu.s, pv.s * (1.0 - pu.s));
    }
  }
  return total;
}

// a! b! / (a+b+2)! via the cancelled form b! / ((a+1)(a+2)...(a+b+2)),
// whose numerator and denominator are both exact in double for a,b <= 16.
inline double monomial_integral(int a, int b) {
  double numerator = 1.0;
  for (int k = 2; k <= b; ++k) {
    numerator *= k;
  }
  double denominator = 1.0;
  for (int k = a + 1; k <= a + b + 2; ++k) {
    denominator *= k;
  }
  return numerator / denominator;
}

// Central finite difference of a scalar function of one variable.
template <class F>
double central_diff(F&& f, double x, double h = 1e-6) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Uniform random point in the reference triangle (reflection trick keeps
// the density uniform).
template <class Rng>
std::pair<double, double> random_ref_point(Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double xi = uniform(rng);
  double eta = uniform(rng);
  if (xi + eta > 1.0) {
    xi = 1.0 - xi;
    eta = 1.0 - eta;
  }
  return {xi, eta};
}

}  // namespace oracle

#ifndef BCR_EULER_WEIGHTS_HPP
#define BCR_EULER_WEIGHTS_HPP

#include <map>
#include <utility>
#include <vector>

#include "bcr/poly.hpp"
#include "bcr/rational.hpp"

namespace bcr {

// Table of the weights lambda_{k,nu}: the fraction of permutations of
// {1..k-1} with exactly nu-1 ascents (Eulerian numbers over (k-1)!).
// These weight the mixed traces in the invariant Z_k.
struct WeightTable {
  unsigned kmax = 0;
  // rows[k][nu] valid for 2 <= k <= kmax, 0 <= nu <= k.
  std::vector<std::vector<Rat>> rows;

  // lambda_{k,nu}; zero outside 1 <= nu <= k-1. Throws std::out_of_range for
  // k outside [2, kmax].
  Rat at(unsigned k, unsigned nu) const;
};

// Direct enumeration of permutations of k-1 elements; guarded to k <= 10
// (9! permutations). Returns the row lambda_{k,1..k-1}.
std::vector<Rat> lambda_bruteforce(unsigned k);

// Same table via the quadratic convolution recursion
//   (k-1) lambda_{k,nu} = lambda_{k-1,nu} + lambda_{k-1,nu-1}
//                         + sum_{r=2}^{k-2} sum_p lambda_{r,p} lambda_{k-r,nu-p}
// seeded with lambda_{2,1} = 1.
WeightTable lambda_recursive(unsigned kmax);

// Row polynomials L_k(X) = sum_nu lambda_{k,nu} X^nu via the product recursion
// L_k = (1/(k-1)) sum_{r=1}^{k-1} L_r L_{k-r} (k >= 3), seeded with
// L_1 = (X+1)/2 and L_2 = X. Returns L_1..L_kmax (index 0 unused).
std::vector<Poly> l_poly_recursive(unsigned kmax);

// The generating series L(X,Y) = sum_{k>=1} L_k(X) Y^{k-1} expanded from its
// closed form
//   L = (1/2) [ (1+X) + X(1-X) Y g((1-X)Y) ] / [ 1 - X Y g((1-X)Y) ],
// where g(u) = (e^u - 1)/u; this is the pole-free rewrite of
// ((1-X)/2)(1 + X e^{(1-X)Y})/(1 - X e^{(1-X)Y}).
BiSeries l_series_closed(unsigned order_y);

// Verifies dL/dY = L^2 - ((1-X)/2)^2 coefficient-wise through Y^{order_y-1}.
bool check_ode(unsigned order_y);

// Coefficients of M(X,Y) = sum_{k,nu} (1/k) lambda_{k,nu} X^nu Y^{k-nu},
// computed two independent ways -- from the weight table and from the closed
// form -X - Ln(1 - X g(Y-X)) expanded by total degree -- and compared exactly.
// Throws std::logic_error if the routes disagree. Keys are (k, nu).
std::map<std::pair<unsigned, unsigned>, Rat> m_coeffs(unsigned kmax);

} // namespace bcr

#endif

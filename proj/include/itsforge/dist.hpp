#pragma once

namespace itsforge::stats {

double normal_cdf(double z);

// Regularized incomplete beta I_x(a, b), evaluated with the continued
// fraction (modified Lentz).
double regularized_incomplete_beta(double a, double b, double x);

// Upper tail P(F > f) for an F distribution with d1/d2 degrees of freedom.
double f_sf(double f, double d1, double d2);

// Upper tail P(Q > q) of the studentized range with k groups and nu error
// degrees of freedom, by nested Gauss-Legendre quadrature over the scaled
// chi density and the range probability of k standard normals.
double studentized_range_sf(double q, int k, double nu);

} // namespace itsforge::stats

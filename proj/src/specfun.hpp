#ifndef EDSENSE_SPECFUN_HPP
#define EDSENSE_SPECFUN_HPP

namespace edsense {

// Regularized upper incomplete gamma Q(u, x) = Gamma(u, x) / Gamma(u).
// Series expansion for x < u + 1, Lentz continued fraction otherwise.
// Throws std::domain_error on u <= 0 or x < 0.
double regularized_upper_gamma(double u, double x);

// Regularized lower incomplete gamma P(u, x) = 1 - Q(u, x).
double regularized_lower_gamma(double u, double x);

// log P(u, x), evaluated without underflow for small x (P ~ x^u / Gamma(u+1)).
// P(0, x) is taken as 1 by convention (log = 0) when u == 0.
double log_regularized_lower_gamma(double u, double x);

// S(u, x) = e^{-x} sum_{i=0}^{u-2} x^i / i!.
// Equals Q(u - 1, x) for u >= 2; the sum is empty (0) for u = 1.
double poisson_tail_sum(int u, double x);

// Generalized Marcum Q-function Q_u(a, b), integer order u >= 1.
// Evaluated as the Poisson mixture of central chi-square tails with the
// truncated Poisson mass bounding the neglected terms below 1e-14.
double marcum_q(int u, double a, double b);

}  // namespace edsense

#endif

#pragma once

namespace hilbertlab::special {

/// Clausen function Cl_2(x) = sum_k sin(kx)/k^2 = -int_0^x log|2 sin(t/2)| dt.
double clausen2(double x);

/// Dawson integral F(x) = exp(-x^2) int_0^x exp(t^2) dt.
double dawson(double x);

/// H_n = sum_{k=1}^n 1/k: direct sum for small n, psi(n + 1) + gamma beyond.
double harmonic_number(long long n);

/// sum_{k=m}^{n} 1/k for integers m <= n not straddling 0 (returns 0 if m > n).
double reciprocal_sum(long long m, long long n);

}  // namespace hilbertlab::special

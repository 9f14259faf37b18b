#pragma once

namespace clift::numerics {

// Exponential integral E_n(z) = int_1^inf dt exp(-z t) / t^n, for n >= 1,
// z > 0. Relative accuracy ~1e-13 over the range used here (z <= ~700;
// underflows to 0 beyond that).
double exp_integral_e(int n, double z);

// E_1(z), also the incomplete gamma function Gamma(0, z).
double e1(double z);

namespace detail {
// The two independent evaluation paths behind e1(); exposed so they can be
// cross-checked against each other near the switchover.
double e1_series(double z);             // power series, good for z < 1
double e1_continued_fraction(double z); // modified Lentz, good for z >= 1
} // namespace detail

} // namespace clift::numerics

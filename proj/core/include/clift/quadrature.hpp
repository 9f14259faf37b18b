#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clift/errors.hpp"
#include "clift/jet.hpp"

namespace clift::numerics {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  long long evaluations = 0;
  bool converged = false;
};

// Result of integrating a jet-valued integrand coefficient-by-coefficient on
// a shared adaptive mesh. Error control is per coefficient; on budget
// exhaustion the per-coefficient flags say which orders are still usable.
struct JetQuadResult {
  jets::Jet value;
  std::array<double, jets::Jet::kMaxOrder + 1> err_estimate{};
  long long evaluations = 0;
  bool converged = false;
  std::array<bool, jets::Jet::kMaxOrder + 1> coeff_converged{};
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair (QUADPACK dqk15 abscissae and
// weights). Even indices of xgk extend the Gauss rule; odd indices are the
// Gauss nodes themselves.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline int n_components(double) { return 1; }
inline int n_components(const jets::Jet& j) { return j.order() + 1; }
inline double component(double v, int) { return v; }
inline double component(const jets::Jet& j, int k) { return j[k]; }

constexpr int kMaxComp = jets::Jet::kMaxOrder + 1;
constexpr double kBadnessFloor = 1e-30;

template <class V>
struct Segment {
  double a, b;
  V integral;                          // halfwidth-scaled K15 estimate
  std::array<double, kMaxComp> err{};  // halfwidth-scaled |K15 - G7| per comp
};

template <class V, class F>
Segment<V> eval_segment(const F& f, double a, double b, int& ncomp) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  // Center node first: establishes value shape (e.g. jet order).
  V fc = f(center);
  ncomp = n_components(fc);
  V k15 = fc * kWgk[7];
  V g7 = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    V lo = f(center - dx);
    V hi = f(center + dx);
    V pair = lo + hi;
    k15 = k15 + pair * kWgk[j];
    if (j % 2 == 1) g7 = g7 + pair * kWg[j / 2];
  }

  Segment<V> seg;
  seg.a = a;
  seg.b = b;
  seg.integral = k15 * half;
  for (int k = 0; k < ncomp; ++k) {
    const double d = component(k15, k) - component(g7, k);
    seg.err[k] = std::abs(d) * half;
    if (!std::isfinite(component(k15, k)))
      throw std::domain_error("integrand returned non-finite value");
  }
  return seg;
}

// Adaptive bisection on the segment of largest scaled error. The scale for
// each coefficient is that coefficient's own accumulated magnitude, so a
// small high-order coefficient is resolved relative to itself instead of
// being drowned by (or stalling on) the leading one.
template <class V, class F>
struct AdaptiveResult {
  V value;
  std::array<double, kMaxComp> err{};
  long long evaluations = 0;
  bool converged = false;
  std::array<bool, kMaxComp> coeff_converged{};
  int ncomp = 1;
};

template <class V, class F>
AdaptiveResult<V, F> integrate_adaptive(const F& f, double a, double b,
                                        const QuadratureConfig& cfg) {
  if (!(b > a)) throw std::invalid_argument("integration bounds must satisfy a < b");
  if (!(cfg.rel_tol > 0.0) || cfg.abs_tol < 0.0 || cfg.max_subdivisions < 1)
    throw std::invalid_argument("invalid quadrature config");

  constexpr int kInitialSegments = 8;
  std::vector<Segment<V>> segs;
  segs.reserve(64);
  int ncomp = 1;
  long long evals = 0;
  for (int i = 0; i < kInitialSegments; ++i) {
    const double sa = a + (b - a) * i / kInitialSegments;
    const double sb = a + (b - a) * (i + 1) / kInitialSegments;
    segs.push_back(eval_segment<V>(f, sa, sb, ncomp));
    evals += 15;
  }

  std::array<double, kMaxComp> total_abs{};
  std::array<double, kMaxComp> total_err{};
  std::array<bool, kMaxComp> comp_ok{};

  auto refresh_totals = [&] {
    total_abs.fill(0.0);
    total_err.fill(0.0);
    for (const auto& s : segs)
      for (int k = 0; k < ncomp; ++k) {
        total_abs[k] += component(s.integral, k);
        total_err[k] += s.err[k];
      }
  };

  auto check_converged = [&] {
    bool all = true;
    for (int k = 0; k < ncomp; ++k) {
      comp_ok[k] = total_err[k] <=
                   std::max(cfg.rel_tol * std::abs(total_abs[k]), cfg.abs_tol);
      all = all && comp_ok[k];
    }
    return all;
  };

  refresh_totals();
  bool done = check_converged();

  while (!done && static_cast<int>(segs.size()) < cfg.max_subdivisions) {
    // Worst segment by per-coefficient relative badness.
    size_t worst = 0;
    double worst_badness = -1.0;
    for (size_t i = 0; i < segs.size(); ++i) {
      double badness = 0.0;
      for (int k = 0; k < ncomp; ++k) {
        if (comp_ok[k]) continue;
        const double scale = std::max(std::abs(total_abs[k]), kBadnessFloor);
        badness = std::max(badness, segs[i].err[k] / scale);
      }
      if (badness > worst_badness) {
        worst_badness = badness;
        worst = i;
      }
    }

    const double mid = 0.5 * (segs[worst].a + segs[worst].b);
    Segment<V> left = eval_segment<V>(f, segs[worst].a, mid, ncomp);
    Segment<V> right = eval_segment<V>(f, mid, segs[worst].b, ncomp);
    evals += 30;
    segs[worst] = left;
    segs.push_back(right);

    refresh_totals();
    done = check_converged();
  }

  // Deterministic final reduction: sum in position order.
  std::sort(segs.begin(), segs.end(),
            [](const Segment<V>& x, const Segment<V>& y) { return x.a < y.a; });
  AdaptiveResult<V, F> res;
  res.value = segs[0].integral;
  for (int k = 0; k < ncomp; ++k) res.err[k] = segs[0].err[k];
  for (size_t i = 1; i < segs.size(); ++i) {
    res.value = res.value + segs[i].integral;
    for (int k = 0; k < ncomp; ++k) res.err[k] += segs[i].err[k];
  }
  res.evaluations = evals;
  res.converged = done;
  res.ncomp = ncomp;
  for (int k = 0; k < ncomp; ++k) res.coeff_converged[k] = comp_ok[k];
  return res;
}

} // namespace detail

// Finite-interval adaptive quadrature of a scalar integrand.
template <class F>
QuadResult integrate(const F& f, double a, double b,
                     const QuadratureConfig& cfg = {}) {
  auto r = detail::integrate_adaptive<double>(f, a, b, cfg);
  return {r.value, r.err[0], r.evaluations, r.converged};
}

// Integral over [0, inf) via the rational substitution x = t/(1-t).
template <class F>
QuadResult integrate_zero_to_inf(const F& f, const QuadratureConfig& cfg = {}) {
  auto g = [&f](double t) {
    const double om = 1.0 - t;
    const double w = 1.0 / (om * om);
    return f(t / om) * w;
  };
  return integrate(g, 0.0, 1.0, cfg);
}

// Integral over [1, inf) via p = 1 + u/(1-u).
template <class F>
QuadResult integrate_one_to_inf(const F& f, const QuadratureConfig& cfg = {}) {
  auto g = [&f](double u) {
    const double om = 1.0 - u;
    const double w = 1.0 / (om * om);
    return f(1.0 + u / om) * w;
  };
  return integrate(g, 0.0, 1.0, cfg);
}

// Jet-valued variants sharing one adaptive mesh across all coefficients.
template <class F>
JetQuadResult integrate_jet(const F& f, double a, double b,
                            const QuadratureConfig& cfg = {}) {
  auto r = detail::integrate_adaptive<jets::Jet>(f, a, b, cfg);
  JetQuadResult out;
  out.value = r.value;
  out.err_estimate = r.err;
  out.evaluations = r.evaluations;
  out.converged = r.converged;
  out.coeff_converged = r.coeff_converged;
  return out;
}

template <class F>
JetQuadResult integrate_jet_zero_to_inf(const F& f,
                                        const QuadratureConfig& cfg = {}) {
  auto g = [&f](double t) {
    const double om = 1.0 - t;
    const double w = 1.0 / (om * om);
    return f(t / om) * w;
  };
  return integrate_jet(g, 0.0, 1.0, cfg);
}

template <class F>
JetQuadResult integrate_jet_one_to_inf(const F& f,
                                       const QuadratureConfig& cfg = {}) {
  auto g = [&f](double u) {
    const double om = 1.0 - u;
    const double w = 1.0 / (om * om);
    return f(1.0 + u / om) * w;
  };
  return integrate_jet(g, 0.0, 1.0, cfg);
}

// Like integrate(), but non-convergence is an error instead of a flag.
template <class F>
double integrate_or_throw(const F& f, double a, double b,
                          const QuadratureConfig& cfg = {}) {
  auto r = integrate(f, a, b, cfg);
  if (!r.converged)
    throw ConvergenceError("quadrature did not converge within subdivision budget",
                           r.value, r.err_estimate);
  return r.value;
}

} // namespace clift::numerics

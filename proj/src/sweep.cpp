#include <algorithm>
#include <cmath>

#include "walktransfer/parallel.hpp"
#include "walktransfer/pgst.hpp"
#include "walktransfer/transfer.hpp"

namespace wt {

namespace {

// <v, U(t) u> = sum_j c_j exp(i t lambda_j) with real c_j = v^T E_j u.
struct Amplitude {
  std::vector<double> lambdas;
  std::vector<double> coeffs;

  double operator()(double t) const {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs.size(); ++j) sum += coeffs[j] * std::polar(1.0, t * lambdas[j]);
    return std::abs(sum);
  }
};

struct Peak {
  double t;
  double f;
};

Peak golden_section_max(const Amplitude& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-10) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Peak best{c, fc};
  if (fd > best.f) best = {d, fd};
  for (double t : {lo, hi}) {
    const double ft = f(t);
    if (ft > best.f) best = {t, ft};
  }
  return best;
}

}  // namespace

FidelityTrace sweep_max_fidelity(const SpectralDecomposition& dec, const Vector& u, const Vector& v,
                                 double t_max, int samples) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be positive");
  if (samples < 2) throw DomainError("a sweep needs at least 2 samples");
  if (u.size() != dec.order() || v.size() != dec.order()) {
    throw DomainError("state length does not match the graph order");
  }
  const double step = t_max / (samples - 1);
  if (dec.scale > 0.0 && step >= kPi / (2.0 * dec.scale)) {
    throw DomainError("grid step " + std::to_string(step) + " is too coarse for spectral radius " +
                      std::to_string(dec.scale) + "; use more samples");
  }

  Amplitude amp;
  for (int j = 0; j < dec.size(); ++j) {
    const double c = v.dot(dec.projectors[static_cast<std::size_t>(j)] * u);
    if (c != 0.0) {
      amp.lambdas.push_back(dec.eigenvalues[static_cast<std::size_t>(j)]);
      amp.coeffs.push_back(c);
    }
  }

  FidelityTrace trace;
  const auto count = static_cast<std::size_t>(samples);
  trace.times.resize(count);
  trace.fidelities.resize(count);
  constexpr std::size_t kBlock = 4096;
  parallel_for((count + kBlock - 1) / kBlock, [&](std::size_t b) {
    for (std::size_t i = b * kBlock; i < std::min(count, (b + 1) * kBlock); ++i) {
      const double t = i + 1 == count ? t_max : static_cast<double>(i) * step;
      trace.times[i] = t;
      trace.fidelities[i] = amp(t);
    }
  });

  trace.best_time = trace.times[0];
  trace.best_fidelity = trace.fidelities[0];
  for (std::size_t i = 0; i < count; ++i) {
    const double f = trace.fidelities[i];
    if (f > trace.best_fidelity) {
      trace.best_fidelity = f;
      trace.best_time = trace.times[i];
    }
    if (f <= 0.5) continue;
    const bool left_ok = i == 0 || f >= trace.fidelities[i - 1];
    const bool right_ok = i + 1 == count || f >= trace.fidelities[i + 1];
    if (!left_ok || !right_ok) continue;
    const double lo = i == 0 ? trace.times[0] : trace.times[i - 1];
    const double hi = i + 1 == count ? trace.times[i] : trace.times[i + 1];
    const Peak peak = golden_section_max(amp, lo, hi);
    if (peak.f > trace.best_fidelity) {
      trace.best_fidelity = peak.f;
      trace.best_time = peak.t;
    }
  }
  return trace;
}

std::optional<TransferWitness> snap_pst(const SpectralDecomposition& dec, const Vector& u, const Vector& v,
                                        double t, double tol) {
  for (int q = 1; q <= 64; ++q) {
    const double tau = std::round(t * q / kPi) * kPi / q;
    if (std::abs(tau - t) > 1e-6) continue;
    TransferWitness w = check_pst(dec, u, v, tau, tol);
    if (w.holds) return w;
  }
  return std::nullopt;
}

}  // namespace wt

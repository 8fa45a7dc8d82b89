#include "walktransfer/transfer.hpp"

#include <algorithm>
#include <cmath>

namespace wt {

namespace {

void check_lengths(const SpectralDecomposition& dec, const Vector& u, const Vector& v) {
  if (u.size() != dec.order() || v.size() != dec.order()) {
    throw DomainError("state length does not match the graph order");
  }
}

void check_unit(const Vector& u, const char* name) {
  if (std::abs(u.norm() - 1.0) > 1e-12) throw DomainError(std::string(name) + " is not a unit vector");
}

Complex unit_phase(Complex z) { return std::abs(z) > 0.0 ? z / std::abs(z) : Complex(1.0, 0.0); }

// Stacks two base-vertex vectors into one over the double cover.
Vector lift(const Vector& top, const Vector& bottom) {
  Vector out(top.size() + bottom.size());
  out << top, bottom;
  return out;
}

double two_pi_distance(double x) {
  const double period = 2.0 * kPi;
  return std::abs(x - period * std::round(x / period));
}

}  // namespace

double fidelity(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double t) {
  check_lengths(dec, u, v);
  return std::abs(v.cast<Complex>().dot(evolve(dec, u, t)));
}

TransferWitness check_pst(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double tau,
                          double tol) {
  check_lengths(dec, u, v);
  if (std::abs(u.dot(v)) >= 1.0 - 1e-12) throw DomainError("PST check needs linearly independent states");
  const CVector ut = evolve(dec, u, tau);
  const CVector vc = v.cast<Complex>();
  TransferWitness w;
  w.kind = WitnessKind::Pst;
  w.time = tau;
  w.tol = tol;
  w.alpha = u.cast<Complex>().dot(ut);
  w.beta = vc.dot(ut);
  w.gamma = unit_phase(w.beta);
  w.residual = (ut - w.gamma * vc).norm();
  w.holds = w.residual < tol;
  return w;
}

TransferWitness check_fr(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double tau,
                         double tol) {
  check_lengths(dec, u, v);
  const double overlap = u.dot(v);
  if (std::abs(overlap) >= 1.0 - 1e-12) throw DomainError("FR check needs linearly independent states");
  TransferWitness w;
  w.kind = WitnessKind::Fr;
  w.time = tau;
  w.tol = tol;
  Vector frame = v;
  if (std::abs(overlap) > 1e-12) {
    frame = v - overlap * u;
    frame.normalize();
    w.frame_changed = true;
  }
  const CVector ut = evolve(dec, u, tau);
  const CVector uc = u.cast<Complex>();
  const CVector vc = frame.cast<Complex>();
  w.alpha = uc.dot(ut);
  w.beta = vc.dot(ut);
  w.gamma = unit_phase(w.beta);
  w.residual = (ut - w.alpha * uc - w.beta * vc).norm();
  w.holds = w.residual < tol && std::abs(w.beta) > tol;
  return w;
}

KrylovReport krylov_complement_identity(const WeightedGraph& g, HamiltonianKind kind, const Vector& u,
                                        const std::vector<double>& t_samples, double tol) {
  if (!g.is_simple()) throw DomainError("the complement identity needs a simple graph");
  if (u.size() != g.order()) throw DomainError("state length does not match the graph order");
  const int n = g.order();
  const Matrix m = hamiltonian(g, kind);
  KrylovReport report;
  report.zeta = complement_params(kind, n).zeta;
  report.times = t_samples;
  report.condition_holds = true;
  Vector w = u;
  for (int k = 0; k < n; ++k) {
    const double proj = std::abs(w.sum());
    report.max_projection = std::max(report.max_projection, proj);
    if (proj > 1e-9 * n * std::max(1.0, w.norm()) && report.condition_holds) {
      report.condition_holds = false;
      report.failing_power = k;
    }
    w = m * w;
  }
  if (!report.condition_holds) return report;

  const SpectralDecomposition dec = decompose(m);
  const SpectralDecomposition dec_c = decompose(hamiltonian(complement(g), kind));
  report.identity_checked = true;
  for (double t : t_samples) {
    const CVector lhs = evolve(dec_c, u, t);
    const CVector rhs = std::polar(1.0, t * report.zeta) * evolve(dec, u, -t);
    report.max_deviation = std::max(report.max_deviation, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  report.identity_holds = report.max_deviation < tol;
  return report;
}

ComplementTransportReport complement_fr_transport(const WeightedGraph& g, HamiltonianKind kind,
                                                  const Vector& u, const Vector& v, double tau, double tol) {
  if (!g.is_simple()) throw DomainError("complement transport needs a simple graph");
  const int n = g.order();
  const Matrix m = hamiltonian(g, kind);
  const Vector row_sums = m * Vector::Ones(n);
  const double rho = row_sums.mean();
  if ((row_sums.array() - rho).abs().maxCoeff() > 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    throw DomainError("the all-ones vector is not an eigenvector of the Hamiltonian");
  }

  ComplementTransportReport report;
  const SpectralDecomposition dec = decompose(m);
  report.in_graph = check_fr(dec, u, v, tau, tol);
  report.angular_distance = two_pi_distance(n * tau);
  if (!report.in_graph.holds) {
    report.reason = "no fractional revival in the graph at tau";
    return report;
  }
  if (report.angular_distance >= 1e-9) {
    report.reason = "n * tau is not a multiple of 2 pi";
    return report;
  }
  report.applicable = true;
  const double zeta = complement_params(kind, n).zeta;
  report.phase = std::polar(1.0, -tau * zeta);
  const SpectralDecomposition dec_c = decompose(hamiltonian(complement(g), kind));
  const CVector lhs = evolve(dec_c, u, -tau);
  const CVector rhs = report.phase * evolve(dec, u, tau);
  report.identity_deviation = (lhs - rhs).cwiseAbs().maxCoeff();
  report.in_complement = check_fr(dec_c, u, v, -tau, tol);
  report.holds = report.identity_deviation < tol && report.in_complement.holds;
  return report;
}

BlockIdentityReport double_cover_block_identity(const WeightedGraph& x1, const WeightedGraph& x2,
                                                HamiltonianKind kind, double t, double tol) {
  const DoubleCover cover = double_cover(x1, x2);
  const auto [m_plus, m_minus] = signed_cover_hamiltonians(x1, x2, kind);
  const CMatrix u_cover = transition(decompose(hamiltonian(cover.graph, kind)), t);
  const CMatrix u_plus = transition(decompose(m_plus), t);
  const CMatrix u_minus = transition(decompose(m_minus), t);
  const int n = x1.order();
  CMatrix blocks(2 * n, 2 * n);
  const CMatrix diag = 0.5 * (u_plus + u_minus);
  const CMatrix off = 0.5 * (u_plus - u_minus);
  blocks << diag, off, off, diag;
  BlockIdentityReport report;
  report.edge_sets_intersect = cover.edge_sets_intersect;
  report.max_deviation = (u_cover - blocks).cwiseAbs().maxCoeff();
  report.holds = report.max_deviation < tol;
  return report;
}

CoverEquivalenceReport double_cover_fr_equivalence(const WeightedGraph& x1, const WeightedGraph& x2,
                                                   HamiltonianKind kind, const Vector& u, const Vector& v,
                                                   double tau, int statement, double tol) {
  if (statement < 1 || statement > 5) throw DomainError("statement must be between 1 and 5");
  const int n = x1.order();
  if (u.size() != n || v.size() != n) throw DomainError("states must live on the base vertex set");
  check_unit(u, "u");
  if (statement != 1) {
    check_unit(v, "v");
    if (std::abs(u.dot(v)) > 1e-12) throw DomainError("lifted FR statements need orthogonal u and v");
  }

  const DoubleCover cover = double_cover(x1, x2);
  const auto [m_plus, m_minus] = signed_cover_hamiltonians(x1, x2, kind);
  const SpectralDecomposition dec_cover = decompose(hamiltonian(cover.graph, kind));
  const SpectralDecomposition dec_plus = decompose(m_plus);
  const SpectralDecomposition dec_minus = decompose(m_minus);
  const Vector zero = Vector::Zero(n);
  const double r = 1.0 / std::sqrt(2.0);

  CoverEquivalenceReport report;
  report.statement = statement;
  Complex base_alpha;
  Complex base_beta;
  switch (statement) {
    case 1: {
      report.description = "[u;0] -> [0;u] in the cover iff u periodic in G+ and G-";
      report.cover = check_fr(dec_cover, lift(u, zero), lift(zero, u), tau, tol);
      report.g_plus = is_periodic(dec_plus, u, tau, tol);
      report.g_minus = is_periodic(dec_minus, u, tau, tol);
      base_alpha = 0.5 * (report.g_plus.gamma + report.g_minus.gamma);
      base_beta = 0.5 * (report.g_plus.gamma - report.g_minus.gamma);
      report.base_side = report.g_plus.holds && report.g_minus.holds && std::abs(base_beta) > tol;
      break;
    }
    case 2:
    case 3: {
      const bool same_layer = statement == 2;
      report.description = same_layer ? "[u;0] -> [v;0] in the cover iff U+ u = U- u = alpha u + beta v"
                                      : "[u;0] -> [0;v] in the cover iff U+- u = alpha u +- beta v";
      report.cover = check_fr(dec_cover, lift(u, zero), same_layer ? lift(v, zero) : lift(zero, v), tau, tol);
      report.g_plus = check_fr(dec_plus, u, v, tau, tol);
      report.g_minus = check_fr(dec_minus, u, v, tau, tol);
      const double sign = same_layer ? 1.0 : -1.0;
      base_alpha = 0.5 * (report.g_plus.alpha + report.g_minus.alpha);
      base_beta = 0.5 * (report.g_plus.beta + sign * report.g_minus.beta);
      const double mismatch = std::max(std::abs(report.g_plus.alpha - report.g_minus.alpha),
                                       std::abs(report.g_plus.beta - sign * report.g_minus.beta));
      report.base_side = report.g_plus.holds && report.g_minus.holds && mismatch < 10.0 * tol;
      break;
    }
    case 4:
    case 5: {
      const bool plus = statement == 4;
      report.description = plus ? "FR u -> v in G+ iff [u;u]/sqrt2 -> [v;v]/sqrt2 in the cover"
                                : "FR u -> v in G- iff [u;-u]/sqrt2 -> [v;-v]/sqrt2 in the cover";
      const double s = plus ? 1.0 : -1.0;
      report.cover = check_fr(dec_cover, r * lift(u, s * u), r * lift(v, s * v), tau, tol);
      TransferWitness& base = plus ? report.g_plus : report.g_minus;
      base = check_fr(plus ? dec_plus : dec_minus, u, v, tau, tol);
      base_alpha = base.alpha;
      base_beta = base.beta;
      report.base_side = base.holds;
      break;
    }
  }
  report.cover_side = report.cover.holds;
  report.coefficient_error =
      std::max(std::abs(report.cover.alpha - base_alpha), std::abs(report.cover.beta - base_beta));
  report.agree = report.cover_side == report.base_side &&
                 (!report.cover_side || report.coefficient_error < 10.0 * tol);
  return report;
}

}  // namespace wt

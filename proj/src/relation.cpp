#include <algorithm>
#include <cmath>
#include <memory>
#include <iomanip>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "walktransfer/parallel.hpp"
#include "walktransfer/pgst.hpp"

namespace wt {

namespace {

using BigMatrix = std::vector<std::vector<BigFloat>>;

// Weights such as sqrt(2) or sqrt(c_jk c_kj) are stored as doubles; lifting
// them back to the exact square root keeps true relations exact at 100 digits.
BigFloat lift_real(double x) {
  if (x == std::round(x)) return BigFloat(x);
  const double sq = x * x;
  const double r = std::round(sq);
  if (r > 0.0 && std::abs(sq - r) < 1e-12 * std::max(1.0, r)) {
    BigFloat root = boost::multiprecision::sqrt(BigFloat(r));
    return x < 0.0 ? BigFloat(-root) : root;
  }
  return BigFloat(x);
}

BigMatrix big_hamiltonian(const WeightedGraph& g, HamiltonianKind kind) {
  const auto n = static_cast<std::size_t>(g.order());
  BigMatrix a(n, std::vector<BigFloat>(n, BigFloat(0)));
  for (const auto& [e, w] : g.edges()) {
    const BigFloat lifted = lift_real(w);
    const auto i = static_cast<std::size_t>(e.first);
    const auto j = static_cast<std::size_t>(e.second);
    switch (kind) {
      case HamiltonianKind::Adjacency:
      case HamiltonianKind::AdjacencyPlusPotential:
        a[i][j] = lifted;
        a[j][i] = lifted;
        break;
      case HamiltonianKind::Laplacian:
        a[i][j] = -lifted;
        a[j][i] = -lifted;
        a[i][i] += lifted;
        a[j][j] += lifted;
        break;
      case HamiltonianKind::SignlessLaplacian:
        a[i][j] = lifted;
        a[j][i] = lifted;
        a[i][i] += lifted;
        a[j][j] += lifted;
        break;
    }
  }
  if (kind == HamiltonianKind::AdjacencyPlusPotential) {
    for (std::size_t v = 0; v < n; ++v) a[v][v] += lift_real(g.potential(static_cast<int>(v)));
  }
  return a;
}

// Solves (a - sigma I) y = x by Gaussian elimination with partial pivoting.
// Returns false when a pivot vanishes, i.e. sigma is an eigenvalue to working precision.
bool shifted_solve(const BigMatrix& a, const BigFloat& sigma, std::vector<BigFloat> x, std::vector<BigFloat>& y) {
  const std::size_t n = a.size();
  BigMatrix b = a;
  for (std::size_t i = 0; i < n; ++i) b[i][i] -= sigma;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(b[r][col]) > abs(b[piv][col])) piv = r;
    }
    if (b[piv][col] == 0) return false;
    std::swap(b[piv], b[col]);
    std::swap(x[piv], x[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigFloat f = b[r][col] / b[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) b[r][k] -= f * b[col][k];
      x[r] -= f * x[col];
    }
  }
  y.assign(n, BigFloat(0));
  for (std::size_t i = n; i-- > 0;) {
    BigFloat s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= b[i][k] * y[k];
    y[i] = s / b[i][i];
  }
  return true;
}

BigFloat rayleigh_refine(const BigMatrix& a, double sigma0, const Vector& x0) {
  const std::size_t n = a.size();
  std::vector<BigFloat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = x0(static_cast<Eigen::Index>(i));
  BigFloat sigma = sigma0;
  const BigFloat stop("1e-95");
  for (int iter = 0; iter < 12; ++iter) {
    std::vector<BigFloat> y;
    if (!shifted_solve(a, sigma, x, y)) break;
    BigFloat norm2 = 0;
    for (const auto& yi : y) norm2 += yi * yi;
    const BigFloat norm = sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    BigFloat next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      BigFloat row = 0;
      for (std::size_t k = 0; k < n; ++k) row += a[i][k] * x[k];
      next += x[i] * row;
    }
    const bool done = abs(next - sigma) < stop * std::max(BigFloat(1), abs(next));
    sigma = next;
    if (done) break;
  }
  return sigma;
}

std::string format_big(const BigFloat& x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(6) << x;
  return out.str();
}

std::string cos_term(int l, int n) {
  return "2cos(2pi*" + std::to_string(l) + "/" + std::to_string(n) + ")";
}

}  // namespace

std::optional<std::set<int>> circulant_connection_set(const WeightedGraph& g) {
  const int n = g.order();
  if (n < 2 || !g.is_simple()) return std::nullopt;
  std::set<int> s;
  for (int j = 1; j < n; ++j) {
    if (g.has_edge(0, j)) s.insert(j);
  }
  for (int x : s) {
    if (!s.contains(n - x)) return std::nullopt;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) != s.contains((j - i) % n)) return std::nullopt;
    }
  }
  return s;
}

std::vector<ExactEigenvalue> exact_eigenvalues(const WeightedGraph& g, HamiltonianKind kind,
                                               const SpectralDecomposition& dec) {
  if (dec.order() != g.order()) throw DomainError("decomposition does not belong to this graph");
  std::vector<ExactEigenvalue> out;
  const int n = g.order();

  if (const auto conn = circulant_connection_set(g)) {
    const std::set<int> s = *conn;
    const double k = static_cast<double>(s.size());
    const bool is_cycle = n >= 3 && s == std::set<int>{1, n - 1};
    std::set<int> co_cycle;
    for (int j = 2; j <= n - 2; ++j) co_cycle.insert(j);
    const bool is_co_cycle = n >= 4 && s == co_cycle;
    const auto adjacency_value = [s, n](int l) {
      double sum = 0.0;
      for (int x : s) sum += two_cos_rational(static_cast<long long>(l) * x, n);
      return sum / 2.0;
    };
    const auto adjacency_hp = [s, n](int l) {
      const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
      BigFloat sum = 0;
      for (int x : s) sum += cos(two_pi * ((static_cast<long long>(l) * x) % n) / n);
      return sum;
    };
    const double sign = kind == HamiltonianKind::Laplacian ? -1.0 : 1.0;
    const double shift = (kind == HamiltonianKind::Laplacian || kind == HamiltonianKind::SignlessLaplacian) ? k : 0.0;
    for (int j = 0; j < dec.size(); ++j) {
      const double target = dec.eigenvalues[static_cast<std::size_t>(j)];
      int match = -1;
      for (int l = 0; l <= n / 2; ++l) {
        if (std::abs(shift + sign * adjacency_value(l) - target) < 1e-7 * std::max(1.0, dec.scale)) {
          match = l;
          break;
        }
      }
      if (match < 0) throw DomainError("circulant eigenvalue could not be matched to a closed form");
      std::string base;
      if (is_cycle) {
        base = cos_term(match, n);
      } else if (is_co_cycle) {
        base = match == 0 ? std::to_string(n - 3) : "-1-" + cos_term(match, n);
      } else {
        base = "sum_{s in S} cos(2pi*" + std::to_string(match) + "*s/" + std::to_string(n) + ")";
      }
      ExactEigenvalue ev;
      ev.value = shift + sign * adjacency_value(match);
      if (shift != 0.0) {
        ev.expression = std::to_string(static_cast<int>(k)) + (sign < 0 ? "-(" : "+(") + base + ")";
      } else {
        ev.expression = base;
      }
      ev.high_precision = [adjacency_hp, match, shift, sign] {
        return BigFloat(shift) + BigFloat(sign) * adjacency_hp(match);
      };
      out.push_back(std::move(ev));
    }
    return out;
  }

  auto big = std::make_shared<const BigMatrix>(big_hamiltonian(g, kind));
  for (int j = 0; j < dec.size(); ++j) {
    ExactEigenvalue ev;
    ev.value = dec.eigenvalues[static_cast<std::size_t>(j)];
    ev.expression = "eigenvalue #" + std::to_string(j) + " (Rayleigh quotient iteration, 100 digits)";
    const Vector x0 = dec.bases[static_cast<std::size_t>(j)].col(0);
    const double sigma0 = ev.value;
    ev.high_precision = [big, sigma0, x0] { return rayleigh_refine(*big, sigma0, x0); };
    out.push_back(std::move(ev));
  }
  return out;
}

PhasePattern derive_phase_pattern(const SpectralDecomposition& dec, const Permutation& p, const Vector& u,
                                  const Vector& v, int m, double tol) {
  const int n = dec.order();
  if (m < 2) throw DomainError("root order m must be at least 2");
  if (!is_permutation(p, n)) throw DomainError("P is not a permutation of the vertex set");
  if (u.size() != n || v.size() != n) throw DomainError("state length does not match the graph order");

  Matrix ham = Matrix::Zero(n, n);
  for (int j = 0; j < dec.size(); ++j) {
    ham += dec.eigenvalues[static_cast<std::size_t>(j)] * dec.projectors[static_cast<std::size_t>(j)];
  }
  const Matrix pm = permutation_matrix(p);
  if ((pm * ham - ham * pm).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, dec.scale)) {
    throw DomainError("P does not commute with the Hamiltonian");
  }

  PhasePattern pat;
  pat.m = m;
  pat.automorphism_consistent = (apply(p, v) - u).norm() < tol;
  pat.support = eigenvalue_support(dec, u);
  if (pat.support != eigenvalue_support(dec, v)) {
    pat.reason = "u and v have different eigenvalue supports";
    return pat;
  }
  for (int j : pat.support) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    const Vector eu = e * u;
    const Vector ev = e * v;
    const double ratio = ev.dot(eu) / ev.squaredNorm();
    const double residual = (eu - ratio * ev).norm();
    int exponent = -1;
    if (residual < tol && std::abs(ratio - 1.0) < tol) {
      exponent = 0;
    } else if (residual < tol && std::abs(ratio + 1.0) < tol && m % 2 == 0) {
      exponent = m / 2;
    }
    if (exponent < 0) {
      pat.exponents.clear();
      pat.reason = "no exponent fits eigenvalue index " + std::to_string(j);
      return pat;
    }
    pat.exponents.push_back(exponent);
    pat.max_residual = std::max(pat.max_residual, (eu - (exponent == 0 ? 1.0 : -1.0) * ev).norm());
  }
  pat.defined = true;
  return pat;
}

namespace {

class RelationSearch {
 public:
  RelationSearch(const std::vector<double>& lambdas, const std::vector<int>& exponents, int m,
                 const std::vector<BigFloat>& hp, const RelationSearchOptions& opt)
      : lam_(lambdas), exp_(exponents), m_(m), hp_(hp), opt_(opt), cert_tol_(opt.certificate_tol) {
    const std::size_t d = lam_.size();
    suffix_max_.assign(d + 1, 0.0);
    for (std::size_t i = d; i-- > 0;) suffix_max_[i] = std::max(suffix_max_[i + 1], std::abs(lam_[i]));
    c_.assign(d, 0);
  }

  // First vector (lexicographic) with L1 norm exactly `level` and c_0 = first.
  std::optional<std::vector<int>> run(int level, int first) {
    if (std::abs(first) > level) return std::nullopt;
    c_[0] = first;
    if (dfs(1, level - std::abs(first), first, first * lam_[0])) return c_;
    return std::nullopt;
  }

 private:
  bool leaf_accepts() const {
    long long phase = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) phase += static_cast<long long>(c_[j]) * exp_[j];
    if (((phase % m_) + m_) % m_ == 0) return false;
    BigFloat w = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) w += c_[j] * hp_[j];
    return abs(w) < cert_tol_;
  }

  bool dfs(std::size_t pos, int remaining, long long sum, double w) {
    const std::size_t d = lam_.size();
    if (pos + 1 == d) {
      const long long last = -sum;
      if (std::abs(last) > opt_.coeff_bound || std::abs(last) != remaining) return false;
      if (std::abs(w + static_cast<double>(last) * lam_[pos]) >= opt_.float_tol) return false;
      c_[pos] = static_cast<int>(last);
      return leaf_accepts();
    }
    for (int x = -opt_.coeff_bound; x <= opt_.coeff_bound; ++x) {
      const int rem = remaining - std::abs(x);
      if (rem < 0) continue;
      const long long s = sum + x;
      if (std::abs(s) > rem || (rem - std::abs(s)) % 2 != 0) continue;
      const double wx = w + x * lam_[pos];
      if (std::abs(wx) > rem * suffix_max_[pos + 1] + opt_.float_tol) continue;
      c_[pos] = x;
      if (dfs(pos + 1, rem, s, wx)) return true;
    }
    return false;
  }

  const std::vector<double>& lam_;
  const std::vector<int>& exp_;
  int m_;
  const std::vector<BigFloat>& hp_;
  RelationSearchOptions opt_;
  BigFloat cert_tol_;
  std::vector<double> suffix_max_;
  std::vector<int> c_;
};

}  // namespace

std::optional<NoPgstCertificate> integer_relation_certificate(const std::vector<ExactEigenvalue>& support,
                                                              const std::vector<int>& exponents, int m,
                                                              const RelationSearchOptions& options) {
  if (support.size() != exponents.size()) {
    throw DomainError("support has " + std::to_string(support.size()) + " eigenvalues but the pattern has " +
                      std::to_string(exponents.size()) + " exponents");
  }
  if (support.size() > static_cast<std::size_t>(kMaxRelationSupport)) {
    throw DomainError("exhaustive relation search is limited to supports of size " +
                      std::to_string(kMaxRelationSupport));
  }
  if (m < 2) throw DomainError("root order m must be at least 2");
  if (options.coeff_bound < 1) throw DomainError("coefficient bound must be at least 1");
  if (!(options.float_tol > 0.0) || !(options.certificate_tol > 0.0)) {
    throw DomainError("relation tolerances must be positive");
  }
  if (support.size() < 2) return std::nullopt;

  std::vector<double> lambdas;
  std::vector<BigFloat> hp;
  for (const auto& ev : support) {
    lambdas.push_back(ev.value);
    hp.push_back(ev.high_precision());
  }

  const int bound = options.coeff_bound;
  const int max_level = std::min(options.max_l1, bound * static_cast<int>(support.size()));
  for (int level = 2; level <= max_level; level += 2) {
    const auto branches = static_cast<std::size_t>(2 * bound + 1);
    std::vector<std::optional<std::vector<int>>> hits(branches);
    parallel_for(branches, [&](std::size_t b) {
      RelationSearch search(lambdas, exponents, m, hp, options);
      hits[b] = search.run(level, static_cast<int>(b) - bound);
    });
    for (const auto& hit : hits) {
      if (!hit) continue;
      NoPgstCertificate cert;
      cert.m = m;
      cert.coefficients = *hit;
      cert.exponents = exponents;
      BigFloat w = 0;
      long long phase = 0;
      for (std::size_t j = 0; j < support.size(); ++j) {
        const int c = cert.coefficients[j];
        cert.lambdas.push_back(support[j].value);
        cert.expressions.push_back(support[j].expression);
        cert.relation_value += c * support[j].value;
        cert.coefficient_sum += c;
        phase += static_cast<long long>(c) * exponents[j];
        w += c * hp[j];
      }
      cert.phase_sum = static_cast<int>(((phase % m) + m) % m);
      cert.relation_value_hp = format_big(w);
      cert.relation_value_hp_abs = static_cast<double>(abs(w));
      return cert;
    }
  }
  return std::nullopt;
}

bool verify_certificate(const NoPgstCertificate& cert, const std::vector<ExactEigenvalue>& support,
                        double certificate_tol) {
  if (cert.coefficients.size() != support.size() || cert.exponents.size() != support.size() || cert.m < 2) {
    return false;
  }
  long long sum = 0;
  long long phase = 0;
  BigFloat w = 0;
  for (std::size_t j = 0; j < support.size(); ++j) {
    sum += cert.coefficients[j];
    phase += static_cast<long long>(cert.coefficients[j]) * cert.exponents[j];
    w += cert.coefficients[j] * support[j].high_precision();
  }
  const long long reduced = ((phase % cert.m) + cert.m) % cert.m;
  return sum == 0 && reduced != 0 && reduced == cert.phase_sum && abs(w) < BigFloat(certificate_tol);
}

NoPgstReport certify_no_pgst(const WeightedGraph& g, HamiltonianKind kind, const Permutation& p,
                             const Vector& u, const Vector& v, int m, const RelationSearchOptions& options) {
  const SpectralDecomposition dec = decompose(hamiltonian(g, kind));
  NoPgstReport report;
  report.pattern = derive_phase_pattern(dec, p, u, v, m);
  if (!report.pattern.defined) return report;
  const std::vector<ExactEigenvalue> all = exact_eigenvalues(g, kind, dec);
  for (int j : report.pattern.support) report.support_eigenvalues.push_back(all[static_cast<std::size_t>(j)]);
  report.certificate = integer_relation_certificate(report.support_eigenvalues, report.pattern.exponents, m, options);
  return report;
}

}  // namespace wt

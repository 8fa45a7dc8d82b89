#include <algorithm>
#include <cmath>

#include "walktransfer/pgst.hpp"

namespace wt {

bool is_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

bool is_automorphism(const WeightedGraph& g, const Permutation& p) {
  const int n = g.order();
  if (!is_permutation(p, n)) return false;
  for (int v = 0; v < n; ++v) {
    if (g.potential(v) != g.potential(p[static_cast<std::size_t>(v)])) return false;
  }
  for (const auto& [e, w] : g.edges()) {
    if (g.weight(p[static_cast<std::size_t>(e.first)], p[static_cast<std::size_t>(e.second)]) != w) return false;
  }
  return true;
}

Matrix permutation_matrix(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  Matrix m = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) m(p[static_cast<std::size_t>(j)], j) = 1.0;
  return m;
}

Vector apply(const Permutation& p, const Vector& x) {
  if (static_cast<Eigen::Index>(p.size()) != x.size()) throw DomainError("permutation size mismatch");
  Vector out(x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) out(p[static_cast<std::size_t>(j)]) = x(j);
  return out;
}

Permutation compose_permutations(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw DomainError("permutation size mismatch");
  Permutation out(inner.size());
  for (std::size_t j = 0; j < inner.size(); ++j) out[j] = outer[static_cast<std::size_t>(inner[j])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
  return p;
}

Permutation rotation(int n, int k) {
  Permutation p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = (((j + k) % n) + n) % n;
  return p;
}

Permutation reflection(int n, int c) {
  Permutation p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = (((c - j) % n) + n) % n;
  return p;
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const WeightedGraph& g, std::size_t max_count)
      : n_(g.order()), adj_(adjacency_matrix(g)), max_count_(max_count) {
    signature_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      auto& sig = signature_[static_cast<std::size_t>(v)];
      sig.push_back(g.potential(v));
      std::vector<double> weights;
      for (int w = 0; w < n_; ++w) {
        if (adj_(v, w) != 0.0) weights.push_back(adj_(v, w));
      }
      std::sort(weights.begin(), weights.end());
      sig.insert(sig.end(), weights.begin(), weights.end());
    }
    perm_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  std::vector<Permutation> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(int v) {
    if (v == n_) {
      if (found_.size() >= max_count_) {
        throw DomainError("automorphism group has more than " + std::to_string(max_count_) + " elements");
      }
      found_.push_back(perm_);
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      if (signature_[static_cast<std::size_t>(v)] != signature_[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int i = 0; i < v && ok; ++i) ok = adj_(v, i) == adj_(w, perm_[static_cast<std::size_t>(i)]);
      if (!ok) continue;
      perm_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      extend(v + 1);
      used_[static_cast<std::size_t>(w)] = false;
    }
    perm_[static_cast<std::size_t>(v)] = -1;
  }

  int n_;
  Matrix adj_;
  std::size_t max_count_;
  std::vector<std::vector<double>> signature_;
  Permutation perm_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

void require_automorphism(const WeightedGraph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) throw DomainError("permutation is not an automorphism of the graph");
}

void require_vertex(const WeightedGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

std::vector<Permutation> find_automorphisms(const WeightedGraph& g, std::size_t max_count) {
  if (g.order() > kAutomorphismOrderCap) {
    throw DomainError("automorphism search is limited to " + std::to_string(kAutomorphismOrderCap) +
                      " vertices; pass an explicit permutation instead");
  }
  return AutomorphismSearch(g, max_count).run();
}

std::string_view to_string(DerivationOutcome outcome) {
  switch (outcome) {
    case DerivationOutcome::NotApplicable: return "not_applicable";
    case DerivationOutcome::PairState: return "pair_state";
    case DerivationOutcome::ZeroTarget: return "zero_target";
    case DerivationOutcome::NormMismatch: return "norm_mismatch";
  }
  return "not_applicable";
}

PairDerivation pair_from_plus_automorphism(const WeightedGraph& g, const Permutation& p, int a, int b, int c, int d) {
  require_automorphism(g, p);
  for (int x : {a, b, c, d}) require_vertex(g, x);
  if (a == b || c == d) throw DomainError("plus states need two distinct vertices");
  const int n = g.order();
  const auto img = [&](int x) { return p[static_cast<std::size_t>(x)]; };
  const double r = 1.0 / std::sqrt(2.0);

  PairDerivation out;
  out.source = Vector::Zero(n);
  out.target = Vector::Zero(n);
  if (img(a) == a && img(b) != b) {
    out.condition = 1;
    out.source(b) += r;
    out.source(img(b)) -= r;
  } else if (img(a) == b && img(b) != a) {
    out.condition = 2;
    out.source(a) += r;
    out.source(img(b)) -= r;
  } else {
    return out;
  }
  out.target(c) += r;
  out.target(d) += r;
  out.target(img(c)) -= r;
  out.target(img(d)) -= r;
  out.target_norm = out.target.norm();

  int positive = 0;
  int negative = 0;
  int other = 0;
  for (int j = 0; j < n; ++j) {
    const double x = out.target(j);
    if (x == 0.0) continue;
    if (std::abs(x - r) < 1e-15) {
      ++positive;
    } else if (std::abs(x + r) < 1e-15) {
      ++negative;
    } else {
      ++other;
    }
  }
  if (positive + negative + other == 0) {
    out.outcome = DerivationOutcome::ZeroTarget;
  } else if (positive == 1 && negative == 1 && other == 0) {
    out.outcome = DerivationOutcome::PairState;
  } else {
    out.outcome = DerivationOutcome::NormMismatch;
  }
  return out;
}

bool vertex_to_plus_obstruction(const WeightedGraph& g, const Permutation& p, int a, int b) {
  require_automorphism(g, p);
  require_vertex(g, a);
  require_vertex(g, b);
  return p[static_cast<std::size_t>(b)] == b && p[static_cast<std::size_t>(a)] != a;
}

}  // namespace wt

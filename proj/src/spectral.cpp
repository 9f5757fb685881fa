#include "toughcycle/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace toughcycle {

namespace {

// Dense row-major square matrix; graphs here have at most 64 vertices.
class Dense {
 public:
  explicit Dense(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

  int n() const { return n_; }
  double& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<double> apply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
      double sum = 0.0;
      const double* row = &data_[static_cast<std::size_t>(i) * n_];
      for (int j = 0; j < n_; ++j) sum += row[j] * x[j];
      y[i] = sum;
    }
    return y;
  }

  // this <- this * this, scaled so the largest entry is 1.
  void square_normalized() {
    std::vector<double> out(data_.size(), 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int k = 0; k < n_; ++k) {
        const double a = at(i, k);
        if (a == 0.0) continue;
        const double* row = &data_[static_cast<std::size_t>(k) * n_];
        double* dst = &out[static_cast<std::size_t>(i) * n_];
        for (int j = 0; j < n_; ++j) dst[j] += a * row[j];
      }
    }
    const double scale = *std::max_element(out.begin(), out.end());
    for (double& v : out) v /= scale;
    data_.swap(out);
  }

 private:
  int n_;
  std::vector<double> data_;
};

struct Bracket {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  double rayleigh = 0.0;
};

// For a nonnegative irreducible symmetric M and a positive x, the
// Collatz-Wielandt ratios min/max (Mx)_i / x_i bracket the Perron root, and
// the Rayleigh quotient is a lower bound.
Bracket bracket(const Dense& m, const std::vector<double>& x) {
  const std::vector<double> y = m.apply(x);
  Bracket b;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double xy = 0.0;
  double xx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) return b;
    const double r = y[i] / x[i];
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    xy += x[i] * y[i];
    xx += x[i] * x[i];
  }
  b.rayleigh = xy / xx;
  b.lower = std::max(lo, b.rayleigh);
  b.upper = hi;
  return b;
}

// Power iteration x <- M^(2^s) x0, where M^(2^s) is formed by repeated
// squaring; after each squaring the iterate is bracketed with M itself.
SpectralEstimate perron_root(const Dense& m, double shift, const PowerIterationOptions& options) {
  if (!(options.tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  const int n = m.n();
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> positive(0.5, 1.5);

  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<double> start(static_cast<std::size_t>(n), 1.0);
    if (attempt > 0) {
      for (double& v : start) v = positive(rng);
    }
    Dense power = m;
    double best_width = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (int squarings = 0; squarings <= options.max_squarings; ++squarings) {
      std::vector<double> x = power.apply(start);
      const double norm = *std::max_element(x.begin(), x.end());
      if (norm > 0.0) {
        for (double& v : x) v /= norm;
      }
      const Bracket b = bracket(m, x);
      const double width = b.upper - b.lower;
      if (width <= options.tolerance) {
        SpectralEstimate e;
        e.lower = b.lower - shift;
        e.upper = b.upper - shift;
        e.value = std::clamp(b.rayleigh, b.lower, b.upper) - shift;
        e.tolerance = options.tolerance;
        e.squarings = squarings;
        return e;
      }
      // Once M^(2^s) is numerically rank one, further squaring cannot help.
      if (width < best_width) {
        best_width = width;
        stalled = 0;
      } else if (++stalled >= 3) {
        break;
      }
      power.square_normalized();
    }
  }
  throw ConvergenceError("power iteration did not certify the tolerance " +
                         std::to_string(options.tolerance));
}

void require_connected(const Graph& g) {
  if (g.order() == 0 || !is_connected(g))
    throw PreconditionError("spectral radius needs a connected graph (irreducible matrix)");
}

void require_t(int t) {
  if (t < 1 || t > 3) throw PreconditionError("t must be 1, 2 or 3, got " + std::to_string(t));
}

double checked_sqrt(long long radicand, const char* what) {
  if (radicand < 0) {
    throw PreconditionError(std::string(what) + ": negative radicand " + std::to_string(radicand));
  }
  return std::sqrt(static_cast<double>(radicand));
}

}  // namespace

SpectralEstimate adjacency_spectral_radius(const Graph& g, const PowerIterationOptions& options) {
  require_connected(g);
  const int n = g.order();
  Dense m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1.0;
    for_each_bit(g.neighbors(i), [&](int j) { m.at(i, j) = 1.0; });
  }
  return perron_root(m, 1.0, options);
}

SpectralEstimate signless_laplacian_radius(const Graph& g, const PowerIterationOptions& options) {
  require_connected(g);
  const int n = g.order();
  if (n == 1) {
    return SpectralEstimate{0.0, options.tolerance, 0.0, 0.0, 0};
  }
  Dense m(n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = g.degree(i);
    for_each_bit(g.neighbors(i), [&](int j) { m.at(i, j) = 1.0; });
  }
  return perron_root(m, 0.0, options);
}

double rho_edge_bound(int n, int m) {
  if (n < 1 || m < 0 || static_cast<long long>(m) * 2 > static_cast<long long>(n) * (n - 1))
    throw PreconditionError("rho_edge_bound needs n >= 1 and 0 <= m <= n(n-1)/2");
  return checked_sqrt(2LL * m - n + 1, "rho_edge_bound");
}

double q_edge_bound(int n, int m) {
  if (n < 2) throw PreconditionError("q_edge_bound needs n >= 2");
  return 2.0 * m / (n - 1) + n - 2;
}

int pancyclicity_min_order(int t) {
  require_t(t);
  static constexpr int kFloor[] = {0, 7, 16, 28};
  return kFloor[t];
}

long long edge_threshold(int n, int t) {
  require_t(t);
  if (n < pancyclicity_min_order(t)) {
    throw PreconditionError("the edge condition is stated for n >= " +
                            std::to_string(pancyclicity_min_order(t)) + " when t=" +
                            std::to_string(t) + ", got n=" + std::to_string(n));
  }
  const long long r = n - 2LL * t;
  return r * (r - 1) / 2 + 3LL * t * t;
}

long long rho_threshold_radicand(int n, int t) {
  require_t(t);
  const long long nn = n;
  const long long tt = t;
  return nn * nn - 4 * tt * nn - 2 * nn + 10 * tt * tt + 2 * tt + 1;
}

long long hamiltonicity_rho_threshold_radicand(int n, int t) {
  require_t(t);
  const long long nn = n;
  const long long tt = t;
  return nn * nn - 4 * tt * nn - 2 * nn + 10 * tt * tt + 2 * tt - 1;
}

double rho_threshold(int n, int t) {
  return checked_sqrt(rho_threshold_radicand(n, t), "rho_threshold");
}

double hamiltonicity_rho_threshold(int n, int t) {
  return checked_sqrt(hamiltonicity_rho_threshold_radicand(n, t), "hamiltonicity_rho_threshold");
}

Rational q_threshold_exact(int n, int t, QMode mode) {
  require_t(t);
  if (n < pancyclicity_min_order(t)) {
    throw PreconditionError("the signless Laplacian condition is stated for n >= " +
                            std::to_string(pancyclicity_min_order(t)) + " when t=" +
                            std::to_string(t));
  }
  const long long nn = n;
  const long long tt = t;
  long long numerator = 0;
  if (mode == QMode::Printed) {
    numerator = 2 * nn * nn + 10 * tt * tt - 4 * tt * nn + 2 * tt - nn;
  } else {
    numerator = 2 * edge_threshold(n, t);
  }
  return Rational(numerator, nn - 1) + Rational(nn - 2);
}

double q_threshold(int n, int t, QMode mode) { return q_threshold_exact(n, t, mode).to_double(); }

std::string to_string(QMode mode) { return mode == QMode::Printed ? "printed" : "corrected"; }

std::vector<ThresholdRow> threshold_table(int t, int n_from, int n_to) {
  std::vector<ThresholdRow> rows;
  for (int n = std::max(n_from, pancyclicity_min_order(t)); n <= n_to; ++n) {
    rows.push_back({n, t, edge_threshold(n, t), rho_threshold(n, t),
                    q_threshold(n, t, QMode::Printed), q_threshold(n, t, QMode::Corrected)});
  }
  return rows;
}

std::string threshold_table_csv(const std::vector<ThresholdRow>& rows) {
  std::ostringstream out;
  out << "n,t,edge_threshold,rho_threshold,q_printed,q_corrected\n";
  out << std::setprecision(12);
  for (const ThresholdRow& r : rows) {
    out << r.n << ',' << r.t << ',' << r.edge_threshold << ',' << r.rho_threshold << ','
        << r.q_printed << ',' << r.q_corrected << '\n';
  }
  return out.str();
}

}  // namespace toughcycle

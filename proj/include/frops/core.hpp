#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core parameter and point types for Forelli-Rudin type operators on the
// unit ball of C^n and its product with itself.

namespace frops {

using complex_t = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest admissible |z| for a ball point; kernels stay finite under round-off.
inline constexpr double kMaxRadius = 1.0 - 1e-14;

inline bool is_inf(double x) { return std::isinf(x); }

// Pair of Lebesgue exponents (p1, p2), each in [1, inf]. Infinity is the
// IEEE value and must be checked explicitly; core numeric paths reject it.
struct ExponentPair {
  double p1;
  double p2;

  ExponentPair(double p1_, double p2_) : p1(p1_), p2(p2_) {
    if (!(p1 >= 1.0) || !(p2 >= 1.0))
      throw std::domain_error("ExponentPair: exponents must be >= 1");
  }

  bool finite() const { return !is_inf(p1) && !is_inf(p2); }
  void require_finite(const char* what) const {
    if (!finite())
      throw std::domain_error(std::string(what) + ": infinite exponent not supported here");
  }
};

// Pair of weight exponents on (1-|z|^2); each must exceed -1 so that the
// weighted measure is finite.
struct WeightPair {
  double w1;
  double w2;

  WeightPair(double w1_, double w2_) : w1(w1_), w2(w2_) {
    if (!(w1 > -1.0) || !(w2 > -1.0))
      throw std::domain_error("WeightPair: weights must be > -1");
  }
};

using RealPair = std::array<double, 2>;

// Full parameter tuple of one boundedness question:
// kernel exponents (a, b, c), measure weights (alpha, beta), and the
// source/target Lebesgue exponents (p, q).
struct OperatorParams {
  int n;
  RealPair a;
  RealPair b;
  RealPair c;
  WeightPair alpha;
  WeightPair beta;
  ExponentPair p;
  ExponentPair q;

  OperatorParams(int n_, RealPair a_, RealPair b_, RealPair c_, WeightPair alpha_,
                 WeightPair beta_, ExponentPair p_, ExponentPair q_)
      : n(n_), a(a_), b(b_), c(c_), alpha(alpha_), beta(beta_), p(p_), q(q_) {
    if (n < 1) throw std::domain_error("OperatorParams: n must be >= 1");
  }
};

// A point of the open unit ball B_n in C^n, |z| < 1 strictly.
class BallPoint {
 public:
  explicit BallPoint(std::vector<complex_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::domain_error("BallPoint: empty coordinates");
    if (!(norm() < kMaxRadius))
      throw std::domain_error("BallPoint: |z| must be < 1 - 1e-14");
  }

  // One-dimensional convenience constructor.
  explicit BallPoint(complex_t z) : BallPoint(std::vector<complex_t>{z}) {}

  int dimension() const { return static_cast<int>(coords_.size()); }
  std::span<const complex_t> coords() const { return coords_; }
  const complex_t& operator[](int k) const { return coords_[static_cast<size_t>(k)]; }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& z : coords_) s += std::norm(z);
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  // 1 - |z|^2, the boundary distance factor appearing in every kernel.
  double one_minus_sq() const { return 1.0 - norm_sq(); }

  // Point on the positive real axis of the first coordinate, radius r.
  static BallPoint axial(int n, double r) {
    std::vector<complex_t> c(static_cast<size_t>(n), complex_t{0.0, 0.0});
    c[0] = complex_t{r, 0.0};
    return BallPoint(std::move(c));
  }

  static BallPoint origin(int n) { return axial(n, 0.0); }

 private:
  std::vector<complex_t> coords_;
};

// A point of B_n x B_n.
struct ProductPoint {
  BallPoint z;
  BallPoint w;
};

// Hermitian inner product <z,u> = sum z_k conj(u_k).
inline complex_t inner_product(const BallPoint& z, const BallPoint& u) {
  if (z.dimension() != u.dimension())
    throw std::domain_error("inner_product: dimension mismatch");
  complex_t s{0.0, 0.0};
  for (int k = 0; k < z.dimension(); ++k) s += z[k] * std::conj(u[k]);
  return s;
}

// Holder conjugate p' with 1/p + 1/p' = 1; maps 1 <-> inf, fixes 2.
inline double holder_conjugate(double p) {
  if (!(p >= 1.0)) throw std::domain_error("holder_conjugate: p must be >= 1");
  if (p == 1.0) return kInf;
  if (is_inf(p)) return 1.0;
  return p / (p - 1.0);
}

// (p_minus, p_plus) = (min, max) of the two entries.
inline std::pair<double, double> exponent_extremes(const ExponentPair& p) {
  return {std::min(p.p1, p.p2), std::max(p.p1, p.p2)};
}

// Thrown when a quadrature refinement loop fails to converge.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a Schur-weight feasibility interval is empty.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace frops

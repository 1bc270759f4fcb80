#pragma once

// Market model parameters for the liquidation problem: price impact gamma,
// discount phi, resilience rho(t), risk aversion lambda(t) and external-flow
// intensity sigma(t). Coefficients are deterministic, bounded functions of
// time, shared read-only by every solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace liqsim {

// Deterministic, bounded coefficient function of time.
// Table kind interpolates linearly between knots and extrapolates with the
// boundary value, which keeps it bounded on [0, inf).
class CoefficientFn {
 public:
  enum class Kind { Constant, DampedExponential, Table };

  CoefficientFn() : kind_(Kind::Constant), value_(0.0) {}

  static CoefficientFn constant(double value) {
    CoefficientFn f;
    f.kind_ = Kind::Constant;
    f.value_ = value;
    return f;
  }

  // base * exp(-decay * t), decay >= 0
  static CoefficientFn damped(double base, double decay) {
    CoefficientFn f;
    f.kind_ = Kind::DampedExponential;
    f.value_ = base;
    f.decay_ = decay;
    return f;
  }

  static CoefficientFn table(std::vector<double> knots, std::vector<double> values) {
    CoefficientFn f;
    f.kind_ = Kind::Table;
    f.knots_ = std::move(knots);
    f.values_ = std::move(values);
    return f;
  }

  Kind kind() const { return kind_; }
  double constant_value() const { return value_; }
  double base() const { return value_; }
  double decay() const { return decay_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& values() const { return values_; }

  bool is_constant() const { return kind_ == Kind::Constant; }

  double operator()(double t) const {
    if (!std::isfinite(t)) throw std::invalid_argument("coefficient evaluated at non-finite t");
    switch (kind_) {
      case Kind::Constant:
        return value_;
      case Kind::DampedExponential:
        return value_ * std::exp(-decay_ * t);
      case Kind::Table: {
        if (knots_.empty()) return 0.0;
        if (t <= knots_.front()) return values_.front();
        if (t >= knots_.back()) return values_.back();
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
        std::size_t j = static_cast<std::size_t>(it - knots_.begin());
        double t0 = knots_[j - 1], t1 = knots_[j];
        double w = (t - t0) / (t1 - t0);
        return values_[j - 1] * (1.0 - w) + values_[j] * w;
      }
    }
    return 0.0;  // unreachable
  }

  // Upper bound of |f| over [0, horizon]; exact for the closed-form kinds.
  double sup_abs(double horizon) const {
    switch (kind_) {
      case Kind::Constant:
        return std::abs(value_);
      case Kind::DampedExponential:
        return decay_ >= 0.0 ? std::abs(value_)
                             : std::abs(value_) * std::exp(-decay_ * horizon);
      case Kind::Table: {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::abs(v));
        return m;
      }
    }
    return 0.0;
  }

 private:
  Kind kind_;
  double value_ = 0.0;
  double decay_ = 0.0;
  std::vector<double> knots_, values_;
};

struct ModelParams {
  double gamma = 0.5;  // price impact, currency per unit traded, > 0
  double phi = 0.2;    // discount rate, 1/time, > 0
  CoefficientFn rho = CoefficientFn::constant(0.7);     // resilience, >= 0
  CoefficientFn lambda = CoefficientFn::constant(0.1);  // risk aversion, >= 0
  CoefficientFn sigma = CoefficientFn::constant(0.25);  // external-flow intensity
  double x0 = 5.0;  // initial position, units
  double y0 = 0.0;  // initial price deviation, currency

  // Parameter set of Figure 1 (left panel: constant sigma).
  static ModelParams figure1() { return ModelParams{}; }

  // Figure 1 right panel: sigma_t = 0.25 exp(-0.2 t).
  static ModelParams figure1_damped() {
    ModelParams p;
    p.sigma = CoefficientFn::damped(0.25, 0.2);
    return p;
  }
};

// Pointwise values of rho, lambda, sigma and the derived quantities
//   a = gamma*rho + lambda + phi*gamma/2   (feedback normalizer, > 0)
//   b = rho^2 / a
//   c = 2*lambda*rho / a + phi
//   d = lambda^2 / a - lambda
// that turn the Riccati driver into b*x^2 + c*x + d.
struct DerivedCoefficients {
  double rho, lambda, sigma;
  double a, b, c, d;
};

inline DerivedCoefficients eval_coefficients(const ModelParams& p, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("eval_coefficients: non-finite t");
  DerivedCoefficients out{};
  out.rho = p.rho(t);
  out.lambda = p.lambda(t);
  out.sigma = p.sigma(t);
  out.a = p.gamma * out.rho + out.lambda + 0.5 * p.phi * p.gamma;
  out.b = out.rho * out.rho / out.a;
  out.c = 2.0 * out.lambda * out.rho / out.a + p.phi;
  out.d = out.lambda * out.lambda / out.a - out.lambda;
  return out;
}

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every model invariant and reports all violations; never throws.
// Coefficient samples are taken on [0, sample_horizon].
inline ValidationReport validate_params(const ModelParams& p, double sample_horizon = 100.0) {
  ValidationReport r;
  auto bad = [&](const std::string& msg) { r.violations.push_back(msg); };

  if (!(p.gamma > 0.0)) bad("gamma must be positive");
  if (!(p.phi > 0.0)) bad("phi must be positive");
  if (!std::isfinite(p.x0)) bad("x0 must be finite");
  if (!std::isfinite(p.y0)) bad("y0 must be finite");

  auto check_table = [&](const CoefficientFn& f, const std::string& name) {
    if (f.kind() != CoefficientFn::Kind::Table) return;
    if (f.knots().empty()) bad(name + " table must have at least one knot");
    if (f.knots().size() != f.values().size()) bad(name + " table knot/value size mismatch");
    for (std::size_t i = 1; i < f.knots().size(); ++i) {
      if (!(f.knots()[i] > f.knots()[i - 1])) {
        bad(name + " table knots must be strictly increasing");
        break;
      }
    }
  };
  check_table(p.rho, "rho");
  check_table(p.lambda, "lambda");
  check_table(p.sigma, "sigma");

  auto check_decay = [&](const CoefficientFn& f, const std::string& name) {
    if (f.kind() == CoefficientFn::Kind::DampedExponential && f.decay() < 0.0)
      bad(name + " decay must be nonnegative");
  };
  check_decay(p.rho, "rho");
  check_decay(p.lambda, "lambda");
  check_decay(p.sigma, "sigma");

  if (!r.ok()) return r;  // sampling below assumes well-formed functions

  const int samples = 512;
  bool lambda_bad = false, rho_bad = false, a_bad = false;
  for (int i = 0; i <= samples; ++i) {
    double t = sample_horizon * static_cast<double>(i) / samples;
    double lam = p.lambda(t);
    double rho = p.rho(t);
    if (lam < 0.0) lambda_bad = true;
    if (rho < 0.0) rho_bad = true;
    if (!(p.gamma * rho + lam + 0.5 * p.phi * p.gamma > 0.0)) a_bad = true;
  }
  // Table knots beyond the uniform sweep.
  auto sweep_knots = [&](const CoefficientFn& f, auto&& pred, bool& flag) {
    if (f.kind() != CoefficientFn::Kind::Table) return;
    for (double v : f.values())
      if (pred(v)) flag = true;
  };
  sweep_knots(p.lambda, [](double v) { return v < 0.0; }, lambda_bad);
  sweep_knots(p.rho, [](double v) { return v < 0.0; }, rho_bad);

  if (lambda_bad) bad("lambda must be nonnegative");
  if (rho_bad) bad("rho must be nonnegative");
  if (a_bad) bad("normalizer a = gamma*rho + lambda + phi*gamma/2 must stay positive");
  return r;
}

// Thrown by CLI/config paths on invalid inputs (exit code 2).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by solvers/simulators on numerical failure (exit code 3).
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_valid(const ModelParams& p) {
  auto r = validate_params(p);
  if (!r.ok()) {
    std::string msg = "invalid model parameters:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw ValidationError(msg);
  }
}

}  // namespace liqsim

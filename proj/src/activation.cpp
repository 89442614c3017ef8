#include "pielm/activation.hpp"

#include <cmath>

#include "pielm/error.hpp"

namespace pielm {

std::string_view to_string(ActivationKind kind) {
  switch (kind) {
    case ActivationKind::Sine: return "sine";
    case ActivationKind::Sigmoid: return "sigmoid";
    case ActivationKind::Gaussian: return "gaussian";
    case ActivationKind::Tanh: return "tanh";
  }
  return "unknown";
}

std::optional<ActivationKind> parse_activation(std::string_view name) {
  if (name == "sine") return ActivationKind::Sine;
  if (name == "sigmoid") return ActivationKind::Sigmoid;
  if (name == "gaussian") return ActivationKind::Gaussian;
  if (name == "tanh") return ActivationKind::Tanh;
  return std::nullopt;
}

namespace detail {

double sigmoid(double x) {
  // Branch on sign so exp never overflows.
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace detail

namespace {

double sine_derivative(int order, double x) {
  switch (order) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return std::sin(x);
  }
}

double sigmoid_derivative(int order, double x) {
  const double s = detail::sigmoid(x);
  const double s2 = s * s;
  switch (order) {
    case 0: return s;
    case 1: return s - s2;
    case 2: return s - 3.0 * s2 + 2.0 * s2 * s;
    default: {
      const double s3 = s2 * s;
      return s - 15.0 * s2 + 50.0 * s3 - 60.0 * s3 * s + 24.0 * s3 * s2;
    }
  }
}

double gaussian_derivative(int order, double x) {
  const double e = std::exp(-x * x);
  const double x2 = x * x;
  switch (order) {
    case 0: return e;
    case 1: return -2.0 * x * e;
    case 2: return -2.0 * e + 4.0 * x2 * e;
    default: return 12.0 * e - 48.0 * x2 * e + 16.0 * x2 * x2 * e;
  }
}

double tanh_derivative(int order, double x) {
  const double t = std::tanh(x);
  const double t2 = t * t;
  switch (order) {
    case 0: return t;
    case 1: return 1.0 - t2;
    case 2: return -2.0 * t + 2.0 * t2 * t;
    default: return (16.0 * t - 24.0 * t2 * t) * (1.0 - t2);
  }
}

}  // namespace

double activation(ActivationKind kind, int order, double x) {
  PIELM_THROW_IF(order != 0 && order != 1 && order != 2 && order != 4,
                 ErrorKind::ContractViolation,
                 "activation: unsupported derivative order " +
                     std::to_string(order) + " (expected 0, 1, 2 or 4)");
  switch (kind) {
    case ActivationKind::Sine: return sine_derivative(order, x);
    case ActivationKind::Sigmoid: return sigmoid_derivative(order, x);
    case ActivationKind::Gaussian: return gaussian_derivative(order, x);
    case ActivationKind::Tanh: return tanh_derivative(order, x);
  }
  throw Error(ErrorKind::ContractViolation, "activation: unknown kind");
}

}  // namespace pielm

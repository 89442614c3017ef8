#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace pielm {

enum class ActivationKind { Sine, Sigmoid, Gaussian, Tanh };

std::string_view to_string(ActivationKind kind);

/// Parses the lowercase names "sine", "sigmoid", "gaussian" and "tanh".
std::optional<ActivationKind> parse_activation(std::string_view name);

/// Derivative of the activation of the given order at x.
///
/// Supported orders are 0, 1, 2 and 4; the collocation operators never need a
/// third derivative, so order 3 throws like any other unsupported order.
/// Sigmoid derivatives are polynomials in s(x), Gaussian derivatives are
/// polynomials times exp(-x^2) and tanh derivatives are polynomials in tanh(x).
double activation(ActivationKind kind, int order, double x);

namespace detail {
// Unchecked evaluators used in the hot feature loops.
double sigmoid(double x);
}  // namespace detail

}  // namespace pielm

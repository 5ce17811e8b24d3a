#pragma once

#include "codebounds/poly.hpp"
#include "codebounds/tableau.hpp"

namespace cb {

enum class PAlgorithm { Count, Diffop, Brute };

/// Variable id of x_{a,b} (1-based indices) in an m x m matrix of variables.
inline std::uint16_t xvar(int a, int b, int m) { return static_cast<std::uint16_t>((a - 1) * m + (b - 1)); }

/// p_{tau,sigma}(X) as a polynomial in the entries x_{a,b} of an m x m matrix.
/// Brute evaluates the defining double sum over row-equivalent tableaux and
/// column permutations; it is meant for small shapes only.
RPoly p_tau_sigma(const Tableau& tau, const Tableau& sigma, int m, PAlgorithm alg);

/// Count for m <= 3, diffop otherwise.
PAlgorithm default_algorithm(int m);

} // namespace cb

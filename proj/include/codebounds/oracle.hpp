#pragma once

#include "codebounds/code.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cb {

struct SearchBudget {
    long node_limit = 200'000'000;
    double time_limit_s = 600.0;
};

struct OracleResult {
    long size = 0;
    Code witness;
    bool exact = false;
    long nodes = 0;
};

/// Universe sizes above this are rejected.
constexpr long kOracleMaxUniverse = 40000;

/// Maximum size of a code in [q]^n (or its weight-w layer) with minimum distance >= d.
/// The first universe word is forced into the code; every supported universe has a
/// transitive automorphism group that preserves the metric.
OracleResult max_code(int q, int n, long d, Metric m, std::optional<long> w = std::nullopt,
                      const SearchBudget& budget = {});

/// alpha of the strong power C_{d,q}^{n}: codes in Z_q^n with Lee-infinity distance >= d.
OracleResult alpha_circular(int q, int d, int n, const SearchBudget& budget = {});

struct CliqueResult {
    std::vector<int> vertices;  // sorted
    bool exact = false;
    long nodes = 0;
};

/// Maximum clique; adjacency given as a symmetric 0/1 matrix.
CliqueResult max_clique(const std::vector<std::vector<std::uint8_t>>& adj, const SearchBudget& budget = {});

/// Maximum independent set of a graph on nv vertices.
CliqueResult max_independent_set(int nv, const std::vector<std::pair<int, int>>& edges,
                                 const SearchBudget& budget = {});

struct ExtensionResult {
    Code code;        // C together with the added words
    Code added;
    long residual_vertices = 0;
    long residual_edges = 0;
    bool exact = false;
};

/// Adds a maximum set of words of [q]^n compatible with C and with each other.
/// Throws DomainError when the residual graph has more than max_residual vertices.
ExtensionResult max_independent_extension(const Code& c, Metric m, long d, long max_residual = 200,
                                          const SearchBudget& budget = {});

} // namespace cb

#pragma once

#include <optional>

#include "liediag/diagram.hpp"

namespace liediag {

/// S^n D: vertices are weakly increasing n-tuples in lex order. The edge
/// A → B (A, B differing in one entry a ∈ A, b ∈ B) carries
/// mult_A(a)·w(a, b); the loop at A carries Σ w(v, v) over the entries.
/// With char_p, edges whose label vanishes mod p are deleted.
Diagram sym_power(const Diagram& d, int n, std::optional<long> char_p = std::nullopt);

/// S_n D: as sym_power but weighted by the multiplicity of b in B.
Diagram sym_sub(const Diagram& d, int n, std::optional<long> char_p = std::nullopt);

/// Λ^n D on strictly increasing n-tuples; the edge A → B carries
/// (-1)^{j-i} w(a, b) with i, j the positions of a in A and b in B.
/// The sub version has the same diagram.
Diagram ext_power(const Diagram& d, int n, std::optional<long> char_p = std::nullopt);

}  // namespace liediag

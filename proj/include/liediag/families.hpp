#pragma once

#include <string_view>
#include <vector>

#include "liediag/diagram.hpp"
#include "liediag/normal_form.hpp"

namespace liediag {

/// A representation together with its canonical vertex ordering.
struct FamilyRep {
    Representation rep;
    std::vector<Index> ordering;

    Diagram diagram() const { return build_diagram(rep, ordering); }
};

/// X, Y, Z with [X, Y] = Z; dual basis x, y, z.
AlgebraPtr heisenberg();

/// X_+, X_-, H with dual basis x_+, x_-, h.
AlgebraPtr sl2_algebra();
/// The 2-dimensional module on u, v.
Representation sl2_standard();

/// Strictly upper triangular n×n matrices, basis E_ij (i < j) row-major,
/// dual basis a_ij.
AlgebraPtr upper_algebra(int n);
/// Ordering: rows bottom-up, columns ascending within a row.
FamilyRep upper_adjoint(int n);
/// Ordering: lower-triangular positions (r, c) column-major with rows
/// descending; position (r, c) holds the coordinate dual to E_cr.
FamilyRep upper_coadjoint(int n);

/// L_{m+1}/L_{n+1}: basis l_{m+1}..l_n, [l_i, l_j] = (j-i) l_{i+j}, dual
/// basis y_i. Zero-dimensional when n <= m.
AlgebraPtr witt_algebra(int m, int n);
FamilyRep witt_adjoint(int m, int n);
/// Built from T(l_i) y_k = (2i - k) y_{k-i}; ordering y_n, ..., y_{m+1}.
FamilyRep witt_coadjoint(int m, int n);

/// L_{m+1}/L_{N+1} acting on e_0..e_N, e_j = t^{j+μ}(dt)^{-λ}:
/// T(l_i) e_j = (j + μ - (i+1)λ) e_{i+j}, truncated above N.
FamilyRep tensor_field(const Rational& lambda, const Rational& mu, int m, int n_max);

/// Zero patterns (free positions, in the family's canonical vertex order)
/// predicted by the closed-form classifications; sorted canonically.
std::vector<Pattern> predicted_witt_patterns(int m, int n);
std::vector<Pattern> predicted_tensor_patterns(const Rational& lambda, const Rational& mu, int m, int n_max);

/// Pattern with exactly the given 0-based positions free.
Pattern pattern_from_free(Index size, const std::vector<Index>& free);

/// The complete list of normal forms of the n = 4 coadjoint module as
/// printed in the classification example: free positions, 1-based, in the
/// printed order.
std::vector<std::vector<Index>> upper4_coadjoint_reference();

enum class FamilyVariant { Default, Adjoint, Coadjoint };

/// Resolves a selector: heisenberg, sl2, upper:N, witt:M:N, tensor:L:U:M:N.
/// Default variant: adjoint for heisenberg and upper, the standard module
/// for sl2, coadjoint for witt. Throws liediag::ParseError.
FamilyRep select_family(std::string_view selector, FamilyVariant variant = FamilyVariant::Default);

}  // namespace liediag

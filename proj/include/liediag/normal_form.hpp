#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liediag/diagram.hpp"
#include "liediag/span.hpp"

namespace liediag {

// ---------------------------------------------------------------- ordering

enum class Comparison { Less, Equivalent, Greater, Incomparable };

std::string to_string(Comparison c);

/// x ⪯ y iff whenever x_j ≠ 0 and y_j = 0 some i ≤ j has x_i = 0 and
/// y_i ≠ 0. Only the zero patterns matter.
bool precedes(const std::vector<bool>& x_nonzero, const std::vector<bool>& y_nonzero);
Comparison preceq(const RatVector& x, const RatVector& y);

std::vector<bool> nonzero_pattern(const RatVector& x);

// ------------------------------------------------------------ exponentials

/// Σ_k (t·T(l))^k / k!. Every T(e_a) must be strictly lower triangular
/// (the diagram strictly triangular in the representation's basis order).
RatMatrix exp_action(const Representation& rep, const RatVector& l, const Rational& t);

/// W(l): entry (i, j) is w(i, j)(l). Labels must be parameter free.
RatMatrix weight_matrix(const Diagram& d, const RatVector& l);

/// Entry (i, j) sums t^n/n! · Π weights(l) over all walks i → j of length n.
/// Requires a strictly triangular diagram.
RatMatrix walk_matrix(const Diagram& d, const RatVector& l, const Rational& t);

/// Throws liediag::Error naming the first edge (i, j) with i ≥ j.
void require_strictly_triangular(const Diagram& d);

// ------------------------------------------------------------ action forms

/// form_j = Σ_{i<j} x_i · w(i, j): the linear form l ↦ (T(l)x)_j.
std::vector<LinForm> action_forms(const Diagram& d, const RatVector& x);
std::vector<LinForm> action_forms(const Diagram& d, const PolyVector& x);

// ----------------------------------------------------- normal-form criterion

/// Which earlier forms a nonzero coordinate must be spanned by.
enum class SpanScope {
    AllEarlier,      ///< every position i < k
    ZeroPositions,   ///< only positions i < k with x_i = 0
};

struct NormalFormCheck {
    bool ok = true;
    /// 0-based position of the first violation.
    std::optional<Index> failing;
};

/// For every k with x_k ≠ 0, form_k ∈ span{form_i : i < k}.
NormalFormCheck is_normal_form(const Diagram& d, const RatVector& x, SpanScope scope = SpanScope::AllEarlier);

// -------------------------------------------------------------- reduction

struct ExpStep {
    RatVector l;
    Rational t;
};

using Transcript = std::vector<ExpStep>;

struct Reduction {
    RatVector normal_form;
    Transcript transcript;
};

/// Moves x down its orbit to the unique ⪯-lowest point, recording the
/// exp(t·T(l)) steps applied.
Reduction reduce(const Diagram& d, const RatVector& x);

/// exp(t·T(l)) x computed from the diagram's weights.
RatVector apply_exp(const Diagram& d, const RatVector& l, const Rational& t, const RatVector& x);
RatVector replay_transcript(const Diagram& d, const RatVector& x, const Transcript& transcript);

// ---------------------------------------------------------------- patterns

struct MemorizedForm {
    Index position;  // 0-based
    LinForm form;
    friend bool operator==(const MemorizedForm&, const MemorizedForm&) = default;
};

/// A family of normal forms: each coordinate is zero or a free nonzero
/// parameter c_k (k the 1-based position). `conditions` are polynomials
/// assumed nonzero, `equalities` polynomials assumed zero.
struct Pattern {
    std::vector<std::optional<Param>> coords;
    std::vector<MemorizedForm> memorized;
    std::vector<Poly> conditions;
    std::vector<Poly> equalities;

    Index size() const { return static_cast<Index>(coords.size()); }
    bool is_free(Index i) const { return coords[i].has_value(); }
    std::vector<bool> free_positions() const;
    /// The generic point: c_k at free positions, 0 elsewhere.
    PolyVector generic_vector() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Free positions rendered as a set of vertex labels, e.g. "{x_1, x_5}".
std::string pattern_summary(const Pattern& p, const Diagram& d);

/// Greedy construction with generic parameters.
Pattern general_position(const Diagram& d);

struct EnumerateOptions {
    /// Branch on pivots that vanish on a hypersurface instead of only
    /// recording them as conditions.
    bool stratify = false;
};

/// Descent from the general position down to the zero pattern, deduplicated
/// and sorted canonically (free-indicator vectors in decreasing lex order).
std::vector<Pattern> enumerate_normal_forms(const Diagram& d, const EnumerateOptions& options = {});

/// Canonical order used by enumerate_normal_forms.
bool canonical_less(const Pattern& a, const Pattern& b);

}  // namespace liediag

#include "liediag/normal_form.hpp"

#include <algorithm>

#include "liediag/error.hpp"

namespace liediag {

// ---------------------------------------------------------------- ordering

std::string to_string(Comparison c)
{
    switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equivalent: return "equivalent";
    case Comparison::Greater: return "greater";
    case Comparison::Incomparable: return "incomparable";
    }
    return "?";
}

bool precedes(const std::vector<bool>& x, const std::vector<bool>& y)
{
    if (x.size() != y.size()) throw Error("preceq: vectors of different length");
    bool witnessed = false;  // some i <= j so far has x_i = 0, y_i != 0
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!x[j] && y[j]) witnessed = true;
        if (x[j] && !y[j] && !witnessed) return false;
    }
    return true;
}

std::vector<bool> nonzero_pattern(const RatVector& x)
{
    std::vector<bool> out(x.size());
    for (Index i = 0; i < x.size(); ++i) out[i] = !x(i).is_zero();
    return out;
}

Comparison preceq(const RatVector& x, const RatVector& y)
{
    if (x.size() != y.size()) throw Error("preceq: vectors of different length");
    const auto px = nonzero_pattern(x), py = nonzero_pattern(y);
    const bool xy = precedes(px, py), yx = precedes(py, px);
    if (xy && yx) return Comparison::Equivalent;
    if (xy) return Comparison::Less;
    if (yx) return Comparison::Greater;
    return Comparison::Incomparable;
}

// ------------------------------------------------------------ exponentials

namespace {

RatMatrix exp_series(const RatMatrix& m)
{
    RatMatrix sum = identity<Rational>(m.rows());
    RatMatrix term = sum;
    for (unsigned k = 1; k <= static_cast<unsigned>(m.rows()); ++k) {
        term = (term * m).eval();
        if (is_zero(term)) break;
        term /= Rational(k);
        sum += term;
    }
    return sum;
}

}  // namespace

RatMatrix exp_action(const Representation& rep, const RatVector& l, const Rational& t)
{
    for (Index a = 0; a < rep.algebra().dim(); ++a)
        if (!is_strictly_lower(rep.matrix(a)))
            throw Error("exp_action: T(" + rep.algebra().labels()[a] + ") is not strictly lower triangular");
    return exp_series(t * rep.act(l));
}

RatMatrix weight_matrix(const Diagram& d, const RatVector& l)
{
    if (l.size() != d.algebra().dim())
        throw Error("algebra element has length " + std::to_string(l.size()) + ", expected " +
                    std::to_string(d.algebra().dim()));
    RatMatrix w = zeros<Rational>(d.size(), d.size());
    for (const auto& [e, label] : d.edges()) w(e.first, e.second) = eval_linform(label, l).constant();
    return w;
}

void require_strictly_triangular(const Diagram& d)
{
    if (auto e = first_violating_edge(d, true))
        throw Error("diagram is not strictly triangular: edge (" + d.vertices()[e->first].label + ", " +
                    d.vertices()[e->second].label + ") goes from position " + std::to_string(e->first + 1) +
                    " to position " + std::to_string(e->second + 1));
}

RatMatrix walk_matrix(const Diagram& d, const RatVector& l, const Rational& t)
{
    require_strictly_triangular(d);
    const RatMatrix a = weight_matrix(d, l);
    RatMatrix walks = identity<Rational>(d.size());  // A^n: walks of length n
    RatMatrix out = walks;
    Rational coeff(1);
    for (Index n = 1; n < d.size(); ++n) {
        walks = (walks * a).eval();
        if (is_zero(walks)) break;
        coeff = coeff * t / Rational(n);
        out += coeff * walks;
    }
    return out;
}

// ------------------------------------------------------------ action forms

namespace {

template <class Scalar>
std::vector<LinForm> forms_impl(const Diagram& d, const Vector<Scalar>& x)
{
    require_strictly_triangular(d);
    if (x.size() != d.size())
        throw Error("vector has length " + std::to_string(x.size()) + ", diagram has " + std::to_string(d.size()) +
                    " vertices");
    std::vector<LinForm> forms(d.size(), LinForm(d.algebra().dim()));
    for (const auto& [e, label] : d.edges()) {
        if (x(e.first).is_zero()) continue;
        forms[e.second] += Poly(x(e.first)) * label;
    }
    return forms;
}

}  // namespace

std::vector<LinForm> action_forms(const Diagram& d, const RatVector& x)
{
    return forms_impl(d, x);
}

std::vector<LinForm> action_forms(const Diagram& d, const PolyVector& x)
{
    return forms_impl(d, x);
}

// ----------------------------------------------------- normal-form criterion

NormalFormCheck is_normal_form(const Diagram& d, const RatVector& x, SpanScope scope)
{
    const auto forms = action_forms(d, x);
    Echelon<Rational> span(d.algebra().dim());
    for (Index k = 0; k < d.size(); ++k) {
        const bool nonzero = !x(k).is_zero();
        if (forms[k].is_zero()) continue;
        const RatVector f = forms[k].dense_concrete();
        if (nonzero && !span.contains(f)) return {false, k};
        if (scope == SpanScope::AllEarlier || !nonzero) span.insert(f);
    }
    return {};
}

// -------------------------------------------------------------- reduction

RatVector apply_exp(const Diagram& d, const RatVector& l, const Rational& t, const RatVector& x)
{
    require_strictly_triangular(d);
    const RatMatrix tl = t * weight_matrix(d, l).transpose();
    RatVector sum = x, term = x;
    for (Index k = 1; k <= d.size(); ++k) {
        term = (tl * term).eval();
        if (is_zero(term)) break;
        term /= Rational(k);
        sum += term;
    }
    return sum;
}

RatVector replay_transcript(const Diagram& d, const RatVector& x, const Transcript& transcript)
{
    RatVector y = x;
    for (const auto& s : transcript) y = apply_exp(d, s.l, s.t, y);
    return y;
}

Reduction reduce(const Diagram& d, const RatVector& x)
{
    require_strictly_triangular(d);
    Reduction r{x, {}};
    for (;;) {
        const NormalFormCheck check = is_normal_form(d, r.normal_form);
        if (check.ok) return r;
        const Index k = *check.failing;
        const auto forms = action_forms(d, r.normal_form);
        const std::vector<LinForm> earlier(forms.begin(), forms.begin() + k);
        auto l = solve_transversal(earlier, forms[k]);
        if (!l) throw Error("reduce: no transversal at position " + std::to_string(k + 1));
        ExpStep step{std::move(*l), -r.normal_form(k)};
        r.normal_form = apply_exp(d, step.l, step.t, r.normal_form);
        if (!r.normal_form(k).is_zero()) throw Error("reduce: exponential step failed to clear a coordinate");
        r.transcript.push_back(std::move(step));
    }
}

// ---------------------------------------------------------------- patterns

std::vector<bool> Pattern::free_positions() const
{
    std::vector<bool> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = coords[i].has_value();
    return out;
}

PolyVector Pattern::generic_vector() const
{
    PolyVector v = zeros<Poly>(size());
    for (Index i = 0; i < size(); ++i)
        if (coords[i]) v(i) = Poly::param(*coords[i]);
    return v;
}

std::string pattern_summary(const Pattern& p, const Diagram& d)
{
    std::string out = "{";
    for (Index i = 0; i < p.size(); ++i) {
        if (!p.is_free(i)) continue;
        if (out.size() > 1) out += ", ";
        out += d.vertices()[i].label;
    }
    return out + "}";
}

namespace {

struct Tagged {
    Index tag;
    Poly poly;
};

// State of the greedy scan after a prefix of positions has been decided.
struct ScanState {
    std::vector<std::optional<Param>> coords;
    Echelon<Poly> span;
    std::vector<MemorizedForm> memorized;
    std::vector<Tagged> conditions;
    std::vector<Tagged> equalities;

    void truncate(Index k)
    {
        coords.resize(k);
        span.truncate(static_cast<int>(k));
        std::erase_if(memorized, [k](const MemorizedForm& m) { return m.position >= k; });
        std::erase_if(conditions, [k](const Tagged& t) { return t.tag >= k; });
        std::erase_if(equalities, [k](const Tagged& t) { return t.tag >= k; });
    }

    Pattern pattern() const
    {
        Pattern p{coords, memorized, {}, {}};
        for (const auto& c : conditions) add_condition(p.conditions, c.poly);
        for (const auto& e : equalities) add_condition(p.equalities, e.poly);
        return p;
    }
};

void add_tagged(std::vector<Tagged>& list, Index tag, const Poly& p)
{
    Poly n = p.normalized_condition();
    if (n.is_constant()) return;
    for (const auto& t : list)
        if (t.poly == n) return;
    list.push_back({tag, std::move(n)});
}

class Scanner {
public:
    Scanner(const Diagram& d, bool stratify) : d_(d), stratify_(stratify), incoming_(d.size())
    {
        require_strictly_triangular(d);
        for (const auto& [e, label] : d.edges()) incoming_[e.second].emplace_back(e.first, &label);
    }

    ScanState initial() const
    {
        ScanState s;
        s.span = Echelon<Poly>(d_.algebra().dim());
        return s;
    }

    /// Completes `s` to a full pattern; stratified branches go to `pending`.
    void run(ScanState& s, std::vector<ScanState>& pending) const
    {
        for (Index j = static_cast<Index>(s.coords.size()); j < d_.size(); ++j) {
            LinForm form(d_.algebra().dim());
            for (const auto& [i, label] : incoming_[j])
                if (s.coords[i]) form += Poly::param(*s.coords[i]) * *label;
            const Param fresh{static_cast<std::uint32_t>(j + 1)};
            if (form.is_zero()) {
                s.coords.push_back(fresh);
                continue;
            }
            PolyVector rem = s.span.remainder(form.dense());
            if (is_zero(rem)) {
                s.coords.push_back(fresh);
                continue;
            }
            if (stratify_) {
                if (auto pivot = conditional_pivot(rem)) {
                    ScanState branch = s;
                    branch.coords.push_back(fresh);
                    add_tagged(branch.equalities, j, *pivot);
                    pending.push_back(std::move(branch));
                }
            }
            s.coords.push_back(std::nullopt);
            s.span.push_remainder(std::move(rem), static_cast<int>(j));
            const Poly& pivot = s.span.pivot(s.span.rank() - 1);
            if (!pivot.is_monomial()) add_tagged(s.conditions, j, pivot);
            s.memorized.push_back({j, std::move(form)});
        }
    }

private:
    // A remainder with a single nonzero entry that can vanish: the target
    // falls into the span exactly on that entry's zero locus.
    static std::optional<Poly> conditional_pivot(const PolyVector& rem)
    {
        const Poly* entry = nullptr;
        for (const auto& p : rem) {
            if (p.is_zero()) continue;
            if (entry) return std::nullopt;
            entry = &p;
        }
        if (!entry) return std::nullopt;
        Poly n = entry->normalized_condition();
        if (n.is_constant()) return std::nullopt;
        return n;
    }

    const Diagram& d_;
    bool stratify_;
    std::vector<std::vector<std::pair<Index, const LinForm*>>> incoming_;
};

std::string condition_key(const Pattern& p)
{
    std::string key;
    for (const auto& c : p.conditions) key += c.str() + ";";
    key += "|";
    for (const auto& e : p.equalities) key += e.str() + ";";
    return key;
}

}  // namespace

Pattern general_position(const Diagram& d)
{
    Scanner scanner(d, false);
    ScanState s = scanner.initial();
    std::vector<ScanState> unused;
    scanner.run(s, unused);
    return s.pattern();
}

bool canonical_less(const Pattern& a, const Pattern& b)
{
    const auto fa = a.free_positions(), fb = b.free_positions();
    if (fa != fb) return fa > fb;
    return condition_key(a) < condition_key(b);
}

std::vector<Pattern> enumerate_normal_forms(const Diagram& d, const EnumerateOptions& options)
{
    Scanner scanner(d, options.stratify);
    std::vector<ScanState> pending{scanner.initial()};
    std::vector<Pattern> out;
    while (!pending.empty()) {
        ScanState s = std::move(pending.back());
        pending.pop_back();
        // Descent: zero out the last free coordinate and rebuild the tail.
        for (;;) {
            scanner.run(s, pending);
            out.push_back(s.pattern());
            Index k = s.coords.empty() ? -1 : static_cast<Index>(s.coords.size()) - 1;
            while (k >= 0 && !s.coords[k]) --k;
            if (k < 0) break;
            s.truncate(k);
            s.coords.push_back(std::nullopt);
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace liediag

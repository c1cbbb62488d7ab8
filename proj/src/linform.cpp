#include "liediag/linform.hpp"

#include <algorithm>

#include "liediag/error.hpp"

namespace liediag {

LinForm LinForm::unit(Index dim, Index index, Poly coeff)
{
    LinForm f(dim);
    f.set(index, std::move(coeff));
    return f;
}

Poly LinForm::coeff(Index index) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, Index i) { return e.first < i; });
    return (it != entries_.end() && it->first == index) ? it->second : Poly();
}

void LinForm::set(Index index, Poly coeff)
{
    if (index < 0 || index >= dim_)
        throw Error("linear form index " + std::to_string(index) + " out of range for dimension " +
                    std::to_string(dim_));
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, Index i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        if (coeff.is_zero())
            entries_.erase(it);
        else
            it->second = std::move(coeff);
    } else if (!coeff.is_zero()) {
        entries_.insert(it, {index, std::move(coeff)});
    }
}

bool LinForm::is_concrete() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second.is_constant(); });
}

bool LinForm::vanishes_mod(long p) const
{
    for (const auto& [index, c] : entries_) {
        for (const auto& t : c.terms()) {
            mpz_class num = t.coeff.numerator();
            if (mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(p)) == 0) return false;
        }
    }
    return true;
}

PolyVector LinForm::dense() const
{
    PolyVector v = zeros<Poly>(dim_);
    for (const auto& [index, c] : entries_) v(index) = c;
    return v;
}

RatVector LinForm::dense_concrete() const
{
    RatVector v = zeros<Rational>(dim_);
    for (const auto& [index, c] : entries_) v(index) = c.constant();
    return v;
}

void LinForm::check_same_dim(const LinForm& o) const
{
    if (dim_ != o.dim_)
        throw Error("linear forms over different algebras (dimensions " + std::to_string(dim_) + " and " +
                    std::to_string(o.dim_) + ")");
}

LinForm& LinForm::operator+=(const LinForm& o)
{
    check_same_dim(o);
    for (const auto& [index, c] : o.entries_) set(index, coeff(index) + c);
    return *this;
}

LinForm& LinForm::operator-=(const LinForm& o)
{
    check_same_dim(o);
    for (const auto& [index, c] : o.entries_) set(index, coeff(index) - c);
    return *this;
}

LinForm operator-(LinForm a)
{
    for (auto& e : a.entries_) e.second = -e.second;
    return a;
}

LinForm operator*(const Poly& s, LinForm f)
{
    if (s.is_zero()) return LinForm(f.dim_);
    for (auto& e : f.entries_) e.second = s * e.second;
    return f;
}

std::string LinForm::str(const std::vector<std::string>& dual_labels) const
{
    if (entries_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [index, c] : entries_) {
        const std::string& name =
            index < static_cast<Index>(dual_labels.size()) ? dual_labels[index] : "#" + std::to_string(index);
        const bool negative = c.is_monomial() && c.leading().coeff.sign() < 0;
        const Poly mag = negative ? -c : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        if (mag == Poly(1))
            out += name;
        else if (mag.is_monomial())
            out += mag.str() + "*" + name;
        else
            out += "(" + mag.str() + ")*" + name;
        first = false;
    }
    return out;
}

LinForm LinForm::parse(std::string_view text, const std::vector<std::string>& dual_labels)
{
    LinForm out(static_cast<Index>(dual_labels.size()));
    auto parse_term = [&](std::string_view term, std::size_t offset, bool negative) {
        while (!term.empty() && term.front() == ' ') {
            term.remove_prefix(1);
            ++offset;
        }
        while (!term.empty() && term.back() == ' ') term.remove_suffix(1);
        Index best = -1;
        std::size_t best_len = 0;
        for (Index a = 0; a < out.dim(); ++a) {
            const std::string& name = dual_labels[a];
            if (name.size() < best_len || name.size() > term.size()) continue;
            if (term.substr(term.size() - name.size()) != name) continue;
            if (term.size() != name.size() && term[term.size() - name.size() - 1] != '*') continue;
            best = a;
            best_len = name.size();
        }
        if (best < 0) throw ParseError("linear form: no dual basis label ends the term '" + std::string(term) + "'", offset);
        Poly c(1);
        if (term.size() > best_len) {
            std::string_view coeff = term.substr(0, term.size() - best_len - 1);
            try {
                c = Poly::parse(coeff);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), offset + e.offset());
            }
        }
        out.set(best, out.coeff(best) + (negative ? -c : c));
    };

    std::size_t start = 0, depth = 0;
    bool negative = false;
    std::size_t i = 0;
    while (i < text.size() && text[i] == ' ') ++i;
    if (text.substr(i) == "0") return out;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    start = i;
    for (; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')' && depth > 0) --depth;
        if (depth == 0 && i + 2 < text.size() && text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') &&
            text[i + 2] == ' ') {
            parse_term(text.substr(start, i - start), start, negative);
            negative = text[i + 1] == '-';
            i += 2;
            start = i + 1;
        }
    }
    parse_term(text.substr(start), start, negative);
    return out;
}

Poly eval_linform(const LinForm& form, const RatVector& l)
{
    if (l.size() != form.dim())
        throw Error("evaluation vector has length " + std::to_string(l.size()) + ", algebra has dimension " +
                    std::to_string(form.dim()));
    Poly sum;
    for (const auto& [index, c] : form.entries())
        if (!l(index).is_zero()) sum += l(index) * c;
    return sum;
}

Poly eval_linform(const LinForm& form, const PolyVector& l)
{
    if (l.size() != form.dim())
        throw Error("evaluation vector has length " + std::to_string(l.size()) + ", algebra has dimension " +
                    std::to_string(form.dim()));
    Poly sum;
    for (const auto& [index, c] : form.entries())
        if (!l(index).is_zero()) sum += l(index) * c;
    return sum;
}

}  // namespace liediag

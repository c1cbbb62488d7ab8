#include "liediag/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "liediag/error.hpp"

namespace liediag {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Power> powers) : powers_(std::move(powers))
{
    std::sort(powers_.begin(), powers_.end());
    std::vector<Power> merged;
    for (const auto& [id, e] : powers_) {
        if (e == 0) continue;
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += e;
        else
            merged.emplace_back(id, e);
    }
    powers_ = std::move(merged);
    for (const auto& p : powers_) degree_ += p.second;
}

Monomial Monomial::of(Param p, std::uint32_t exp)
{
    return Monomial({{p.id, exp}});
}

bool Monomial::divides(const Monomial& other) const
{
    auto it = other.powers_.begin();
    for (const auto& [id, e] : powers_) {
        while (it != other.powers_.end() && it->first < id) ++it;
        if (it == other.powers_.end() || it->first != id || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial q;
    auto it = powers_.begin();
    for (const auto& [id, e] : other.powers_) {
        while (it != powers_.end() && it->first < id) ++it;
        std::uint32_t sub = (it != powers_.end() && it->first == id) ? it->second : 0;
        if (e > sub) q.powers_.emplace_back(id, e - sub);
    }
    for (const auto& p : q.powers_) q.degree_ += p.second;
    return q;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    Monomial g;
    auto it = b.powers_.begin();
    for (const auto& [id, e] : a.powers_) {
        while (it != b.powers_.end() && it->first < id) ++it;
        if (it != b.powers_.end() && it->first == id) g.powers_.emplace_back(id, std::min(e, it->second));
    }
    for (const auto& p : g.powers_) g.degree_ += p.second;
    return g;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.powers_.reserve(a.powers_.size() + b.powers_.size());
    auto i = a.powers_.begin();
    auto j = b.powers_.begin();
    while (i != a.powers_.end() || j != b.powers_.end()) {
        if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
            m.powers_.push_back(*i++);
        } else if (i == a.powers_.end() || j->first < i->first) {
            m.powers_.push_back(*j++);
        } else {
            m.powers_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

std::string Monomial::str() const
{
    std::string out;
    for (const auto& [id, e] : powers_) {
        if (!out.empty()) out += '*';
        out += Param{id}.name();
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

int grlex_compare(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        if (pa[i].first == pb[j].first) {
            if (pa[i].second != pb[j].second) return pa[i].second < pb[j].second ? -1 : 1;
            ++i;
            ++j;
        } else {
            // The monomial carrying the smaller-indexed parameter is larger.
            return pa[i].first < pb[j].first ? 1 : -1;
        }
    }
    if (i < pa.size()) return 1;
    if (j < pb.size()) return -1;
    return 0;
}

// -------------------------------------------------------------------- Poly

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b)
{
    return grlex_compare(a.mono, b.mono) > 0;
}

// Merge two sorted term lists, b scaled by `sign`.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                                    bool negate_b)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_compare(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (negate_b) out.back().coeff = -out.back().coeff;
        } else {
            Rational s = negate_b ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly::Poly(Rational c)
{
    if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

Poly Poly::term(Monomial m, Rational c)
{
    Poly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

void Poly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), term_greater);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            continue;
        }
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

Rational Poly::constant() const
{
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("expected a constant, got polynomial " + str());
    return terms_[0].coeff;
}

std::uint32_t Poly::degree() const
{
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    if (b.terms_.size() == 1 && b.terms_[0].mono.is_one()) return b.terms_[0].coeff * a;
    if (a.terms_.size() == 1 && a.terms_[0].mono.is_one()) return a.terms_[0].coeff * b;
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) p.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    p.normalize();
    return p;
}

Poly operator-(Poly a)
{
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
}

Poly operator*(const Rational& s, Poly a)
{
    if (s.is_zero()) return Poly();
    for (auto& t : a.terms_) t.coeff *= s;
    return a;
}

std::optional<Poly> Poly::divide(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return Poly();
    const Term& lead = b.terms_.front();
    if (b.terms_.size() == 1) {
        Poly q;
        q.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) {
            if (!lead.mono.divides(t.mono)) return std::nullopt;
            q.terms_.push_back({lead.mono.quotient_of(t.mono), t.coeff / lead.coeff});
        }
        // Division by a monomial preserves the term order.
        return q;
    }
    Poly q;
    Poly r = a;
    while (!r.is_zero()) {
        const Term& rt = r.terms_.front();
        if (!lead.mono.divides(rt.mono)) return std::nullopt;
        Poly step = Poly::term(lead.mono.quotient_of(rt.mono), rt.coeff / lead.coeff);
        r -= step * b;
        q += step;
    }
    return q;
}

Poly Poly::substitute(const std::map<std::uint32_t, Rational>& values) const
{
    Poly out;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        std::vector<Monomial::Power> rest;
        for (const auto& [id, e] : t.mono.powers()) {
            auto it = values.find(id);
            if (it == values.end())
                rest.emplace_back(id, e);
            else
                c *= pow(it->second, e);
        }
        out.terms_.push_back({Monomial(std::move(rest)), std::move(c)});
    }
    out.normalize();
    return out;
}

Rational Poly::evaluate(const std::map<std::uint32_t, Rational>& values) const
{
    return substitute(values).constant();
}

Monomial Poly::monomial_content() const
{
    if (terms_.empty()) return Monomial();
    Monomial g = terms_.front().mono;
    for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
    return g;
}

Poly Poly::normalized_condition() const
{
    if (is_zero()) return *this;
    Poly p = *divide(*this, Poly::term(monomial_content(), Rational(1)));
    mpz_class lcm_den = 1;
    mpz_class gcd_num = 0;
    for (const auto& t : p.terms_) {
        mpz_class d = t.coeff.denominator();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
        mpz_class n = t.coeff.numerator();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(mpq_class(lcm_den, gcd_num));
    if (p.terms_.front().coeff.sign() < 0) scale = -scale;
    return scale * p;
}

std::vector<std::uint32_t> Poly::params() const
{
    std::vector<std::uint32_t> ids;
    for (const auto& t : terms_)
        for (const auto& [id, e] : t.mono.powers()) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::string Poly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = abs(c);
        if (t.mono.is_one()) {
            os << c;
        } else {
            if (c != Rational(1)) os << c << '*';
            os << t.mono.str();
        }
        first = false;
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Poly parse()
    {
        skip();
        bool negative = accept('-');
        Poly out = negative ? -term() : term();
        for (skip(); pos_ < s_.size(); skip()) {
            if (accept('+'))
                out += term();
            else if (accept('-'))
                out -= term();
            else
                fail("expected '+' or '-'");
        }
        return out;
    }

private:
    Poly term()
    {
        Poly t = factor();
        while (skip(), accept('*')) t *= factor();
        return t;
    }

    Poly factor()
    {
        skip();
        if (accept('(')) {
            std::size_t depth = 1, end = pos_;
            while (end < s_.size() && depth > 0) {
                if (s_[end] == '(') ++depth;
                if (s_[end] == ')') --depth;
                ++end;
            }
            if (depth != 0) fail("unbalanced parenthesis");
            Poly p;
            try {
                p = PolyParser(s_.substr(pos_, end - 1 - pos_)).parse();
            } catch (const ParseError& e) {
                throw ParseError(e.what(), pos_ + e.offset());
            }
            pos_ = end;
            return p;
        }
        if (accept('c')) {
            if (!accept('_')) fail("expected '_' after 'c'");
            const auto id = number();
            if (id == 0) fail("parameter index must be positive");
            std::uint32_t exp = 1;
            if (skip(), accept('^')) exp = number();
            if (exp == 0) return Poly(1);
            return Poly::term(Monomial::of(Param{id}, exp), Rational(1));
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        if (start == pos_) fail("expected a number, parameter or '('");
        try {
            return Poly(Rational::parse(s_.substr(start, pos_ - start)));
        } catch (const Error&) {
            throw ParseError("bad rational '" + std::string(s_.substr(start, pos_ - start)) + "'", start);
        }
    }

    std::uint32_t number()
    {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
            if (v > 0xffffffffu) fail("integer too large");
        }
        if (start == pos_) fail("expected an integer");
        return static_cast<std::uint32_t>(v);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_), pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text)
{
    return PolyParser(text).parse();
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto q = Poly::divide(a, b);
    if (!q) throw Error("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
    return *std::move(q);
}

std::string RationalFunction::str() const
{
    if (den == Poly(1)) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
}

}  // namespace liediag

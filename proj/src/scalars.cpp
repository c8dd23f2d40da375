#include "adreal/scalars.hpp"

#include "adreal/errors.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <vector>

namespace adreal {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

// One signed term of a linear combination of units: "3/4*i", "-k", "+2".
struct Term {
    Rational coeff;
    char unit; // '1', 'i', 'j' or 'k'
};

std::vector<Term> parse_terms(std::string_view original, std::string_view allowed_units)
{
    const std::string text = strip_spaces(original);
    if (text.empty())
        throw ParseError("empty scalar");

    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!terms.empty()) {
            throw ParseError("expected '+' or '-' in scalar '" + std::string(original) + "'");
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-')
            ++end;
        std::string_view body(text.data() + pos, end - pos);
        if (body.empty())
            throw ParseError("dangling sign in scalar '" + std::string(original) + "'");

        char unit = '1';
        std::string_view coeff_text = body;
        const char last = body.back();
        if (last == 'i' || last == 'j' || last == 'k') {
            if (allowed_units.find(last) == std::string_view::npos)
                throw ParseError(std::string("unit '") + last + "' not allowed in '" + std::string(original) + "'");
            unit = last;
            coeff_text = body.substr(0, body.size() - 1);
            if (!coeff_text.empty() && coeff_text.back() == '*')
                coeff_text.remove_suffix(1);
        }
        Rational coeff(1);
        if (!coeff_text.empty())
            coeff = parse_rational(coeff_text);
        else if (unit == '1')
            throw ParseError("missing coefficient in '" + std::string(original) + "'");
        if (sign < 0)
            coeff = -coeff;
        terms.push_back({coeff, unit});
        pos = end;
    }
    return terms;
}

std::string format_combination(const std::array<std::pair<const Rational*, const char*>, 4>& parts)
{
    std::string out;
    for (const auto& [value, unit] : parts) {
        if (value == nullptr || sgn(*value) == 0)
            continue;
        const bool negative = sgn(*value) < 0;
        Rational mag = abs(*value);
        std::string piece;
        if (unit[0] == '\0') {
            piece = mag.get_str();
        } else if (mag == 1) {
            piece = unit;
        } else {
            piece = mag.get_str() + "*" + unit;
        }
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        out += piece;
    }
    return out.empty() ? "0" : out;
}

} // namespace

Rational parse_rational(std::string_view original)
{
    const std::string text = strip_spaces(original);
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw ParseError("malformed rational '" + std::string(original) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(original) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// Gaussian

Gaussian Gaussian::inverse() const
{
    const Rational n = norm();
    if (sgn(n) == 0)
        throw std::domain_error("inverse of zero Gaussian rational");
    return {re / n, -im / n};
}

Gaussian& Gaussian::operator+=(const Gaussian& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o)
{
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

bool lex_less(const Gaussian& a, const Gaussian& b)
{
    if (a.re != b.re)
        return a.re < b.re;
    return a.im < b.im;
}

Gaussian pow(Gaussian base, unsigned exp)
{
    Gaussian result(1);
    while (exp > 0) {
        if (exp & 1u)
            result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

Gaussian parse_gaussian(std::string_view text)
{
    Gaussian z;
    for (const auto& t : parse_terms(text, "i")) {
        if (t.unit == '1')
            z.re += t.coeff;
        else
            z.im += t.coeff;
    }
    return z;
}

std::string to_string(const Gaussian& z)
{
    return format_combination({{{&z.re, ""}, {&z.im, "i"}, {nullptr, ""}, {nullptr, ""}}});
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

// ---------------------------------------------------------------------------
// Quaternion

Quaternion Quaternion::inverse() const
{
    const Rational n = norm();
    if (sgn(n) == 0)
        throw std::domain_error("inverse of zero quaternion");
    return {a0 / n, -a1 / n, -a2 / n, -a3 / n};
}

// z1 + z2 j = (a0 + a1 i) + (a2 + a3 i) j, since i j = k.
std::pair<Gaussian, Gaussian> Quaternion::complex_split() const
{
    return {Gaussian(a0, a1), Gaussian(a2, a3)};
}

Quaternion Quaternion::from_split(const Gaussian& z1, const Gaussian& z2)
{
    return {z1.re, z1.im, z2.re, z2.im};
}

Quaternion& Quaternion::operator+=(const Quaternion& o)
{
    a0 += o.a0;
    a1 += o.a1;
    a2 += o.a2;
    a3 += o.a3;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o)
{
    a0 -= o.a0;
    a1 -= o.a1;
    a2 -= o.a2;
    a3 -= o.a3;
    return *this;
}

Quaternion& Quaternion::operator*=(const Quaternion& o) { return *this = *this * o; }

Quaternion operator*(const Quaternion& p, const Quaternion& q)
{
    return {
        p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
        p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
        p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
        p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0,
    };
}

Quaternion parse_quaternion(std::string_view text)
{
    Quaternion q;
    for (const auto& t : parse_terms(text, "ijk")) {
        switch (t.unit) {
        case '1': q.a0 += t.coeff; break;
        case 'i': q.a1 += t.coeff; break;
        case 'j': q.a2 += t.coeff; break;
        default: q.a3 += t.coeff; break;
        }
    }
    return q;
}

std::string to_string(const Quaternion& q)
{
    return format_combination({{{&q.a0, ""}, {&q.a1, "i"}, {&q.a2, "j"}, {&q.a3, "k"}}});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

} // namespace adreal

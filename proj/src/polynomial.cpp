#include "bezout/polynomial.hpp"

#include "bezout/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bezout {

namespace {

bool valid_identifier(const std::string& name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Monomial::Exponent checked_exponent(std::uint64_t value)
{
    if (value > Monomial::max_exponent) {
        raise(ErrorCode::ExponentOverflow, "exponent " + std::to_string(value) + " exceeds 2^31 - 1");
    }
    return static_cast<Monomial::Exponent>(value);
}

} // namespace

// ---------------------------------------------------------------------------
// AmbientRing

AmbientRing::AmbientRing(std::vector<std::string> names)
{
    if (names.empty()) {
        raise(ErrorCode::InvalidArgument, "ambient ring needs at least one variable");
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_identifier(n)) {
            raise(ErrorCode::InvalidArgument, "invalid variable name '" + n + "'");
        }
        if (!seen.insert(n).second) {
            raise(ErrorCode::InvalidArgument, "duplicate variable name '" + n + "'");
        }
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

AmbientRing AmbientRing::standard(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return AmbientRing(std::move(names));
}

std::optional<std::size_t> AmbientRing::index_of(std::string_view name) const
{
    const auto& v = *names_;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool operator==(const AmbientRing& a, const AmbientRing& b)
{
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

std::string to_string(const AmbientRing& ambient)
{
    std::string out = "(";
    for (std::size_t i = 0; i < ambient.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += ambient.name(i);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents))
{
    for (auto e : exps_) {
        checked_exponent(e);
    }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : Monomial(std::vector<Exponent>(exponents))
{
}

void Monomial::set(std::size_t i, std::uint64_t value)
{
    exps_.at(i) = checked_exponent(value);
}

std::uint64_t Monomial::total_degree() const noexcept
{
    std::uint64_t d = 0;
    for (auto e : exps_) {
        d += e;
    }
    return d;
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.exps_[i] = checked_exponent(std::uint64_t{a.exps_[i]} + b.exps_[i]);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.exps_[i] = a.exps_[i] - b.exps_[i];
    }
    return r;
}

int compare_lex(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

int compare_grlex(const Monomial& a, const Monomial& b)
{
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db) {
        return da < db ? -1 : 1;
    }
    return compare_lex(a, b);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(AmbientRing ambient) : ambient_(std::move(ambient)) {}

Polynomial::Polynomial(AmbientRing ambient, const Rational& constant) : ambient_(std::move(ambient))
{
    if (constant != 0) {
        terms_.emplace(Monomial(ambient_.size()), constant);
    }
}

Polynomial Polynomial::variable(const AmbientRing& ambient, std::size_t index)
{
    if (index >= ambient.size()) {
        raise(ErrorCode::InvalidArgument, "variable index out of range");
    }
    Monomial m(ambient.size());
    m.set(index, 1);
    return term(ambient, std::move(m), Rational(1));
}

Polynomial Polynomial::variable(const AmbientRing& ambient, std::string_view name)
{
    auto idx = ambient.index_of(name);
    if (!idx) {
        raise(ErrorCode::UnknownVariable, "'" + std::string(name) + "' is not in " + to_string(ambient));
    }
    return variable(ambient, *idx);
}

Polynomial Polynomial::term(const AmbientRing& ambient, Monomial monomial, const Rational& coefficient)
{
    if (monomial.size() != ambient.size()) {
        raise(ErrorCode::AmbientMismatch, "monomial length does not match ambient");
    }
    Polynomial p(ambient);
    if (coefficient != 0) {
        p.terms_.emplace(std::move(monomial), coefficient);
    }
    return p;
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const
{
    return coefficient(Monomial(ambient_.size()));
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty()) {
        raise(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
    }
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const
{
    if (terms_.empty()) {
        raise(ErrorCode::ZeroPolynomial, "zero polynomial has no leading term");
    }
    return terms_.begin()->second;
}

std::int64_t Polynomial::total_degree() const noexcept
{
    // grlex puts the highest total degree first
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.begin()->first.total_degree());
}

std::int64_t Polynomial::degree_in(std::size_t var) const noexcept
{
    std::int64_t d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max<std::int64_t>(d, m[var]);
    }
    return d;
}

std::vector<std::size_t> Polynomial::variables_used() const
{
    std::vector<std::size_t> used;
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
        if (degree_in(i) > 0) {
            used.push_back(i);
        }
    }
    return used;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void Polynomial::require_same_ambient(const Polynomial& other) const
{
    if (!(ambient_ == other.ambient_)) {
        raise(ErrorCode::AmbientMismatch, to_string(ambient_) + " vs " + to_string(other.ambient_));
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_ambient(other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.require_same_ambient(b);
    Polynomial r(a.ambient_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

Polynomial operator-(Polynomial a)
{
    for (auto& [m, c] : a.terms_) {
        c = -c;
    }
    return a;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op)
{
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    }
    raise(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

Polynomial pow(const Polynomial& p, std::uint64_t k)
{
    Polynomial result(p.ambient(), Rational(1));
    Polynomial base = p;
    while (k > 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignments,
                      const AmbientRing& target)
{
    const auto& src = p.ambient();
    for (const auto& [name, value] : assignments) {
        if (!src.index_of(name)) {
            raise(ErrorCode::AmbientMismatch, "assigned variable '" + name + "' not in " + to_string(src));
        }
        if (!(value.ambient() == target)) {
            raise(ErrorCode::AmbientMismatch, "assignment for '" + name + "' lives in " +
                                                  to_string(value.ambient()) + ", target is " + to_string(target));
        }
    }

    // image of each source variable, and a cache of its powers
    std::vector<Polynomial> images;
    images.reserve(src.size());
    std::vector<std::optional<std::size_t>> direct(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto it = assignments.find(src.name(i));
        if (it != assignments.end()) {
            images.push_back(it->second);
        } else {
            auto idx = target.index_of(src.name(i));
            if (!idx) {
                if (p.degree_in(i) > 0) {
                    raise(ErrorCode::AmbientMismatch,
                          "variable '" + src.name(i) + "' has no image in " + to_string(target));
                }
                images.emplace_back(target);
            } else {
                direct[i] = *idx;
                images.push_back(Polynomial::variable(target, *idx));
            }
        }
    }
    std::vector<std::vector<Polynomial>> powers(src.size());
    auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) {
            cache.emplace_back(target, Rational(1));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * images[var]);
        }
        return cache[e];
    };

    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        // variables mapped to variables contribute a monomial directly
        Monomial base(target.size());
        Polynomial acc(target, c);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (direct[i]) {
                base.set(*direct[i], std::uint64_t{base[*direct[i]]} + m[i]);
            } else {
                acc *= power_of(i, m[i]);
            }
        }
        if (!base.is_one()) {
            acc *= Polynomial::term(target, base, Rational(1));
        }
        result += acc;
    }
    return result;
}

Polynomial embed(const Polynomial& p, const AmbientRing& target)
{
    return substitute(p, {}, target);
}

Polynomial specialize(const Polynomial& p, std::size_t var, const Rational& value)
{
    Polynomial r(p.ambient());
    std::vector<Rational> pw{Rational(1)};
    for (const auto& [m, c] : p.terms()) {
        auto e = m[var];
        while (pw.size() <= e) {
            pw.push_back(pw.back() * value);
        }
        Monomial reduced = m;
        reduced.set(var, 0);
        r.add_term(reduced, c * pw[e]);
    }
    return r;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point)
{
    if (point.size() != p.ambient().size()) {
        raise(ErrorCode::AmbientMismatch, "point dimension does not match ambient");
    }
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 0) {
                t *= pow(point[i], m[i]);
            }
        }
        sum += t;
    }
    return sum;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var)
{
    std::vector<Polynomial> coeffs;
    auto deg = p.degree_in(var);
    for (std::int64_t i = 0; i <= deg; ++i) {
        coeffs.emplace_back(p.ambient());
    }
    for (const auto& [m, c] : p.terms()) {
        Monomial reduced = m;
        reduced.set(var, 0);
        coeffs[m[var]].add_term(reduced, c);
    }
    return coeffs;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var, const AmbientRing& ambient)
{
    Polynomial r(ambient);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (const auto& [m, c] : coeffs[i].terms()) {
            Monomial shifted = m;
            shifted.set(var, std::uint64_t{m[var]} + i);
            r.add_term(shifted, c);
        }
    }
    return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) {
        raise(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    }
    if (!(a.ambient() == b.ambient())) {
        raise(ErrorCode::AmbientMismatch, to_string(a.ambient()) + " vs " + to_string(b.ambient()));
    }
    // Single-divisor division: b | a iff the leading-term reduction ends at zero.
    const Monomial& lm = b.leading_monomial();
    const Rational& lc = b.leading_coefficient();
    Polynomial rem = a;
    Polynomial quot(a.ambient());
    while (!rem.is_zero()) {
        const Monomial& rm = rem.leading_monomial();
        if (!lm.divides(rm)) {
            return std::nullopt;
        }
        auto t = Polynomial::term(a.ambient(), rm / lm, rem.leading_coefficient() / lc);
        rem -= t * b;
        quot += t;
    }
    return quot;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                os << "-";
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_one() || mag != 1) {
            os << to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (need_star) {
                os << "*";
            }
            os << p.ambient().name(i);
            if (m[i] > 1) {
                os << "^" << m[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << to_string(p);
}

} // namespace bezout

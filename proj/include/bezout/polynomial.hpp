#pragma once

#include "bezout/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bezout {

/// Ordered, non-empty list of distinct variable names. Copies share storage.
class AmbientRing {
public:
    /// Throws InvalidArgument on empty, duplicate or malformed names
    /// (names must match [a-zA-Z][a-zA-Z0-9_]*).
    explicit AmbientRing(std::vector<std::string> names);

    /// x1, ..., xn
    static AmbientRing standard(std::size_t n);

    std::size_t size() const noexcept { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const noexcept { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const AmbientRing& a, const AmbientRing& b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

std::string to_string(const AmbientRing& ambient);

/// Exponent vector of fixed length. Exponents above 2^31 - 1 are rejected.
class Monomial {
public:
    using Exponent = std::uint32_t;
    static constexpr Exponent max_exponent = 0x7fffffffU;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exponents);
    Monomial(std::initializer_list<Exponent> exponents);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    void set(std::size_t i, std::uint64_t value);
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t total_degree() const noexcept;
    bool is_one() const noexcept;
    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<Exponent> exps_;
};

/// Negative, zero or positive as a is below, equal to or above b.
int compare_grlex(const Monomial& a, const Monomial& b);
int compare_lex(const Monomial& a, const Monomial& b);

/// Strict "comes first" relation for the canonical term order (grlex, descending).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) > 0; }
};

/// Sparse multivariate polynomial over Q. No zero coefficients are stored;
/// terms iterate in descending graded-lexicographic order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(AmbientRing ambient);
    Polynomial(AmbientRing ambient, const Rational& constant);

    static Polynomial variable(const AmbientRing& ambient, std::size_t index);
    /// Throws UnknownVariable.
    static Polynomial variable(const AmbientRing& ambient, std::string_view name);
    static Polynomial term(const AmbientRing& ambient, Monomial monomial, const Rational& coefficient);

    const AmbientRing& ambient() const noexcept { return ambient_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// True for zero as well.
    bool is_constant() const noexcept;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    /// Grlex-leading data. Throws ZeroPolynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    /// -1 for the zero polynomial.
    std::int64_t total_degree() const noexcept;
    std::int64_t degree_in(std::size_t var) const noexcept;
    /// Indices of variables with a positive exponent in some term.
    std::vector<std::size_t> variables_used() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a);

    /// Same ambient and same term map.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void require_same_ambient(const Polynomial& other) const;

    AmbientRing ambient_;
    TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Throws AmbientMismatch when the ambients differ.
Polynomial arith(const Polynomial& a, const Polynomial& b, ArithOp op);

/// Repeated squaring.
Polynomial pow(const Polynomial& p, std::uint64_t k);

/// Ring homomorphism into `target`: assigned variables map to the given
/// polynomials (which must live in `target`), all other variables of p map
/// to the same-named variable of `target`. Throws AmbientMismatch.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignments,
                      const AmbientRing& target);

/// Rename-by-name embedding into another ambient.
Polynomial embed(const Polynomial& p, const AmbientRing& target);

/// Replace one variable by a rational constant; ambient unchanged.
Polynomial specialize(const Polynomial& p, std::size_t var, const Rational& value);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// p = sum_i c_i * var^i; the c_i live in p's ambient and do not involve var.
std::vector<Polynomial> coefficients_in(const Polynomial& p, std::size_t var);

/// Inverse of coefficients_in.
Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t var, const AmbientRing& ambient);

/// Returns q with a = q*b when b divides a exactly, nullopt otherwise.
/// Throws ZeroPolynomial when b is zero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Canonical text in the expression grammar, terms in descending grlex order.
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

} // namespace bezout

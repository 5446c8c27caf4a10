#pragma once

#include "bezout/degrees.hpp"
#include "bezout/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bezout {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
};

/// Convex hull of a non-empty point set: counterclockwise, no three vertices
/// collinear, starting at the lexicographic minimum. A single point or a
/// segment is a valid (degenerate) polygon.
class Polygon {
public:
    /// Throws InvalidArgument on an empty set.
    explicit Polygon(std::vector<Point2> points);

    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> vertices_;
};

/// Support exponents of a polynomial over a two-variable ambient.
/// Throws ZeroPolynomial, UnsupportedArity.
Polygon newton_polygon(const Polynomial& p);

/// Edge merge of the two boundaries.
Polygon minkowski_sum(const Polygon& p, const Polygon& q);

Polygon dilate(const Polygon& p, const Rational& factor);

/// Shoelace, exact and non-negative.
Rational area(const Polygon& p);

/// area(P + Q) - area(P) - area(Q)
Rational mixed_volume(const Polygon& p, const Polygon& q);

/// One "x y" pair per line, counterclockwise from the canonical start.
std::string dump(const Polygon& p);

/// nu(sum a_alpha x^alpha) = the smallest alpha with a_alpha != 0 under a
/// fixed additive total order.
class MonomialValuation {
public:
    /// Lexicographic with variables compared in the order perm[0], perm[1], ...
    static MonomialValuation lex(std::vector<std::size_t> perm);
    /// Total degree first, ties broken by lex with the identity order.
    static MonomialValuation graded_lex(std::size_t n);

    /// Negative when a precedes b.
    int compare(const Monomial& a, const Monomial& b) const;
    /// Throws ZeroPolynomial.
    Monomial of(const Polynomial& p) const;

    bool graded() const noexcept { return graded_; }
    const std::vector<std::size_t>& permutation() const noexcept { return perm_; }

private:
    MonomialValuation(std::vector<std::size_t> perm, bool graded) : perm_(std::move(perm)), graded_(graded) {}
    std::vector<std::size_t> perm_;
    bool graded_;
};

struct OkounkovPolygon {
    Polygon polygon;
    std::size_t levels; ///< filtration levels k = 1..levels used
};

/// Inner approximation of the Okounkov body of the chain's filtration at
/// multiples of d: for k = 1..floor(cutoff / d), collects nu(F_{kd}) / k where
/// F_{kd} = {f : delta(f) <= k d}, and returns the hull. F_{kd} is spanned by
/// the products x^a h_1^b_1 ... with weighted value at most k d; nu of the span
/// is read off a row echelon form with nu-minimal pivots. Certified when the
/// hull after the last level equals the hull one level earlier.
/// Throws UnsupportedArity, CutoffTooSmall, InvalidArgument.
OkounkovPolygon okounkov_polygon(const SemidegreeChain& delta, const MonomialValuation& nu, std::int64_t d,
                                 std::int64_t cutoff);

} // namespace bezout

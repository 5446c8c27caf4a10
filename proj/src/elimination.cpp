#include "bezout/elimination.hpp"

#include "bezout/error.hpp"

#include <algorithm>
#include <set>

namespace bezout {

namespace {

// ---------------------------------------------------------------------------
// Dense Z[x], ascending coefficients, no trailing zeros.

using Dense = std::vector<Integer>;

void trim(Dense& a)
{
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Dense dense_mul(const Dense& a, const Dense& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Dense r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Dense dense_sub(const Dense& a, const Dense& b)
{
    Dense r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

// a / b where the division is known to be exact in Z[x].
Dense dense_div_exact(Dense a, const Dense& b)
{
    if (a.empty()) {
        return {};
    }
    const std::size_t db = b.size() - 1;
    Dense q(a.size() - db, Integer(0));
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) {
            continue;
        }
        Integer c = a[k] / b.back();
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            a[k - db + j] -= c * b[j];
        }
    }
    trim(q);
    return q;
}

template <class Entry, class IsZero, class Step, class Negate>
Entry bareiss(std::vector<std::vector<Entry>> m, Entry one, Entry zero, IsZero is_zero, Step step, Negate negated)
{
    const std::size_t n = m.size();
    bool negate = false;
    Entry prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t piv = k + 1;
            while (piv < n && is_zero(m[piv][k])) {
                ++piv;
            }
            if (piv == n) {
                return zero;
            }
            std::swap(m[k], m[piv]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = step(m[k][k], m[i][j], m[i][k], m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    Entry det = m[n - 1][n - 1];
    return negate ? negated(det) : det;
}

template <class Entry>
std::vector<std::vector<Entry>> sylvester(const std::vector<Entry>& a, const std::vector<Entry>& b, const Entry& zero)
{
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    std::vector<std::vector<Entry>> rows(m + n, std::vector<Entry>(m + n, zero));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) {
            rows[r][r + i] = a[i];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) {
            rows[n + r][r + j] = b[j];
        }
    }
    return rows;
}

Integer denominator_lcm(const Polynomial& p)
{
    Integer l(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    return l;
}

// coefficient polynomial in `x` only -> dense integer list (after scaling)
Dense to_dense(const Polynomial& c, std::optional<std::size_t> x, const Integer& scale)
{
    Dense d;
    for (const auto& [m, coef] : c.terms()) {
        std::size_t e = x ? m[*x] : 0;
        if (d.size() <= e) {
            d.resize(e + 1, Integer(0));
        }
        Rational v = coef * scale;
        d[e] = v.get_num();
    }
    trim(d);
    return d;
}

Polynomial resultant_dense(const Polynomial& p, const Polynomial& q, std::size_t var, std::optional<std::size_t> x)
{
    const auto& amb = p.ambient();
    Integer sp = denominator_lcm(p);
    Integer sq = denominator_lcm(q);
    std::vector<Dense> a;
    std::vector<Dense> b;
    for (const auto& c : coefficients_in(p, var)) {
        a.push_back(to_dense(c, x, sp));
    }
    for (const auto& c : coefficients_in(q, var)) {
        b.push_back(to_dense(c, x, sq));
    }
    const std::size_t m = a.size() - 1;
    const std::size_t n = b.size() - 1;
    auto rows = sylvester<Dense>(a, b, Dense{});
    Dense det = bareiss<Dense>(
        std::move(rows), Dense{Integer(1)}, Dense{}, [](const Dense& e) { return e.empty(); },
        [](const Dense& kk, const Dense& ij, const Dense& ik, const Dense& kj, const Dense& prev) {
            return dense_div_exact(dense_sub(dense_mul(ij, kk), dense_mul(ik, kj)), prev);
        },
        [](const Dense& e) { return dense_sub(Dense{}, e); });

    // Res(sp*p, sq*q) = sp^n * sq^m * Res(p, q)
    Rational unscale = Rational(1) / (pow(Rational(sp), n) * pow(Rational(sq), m));
    Polynomial r(amb);
    for (std::size_t i = 0; i < det.size(); ++i) {
        if (det[i] == 0) {
            continue;
        }
        Monomial mono(amb.size());
        if (x) {
            mono.set(*x, i);
        }
        r.add_term(mono, Rational(det[i]) * unscale);
    }
    return r;
}

Polynomial resultant_generic(const Polynomial& p, const Polynomial& q, std::size_t var)
{
    const auto& amb = p.ambient();
    Polynomial zero(amb);
    auto rows = sylvester<Polynomial>(coefficients_in(p, var), coefficients_in(q, var), zero);
    return bareiss<Polynomial>(
        std::move(rows), Polynomial(amb, Rational(1)), zero, [](const Polynomial& e) { return e.is_zero(); },
        [](const Polynomial& kk, const Polynomial& ij, const Polynomial& ik, const Polynomial& kj,
           const Polynomial& prev) {
            Polynomial num = ij * kk - ik * kj;
            auto quot = divide_exact(num, prev);
            if (!quot) {
                raise(ErrorCode::InvalidArgument, "internal: inexact Bareiss division");
            }
            return *quot;
        },
        [](const Polynomial& e) { return -e; });
}

std::vector<std::size_t> used_union(const Polynomial& p, const Polynomial& q)
{
    std::set<std::size_t> s;
    for (auto v : p.variables_used()) {
        s.insert(v);
    }
    for (auto v : q.variables_used()) {
        s.insert(v);
    }
    return {s.begin(), s.end()};
}

void require_same(const Polynomial& p, const Polynomial& q)
{
    if (!(p.ambient() == q.ambient())) {
        raise(ErrorCode::AmbientMismatch, to_string(p.ambient()) + " vs " + to_string(q.ambient()));
    }
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t var)
{
    return coefficients_in(p, var).back();
}

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q, std::vector<std::size_t> vars);

Polynomial content(const Polynomial& p, std::size_t var, const std::vector<std::size_t>& rest)
{
    Polynomial c(p.ambient());
    for (const auto& coef : coefficients_in(p, var)) {
        c = gcd_rec(c, coef, rest);
        if (c.is_constant() && !c.is_zero()) {
            break;
        }
    }
    return c;
}

Polynomial primitive_part(const Polynomial& p, std::size_t var, const std::vector<std::size_t>& rest)
{
    auto q = divide_exact(p, content(p, var, rest));
    return normalize(*q);
}

Polynomial gcd_rec(const Polynomial& p, const Polynomial& q, std::vector<std::size_t> vars)
{
    if (p.is_zero()) {
        return normalize(q);
    }
    if (q.is_zero()) {
        return normalize(p);
    }
    if (vars.empty() || (p.is_constant() && q.is_constant())) {
        return Polynomial(p.ambient(), Rational(1));
    }
    const std::size_t y = vars.back();
    vars.pop_back();
    Polynomial g_cont = gcd_rec(content(p, y, vars), content(q, y, vars), vars);

    Polynomial a = primitive_part(p, y, vars);
    Polynomial b = primitive_part(q, y, vars);
    if (a.degree_in(y) < b.degree_in(y)) {
        std::swap(a, b);
    }
    while (!b.is_zero() && b.degree_in(y) > 0) {
        Polynomial r = pseudo_remainder(a, b, y);
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : primitive_part(r, y, vars);
    }
    // b == 0: a is the primitive gcd. b nonzero of degree 0 in y: coprime in y.
    Polynomial g = b.is_zero() ? a : Polynomial(p.ambient(), Rational(1));
    return normalize(g * g_cont);
}

} // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var, ResultantPath path)
{
    require_same(p, q);
    if (var >= p.ambient().size()) {
        raise(ErrorCode::InvalidArgument, "elimination variable index out of range");
    }
    if (p.degree_in(var) < 1 || q.degree_in(var) < 1) {
        raise(ErrorCode::DegreeZero, "resultant needs positive degree in '" + p.ambient().name(var) + "'");
    }
    if (path == ResultantPath::Auto) {
        auto used = used_union(p, q);
        std::erase(used, var);
        if (used.size() <= 1) {
            std::optional<std::size_t> x;
            if (!used.empty()) {
                x = used.front();
            }
            return resultant_dense(p, q, var, x);
        }
    }
    return resultant_generic(p, q, var);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var, ResultantPath path)
{
    auto idx = p.ambient().index_of(var);
    if (!idx) {
        raise(ErrorCode::UnknownVariable, "'" + std::string(var) + "' is not in " + to_string(p.ambient()));
    }
    return resultant(p, q, *idx, path);
}

Polynomial normalize(const Polynomial& p)
{
    if (p.is_zero()) {
        return p;
    }
    Integer l = denominator_lcm(p);
    Integer g(0);
    for (const auto& [m, c] : p.terms()) {
        Rational v = c * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    Rational scale = Rational(l) / Rational(g);
    if (p.leading_coefficient() < 0) {
        scale = -scale;
    }
    return p * scale;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var)
{
    require_same(a, b);
    if (b.is_zero()) {
        raise(ErrorCode::ZeroPolynomial, "pseudo-division by zero");
    }
    const auto& amb = a.ambient();
    const std::int64_t n = b.degree_in(var);
    const std::int64_t m = a.degree_in(var);
    if (m < n) {
        return a;
    }
    Polynomial lc = leading_coefficient_in(b, var);
    Polynomial r = a;
    std::int64_t steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= n) {
        auto dr = r.degree_in(var);
        Monomial shift(amb.size());
        shift.set(var, static_cast<std::uint64_t>(dr - n));
        Polynomial s = leading_coefficient_in(r, var) * Polynomial::term(amb, shift, Rational(1));
        r = lc * r - s * b;
        ++steps;
    }
    for (; steps < m - n + 1; ++steps) {
        r *= lc;
    }
    return r;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q)
{
    require_same(p, q);
    auto vars = used_union(p, q);
    if (vars.size() > 2) {
        raise(ErrorCode::UnsupportedArity, "gcd supports at most two variables, got " + std::to_string(vars.size()));
    }
    return gcd_rec(p, q, vars);
}

} // namespace bezout

#include "bezout/polytope.hpp"

#include "bezout/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace bezout {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool lex_less(const Point2& a, const Point2& b)
{
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// lowest, then leftmost: the start vertex for the edge merge
std::size_t bottom_left(const std::vector<Point2>& v)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) {
            best = i;
        }
    }
    return best;
}

} // namespace

Polygon::Polygon(std::vector<Point2> pts)
{
    if (pts.empty()) {
        raise(ErrorCode::InvalidArgument, "polygon needs at least one point");
    }
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) {
        vertices_ = std::move(pts);
        return;
    }
    // Andrew's monotone chain; <= 0 drops collinear points
    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    vertices_ = std::move(hull);
}

Polygon newton_polygon(const Polynomial& p)
{
    if (p.ambient().size() != 2) {
        raise(ErrorCode::UnsupportedArity, "Newton polygons need a two-variable ambient, got " +
                                               to_string(p.ambient()));
    }
    if (p.is_zero()) {
        raise(ErrorCode::ZeroPolynomial, "the zero polynomial has no Newton polygon");
    }
    std::vector<Point2> pts;
    for (const auto& [m, c] : p.terms()) {
        pts.push_back({Rational(m[0]), Rational(m[1])});
    }
    return Polygon(std::move(pts));
}

Polygon minkowski_sum(const Polygon& p, const Polygon& q)
{
    const auto& a = p.vertices();
    const auto& b = q.vertices();
    if (a.size() < 3 || b.size() < 3) {
        std::vector<Point2> sums;
        for (const auto& u : a) {
            for (const auto& v : b) {
                sums.push_back(u + v);
            }
        }
        return Polygon(std::move(sums));
    }
    auto rotate = [](const std::vector<Point2>& v) {
        std::vector<Point2> r(v.begin() + static_cast<std::ptrdiff_t>(bottom_left(v)), v.end());
        r.insert(r.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(bottom_left(v)));
        r.push_back(r[0]);
        r.push_back(r[1]);
        return r;
    };
    auto ra = rotate(a);
    auto rb = rotate(b);
    const Point2 origin{Rational(0), Rational(0)};
    std::vector<Point2> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        out.push_back(ra[i] + rb[j]);
        Rational c = cross(origin, ra[i + 1] - ra[i], rb[j + 1] - rb[j]);
        if (c >= 0 && i < a.size()) {
            ++i;
        }
        if (c <= 0 && j < b.size()) {
            ++j;
        }
    }
    return Polygon(std::move(out));
}

Polygon dilate(const Polygon& p, const Rational& factor)
{
    std::vector<Point2> pts;
    for (const auto& v : p.vertices()) {
        pts.push_back({v.x * factor, v.y * factor});
    }
    return Polygon(std::move(pts));
}

Rational area(const Polygon& p)
{
    const auto& v = p.vertices();
    Rational twice(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& s = v[i];
        const auto& t = v[(i + 1) % v.size()];
        twice += s.x * t.y - t.x * s.y;
    }
    return abs(twice) / 2;
}

Rational mixed_volume(const Polygon& p, const Polygon& q)
{
    return area(minkowski_sum(p, q)) - area(p) - area(q);
}

std::string dump(const Polygon& p)
{
    std::ostringstream os;
    for (const auto& v : p.vertices()) {
        os << to_string(v.x) << " " << to_string(v.y) << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Valuations

MonomialValuation MonomialValuation::lex(std::vector<std::size_t> perm)
{
    std::vector<std::size_t> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) {
            raise(ErrorCode::InvalidArgument, "lex order needs a permutation of 0..n-1");
        }
    }
    return MonomialValuation(std::move(perm), false);
}

MonomialValuation MonomialValuation::graded_lex(std::size_t n)
{
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) {
        id[i] = i;
    }
    return MonomialValuation(std::move(id), true);
}

int MonomialValuation::compare(const Monomial& a, const Monomial& b) const
{
    if (a.size() != perm_.size() || b.size() != perm_.size()) {
        raise(ErrorCode::AmbientMismatch, "valuation and monomial lengths differ");
    }
    if (graded_) {
        auto da = a.total_degree();
        auto db = b.total_degree();
        if (da != db) {
            return da < db ? -1 : 1;
        }
    }
    for (auto i : perm_) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

Monomial MonomialValuation::of(const Polynomial& p) const
{
    if (p.is_zero()) {
        raise(ErrorCode::ZeroPolynomial, "valuation of the zero polynomial");
    }
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (best == nullptr || compare(m, *best) < 0) {
            best = &m;
        }
    }
    return *best;
}

// ---------------------------------------------------------------------------
// Okounkov polygon

namespace {

struct NuLess {
    const MonomialValuation* nu;
    bool operator()(const Monomial& a, const Monomial& b) const { return nu->compare(a, b) < 0; }
};

using Row = std::map<Monomial, Rational, NuLess>;

// Echelon basis keyed by pivot (the nu-smallest monomial of each row).
class Echelon {
public:
    explicit Echelon(const MonomialValuation& nu) : nu_(&nu), rows_(NuLess{&nu}) {}

    // Returns the new pivot when p is independent of the rows so far.
    std::optional<Monomial> insert(const Polynomial& p)
    {
        Row row(NuLess{nu_});
        for (const auto& [m, c] : p.terms()) {
            row.emplace(m, c);
        }
        while (!row.empty()) {
            const auto& [pivot, lead] = *row.begin();
            auto it = rows_.find(pivot);
            if (it == rows_.end()) {
                Monomial key = pivot;
                Rational inv = Rational(1) / lead;
                for (auto& [m, c] : row) {
                    c *= inv;
                }
                rows_.emplace(key, std::move(row));
                return key;
            }
            Rational factor = lead; // basis rows are monic at the pivot
            for (const auto& [m, c] : it->second) {
                auto [slot, inserted] = row.try_emplace(m, -factor * c);
                if (!inserted) {
                    slot->second -= factor * c;
                    if (slot->second == 0) {
                        row.erase(slot);
                    }
                }
            }
        }
        return std::nullopt;
    }

private:
    const MonomialValuation* nu_;
    std::map<Monomial, Row, NuLess> rows_;
};

} // namespace

OkounkovPolygon okounkov_polygon(const SemidegreeChain& delta, const MonomialValuation& nu, std::int64_t d,
                                 std::int64_t cutoff)
{
    const AmbientRing& amb = delta.ambient();
    if (amb.size() != 2) {
        raise(ErrorCode::UnsupportedArity, "Okounkov polygons are implemented for two variables");
    }
    if (nu.permutation().size() != 2) {
        raise(ErrorCode::AmbientMismatch, "valuation arity differs from the ambient");
    }
    if (d < 1) {
        raise(ErrorCode::InvalidArgument, "d must be positive");
    }
    const std::int64_t levels = cutoff / d;
    if (levels < 2) {
        raise(ErrorCode::CutoffTooSmall, "cutoff " + std::to_string(cutoff) + " allows " + std::to_string(levels) +
                                             " level(s) of d = " + std::to_string(d) +
                                             "; stabilization needs at least two");
    }

    // generators with their weight bound: the variables, then the step polynomials
    std::vector<Polynomial> gens;
    std::vector<std::int64_t> gen_weight;
    for (std::size_t i = 0; i < amb.size(); ++i) {
        gens.push_back(Polynomial::variable(amb, i));
        gen_weight.push_back(delta.base().weight(i));
    }
    for (const auto& step : delta.steps()) {
        gens.push_back(step.h);
        gen_weight.push_back(step.w);
    }
    std::vector<std::vector<Polynomial>> powers(gens.size());
    auto power = [&](std::size_t g, std::size_t e) -> const Polynomial& {
        auto& cache = powers[g];
        if (cache.empty()) {
            cache.emplace_back(amb, Rational(1));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * gens[g]);
        }
        return cache[e];
    };

    std::vector<Point2> points;
    std::optional<Polygon> previous;
    std::optional<Polygon> current;
    for (std::int64_t k = 1; k <= levels; ++k) {
        const std::int64_t budget = k * d;
        Echelon echelon(nu);
        std::vector<std::size_t> exps(gens.size(), 0);
        std::function<void(std::size_t, std::int64_t, const Polynomial&)> walk =
            [&](std::size_t g, std::int64_t left, const Polynomial& acc) {
                if (g == gens.size()) {
                    if (auto pivot = echelon.insert(acc)) {
                        points.push_back({Rational((*pivot)[0]) / k, Rational((*pivot)[1]) / k});
                    }
                    return;
                }
                for (std::size_t e = 0; static_cast<std::int64_t>(e) * gen_weight[g] <= left; ++e) {
                    walk(g + 1, left - static_cast<std::int64_t>(e) * gen_weight[g], acc * power(g, e));
                }
            };
        walk(0, budget, Polynomial(amb, Rational(1)));
        previous = std::move(current);
        current = Polygon(points);
    }
    if (!(*previous == *current)) {
        raise(ErrorCode::CutoffTooSmall, "hull still growing at level " + std::to_string(levels) +
                                             "; raise the cutoff");
    }
    return {*current, static_cast<std::size_t>(levels)};
}

} // namespace bezout

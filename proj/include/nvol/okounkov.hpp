#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nvol/monomial.hpp"
#include "nvol/rational.hpp"
#include "nvol/skp.hpp"

namespace nvol {

/// Z^2-valuation from the flag {origin} in C^2: V(f) = (ord_0 f, y-exponent of the initial term).
/// Monomial: V(x^a y^b) = (a + b, b). Key polynomials: V(q^a) = (a0 + sum a_i d_i, a0).
class FlagValuation2D {
public:
    explicit FlagValuation2D(MonomialValuation v);
    explicit FlagValuation2D(SKPData data);

    bool is_skp() const { return std::holds_alternative<SKPData>(source_); }
    const MonomialValuation& monomial() const { return std::get<MonomialValuation>(source_); }
    const SKPData& skp() const { return std::get<SKPData>(source_); }
    /// Value per unit of V_0 along the two edges of the cone: (g1, g2) with g1 for mu = 0 and g2 for mu = tau.
    /// For key polynomials g1 is the depth-K approximant beta_K / d_K.
    std::pair<Rational, Rational> edge_values() const;
    std::string label() const;

private:
    std::variant<MonomialValuation, SKPData> source_;
};

using LatticePoint = std::pair<long, long>;
using Point2 = std::pair<Rational, Rational>;

/// All V-values with V_0 <= degree_bound, sorted.
std::vector<LatticePoint> semigroup_points(const FlagValuation2D& fv, long degree_bound);

struct Complement {
    std::vector<LatticePoint> points;
    Integer count;
};
/// Points of the value semigroup only reached by functions of value < m.
Complement primary_complement(const FlagValuation2D& fv, const Rational& m);

/// Polygon with vertices in counterclockwise order.
struct ConvexRegion2D {
    std::vector<Point2> vertices;
    std::string note;
};
/// The triangle removed from the cone {0 <= mu <= tau} to get Gamma.
ConvexRegion2D gamma_region(const FlagValuation2D& fv);
/// Shoelace area; throws ValidationError for degenerate or self-intersecting polygons.
Rational covolume(const ConvexRegion2D& region);
/// Exact convex hull (monotone chain), counterclockwise; used for figures.
ConvexRegion2D convex_hull(std::vector<Point2> points);

struct SliceLevel {
    long level = 0;
    std::optional<std::pair<Rational, Rational>> segment;  // [min, max] of V_1/k, empty if no section
    std::optional<Rational> gap;                           // Hausdorff distance to the exact slice
    bool contained = false;
};
struct SliceReport {
    Rational t;
    std::optional<std::pair<Rational, Rational>> exact;
    std::vector<SliceLevel> levels;
    bool contained = false;  // every finite slice inside the exact one
    bool shrinking = false;  // gaps nonincreasing and either all zero or strictly smaller at the end
};
/// Degree-one slice {V_1(f)/k : f in F^{kt} R_k} against the exact slice of Gamma at V_0 = 1/t (rescaled by t).
SliceReport slice_check(const FlagValuation2D& fv, const Rational& t, const std::vector<long>& levels);

/// H(x) = inf{tau : x in Delta^{1/tau}} for x in [0, 1].
Rational h_function(const FlagValuation2D& fv, const Rational& x);
struct Form3Report {
    Rational integral, volume;
    bool equal = false;
};
/// int_0^1 H^2 against 2! covolume(Gamma).
Form3Report form3_check(const FlagValuation2D& fv);

struct Figure {
    std::string title;
    std::vector<Point2> points;
    std::vector<ConvexRegion2D> regions;
    bool draw_cone = true;
};
/// Deterministic SVG text.
std::string render_svg(const Figure& fig);
/// Writes render_svg(fig) to path; throws std::runtime_error if the file cannot be written.
void emit_figure(const Figure& fig, const std::string& path);

}  // namespace nvol

#pragma once

#include "parahoric/matrix.hpp"
#include "parahoric/padic.hpp"
#include "parahoric/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

// Coefficients in ascending degree.  For a power series `truncated` is set
// and coefficients beyond the stored ones are unknown.
struct PadicPoly {
    std::vector<PadicScalar> coeffs;
    bool truncated = false;

    std::size_t size() const { return coeffs.size(); }
    std::int64_t prime() const;
    static PadicPoly from_rational(std::int64_t p, const std::vector<Rational>& c, std::int64_t absprec);
    PadicScalar evaluate(const PadicScalar& x) const;
    PadicPoly derivative() const;
};

// Which polynomial the hull belongs to.  For a characteristic polynomial
// det(X - U) root valuations are the negated hull slopes; for a Fredholm
// series det(1 - UX) they are the hull slopes themselves.
enum class SlopeConvention { CharPoly, Fredholm };

struct NewtonVertex {
    std::int64_t index;
    std::int64_t value;   // valuation, or a lower bound if !determined
    bool determined;
};

struct NewtonSegment {
    std::int64_t start;
    std::int64_t end;
    Rational slope;         // hull slope (rise over run)
    Rational root_valuation;
    bool ambiguous;
    std::int64_t multiplicity() const { return end - start; }
};

struct NewtonPolygon {
    SlopeConvention convention = SlopeConvention::CharPoly;
    std::vector<NewtonVertex> vertices;
    std::vector<NewtonSegment> segments;
    std::int64_t degree = 0;
    std::vector<std::string> diagnostics;

    // Largest root valuation below which every segment is certified.
    std::optional<Rational> certified_below() const;
};

NewtonPolygon newton_polygon(const PadicPoly& f, SlopeConvention conv = SlopeConvention::CharPoly);
NewtonPolygon newton_polygon(const std::vector<Rational>& f, std::int64_t p,
                             SlopeConvention conv = SlopeConvention::CharPoly);

// Certified root valuations with multiplicity, ascending.
std::vector<Rational> root_slopes(const NewtonPolygon& np);

// Number of roots of valuation <= h; nullopt means h = infinity.
std::int64_t slope_le_h_dim(const NewtonPolygon& np, const std::optional<Rational>& h);

// det(X - m) over p-adics, by Hessenberg reduction pivoting on the entry of
// least valuation.  Precision loss is carried by the scalars themselves.
PadicPoly charpoly(const Matrix<PadicScalar>& m);

// det(1 - mX) computed division-free (Berkowitz) modulo p^A, where A is the
// smallest absolute precision among the entries after scaling them to be
// integral; coefficients carry exactly the precision that bound justifies.
// Suited to matrices whose columns are divisible by growing powers of p,
// where pivoting loses digits.
PadicPoly fredholm_division_free(const Matrix<PadicScalar>& m);

// det(1 - mX): the charpoly with coefficients reversed.
PadicPoly fredholm_from_charpoly(const PadicPoly& charpoly);

// Hensel/Newton lift of a simple root from an approximation mod p.
PadicScalar hensel_lift(const PadicPoly& f, const PadicScalar& approx, std::int64_t absprec);

// Roots in Z_p of an integral polynomial whose reduction mod p has simple
// roots at the given residues.  Only simple residue roots are lifted.
std::vector<PadicScalar> unit_roots(const std::vector<Rational>& f, std::int64_t p, std::int64_t absprec);

} // namespace parahoric

#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "smplab/errors.hpp"

namespace smplab {

/// f(x) = value on the piece.
struct ConstantPiece {
    double value = 0.0;
};

/// f(x) = sum coeffs[k] * x^k (ascending powers).
struct PolynomialPiece {
    std::vector<double> coeffs;
};

/// f(x) = -strength * (pole - x)^(-exponent), with pole at or beyond the
/// right end of the piece. strength > 0 models a negative blow-up toward the
/// pole; strength < 0 a positive one. Distance-weighted integrals stay finite
/// for exponent < 2.
struct PowerSingularityPiece {
    double strength = 1.0;
    double exponent = 0.5;
    double pole = 0.0;
};

using PieceKind = std::variant<ConstantPiece, PolynomialPiece, PowerSingularityPiece>;

struct ForcingPiece {
    double lo = 0.0;
    double hi = 0.0;
    PieceKind kind;

    double value_at(double x) const;
    bool is_singular() const { return std::holds_alternative<PowerSingularityPiece>(kind); }
};

enum class WeightKind {
    DistanceToBoundary,    // min(x - lo, hi - x) on the forcing domain
    LinearTent,            // hi - x
    FirstEigenfunction1D,  // sin(pi (x - lo) / (hi - lo)), sup-normalized
};

/// Piecewise symbolic forcing on an interval. Pieces tile the domain without
/// gaps or overlapping interiors; every integral against polynomial or
/// eigenfunction weights evaluates in closed form, so condition margins carry
/// no quadrature error.
class PiecewiseForcing {
public:
    PiecewiseForcing(std::vector<ForcingPiece> pieces, double lo, double hi);

    static PiecewiseForcing constant(double value, double lo, double hi);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double length() const { return hi_ - lo_; }
    const std::vector<ForcingPiece>& pieces() const { return pieces_; }

    double value_at(double x) const;
    bool has_singular_piece() const;
    /// Largest singularity exponent among pieces (0 when none).
    double max_singularity_exponent() const;

    /// Interior piece boundaries, sorted, without the domain endpoints.
    std::vector<double> breakpoints() const;

    /// f = f+ - f- pointwise with f- >= 0; both parts keep the refined
    /// partition of this forcing (zero pieces fill the complements).
    PiecewiseForcing positive_part() const;
    PiecewiseForcing negative_part() const;

    PiecewiseForcing scaled(double factor) const;

    /// Zero-pad onto the enclosing domain [new_lo, new_hi].
    PiecewiseForcing extended_by_zero(double new_lo, double new_hi) const;

private:
    std::vector<ForcingPiece> pieces_;
    double lo_;
    double hi_;
};

/// Exact integral of f over [a, b] via per-piece antiderivatives.
/// Throws NonIntegrableSingularity when a power piece with exponent >= 1 is
/// integrated up to its pole.
double integrate(const PiecewiseForcing& f, double a, double b);

/// Exact integral of f(x) * p(x) over [a, b] for a polynomial weight p given
/// by ascending coefficients. Singular pieces are handled by re-expanding the
/// weight around the pole.
double integrate_against_poly(const PiecewiseForcing& f, const std::vector<double>& weight,
                              double a, double b);

/// Exact weighted integral for the named weights. Polynomial-times-sine
/// integrals use the integration-by-parts recursion; singular-times-sine uses
/// the (machine-exact) power-series expansion of the sine about the pole.
double weighted_integral(const PiecewiseForcing& f, WeightKind weight, double a, double b);

/// Iterated tail integral  I(r) = int_r^R ( int_{r0}^t f_minus(s) ds ) dt,
/// evaluated through the equivalent single-integral form
///   (R - r) * int_{r0}^r f_minus + int_r^R f_minus(s) (R - s) ds,
/// which stays finite for singularity exponents < 2.
double double_tail_integral(const PiecewiseForcing& f_minus, double r0, double r, double R);

/// Locates the sign-change radius r0 of a radial profile: f >= 0 on (lo, r0),
/// f <= 0 on (r0, hi). Throws SignStructureViolation when the profile has no
/// such single crossing. When f has no negative part, r0 falls back to the
/// last interior breakpoint with positive mass before it (domain midpoint if
/// the profile has no interior breakpoints).
double infer_sign_change(const PiecewiseForcing& f);

/// Reduces a forcing to a radial profile on (0, R): identity when the domain
/// already starts at 0, the restriction to x >= 0 when the domain is
/// symmetric and f is even. Throws SignStructureViolation otherwise.
PiecewiseForcing radial_profile(const PiecewiseForcing& f);

}  // namespace smplab

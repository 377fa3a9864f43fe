#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "mink4/errors.hpp"
#include "mink4/tolerances.hpp"

namespace mink4 {

// A vector of R^4_1 in the fixed basis {e1,e2,e3,e4}, metric diag(1,1,1,-1).
struct LorentzVec {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    constexpr double operator[](int i) const {
        return i == 0 ? x1 : i == 1 ? x2 : i == 2 ? x3 : x4;
    }
    double& operator[](int i) {
        return i == 0 ? x1 : i == 1 ? x2 : i == 2 ? x3 : x4;
    }

    LorentzVec operator+(const LorentzVec& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3, x4 + o.x4}; }
    LorentzVec operator-(const LorentzVec& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3, x4 - o.x4}; }
    LorentzVec operator-() const { return {-x1, -x2, -x3, -x4}; }
    LorentzVec operator*(double s) const { return {s * x1, s * x2, s * x3, s * x4}; }
    LorentzVec& operator+=(const LorentzVec& o) { x1 += o.x1; x2 += o.x2; x3 += o.x3; x4 += o.x4; return *this; }
    LorentzVec& operator-=(const LorentzVec& o) { x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; x4 -= o.x4; return *this; }
    LorentzVec& operator*=(double s) { x1 *= s; x2 *= s; x3 *= s; x4 *= s; return *this; }
};

inline LorentzVec operator*(double s, const LorentzVec& v) { return v * s; }

inline constexpr LorentzVec kE1{1, 0, 0, 0};
inline constexpr LorentzVec kE2{0, 1, 0, 0};
inline constexpr LorentzVec kE3{0, 0, 1, 0};
inline constexpr LorentzVec kE4{0, 0, 0, 1};

// <u,v> = u1 v1 + u2 v2 + u3 v3 - u4 v4.
inline double inner(const LorentzVec& u, const LorentzVec& v) {
    return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 - u.x4 * v.x4;
}

inline double euclid_norm2(const LorentzVec& v) {
    return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x4 * v.x4;
}
inline double euclid_norm(const LorentzVec& v) { return std::sqrt(euclid_norm2(v)); }

inline double max_abs(const LorentzVec& v) {
    return std::max(std::max(std::abs(v.x1), std::abs(v.x2)), std::max(std::abs(v.x3), std::abs(v.x4)));
}

inline bool is_finite(const LorentzVec& v) {
    return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3) && std::isfinite(v.x4);
}

void require_finite(const LorentzVec& v, const char* who);

enum class CausalClass { Spacelike, Timelike, Lightlike, Zero };

const char* to_string(CausalClass c);

// Zero if the Euclidean norm is below tol; lightlike if |<v,v>| is below
// tol * |v|^2_euclid; otherwise the sign of <v,v> decides.
CausalClass causal_character(const LorentzVec& v, double tol = tol::kLightlikeRel);

// Gram-Schmidt against the Lorentz inner product. Output vector i satisfies
// <w_i,w_i> = signature[i] (+1 or -1) and <w_i,w_j> = 0 for i != j. The first
// output is a positive multiple of the first input. Throws DegenerateSpan if
// an intermediate vector is lightlike or zero within tolerance, or if the
// requested signature is not attained.
std::vector<LorentzVec> orthonormalize(std::span<const LorentzVec> vectors,
                                       std::span<const int> signature,
                                       double tol = tol::kLightlikeRel);

// The unique lightlike n2 in span{p1,p2} with <n2,n2> = 0 and <n1,n2> = -1.
// Requires n1 lightlike and contained in the plane; the plane must carry a
// signature-(1,1) metric.
LorentzVec null_partner(const LorentzVec& n1, const LorentzVec& p1, const LorentzVec& p2,
                        double tol = tol::kLightlikeRel);

// Dense 4x4 matrix, row-major.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity();
    static Mat4 eta(); // diag(1,1,1,-1)

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    Mat4 operator*(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 transpose() const;
    LorentzVec apply(const LorentzVec& v) const;
    double det() const;
    Mat4 inverse() const; // Gauss-Jordan with partial pivoting
    double max_abs() const;
};

// Declared Gram type of a frame (rows ordered x, y, n1, n2).
enum class GramType {
    Orthonormal,       // diag(1, 1, 1, -1)
    PseudoOrthonormal, // x, y unit spacelike; n1, n2 lightlike, <n1,n2> = -1
};

Mat4 gram_matrix(GramType type);

struct LorentzFrame {
    std::array<LorentzVec, 4> e{}; // x, y, n1, n2
    LorentzVec base{};
    GramType gram = GramType::Orthonormal;
};

// Max |<e_i,e_j> - declared_ij| over all pairs.
double frame_gram_residual(const LorentzFrame& f);

// Determinant of the 4x4 coordinate matrix (columns = frame vectors).
double frame_det(const LorentzFrame& f);

struct Motion {
    Mat4 lambda;
    LorentzVec translation;

    LorentzVec apply(const LorentzVec& p) const { return lambda.apply(p) + translation; }
};

// The Lorentz motion mapping the source frame onto the target frame:
// lambda = T_target * T_source^{-1} (frame vectors as columns), translation
// matching base points. Throws GramMismatch if the declared Gram types differ
// or either frame violates its Gram within eps_frame.
Motion align_frames(const LorentzFrame& source, const LorentzFrame& target,
                    double eps_frame = tol::kFrame);

} // namespace mink4

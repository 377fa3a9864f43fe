#pragma once

#include <array>
#include <functional>
#include <optional>

#include "mink4/surface.hpp"

namespace mink4 {

// Geometric frame of a marginally trapped surface: x, y unit spacelike
// principal tangents, n1 = H and n2 lightlike with <n1,n2> = -1.
struct MTFrame {
    LorentzVec x, y, n1, n2;
    LorentzVec base;

    LorentzFrame as_lorentz_frame() const {
        return LorentzFrame{{x, y, n1, n2}, base, GramType::PseudoOrthonormal};
    }
};

// The ten Gram-deviation functions (phi_1 ... phi_10).
std::array<double, 10> phi_values(const LorentzVec& x, const LorentzVec& y, const LorentzVec& n1,
                                  const LorentzVec& n2);
double max_phi(const LorentzVec& x, const LorentzVec& y, const LorentzVec& n1, const LorentzVec& n2);

struct SevenInvariants {
    double gamma1 = 0, gamma2 = 0;
    double nu = 0, lambda = 0, mu = 0;
    double beta1 = 0, beta2 = 0;
};

struct MtOptions {
    double mt_rel_tol = tol::kMarginallyTrappedRel; // |<H,H>| <= tol * |H|^2_euclid
    double zero_tol = 1e-9;                         // |H|_euclid below this means minimal
    double frame_tol = tol::kFrame;
};

// Geometric frame with x, y along the principal directions, n1 = H, n2 the
// null partner, quadruple positively oriented (x and y are swapped when
// needed). Throws NotMarginallyTrapped when H is zero, spacelike or
// timelike; FlatPoint propagates from principal_directions.
MTFrame mt_normal_frame(const SecondOrderJet& jet, const MtOptions& opts = {});

// Chart-adapted geometric frame x = z_u/sqrt(E), y ~ z_v, for patches already
// parameterized by principal lines. No reordering; orientation follows the
// chart.
MTFrame chart_adapted_mt_frame(const SecondOrderJet& jet, const MtOptions& opts = {});

struct SigmaDecomposition {
    double nu = 0, lambda = 0, mu = 0;
    // Largest non-n1 component of sigma(x,x), sigma(y,y), relative to the
    // second-fundamental-form scale.
    double principal_defect = 0;
};

// nu, lambda, mu from the decomposition of sigma in the geometric frame.
// Throws PrincipalFrameDefect when sigma(x,x) or sigma(y,y) fails to be
// collinear with n1 beyond defect_tol.
SigmaDecomposition sigma_decomposition(const SecondOrderJet& jet, const MTFrame& frame,
                                       double defect_tol = 1e-6);

struct CurvatureDerivedInvariants {
    double mu_squared = 0;
    double lambda = 0;
    double nu = 0;
};

// 4 mu^2 = kappa^2 - k, lambda = K / sqrt(kappa^2 - k),
// nu = -kappa / sqrt(kappa^2 - k). Throws NotMarginallyTrappedData when
// kappa^2 - k <= 0.
CurvatureDerivedInvariants invariants_from_curvatures(double k, double kappa, double K);

using MTFrameField = std::function<MTFrame(double, double)>;

struct FdOpts {
    double h = tol::kFdFirst; // step scales with max(1, |coordinate|)
    int order = 2;            // 2 or 4 point central stencils
};

struct FrameConnection {
    double gamma1 = 0, gamma2 = 0;
    double beta1 = 0, beta2 = 0;
};

// gamma_1 = <D'_x x, y>, gamma_2 = <D'_y y, x>, beta_i = -<D'_. n1, n2>,
// where the directional derivative along a frame direction w = a du + b dv is
// a (d/du of the field) + b (d/dv of the field), by central differences.
FrameConnection frame_connection(const SurfacePatch& patch, const MTFrameField& field, double u,
                                 double v, const FdOpts& fd = {});

struct FrenetResiduals {
    // Order: D'_x x, D'_x y, D'_x n1, D'_x n2, D'_y x, D'_y y, D'_y n1, D'_y n2.
    std::array<LorentzVec, 8> rows{};
    double max_abs = 0;
};

// Residuals of the eight Frenet-type derivative formulas: left sides by
// directional differentiation of the frame field, right sides from inv.
FrenetResiduals frenet_residuals(const SurfacePatch& patch, const MTFrameField& field,
                                 const SevenInvariants& inv, double u, double v,
                                 const FdOpts& fd = {});

using ScalarField = std::function<double(double, double)>;

struct InvariantFieldFns {
    ScalarField gamma1, gamma2, nu, lambda, mu, beta1, beta2;
};

// The six integrability conditions, evaluated with x = (1/sqrt(E)) d_u and
// y = (1/sqrt(G)) d_v. Throws DegenerateMetricRecovery when sqrt(E) or
// sqrt(G) is not positive at the point, or when mu_u or mu_v vanishes (the
// metric recovery from mu degenerates).
std::array<double, 6> integrability_residuals(const InvariantFieldFns& inv, const ScalarField& sqrtE,
                                              const ScalarField& sqrtG, double u, double v,
                                              const FdOpts& fd = {});

// a(H) = (1/2) tr(A_H o A_{H-perp}) H-perp = lambda mu n2.
LorentzVec null_allied_mcv(const MTFrame& frame, double nu, double lambda, double mu);

struct PointClass {
    bool flat_point = false;             // L = M = N = 0
    bool flat_gauss = false;             // K = 0  <=>  lambda = 0
    bool flat_normal_connection = false; // kappa = 0  <=>  nu = 0
    bool parabolic = false;              // k = 0  <=>  nu = +-1
    bool minimal = false;                // H = 0
    bool marginally_trapped = false;     // H lightlike, nonzero
    bool parallel_h_candidate = false;   // beta1 = beta2 = 0
};

struct ClassifyOptions {
    double tol = tol::kClassify;
    double mt_rel_tol = tol::kMarginallyTrappedRel;
    double zero_tol = 1e-9;
};

PointClass classify(const FormInvariants& fi, double nu, double lambda, const LorentzVec& H,
                    const ClassifyOptions& opts = {},
                    std::optional<double> beta1 = std::nullopt,
                    std::optional<double> beta2 = std::nullopt);

struct SevenSample {
    SevenInvariants inv;
    double sqrtE = 0, sqrtG = 0;
    MTFrame frame;
};

// Measures the seven invariants at (u,v) of a patch parameterized by
// principal lines, in the chart-adapted frame. nu, lambda, mu come from the
// pointwise sigma decomposition; gamma and beta from frame differentiation.
SevenSample sample_seven_chart(const SurfacePatch& patch, double u, double v, const FdOpts& fd = {},
                               const MtOptions& opts = {});

} // namespace mink4

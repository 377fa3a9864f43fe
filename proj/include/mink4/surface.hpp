#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mink4/lorentz.hpp"

namespace mink4 {

// Position plus first and second partials at one parameter point.
struct SecondOrderJet {
    LorentzVec z, z_u, z_v, z_uu, z_uv, z_vv;
};

bool is_finite(const SecondOrderJet& j);

struct Domain {
    double u_min = 0, u_max = 0, v_min = 0, v_max = 0;

    bool contains(double u, double v, double margin = 0.0) const {
        return u >= u_min + margin && u <= u_max - margin &&
               v >= v_min + margin && v <= v_max - margin;
    }
    double u_span() const { return u_max - u_min; }
    double v_span() const { return v_max - v_min; }
};

enum class JetSource { Analytic, FiniteDifference, GridSamples };

// Steps for finite-difference jets; actual steps scale with max(1, |u|).
struct FdSteps {
    double first = tol::kFdFirst;
    double second = tol::kFdSecond;
};

// A parametric surface patch z(u,v) with second-order jets.
class SurfacePatch {
public:
    SurfacePatch(std::function<SecondOrderJet(double, double)> eval, Domain dom,
                 JetSource source, double margin = 0.0)
        : eval_(std::move(eval)), domain_(dom), source_(source), margin_(margin) {}

    SecondOrderJet jet(double u, double v) const;

    const Domain& domain() const { return domain_; }
    JetSource source() const { return source_; }
    double boundary_margin() const { return margin_; }

private:
    std::function<SecondOrderJet(double, double)> eval_;
    Domain domain_;
    JetSource source_;
    double margin_; // interior margin required by FD evaluators
};

SurfacePatch make_analytic_patch(std::function<SecondOrderJet(double, double)> jet_fn, Domain dom);

// Central differences for first derivatives, 3-point / 4-point stencils for
// second and mixed derivatives. Requires an interior margin of 2h.
SurfacePatch make_fd_patch(std::function<LorentzVec(double, double)> position, Domain dom,
                           FdSteps steps = {});

SecondOrderJet evaluate_jet(const SurfacePatch& patch, double u, double v);

// Rectangular lattice of surface samples. Jets are available at lattice nodes
// with an interior margin of two rows/columns and use 4th-order stencils.
class GridSamplesPatch {
public:
    GridSamplesPatch(std::vector<double> u, std::vector<double> v, std::vector<LorentzVec> z);

    int nu() const { return static_cast<int>(u_.size()); }
    int nv() const { return static_cast<int>(v_.size()); }
    double u(int i) const { return u_[i]; }
    double v(int j) const { return v_[j]; }
    const LorentzVec& position(int i, int j) const { return z_[static_cast<size_t>(i) * v_.size() + j]; }

    bool jet_available(int i, int j) const {
        return i >= 2 && j >= 2 && i < nu() - 2 && j < nv() - 2;
    }
    SecondOrderJet jet_at_node(int i, int j) const; // OutOfDomain outside the margin

    // Evaluator that snaps (u,v) to the nearest lattice node within a relative
    // tolerance of the spacing, for use through the SurfacePatch interface.
    SurfacePatch as_patch() const;

private:
    std::vector<double> u_, v_;
    std::vector<LorentzVec> z_; // row-major, v fastest
    double du_ = 0, dv_ = 0;
};

struct FirstForm {
    double E = 0, F = 0, G = 0, W = 0;
};

// E, F, G, W = sqrt(EG - F^2). Throws NotSpacelike if E <= 0 or EG - F^2 <= 0.
FirstForm first_form(const SecondOrderJet& jet);

// Orthonormal normal pair (n1 spacelike unit, n2 timelike unit), both
// orthogonal to the tangent plane, quadruple (z_u, z_v, n1, n2) positively
// oriented. n1's sign is fixed by making its largest-|.| coordinate positive;
// n2's sign by the orientation.
std::pair<LorentzVec, LorentzVec> orthonormal_normal_frame(const SecondOrderJet& jet,
                                                           double tol = tol::kLightlikeRel);

struct SecondCoeffs {
    // c_ij^k = <z_ij, n_k>, exactly as supplied normals define them.
    double c11_1 = 0, c12_1 = 0, c22_1 = 0;
    double c11_2 = 0, c12_2 = 0, c22_2 = 0;
    GramType normal_type = GramType::Orthonormal;
    LorentzVec n1, n2;
};

SecondCoeffs second_coeffs(const SecondOrderJet& jet, const LorentzVec& n1, const LorentzVec& n2,
                           GramType normal_type, double tol = 1e-7);

struct FormInvariants {
    double L = 0, M = 0, N = 0;
    double k = 0, kappa = 0, K = 0;
};

// L, M, N by the 2x2 determinant formulas; k = det gamma, kappa = -tr/2 of
// the Weingarten-type map; K by the Gauss equation in an orthonormal tangent
// basis.
FormInvariants curvature_invariants(const FirstForm& ff, const SecondCoeffs& sc,
                                    const SecondOrderJet& jet);

// Component of V orthogonal to the tangent plane (first-form projection).
LorentzVec normal_project(const SecondOrderJet& jet, const FirstForm& ff, const LorentzVec& V);

// H = (1/2) tr sigma, computed basis-free as the normal part of
// (G z_uu - 2F z_uv + E z_vv) / (2 W^2).
LorentzVec mean_curvature_vector(const SecondOrderJet& jet, const FirstForm& ff);

// Unit principal directions as coefficient pairs (xi, eta) on (z_u, z_v).
// Sign convention: xi >= 0, ties broken by eta >= 0. Ordering: larger xi
// first, ties broken by larger eta. Throws FlatPoint when the direction
// equation degenerates (L = M = N = 0 within tolerance, or umbilic data).
struct PrincipalDirections {
    double xi1 = 0, eta1 = 0;
    double xi2 = 0, eta2 = 0;
};

PrincipalDirections principal_directions(const FirstForm& ff, const FormInvariants& fi,
                                         double tol = 1e-12);

// Tangent vector from direction coefficients.
inline LorentzVec tangent_vector(const SecondOrderJet& jet, double xi, double eta) {
    return jet.z_u * xi + jet.z_v * eta;
}

// Chart coefficients (xi, eta) of a tangent vector w = xi z_u + eta z_v.
std::pair<double, double> tangent_coefficients(const SecondOrderJet& jet, const FirstForm& ff,
                                               const LorentzVec& w);

} // namespace mink4

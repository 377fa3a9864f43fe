#include "mink4/surface.hpp"

#include <algorithm>
#include <cmath>

namespace mink4 {

bool is_finite(const SecondOrderJet& j) {
    return is_finite(j.z) && is_finite(j.z_u) && is_finite(j.z_v) && is_finite(j.z_uu) &&
           is_finite(j.z_uv) && is_finite(j.z_vv);
}

SecondOrderJet SurfacePatch::jet(double u, double v) const {
    if (!std::isfinite(u) || !std::isfinite(v)) {
        throw NonFiniteInput("SurfacePatch::jet: non-finite parameters");
    }
    const double mu = margin_ * std::max(1.0, std::abs(u));
    const double mv = margin_ * std::max(1.0, std::abs(v));
    if (!domain_.contains(u, v) ||
        (margin_ > 0 && !domain_.contains(u, v, std::max(mu, mv)))) {
        throw OutOfDomain("SurfacePatch::jet: (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") outside the evaluable domain");
    }
    SecondOrderJet j = eval_(u, v);
    if (!is_finite(j)) throw NonFiniteInput("SurfacePatch::jet: evaluator produced non-finite jet");
    return j;
}

SurfacePatch make_analytic_patch(std::function<SecondOrderJet(double, double)> jet_fn, Domain dom) {
    return SurfacePatch(std::move(jet_fn), dom, JetSource::Analytic, 0.0);
}

SurfacePatch make_fd_patch(std::function<LorentzVec(double, double)> position, Domain dom,
                           FdSteps steps) {
    auto eval = [pos = std::move(position), steps](double u, double v) {
        const double h1u = steps.first * std::max(1.0, std::abs(u));
        const double h1v = steps.first * std::max(1.0, std::abs(v));
        const double h2u = steps.second * std::max(1.0, std::abs(u));
        const double h2v = steps.second * std::max(1.0, std::abs(v));
        SecondOrderJet j;
        j.z = pos(u, v);
        j.z_u = (pos(u + h1u, v) - pos(u - h1u, v)) * (1.0 / (2 * h1u));
        j.z_v = (pos(u, v + h1v) - pos(u, v - h1v)) * (1.0 / (2 * h1v));
        j.z_uu = (pos(u + h2u, v) - j.z * 2.0 + pos(u - h2u, v)) * (1.0 / (h2u * h2u));
        j.z_vv = (pos(u, v + h2v) - j.z * 2.0 + pos(u, v - h2v)) * (1.0 / (h2v * h2v));
        j.z_uv = (pos(u + h2u, v + h2v) - pos(u + h2u, v - h2v) - pos(u - h2u, v + h2v) +
                  pos(u - h2u, v - h2v)) *
                 (1.0 / (4 * h2u * h2v));
        return j;
    };
    // Interior margin of 2h so every stencil point stays inside the domain.
    return SurfacePatch(std::move(eval), dom, JetSource::FiniteDifference, 2 * steps.second);
}

SecondOrderJet evaluate_jet(const SurfacePatch& patch, double u, double v) {
    return patch.jet(u, v);
}

GridSamplesPatch::GridSamplesPatch(std::vector<double> u, std::vector<double> v,
                                   std::vector<LorentzVec> z)
    : u_(std::move(u)), v_(std::move(v)), z_(std::move(z)) {
    if (u_.size() < 2 || v_.size() < 2 || z_.size() != u_.size() * v_.size()) {
        throw ConfigError("GridSamplesPatch: lattice must be rectangular with >= 2 points per axis");
    }
    du_ = (u_.back() - u_.front()) / (static_cast<double>(u_.size()) - 1);
    dv_ = (v_.back() - v_.front()) / (static_cast<double>(v_.size()) - 1);
    if (!(du_ > 0) || !(dv_ > 0)) throw ConfigError("GridSamplesPatch: coordinates must increase");
    for (size_t i = 1; i < u_.size(); ++i) {
        if (std::abs(u_[i] - u_[i - 1] - du_) > 1e-9 * std::max(1.0, std::abs(du_))) {
            throw ConfigError("GridSamplesPatch: u lattice is not uniform");
        }
    }
    for (size_t j = 1; j < v_.size(); ++j) {
        if (std::abs(v_[j] - v_[j - 1] - dv_) > 1e-9 * std::max(1.0, std::abs(dv_))) {
            throw ConfigError("GridSamplesPatch: v lattice is not uniform");
        }
    }
    for (const auto& p : z_) require_finite(p, "GridSamplesPatch");
}

SecondOrderJet GridSamplesPatch::jet_at_node(int i, int j) const {
    if (!jet_available(i, j)) {
        throw OutOfDomain("GridSamplesPatch: node (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") lies in the two-row boundary margin");
    }
    auto at = [&](int a, int b) -> const LorentzVec& { return position(a, b); };
    // 4th-order central stencils; the margin-2 interior guarantees support.
    auto d1 = [](const LorentzVec& m2, const LorentzVec& m1, const LorentzVec& p1,
                 const LorentzVec& p2, double h) {
        return (m2 - p2 + (p1 - m1) * 8.0) * (1.0 / (12.0 * h));
    };
    auto d2 = [](const LorentzVec& m2, const LorentzVec& m1, const LorentzVec& c,
                 const LorentzVec& p1, const LorentzVec& p2, double h) {
        return ((m1 + p1) * 16.0 - (m2 + p2) - c * 30.0) * (1.0 / (12.0 * h * h));
    };
    SecondOrderJet jet;
    jet.z = at(i, j);
    jet.z_u = d1(at(i - 2, j), at(i - 1, j), at(i + 1, j), at(i + 2, j), du_);
    jet.z_v = d1(at(i, j - 2), at(i, j - 1), at(i, j + 1), at(i, j + 2), dv_);
    jet.z_uu = d2(at(i - 2, j), at(i - 1, j), at(i, j), at(i + 1, j), at(i + 2, j), du_);
    jet.z_vv = d2(at(i, j - 2), at(i, j - 1), at(i, j), at(i, j + 1), at(i, j + 2), dv_);
    // Mixed derivative: 4th-order u-derivative of the 4th-order v-derivatives.
    LorentzVec dv_m2 = d1(at(i - 2, j - 2), at(i - 2, j - 1), at(i - 2, j + 1), at(i - 2, j + 2), dv_);
    LorentzVec dv_m1 = d1(at(i - 1, j - 2), at(i - 1, j - 1), at(i - 1, j + 1), at(i - 1, j + 2), dv_);
    LorentzVec dv_p1 = d1(at(i + 1, j - 2), at(i + 1, j - 1), at(i + 1, j + 1), at(i + 1, j + 2), dv_);
    LorentzVec dv_p2 = d1(at(i + 2, j - 2), at(i + 2, j - 1), at(i + 2, j + 1), at(i + 2, j + 2), dv_);
    jet.z_uv = d1(dv_m2, dv_m1, dv_p1, dv_p2, du_);
    return jet;
}

SurfacePatch GridSamplesPatch::as_patch() const {
    GridSamplesPatch copy = *this;
    Domain dom{u_.front(), u_.back(), v_.front(), v_.back()};
    auto eval = [grid = std::move(copy)](double u, double v) {
        const double fi = (u - grid.u(0)) / (grid.u(1) - grid.u(0));
        const double fj = (v - grid.v(0)) / (grid.v(1) - grid.v(0));
        const int i = static_cast<int>(std::lround(fi));
        const int j = static_cast<int>(std::lround(fj));
        if (std::abs(fi - i) > 1e-6 || std::abs(fj - j) > 1e-6) {
            throw OutOfDomain("GridSamplesPatch: (u,v) is not a lattice node");
        }
        return grid.jet_at_node(i, j);
    };
    return SurfacePatch(std::move(eval), dom, JetSource::GridSamples, 0.0);
}

FirstForm first_form(const SecondOrderJet& jet) {
    if (!is_finite(jet)) throw NonFiniteInput("first_form: non-finite jet");
    FirstForm ff;
    ff.E = inner(jet.z_u, jet.z_u);
    ff.F = inner(jet.z_u, jet.z_v);
    ff.G = inner(jet.z_v, jet.z_v);
    const double disc = ff.E * ff.G - ff.F * ff.F;
    if (!(ff.E > 0) || !(disc > 0)) {
        throw NotSpacelike("first_form: induced metric is not positive definite (E = " +
                           std::to_string(ff.E) + ", EG - F^2 = " + std::to_string(disc) + ")");
    }
    ff.W = std::sqrt(disc);
    return ff;
}

namespace {

// Deterministic sign fix: make the largest-|.| coordinate positive.
LorentzVec canonical_sign(const LorentzVec& v) {
    int arg = 0;
    double best = std::abs(v[0]);
    for (int i = 1; i < 4; ++i) {
        if (std::abs(v[i]) > best) {
            best = std::abs(v[i]);
            arg = i;
        }
    }
    return v[arg] < 0 ? -v : v;
}

double det_columns(const LorentzVec& a, const LorentzVec& b, const LorentzVec& c,
                   const LorentzVec& d) {
    Mat4 t;
    for (int i = 0; i < 4; ++i) {
        t(i, 0) = a[i];
        t(i, 1) = b[i];
        t(i, 2) = c[i];
        t(i, 3) = d[i];
    }
    return t.det();
}

} // namespace

std::pair<LorentzVec, LorentzVec> orthonormal_normal_frame(const SecondOrderJet& jet, double tol) {
    const FirstForm ff = first_form(jet);
    // Project the basis vectors onto the normal space and keep the two most
    // independent survivors (Euclidean Gram-Schmidt for the selection only).
    const LorentzVec cand[4] = {kE1, kE2, kE3, kE4};
    auto edot = [](const LorentzVec& a, const LorentzVec& b) {
        return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4;
    };
    LorentzVec proj[4];
    for (int i = 0; i < 4; ++i) proj[i] = normal_project(jet, ff, cand[i]);
    int i1 = 0;
    for (int i = 1; i < 4; ++i)
        if (euclid_norm2(proj[i]) > euclid_norm2(proj[i1])) i1 = i;
    LorentzVec b1 = proj[i1];
    if (euclid_norm2(b1) <= 1e-24) throw DegenerateSpan("orthonormal_normal_frame: normal space collapsed");
    b1 = b1 * (1.0 / euclid_norm(b1));
    LorentzVec b2{};
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
        if (i == i1) continue;
        LorentzVec r = proj[i] - b1 * edot(proj[i], b1);
        if (euclid_norm2(r) > best) {
            best = euclid_norm2(r);
            b2 = r;
        }
    }
    if (best <= 1e-24) throw DegenerateSpan("orthonormal_normal_frame: normal space is not 2-dimensional");
    b2 = b2 * (1.0 / euclid_norm(b2));

    // Diagonalize the induced 2x2 metric on span{b1, b2}.
    const double g11 = inner(b1, b1), g12 = inner(b1, b2), g22 = inner(b2, b2);
    if (g11 * g22 - g12 * g12 >= -tol) {
        throw DegenerateSpan("orthonormal_normal_frame: normal metric is not of signature (1,1)");
    }
    const double theta = 0.5 * std::atan2(2.0 * g12, g11 - g22);
    const LorentzVec p = b1 * std::cos(theta) + b2 * std::sin(theta);
    const LorentzVec q = b1 * -std::sin(theta) + b2 * std::cos(theta);
    const double qp = inner(p, p), qq = inner(q, q);
    LorentzVec spacelike, timelike;
    if (qp > 0 && qq < 0) {
        spacelike = p;
        timelike = q;
    } else if (qq > 0 && qp < 0) {
        spacelike = q;
        timelike = p;
    } else {
        throw DegenerateSpan("orthonormal_normal_frame: eigen-split failed to separate signatures");
    }
    if (std::abs(qp) <= tol * euclid_norm2(p) || std::abs(qq) <= tol * euclid_norm2(q)) {
        throw DegenerateSpan("orthonormal_normal_frame: normal direction is lightlike within tolerance");
    }
    LorentzVec n1 = canonical_sign(spacelike * (1.0 / std::sqrt(std::abs(inner(spacelike, spacelike)))));
    LorentzVec n2 = timelike * (1.0 / std::sqrt(std::abs(inner(timelike, timelike))));
    if (det_columns(jet.z_u, jet.z_v, n1, n2) < 0) n2 = -n2;
    return {n1, n2};
}

SecondCoeffs second_coeffs(const SecondOrderJet& jet, const LorentzVec& n1, const LorentzVec& n2,
                           GramType normal_type, double tol) {
    require_finite(n1, "second_coeffs");
    require_finite(n2, "second_coeffs");
    const double scale_t = std::max(euclid_norm(jet.z_u), euclid_norm(jet.z_v));
    const double scale1 = euclid_norm(n1), scale2 = euclid_norm(n2);
    const double t1 = std::max(std::abs(inner(n1, jet.z_u)), std::abs(inner(n1, jet.z_v)));
    const double t2 = std::max(std::abs(inner(n2, jet.z_u)), std::abs(inner(n2, jet.z_v)));
    if (t1 > tol * scale1 * scale_t || t2 > tol * scale2 * scale_t) {
        throw NormalsNotNormal("second_coeffs: supplied normals are not orthogonal to the tangent plane");
    }
    // The pair must satisfy its declared Gram type.
    const Mat4 want = gram_matrix(normal_type);
    const double r = std::max({std::abs(inner(n1, n1) - want(2, 2)), std::abs(inner(n2, n2) - want(3, 3)),
                               std::abs(inner(n1, n2) - want(2, 3))});
    if (r > 1e-6 * std::max(1.0, scale1 * scale2)) {
        throw NormalsNotNormal("second_coeffs: normal pair violates its declared Gram type");
    }
    SecondCoeffs sc;
    sc.c11_1 = inner(jet.z_uu, n1);
    sc.c12_1 = inner(jet.z_uv, n1);
    sc.c22_1 = inner(jet.z_vv, n1);
    sc.c11_2 = inner(jet.z_uu, n2);
    sc.c12_2 = inner(jet.z_uv, n2);
    sc.c22_2 = inner(jet.z_vv, n2);
    sc.normal_type = normal_type;
    sc.n1 = n1;
    sc.n2 = n2;
    return sc;
}

namespace {

// sigma(d_i, d_j) reconstructed from the recorded inner products and the
// normal pair's Gram type.
LorentzVec sigma_from_coeffs(const SecondCoeffs& sc, double c1, double c2) {
    if (sc.normal_type == GramType::Orthonormal) {
        return sc.n1 * c1 - sc.n2 * c2; // <n1,n1> = 1, <n2,n2> = -1
    }
    return sc.n1 * -c2 + sc.n2 * -c1; // lightlike pair, <n1,n2> = -1
}

} // namespace

FormInvariants curvature_invariants(const FirstForm& ff, const SecondCoeffs& sc,
                                    const SecondOrderJet& jet) {
    FormInvariants fi;
    fi.L = 2.0 / ff.W * (sc.c11_1 * sc.c12_2 - sc.c12_1 * sc.c11_2);
    fi.M = 1.0 / ff.W * (sc.c11_1 * sc.c22_2 - sc.c22_1 * sc.c11_2);
    fi.N = 2.0 / ff.W * (sc.c12_1 * sc.c22_2 - sc.c22_1 * sc.c12_2);
    const double w2 = ff.W * ff.W;
    fi.k = (fi.L * fi.N - fi.M * fi.M) / w2;
    fi.kappa = (ff.E * fi.N + ff.G * fi.L - 2.0 * ff.F * fi.M) / (2.0 * w2);

    // Gauss equation in the orthonormal tangent basis x = z_u/sqrt(E),
    // y = (E z_v - F z_u) / (sqrt(E) W).
    const double a = 1.0 / std::sqrt(ff.E);
    const double bu = -ff.F / (std::sqrt(ff.E) * ff.W);
    const double bv = ff.E / (std::sqrt(ff.E) * ff.W);
    const LorentzVec s_uu = sigma_from_coeffs(sc, sc.c11_1, sc.c11_2);
    const LorentzVec s_uv = sigma_from_coeffs(sc, sc.c12_1, sc.c12_2);
    const LorentzVec s_vv = sigma_from_coeffs(sc, sc.c22_1, sc.c22_2);
    const LorentzVec sxx = s_uu * (a * a);
    const LorentzVec sxy = s_uu * (a * bu) + s_uv * (a * bv);
    const LorentzVec syy = s_uu * (bu * bu) + s_uv * (2 * bu * bv) + s_vv * (bv * bv);
    fi.K = inner(sxx, syy) - inner(sxy, sxy);
    (void)jet;
    return fi;
}

LorentzVec normal_project(const SecondOrderJet& jet, const FirstForm& ff, const LorentzVec& V) {
    const double bu = inner(V, jet.z_u);
    const double bv = inner(V, jet.z_v);
    const double det = ff.E * ff.G - ff.F * ff.F;
    const double alpha = (bu * ff.G - bv * ff.F) / det;
    const double beta = (bv * ff.E - bu * ff.F) / det;
    return V - jet.z_u * alpha - jet.z_v * beta;
}

LorentzVec mean_curvature_vector(const SecondOrderJet& jet, const FirstForm& ff) {
    const double w2 = ff.W * ff.W;
    const LorentzVec trace =
        (jet.z_uu * ff.G - jet.z_uv * (2.0 * ff.F) + jet.z_vv * ff.E) * (1.0 / (2.0 * w2));
    return normal_project(jet, ff, trace);
}

PrincipalDirections principal_directions(const FirstForm& ff, const FormInvariants& fi, double tol) {
    // det [[eta^2, -xi eta, xi^2], [E, F, G], [L, M, N]] = 0 expands to
    // A xi^2 + B xi eta + C eta^2 = 0 with the coefficients below.
    const double A = ff.E * fi.M - ff.F * fi.L;
    const double B = ff.E * fi.N - ff.G * fi.L;
    const double C = ff.F * fi.N - ff.G * fi.M;
    const double ii_scale = std::max({std::abs(fi.L), std::abs(fi.M), std::abs(fi.N)});
    const double i_scale = std::max({std::abs(ff.E), std::abs(ff.F), std::abs(ff.G)});
    const double pencil_scale = std::max(i_scale * ii_scale, tol);
    if (ii_scale <= tol * i_scale ||
        std::max({std::abs(A), std::abs(B), std::abs(C)}) <= tol * pencil_scale) {
        throw FlatPoint("principal_directions: direction equation degenerates (all directions principal)");
    }

    double xi[2], eta[2];
    if (std::abs(A) >= std::abs(C)) {
        // Roots in r = xi/eta.
        const double disc = std::max(B * B - 4.0 * A * C, 0.0);
        const double s = std::sqrt(disc);
        // Numerically stable quadratic roots.
        const double q = -0.5 * (B + (B >= 0 ? s : -s));
        const double r1 = q / A;
        const double r2 = (q != 0.0) ? C / q : 0.0;
        xi[0] = r1; eta[0] = 1.0;
        xi[1] = r2; eta[1] = 1.0;
    } else {
        // Roots in r = eta/xi.
        const double disc = std::max(B * B - 4.0 * A * C, 0.0);
        const double s = std::sqrt(disc);
        const double q = -0.5 * (B + (B >= 0 ? s : -s));
        const double r1 = q / C;
        const double r2 = (q != 0.0) ? A / q : 0.0;
        xi[0] = 1.0; eta[0] = r1;
        xi[1] = 1.0; eta[1] = r2;
    }

    // Normalize to unit length in the first form, fix signs, order.
    double nxi[2], neta[2];
    for (int i = 0; i < 2; ++i) {
        const double len2 = ff.E * xi[i] * xi[i] + 2 * ff.F * xi[i] * eta[i] + ff.G * eta[i] * eta[i];
        if (!(len2 > 0)) throw InternalError("principal_directions: nonpositive direction length");
        const double inv = 1.0 / std::sqrt(len2);
        double x = xi[i] * inv, e = eta[i] * inv;
        const double mag = std::max(std::abs(x), std::abs(e));
        if (x < -tol * mag || (std::abs(x) <= tol * mag && e < 0)) {
            x = -x;
            e = -e;
        }
        nxi[i] = x;
        neta[i] = e;
    }
    int first = 0;
    const double mag = std::max({std::abs(nxi[0]), std::abs(nxi[1]), std::abs(neta[0]), std::abs(neta[1])});
    if (nxi[1] - nxi[0] > tol * mag) {
        first = 1;
    } else if (std::abs(nxi[1] - nxi[0]) <= tol * mag && neta[1] > neta[0]) {
        first = 1;
    }
    PrincipalDirections pd;
    pd.xi1 = nxi[first];
    pd.eta1 = neta[first];
    pd.xi2 = nxi[1 - first];
    pd.eta2 = neta[1 - first];
    return pd;
}

std::pair<double, double> tangent_coefficients(const SecondOrderJet& jet, const FirstForm& ff,
                                               const LorentzVec& w) {
    const double bu = inner(w, jet.z_u);
    const double bv = inner(w, jet.z_v);
    const double det = ff.E * ff.G - ff.F * ff.F;
    return {(bu * ff.G - bv * ff.F) / det, (bv * ff.E - bu * ff.F) / det};
}

} // namespace mink4

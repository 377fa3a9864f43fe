#include "mink4/lorentz.hpp"

#include <algorithm>
#include <cstdio>

namespace mink4 {

void require_finite(const LorentzVec& v, const char* who) {
    if (!is_finite(v)) {
        throw NonFiniteInput(std::string(who) + " received a non-finite vector");
    }
}

const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Lightlike: return "lightlike";
        case CausalClass::Zero: return "zero";
    }
    return "?";
}

CausalClass causal_character(const LorentzVec& v, double tol) {
    require_finite(v, "causal_character");
    if (!(tol > 0)) throw ConfigError("causal_character: tol must be positive");
    const double n2 = euclid_norm2(v);
    if (std::sqrt(n2) <= tol) return CausalClass::Zero;
    const double q = inner(v, v);
    if (std::abs(q) <= tol * n2) return CausalClass::Lightlike;
    return q > 0 ? CausalClass::Spacelike : CausalClass::Timelike;
}

std::vector<LorentzVec> orthonormalize(std::span<const LorentzVec> vectors,
                                       std::span<const int> signature,
                                       double tol) {
    if (vectors.size() != signature.size() || vectors.empty() || vectors.size() > 4) {
        throw ConfigError("orthonormalize: need 1..4 vectors with one signature entry each");
    }
    std::vector<LorentzVec> out;
    out.reserve(vectors.size());
    std::vector<double> signs;
    for (size_t i = 0; i < vectors.size(); ++i) {
        require_finite(vectors[i], "orthonormalize");
        LorentzVec w = vectors[i];
        for (size_t j = 0; j < out.size(); ++j) {
            w -= out[j] * (signs[j] * inner(w, out[j]));
        }
        const double q = inner(w, w);
        const double n2 = euclid_norm2(w);
        if (n2 == 0.0 || std::abs(q) <= tol * n2) {
            throw DegenerateSpan("orthonormalize: intermediate vector " + std::to_string(i) +
                                 " is zero or lightlike within tolerance");
        }
        const int sign = q > 0 ? 1 : -1;
        if (sign != signature[i]) {
            throw DegenerateSpan("orthonormalize: requested signature " + std::to_string(signature[i]) +
                                 " unreachable at position " + std::to_string(i));
        }
        out.push_back(w * (1.0 / std::sqrt(std::abs(q))));
        signs.push_back(static_cast<double>(sign));
    }
    return out;
}

LorentzVec null_partner(const LorentzVec& n1, const LorentzVec& p1, const LorentzVec& p2,
                        double tol) {
    require_finite(n1, "null_partner");
    require_finite(p1, "null_partner");
    require_finite(p2, "null_partner");
    if (causal_character(n1, tol) != CausalClass::Lightlike) {
        throw NotLightlike("null_partner: n1 is not lightlike");
    }
    // The plane must be Lorentzian: Gram determinant < 0.
    const double g11 = inner(p1, p1), g12 = inner(p1, p2), g22 = inner(p2, p2);
    const double scale2 = std::max(euclid_norm2(p1), euclid_norm2(p2));
    const double detg = g11 * g22 - g12 * g12;
    if (!(detg < -tol * scale2 * scale2)) {
        throw DegeneratePlane("null_partner: plane metric is not of signature (1,1)");
    }
    // n1 must lie in the plane: <n1, p_i> vanishes for both i only when n1 is
    // orthogonal to the whole plane, which cannot happen for a lightlike
    // vector inside a nondegenerate Lorentzian plane.
    const double a1 = inner(n1, p1);
    const double a2 = inner(n1, p2);
    const double nscale = euclid_norm(n1) * std::sqrt(scale2);
    if (std::abs(a1) <= tol * nscale && std::abs(a2) <= tol * nscale) {
        throw DegeneratePlane("null_partner: n1 is orthogonal to the supplied plane");
    }
    // Residual of n1 against the plane (Euclidean least squares).
    {
        // Solve min |n1 - s p1 - t p2|_E via the Euclidean normal equations.
        auto edot = [](const LorentzVec& a, const LorentzVec& b) {
            return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3 + a.x4 * b.x4;
        };
        const double e11 = edot(p1, p1), e12 = edot(p1, p2), e22 = edot(p2, p2);
        const double b1 = edot(n1, p1), b2 = edot(n1, p2);
        const double d = e11 * e22 - e12 * e12;
        if (d <= 0) throw DegeneratePlane("null_partner: plane basis is linearly dependent");
        const double s = (b1 * e22 - b2 * e12) / d;
        const double t = (b2 * e11 - b1 * e12) / d;
        const LorentzVec r = n1 - p1 * s - p2 * t;
        if (euclid_norm(r) > 1e-7 * std::max(1.0, euclid_norm(n1))) {
            throw DegeneratePlane("null_partner: n1 does not lie in the supplied plane");
        }
    }
    // Write n2 = alpha n1 + beta q with q the plane vector most independent
    // of n1. <n1,n2> = beta <n1,q> = -1 fixes beta; <n2,n2> = 0 fixes alpha.
    const LorentzVec& q = std::abs(a1) >= std::abs(a2) ? p1 : p2;
    const double nq = std::abs(a1) >= std::abs(a2) ? a1 : a2;
    const double beta = -1.0 / nq;
    const double alpha = beta * beta * inner(q, q) / 2.0;
    LorentzVec n2 = n1 * alpha + q * beta;
    return n2;
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
}

Mat4 Mat4::eta() {
    Mat4 r = identity();
    r.m[3][3] = -1.0;
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

LorentzVec Mat4::apply(const LorentzVec& v) const {
    LorentzVec r;
    for (int i = 0; i < 4; ++i) {
        double s = 0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

double Mat4::det() const {
    // LU with partial pivoting.
    std::array<std::array<double, 4>, 4> a = m;
    double d = 1.0;
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < 4; ++r) {
            const double f = a[r][c] / a[c][c];
            for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return d;
}

Mat4 Mat4::inverse() const {
    std::array<std::array<double, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
        a[i][4 + i] = 1.0;
    }
    for (int c = 0; c < 4; ++c) {
        int p = c;
        for (int r = c + 1; r < 4; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        if (a[p][c] == 0.0) throw DegenerateSpan("Mat4::inverse: singular matrix");
        if (p != c) std::swap(a[p], a[c]);
        const double piv = a[c][c];
        for (int k = 0; k < 8; ++k) a[c][k] /= piv;
        for (int r = 0; r < 4; ++r) {
            if (r == c) continue;
            const double f = a[r][c];
            if (f == 0.0) continue;
            for (int k = 0; k < 8; ++k) a[r][k] -= f * a[c][k];
        }
    }
    Mat4 inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv.m[i][j] = a[i][4 + j];
    return inv;
}

double Mat4::max_abs() const {
    double r = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
}

Mat4 gram_matrix(GramType type) {
    Mat4 g;
    if (type == GramType::Orthonormal) {
        g = Mat4::eta();
    } else {
        g(0, 0) = 1.0;
        g(1, 1) = 1.0;
        g(2, 3) = -1.0;
        g(3, 2) = -1.0;
    }
    return g;
}

double frame_gram_residual(const LorentzFrame& f) {
    const Mat4 want = gram_matrix(f.gram);
    double r = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r = std::max(r, std::abs(inner(f.e[i], f.e[j]) - want(i, j)));
    return r;
}

double frame_det(const LorentzFrame& f) {
    Mat4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = f.e[j][i]; // columns = frame vectors
    return t.det();
}

Motion align_frames(const LorentzFrame& source, const LorentzFrame& target, double eps_frame) {
    if (source.gram != target.gram) {
        throw GramMismatch("align_frames: frames declare different Gram matrices");
    }
    const double rs = frame_gram_residual(source);
    const double rt = frame_gram_residual(target);
    if (rs > eps_frame || rt > eps_frame) {
        throw GramMismatch("align_frames: frame violates its declared Gram matrix (residuals " +
                           std::to_string(rs) + ", " + std::to_string(rt) + ")");
    }
    Mat4 ts, tt;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ts(i, j) = source.e[j][i];
            tt(i, j) = target.e[j][i];
        }
    Motion motion;
    motion.lambda = tt * ts.inverse();
    motion.translation = target.base - motion.lambda.apply(source.base);
    // The Gram check above is the correctness gate: Lambda^T eta Lambda = eta.
    const Mat4 res = motion.lambda.transpose() * Mat4::eta() * motion.lambda - Mat4::eta();
    if (res.max_abs() > 1e2 * std::max(eps_frame, 1e-12)) {
        throw GramMismatch("align_frames: computed transform is not a Lorentz map (residual " +
                           std::to_string(res.max_abs()) + ")");
    }
    return motion;
}

} // namespace mink4

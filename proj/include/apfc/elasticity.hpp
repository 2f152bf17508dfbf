#pragma once

#include <array>
#include <stdexcept>

namespace apfc {

// Symmetric 2x2 tensor, Cartesian components.
struct SymTensor2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
};

// Plane-strain isotropic constants: nu = lambda/(2(lambda+mu)), which is 1/4
// under the lambda = mu convention of this model; e_mod = mu(3 lambda + 2 mu)
// /(lambda + mu).
struct IsotropicElasticity {
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 0.25;
    double e_mod = 0.0;

    static IsotropicElasticity from_lame(double lambda, double mu) {
        if (!(mu > 0.0)) throw std::invalid_argument("IsotropicElasticity: mu must be positive");
        if (lambda < 0.0) throw std::invalid_argument("IsotropicElasticity: lambda must be >= 0");
        IsotropicElasticity el;
        el.lambda = lambda;
        el.mu = mu;
        el.nu = lambda / (2.0 * (lambda + mu));
        el.e_mod = mu * (3.0 * lambda + 2.0 * mu) / (lambda + mu);
        return el;
    }
};

// Dense rank-4 tensor over 2D indices, component (i,j,m,n) at i*8+j*4+m*2+n.
struct Rank4Tensor2D {
    std::array<double, 16> c{};

    double& operator()(int i, int j, int m, int n) { return c[(((i * 2 + j) * 2) + m) * 2 + n]; }
    double operator()(int i, int j, int m, int n) const {
        return c[(((i * 2 + j) * 2) + m) * 2 + n];
    }

    // Double contraction with a symmetric 2x2 tensor: out_ij = T_ijmn e_mn.
    SymTensor2 contract(const SymTensor2& e) const {
        const double em[2][2] = {{e.xx, e.xy}, {e.xy, e.yy}};
        double out[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int m = 0; m < 2; ++m)
                    for (int n = 0; n < 2; ++n) out[i][j] += (*this)(i, j, m, n) * em[m][n];
        return {out[0][0], 0.5 * (out[0][1] + out[1][0]), out[1][1]};
    }
};

// C_ijmn = lambda d_ij d_mn + mu (d_im d_jn + d_in d_jm).
inline Rank4Tensor2D elasticity_tensor(const IsotropicElasticity& el) {
    Rank4Tensor2D t;
    auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m)
                for (int n = 0; n < 2; ++n)
                    t(i, j, m, n) =
                        el.lambda * d(i, j) * d(m, n) + el.mu * (d(i, m) * d(j, n) + d(i, n) * d(j, m));
    return t;
}

}  // namespace apfc

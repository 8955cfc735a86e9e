#include "potts/roots.hpp"

#include <algorithm>
#include <cmath>

#include "potts/errors.hpp"

namespace potts {

namespace {

using Matrix = std::vector<std::vector<cplx>>;

// Parlett-Reinsch style balancing with powers of two; a diagonal similarity,
// so the eigenvalues are untouched.
void balance(Matrix& a) {
    int n = static_cast<int>(a.size());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double row = 0, col = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                col += std::abs(a[j][i]);
                row += std::abs(a[i][j]);
            }
            if (col == 0 || row == 0) continue;
            double f = 1.0;
            double s = col + row;
            while (col < row / 2) {
                f *= 2;
                col *= 4;
            }
            while (col > row * 2) {
                f /= 2;
                col /= 4;
            }
            if ((col + row) < 0.95 * s && f != 1.0) {
                converged = false;
                for (int j = 0; j < n; ++j) a[i][j] /= f;
                for (int j = 0; j < n; ++j) a[j][i] *= f;
            }
        }
    }
}

// Single-shift QR iteration for a complex upper Hessenberg matrix, Givens
// rotations only. Good to degree ~30, which is all the polynomial
// extraction caps allow.
std::vector<cplx> hessenberg_eigenvalues(Matrix h) {
    int n = static_cast<int>(h.size());
    std::vector<cplx> eig(n);
    int hi = n - 1;
    int iterations_left = 60 * n + 200;
    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h[0][0];
            break;
        }
        if (--iterations_left < 0) throw SearchError("eigenvalue iteration failed to converge");

        // Deflation scan.
        int lo = hi;
        while (lo > 0) {
            double off = std::abs(h[lo][lo - 1]);
            double scale = std::abs(h[lo - 1][lo - 1]) + std::abs(h[lo][lo]);
            if (scale == 0) scale = 1;
            if (off <= 1e-15 * scale) {
                h[lo][lo - 1] = 0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[hi] = h[hi][hi];
            --hi;
            continue;
        }

        // Wilkinson shift from the trailing 2x2 block.
        cplx a = h[hi - 1][hi - 1], b = h[hi - 1][hi], c = h[hi][hi - 1], d = h[hi][hi];
        cplx tr = a + d;
        cplx disc = std::sqrt(tr * tr - 4.0 * (a * d - b * c));
        cplx mu1 = (tr + disc) / 2.0, mu2 = (tr - disc) / 2.0;
        cplx shift = (std::abs(mu1 - d) < std::abs(mu2 - d)) ? mu1 : mu2;
        if (iterations_left % 17 == 0) shift = h[hi][hi] + std::abs(h[hi][hi - 1]); // stagnation kick

        // Implicit QR sweep on rows lo..hi.
        std::vector<cplx> cs(hi), sn(hi);
        for (int i = lo; i <= hi; ++i) h[i][i] -= shift;
        for (int i = lo; i < hi; ++i) {
            cplx x = h[i][i], y = h[i + 1][i];
            double norm = std::hypot(std::abs(x), std::abs(y));
            if (norm == 0) {
                cs[i] = 1;
                sn[i] = 0;
                continue;
            }
            cs[i] = x / norm;
            sn[i] = y / norm;
            for (int j = i; j <= hi; ++j) {
                cplx t1 = h[i][j], t2 = h[i + 1][j];
                h[i][j] = std::conj(cs[i]) * t1 + std::conj(sn[i]) * t2;
                h[i + 1][j] = -sn[i] * t1 + cs[i] * t2;
            }
        }
        for (int i = lo; i < hi; ++i) {
            for (int j = lo; j <= std::min(i + 1, hi); ++j) {
                cplx t1 = h[j][i], t2 = h[j][i + 1];
                h[j][i] = t1 * cs[i] + t2 * sn[i];
                h[j][i + 1] = -t1 * std::conj(sn[i]) + t2 * std::conj(cs[i]);
            }
        }
        for (int i = lo; i <= hi; ++i) h[i][i] += shift;
    }
    return eig;
}

cplx poly_eval(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

cplx poly_eval_deriv(const std::vector<cplx>& c, cplx x) {
    cplx acc = 0;
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<double>(i);
    return acc;
}

// Real-coefficient polynomials have conjugate-closed root sets, but the
// complex QR iteration does not know that; repeated roots in particular come
// back as loose clusters. Snap near-real roots onto the axis, then pair
// opposite-sign roots and average them so the returned set is
// conjugate-closed by construction. Pairing is validated by distance: a
// candidate partner further than the cluster scale is left untouched rather
// than corrupted.
void symmetrize_conjugates(std::vector<cplx>& roots) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::abs(roots[i].imag()) <= 1e-9 * (1.0 + std::abs(roots[i]))) {
            roots[i].imag(0.0);
        } else if (roots[i].imag() > 0) {
            pos.push_back(i);
        } else {
            neg.push_back(i);
        }
    }
    // Largest imaginary parts first: well-separated genuine pairs match
    // before multiple-root cluster members compete for partners.
    std::sort(pos.begin(), pos.end(),
              [&](std::size_t a, std::size_t b) { return roots[a].imag() > roots[b].imag(); });
    std::vector<std::size_t> unmatched;
    for (std::size_t i : pos) {
        double cluster_scale = 0.05 * (1.0 + std::abs(roots[i]));
        auto best = neg.end();
        double best_d = cluster_scale;
        for (auto it = neg.begin(); it != neg.end(); ++it) {
            double d = std::abs(std::conj(roots[i]) - roots[*it]);
            if (d < best_d) {
                best_d = d;
                best = it;
            }
        }
        if (best == neg.end()) {
            unmatched.push_back(i);
            continue;
        }
        cplx t = 0.5 * (roots[i] + std::conj(roots[*best]));
        roots[i] = t;
        roots[*best] = std::conj(t);
        neg.erase(best);
    }
    // Leftovers are stray multiple-root cluster members; flatten the small
    // imaginary part rather than leave an unpaired complex value.
    for (std::size_t i : unmatched) {
        if (std::abs(roots[i].imag()) <= 0.05 * (1.0 + std::abs(roots[i]))) roots[i].imag(0.0);
    }
    for (std::size_t i : neg) {
        if (std::abs(roots[i].imag()) <= 0.05 * (1.0 + std::abs(roots[i]))) roots[i].imag(0.0);
    }
}

} // namespace

double root_residual(const std::vector<cplx>& coeffs, cplx x) {
    double scale = 0;
    double xp = 1;
    for (const auto& c : coeffs) {
        scale += std::abs(c) * xp;
        xp *= std::abs(x);
    }
    if (scale == 0) scale = 1;
    return std::abs(poly_eval(coeffs, x)) / scale;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
    std::vector<cplx> c = coeffs;
    while (!c.empty() && c.back() == cplx{}) c.pop_back();
    if (c.size() <= 1) throw ContractError("poly_roots: degree must be >= 1");

    std::vector<cplx> roots;
    std::size_t low = 0;
    while (low < c.size() && c[low] == cplx{}) {
        roots.push_back(0.0);
        ++low;
    }
    c.erase(c.begin(), c.begin() + low);
    int deg = static_cast<int>(c.size()) - 1;
    if (deg >= 1) {
        Matrix comp(deg, std::vector<cplx>(deg, 0.0));
        for (int i = 1; i < deg; ++i) comp[i][i - 1] = 1.0;
        for (int i = 0; i < deg; ++i) comp[i][deg - 1] = -c[i] / c[deg];
        balance(comp);
        auto eig = hessenberg_eigenvalues(comp);
        for (cplx r : eig) {
            cplx dp = poly_eval_deriv(c, r);
            if (std::abs(dp) > 0) {
                cplx step = poly_eval(c, r) / dp;
                if (std::abs(step) < 0.5 * (1.0 + std::abs(r))) r -= step; // skip wild steps near clusters
            }
            roots.push_back(r);
        }
    }
    bool real_coeffs = true;
    for (cplx ci : coeffs) {
        if (ci.imag() != 0.0) real_coeffs = false;
    }
    if (real_coeffs) symmetrize_conjugates(roots);
    return roots;
}

std::vector<cplx> roots_in_w(const CoeffVector& c) {
    return poly_roots(c.complex_coeffs());
}

} // namespace potts

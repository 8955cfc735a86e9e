#pragma once

#include <complex>
#include <vector>

#include "potts/bigint.hpp"
#include "potts/graph.hpp"

namespace potts {

using cplx = std::complex<double>;

/// Dense coefficient sequence c_0..c_D of a univariate polynomial. Exact
/// (big integer) when produced by the counting evaluators, complex otherwise.
/// Trailing zero coefficients are retained: degree() is the stored length
/// minus one, not the mathematical degree.
class CoeffVector {
public:
    static CoeffVector from_exact(std::vector<BigUint> coeffs);
    static CoeffVector from_complex(std::vector<cplx> coeffs);

    bool is_exact() const { return exact_; }
    int degree() const { return static_cast<int>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }

    const std::vector<BigUint>& exact_coeffs() const;
    const std::vector<cplx>& complex_coeffs() const { return values_; }

    cplx eval(cplx z) const;

private:
    bool exact_ = false;
    std::vector<BigUint> ints_;
    std::vector<cplx> values_;
};

/// Cost guards for the brute-force evaluators.
struct EvalCaps {
    int max_free_vertices = 16; // colouring enumerations cost k^(free count)
    int max_edges = 24;         // subset enumerations cost 2^(edge count)
};

/// Sum over all k^n colourings of the product of w_e over monochromatic
/// edges. Compensated complex summation throughout.
cplx potts_exact(const Graph& g, int k, const EdgeWeights& w, const EvalCaps& caps = {});
cplx potts_exact(const Graph& g, int k, cplx w, const EvalCaps& caps = {});

/// Same sum restricted to colourings that respect the boundary.
cplx potts_restricted(const Graph& g, int k, const EdgeWeights& w, const Boundary& b,
                      const EvalCaps& caps = {});

/// All k values Z^{W u}_{L j}, j = 1..k, for the boundary (W,L) extended by
/// vertex u, computed in a single sweep over the free colourings.
std::vector<cplx> restricted_colour_vector(const Graph& g, int k, const EdgeWeights& w,
                                           const Boundary& b, int u, const EvalCaps& caps = {});

/// Random cluster model: sum over edge subsets F of q^{c(F)} prod_{e in F} v_e,
/// where c(F) counts connected components of (V,F), isolated vertices included.
cplx random_cluster_exact(const Graph& g, cplx q, const EdgeWeights& v, const EvalCaps& caps = {});
cplx random_cluster_exact(const Graph& g, cplx q, cplx v, const EvalCaps& caps = {});

/// Exact coefficients N_j of Z(G;k,w) = sum_j N_j w^j: the number of
/// colourings with exactly j monochromatic edges. Length is edge_count()+1.
CoeffVector potts_poly_in_w(const Graph& g, int k, const EvalCaps& caps = {});

} // namespace potts

#pragma once

#include <string>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

struct InvariantBundle {
    Vec integral;    // left integral, h L = eps(h) L
    Vec cointegral;  // right cointegral, <l,h_1>h_2 = <l,h>1, with <l,L> = 1
    Vec alpha;       // L h = alpha(h) L
    Vec alpha_bar;   // alpha o S
    SparseVec g;     // h_1 <l,h_2> = <l,h> g
    SparseVec g_bar;
    std::size_t integral_kernel_dim = 0;
    std::size_t cointegral_kernel_dim = 0;
    bool unimodular = false;       // alpha = eps
    bool dual_unimodular = false;  // g = 1
    CheckList checks;              // post-computation self-checks
};

// Kernel of the stacked system (L_h - eps(h)) x = 0. Only generators of H
// are stacked: the set of h satisfying the identity is a subalgebra.
Vec left_integral(const HopfAlgebra& h, std::size_t* kernel_dim = nullptr, Exec exec = Exec::parallel);
Vec right_cointegral(const HopfAlgebra& h, std::size_t* kernel_dim = nullptr, Exec exec = Exec::parallel);
// Rescales the cointegral so that <cointegral, integral> = 1.
void normalize_pair(const Vec& integral, Vec& cointegral);
Vec modular_function(const HopfAlgebra& h, const Vec& integral);
SparseVec distinguished_grouplike(const HopfAlgebra& h, const Vec& cointegral);

// Full bundle with self-checks; memoized by content hash. Throws
// VerificationError when a kernel is not one-dimensional or the pairing
// vanishes (impossible for genuine Hopf data).
const InvariantBundle& invariants(const HopfAlgebra& h, Exec exec = Exec::parallel);

// x -> g.x as a module map k_abar (x) X -> X_{S^4} (x) k_abar, X regular.
bool verify_radford(const HopfPtr& h, const InvariantBundle& b, std::string* witness = nullptr);
bool verify_pivotal(const HopfAlgebra& h, const SparseVec& g, std::string* witness = nullptr);

// Convolution of covectors on H: (a * b)(h) = a(h_1) b(h_2).
Vec convolve(const HopfAlgebra& h, const Vec& a, const Vec& b);

// Exponent e with alpha(K) = root^e when alpha(K) is a power of the
// field's designated root; -1 otherwise.
int root_exponent(const Scalar& s);

}  // namespace hopfkit

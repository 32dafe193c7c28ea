#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/bimodule.hpp"

namespace hopfkit {

// Left-left Yetter-Drinfeld module over H. action[h] has column x = e_h . e_x;
// coaction[x] is over the pair index h*dim+y of e_h (x) e_y.
struct YDModule {
    HopfPtr hopf;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::vector<Matrix> action;
    std::vector<SparseVec> coaction;

    Matrix act(const SparseVec& h) const;
    SparseVec coact(const SparseVec& x) const;
    ModuleRep as_module() const;
};

// Module and comodule axioms plus (h.x)_{-1} (x) (h.x)_0 = h_1 x_{-1} S(h_3) (x) h_2 x_0.
// The compatibility is checked for algebra generators h: the set of h for
// which it holds is closed under products.
CheckList verify_yd(const YDModule& x, Exec exec = Exec::parallel);

YDModule trivial_yd(const HopfPtr& h);
// H with the adjoint action h.x = h_1 x S(h_2) and coaction Delta.
YDModule adjoint_yd(const HopfPtr& h);
// H with left multiplication and coaction x_1 S(x_3) (x) x_2.
YDModule coadjoint_yd(const HopfPtr& h);
// A module V whose coaction is v -> g (x) v for a central grouplike g.
YDModule graded_yd(const ModuleRep& v, const SparseVec& g);

YDModule yd_tensor(const YDModule& x, const YDModule& y);
// c(x (x) y) = x_{-1}.y (x) x_0 as a matrix X(x)Y -> Y(x)X (pair indices x*dimY+y, y*dimX+x).
Matrix braiding(const YDModule& x, const YDModule& y);
Matrix swap_matrix(const Field& f, std::size_t dx, std::size_t dy);

bool is_yd_morphism(const YDModule& x, const YDModule& y, const Matrix& t, std::string* witness = nullptr);

// c_{X(x)Y,Z} = (c_{X,Z} (x) id)(id (x) c_{Y,Z}) and c_{X,Y(x)Z} = (id (x) c_{X,Z})(c_{X,Y} (x) id).
CheckList verify_hexagons(const YDModule& x, const YDModule& y, const YDModule& z);

enum class DualSide { right, left };

// Right dual X* (ev: X*(x)X -> k, coev: k -> X(x)X*, action f(S(h)-)) or
// left dual (ev: X(x)X* -> k, coev: k -> X*(x)X, action f(S^-1(h)-)). The
// coaction is the unique one making ev a comodule map; coev, YD axioms and
// zig-zags are then checked.
struct YDDual {
    YDModule dual;
    DualSide side = DualSide::right;
    SparseVec ev;    // covector on the pair index of the ev source
    SparseVec coev;  // vector on the pair index of the coev target
    std::size_t solution_kernel_dim = 0;
    CheckList checks;
};

YDDual yd_dual(const YDModule& x, DualSide side = DualSide::right, Exec exec = Exec::parallel);

// x -> g.x under the canonical identification X** = X (basis of the double dual).
struct YDPivot {
    Matrix map;
    YDModule double_dual;
    CheckList checks;
};
YDPivot yd_pivot(const YDModule& x, const SparseVec& g, Exec exec = Exec::parallel);

// T^L(H,P) = {f : H -> P | l > f(h) = f(l_{-1} h) < l_0}, functions vectorized
// as x[h*dimP+p]; action (h * f)(h') = f(h'h), coaction
// S(h_1) f(h_2)_{-1} h_3 (x) f(h_2)_0.
struct TSpace {
    BimodulePtr target;
    Subspace functions;
    YDModule module;
    CheckList checks;

    // Value f(x) of the i-th basis function (or of coordinates c).
    SparseVec value(const Vec& coords, const SparseVec& h) const;
};

TSpace t_space(const BimodulePtr& p, Exec exec = Exec::parallel);

// Algebra in the YD category; mult column x*dim+y holds x.y.
struct YDAlgebra {
    YDModule module;
    Matrix mult;
    SparseVec unit;

    SparseVec mul(const SparseVec& x, const SparseVec& y) const;
};

CheckList verify_yd_algebra(const YDAlgebra& a, Exec exec = Exec::parallel);
bool is_commutative(const YDAlgebra& a, std::string* witness = nullptr);

// An algebra in the category of H-comodule L-bimodules.
struct BimoduleAlgebra {
    BimodulePtr object;
    std::vector<SparseVec> mult;  // mult[a*dim+b]
    SparseVec unit;
};

BimoduleAlgebra regular_bimodule_algebra(const ComodulePtr& l);
// dagger P (x)_L P with (f (x) p)(f' (x) p') = f (x) ev(p (x) f') > p' and unit coev(1).
BimoduleAlgebra endomorphism_algebra(const LeftDual& d);

struct NatAlgebra {
    TSpace space;
    YDAlgebra algebra;
    CheckList checks;
};

// T^L(H, Q) with (f.g)(h) = f(h_1) g(h_2) in Q and unit eps(h) 1_Q.
NatAlgebra nat_algebra(const BimoduleAlgebra& q, Exec exec = Exec::parallel);

enum class FormKind { automatic, integral, right_integral, cointegral, yd };
FormKind parse_form_kind(const std::string& s);
std::string to_string(FormKind k);

// The canonical forms: f(Lambda) with a left or right integral (L = k), <lambda, f(1)>
// with the right cointegral (L = H), or the unique YD-invariant form. Resolves
// automatic from the shape of L. Returns nullopt if the requested form is
// not defined for this algebra.
std::optional<Vec> canonical_form(const NatAlgebra& a, FormKind kind, FormKind* resolved = nullptr,
                                  std::vector<std::string>* warnings = nullptr);

struct FrobeniusFormReport {
    bool yd_morphism = false;
    std::string yd_witness;
    std::size_t pairing_rank = 0;
    bool nondegenerate = false;
    std::optional<bool> frobenius_axioms;       // evaluated when nondegenerate
    std::optional<bool> coproduct_yd_morphism;  // evaluated when nondegenerate
    bool commutative = false;
    std::optional<bool> symmetric;              // evaluated with a verified pivot
    std::vector<std::string> notes;
    Matrix pairing;
    CheckList checks;
};

FrobeniusFormReport frobenius_form_check(const YDAlgebra& a, const Vec& form,
                                         const std::optional<SparseVec>& pivot = std::nullopt,
                                         Exec exec = Exec::parallel);

}  // namespace hopfkit

#ifndef SSMTHOM_SYMFUN_HPP
#define SSMTHOM_SYMFUN_HPP

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ssmthom/partition.hpp"
#include "ssmthom/poly.hpp"

namespace ssmthom {

// Binomial coefficient with the convention C(n, k<0) = 0; negative upper
// index follows the falling-factorial definition.
mpz_class binomial(const mpz_class& n, long k);

// Elementary / complete homogeneous symmetric polynomials of the given
// values (which may themselves be polynomials). e_0 = h_0 = 1, and
// e_k vanishes once k exceeds the number of values.
Poly elem_sym(const RingPtr& ring, int k, std::span<const Poly> values);
Poly complete_sym(const RingPtr& ring, int k, std::span<const Poly> values);

// Convenience overloads for plain ring variables.
Poly elem_sym(const RingPtr& ring, int k, std::span<const VarId> vars);
Poly complete_sym(const RingPtr& ring, int k, std::span<const VarId> vars);

// The degree-m Segre-style polynomial S_(m) in given "Chern" values, by the
// recursion S_(m) = sum_{i=1..m} (-1)^{i+1} c_i S_(m-i), S_(0) = 1.
// c_values[i] stands for c_{i+1}; at least m values are required.
Poly s_det_eval(const RingPtr& ring, std::span<const Poly> c_values, int m);

// Shared symbol table for polynomials in quotient Chern classes c_i and
// Landweber-Novikov classes s_lambda. Grading: deg c_i = i,
// deg s_lambda = ell + |lambda|. Variables are ordered c_1 < c_2 < ... <
// s_0 < s_1 < s_11 < s_2 < ..., which fixes the printed term order.
struct ClassSymbols {
    int ell = 0;
    int nmax = 0;  // largest codegree carried: c up to c_{ell+nmax}, |lambda| <= nmax
    RingPtr ring;
    std::vector<VarId> c;                // c[i] = variable for c_{i+1}
    std::map<Partition, VarId> s;

    Poly c_poly(int i) const;            // c_i, 1 <= i <= ell+nmax
    Poly s_poly(const Partition& lam) const;
};

ClassSymbols make_class_symbols(int ell, int nmax);

// S_(m) written in the symbol table's c-variables.
Poly s_det(const ClassSymbols& sym, int m);

// Replaces each pure c-monomial kappa * c_{l1} c_{l2} ... by kappa *
// s_{(l1,l2,...)}; the constant kappa maps to kappa * s_0. Input containing
// an s-variable (or any non-c variable) is a domain error.
Poly c_to_s_swap(const ClassSymbols& sym, const Poly& p);

// --- algebraic identity suite ----------------------------------------------

struct IdentityParams {
    int max_mn = 8;     // families (a), (b): m, n sweep bound
    int max_ell = 4;    // families (c)-(f): number of roots
    int extra = 3;      // families (c), (d), (f): m, N run to ell + extra
    int max_k = 6;      // family (e): k sweep bound
    int max_r = 30;     // family (g): r sweep bound
};

struct IdentityOutcome {
    char family = '?';
    std::string description;
    int cases = 0;
    bool pass = false;
};

// Runs the seven identity families (a)-(g) exhaustively over the sweep given
// by params; outcome.pass is the conjunction over all cases in the family.
std::vector<IdentityOutcome> identity_suite(const IdentityParams& params = {});

}  // namespace ssmthom

#endif

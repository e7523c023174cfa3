#ifndef SSMTHOM_CLASSPOLY_HPP
#define SSMTHOM_CLASSPOLY_HPP

#include <map>
#include <string>

#include "ssmthom/symfun.hpp"

namespace ssmthom {

enum class SingularityId { A0, A02, A1 };

const char* singularity_name(SingularityId s);
SingularityId parse_singularity(const std::string& name);  // "A0" | "A02" | "A1"

// Element of the class ring attached to a fixed codimension ell; poly lives
// in a ClassSymbols ring.
struct ClassPoly {
    int ell = 0;
    Poly poly;
};

// Degree-(ell+N) component of the class series for one singularity type.
// N must satisfy 0 <= N < ell.
ClassPoly ssm_a0_component(const ClassSymbols& sym, int N);
ClassPoly ssm_a02_component(const ClassSymbols& sym, int N);
ClassPoly ssm_a1_component(const ClassSymbols& sym, int N);
ClassPoly ssm_component(const ClassSymbols& sym, SingularityId sing, int N);

// Sum of the components for N = 0..nmax; for A0 this additionally carries
// the constant term 1 (degrees 1..ell-1 are zero).
ClassPoly ssm_truncated(const ClassSymbols& sym, SingularityId sing, int nmax);

// Evaluates a class polynomial in a target ring by substituting every c_i
// and s_lambda. Any nonzero binding must be homogeneous of the symbol's
// degree (i for c_i, ell+|lambda| for s_lambda); every symbol occurring in
// cp must be bound.
Poly thom_evaluate(const ClassSymbols& sym, const ClassPoly& cp, const RingPtr& target,
                   const std::map<int, Poly>& c_bindings,
                   const std::map<Partition, Poly>& s_bindings);

namespace detail {
// Raw formula evaluators without the N < ell range guard. The degree range
// extends to N = ell for the hyperplane-bundle evaluation, where every
// series in sight is finite; the public generators keep the hard error.
Poly a02_formula(const ClassSymbols& sym, int N);
Poly a1_formula(const ClassSymbols& sym, int N);
Poly a0_formula(const ClassSymbols& sym, int N);
}  // namespace detail

}  // namespace ssmthom

#endif

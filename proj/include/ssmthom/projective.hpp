#ifndef SSMTHOM_PROJECTIVE_HPP
#define SSMTHOM_PROJECTIVE_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "ssmthom/classpoly.hpp"

namespace ssmthom {

// Degree-d map of projective spaces P^{ell+1} -> P^{2ell+1}, with h the
// hyperplane class of the source. All classes live in Z[h]/(h^{ell+2}).
struct ProjectiveSetup {
    int ell;
    long d;
    RingPtr ring;       // single variable h of degree 1
    VarId h;
    Poly chern_series;  // c(q) = (1+dh)^{2ell+2} / (1+h)^{ell+2}, truncated
};

ProjectiveSetup make_projective_setup(int ell, long d);

// Degree-k piece of the quotient Chern series (series-division route).
Poly chern_binding(const ProjectiveSetup& setup, int k);

// The same coefficient from the closed binomial sum (independent route).
mpz_class chern_coeff_closed(int ell, long d, int k);

// Coefficient of h^ell in the quotient Chern series, by its closed sum.
mpz_class sigma(int ell, long d);

// s_0 = d^{2ell+1} h^ell and s_1 = d^{2ell+1} (2(ell+1)d - ell - 2) h^{ell+1};
// only the empty partition and (1) arise at this truncation order.
Poly landweber_binding(const ProjectiveSetup& setup, const Partition& lam);

struct LociSsm {
    Poly a0, a02, a1;
};

// Class series of the three singularity loci evaluated at the hyperplane
// bundle data, through degree h^{ell+1}.
LociSsm loci_ssm(const ProjectiveSetup& setup);

// csm = ssm * c(T P^{ell+1}) = ssm * (1+h)^{ell+2}, truncated at h^{ell+1}.
Poly csm_from_ssm(const Poly& ssm, int ell);

// Shared univariate ring for the degree-tracking variable t.
RingPtr t_ring();

// Reverses the csm coefficients into t: coeff of h^k -> coeff of t^{ell+1-k}.
Poly gamma_poly(const Poly& csm, int ell);

// The involution I(p) = p(0) - t * p_+(-t-1), where p = p(0) + t p_+(t).
// It is an involution on polynomials in t and fixes constants.
Poly aluffi_involution(const Poly& p);

enum class LocusId { A0, A02, A1, Closure };
const char* locus_name(LocusId id);

struct ProjectiveReport {
    int ell = 0;
    long d = 1;
    std::map<LocusId, Poly> ssm;     // in h
    std::map<LocusId, Poly> chi;     // involuted gamma, in t
    std::map<LocusId, mpz_class> euler;                 // chi of the open locus
    std::map<LocusId, std::vector<mpz_class>> sections; // [r] = chi(locus cap H_1..H_r)
    mpz_class degree;                // of the image closure = chi(closure cap H)
};

// Full pipeline ssm -> csm -> gamma -> involution for one (ell, d); every
// extracted number is checked to be an integer.
ProjectiveReport projective_report(int ell, long d);

struct CiCandidate {
    std::vector<long> factors;  // nondecreasing, product = degree
    mpz_class chi_ci;           // Euler characteristic of that complete intersection
    bool matches = false;       // chi_ci == chi(closure)
};

struct CiReport {
    int ell = 0;
    long d = 1;
    mpz_class degree;
    mpz_class chi_closure;
    std::vector<CiCandidate> candidates;
    bool any_feasible = false;
};

// Enumerates all unordered factorizations of the closure degree into ell
// positive factors and tests each complete-intersection Euler characteristic
// against chi(closure). degree 0 yields no candidates.
CiReport ci_feasible(int ell, long d);

}  // namespace ssmthom

#endif

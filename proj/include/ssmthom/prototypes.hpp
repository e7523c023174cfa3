#ifndef SSMTHOM_PROTOTYPES_HPP
#define SSMTHOM_PROTOTYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssmthom/classpoly.hpp"

namespace ssmthom {

enum class PrototypeId { A0, A02, A1 };

const char* prototype_name(PrototypeId p);  // "P_A0" | "P_A02" | "P_A1"

// Torus-equivariant model germ of codimension ell. The ring holds the weight
// variables ("roots"): P_A0 has alpha_1..alpha_ell; P_A02 has alpha_i (second
// branch source) and beta_i; P_A1 has a single alpha plus beta_1..beta_ell.
struct Prototype {
    PrototypeId id;
    int ell = 0;
    RingPtr ring;
    std::vector<VarId> alpha;
    std::vector<VarId> beta;
};

Prototype make_prototype(PrototypeId id, int ell);

// Quotient Chern classes of the prototype, c_0..c_max_deg (c_0 = 1). For
// P_A0 and P_A02 (first branch) these vanish above degree ell; for P_A1 the
// whole series is computed by series division.
std::vector<Poly> proto_chern(const Prototype& proto, int max_deg);

// Landweber-Novikov class s_lambda of the prototype (pushed-forward product
// over branches for P_A02, c_lambda times the pushed 1 for the monogerms).
Poly proto_landweber(const Prototype& proto, const Partition& lam, const std::vector<Poly>& chern);

// Evaluates a class polynomial in the prototype's roots. max_deg bounds the
// degrees in play; every c_i or s_lambda occurring in cp must have
// i <= max_deg resp. ell + |lambda| <= max_deg.
Poly psi(const Prototype& proto, const ClassSymbols& sym, const ClassPoly& cp, int max_deg);

// Independently known class of a singularity locus inside the prototype,
// as the degree-(ell+N) part of the defining rational-function series.
Poly locus_ssm_rhs(const Prototype& proto, SingularityId sing, int N);

struct VerificationReport {
    SingularityId formula;
    PrototypeId prototype;
    int ell = 0;
    int n = 0;
    Poly lhs, rhs, residual;
    bool pass = false;
};

// Adds delta to one coefficient of the computed class series (negative
// control). term_index runs over the concatenated canonical terms of the A02
// components N = 0..ell-1.
struct Perturbation {
    int term_index = 0;
    Rational delta = Rational(1);
};

// Number of perturbable coefficients at this ell.
int perturbation_slots(int ell);

// Compares psi(formula) against the known locus class at degree ell+N for
// one case / for the full grid sing x proto x N (0 <= N < ell), in
// deterministic order.
VerificationReport verify(const ClassSymbols& sym, SingularityId sing, const Prototype& proto, int N);
std::vector<VerificationReport> verify_all(int ell,
                                           const std::optional<Perturbation>& perturb = std::nullopt);

}  // namespace ssmthom

#endif

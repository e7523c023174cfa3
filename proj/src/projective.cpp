#include "ssmthom/projective.hpp"

#include <stdexcept>

namespace ssmthom {

namespace {

mpz_class pow_z(long base, int exp) {
    mpz_class r, b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

ProjectiveSetup make_projective_setup(int ell, long d) {
    if (ell < 1) throw std::invalid_argument("make_projective_setup: ell must be >= 1");
    if (d < 1) throw std::invalid_argument("make_projective_setup: d must be >= 1");

    RingPtr ring = Ring::make({{"h", 1, "h"}});
    const VarId hv = ring->require("h");
    const Poly h = Poly::variable(ring, hv);
    const Poly one = Poly::constant(ring, Rational(1));
    Poly num = (one + h * Rational(d)).pow(2 * ell + 2).truncate(ell + 1);
    Poly den = (one + h).pow(ell + 2).truncate(ell + 1);
    return {ell, d, ring, hv, series_quotient(num, den, ell + 1)};
}

Poly chern_binding(const ProjectiveSetup& setup, int k) {
    if (k < 0 || k > setup.ell + 1)
        throw std::out_of_range("chern_binding: k out of the truncation range");
    return setup.chern_series.graded_part(k);
}

mpz_class chern_coeff_closed(int ell, long d, int k) {
    // [h^k] (1+dh)^{2l+2} (1+h)^{-(l+2)}
    //   = (-1)^k sum_a C(2l+2, a) C(k-a+l+1, l+1) (-d)^a
    mpz_class acc = 0;
    for (int a = 0; a <= k; ++a) {
        mpz_class term = binomial(2 * ell + 2, a) * binomial(k - a + ell + 1, ell + 1);
        term *= pow_z(d, a);
        acc += (a % 2 == 0) ? term : -term;
    }
    return (k % 2 == 0) ? acc : mpz_class(-acc);
}

mpz_class sigma(int ell, long d) {
    mpz_class acc = 0;
    for (int a = 0; a <= ell; ++a) {
        mpz_class term = binomial(2 * ell + 2, a) * binomial(2 * ell - a + 1, ell + 1);
        term *= pow_z(d, a);
        acc += ((ell - a) % 2 == 0) ? term : -term;
    }
    return acc;
}

Poly landweber_binding(const ProjectiveSetup& setup, const Partition& lam) {
    const mpz_class dpow = pow_z(setup.d, 2 * setup.ell + 1);
    const Poly h = Poly::variable(setup.ring, setup.h);
    if (lam.empty()) return h.pow(setup.ell) * Rational(dpow);
    if (lam.parts() == std::vector<int>{1}) {
        mpz_class c1 = 2 * (setup.ell + 1) * mpz_class(setup.d) - (setup.ell + 2);
        mpz_class coeff = dpow * c1;
        return h.pow(setup.ell + 1) * Rational(coeff);
    }
    throw std::out_of_range("landweber_binding: only s_0 and s_1 arise at this order");
}

LociSsm loci_ssm(const ProjectiveSetup& setup) {
    const int ell = setup.ell;
    ClassSymbols sym = make_class_symbols(ell, 1);

    std::map<int, Poly> c_bindings;
    for (int k = 1; k <= ell + 1; ++k) c_bindings.emplace(k, chern_binding(setup, k));
    std::map<Partition, Poly> s_bindings;
    s_bindings.emplace(Partition{}, landweber_binding(setup, Partition{}));
    s_bindings.emplace(Partition{1}, landweber_binding(setup, Partition{1}));

    // components through codegree 1; at ell = 1 this needs the raw formula
    // evaluators (finite series, same expressions)
    Poly a02 = detail::a02_formula(sym, 0) + detail::a02_formula(sym, 1);
    Poly a1 = detail::a1_formula(sym, 0) + detail::a1_formula(sym, 1);
    Poly a0 = Poly::constant(sym.ring, Rational(1)) - (a02 + a1);

    auto eval = [&](const Poly& p) {
        return thom_evaluate(sym, {ell, p}, setup.ring, c_bindings, s_bindings);
    };
    return {eval(a0), eval(a02), eval(a1)};
}

Poly csm_from_ssm(const Poly& ssm, int ell) {
    const RingPtr& R = ssm.ring();
    Poly tangent = (Poly::constant(R, Rational(1)) + Poly::variable(R, R->require("h")))
                       .pow(ell + 2);
    return mul_truncated(ssm, tangent, ell + 1);
}

RingPtr t_ring() {
    static RingPtr ring = Ring::make({{"t", 1, "t"}});
    return ring;
}

Poly gamma_poly(const Poly& csm, int ell) {
    const VarId h = csm.ring()->require("h");
    Poly g(t_ring());
    for (const auto& [key, coeff] : csm.terms()) {
        const int k = key.second[h];
        if (k > ell + 1) throw grading_error("gamma_poly: csm exceeds h^{ell+1}");
        g.add_term(Exponents(1, ell + 1 - k), coeff);
    }
    return g;
}

Poly aluffi_involution(const Poly& p) {
    if (p.ring()->size() != 1)
        throw std::invalid_argument("aluffi_involution: expected a univariate polynomial");
    const RingPtr& R = p.ring();
    const int deg = std::max(p.max_degree(), 0);

    std::vector<Rational> a(deg + 1, Rational(0));
    for (const auto& [key, coeff] : p.terms()) a[key.second[0]] = coeff;

    // p = a0 + t p_+(t); I(p) = a0 - t p_+(-t-1), evaluated by Horner
    const Poly t = Poly::variable(R, 0);
    const Poly mt1 = -t - Poly::constant(R, Rational(1));
    Poly acc(R);
    for (int k = deg; k >= 1; --k) acc = acc * mt1 + Poly::constant(R, a[k]);
    return Poly::constant(R, a[0]) - t * acc;
}

const char* locus_name(LocusId id) {
    switch (id) {
        case LocusId::A0: return "A0";
        case LocusId::A02: return "A02";
        case LocusId::A1: return "A1";
        case LocusId::Closure: return "closure";
    }
    throw std::logic_error("locus_name: bad id");
}

ProjectiveReport projective_report(int ell, long d) {
    ProjectiveSetup setup = make_projective_setup(ell, d);
    ProjectiveReport rep;
    rep.ell = ell;
    rep.d = d;

    LociSsm loci = loci_ssm(setup);
    rep.ssm.emplace(LocusId::A0, loci.a0);
    rep.ssm.emplace(LocusId::A02, loci.a02);
    rep.ssm.emplace(LocusId::A1, loci.a1);
    rep.ssm.emplace(LocusId::Closure, loci.a02 + loci.a1);

    for (const auto& [locus, ssm] : rep.ssm) {
        Poly chi = aluffi_involution(gamma_poly(csm_from_ssm(ssm, ell), ell));
        std::vector<mpz_class> secs;
        for (int r = 0; r <= ell + 1; ++r) {
            Rational c = chi.coefficient(Exponents(1, r));
            mpz_class v = c.to_integer();  // integrality assertion
            secs.push_back(r % 2 == 0 ? v : mpz_class(-v));
        }
        rep.euler.emplace(locus, secs[0]);
        rep.sections.emplace(locus, std::move(secs));
        rep.chi.emplace(locus, std::move(chi));
    }
    rep.degree = rep.sections.at(LocusId::Closure)[1];
    return rep;
}

namespace {

void enumerate_factorizations(long remaining, long min_factor, int slots,
                              std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (slots == 1) {
        if (remaining >= min_factor) {
            cur.push_back(remaining);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (long f = min_factor; ; ++f) {
        // factors are nondecreasing, so f^slots must not exceed remaining
        mpz_class fpow;
        mpz_ui_pow_ui(fpow.get_mpz_t(), static_cast<unsigned long>(f),
                      static_cast<unsigned long>(slots));
        if (fpow > remaining) break;
        if (remaining % f == 0) {
            cur.push_back(f);
            enumerate_factorizations(remaining / f, f, slots - 1, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

CiReport ci_feasible(int ell, long d) {
    if (ell < 2) throw std::invalid_argument("ci_feasible: ell must be >= 2");
    if (d < 1) throw std::invalid_argument("ci_feasible: d must be >= 1");

    ProjectiveReport rep = projective_report(ell, d);
    CiReport out;
    out.ell = ell;
    out.d = d;
    out.degree = rep.degree;
    out.chi_closure = rep.euler.at(LocusId::Closure);

    if (out.degree > 0) {
        if (!out.degree.fits_slong_p())
            throw std::overflow_error("ci_feasible: closure degree too large to factor");
        std::vector<std::vector<long>> factorizations;
        std::vector<long> cur;
        enumerate_factorizations(out.degree.get_si(), 1, ell, cur, factorizations);
        for (const auto& f : factorizations) {
            CiCandidate cand;
            cand.factors = f;
            mpz_class prod = 1, sum = 0;
            for (long x : f) { prod *= x; sum += x; }
            cand.chi_ci = -prod * (sum - (ell + 2));
            cand.matches = (cand.chi_ci == out.chi_closure);
            out.any_feasible = out.any_feasible || cand.matches;
            out.candidates.push_back(std::move(cand));
        }
    }
    return out;
}

}  // namespace ssmthom

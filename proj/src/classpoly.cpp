#include "ssmthom/classpoly.hpp"

#include <stdexcept>

namespace ssmthom {

const char* singularity_name(SingularityId s) {
    switch (s) {
        case SingularityId::A0: return "A0";
        case SingularityId::A02: return "A02";
        case SingularityId::A1: return "A1";
    }
    throw std::logic_error("singularity_name: bad id");
}

SingularityId parse_singularity(const std::string& name) {
    if (name == "A0") return SingularityId::A0;
    if (name == "A02") return SingularityId::A02;
    if (name == "A1") return SingularityId::A1;
    throw std::invalid_argument("unknown singularity '" + name + "' (expected A0, A02 or A1)");
}

namespace detail {

Poly a02_formula(const ClassSymbols& sym, int N) {
    const int ell = sym.ell;
    // (-1)^{N+1} sum_{k=0..N} S_(N-k) C(ell+N-1, k) c_{ell+k}  +  (-1)^N S^LN_(N)
    Poly acc(sym.ring);
    for (int k = 0; k <= N; ++k) {
        Rational coeff{binomial(ell + N - 1, k)};
        acc += s_det(sym, N - k) * sym.c_poly(ell + k) * coeff;
    }
    Poly ln = c_to_s_swap(sym, s_det(sym, N));
    if (N % 2 == 0) return -acc + ln;
    return acc - ln;
}

Poly a1_formula(const ClassSymbols& sym, int N) {
    const int ell = sym.ell;
    // (-1)^{N-1} sum_{k=0..N-1} S_(N-1-k) C(ell+N-2, k) c_{ell+k+1}
    Poly acc(sym.ring);
    for (int k = 0; k <= N - 1; ++k) {
        Rational coeff{binomial(ell + N - 2, k)};
        acc += s_det(sym, N - 1 - k) * sym.c_poly(ell + k + 1) * coeff;
    }
    if (N % 2 == 0) return -acc;
    return acc;
}

Poly a0_formula(const ClassSymbols& sym, int N) {
    // The three singularity classes partition the fundamental class, so in
    // every positive degree the A0 component is minus the sum of the others.
    return -(a02_formula(sym, N) + a1_formula(sym, N));
}

}  // namespace detail

namespace {

void check_component_range(const ClassSymbols& sym, int N) {
    if (N < 0 || N >= sym.ell)
        throw std::out_of_range("ssm component: N must satisfy 0 <= N < ell (got N=" +
                                std::to_string(N) + ", ell=" + std::to_string(sym.ell) + ")");
    if (N > sym.nmax)
        throw std::out_of_range("ssm component: N exceeds the context's nmax");
}

}  // namespace

ClassPoly ssm_a02_component(const ClassSymbols& sym, int N) {
    check_component_range(sym, N);
    return {sym.ell, detail::a02_formula(sym, N)};
}

ClassPoly ssm_a1_component(const ClassSymbols& sym, int N) {
    check_component_range(sym, N);
    return {sym.ell, detail::a1_formula(sym, N)};
}

ClassPoly ssm_a0_component(const ClassSymbols& sym, int N) {
    check_component_range(sym, N);
    return {sym.ell, detail::a0_formula(sym, N)};
}

ClassPoly ssm_component(const ClassSymbols& sym, SingularityId sing, int N) {
    switch (sing) {
        case SingularityId::A0: return ssm_a0_component(sym, N);
        case SingularityId::A02: return ssm_a02_component(sym, N);
        case SingularityId::A1: return ssm_a1_component(sym, N);
    }
    throw std::logic_error("ssm_component: bad id");
}

ClassPoly ssm_truncated(const ClassSymbols& sym, SingularityId sing, int nmax) {
    Poly acc(sym.ring);
    if (sing == SingularityId::A0) acc += Poly::constant(sym.ring, Rational(1));
    for (int N = 0; N <= nmax; ++N) acc += ssm_component(sym, sing, N).poly;
    return {sym.ell, acc};
}

Poly thom_evaluate(const ClassSymbols& sym, const ClassPoly& cp, const RingPtr& target,
                   const std::map<int, Poly>& c_bindings,
                   const std::map<Partition, Poly>& s_bindings) {
    check_same_ring(cp.poly.ring(), sym.ring, "thom_evaluate");
    if (cp.ell != sym.ell) throw grading_error("thom_evaluate: ell mismatch");

    std::map<VarId, Poly> bindings;
    for (const auto& [i, b] : c_bindings) {
        check_same_ring(b.ring(), target, "thom_evaluate: c binding ring");
        if (!b.is_zero() && !(b.is_homogeneous() && b.max_degree() == i))
            throw grading_error("thom_evaluate: binding for c_" + std::to_string(i) +
                                " is not homogeneous of degree " + std::to_string(i));
        bindings.emplace(sym.ring->require("c_" + std::to_string(i)), b);
    }
    for (const auto& [lam, b] : s_bindings) {
        const int want = sym.ell + lam.weight();
        check_same_ring(b.ring(), target, "thom_evaluate: s binding ring");
        if (!b.is_zero() && !(b.is_homogeneous() && b.max_degree() == want))
            throw grading_error("thom_evaluate: binding for s_" + lam.digits() +
                                " is not homogeneous of degree " + std::to_string(want));
        bindings.emplace(sym.ring->require("s_" + lam.digits()), b);
    }

    // full binding required: no class symbol may leak through
    for (const auto& [key, coeff] : cp.poly.terms()) {
        (void)coeff;
        for (VarId v = 0; v < key.second.size(); ++v)
            if (key.second[v] != 0 && !bindings.contains(v))
                throw substitution_error("thom_evaluate: symbol '" + sym.ring->var(v).name +
                                         "' has no binding");
    }
    return substitute(cp.poly, target, bindings);
}

}  // namespace ssmthom

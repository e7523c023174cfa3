#include "ssmthom/prototypes.hpp"

#include <array>
#include <stdexcept>

namespace ssmthom {

const char* prototype_name(PrototypeId p) {
    switch (p) {
        case PrototypeId::A0: return "P_A0";
        case PrototypeId::A02: return "P_A02";
        case PrototypeId::A1: return "P_A1";
    }
    throw std::logic_error("prototype_name: bad id");
}

Prototype make_prototype(PrototypeId id, int ell) {
    if (ell < 1) throw std::invalid_argument("make_prototype: ell must be >= 1");
    Prototype proto;
    proto.id = id;
    proto.ell = ell;

    std::vector<Variable> vars;
    auto add = [&](const std::string& name, const std::string& latex) {
        vars.push_back({name, 1, latex});
    };
    switch (id) {
        case PrototypeId::A0:
            for (int i = 1; i <= ell; ++i)
                add("a_" + std::to_string(i), "\\alpha_" + std::to_string(i));
            break;
        case PrototypeId::A02:
            for (int i = 1; i <= ell; ++i)
                add("a_" + std::to_string(i), "\\alpha_" + std::to_string(i));
            for (int i = 1; i <= ell; ++i)
                add("b_" + std::to_string(i), "\\beta_" + std::to_string(i));
            break;
        case PrototypeId::A1:
            add("a", "\\alpha");
            for (int i = 1; i <= ell; ++i)
                add("b_" + std::to_string(i), "\\beta_" + std::to_string(i));
            break;
    }
    proto.ring = Ring::make(std::move(vars));
    switch (id) {
        case PrototypeId::A0:
            for (int i = 1; i <= ell; ++i) proto.alpha.push_back(proto.ring->require("a_" + std::to_string(i)));
            break;
        case PrototypeId::A02:
            for (int i = 1; i <= ell; ++i) proto.alpha.push_back(proto.ring->require("a_" + std::to_string(i)));
            for (int i = 1; i <= ell; ++i) proto.beta.push_back(proto.ring->require("b_" + std::to_string(i)));
            break;
        case PrototypeId::A1:
            proto.alpha.push_back(proto.ring->require("a"));
            for (int i = 1; i <= ell; ++i) proto.beta.push_back(proto.ring->require("b_" + std::to_string(i)));
            break;
    }
    return proto;
}

namespace {

Poly product_of(const RingPtr& ring, const std::vector<VarId>& vars) {
    Poly p = Poly::constant(ring, Rational(1));
    for (VarId v : vars) p = p * Poly::variable(ring, v);
    return p;
}

// prod (1 + x_i) over the given weight variables
Poly total_class(const RingPtr& ring, const std::vector<VarId>& vars) {
    Poly p = Poly::constant(ring, Rational(1));
    for (VarId v : vars) {
        Poly f = Poly::constant(ring, Rational(1));
        f += Poly::variable(ring, v);
        p = p * f;
    }
    return p;
}

}  // namespace

std::vector<Poly> proto_chern(const Prototype& proto, int max_deg) {
    const RingPtr& R = proto.ring;
    std::vector<Poly> c;
    switch (proto.id) {
        case PrototypeId::A0:
        case PrototypeId::A02: {
            // quotient bundle of the (first) branch is trivial of rank ell
            // with weights alpha resp. beta, so c_i = e_i of those weights
            const std::vector<VarId>& w = proto.id == PrototypeId::A0 ? proto.alpha : proto.beta;
            for (int i = 0; i <= max_deg; ++i)
                c.push_back(i <= proto.ell ? elem_sym(R, i, std::span<const VarId>(w)) : Poly(R));
            break;
        }
        case PrototypeId::A1: {
            // c(q) = (1+2a) prod(1+a+b_i) / (1+a)
            Poly num = Poly::constant(R, Rational(1));
            num += Poly::variable(R, proto.alpha[0]) * Rational(2);
            for (VarId b : proto.beta) {
                Poly f = Poly::constant(R, Rational(1));
                f += Poly::variable(R, proto.alpha[0]);
                f += Poly::variable(R, b);
                num = num * f;
            }
            Poly den = Poly::constant(R, Rational(1));
            den += Poly::variable(R, proto.alpha[0]);
            Poly series = series_quotient(num, den, max_deg);
            for (int i = 0; i <= max_deg; ++i) c.push_back(series.graded_part(i));
            break;
        }
    }
    return c;
}

Poly proto_landweber(const Prototype& proto, const Partition& lam, const std::vector<Poly>& chern) {
    const RingPtr& R = proto.ring;
    auto c_lambda = [&](auto&& c_of) {
        Poly p = Poly::constant(R, Rational(1));
        for (int part : lam.parts()) p = p * c_of(part);
        return p;
    };
    switch (proto.id) {
        case PrototypeId::A0:
            // single branch over a point: s_lambda = c_lambda * e(target)
            return c_lambda([&](int i) { return chern.at(i); }) * product_of(R, proto.alpha);
        case PrototypeId::A02: {
            // two branches; each contributes c_lambda of its own quotient
            // times the Euler class of the normal directions
            Poly first = c_lambda([&](int i) { return chern.at(i); }) * product_of(R, proto.beta);
            Poly second = c_lambda([&](int i) {
                return i <= proto.ell ? elem_sym(R, i, std::span<const VarId>(proto.alpha)) : Poly(R);
            });
            return first + second * product_of(R, proto.alpha);
        }
        case PrototypeId::A1: {
            // monogerm: s_lambda = c_lambda * s_0, s_0 = 2 prod(a + b_i)
            Poly s0 = Poly::constant(R, Rational(2));
            for (VarId b : proto.beta) {
                Poly f = Poly::variable(R, proto.alpha[0]);
                f += Poly::variable(R, b);
                s0 = s0 * f;
            }
            return c_lambda([&](int i) { return chern.at(i); }) * s0;
        }
    }
    throw std::logic_error("proto_landweber: bad id");
}

Poly psi(const Prototype& proto, const ClassSymbols& sym, const ClassPoly& cp, int max_deg) {
    if (cp.ell != proto.ell) throw grading_error("psi: class polynomial and prototype disagree on ell");

    // collect the symbols that actually occur
    std::vector<int> c_needed;
    std::vector<Partition> s_needed;
    {
        std::vector<char> seen(sym.ring->size(), 0);
        for (const auto& [key, coeff] : cp.poly.terms()) {
            (void)coeff;
            for (VarId v = 0; v < key.second.size(); ++v)
                if (key.second[v] != 0) seen[v] = 1;
        }
        for (std::size_t i = 0; i < sym.c.size(); ++i)
            if (seen[sym.c[i]]) c_needed.push_back(static_cast<int>(i) + 1);
        for (const auto& [lam, v] : sym.s)
            if (seen[v]) s_needed.push_back(lam);
    }
    for (int i : c_needed)
        if (i > max_deg)
            throw grading_error("psi: degree bound " + std::to_string(max_deg) +
                                " too small for c_" + std::to_string(i));
    for (const Partition& lam : s_needed)
        if (proto.ell + lam.weight() > max_deg)
            throw grading_error("psi: degree bound " + std::to_string(max_deg) +
                                " too small for s_" + lam.digits());

    const std::vector<Poly> chern = proto_chern(proto, max_deg);
    std::map<int, Poly> c_bindings;
    for (int i : c_needed) c_bindings.emplace(i, chern.at(i));
    std::map<Partition, Poly> s_bindings;
    for (const Partition& lam : s_needed) s_bindings.emplace(lam, proto_landweber(proto, lam, chern));

    return thom_evaluate(sym, cp, proto.ring, c_bindings, s_bindings);
}

Poly locus_ssm_rhs(const Prototype& proto, SingularityId sing, int N) {
    if (N < 0) throw std::out_of_range("locus_ssm_rhs: negative N");
    const RingPtr& R = proto.ring;
    const int D = proto.ell + N;
    const Poly one = Poly::constant(R, Rational(1));

    switch (proto.id) {
        case PrototypeId::A0: {
            // the target of P_A0 is a single reduced point of its own locus
            if (sing == SingularityId::A0) return one.graded_part(D);
            return Poly(R);
        }
        case PrototypeId::A02: {
            // double point locus is the origin of branch 1
            Poly num = product_of(R, proto.alpha);
            Poly den = total_class(R, proto.alpha);
            switch (sing) {
                case SingularityId::A02:
                    return series_quotient(num, den, D).graded_part(D);
                case SingularityId::A1:
                    return Poly(R);
                case SingularityId::A0:
                    return (one - series_quotient(num, den, D)).graded_part(D);
            }
            break;
        }
        case PrototypeId::A1: {
            Poly a = Poly::variable(R, proto.alpha[0]);
            Poly prod_b = product_of(R, proto.beta);
            Poly den = total_class(R, proto.beta) * (one + a);
            switch (sing) {
                case SingularityId::A02:
                    return series_quotient(prod_b, den, D).graded_part(D);
                case SingularityId::A1:
                    return series_quotient(a * prod_b, den, D).graded_part(D);
                case SingularityId::A0:
                    return (one - series_quotient((one + a) * prod_b, den, D)).graded_part(D);
            }
            break;
        }
    }
    throw std::logic_error("locus_ssm_rhs: bad id");
}

namespace {

constexpr std::array<SingularityId, 3> kSings = {SingularityId::A0, SingularityId::A02,
                                                 SingularityId::A1};
constexpr std::array<PrototypeId, 3> kProtos = {PrototypeId::A0, PrototypeId::A02,
                                                PrototypeId::A1};

VerificationReport compare(const ClassSymbols& sym, SingularityId sing, const Prototype& proto,
                           int N, const Poly& truncated_series) {
    ClassPoly cp{sym.ell, truncated_series};
    Poly lhs = psi(proto, sym, cp, sym.ell + N).graded_part(sym.ell + N);
    Poly rhs = locus_ssm_rhs(proto, sing, N);
    Poly residual = lhs - rhs;
    const bool pass = residual.is_zero();
    return {sing, proto.id, sym.ell, N, std::move(lhs), std::move(rhs), std::move(residual), pass};
}

}  // namespace

VerificationReport verify(const ClassSymbols& sym, SingularityId sing, const Prototype& proto,
                          int N) {
    if (N < 0 || N >= sym.ell)
        throw std::out_of_range("verify: N must satisfy 0 <= N < ell");
    return compare(sym, sing, proto, N, ssm_truncated(sym, sing, N).poly);
}

int perturbation_slots(int ell) {
    ClassSymbols sym = make_class_symbols(ell, ell - 1);
    int n = 0;
    for (int N = 0; N < ell; ++N)
        n += static_cast<int>(ssm_a02_component(sym, N).poly.term_count());
    return n;
}

std::vector<VerificationReport> verify_all(int ell, const std::optional<Perturbation>& perturb) {
    if (ell < 1) throw std::invalid_argument("verify_all: ell must be >= 1");
    ClassSymbols sym = make_class_symbols(ell, ell - 1);

    // component stacks per singularity, N = 0..ell-1
    std::vector<Poly> a02, a1, a0;
    for (int N = 0; N < ell; ++N) {
        a02.push_back(ssm_a02_component(sym, N).poly);
        a1.push_back(ssm_a1_component(sym, N).poly);
    }

    if (perturb) {
        // walk the concatenated canonical terms of the A02 stack
        int idx = perturb->term_index;
        if (idx < 0) throw std::out_of_range("perturbation index out of range");
        bool applied = false;
        for (Poly& comp : a02) {
            const int count = static_cast<int>(comp.term_count());
            if (idx < count) {
                auto it = comp.terms().begin();
                std::advance(it, idx);
                comp.add_term(it->first.second, perturb->delta);
                applied = true;
                break;
            }
            idx -= count;
        }
        if (!applied) throw std::out_of_range("perturbation index out of range");
    }

    // partition of unity: the A0 components absorb whatever the others do
    for (int N = 0; N < ell; ++N) a0.push_back(-(a02[N] + a1[N]));

    auto series_up_to = [&](SingularityId sing, int N) {
        Poly acc(sym.ring);
        if (sing == SingularityId::A0) acc += Poly::constant(sym.ring, Rational(1));
        const std::vector<Poly>& stack =
            sing == SingularityId::A0 ? a0 : (sing == SingularityId::A02 ? a02 : a1);
        for (int M = 0; M <= N; ++M) acc += stack[M];
        return acc;
    };

    std::vector<VerificationReport> reports;
    for (SingularityId sing : kSings) {
        for (PrototypeId pid : kProtos) {
            Prototype proto = make_prototype(pid, ell);
            for (int N = 0; N < ell; ++N)
                reports.push_back(compare(sym, sing, proto, N, series_up_to(sing, N)));
        }
    }
    return reports;
}

}  // namespace ssmthom

#include "ssmthom/prototypes.hpp"
#include "ssmthom/symfun.hpp"

namespace ssmthom {

namespace {

Rational pow2(int e) {
    mpz_class z = mpz_class(1) << e;
    return Rational(z);
}

// (a) Newton-style alternating convolution of e's and h's.
IdentityOutcome family_a(int max_mn) {
    IdentityOutcome out{'a', "sum_{i=0..m} (-1)^i e_i h_{m-i} = 0", 0, true};
    for (int n = 1; n <= max_mn; ++n) {
        std::vector<Variable> vars;
        for (int i = 1; i <= n; ++i) vars.push_back({"x_" + std::to_string(i), 1, {}});
        RingPtr R = Ring::make(vars);
        std::vector<VarId> xs;
        for (int i = 1; i <= n; ++i) xs.push_back(R->require("x_" + std::to_string(i)));
        for (int m = 1; m <= max_mn; ++m) {
            Poly acc(R);
            for (int i = 0; i <= m; ++i) {
                Poly t = elem_sym(R, i, std::span<const VarId>(xs)) *
                         complete_sym(R, m - i, std::span<const VarId>(xs));
                acc += (i % 2 == 0) ? t : -t;
            }
            ++out.cases;
            out.pass = out.pass && acc.is_zero();
        }
    }
    return out;
}

// (b) monic polynomial with prescribed roots versus its e-expansion.
IdentityOutcome family_b(int max_mn) {
    IdentityOutcome out{'b', "prod (y - x_j) = sum_k (-1)^k e_k y^{n-k}", 0, true};
    for (int n = 1; n <= max_mn; ++n) {
        std::vector<Variable> vars{{"y", 1, {}}};
        for (int i = 1; i <= n; ++i) vars.push_back({"x_" + std::to_string(i), 1, {}});
        RingPtr R = Ring::make(vars);
        const Poly y = Poly::variable(R, R->require("y"));
        std::vector<VarId> xs;
        for (int i = 1; i <= n; ++i) xs.push_back(R->require("x_" + std::to_string(i)));

        Poly lhs = Poly::constant(R, Rational(1));
        for (VarId x : xs) lhs = lhs * (y - Poly::variable(R, x));
        Poly rhs(R);
        for (int k = 0; k <= n; ++k) {
            Poly t = elem_sym(R, k, std::span<const VarId>(xs)) * y.pow(n - k);
            rhs += (k % 2 == 0) ? t : -t;
        }
        ++out.cases;
        out.pass = out.pass && lhs == rhs;
    }
    return out;
}

// shifted-weight values a+b_1, ..., a+b_ell of the rank-drop model
std::vector<Poly> shifted_values(const Prototype& proto) {
    std::vector<Poly> vals;
    const Poly a = Poly::variable(proto.ring, proto.alpha[0]);
    for (VarId b : proto.beta) vals.push_back(a + Poly::variable(proto.ring, b));
    return vals;
}

// (c) S_(m) at the rank-drop model's Chern values against its unravelled
// form in the shifted weights.
IdentityOutcome family_c(int max_ell, int extra) {
    IdentityOutcome out{'c', "S_(m) = sum_i 2^{i-1} a^i h_{m-i}(a+b) + h_m(a+b)", 0, true};
    for (int ell = 1; ell <= max_ell; ++ell) {
        Prototype proto = make_prototype(PrototypeId::A1, ell);
        const RingPtr& R = proto.ring;
        const Poly a = Poly::variable(R, proto.alpha[0]);
        const std::vector<Poly> shift = shifted_values(proto);
        const int top = ell + extra;
        const std::vector<Poly> chern = proto_chern(proto, top);
        std::vector<Poly> cvals(chern.begin() + 1, chern.end());

        for (int m = 0; m <= top; ++m) {
            Poly lhs = s_det_eval(R, cvals, m);
            Poly rhs = complete_sym(R, m, shift);
            for (int i = 1; i <= m; ++i) {
                Rational w = pow2(i - 1);
                rhs += a.pow(i) * complete_sym(R, m - i, shift) * w;
            }
            ++out.cases;
            out.pass = out.pass && lhs == rhs;
        }
    }
    return out;
}

// (d) the cancellation lemma, with every e_i, h_j and a treated as an
// unbound indeterminate (in particular h_0 is not 1).
IdentityOutcome family_d(int max_m) {
    IdentityOutcome out{'d', "alternating e/h cross-sum vanishes (fresh indeterminates)", 0, true};
    for (int m = 1; m <= max_m; ++m) {
        std::vector<Variable> vars{{"a", 1, {}}};
        for (int i = 1; i <= m; ++i) vars.push_back({"e_" + std::to_string(i), i, {}});
        for (int j = 0; j <= m - 1; ++j) vars.push_back({"h_" + std::to_string(j), j, {}});
        RingPtr R = Ring::make(vars);
        const Poly a = Poly::variable(R, R->require("a"));
        auto e = [&](int i) { return Poly::variable(R, R->require("e_" + std::to_string(i))); };
        auto h = [&](int j) { return Poly::variable(R, R->require("h_" + std::to_string(j))); };

        Poly total(R);
        for (int i = 1; i <= m; ++i) {
            Poly A(R);  // sum_{k=1..m-i} 2^{k-1} a^k h_{m-i-k}
            for (int k = 1; k <= m - i; ++k) {
                Rational w = pow2(k - 1);
                A += a.pow(k) * h(m - i - k) * w;
            }
            Poly B(R);  // sum_{a'=1..i-1} (-1)^{i-a'+1} e_{a'} a^{i-a'}
            for (int j = 1; j <= i - 1; ++j) {
                Poly t = e(j) * a.pow(i - j);
                B += ((i - j + 1) % 2 == 0) ? t : -t;
            }
            Poly chunk = e(i) * A + B * A + h(m - i) * B;
            total += (i % 2 == 1) ? chunk : -chunk;
        }
        ++out.cases;
        out.pass = out.pass && total.is_zero();
    }
    return out;
}

// (e) complete symmetric polynomials in shifted arguments, plus the signed
// inverse form.
IdentityOutcome family_e(int max_ell, int max_k) {
    IdentityOutcome out{'e', "h_k(a+b) binomial shift and its inverse", 0, true};
    for (int ell = 1; ell <= max_ell; ++ell) {
        Prototype proto = make_prototype(PrototypeId::A1, ell);
        const RingPtr& R = proto.ring;
        const Poly a = Poly::variable(R, proto.alpha[0]);
        const std::vector<Poly> shift = shifted_values(proto);

        for (int k = 0; k <= max_k; ++k) {
            Poly lhs = complete_sym(R, k, shift);
            Poly rhs(R);
            for (int j = 0; j <= k; ++j) {
                Rational w{binomial(ell + k - 1, k - j)};
                rhs += a.pow(k - j) * complete_sym(R, j, std::span<const VarId>(proto.beta)) * w;
            }
            Poly inv_lhs = complete_sym(R, k, std::span<const VarId>(proto.beta));
            Poly inv_rhs(R);
            for (int j = 0; j <= k; ++j) {
                Rational w{binomial(ell + k - 1, k - j)};
                Poly t = a.pow(k - j) * complete_sym(R, j, shift) * w;
                inv_rhs += ((k - j) % 2 == 0) ? t : -t;
            }
            ++out.cases;
            out.pass = out.pass && lhs == rhs && inv_lhs == inv_rhs;
        }
    }
    return out;
}

// (f) the master identity behind the double-point verification.
IdentityOutcome family_f(int max_ell, int extra) {
    IdentityOutcome out{'f', "h_N(a,b) = sum_k S_(N-k) C(l+N-1,k) (-a)^k", 0, true};
    for (int ell = 1; ell <= max_ell; ++ell) {
        Prototype proto = make_prototype(PrototypeId::A1, ell);
        const RingPtr& R = proto.ring;
        const Poly a = Poly::variable(R, proto.alpha[0]);
        const int top = ell + extra;
        const std::vector<Poly> chern = proto_chern(proto, top);
        std::vector<Poly> cvals(chern.begin() + 1, chern.end());

        std::vector<Poly> all_weights{a};
        for (VarId b : proto.beta) all_weights.push_back(Poly::variable(R, b));

        for (int N = 0; N <= top; ++N) {
            Poly lhs = complete_sym(R, N, all_weights);
            Poly rhs(R);
            for (int k = 0; k <= N; ++k) {
                Rational w{binomial(ell + N - 1, k)};
                Poly t = s_det_eval(R, cvals, N - k) * a.pow(k) * w;
                rhs += (k % 2 == 0) ? t : -t;
            }
            ++out.cases;
            out.pass = out.pass && lhs == rhs;
        }
    }
    return out;
}

// (g) alternating hockey stick: diagonal sum vs weighted row sum, both
// formulations.
IdentityOutcome family_g(int max_r) {
    IdentityOutcome out{'g', "alternating hockey stick (diagonal = weighted row)", 0, true};
    for (int r = 1; r <= max_r; ++r) {
        for (int c = 1; c <= r; ++c) {
            mpz_class diag = 0, row = 0;
            for (int i = 0; i <= c - 1; ++i) {
                mpz_class dterm = binomial(r - c + i, i);
                diag += (i % 2 == 0) ? dterm : -dterm;
                mpz_class rterm = (mpz_class(1) << (c - 1 - i)) * binomial(r, i);
                row += (i % 2 == 0) ? rterm : -rterm;
            }
            mpz_class diag2 = diag + ((c % 2 == 0) ? binomial(r, c) : -binomial(r, c));
            mpz_class row2 = row + ((c % 2 == 0) ? binomial(r, c) : -binomial(r, c));
            ++out.cases;
            out.pass = out.pass && diag == row && diag2 == row2;
        }
    }
    return out;
}

}  // namespace

std::vector<IdentityOutcome> identity_suite(const IdentityParams& p) {
    std::vector<IdentityOutcome> outcomes;
    outcomes.push_back(family_a(p.max_mn));
    outcomes.push_back(family_b(p.max_mn));
    outcomes.push_back(family_c(p.max_ell, p.extra));
    outcomes.push_back(family_d(p.max_ell + p.extra));
    outcomes.push_back(family_e(p.max_ell, p.max_k));
    outcomes.push_back(family_f(p.max_ell, p.extra));
    outcomes.push_back(family_g(p.max_r));
    return outcomes;
}

}  // namespace ssmthom

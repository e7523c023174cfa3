#include "ssmthom/symfun.hpp"

#include <stdexcept>

namespace ssmthom {

mpz_class binomial(const mpz_class& n, long k) {
    if (k < 0) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> all;
    std::vector<int> cur;
    // parts nonincreasing, largest first
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            all.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    for (int w = 0; w <= max_weight; ++w) rec(rec, w, w);
    std::sort(all.begin(), all.end());
    return all;
}

Poly elem_sym(const RingPtr& ring, int k, std::span<const Poly> values) {
    if (k < 0) throw std::invalid_argument("elem_sym: negative degree");
    // after processing j values, e[i] = e_i(v_1..v_j); update descending so
    // e[i-1] is still the previous row
    std::vector<Poly> e(k + 1, Poly(ring));
    e[0] = Poly::constant(ring, Rational(1));
    for (std::size_t j = 0; j < values.size(); ++j) {
        const Poly& v = values[j];
        check_same_ring(v.ring(), ring, "elem_sym");
        for (int i = std::min<int>(k, static_cast<int>(j) + 1); i >= 1; --i) e[i] += v * e[i - 1];
    }
    return e[k];
}

Poly complete_sym(const RingPtr& ring, int k, std::span<const Poly> values) {
    if (k < 0) throw std::invalid_argument("complete_sym: negative degree");
    // h_i(v_1..v_j) = h_i(v_1..v_{j-1}) + v_j h_{i-1}(v_1..v_j)
    std::vector<Poly> h(k + 1, Poly(ring));
    h[0] = Poly::constant(ring, Rational(1));
    for (const Poly& v : values) {
        check_same_ring(v.ring(), ring, "complete_sym");
        for (int i = 1; i <= k; ++i) h[i] += v * h[i - 1];
    }
    return h[k];
}

namespace {

std::vector<Poly> var_polys(const RingPtr& ring, std::span<const VarId> vars) {
    std::vector<Poly> vs;
    vs.reserve(vars.size());
    for (VarId v : vars) vs.push_back(Poly::variable(ring, v));
    return vs;
}

}  // namespace

Poly elem_sym(const RingPtr& ring, int k, std::span<const VarId> vars) {
    auto vs = var_polys(ring, vars);
    return elem_sym(ring, k, vs);
}

Poly complete_sym(const RingPtr& ring, int k, std::span<const VarId> vars) {
    auto vs = var_polys(ring, vars);
    return complete_sym(ring, k, vs);
}

Poly s_det_eval(const RingPtr& ring, std::span<const Poly> c_values, int m) {
    if (m < 0) throw std::invalid_argument("s_det_eval: negative degree");
    if (static_cast<int>(c_values.size()) < m)
        throw std::invalid_argument("s_det_eval: need c_1..c_m");
    std::vector<Poly> S;
    S.push_back(Poly::constant(ring, Rational(1)));
    for (int j = 1; j <= m; ++j) {
        Poly acc(ring);
        for (int i = 1; i <= j; ++i) {
            Poly t = c_values[i - 1] * S[j - i];
            acc += (i % 2 == 1) ? t : -t;
        }
        S.push_back(std::move(acc));
    }
    return S[m];
}

Poly ClassSymbols::c_poly(int i) const {
    if (i < 1 || i > static_cast<int>(c.size()))
        throw std::out_of_range("ClassSymbols: c_" + std::to_string(i) + " not in context");
    return Poly::variable(ring, c[i - 1]);
}

Poly ClassSymbols::s_poly(const Partition& lam) const {
    auto it = s.find(lam);
    if (it == s.end())
        throw std::out_of_range("ClassSymbols: s_" + lam.digits() + " not in context");
    return Poly::variable(ring, it->second);
}

ClassSymbols make_class_symbols(int ell, int nmax) {
    if (ell < 1) throw std::invalid_argument("make_class_symbols: ell must be >= 1");
    if (nmax < 0) throw std::invalid_argument("make_class_symbols: nmax must be >= 0");

    ClassSymbols sym;
    sym.ell = ell;
    sym.nmax = nmax;

    std::vector<Variable> vars;
    for (int i = 1; i <= ell + nmax; ++i)
        vars.push_back({"c_" + std::to_string(i), i, "c_{" + std::to_string(i) + "}"});

    auto parts = partitions_up_to(nmax);
    for (const Partition& lam : parts) {
        std::string latex = lam.empty() ? "s_{\\emptyset}" : "s_{" + lam.digits() + "}";
        vars.push_back({"s_" + lam.digits(), ell + lam.weight(), latex});
    }

    sym.ring = Ring::make(std::move(vars));
    for (int i = 1; i <= ell + nmax; ++i)
        sym.c.push_back(sym.ring->require("c_" + std::to_string(i)));
    for (const Partition& lam : parts)
        sym.s.emplace(lam, sym.ring->require("s_" + lam.digits()));
    return sym;
}

Poly s_det(const ClassSymbols& sym, int m) {
    std::vector<Poly> cvals;
    for (int i = 1; i <= m; ++i) cvals.push_back(sym.c_poly(i));
    return s_det_eval(sym.ring, cvals, m);
}

Poly c_to_s_swap(const ClassSymbols& sym, const Poly& p) {
    check_same_ring(p.ring(), sym.ring, "c_to_s_swap");

    // which ring variables are c_i, and which index i
    std::vector<int> c_index(sym.ring->size(), 0);
    for (std::size_t i = 0; i < sym.c.size(); ++i) c_index[sym.c[i]] = static_cast<int>(i) + 1;

    Poly out(sym.ring);
    for (const auto& [key, coeff] : p.terms()) {
        std::vector<int> lam_parts;
        for (VarId v = 0; v < key.second.size(); ++v) {
            if (key.second[v] == 0) continue;
            if (c_index[v] == 0)
                throw std::invalid_argument("c_to_s_swap: monomial contains non-c symbol '" +
                                            sym.ring->var(v).name + "'");
            lam_parts.insert(lam_parts.end(), key.second[v], c_index[v]);
        }
        out += sym.s_poly(Partition(lam_parts)) * coeff;
    }
    return out;
}

}  // namespace ssmthom

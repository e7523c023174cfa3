#include "ssmthom/format.hpp"

#include <sstream>

namespace ssmthom {

namespace {

std::string latex_coeff(const Rational& c) {
    if (c.is_integer()) return c.num().get_str();
    return "\\frac{" + c.num().get_str() + "}{" + c.den().get_str() + "}";
}

template <typename MonomialWriter>
std::string render(const Poly& p, MonomialWriter&& write_monomial, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : p.terms()) {
        const Rational abs = coeff.sign() < 0 ? -coeff : coeff;
        if (first) {
            if (coeff.sign() < 0) out << "-";
            first = false;
        } else {
            out << (coeff.sign() < 0 ? " - " : " + ");
        }

        std::string mono = write_monomial(key.second);
        if (mono.empty()) {
            out << (latex ? latex_coeff(abs) : abs.str());
        } else if (abs.is_one()) {
            out << mono;
        } else {
            out << (latex ? latex_coeff(abs) + mono : abs.str() + "*" + mono);
        }
    }
    return out.str();
}

}  // namespace

std::string to_text(const Poly& p) {
    const Ring& ring = *p.ring();
    return render(p, [&](const Exponents& e) {
        std::string s;
        for (VarId i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += ring.var(i).name;
            if (e[i] != 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }, false);
}

std::string to_latex(const Poly& p) {
    const Ring& ring = *p.ring();
    return render(p, [&](const Exponents& e) {
        std::string s;
        for (VarId i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            s += ring.var(i).latex;
            if (e[i] != 1) s += "^{" + std::to_string(e[i]) + "}";
        }
        return s;
    }, true);
}

}  // namespace ssmthom

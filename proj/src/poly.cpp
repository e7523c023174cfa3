#include "ssmthom/poly.hpp"

#include <stdexcept>

namespace ssmthom {

Poly Poly::constant(const RingPtr& ring, const Rational& c) {
    Poly p(ring);
    p.add_term(Exponents(ring->size(), 0), c);
    return p;
}

Poly Poly::variable(const RingPtr& ring, VarId v, int exp) {
    if (v >= ring->size()) throw std::out_of_range("Poly::variable: bad variable id");
    if (exp < 0) throw std::invalid_argument("Poly::variable: negative exponent");
    Poly p(ring);
    Exponents e(ring->size(), 0);
    e[v] = exp;
    p.add_term(e, Rational(1));
    return p;
}

int Poly::degree_of(const Exponents& e) const {
    int d = 0;
    for (VarId i = 0; i < e.size(); ++i) d += e[i] * ring_->var(i).degree;
    return d;
}

Rational Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find({degree_of(e), e});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const {
    return coefficient(Exponents(ring_->size(), 0));
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    if (e.size() != ring_->size()) throw std::invalid_argument("Poly::add_term: exponent vector size mismatch");
    TermKey key{degree_of(e), e};
    auto [it, fresh] = terms_.emplace(std::move(key), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_ring(ring_, o.ring_, "Poly::operator+=");
    for (const auto& [k, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_ring(ring_, o.ring_, "Poly::operator-=");
    for (const auto& [k, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(k, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

namespace {

Poly multiply(const Poly& a, const Poly& b, int max_deg /* -1: unbounded */) {
    check_same_ring(a.ring(), b.ring(), "Poly::operator*");
    Poly r(a.ring());
    const std::size_t n = a.ring()->size();
    Exponents e(n);
    for (const auto& [ka, ca] : a.terms()) {
        if (max_deg >= 0 && ka.first > max_deg) break;  // terms sorted by degree
        for (const auto& [kb, cb] : b.terms()) {
            const int d = ka.first + kb.first;
            if (max_deg >= 0 && d > max_deg) break;
            for (std::size_t i = 0; i < n; ++i) e[i] = ka.second[i] + kb.second[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, -1); }

Poly mul_truncated(const Poly& a, const Poly& b, int max_deg) { return multiply(a, b, max_deg); }

bool operator==(const Poly& a, const Poly& b) {
    check_same_ring(a.ring_, b.ring_, "Poly::operator==");
    return a.terms_ == b.terms_;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly result = Poly::constant(ring_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = (k >>= 1) ? base * base : base;
    }
    return result;
}

Poly Poly::graded_part(int d) const {
    Poly r(ring_);
    for (const auto& [k, c] : terms_) {
        if (k.first > d) break;
        if (k.first == d) r.terms_.emplace(k, c);
    }
    return r;
}

Poly Poly::truncate(int max_deg) const {
    Poly r(ring_);
    for (const auto& [k, c] : terms_) {
        if (k.first > max_deg) break;
        r.terms_.emplace(k, c);
    }
    return r;
}

Poly substitute(const Poly& p, const RingPtr& target, const std::map<VarId, Poly>& bindings) {
    for (const auto& [v, b] : bindings) {
        if (v >= p.ring()->size()) throw substitution_error("substitute: binding for unknown variable id");
        check_same_ring(b.ring(), target, "substitute: binding not over target ring");
    }

    // Image of each source variable: its binding, or the same-named target
    // variable carried over.
    const std::size_t n = p.ring()->size();
    std::vector<const Poly*> bound(n, nullptr);
    std::vector<Poly> carried;
    carried.reserve(n);
    std::vector<int> carry_id(n, -1);
    for (const auto& [k, c] : p.terms()) {
        for (VarId i = 0; i < n; ++i) {
            if (k.second[i] == 0 || bound[i] || carry_id[i] >= 0) continue;
            auto it = bindings.find(i);
            if (it != bindings.end()) {
                bound[i] = &it->second;
            } else {
                auto tv = target->find(p.ring()->var(i).name);
                if (!tv)
                    throw substitution_error("substitute: variable '" + p.ring()->var(i).name +
                                             "' is unbound and absent from the target ring");
                carry_id[i] = static_cast<int>(carried.size());
                carried.push_back(Poly::variable(target, *tv));
            }
        }
    }

    std::map<std::pair<VarId, int>, Poly> pow_cache;
    auto power = [&](VarId v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = pow_cache.find(key);
        if (it == pow_cache.end()) {
            const Poly& base = bound[v] ? *bound[v] : carried[carry_id[v]];
            it = pow_cache.emplace(key, base.pow(e)).first;
        }
        return it->second;
    };

    Poly result(target);
    for (const auto& [k, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (VarId i = 0; i < n; ++i)
            if (k.second[i] != 0) term = term * power(i, k.second[i]);
        result += term;
    }
    return result;
}

Poly series_quotient(const Poly& num, const Poly& den, int max_deg) {
    check_same_ring(num.ring(), den.ring(), "series_quotient");
    if (max_deg < 0) throw std::invalid_argument("series_quotient: negative truncation degree");

    const Rational c0 = den.constant_term();
    if (c0.is_zero())
        throw not_invertible_error("series_quotient: denominator has zero constant term");
    // A non-constant monomial of total degree 0 (possible with degree-0
    // variables) would stall the geometric series below, so reject it.
    if (den.graded_part(0).term_count() != 1)
        throw not_invertible_error("series_quotient: denominator degree-0 part is not a unit");

    // den = c0 (1 + u) with min_degree(u) >= 1, so 1/den is the geometric
    // series; u^j dies once j exceeds max_deg. Horner form: inv_{j+1} = 1 - u*inv_j.
    Poly u = den * (Rational(1) / c0);
    u.add_term(Exponents(den.ring()->size(), 0), Rational(-1));
    u = u.truncate(max_deg);

    const Poly one = Poly::constant(den.ring(), Rational(1));
    Poly inv = one;
    for (int j = 0; j < max_deg; ++j) inv = one - mul_truncated(u, inv, max_deg);

    return mul_truncated(num, inv, max_deg) * (Rational(1) / c0);
}

}  // namespace ssmthom

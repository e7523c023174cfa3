#ifndef SSMTHOM_RING_HPP
#define SSMTHOM_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssmthom/errors.hpp"

namespace ssmthom {

using VarId = std::size_t;

struct Variable {
    std::string name;    // canonical ascii name, unique within a ring
    int degree = 1;      // grading weight, fixed at ring creation
    std::string latex;   // display form for the latex emitter
};

// Immutable ordered variable set. Polynomials refer to their ring by shared
// pointer; two polynomials interoperate only if they share the same Ring
// instance (pointer identity, not structural equality).
class Ring {
public:
    static std::shared_ptr<const Ring> make(std::vector<Variable> vars) {
        return std::shared_ptr<const Ring>(new Ring(std::move(vars)));
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& var(VarId id) const { return vars_.at(id); }

    std::optional<VarId> find(std::string_view name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    VarId require(std::string_view name) const {
        auto id = find(name);
        if (!id) throw substitution_error("ring has no variable named '" + std::string(name) + "'");
        return *id;
    }

private:
    explicit Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
        for (VarId i = 0; i < vars_.size(); ++i) {
            if (vars_[i].latex.empty()) vars_[i].latex = vars_[i].name;
            auto [it, fresh] = by_name_.emplace(vars_[i].name, i);
            if (!fresh) throw std::invalid_argument("duplicate variable name '" + vars_[i].name + "'");
        }
    }

    std::vector<Variable> vars_;
    std::map<std::string, VarId, std::less<>> by_name_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline void check_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() != b.get())
        throw ring_mismatch_error(std::string(what) + ": operands belong to different ring contexts");
}

}  // namespace ssmthom

#endif

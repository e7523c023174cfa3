#ifndef SSMTHOM_FORMAT_HPP
#define SSMTHOM_FORMAT_HPP

#include <string>

#include "ssmthom/poly.hpp"

namespace ssmthom {

// Plain-text rendering in canonical term order, e.g. "c_1*c_2 + 2*c_3 - s_1".
std::string to_text(const Poly& p);

// LaTeX rendering in canonical term order, e.g. "c_1c_2 + 2c_3 - s_{1}".
std::string to_latex(const Poly& p);

}  // namespace ssmthom

#endif

#ifndef QWITT_TEXTIO_HPP
#define QWITT_TEXTIO_HPP

#include <string>

#include "qwitt/qrat.hpp"

namespace qwitt {

// Parses the coefficient text grammar: integers, the variable `q`,
// `+ - * / ^` and parentheses, e.g. "1-2*q+q^3" or "(1)/(1-q)".
QRat parse_qrat(const std::string& text);

// Convenience: parse and require a polynomial.
QPoly parse_qpoly(const std::string& text);

} // namespace qwitt

#endif

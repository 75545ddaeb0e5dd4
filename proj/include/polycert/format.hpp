#ifndef POLYCERT_FORMAT_HPP
#define POLYCERT_FORMAT_HPP

#include <cstddef>
#include <string>

#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"

namespace polycert {

enum class Style { plain, latex };

namespace detail {

inline std::string format_magnitude(const Rat& a, Style style) {
    if (style == Style::latex && a.get_den() != 1)
        return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    return to_string(a);
}

inline std::string format_power(const std::string& var, std::size_t k, Style style) {
    if (k == 1)
        return var;
    std::string e = std::to_string(k);
    if (style == Style::latex && e.size() > 1)
        return var + "^{" + e + "}";
    return var + "^" + e;
}

} // namespace detail

/// Renders f in descending powers, skipping zero terms.
///
/// Plain style is accepted back by parse(): "x^4 - 10*x^3 + 2/3*x - 1".
/// LaTeX style uses juxtaposition and \frac: "2842 n^4 + \frac{1}{2} n - 1".
inline std::string format(const Poly& f, Style style = Style::plain) {
    if (f.is_zero())
        return "0";
    const auto& c = f.coefficients();
    const std::string& var = f.variable();
    std::string out;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (sgn(c[k]) == 0)
            continue;
        bool negative = sgn(c[k]) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        Rat mag = abs(c[k]);
        if (k == 0) {
            out += detail::format_magnitude(mag, style);
        } else {
            if (mag != 1) {
                out += detail::format_magnitude(mag, style);
                out += style == Style::plain ? "*" : " ";
            }
            out += detail::format_power(var, k, style);
        }
    }
    return out;
}

} // namespace polycert

#endif // POLYCERT_FORMAT_HPP

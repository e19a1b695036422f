#include "reslab/rational.hpp"

#include <stdexcept>

namespace reslab {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace reslab

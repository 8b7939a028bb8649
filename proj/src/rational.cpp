#include "quivergp/rational.hpp"

#include <ostream>

namespace qgp {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace qgp

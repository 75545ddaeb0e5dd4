#ifndef POLYCERT_POLYCERT_HPP
#define POLYCERT_POLYCERT_HPP

#include "polycert/certificate_io.hpp"
#include "polycert/classical_bounds.hpp"
#include "polycert/error.hpp"
#include "polycert/format.hpp"
#include "polycert/parser.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"
#include "polycert/shift_division.hpp"
#include "polycert/shift_search.hpp"

#endif // POLYCERT_POLYCERT_HPP

#pragma once

#include <cstdint>

#include "matinv/linalg.hpp"
#include "matinv/multipoly.hpp"
#include "matinv/rational.hpp"
#include "matinv/zp.hpp"

namespace matinv {

// Reduction Q -> F_p. Throws DenominatorDivisibleByP when p divides a
// denominator.
Zp to_zp(const Rat& r, std::uint64_t p);
ZpPoly to_zp(const QPoly& poly, std::uint64_t p);
ZpMatrix to_zp(const QMatrix& m, std::uint64_t p);

}  // namespace matinv

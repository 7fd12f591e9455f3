#include "spinfeit/rational.hpp"

#include <stdexcept>

namespace spinfeit {

std::int64_t to_int64(const Rational& r) {
    if (r.get_den() != 1) throw std::range_error("to_int64: not an integer: " + r.get_str());
    const mpz_class& z = r.get_num();
    if (!z.fits_slong_p()) throw std::range_error("to_int64: out of range");
    return z.get_si();
}

}  // namespace spinfeit

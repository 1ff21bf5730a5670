#include "zigzag/exact.hpp"

namespace zigzag {

std::int64_t to_int64(const BigInt& value) {
    if (!value.fits_slong_p())
        throw std::overflow_error("value does not fit in int64: " + value.get_str());
    return static_cast<std::int64_t>(value.get_si());
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace zigzag

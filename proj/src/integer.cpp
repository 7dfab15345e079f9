#include "qseries/integer.hpp"

namespace qseries {

Integer binomial(Exponent n, Exponent k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace qseries

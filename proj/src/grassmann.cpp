#include "qsc/grassmann.hpp"

namespace qsc {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace qsc

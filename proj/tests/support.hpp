#pragma once

#include <gmpxx.h>

#include "povs/model_element.hpp"

namespace povs::test {

// Floating evaluation with 2048-bit mantissas through mpf_sqrt; used as an
// independent check on the exact sign procedure.
inline mpf_class mpf_value(const ModelElement& m) {
    mpf_class total(0, 2048);
    for (const auto& [k, c] : m.coeffs()) {
        mpf_class coeff(c.raw(), 2048);
        if (k == 0) {
            total += coeff;
        } else {
            mpf_class root(static_cast<double>(prime_at(k)), 2048);
            root = sqrt(root);
            total += coeff * root;
        }
    }
    return total;
}

inline int mpf_sign(const ModelElement& m) { return sgn(mpf_value(m)); }

} // namespace povs::test

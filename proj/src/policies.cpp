#include "ainv/policies.hpp"

#include <string>

#include "ainv/error.hpp"

namespace ainv {

void validate(const PolicyParams& params) {
    if (params.reorder_point < 0 || params.reorder_point >= params.order_up_to) {
        throw InvalidParameter("policy requires 0 <= s < S, got s=" + std::to_string(params.reorder_point) +
                               " S=" + std::to_string(params.order_up_to));
    }
}

Units decide_order(Units position, const PolicyParams& params) {
    return position <= params.reorder_point ? params.order_up_to - position : 0;
}

}  // namespace ainv

#pragma once

#include <cstdint>

namespace ainv {

using Units = std::int64_t;

/// (s, S) reorder rule: when position <= s, order up to S.
struct PolicyParams {
    Units reorder_point = 25;  // s
    Units order_up_to = 50;    // S

    friend bool operator==(const PolicyParams&, const PolicyParams&) = default;
};

/// Throws InvalidParameter unless 0 <= s < S.
void validate(const PolicyParams& params);

/// Order quantity for the given inventory position (trigger is inclusive).
Units decide_order(Units position, const PolicyParams& params);

}  // namespace ainv

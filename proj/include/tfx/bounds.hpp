#pragma once

#include <array>
#include <optional>
#include <string>

#include "tfx/rational.hpp"

namespace tfx {

/// The closed-form edge bounds this project evaluates and verifies.
enum class BoundId { mantel, erdos_andrasfai, brouwer, chi4, d2ge4 };

std::string bound_name(BoundId id);
std::optional<BoundId> bound_from_name(const std::string& name);
bool bound_takes_r(BoundId id);

long long mantel_bound(long long n);                  // floor(n^2/4), n >= 0
long long erdos_andrasfai_bound(long long n);         // floor((n-1)^2/4)+1, n >= 1
long long brouwer_bound(long long n, long long r);    // t_r(n) - floor(n/r) + 1
long long chi4_bound(long long n);                    // floor((n-3)^2/4)+5, n >= 4
long long d2ge4_bound(long long n);                   // floor((n-4)^2/4)+16, n >= 5

long long bound_value(BoundId id, long long n, std::optional<long long> r = std::nullopt);

/// Exact check of the cyclic distance-2 inequality
///   z1*z3 + z2*z4 + z3*z5 + z4*z1 + z5*z2 >= (2z - 5*z0)*z0
/// for positive z_i with min z_i >= z0 >= 0.
struct C5BlowupInequality {
    Rat lhs, rhs;
    bool holds = false;
};
C5BlowupInequality c5_blowup_inequality(const std::array<Rat, 5>& z, const Rat& z0);

} // namespace tfx

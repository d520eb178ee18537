#include "tfx/bounds.hpp"

#include "tfx/constructions.hpp"

namespace tfx {

std::string bound_name(BoundId id) {
    switch (id) {
        case BoundId::mantel: return "mantel";
        case BoundId::erdos_andrasfai: return "erdos_andrasfai";
        case BoundId::brouwer: return "brouwer";
        case BoundId::chi4: return "chi4";
        case BoundId::d2ge4: return "d2ge4";
    }
    return "?";
}

std::optional<BoundId> bound_from_name(const std::string& name) {
    for (BoundId id : {BoundId::mantel, BoundId::erdos_andrasfai, BoundId::brouwer,
                       BoundId::chi4, BoundId::d2ge4})
        if (bound_name(id) == name) return id;
    return std::nullopt;
}

bool bound_takes_r(BoundId id) { return id == BoundId::brouwer; }

long long mantel_bound(long long n) {
    if (n < 0) throw DomainError("mantel_bound: need n >= 0");
    return n * n / 4;
}

long long erdos_andrasfai_bound(long long n) {
    if (n < 1) throw DomainError("erdos_andrasfai_bound: need n >= 1");
    return (n - 1) * (n - 1) / 4 + 1;
}

long long brouwer_bound(long long n, long long r) {
    if (r < 1 || r > n) throw DomainError("brouwer_bound: need 1 <= r <= n");
    if (n > 1'000'000) throw DomainError("brouwer_bound: n out of supported range");
    return turan_edges(static_cast<int>(n), static_cast<int>(r)) - n / r + 1;
}

long long chi4_bound(long long n) {
    if (n < 4) throw DomainError("chi4_bound: need n >= 4");
    return (n - 3) * (n - 3) / 4 + 5;
}

long long d2ge4_bound(long long n) {
    if (n < 5) throw DomainError("d2ge4_bound: need n >= 5");
    return (n - 4) * (n - 4) / 4 + 16;
}

long long bound_value(BoundId id, long long n, std::optional<long long> r) {
    switch (id) {
        case BoundId::mantel: return mantel_bound(n);
        case BoundId::erdos_andrasfai: return erdos_andrasfai_bound(n);
        case BoundId::brouwer:
            if (!r) throw DomainError("brouwer bound requires r");
            return brouwer_bound(n, *r);
        case BoundId::chi4: return chi4_bound(n);
        case BoundId::d2ge4: return d2ge4_bound(n);
    }
    throw DomainError("unknown bound");
}

C5BlowupInequality c5_blowup_inequality(const std::array<Rat, 5>& z, const Rat& z0) {
    if (z0 < Rat(0)) throw DomainError("c5_blowup_inequality: need z0 >= 0");
    Rat sum(0);
    for (const Rat& zi : z) {
        if (!(zi > Rat(0))) throw DomainError("c5_blowup_inequality: need z_i > 0");
        if (zi < z0) throw DomainError("c5_blowup_inequality: need min z_i >= z0");
        sum += zi;
    }
    Rat lhs = z[0] * z[2] + z[1] * z[3] + z[2] * z[4] + z[3] * z[0] + z[4] * z[1];
    Rat rhs = (Rat(2) * sum - Rat(5) * z0) * z0;
    return {lhs, rhs, lhs >= rhs};
}

} // namespace tfx

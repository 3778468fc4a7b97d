#include "csc/contfrac.hpp"

#include "csc/errors.hpp"

namespace csc {

std::vector<Int> negative_cf_expand(const Rat& r) {
    if (r > -1) throw DomainError("negative_cf_expand: requires r <= -1, got " + rat_to_string(r));
    if (r == -1) throw DomainError("negative_cf_expand: r = -1 has no expansion with entries <= -2");
    std::vector<Int> out;
    Rat cur = r;
    while (true) {
        Int a = rat_floor(cur);
        out.push_back(a);
        if (cur == a) break;
        // cur < -1 and non-integral, so a <= -2, cur - a in (0,1) and the
        // next value -1/(cur - a) is again < -1.
        cur = Rat(-1) / (cur - Rat(a));
    }
    return out;
}

Rat cf_evaluate(const std::vector<Int>& coeffs) {
    if (coeffs.empty()) throw DomainError("cf_evaluate: empty coefficient list");
    Rat acc(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        if (acc == 0) throw DomainError("cf_evaluate: division by zero");
        acc = Rat(*it) - Rat(1) / acc;
    }
    return acc;
}

} // namespace csc

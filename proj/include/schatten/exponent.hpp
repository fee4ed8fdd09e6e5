#pragma once

#include <cmath>
#include <string>

#include "schatten/errors.hpp"

namespace schatten {

// Extended-real norm exponent in [1, inf]. A tagged value, never a sentinel
// float: (sum s^p)^(1/p) with p = inf must not go through pow().
class Exponent {
public:
    static Exponent finite(double v) {
        if (!(v >= 1.0) || std::isinf(v))
            throw BadExponent("exponent must be a finite real >= 1, got " + std::to_string(v));
        return Exponent(false, v);
    }
    static Exponent infinity() { return Exponent(true, 0.0); }

    bool is_inf() const noexcept { return inf_; }
    double value() const {
        if (inf_) throw BadExponent("finite value requested from the infinite exponent");
        return v_;
    }
    // 1/p with the convention 1/inf = 0.
    double reciprocal() const noexcept { return inf_ ? 0.0 : 1.0 / v_; }

    bool operator==(const Exponent& o) const noexcept {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    Exponent(bool inf, double v) : inf_(inf), v_(v) {}
    bool inf_;
    double v_;
};

// Exponent triple (q, r, s) coupled by 1/(2q) + 1/(2r) = 1/s. Since q, r >= 1
// and at most one of them is infinite, s is always finite and lies in [1, 2q]
// (resp. [1, 2r]).
struct SchattenTriple {
    Exponent q = Exponent::finite(2.0);
    Exponent r = Exponent::finite(2.0);
    double s = 2.0;

    static SchattenTriple from_qr(Exponent q, Exponent r) {
        const double inv_s = 0.5 * q.reciprocal() + 0.5 * r.reciprocal();
        if (inv_s <= 0.0)
            throw BadTriple("q and r cannot both be infinite");
        SchattenTriple t{q, r, 1.0 / inv_s};
        t.validate();
        return t;
    }

    void validate() const {
        if (!q.is_inf() && q.value() < 1.0) throw BadTriple("q < 1");
        if (!r.is_inf() && r.value() < 1.0) throw BadTriple("r < 1");
        if (!(s >= 1.0) || std::isinf(s)) throw BadTriple("s must be finite and >= 1");
        const double lhs = 0.5 * q.reciprocal() + 0.5 * r.reciprocal();
        if (std::abs(lhs - 1.0 / s) > 1e-12)
            throw BadTriple("coupling 1/(2q) + 1/(2r) = 1/s violated");
    }

    // Frequently used exponent combinations; 1/(2q) -> 0 when q = inf.
    double half_recip_q() const noexcept { return 0.5 * q.reciprocal(); }
    double half_recip_r() const noexcept { return 0.5 * r.reciprocal(); }
    double half_minus_half_recip_q() const noexcept { return 0.5 - half_recip_q(); }
    double half_minus_half_recip_r() const noexcept { return 0.5 - half_recip_r(); }
};

}  // namespace schatten

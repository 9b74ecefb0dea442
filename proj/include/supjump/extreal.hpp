#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace supjump {

// Extended real line: finite doubles plus the two sentinels TOP (+inf) and
// BOTTOM (-inf), totally ordered. NaN is rejected at construction, so every
// comparison below is total and max/min over nonempty collections is well
// defined.
class ExtReal {
public:
    ExtReal() = default;
    ExtReal(double v) : v_(v) {
        if (std::isnan(v)) throw std::invalid_argument("ExtReal: NaN is not an extended real");
    }

    static ExtReal top() { return ExtReal(std::numeric_limits<double>::infinity()); }
    static ExtReal bottom() { return ExtReal(-std::numeric_limits<double>::infinity()); }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_top() const { return v_ == std::numeric_limits<double>::infinity(); }
    bool is_bottom() const { return v_ == -std::numeric_limits<double>::infinity(); }

    // Underlying double; +/-inf for the sentinels.
    double raw() const { return v_; }

    friend bool operator==(ExtReal, ExtReal) = default;
    friend auto operator<=>(ExtReal lhs, ExtReal rhs) { return lhs.v_ <=> rhs.v_; }

private:
    double v_ = 0.0;
};

inline ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }
inline ExtReal min(ExtReal a, ExtReal b) { return b < a ? b : a; }

// lhs > rhs + tol under extended-real ordering. IEEE arithmetic gives the
// intended sentinel behaviour: a TOP right side never fails, a BOTTOM left
// side never fails.
inline bool exceeds(ExtReal lhs, ExtReal rhs, double tol) {
    return lhs.raw() > rhs.raw() + tol;
}

}  // namespace supjump

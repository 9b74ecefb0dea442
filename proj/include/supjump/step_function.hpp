#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace supjump {

// Bounded open interval (a, b).
class Interval {
public:
    Interval(double a, double b) : a_(a), b_(b) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw std::invalid_argument("Interval: endpoints must be finite with a < b");
    }

    double a() const { return a_; }
    double b() const { return b_; }
    double length() const { return b_ - a_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double a_;
    double b_;
};

// Ordered list of the nonzero jumps v_i - v_{i-1} of a step function.
using JumpProfile = std::vector<double>;

// Piecewise-constant function on an open interval, held in normalized form:
// breakpoints strictly increasing and strictly inside the interval, adjacent
// piece values distinct. The breakpoint list therefore IS the minimal jump
// set. Point values at the breakpoints are not observable through any public
// operation; all semantics are almost-everywhere.
class StepFunction {
public:
    const Interval& interval() const { return interval_; }
    std::span<const double> breakpoints() const { return breakpoints_; }
    std::span<const double> values() const { return values_; }
    std::size_t piece_count() const { return values_.size(); }

    JumpProfile jump_profile() const {
        JumpProfile jumps;
        jumps.reserve(breakpoints_.size());
        for (std::size_t i = 1; i < values_.size(); ++i)
            jumps.push_back(values_[i] - values_[i - 1]);
        return jumps;
    }

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

    friend StepFunction make_step_function(const Interval&, std::vector<double>, std::vector<double>);

private:
    StepFunction(Interval interval, std::vector<double> breakpoints, std::vector<double> values)
        : interval_(interval), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {}

    Interval interval_;
    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

// Builds a normalized step function. Breakpoints whose adjacent values are
// equal are removed (the two pieces merge), so the stored jump set is
// minimal. Coinciding breakpoints are an error, not a merge: silently fusing
// two distinct intended jumps would corrupt the jump profile.
inline StepFunction make_step_function(const Interval& interval,
                                       std::vector<double> breakpoints,
                                       std::vector<double> values) {
    if (values.size() != breakpoints.size() + 1)
        throw std::invalid_argument("make_step_function: need one value per piece (breakpoints + 1)");
    for (double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("make_step_function: non-finite value");
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!std::isfinite(breakpoints[i]))
            throw std::invalid_argument("make_step_function: non-finite breakpoint");
        if (!(interval.a() < breakpoints[i] && breakpoints[i] < interval.b()))
            throw std::invalid_argument("make_step_function: breakpoint outside the open interval");
        if (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))
            throw std::invalid_argument("make_step_function: breakpoints must be strictly increasing");
    }

    std::vector<double> nb;
    std::vector<double> nv;
    nv.push_back(values[0]);
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (values[i + 1] == nv.back()) continue;  // merge equal adjacent pieces
        nb.push_back(breakpoints[i]);
        nv.push_back(values[i + 1]);
    }
    return StepFunction(interval, std::move(nb), std::move(nv));
}

inline JumpProfile jump_profile(const StepFunction& u) { return u.jump_profile(); }

// Exact L^1 distance, integrating |u - v| over the merged partition.
inline double l1_distance(const StepFunction& u, const StepFunction& v) {
    if (!(u.interval() == v.interval()))
        throw std::invalid_argument("l1_distance: functions live on different intervals");
    const double b = u.interval().b();
    const auto ub = u.breakpoints();
    const auto vb = v.breakpoints();
    const auto uv = u.values();
    const auto vv = v.values();

    double total = 0.0;
    double left = u.interval().a();
    std::size_t iu = 0;
    std::size_t iv = 0;
    for (;;) {
        const double next_u = iu < ub.size() ? ub[iu] : b;
        const double next_v = iv < vb.size() ? vb[iv] : b;
        const double right = std::min(next_u, next_v);
        total += std::abs(uv[iu] - vv[iv]) * (right - left);
        if (right == b) break;
        if (next_u == right) ++iu;
        if (next_v == right) ++iv;
        left = right;
    }
    return total;
}

// u = z on (a,t0], z+w on (t0,t1], z+w+v on (t1,b). Jump profile [w, v].
// With w, v drifting in n this is the two-jump perturbation family from the
// necessity proof of the lower-semicontinuity theorem.
inline StepFunction two_jump_sequence(double z, double w, double v, double t0, double t1,
                                      const Interval& interval) {
    if (!(interval.a() < t0 && t0 < t1 && t1 < interval.b()))
        throw std::invalid_argument("two_jump_sequence: need a < t0 < t1 < b");
    if (w == 0.0 || v == 0.0)
        throw std::invalid_argument("two_jump_sequence: jumps must be nonzero");
    return make_step_function(interval, {t0, t1}, {z, z + w, z + w + v});
}

// The n-th element of the jump-splitting family: z on (a,t0], z+y on
// (t0,t1], z+y+w1 on (t1, t1+1/n], z+y+w1+w2 on (t1+1/n, b). Jump profile
// [y, w1, w2]; converges in L^1 to split_jump_limit at rate |w2|/n.
inline StepFunction split_jump_sequence(double z, double y, double w1, double w2, double t0,
                                        double t1, int n, const Interval& interval) {
    if (n < 1) throw std::invalid_argument("split_jump_sequence: n must be positive");
    if (!(interval.a() < t0 && t0 < t1))
        throw std::invalid_argument("split_jump_sequence: need a < t0 < t1");
    const double t2 = t1 + 1.0 / n;
    if (!(t2 < interval.b()))
        throw std::invalid_argument("split_jump_sequence: t1 + 1/n must stay below b (n too small)");
    if (y == 0.0 || w1 == 0.0 || w2 == 0.0 || w1 + w2 == 0.0)
        throw std::invalid_argument("split_jump_sequence: y, w1, w2, w1+w2 must be nonzero");
    return make_step_function(interval, {t0, t1, t2},
                              {z, z + y, z + y + w1, z + y + w1 + w2});
}

// Companion limit of the jump-splitting family: jump profile [y, w1+w2].
inline StepFunction split_jump_limit(double z, double y, double w1, double w2, double t0,
                                     double t1, const Interval& interval) {
    if (!(interval.a() < t0 && t0 < t1 && t1 < interval.b()))
        throw std::invalid_argument("split_jump_limit: need a < t0 < t1 < b");
    if (y == 0.0 || w1 + w2 == 0.0)
        throw std::invalid_argument("split_jump_limit: y and w1+w2 must be nonzero");
    return make_step_function(interval, {t0, t1}, {z, z + y, z + y + w1 + w2});
}

}  // namespace supjump

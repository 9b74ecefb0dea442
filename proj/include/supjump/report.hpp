#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "supjump/extreal.hpp"

namespace supjump {

// A concrete tuple violating a checked inequality, with both evaluated
// sides. slack = lhs - rhs as a raw extended-real difference (finite when
// both sides are; +inf when an infinity is involved, which the ordering
// lhs > rhs makes the only possible sign).
struct ViolationWitness {
    std::string kind;               // "cartesian", "separate", "submax-1d", "symmetry", "diagonality", "lsc"
    std::vector<double> arguments;  // the violating tuple, in the checker's documented order
    ExtReal lhs;
    ExtReal rhs;
    double slack = 0.0;
};

// Outcome of a checker run. fail implies a witness; the lexicographically
// first violating tuple in the documented enumeration order, so repeated
// runs report identically.
struct CheckReport {
    bool pass = true;
    std::optional<ViolationWitness> witness;
    std::size_t tuples_checked = 0;
    std::size_t tuples_skipped = 0;
    double tolerance = 0.0;
    std::string note;  // set for vacuous runs, e.g. "lsc trivial on finite alphabet"
};

inline ViolationWitness make_witness(std::string kind, std::vector<double> arguments, ExtReal lhs,
                                     ExtReal rhs) {
    return ViolationWitness{std::move(kind), std::move(arguments), lhs, rhs, lhs.raw() - rhs.raw()};
}

}  // namespace supjump

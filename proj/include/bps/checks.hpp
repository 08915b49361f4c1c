#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bps/exact.hpp"
#include "bps/sequence.hpp"

namespace bps {

/// One per-degree comparison inside a check. For integrality checks,
/// expected is trunc(actual) so a failure shows the offending fraction next
/// to its integer part; pass is exact equality of the two columns.
struct Verdict {
    long long degree;
    Rational expected;
    Rational actual;
    bool pass;
};

/// Structured result of a conjecture/integrality check: one verdict per
/// degree in the requested range, and overall = conjunction of the passes.
struct CheckReport {
    std::string check;
    std::optional<long long> w;  ///< filled in by callers that know the tangency
    std::vector<Verdict> verdicts;
    bool overall = true;

    static CheckReport make(std::string name, std::vector<Verdict> verdicts);
};

/// Verifies n(d) is an integer for every degree d.
CheckReport check_local_integrality(const InvariantSequence& n_loc);

/// Verifies n[dw] is an integer for every degree d.
CheckReport check_relative_integrality(const InvariantSequence& n_rel);

/// Verifies the relation 3d * m(d) = (-1)^{d+1} * n(d) degree by degree,
/// m being curve counts through a fixed point of maximal order and n local
/// BPS counts. Internally also evaluates the equivalent scaled form
/// 9d^2 * m(d) = (-1)^{d+1} * 3d * n(d) and insists both agree on every
/// verdict. Throws std::invalid_argument on length mismatch.
CheckReport check_takahashi(const InvariantSequence& m, const InvariantSequence& n_loc);

/// Number of 3d-torsion points of a plane cubic: 9d^2.
Integer torsion_count(long long d);

}  // namespace bps

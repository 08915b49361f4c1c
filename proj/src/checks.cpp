#include "bps/checks.hpp"

#include <stdexcept>
#include <utility>

namespace bps {

namespace {

CheckReport integrality_report(const char* name, const InvariantSequence& seq) {
    std::vector<Verdict> verdicts;
    verdicts.reserve(static_cast<std::size_t>(seq.size()));
    for (long long d = 1; d <= seq.size(); ++d) {
        const Rational& v = seq.at_degree(d);
        verdicts.push_back({d, Rational(v.trunc()), v, v.is_integer()});
    }
    return CheckReport::make(name, std::move(verdicts));
}

}  // namespace

CheckReport CheckReport::make(std::string name, std::vector<Verdict> verdicts) {
    CheckReport report;
    report.check = std::move(name);
    report.verdicts = std::move(verdicts);
    for (const Verdict& v : report.verdicts) report.overall = report.overall && v.pass;
    return report;
}

CheckReport check_local_integrality(const InvariantSequence& n_loc) {
    if (n_loc.kind() != SequenceKind::local_bps) {
        throw std::invalid_argument("check_local_integrality: expected a local-BPS sequence");
    }
    return integrality_report("local-integrality", n_loc);
}

CheckReport check_relative_integrality(const InvariantSequence& n_rel) {
    if (n_rel.kind() != SequenceKind::relative_bps) {
        throw std::invalid_argument("check_relative_integrality: expected a relative-BPS sequence");
    }
    return integrality_report("relative-integrality", n_rel);
}

CheckReport check_takahashi(const InvariantSequence& m, const InvariantSequence& n_loc) {
    if (m.size() != n_loc.size()) {
        throw std::invalid_argument("check_takahashi: sequences must have equal length");
    }
    std::vector<Verdict> verdicts;
    verdicts.reserve(static_cast<std::size_t>(m.size()));
    for (long long d = 1; d <= m.size(); ++d) {
        const Rational sign(d % 2 == 1 ? 1 : -1);  // (-1)^{d+1}
        const Rational lhs = Rational(3 * d) * m.at_degree(d);
        const Rational rhs = sign * n_loc.at_degree(d);
        const bool pass = lhs == rhs;

        // Scaled restatement, 9d^2 m(d) = (-1)^{d+1} 3d n(d): multiplying both
        // sides by 3d != 0 cannot change a verdict, and we verify that.
        const Rational lhs_scaled = Rational(9 * d * d) * m.at_degree(d);
        const Rational rhs_scaled = sign * Rational(3 * d) * n_loc.at_degree(d);
        if ((lhs_scaled == rhs_scaled) != pass) {
            throw std::logic_error("check_takahashi: scaled form disagrees with unscaled form");
        }
        verdicts.push_back({d, rhs, lhs, pass});
    }
    return CheckReport::make("takahashi", std::move(verdicts));
}

Integer torsion_count(long long d) {
    if (d <= 0) throw std::invalid_argument("torsion_count: degree must be positive");
    return Integer(9) * Integer(d) * Integer(d);
}

}  // namespace bps

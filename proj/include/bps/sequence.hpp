#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "bps/exact.hpp"

namespace bps {

/// What a degree-indexed sequence of exact rationals represents.
enum class SequenceKind {
    local_gw,      ///< local Gromov-Witten invariants I(d), d >= 1
    local_bps,     ///< local BPS state counts n(d)
    relative_gw,   ///< maximal-tangency relative GW invariants N[dw]
    relative_bps,  ///< relative BPS state counts n[dw]
    curve_counts,  ///< degree-d rational curve counts m(d) through a fixed point
};

constexpr const char* kind_name(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::local_gw: return "local-GW";
        case SequenceKind::local_bps: return "local-BPS";
        case SequenceKind::relative_gw: return "relative-GW";
        case SequenceKind::relative_bps: return "relative-BPS";
        case SequenceKind::curve_counts: return "curve-counts";
    }
    return "?";
}

SequenceKind kind_from_name(std::string_view name);

/// Tangency datum w = D.beta of the primitive class together with the
/// truncation order n: every series and matrix in the library is computed on
/// the finite degree range 1..n. Results are prefix-stable in n.
struct TangencyContext {
    long long w;
    long long n;

    TangencyContext(long long w_, long long n_) : w(w_), n(n_) {
        if (w < 1) throw std::invalid_argument("TangencyContext: w must be >= 1");
        if (n < 1) throw std::invalid_argument("TangencyContext: truncation order must be >= 1");
    }
};

/// Finite prefix of a 1-indexed sequence of exact rationals; entry d of the
/// underlying series is values()(d-1). The kind tag is fixed at construction.
class InvariantSequence {
public:
    InvariantSequence(SequenceKind kind, RatVec values)
        : kind_(kind), values_(std::move(values)) {
        if (values_.size() < 1) {
            throw std::invalid_argument("InvariantSequence: length must be >= 1");
        }
    }

    SequenceKind kind() const { return kind_; }
    const RatVec& values() const { return values_; }
    Eigen::Index size() const { return values_.size(); }

    /// 1-indexed access by degree.
    const Rational& at_degree(Eigen::Index d) const {
        if (d < 1 || d > values_.size()) {
            throw std::out_of_range("InvariantSequence: degree out of range");
        }
        return values_(d - 1);
    }

private:
    SequenceKind kind_;
    RatVec values_;
};

}  // namespace bps

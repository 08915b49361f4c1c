#include "bps/transforms.hpp"

#include <stdexcept>
#include <string>

#include "bps/numtheory.hpp"

namespace bps {

namespace {

void require_shape(const InvariantSequence& seq, SequenceKind expected,
                   const TangencyContext& ctx, const char* fn) {
    if (seq.kind() != expected) {
        throw std::invalid_argument(std::string(fn) + ": expected a " + kind_name(expected) +
                                    " sequence, got " + kind_name(seq.kind()));
    }
    if (seq.size() != ctx.n) {
        throw std::invalid_argument(std::string(fn) + ": sequence length " +
                                    std::to_string(seq.size()) + " does not match truncation order " +
                                    std::to_string(ctx.n));
    }
}

Rational cube_ratio(long long d, long long m) {
    return Rational(pow(Integer(d), 3), pow(Integer(m), 3));
}

}  // namespace

Rational multiple_cover_contribution(long long k, long long w) {
    if (k < 1) throw std::invalid_argument("multiple_cover_contribution: k must be >= 1");
    if (w < 1) throw std::invalid_argument("multiple_cover_contribution: w must be >= 1");
    const Integer top = Integer(k) * Integer(w - 1) - Integer(1);
    return Rational(gen_binomial(top, k - 1), Integer(k) * Integer(k));
}

InvariantSequence local_gw_from_bps(const InvariantSequence& n, const TangencyContext& ctx) {
    require_shape(n, SequenceKind::local_bps, ctx, "local_gw_from_bps");
    RatVec out(ctx.n);
    for (long long m = 1; m <= ctx.n; ++m) {
        Rational acc(0);
        for (long long d : divisors(m)) {
            acc += n.values()(d - 1) * cube_ratio(d, m);
        }
        out(m - 1) = acc;
    }
    return {SequenceKind::local_gw, std::move(out)};
}

InvariantSequence local_bps_from_gw(const InvariantSequence& gw, const TangencyContext& ctx) {
    require_shape(gw, SequenceKind::local_gw, ctx, "local_bps_from_gw");
    RatVec out(ctx.n);
    for (long long m = 1; m <= ctx.n; ++m) {
        Rational acc(0);
        for (long long d : divisors(m)) {
            const int mu = mobius(m / d);
            if (mu == 0) continue;
            acc += Rational(Integer(mu) * pow(Integer(d), 3)) * gw.values()(d - 1);
        }
        out(m - 1) = acc / Rational(pow(Integer(m), 3));
    }
    return {SequenceKind::local_bps, std::move(out)};
}

InvariantSequence relative_gw_from_bps(const InvariantSequence& n, const TangencyContext& ctx) {
    require_shape(n, SequenceKind::relative_bps, ctx, "relative_gw_from_bps");
    RatVec out(ctx.n);
    for (long long m = 1; m <= ctx.n; ++m) {
        Rational acc(0);
        for (long long d : divisors(m)) {
            acc += n.values()(d - 1) * multiple_cover_contribution(m / d, d * ctx.w);
        }
        out(m - 1) = acc;
    }
    return {SequenceKind::relative_gw, std::move(out)};
}

InvariantSequence relative_bps_from_gw(const InvariantSequence& gw, const TangencyContext& ctx) {
    require_shape(gw, SequenceKind::relative_gw, ctx, "relative_bps_from_gw");
    RatVec out(ctx.n);
    for (long long m = 1; m <= ctx.n; ++m) {
        // Forward substitution: the d = m term of the divisor sum has
        // coefficient M[1] = 1, so solve for it.
        Rational acc = gw.values()(m - 1);
        for (long long d : divisors(m)) {
            if (d == m) continue;
            acc -= out(d - 1) * multiple_cover_contribution(m / d, d * ctx.w);
        }
        out(m - 1) = acc;
    }
    return {SequenceKind::relative_bps, std::move(out)};
}

RatMat local_gw_kernel(Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("local_gw_kernel: order must be >= 1");
    RatMat k = RatMat::Zero(n, n);
    for (long long m = 1; m <= n; ++m) {
        for (long long d : divisors(m)) {
            k(m - 1, d - 1) = cube_ratio(d, m);
        }
    }
    return k;
}

RatMat relative_gw_kernel(const TangencyContext& ctx) {
    RatMat k = RatMat::Zero(ctx.n, ctx.n);
    for (long long m = 1; m <= ctx.n; ++m) {
        for (long long d : divisors(m)) {
            k(m - 1, d - 1) = multiple_cover_contribution(m / d, d * ctx.w);
        }
    }
    return k;
}

}  // namespace bps

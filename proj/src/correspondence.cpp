#include "bps/correspondence.hpp"

#include <stdexcept>
#include <string>

#include "bps/numtheory.hpp"
#include "bps/transforms.hpp"

namespace bps {

namespace {

int parity_sign(long long e) { return e % 2 == 0 ? 1 : -1; }

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

/// Inverse of a lower-triangular rational matrix by forward substitution.
RatMat invert_lower_triangular(const RatMat& a) {
    const Eigen::Index n = a.rows();
    RatMat x = RatMat::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            Rational acc = i == j ? Rational(1) : Rational(0);
            for (Eigen::Index k = j; k < i; ++k) {
                acc -= a(i, k) * x(k, j);
            }
            x(i, j) = acc / a(i, i);
        }
    }
    return x;
}

}  // namespace

NonIntegralEntry::NonIntegralEntry(long long s, long long t, long long w, Rational value)
    : std::runtime_error("correspondence matrix entry (" + std::to_string(s) + ", " +
                         std::to_string(t) + ") at w = " + std::to_string(w) +
                         " is not an integer: " + value.to_string()),
      s_(s), t_(t), w_(w), value_(std::move(value)) {}

Rational c_entry(long long s, long long t, long long w) {
    if (s < 1 || t < 1 || w < 1) {
        throw std::invalid_argument("c_entry: arguments must be positive");
    }
    if (s % t != 0) return Rational(0);
    const long long r = s / t;
    Integer acc(0);
    for (long long k : iset(r)) {
        // s/(kt) = r/k, which is integral exactly because k | r.
        const int sign = parity_sign(omega(r / k)) * parity_sign(k * t * w);
        const Integer binom = gen_binomial(Integer(k) * Integer(t * w - 1) - Integer(1), k - 1);
        acc += Integer(sign) * binom;
    }
    const Integer num = Integer(parity_sign(s * w)) * acc;
    return Rational(num, Integer(r) * Integer(r));
}

CorrespondenceMatrix::CorrespondenceMatrix(long long w, IntMat entries)
    : w_(w), entries_(std::move(entries)) {
    if (w_ < 1) throw std::invalid_argument("CorrespondenceMatrix: w must be >= 1");
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("CorrespondenceMatrix: entries must be square and nonempty");
    }
}

Integer CorrespondenceMatrix::det() const {
    Integer d(1);
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) d *= entries_(i, i);
    return d;
}

CorrespondenceMatrix build_c_matrix(const TangencyContext& ctx) {
    IntMat entries = IntMat::Zero(ctx.n, ctx.n);
    for (long long s = 1; s <= ctx.n; ++s) {
        for (long long t : divisors(s)) {
            const Rational value = c_entry(s, t, ctx.w);
            if (!value.is_integer()) throw NonIntegralEntry(s, t, ctx.w, value);
            entries(s - 1, t - 1) = value.numerator();
        }
    }
    return {ctx.w, std::move(entries)};
}

CorrespondenceMatrix invert_c_matrix(const CorrespondenceMatrix& c) {
    const Eigen::Index n = c.size();
    IntMat x = IntMat::Identity(n, n);
    for (long long s = 1; s <= n; ++s) {
        for (long long t : divisors(s)) {
            if (t == s) continue;
            const Integer& coeff = c.entries()(s - 1, t - 1);
            if (coeff.is_zero()) continue;
            x.row(s - 1) -= coeff * x.row(t - 1);
        }
    }
    return {c.w(), std::move(x)};
}

Integer theorem_scaling(long long d, long long w) {
    if (d < 1 || w < 1) throw std::invalid_argument("theorem_scaling: arguments must be positive");
    return Integer(parity_sign(d * w + 1)) * Integer(d) * Integer(w);
}

InvariantSequence local_from_relative(const InvariantSequence& n_rel, const TangencyContext& ctx) {
    require_shape(n_rel, SequenceKind::relative_bps, ctx, "local_from_relative");
    const CorrespondenceMatrix c = build_c_matrix(ctx);
    const RatVec image = c.entries().cast<Rational>() * n_rel.values();
    RatVec out(ctx.n);
    for (long long d = 1; d <= ctx.n; ++d) {
        out(d - 1) = image(d - 1) / Rational(theorem_scaling(d, ctx.w));
    }
    return {SequenceKind::local_bps, std::move(out)};
}

InvariantSequence relative_from_local(const InvariantSequence& n_loc, const TangencyContext& ctx) {
    require_shape(n_loc, SequenceKind::local_bps, ctx, "relative_from_local");
    const CorrespondenceMatrix c = build_c_matrix(ctx);
    RatVec out(ctx.n);
    for (long long s = 1; s <= ctx.n; ++s) {
        Rational acc = Rational(theorem_scaling(s, ctx.w)) * n_loc.values()(s - 1);
        for (long long t : divisors(s)) {
            if (t == s) continue;
            acc -= Rational(c.entries()(s - 1, t - 1)) * out(t - 1);
        }
        out(s - 1) = acc;  // unit diagonal, nothing to divide by
    }
    return {SequenceKind::relative_bps, std::move(out)};
}

RatMat composed_oracle_matrix(const TangencyContext& ctx) {
    const RatMat b = relative_gw_kernel(ctx);
    const RatMat a_inv = invert_lower_triangular(local_gw_kernel(ctx.n));
    RatVec lambda(ctx.n);
    for (long long d = 1; d <= ctx.n; ++d) {
        lambda(d - 1) = Rational(theorem_scaling(d, ctx.w));
    }
    RatMat scaled = b;
    for (Eigen::Index i = 0; i < ctx.n; ++i) {
        scaled.row(i) *= lambda(i).reciprocal();
    }
    RatMat out = a_inv * scaled;
    for (Eigen::Index i = 0; i < ctx.n; ++i) {
        out.row(i) *= lambda(i);
    }
    return out;
}

}  // namespace bps

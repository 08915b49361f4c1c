#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "bps/exact.hpp"
#include "bps/sequence.hpp"

namespace bps {

/// Raised when the closed formula for a correspondence-matrix entry fails the
/// exact integrality check. The entries are integers for the geometries the
/// matrix is built for, so a non-integral value signals either a transcription
/// bug or an input outside that setup; it is never silently rounded.
class NonIntegralEntry : public std::runtime_error {
public:
    NonIntegralEntry(long long s, long long t, long long w, Rational value);

    long long s() const { return s_; }
    long long t() const { return t_; }
    long long w() const { return w_; }
    const Rational& value() const { return value_; }

private:
    long long s_, t_, w_;
    Rational value_;
};

/// Entry (s, t) of the correspondence matrix for tangency w:
///
///   C[s][t] = ((-1)^{sw} / (s/t)^2) *
///             sum_{k in I(s/t)} (-1)^{omega(s/(kt))} (-1)^{ktw} binom(k(tw-1)-1, k-1)
///
/// for t | s, and 0 otherwise. Evaluated exactly as a rational; integrality is
/// a separate check (see build_c_matrix), never an assumption. The diagonal is
/// identically 1. Throws std::invalid_argument for nonpositive arguments.
Rational c_entry(long long s, long long t, long long w);

/// N x N lower-triangular integer matrix linking relative to local BPS state
/// counts; nonzero entries only where the column index divides the row index.
/// Immutable after construction, determinant 1 (unit diagonal).
class CorrespondenceMatrix {
public:
    CorrespondenceMatrix(long long w, IntMat entries);

    long long w() const { return w_; }
    Eigen::Index size() const { return entries_.rows(); }
    const IntMat& entries() const { return entries_; }

    const Integer& entry(long long s, long long t) const { return entries_(s - 1, t - 1); }

    /// Product of the diagonal; equals the determinant by triangularity.
    Integer det() const;

private:
    long long w_;
    IntMat entries_;
};

/// Evaluates c_entry on every divisor pair (t | s <= N) and verifies exact
/// integrality of each entry; throws NonIntegralEntry on the first violation.
CorrespondenceMatrix build_c_matrix(const TangencyContext& ctx);

/// Exact integer inverse, by forward substitution down the divisor lattice.
/// No division occurs (unit diagonal), so the result is integral by
/// construction; C * C^{-1} = I exactly.
CorrespondenceMatrix invert_c_matrix(const CorrespondenceMatrix& c);

/// Diagonal scaling (-1)^{dw+1} * d * w relating the two BPS vectors: the
/// correspondence identity reads C * n_rel = Lambda * n_loc with
/// Lambda_dd = theorem_scaling(d, w).
Integer theorem_scaling(long long d, long long w);

/// Applies the correspondence identity left to right: given relative BPS
/// counts, returns local BPS counts n_loc(d) = (C * n_rel)(d) / theorem_scaling(d, w).
/// The output is exact and not forced to be integral for arbitrary input.
InvariantSequence local_from_relative(const InvariantSequence& n_rel, const TangencyContext& ctx);

/// Inverse direction: n_rel = C^{-1} * (Lambda * n_loc), computed by a
/// unit-diagonal triangular solve. Exact; round-trips with local_from_relative.
InvariantSequence relative_from_local(const InvariantSequence& n_loc, const TangencyContext& ctx);

/// Independent reconstruction of the correspondence matrix from the two
/// GW <-> BPS kernels: Lambda * A^{-1} * Lambda^{-1} * B, where B is the
/// relative BPS -> GW kernel, A the local BPS -> GW kernel and Lambda the
/// theorem_scaling diagonal. Shares no code with c_entry; used to cross-check
/// build_c_matrix entrywise.
RatMat composed_oracle_matrix(const TangencyContext& ctx);

}  // namespace bps

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "bps/transforms.hpp"
#include "testutil.hpp"

using namespace bps;
namespace tu = bps::testutil;

namespace {

const Rational kZero(0);

InvariantSequence zeros(SequenceKind kind, Eigen::Index n) {
    RatVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = kZero;
    return {kind, std::move(v)};
}

}  // namespace

TEST_CASE("multiple cover contribution") {
    for (long long w = 1; w <= 9; ++w) {
        CHECK(multiple_cover_contribution(1, w) == Rational(1));
    }
    CHECK(multiple_cover_contribution(2, 3) == Rational(Integer(3), Integer(4)));
    CHECK(multiple_cover_contribution(5, 2) == Rational(Integer(1), Integer(25)));
    CHECK_THROWS_AS(multiple_cover_contribution(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(multiple_cover_contribution(2, 0), std::invalid_argument);

    SUBCASE("w = 2 collapses to 1/k^2") {
        for (long long k = 1; k <= 40; ++k) {
            CHECK(multiple_cover_contribution(k, 2) == Rational(Integer(1), Integer(k * k)));
        }
    }
}

TEST_CASE("local transform on basis and zero input") {
    const TangencyContext ctx(1, 3);
    const auto gw = local_gw_from_bps(tu::make_seq(SequenceKind::local_bps, {"1", "0", "0"}), ctx);
    CHECK(gw.kind() == SequenceKind::local_gw);
    CHECK(gw.values() == tu::rat_vec({"1", "1/8", "1/27"}));

    const TangencyContext ctx4(1, 4);
    const auto gw2 =
        local_gw_from_bps(tu::make_seq(SequenceKind::local_bps, {"0", "1", "0", "0"}), ctx4);
    CHECK(gw2.values() == tu::rat_vec({"0", "1", "0", "1/8"}));

    const auto z = local_gw_from_bps(zeros(SequenceKind::local_bps, 5), TangencyContext(1, 5));
    CHECK(z.values() == zeros(SequenceKind::local_gw, 5).values());
}

TEST_CASE("local inverse: frozen values and Moebius formula vs generic solve") {
    const TangencyContext ctx(1, 3);
    const auto bps_counts =
        local_bps_from_gw(tu::make_seq(SequenceKind::local_gw, {"1", "1/8", "1/27"}), ctx);
    CHECK(bps_counts.kind() == SequenceKind::local_bps);
    CHECK(bps_counts.values() == tu::rat_vec({"1", "0", "0"}));

    // n2 from I = [3, -45/8]: the triangular system gives -45/8 = 3/8 + n2.
    const TangencyContext ctx2(1, 2);
    const auto small = local_bps_from_gw(tu::make_seq(SequenceKind::local_gw, {"3", "-45/8"}), ctx2);
    CHECK(small.values() == tu::rat_vec({"3", "-6"}));

    SUBCASE("agrees with forward substitution on random input") {
        std::mt19937_64 rng(4242);
        for (int iter = 0; iter < 30; ++iter) {
            const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 24);
            const TangencyContext c(1, n);
            const RatVec gw = tu::random_rat_vec(rng, n);
            const auto via_moebius =
                local_bps_from_gw(InvariantSequence(SequenceKind::local_gw, gw), c);
            CHECK(via_moebius.values() == tu::solve_unit_lower(local_gw_kernel(n), gw));
        }
    }
}

TEST_CASE("relative transform on basis and zero input") {
    const TangencyContext ctx(3, 3);
    const auto gw =
        relative_gw_from_bps(tu::make_seq(SequenceKind::relative_bps, {"1", "0", "0"}), ctx);
    CHECK(gw.kind() == SequenceKind::relative_gw);
    CHECK(gw.values() == tu::rat_vec({"1", "3/4", "10/9"}));

    const TangencyContext ctx2(2, 3);
    const auto gw2 =
        relative_gw_from_bps(tu::make_seq(SequenceKind::relative_bps, {"1", "0", "0"}), ctx2);
    CHECK(gw2.values() == tu::rat_vec({"1", "1/4", "1/9"}));

    const auto z = relative_gw_from_bps(zeros(SequenceKind::relative_bps, 3), ctx);
    CHECK(z.values() == zeros(SequenceKind::relative_gw, 3).values());
}

TEST_CASE("relative inverse: frozen values and round trip") {
    const TangencyContext ctx(3, 3);
    const auto bps_counts =
        relative_bps_from_gw(tu::make_seq(SequenceKind::relative_gw, {"1", "3/4", "10/9"}), ctx);
    CHECK(bps_counts.kind() == SequenceKind::relative_bps);
    CHECK(bps_counts.values() == tu::rat_vec({"1", "0", "0"}));

    const auto z = relative_bps_from_gw(zeros(SequenceKind::relative_gw, 4), TangencyContext(3, 4));
    CHECK(z.values() == zeros(SequenceKind::relative_bps, 4).values());

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 20);
        const long long w = 1 + static_cast<long long>(rng() % 9);
        const TangencyContext c(w, n);
        const RatVec v = tu::random_int_vec(rng, n);
        const auto round =
            relative_bps_from_gw(relative_gw_from_bps(InvariantSequence(SequenceKind::relative_bps, v), c), c);
        CHECK(round.values() == v);
    }
}

TEST_CASE("round trips are exact in both orders") {
    std::mt19937_64 rng(20240812);
    for (int iter = 0; iter < 60; ++iter) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 40);
        const long long w = 1 + static_cast<long long>(rng() % 9);
        const TangencyContext ctx(w, n);
        const RatVec v = tu::random_rat_vec(rng, n);

        CHECK(local_bps_from_gw(
                  local_gw_from_bps(InvariantSequence(SequenceKind::local_bps, v), ctx), ctx)
                  .values() == v);
        CHECK(local_gw_from_bps(
                  local_bps_from_gw(InvariantSequence(SequenceKind::local_gw, v), ctx), ctx)
                  .values() == v);
        CHECK(relative_bps_from_gw(
                  relative_gw_from_bps(InvariantSequence(SequenceKind::relative_bps, v), ctx), ctx)
                  .values() == v);
        CHECK(relative_gw_from_bps(
                  relative_bps_from_gw(InvariantSequence(SequenceKind::relative_gw, v), ctx), ctx)
                  .values() == v);
    }
}

TEST_CASE("transforms are linear") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 20; ++iter) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 16);
        const long long w = 1 + static_cast<long long>(rng() % 9);
        const TangencyContext ctx(w, n);
        const RatVec x = tu::random_rat_vec(rng, n);
        const RatVec y = tu::random_rat_vec(rng, n);
        const Rational a = tu::random_rational(rng);
        const Rational b = tu::random_rational(rng);

        const RatVec combined = a * x + b * y;
        {
            const auto tx = local_gw_from_bps(InvariantSequence(SequenceKind::local_bps, x), ctx);
            const auto ty = local_gw_from_bps(InvariantSequence(SequenceKind::local_bps, y), ctx);
            const auto tc =
                local_gw_from_bps(InvariantSequence(SequenceKind::local_bps, combined), ctx);
            CHECK(tc.values() == a * tx.values() + b * ty.values());
        }
        {
            const auto tx =
                relative_bps_from_gw(InvariantSequence(SequenceKind::relative_gw, x), ctx);
            const auto ty =
                relative_bps_from_gw(InvariantSequence(SequenceKind::relative_gw, y), ctx);
            const auto tc =
                relative_bps_from_gw(InvariantSequence(SequenceKind::relative_gw, combined), ctx);
            CHECK(tc.values() == a * tx.values() + b * ty.values());
        }
    }
}

TEST_CASE("prefix stability: truncating commutes with transforming") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 20; ++iter) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 15);
        const long long w = 1 + static_cast<long long>(rng() % 9);
        const RatVec v = tu::random_rat_vec(rng, 2 * n);
        const TangencyContext small(w, n), big(w, 2 * n);

        using Fn = InvariantSequence (*)(const InvariantSequence&, const TangencyContext&);
        const std::pair<SequenceKind, Fn> ops[] = {
            {SequenceKind::local_bps, local_gw_from_bps},
            {SequenceKind::local_gw, local_bps_from_gw},
            {SequenceKind::relative_bps, relative_gw_from_bps},
            {SequenceKind::relative_gw, relative_bps_from_gw},
        };
        for (const auto& [kind, op] : ops) {
            const auto full = op(InvariantSequence(kind, v), big);
            const auto prefix = op(InvariantSequence(kind, v.head(n)), small);
            CHECK(prefix.values() == full.values().head(n));
        }
    }
}

TEST_CASE("kernel matrices have unit diagonal and divisor support") {
    const Eigen::Index n = 40;
    const RatMat local = local_gw_kernel(n);
    for (long long w = 1; w <= 9; ++w) {
        const RatMat rel = relative_gw_kernel(TangencyContext(w, n));
        for (Eigen::Index m = 1; m <= n; ++m) {
            CHECK(local(m - 1, m - 1) == Rational(1));
            CHECK(rel(m - 1, m - 1) == Rational(1));
            for (Eigen::Index d = 1; d <= n; ++d) {
                if (m % d != 0 || d > m) {
                    CHECK(local(m - 1, d - 1) == kZero);
                    CHECK(rel(m - 1, d - 1) == kZero);
                }
            }
        }
    }
}

TEST_CASE("transforms reject wrong kind or length") {
    const TangencyContext ctx(3, 3);
    const auto wrong_kind = tu::make_seq(SequenceKind::local_gw, {"1", "0", "0"});
    CHECK_THROWS_AS(local_gw_from_bps(wrong_kind, ctx), std::invalid_argument);
    const auto wrong_length = tu::make_seq(SequenceKind::local_bps, {"1", "0"});
    CHECK_THROWS_AS(local_gw_from_bps(wrong_length, ctx), std::invalid_argument);
    CHECK_THROWS_AS(relative_bps_from_gw(tu::make_seq(SequenceKind::relative_bps, {"1"}),
                                         TangencyContext(2, 1)),
                    std::invalid_argument);
}

#include "g2sub/finite_groups.hpp"
#include "g2sub/sheaves.hpp"
#include "g2sub/verify.hpp"

#include <gtest/gtest.h>

using namespace g2sub;
using S = SimpleObject;
using L = LocalSystem;

namespace {

// Transcribed tables, rows IC1_C0, IC1_C1, IC1_C2, IC1_C3, ICR_C3, ICE_C3.
constexpr int kStalkRanks[6][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 1, 0},
                                   {1, 1, 1, 1}, {1, 0, 1, 2}, {0, 0, 0, 1}};
constexpr int kGeomult[6][6] = {{1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {2, 1, 1, 0, 0, 0},
                                {1, 1, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
constexpr int kRepmult[6][6] = {{1, 1, 2, 1, 1, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0},
                                {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
const L kEvs[6][4] = {{L::one, L::zero, L::zero, L::zero}, {L::R, L::T, L::zero, L::zero},
                      {L::zero, L::one, L::T, L::zero},    {L::zero, L::zero, L::zero, L::one},
                      {L::zero, L::zero, L::one, L::R},    {L::E, L::T, L::one, L::E}};
const L kNEvs[6][4] = {{L::one, L::zero, L::zero, L::zero}, {L::R, L::one, L::zero, L::zero},
                       {L::zero, L::T, L::one, L::zero},    {L::zero, L::zero, L::zero, L::one},
                       {L::zero, L::zero, L::T, L::R},      {L::E, L::one, L::T, L::E}};

size_t at(S o) { return static_cast<size_t>(index(o)); }

}  // namespace

TEST(Covers, FiberRanksAndRecount) {
    const int encoded[5][4] = {{2, 1, 0, 0}, {2, 1, 1, 0}, {2, 1, 2, 3}, {8, 1, 3, 6}, {4, 3, 1, 2}};
    for (size_t c = 0; c < 5; ++c)
        for (size_t o = 0; o < 4; ++o) {
            EXPECT_EQ(fiber_cohomology_rank(kCovers[c], kOrbits[o]), encoded[c][o]) << name(kCovers[c]);
            if (kCovers[c] != Cover::rhoE)
                EXPECT_EQ(recount_fiber_rank(kCovers[c], kOrbits[o]), encoded[c][o]) << name(kCovers[c]);
        }
}

TEST(Covers, Decompositions) {
    EXPECT_EQ(pushforward_decomposition(Cover::rho1), (KClass{{{S::IC1_C0, 0}, 1}, {{S::IC1_C1, 0}, 1}}));
    EXPECT_EQ(pushforward_decomposition(Cover::rho2), (KClass{{{S::IC1_C2, 0}, 1}}));
    EXPECT_EQ(pushforward_decomposition(Cover::rhoE),
              (KClass{{{S::IC1_C3, 0}, 1}, {{S::ICE_C3, 0}, 1}, {{S::IC1_C1, 0}, 2}, {{S::IC1_C0, 0}, 1}}));
    EXPECT_EQ(pushforward_decomposition(Cover::rho3pp),
              (KClass{{{S::IC1_C3, 0}, 1}, {{S::ICR_C3, 0}, 2}, {{S::ICE_C3, 0}, 1}, {{S::IC1_C0, 0}, 3},
                      {{S::IC1_C0, 2}, 1}, {{S::IC1_C0, -2}, 1}}));
}

TEST(Stalks, SolverReproducesTheTable) {
    const StalkRanks solved = solve_ic_stalk_ranks();
    const StalkRanks table = graded_stalk_totals();
    for (size_t i = 0; i < 6; ++i)
        for (size_t o = 0; o < 4; ++o) {
            EXPECT_EQ(solved[i][o], kStalkRanks[i][o]) << name(kSimpleObjects[i]) << " at C" << o;
            EXPECT_EQ(table[i][o], kStalkRanks[i][o]);
        }
}

TEST(Stalks, CoverEquationsHoldIncludingRhoE) {
    const StalkRanks solved = solve_ic_stalk_ranks();
    for (Cover c : kCovers)
        for (size_t o = 0; o < 4; ++o) {
            int total = 0;
            for (const auto& [key, m] : pushforward_decomposition(c)) total += m * solved[at(key.first)][o];
            EXPECT_EQ(total, fiber_cohomology_rank(c, kOrbits[o])) << name(c) << " at C" << o;
        }
}

TEST(Stalks, CorruptedFiberRankIsRejected) {
    EXPECT_THROW(solve_ic_stalk_ranks(with_fault("fiber")), InconsistentSystem);
}

TEST(Multiplicities, GeometricAndRepresentationMatrices) {
    const IntMatrix6 geo = geometric_multiplicity_matrix();
    const IntMatrix6 rep = rep_multiplicity_matrix();
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            EXPECT_EQ(geo[i][j], kGeomult[i][j]);
            EXPECT_EQ(rep[i][j], kRepmult[i][j]);
        }
}

TEST(Multiplicities, KazhdanLusztigTranspose) {
    const IntMatrix6 geo = geometric_multiplicity_matrix();
    const IntMatrix6 rep = rep_multiplicity_matrix();
    EXPECT_TRUE(kl_check(geo, rep));
    EXPECT_EQ(geo, transpose(rep));
    IntMatrix6 id{};
    for (size_t i = 0; i < 6; ++i) id[i][i] = 1;
    EXPECT_TRUE(kl_check(id, id));
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            IntMatrix6 bad = rep;
            bad[i][j] += 1;
            EXPECT_FALSE(kl_check(geo, bad));
        }
}

TEST(Microlocal, EvsAndNEvsTables) {
    for (size_t i = 0; i < 6; ++i)
        for (size_t k = 0; k < 4; ++k) {
            EXPECT_EQ(evs(kSimpleObjects[i])[k], kEvs[i][k]) << name(kSimpleObjects[i]);
            EXPECT_EQ(nevs(kSimpleObjects[i])[k], kNEvs[i][k]) << name(kSimpleObjects[i]);
        }
}

TEST(Microlocal, NEvsFollowsFromEvsByTheStratumTwist) {
    const MicrolocalTable derived = derive_nevs();
    for (size_t i = 0; i < 6; ++i)
        for (size_t k = 0; k < 4; ++k) EXPECT_EQ(derived[i][k], kNEvs[i][k]);
}

TEST(Microlocal, TwistRuleOracle) {
    // NEvs = Evs tensored with the character of Evs(IC(1_{C_k})) at stratum k.
    for (size_t k = 0; k < 4; ++k) {
        const auto t = character_table(stratum_group(static_cast<int>(k)));
        const L twist = kEvs[k][k];
        for (size_t i = 0; i < 6; ++i) {
            if (kEvs[i][k] == L::zero) {
                EXPECT_EQ(kNEvs[i][k], L::zero);
                continue;
            }
            const auto chi = tensor(character_of(t, irrep(kEvs[i][k])), character_of(t, irrep(twist)));
            const auto parts = decompose(t, chi);
            ASSERT_EQ(parts.size(), 1u);
            EXPECT_EQ(parts.begin()->second, 1);
            EXPECT_EQ(local_system(parts.begin()->first), kNEvs[i][k]);
        }
    }
}

TEST(Microlocal, CorruptedEvsIsDetected) {
    EXPECT_THROW(nevs(S::IC1_C2, with_fault("evs")), NEvsMismatch);
}

TEST(Microlocal, ZeroPatternRespectsClosureOrder) {
    // C_k lies in the closure of C_j iff k <= j.
    for (S obj : kSimpleObjects)
        for (int k = 0; k < 4; ++k)
            if (k > index(support(obj))) EXPECT_EQ(evs(obj)[static_cast<size_t>(k)], L::zero) << name(obj);
}

TEST(Microlocal, DiagonalIsTrivial) {
    for (int k = 0; k < 4; ++k) EXPECT_EQ(nevs(trivial_ic(kOrbits[static_cast<size_t>(k)]))[static_cast<size_t>(k)], L::one);
}

TEST(Microlocal, LocalSystemRanks) {
    EXPECT_EQ(rank(L::one), 1);
    EXPECT_EQ(rank(L::T), 1);
    EXPECT_EQ(rank(L::R), 2);
    EXPECT_EQ(rank(L::E), 1);
    EXPECT_EQ(rank(L::one) + 2 * rank(L::R) + rank(L::E), 6);
}

TEST(Fourier, ImagesAndInvolution) {
    const std::pair<int, LocalSystemLabel> dual_images[6] = {
        {0, LocalSystemLabel::triv}, {0, LocalSystemLabel::refl}, {1, LocalSystemLabel::triv},
        {3, LocalSystemLabel::triv}, {2, LocalSystemLabel::triv}, {0, LocalSystemLabel::sign}};
    const S primal[6] = {S::IC1_C3, S::ICR_C3, S::IC1_C2, S::IC1_C0, S::IC1_C1, S::ICE_C3};
    for (size_t i = 0; i < 6; ++i) {
        const auto f = fourier(kSimpleObjects[i]);
        EXPECT_EQ(f.dual_orbit, dual_images[i].first);
        EXPECT_EQ(f.label, dual_images[i].second);
        EXPECT_EQ(f.primal, primal[i]);
        EXPECT_EQ(fourier(f.primal).primal, kSimpleObjects[i]);
    }
}

TEST(CharacterTables, OrthogonalityAndValues) {
    const auto s3 = character_table(GroupLabel::S3);
    EXPECT_EQ(s3.value(Irrep::rho, 0), 2);
    EXPECT_EQ(s3.value(Irrep::eps, s3.involution_class()), -1);
    for (const auto& t : {s3, character_table(GroupLabel::S2), character_table(GroupLabel::Trivial)}) {
        for (Irrep a : t.irreps)
            for (Irrep b : t.irreps) {
                int sum = 0;
                for (size_t c = 0; c < t.classes.size(); ++c)
                    sum += t.class_sizes[c] * t.value(a, static_cast<int>(c)) * t.value(b, static_cast<int>(c));
                EXPECT_EQ(sum, a == b ? t.order() : 0);
            }
    }
}

TEST(CharacterTables, DecomposeRegularRepresentation) {
    const auto s3 = character_table(GroupLabel::S3);
    const auto parts = decompose(s3, Character{6, 0, 0});
    EXPECT_EQ(parts.at(Irrep::one), 1);
    EXPECT_EQ(parts.at(Irrep::rho), 2);
    EXPECT_EQ(parts.at(Irrep::eps), 1);
    EXPECT_THROW(decompose(s3, Character{1, 0, 0}), InconsistentSystem);
}

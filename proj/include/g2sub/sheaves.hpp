#pragma once

#include "g2sub/cubic_forms.hpp"
#include "g2sub/finite_groups.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g2sub {

enum class SimpleObject { IC1_C0, IC1_C1, IC1_C2, IC1_C3, ICR_C3, ICE_C3 };
constexpr std::array<SimpleObject, 6> kSimpleObjects{SimpleObject::IC1_C0, SimpleObject::IC1_C1,
                                                     SimpleObject::IC1_C2, SimpleObject::IC1_C3,
                                                     SimpleObject::ICR_C3, SimpleObject::ICE_C3};
enum class LocalSystemLabel { triv, refl, sign };

inline int index(SimpleObject o) { return static_cast<int>(o); }
std::string name(SimpleObject o);
std::string name(LocalSystemLabel l);
OrbitClass support(SimpleObject o);
LocalSystemLabel label(SimpleObject o);
SimpleObject simple_object(OrbitClass support, LocalSystemLabel label);  // throws for refl/sign off C3
// The IC sheaf of the trivial system on the orbit.
inline SimpleObject trivial_ic(OrbitClass o) { return static_cast<SimpleObject>(index(o)); }

// Local systems on orbits and on conormal strata.
enum class LocalSystem { zero, one, T, R, E };
std::string name(LocalSystem l);
int rank(LocalSystem l);
Irrep irrep(LocalSystem l);  // one->1, T->tau, R->rho, E->eps
LocalSystem local_system(Irrep r);
// Group whose representations are the local systems on stratum i: S3, S2, S2, S3.
GroupLabel stratum_group(int stratum);

// Grothendieck-group class: (object, shift) -> multiplicity.
using KClass = std::map<std::pair<SimpleObject, int>, int>;
std::string to_string(const KClass& k);

enum class Cover { rho1, rho2, rho3, rho3pp, rhoE };
constexpr std::array<Cover, 5> kCovers{Cover::rho1, Cover::rho2, Cover::rho3, Cover::rho3pp, Cover::rhoE};
std::string name(Cover c);

using MicrolocalRow = std::array<LocalSystem, 4>;
using MicrolocalTable = std::array<MicrolocalRow, 6>;

struct StalkTerm {
    LocalSystem system;
    int shift;
};

struct FourierImage {
    int dual_orbit;           // i for C_i^*
    LocalSystemLabel label;
    SimpleObject primal;      // dual orbit replaced by the primal orbit of the same shape
};

// The encoded source tables. Everything else is recomputed from these.
struct SheafData {
    std::array<std::array<int, 4>, 5> fiber_ranks;          // cover x orbit
    std::array<KClass, 5> decompositions;                   // cover
    std::array<std::array<std::vector<StalkTerm>, 4>, 6> stalks;  // object x orbit
    std::array<std::array<int, 6>, 6> repmult;              // M_i x pi_j
    MicrolocalTable evs;
    MicrolocalTable nevs;
    std::array<std::pair<int, LocalSystemLabel>, 6> fourier;  // object -> (dual orbit, label)

    static const SheafData& encoded();
};

int fiber_cohomology_rank(Cover c, OrbitClass o, const SheafData& data = SheafData::encoded());
// Recount from the lines through a representative: number of lines (or ordered
// factorizations) in the fiber; the fiber over 0 is a product of projective lines.
int recount_fiber_rank(Cover c, OrbitClass o);
KClass pushforward_decomposition(Cover c, const SheafData& data = SheafData::encoded());

using StalkRanks = std::array<std::array<int, 4>, 6>;  // object x orbit
StalkRanks solve_ic_stalk_ranks(const SheafData& data = SheafData::encoded());
StalkRanks graded_stalk_totals(const SheafData& data = SheafData::encoded());

using IntMatrix6 = std::array<std::array<int, 6>, 6>;
IntMatrix6 geometric_multiplicity_matrix(const SheafData& data = SheafData::encoded());
IntMatrix6 rep_multiplicity_matrix(const SheafData& data = SheafData::encoded());
bool kl_check(const IntMatrix6& geo, const IntMatrix6& rep);
IntMatrix6 transpose(const IntMatrix6& m);

MicrolocalRow evs(SimpleObject obj, const SheafData& data = SheafData::encoded());
// NEvs recomputed by twisting Evs; throws NEvsMismatch if the recomputed table differs from the encoded one.
MicrolocalRow nevs(SimpleObject obj, const SheafData& data = SheafData::encoded());
MicrolocalTable derive_nevs(const SheafData& data = SheafData::encoded());

FourierImage fourier(SimpleObject obj, const SheafData& data = SheafData::encoded());

}  // namespace g2sub

#include "g2sub/sheaves.hpp"

#include "g2sub/conormal.hpp"
#include "g2sub/linalg.hpp"

#include <sstream>

namespace g2sub {

std::string name(SimpleObject o) {
    constexpr const char* names[] = {"IC1_C0", "IC1_C1", "IC1_C2", "IC1_C3", "ICR_C3", "ICE_C3"};
    return names[index(o)];
}

std::string name(LocalSystemLabel l) {
    constexpr const char* names[] = {"triv", "refl", "sign"};
    return names[static_cast<int>(l)];
}

OrbitClass support(SimpleObject o) { return index(o) < 4 ? static_cast<OrbitClass>(index(o)) : OrbitClass::C3; }

LocalSystemLabel label(SimpleObject o) {
    if (o == SimpleObject::ICR_C3) return LocalSystemLabel::refl;
    if (o == SimpleObject::ICE_C3) return LocalSystemLabel::sign;
    return LocalSystemLabel::triv;
}

SimpleObject simple_object(OrbitClass support, LocalSystemLabel l) {
    if (l == LocalSystemLabel::triv) return trivial_ic(support);
    if (support != OrbitClass::C3) throw InconsistentSystem("nontrivial local systems live only on C3");
    return l == LocalSystemLabel::refl ? SimpleObject::ICR_C3 : SimpleObject::ICE_C3;
}

std::string name(LocalSystem l) {
    constexpr const char* names[] = {"0", "1", "T", "R", "E"};
    return names[static_cast<int>(l)];
}

int rank(LocalSystem l) {
    constexpr int ranks[] = {0, 1, 1, 2, 1};
    return ranks[static_cast<int>(l)];
}

Irrep irrep(LocalSystem l) {
    switch (l) {
    case LocalSystem::one: return Irrep::one;
    case LocalSystem::T: return Irrep::tau;
    case LocalSystem::R: return Irrep::rho;
    case LocalSystem::E: return Irrep::eps;
    case LocalSystem::zero: break;
    }
    throw InconsistentSystem("the zero local system has no irreducible");
}

LocalSystem local_system(Irrep r) {
    constexpr LocalSystem table[] = {LocalSystem::one, LocalSystem::T, LocalSystem::R, LocalSystem::E};
    return table[static_cast<int>(r)];
}

GroupLabel stratum_group(int stratum) {
    return stratum == 0 || stratum == 3 ? GroupLabel::S3 : GroupLabel::S2;
}

std::string name(Cover c) {
    constexpr const char* names[] = {"rho1", "rho2", "rho3", "rho3pp", "rhoE"};
    return names[static_cast<int>(c)];
}

std::string to_string(const KClass& k) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, m] : k) {
        if (!first) out << " + ";
        first = false;
        if (m != 1) out << m << "*";
        out << name(key.first);
        if (key.second != 0) out << "[" << key.second << "]";
    }
    return first ? "0" : out.str();
}

const SheafData& SheafData::encoded() {
    using S = SimpleObject;
    using L = LocalSystem;
    static const SheafData data = [] {
        SheafData d;
        d.fiber_ranks = {{{2, 1, 0, 0}, {2, 1, 1, 0}, {2, 1, 2, 3}, {8, 1, 3, 6}, {4, 3, 1, 2}}};
        d.decompositions = {
            KClass{{{S::IC1_C0, 0}, 1}, {{S::IC1_C1, 0}, 1}},
            KClass{{{S::IC1_C2, 0}, 1}},
            KClass{{{S::IC1_C3, 0}, 1}, {{S::ICR_C3, 0}, 1}},
            KClass{{{S::IC1_C3, 0}, 1}, {{S::ICR_C3, 0}, 2}, {{S::ICE_C3, 0}, 1},
                   {{S::IC1_C0, 0}, 3}, {{S::IC1_C0, 2}, 1}, {{S::IC1_C0, -2}, 1}},
            KClass{{{S::IC1_C3, 0}, 1}, {{S::ICE_C3, 0}, 1}, {{S::IC1_C1, 0}, 2}, {{S::IC1_C0, 0}, 1}},
        };
        d.stalks = {{
            {{{{L::one, 0}}, {}, {}, {}}},
            {{{{L::one, 2}}, {{L::one, 2}}, {}, {}}},
            {{{{L::one, 1}, {L::one, 3}}, {{L::one, 3}}, {{L::one, 3}}, {}}},
            {{{{L::one, 4}}, {{L::one, 4}}, {{L::one, 4}}, {{L::one, 4}}}},
            {{{{L::one, 2}}, {}, {{L::one, 4}}, {{L::R, 4}}}},
            {{{}, {}, {}, {{L::E, 4}}}},
        }};
        d.repmult = {{{1, 1, 2, 1, 1, 0},
                      {0, 1, 1, 1, 0, 0},
                      {0, 0, 1, 1, 1, 0},
                      {0, 0, 0, 1, 0, 0},
                      {0, 0, 0, 0, 1, 0},
                      {0, 0, 0, 0, 0, 1}}};
        d.evs = {{{L::one, L::zero, L::zero, L::zero},
                  {L::R, L::T, L::zero, L::zero},
                  {L::zero, L::one, L::T, L::zero},
                  {L::zero, L::zero, L::zero, L::one},
                  {L::zero, L::zero, L::one, L::R},
                  {L::E, L::T, L::one, L::E}}};
        d.nevs = {{{L::one, L::zero, L::zero, L::zero},
                   {L::R, L::one, L::zero, L::zero},
                   {L::zero, L::T, L::one, L::zero},
                   {L::zero, L::zero, L::zero, L::one},
                   {L::zero, L::zero, L::T, L::R},
                   {L::E, L::one, L::T, L::E}}};
        using LS = LocalSystemLabel;
        d.fourier = {{{0, LS::triv}, {0, LS::refl}, {1, LS::triv}, {3, LS::triv}, {2, LS::triv}, {0, LS::sign}}};
        return d;
    }();
    return data;
}

int fiber_cohomology_rank(Cover c, OrbitClass o, const SheafData& data) {
    return data.fiber_ranks[static_cast<size_t>(c)][static_cast<size_t>(index(o))];
}

int recount_fiber_rank(Cover c, OrbitClass o) {
    if (c == Cover::rhoE) throw InconsistentSystem("rhoE fibers are not finite sets of lines");
    // Fibers over 0: one projective line for rho1..rho3, three for rho3pp.
    if (o == OrbitClass::C0) return c == Cover::rho3pp ? 8 : 2;
    const auto lines = rational_lines(rational_split_representatives()[static_cast<size_t>(index(o))]).lines;
    int count = 0;
    switch (c) {
    case Cover::rho1:
    case Cover::rho2:
    case Cover::rho3: {
        const int need = c == Cover::rho1 ? 3 : (c == Cover::rho2 ? 2 : 1);
        for (const auto& [l, m] : lines)
            if (m >= need) ++count;
        return count;
    }
    case Cover::rho3pp: {
        // ordered factorizations u v w = r up to scalars: 3! / prod m!
        int denom = 1;
        for (const auto& [l, m] : lines)
            for (int k = 2; k <= m; ++k) denom *= k;
        return 6 / denom;
    }
    case Cover::rhoE:
        break;
    }
    return count;
}

KClass pushforward_decomposition(Cover c, const SheafData& data) {
    return data.decompositions[static_cast<size_t>(c)];
}

namespace {

int local_system_rank(SimpleObject o) { return o == SimpleObject::ICR_C3 ? 2 : 1; }

}  // namespace

StalkRanks solve_ic_stalk_ranks(const SheafData& data) {
    // Unknown x(obj, orbit) at column 4*obj + orbit.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    auto add = [&](std::vector<std::pair<int, int>> terms, int value) {
        std::vector<Rational> row(24, Rational(0));
        for (auto [col, coef] : terms) row[static_cast<size_t>(col)] += coef;
        rows.push_back(std::move(row));
        rhs.emplace_back(value);
    };
    for (SimpleObject obj : kSimpleObjects) {
        const int s = index(support(obj));
        for (int o = 0; o < 4; ++o) {
            const int col = 4 * index(obj) + o;
            if (o > s) add({{col, 1}}, 0);
            if (o == s) add({{col, 1}}, local_system_rank(obj));
            // The constant sheaf on the smooth space V.
            if (obj == SimpleObject::IC1_C3) add({{col, 1}}, 1);
        }
    }
    auto cover_rows = [&](Cover c, int o) {
        std::vector<std::pair<int, int>> terms;
        for (const auto& [key, m] : pushforward_decomposition(c, data)) terms.push_back({4 * index(key.first) + o, m});
        return terms;
    };
    for (Cover c : {Cover::rho1, Cover::rho2, Cover::rho3, Cover::rho3pp})
        for (int o = 0; o < 4; ++o) add(cover_rows(c, o), fiber_cohomology_rank(c, static_cast<OrbitClass>(o), data));

    MatrixQ a(static_cast<Eigen::Index>(rows.size()), 24);
    VectorQ b(static_cast<Eigen::Index>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < 24; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    const auto x = solve(a, b);
    if (!x) throw InconsistentSystem("stalk equations from the covers are inconsistent");
    if (rank(a) != 24) throw InconsistentSystem("stalk equations from the covers do not determine the ranks");
    StalkRanks out{};
    for (int j = 0; j < 24; ++j) {
        const Rational& v = (*x)(j);
        if (denominator(v) != 1 || v < 0) throw InconsistentSystem("stalk rank is not a nonnegative integer");
        out[static_cast<size_t>(j / 4)][static_cast<size_t>(j % 4)] = static_cast<int>(numerator(v));
    }
    for (int o = 0; o < 4; ++o) {
        int total = 0;
        for (const auto& [key, m] : pushforward_decomposition(Cover::rhoE, data))
            total += m * out[static_cast<size_t>(index(key.first))][static_cast<size_t>(o)];
        if (total != fiber_cohomology_rank(Cover::rhoE, static_cast<OrbitClass>(o), data))
            throw InconsistentSystem("rhoE fiber ranks disagree with the solved stalks at " +
                                     name(static_cast<OrbitClass>(o)));
    }
    return out;
}

StalkRanks graded_stalk_totals(const SheafData& data) {
    StalkRanks out{};
    for (size_t i = 0; i < 6; ++i)
        for (size_t o = 0; o < 4; ++o)
            for (const auto& t : data.stalks[i][o]) out[i][o] += rank(t.system);
    return out;
}

IntMatrix6 geometric_multiplicity_matrix(const SheafData& data) {
    const StalkRanks ranks = solve_ic_stalk_ranks(data);
    IntMatrix6 g{};
    for (size_t i = 0; i < 6; ++i) {
        for (size_t o = 0; o < 3; ++o) g[i][o] = ranks[i][o];
        // On C3 the stalk is a local system; record which one.
        for (const auto& t : data.stalks[i][3]) {
            const size_t col = t.system == LocalSystem::R ? 4 : (t.system == LocalSystem::E ? 5 : 3);
            g[i][col] += 1;
        }
        int c3_rank = 0;
        for (const auto& t : data.stalks[i][3]) c3_rank += rank(t.system);
        if (c3_rank != ranks[i][3]) throw InconsistentSystem("graded stalk on C3 disagrees with solved rank");
    }
    return g;
}

IntMatrix6 rep_multiplicity_matrix(const SheafData& data) { return data.repmult; }

IntMatrix6 transpose(const IntMatrix6& m) {
    IntMatrix6 t{};
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) t[i][j] = m[j][i];
    return t;
}

bool kl_check(const IntMatrix6& geo, const IntMatrix6& rep) { return geo == transpose(rep); }

MicrolocalRow evs(SimpleObject obj, const SheafData& data) { return data.evs[static_cast<size_t>(index(obj))]; }

MicrolocalTable derive_nevs(const SheafData& data) {
    MicrolocalTable out{};
    for (int i = 0; i < 4; ++i) {
        const CharacterTable table = character_table(stratum_group(i));
        const LocalSystem twist = data.evs[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (twist == LocalSystem::zero)
            throw NEvsMismatch("Evs of the trivial IC sheaf vanishes on its own stratum " + std::to_string(i));
        // Characters are real, so the dual has the same character.
        const Character twist_dual = character_of(table, irrep(twist));
        for (size_t obj = 0; obj < 6; ++obj) {
            const LocalSystem e = data.evs[obj][static_cast<size_t>(i)];
            if (e == LocalSystem::zero) {
                out[obj][static_cast<size_t>(i)] = LocalSystem::zero;
                continue;
            }
            if (!table.has(irrep(e)))
                throw NEvsMismatch("local system " + name(e) + " does not live on stratum " + std::to_string(i));
            const auto parts = decompose(table, tensor(twist_dual, character_of(table, irrep(e))));
            if (parts.size() != 1 || parts.begin()->second != 1)
                throw NEvsMismatch("twisted local system is not irreducible");
            out[obj][static_cast<size_t>(i)] = local_system(parts.begin()->first);
        }
    }
    return out;
}

MicrolocalRow nevs(SimpleObject obj, const SheafData& data) {
    const MicrolocalTable derived = derive_nevs(data);
    if (derived != data.nevs) {
        for (size_t o = 0; o < 6; ++o)
            for (size_t i = 0; i < 4; ++i)
                if (derived[o][i] != data.nevs[o][i])
                    throw NEvsMismatch("NEvs(" + name(kSimpleObjects[o]) + ") at stratum " + std::to_string(i) +
                                       ": derived " + name(derived[o][i]) + ", encoded " + name(data.nevs[o][i]));
    }
    return derived[static_cast<size_t>(index(obj))];
}

FourierImage fourier(SimpleObject obj, const SheafData& data) {
    const auto [dual_orbit, lab] = data.fourier[static_cast<size_t>(index(obj))];
    const OrbitClass primal_orbit = orbit_of(dual_orbit_class(dual_orbit));
    return {dual_orbit, lab, simple_object(primal_orbit, lab)};
}

}  // namespace g2sub

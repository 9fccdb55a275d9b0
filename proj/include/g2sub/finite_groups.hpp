#pragma once

#include "g2sub/root_data.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2sub {

// Irreducible characters of S2 and S3: 1, tau (sign of S2), rho (2-dim), eps (sign of S3).
enum class Irrep { one, tau, rho, eps };
std::string name(Irrep r);

struct CharacterTable {
    GroupLabel group = GroupLabel::Trivial;
    std::vector<std::string> classes;  // e first
    std::vector<int> class_sizes;
    std::vector<Irrep> irreps;
    std::vector<std::vector<int>> values;  // values[irrep][class]

    int order() const;
    int value(Irrep r, int cls) const;
    int dimension(Irrep r) const { return value(r, 0); }
    bool has(Irrep r) const;
    // Class of an element of order 2 (the transposition class); -1 for the trivial group.
    int involution_class() const;
};

CharacterTable character_table(GroupLabel g);

using Character = std::vector<int>;

// Multiplicities of irreducibles in a class function; throws InconsistentSystem if not integral.
std::map<Irrep, int> decompose(const CharacterTable& t, const Character& chi);
Character character_of(const CharacterTable& t, Irrep r);
Character tensor(const Character& a, const Character& b);

}  // namespace g2sub

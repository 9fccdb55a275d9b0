#include "g2sub/finite_groups.hpp"

#include "g2sub/errors.hpp"

#include <algorithm>

namespace g2sub {

std::string name(Irrep r) {
    constexpr const char* names[] = {"1", "tau", "rho", "eps"};
    return names[static_cast<int>(r)];
}

int CharacterTable::order() const {
    int n = 0;
    for (int s : class_sizes) n += s;
    return n;
}

bool CharacterTable::has(Irrep r) const { return std::find(irreps.begin(), irreps.end(), r) != irreps.end(); }

int CharacterTable::value(Irrep r, int cls) const {
    const auto it = std::find(irreps.begin(), irreps.end(), r);
    if (it == irreps.end()) throw InconsistentSystem("irreducible " + name(r) + " not in group " + name(group));
    return values[static_cast<size_t>(it - irreps.begin())][static_cast<size_t>(cls)];
}

int CharacterTable::involution_class() const { return group == GroupLabel::Trivial ? -1 : 1; }

CharacterTable character_table(GroupLabel g) {
    switch (g) {
    case GroupLabel::S3:
        return {g, {"e", "transposition", "3-cycle"}, {1, 3, 2}, {Irrep::one, Irrep::rho, Irrep::eps},
                {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}}};
    case GroupLabel::S2:
        return {g, {"e", "transposition"}, {1, 1}, {Irrep::one, Irrep::tau}, {{1, 1}, {1, -1}}};
    case GroupLabel::Trivial:
        break;
    }
    return {GroupLabel::Trivial, {"e"}, {1}, {Irrep::one}, {{1}}};
}

Character character_of(const CharacterTable& t, Irrep r) {
    Character c;
    for (size_t k = 0; k < t.classes.size(); ++k) c.push_back(t.value(r, static_cast<int>(k)));
    return c;
}

Character tensor(const Character& a, const Character& b) {
    Character c(a.size());
    for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] * b[k];
    return c;
}

std::map<Irrep, int> decompose(const CharacterTable& t, const Character& chi) {
    std::map<Irrep, int> out;
    for (size_t i = 0; i < t.irreps.size(); ++i) {
        int ip = 0;
        for (size_t k = 0; k < t.classes.size(); ++k) ip += t.class_sizes[k] * chi[k] * t.values[i][k];
        if (ip % t.order() != 0) throw InconsistentSystem("class function is not a virtual character");
        if (ip != 0) out[t.irreps[i]] = ip / t.order();
    }
    return out;
}

}  // namespace g2sub

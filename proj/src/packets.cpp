#include "g2sub/packets.hpp"

#include "g2sub/root_data.hpp"

#include <sstream>

namespace g2sub {

std::string name(Irreducible p) {
    constexpr const char* names[] = {"pi0", "pi1", "pi2", "pi3", "pi3rho", "pi3eps"};
    return names[index(p)];
}

bool tempered(Irreducible p) { return index(p) >= 3; }
bool spherical(Irreducible p) { return p == Irreducible::pi0; }
bool supercuspidal(Irreducible p) { return p == Irreducible::pi3eps; }

Irreducible llc(SimpleObject obj) { return static_cast<Irreducible>(index(obj)); }
SimpleObject llc_inverse(Irreducible p) { return static_cast<SimpleObject>(index(p)); }

namespace {

void check_index(int i) {
    if (i < 0 || i > 3) throw std::out_of_range("parameter index must be 0..3, got " + std::to_string(i));
}

}  // namespace

Packet packet(int psi, const SheafData& data) {
    check_index(psi);
    Packet out;
    for (Irreducible p : kIrreducibles)
        if (nevs(llc_inverse(p), data)[static_cast<size_t>(psi)] != LocalSystem::zero) out.insert(p);
    return out;
}

Packet encoded_packet(int psi) {
    check_index(psi);
    using I = Irreducible;
    static const std::array<Packet, 4> table{Packet{I::pi0, I::pi1, I::pi3eps}, Packet{I::pi1, I::pi2, I::pi3eps},
                                             Packet{I::pi2, I::pi3rho, I::pi3eps},
                                             Packet{I::pi3, I::pi3rho, I::pi3eps}};
    return table[static_cast<size_t>(psi)];
}

Packet l_packet(int phi) {
    check_index(phi);
    using I = Irreducible;
    static const std::array<Packet, 4> table{Packet{I::pi0}, Packet{I::pi1}, Packet{I::pi2},
                                             Packet{I::pi3, I::pi3rho, I::pi3eps}};
    return table[static_cast<size_t>(phi)];
}

std::optional<Irrep> pairing_character(int psi, Irreducible p, const SheafData& data) {
    check_index(psi);
    const LocalSystem l = nevs(llc_inverse(p), data)[static_cast<size_t>(psi)];
    if (l == LocalSystem::zero) return std::nullopt;
    return irrep(l);
}

std::string to_string(const VirtualCharacter& v) {
    static const char* standard[] = {"M0", "M1", "M2", "M3", "M3rho", "M3eps"};
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < 6; ++i) {
        int c = v.coeffs[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        if (c != 1) out << c << "*";
        out << (v.basis == Basis::irreducible ? name(kIrreducibles[i]) : standard[i]);
        first = false;
    }
    return first ? "0" : out.str();
}

VirtualCharacter stable_virtual_character(int psi, const SheafData& data) {
    check_index(psi);
    const ArthurParamMeta meta = arthur_parameters()[static_cast<size_t>(psi)];
    const CharacterTable table = character_table(meta.component_group);
    const int cls = meta.s_psi == 1 ? 0 : table.involution_class();
    VirtualCharacter v;
    for (Irreducible p : kIrreducibles)
        if (auto r = pairing_character(psi, p, data)) v.coeffs[static_cast<size_t>(index(p))] = table.value(*r, cls);
    return v;
}

VirtualCharacter encoded_stable_character(int psi) {
    check_index(psi);
    static const std::array<std::array<int, 6>, 4> table{
        {{1, 2, 0, 0, 0, 1}, {0, 1, -1, 0, 0, 1}, {0, 0, 1, 0, -1, -1}, {0, 0, 0, 1, 2, 1}}};
    return {Basis::irreducible, table[static_cast<size_t>(psi)]};
}

namespace {

MatrixQ repmult_q(const SheafData& data) {
    MatrixQ m(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m(i, j) = data.repmult[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

VectorQ irreducible_vector(const VirtualCharacter& v, const SheafData& data) {
    VectorQ c(6);
    for (int i = 0; i < 6; ++i) c(i) = v.coeffs[static_cast<size_t>(i)];
    if (v.basis == Basis::standard) c = repmult_q(data).transpose() * c;
    return c;
}

std::array<int, 6> to_int(const VectorQ& x) {
    std::array<int, 6> out{};
    for (int i = 0; i < 6; ++i) {
        if (denominator(x(i)) != 1) throw NotInSpan("coefficient is not integral");
        out[static_cast<size_t>(i)] = static_cast<int>(numerator(x(i)));
    }
    return out;
}

}  // namespace

VirtualCharacter to_irreducible_basis(const VirtualCharacter& v, const SheafData& data) {
    return {Basis::irreducible, to_int(irreducible_vector(v, data))};
}

VirtualCharacter to_standard_basis(const VirtualCharacter& v, const SheafData& data) {
    // sum_j a_j M_j = sum_i c_i pi_i with M_j = sum_i repmult(j,i) pi_i
    const MatrixQ t = repmult_q(data).transpose();
    return {Basis::standard, to_int(invert(t) * irreducible_vector(v, data))};
}

std::array<Rational, 4> express_in_standard_modules(const VirtualCharacter& v, const SheafData& data) {
    const MatrixQ m = repmult_q(data);
    MatrixQ b(6, 4);
    b.col(0) = m.row(0).transpose();
    b.col(1) = m.row(1).transpose();
    b.col(2) = m.row(2).transpose();
    b.col(3) = irreducible_vector(stable_virtual_character(3, data), data);
    const auto x = solve(b, irreducible_vector(v, data));
    if (!x) throw NotInSpan("virtual character " + to_string(v) + " is not in the span of M0, M1, M2, Theta_psi3");
    return {(*x)(0), (*x)(1), (*x)(2), (*x)(3)};
}

MatrixQ standard_change_of_basis(const SheafData& data) {
    MatrixQ out(4, 4);
    for (int psi = 0; psi < 4; ++psi) {
        const auto x = express_in_standard_modules(stable_virtual_character(psi, data), data);
        for (int j = 0; j < 4; ++j) out(psi, j) = x[static_cast<size_t>(j)];
    }
    return out;
}

Irreducible aubert(Irreducible p) {
    using I = Irreducible;
    switch (p) {
    case I::pi0: return I::pi3;
    case I::pi3: return I::pi0;
    case I::pi1: return I::pi3rho;
    case I::pi3rho: return I::pi1;
    case I::pi2:
    case I::pi3eps: break;
    }
    return p;
}

Irreducible aubert_from_fourier(Irreducible p, const SheafData& data) {
    return llc(fourier(llc_inverse(p), data).primal);
}

}  // namespace g2sub

#pragma once

#include "g2sub/finite_groups.hpp"
#include "g2sub/linalg.hpp"
#include "g2sub/sheaves.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace g2sub {

enum class Irreducible { pi0, pi1, pi2, pi3, pi3rho, pi3eps };
constexpr std::array<Irreducible, 6> kIrreducibles{Irreducible::pi0, Irreducible::pi1, Irreducible::pi2,
                                                   Irreducible::pi3, Irreducible::pi3rho, Irreducible::pi3eps};
inline int index(Irreducible p) { return static_cast<int>(p); }
std::string name(Irreducible p);
bool tempered(Irreducible p);
bool spherical(Irreducible p);
bool supercuspidal(Irreducible p);

Irreducible llc(SimpleObject obj);
SimpleObject llc_inverse(Irreducible p);

using Packet = std::set<Irreducible>;
Packet packet(int psi, const SheafData& data = SheafData::encoded());
Packet l_packet(int phi);
// Encoded A-packets, for comparison with the derived ones.
Packet encoded_packet(int psi);

// Irreducible of A_psi attached to pi, or nullopt outside the packet.
std::optional<Irrep> pairing_character(int psi, Irreducible p, const SheafData& data = SheafData::encoded());

enum class Basis { irreducible, standard };
struct VirtualCharacter {
    Basis basis = Basis::irreducible;
    std::array<int, 6> coeffs{};  // pi0..pi3eps, or M0..M3eps
    friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;
};
std::string to_string(const VirtualCharacter& v);

VirtualCharacter stable_virtual_character(int psi, const SheafData& data = SheafData::encoded());
VirtualCharacter encoded_stable_character(int psi);
// Rewrite in the standard-module basis through the multiplicity matrix.
VirtualCharacter to_standard_basis(const VirtualCharacter& v, const SheafData& data = SheafData::encoded());
VirtualCharacter to_irreducible_basis(const VirtualCharacter& v, const SheafData& data = SheafData::encoded());
// Coefficients over (M0, M1, M2, Theta_psi3); throws NotInSpan.
std::array<Rational, 4> express_in_standard_modules(const VirtualCharacter& v,
                                                    const SheafData& data = SheafData::encoded());
// Rows: Theta_psi0..3 over (M0, M1, M2, Theta_psi3).
MatrixQ standard_change_of_basis(const SheafData& data = SheafData::encoded());

Irreducible aubert(Irreducible p);
// llc o (Fourier with primal identification) o llc^-1
Irreducible aubert_from_fourier(Irreducible p, const SheafData& data = SheafData::encoded());

}  // namespace g2sub

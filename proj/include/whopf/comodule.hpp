#pragma once

#include <optional>
#include <string>

#include "whopf/structure.hpp"

namespace whopf {

struct ComoduleAlgebra {
  Algebra A;
  WeakHopfAlgebra H;
  LinMap rho;    // A -> A⊗H
  LinMap gamma;  // Γ: H⊗A -> A⊗H
  LinMap eA;     // H -> A
  LinMap zeta;   // A -> A⊗H

  ComoduleAlgebra() = default;
  ComoduleAlgebra(Algebra a, WeakHopfAlgebra h, LinMap rho);
  // H as a right comodule algebra over itself via δ.
  static ComoduleAlgebra regular(const WeakHopfAlgebra& h);

  FieldSpec field() const { return A.field; }
  // Algebra structure of A⊗H.
  Algebra AH_algebra() const { return tensor_algebra(A, H.algebra()); }
  // α∧β for α, β: H -> A.
  LinMap conv(const LinMap& a, const LinMap& b) const { return convolution(a, b, H.coalgebra(), A); }
  // (A⊗(ε∘μ))∘((ρ∘η_A)⊗H), the right-hand side of f∧f⁻¹.
  LinMap right_unit() const;
};

Report verify_comodule_algebra(const ComoduleAlgebra& ca);

struct Coinvariants {
  Algebra AH;  // algebra on the equalizer object
  LinMap iA;   // A_H -> A
};

// Equalizer of ρ and ζ, cross-checked against the equalizer of ρ and (A⊗Π̄^R)∘ρ.
Coinvariants coinvariants(const ComoduleAlgebra& ca, const std::string& name = "A_H");
// Coinvariants carried by a supplied monomorphism, which must have the equalizer's image.
Coinvariants coinvariants_from(const ComoduleAlgebra& ca, const LinMap& mono);

bool check_integral(const ComoduleAlgebra& ca, const LinMap& f);
bool is_total(const ComoduleAlgebra& ca, const LinMap& f);

struct Integral {
  LinMap f;
  std::optional<LinMap> finv;
  bool total = false;
};

// Checks (c1)-(c3) for a candidate inverse.
Report verify_convolution_inverse(const ComoduleAlgebra& ca, const LinMap& f, const LinMap& finv);
// The unique map satisfying (c1)-(c3), if any.
std::optional<LinMap> solve_convolution_inverse(const ComoduleAlgebra& ca, const LinMap& f);

// Total integral h built from an invertible integral (H cocommutative).
Integral totalize(const ComoduleAlgebra& ca, const Integral& f, Report* report = nullptr);

struct CleftCertificate {
  ComoduleAlgebra ca;
  Coinvariants co;
  LinMap f, finv;
  LinMap qA, pA;  // q_A = i_A∘p_A
  bool cleft = false;
  Report report{"cleft"};
};

// Builds the certificate; the coinvariants are computed unless supplied.
CleftCertificate is_cleft(const ComoduleAlgebra& ca, const LinMap& f,
                          const std::optional<Coinvariants>& co = std::nullopt);

struct Isomorphism {
  LinMap T, Tinv;
  Report report{"isomorphism"};
  bool ok() const { return report.ok(); }
};

// Comodule algebra isomorphism A -> B through the common coinvariants; `ident`
// identifies A_H with B_H (computed by image comparison when A and B share a space).
std::optional<Isomorphism> cleft_equivalence(const CleftCertificate& a, const CleftCertificate& b,
                                             const std::optional<LinMap>& ident = std::nullopt,
                                             Report* report = nullptr);

// Checks that T: A -> B is an isomorphism of comodule algebras with inverse Tinv.
Report verify_comodule_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const LinMap& T,
                           const LinMap& Tinv);

}  // namespace whopf

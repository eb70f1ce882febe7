#pragma once

#include <optional>
#include <string>

#include "whopf/comodule.hpp"

namespace whopf {

class WeakModuleAlgebra {
 public:
  WeakModuleAlgebra() = default;
  WeakModuleAlgebra(Algebra a, WeakHopfAlgebra h, LinMap phi);
  // φ = ε⊗A.
  static WeakModuleAlgebra trivial(const Algebra& a, const WeakHopfAlgebra& h);

  const Algebra& A() const { return a_; }
  const WeakHopfAlgebra& H() const { return h_; }
  const LinMap& phi() const { return phi_; }
  const LinMap& u1() const { return u1_; }  // φ∘(H⊗η_A)
  const LinMap& u2() const { return u2_; }  // φ∘(H⊗u1)
  bool strict() const { return strict_; }
  FieldSpec field() const { return a_.field; }

  const Coalgebra& HH() const { return hh_; }
  // Convolution of maps H -> A, respectively H⊗H -> A.
  LinMap conv1(const LinMap& x, const LinMap& y) const { return convolution(x, y, h_.coalgebra(), a_); }
  LinMap conv2(const LinMap& x, const LinMap& y) const { return convolution(x, y, hh_, a_); }
  // ψ = (φ⊗H)∘(H⊗c_{H,A})∘(δ⊗A): H⊗A -> A⊗H.
  LinMap psi() const;

 private:
  Algebra a_;
  WeakHopfAlgebra h_;
  LinMap phi_, u1_, u2_;
  Coalgebra hh_;
  bool strict_ = false;
};

Report verify_weak_module_algebra(const WeakModuleAlgebra& m);

struct OmegaData {
  LinMap L, R;  // Ω^L, Ω^R on H⊗H
  Report report{"Omega"};
};

OmegaData omega_data(const WeakHopfAlgebra& h);
// Ω^L, which equals Ω^R for cocommutative H.
LinMap omega2(const WeakHopfAlgebra& h);

// A map H -> A (arity 1) or H⊗H -> A (arity 2) with its Reg inverse.
struct RegMap {
  int arity = 1;
  LinMap map, inv;
  Report report{"Reg"};
};
using RegElement = RegMap;
using RegCocycle = RegMap;

// Solves (e1)/(f1) linearly and projects onto the unique inverse; nullopt when
// no inverse exists or (e2)-(e3)/(f2)-(f3) fail.
std::optional<RegMap> solve_reg(const WeakModuleAlgebra& m, const LinMap& h, int arity);
// The normalization conditions and their mutual agreement.
Report normalization_report(const WeakModuleAlgebra& m, const RegMap& r);

struct Center {
  Algebra ZA;
  LinMap iZ;  // Z(A) -> A
};

Center center(const Algebra& a, const std::string& name = "Z");
// True when μ∘(f⊗A) = μ∘c∘(f⊗A), i.e. f lands in the center.
bool is_central(const Algebra& a, const LinMap& f);

struct InducedModule {
  WeakModuleAlgebra M;  // on A_H
  Report report{"induced module structure"};
};

// φ_{A_H} from a cleft extension with cocommutative H.
InducedModule induced_module_structure(const CleftCertificate& c);

struct CenterModule {
  Center Z;
  WeakModuleAlgebra M;  // on Z(A_H)
  LinMap psiAH;         // H⊗A_H -> A_H
  Report report{"center module structure"};
};

CenterModule center_module_structure(const CleftCertificate& c, const WeakModuleAlgebra& mah);

}  // namespace whopf

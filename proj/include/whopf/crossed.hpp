#pragma once

#include "whopf/maction.hpp"

namespace whopf {

struct CrossedSystem {
  WeakModuleAlgebra M;
  LinMap sigma;     // H⊗H -> A
  LinMap sigmainv;  // Reg inverse of sigma

  const Algebra& A() const { return M.A(); }
  const WeakHopfAlgebra& H() const { return M.H(); }
};

// Pairs an action with a cocycle candidate, computing its Reg inverse (throws NoInverse).
CrossedSystem make_crossed_system(const WeakModuleAlgebra& m, const LinMap& sigma);

// The lifts ψ, σ_H^A and the idempotent ∇ on A⊗H, with no conditions assumed.
struct CrossedMaps {
  LinMap psi;        // H⊗A -> A⊗H
  LinMap sigmaLift;  // H⊗H -> A⊗H
  LinMap nabla;      // A⊗H -> A⊗H
  LinMap muBig;      // (A⊗H)⊗(A⊗H) -> A⊗H
  LinMap nu;         // K -> A⊗H
};

CrossedMaps crossed_maps(const CrossedSystem& cs);

// Each checks the condition on the lifted maps and on σ itself and asserts agreement.
bool verify_twisted(const CrossedSystem& cs, Report* report = nullptr);
bool verify_cocycle(const CrossedSystem& cs, Report* report = nullptr);
bool verify_normal(const CrossedSystem& cs, Report* report = nullptr);
// Action, Reg inverse and (g1)-(g3).
Report verify_crossed_system(const CrossedSystem& cs);

struct CrossedProductData {
  CrossedSystem cs;
  CrossedMaps maps;
  Splitting split;  // A×H with i_{A⊗H}, p_{A⊗H}
  Algebra small;    // A×_σH
  Report report{"crossed product"};
};

// Throws TwistedFail, CocycleFail or NormalFail naming the first violated condition.
CrossedProductData build_crossed_product(const CrossedSystem& cs);

struct CrossedComodule {
  ComoduleAlgebra ca;
  LinMap iA;  // p∘(A⊗η_H): A -> A×H
  Report report{"crossed product comodule"};
};

CrossedComodule comodule_structure(const CrossedProductData& cpd);

// f = p∘(η_A⊗H) with f⁻¹ = p∘(σ⁻¹⊗H)∘(H⊗c)∘((δ∘λ)⊗H)∘δ.
Integral canonical_integral(const CrossedProductData& cpd, Report* report = nullptr);

struct SpecialCases {
  bool smash = false;
  bool twisted = false;
  bool centerValued = false;
  Report report{"special cases"};
};

SpecialCases special_case_checks(const CrossedSystem& cs);

}  // namespace whopf

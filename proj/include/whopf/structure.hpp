#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whopf/linmap.hpp"
#include "whopf/report.hpp"

namespace whopf {

struct Algebra {
  Space space;
  FieldSpec field;
  LinMap unit;  // K -> A
  LinMap mult;  // A⊗A -> A

  LinMap id() const { return LinMap::identity(space, field); }
};

struct Coalgebra {
  Space space;
  FieldSpec field;
  LinMap counit;  // C -> K
  LinMap comult;  // C -> C⊗C

  LinMap id() const { return LinMap::identity(space, field); }
};

// Product (μ⊗μ)∘(A⊗c⊗B), unit η⊗η.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
// Coproduct (C⊗c⊗D)∘(δ⊗δ), counit ε⊗ε.
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);
// Commutative algebra K.
Algebra unit_algebra(FieldSpec f);

// n×n matrices with basis e_ij in row-major order.
Algebra matrix_algebra(unsigned n, FieldSpec f, const std::string& name = "A");

// α∧β = μ_A∘(α⊗β)∘δ_C for α, β: C -> A.
LinMap convolution(const LinMap& a, const LinMap& b, const Coalgebra& c, const Algebra& alg);

Report verify_algebra(const Algebra& a);
Report verify_coalgebra(const Coalgebra& c);

class WeakHopfAlgebra {
 public:
  WeakHopfAlgebra() = default;
  WeakHopfAlgebra(Algebra alg, Coalgebra coalg, LinMap antipode);

  const Algebra& algebra() const { return alg_; }
  const Coalgebra& coalgebra() const { return coalg_; }
  const Space& space() const { return alg_.space; }
  FieldSpec field() const { return alg_.field; }

  const LinMap& eta() const { return alg_.unit; }
  const LinMap& mu() const { return alg_.mult; }
  const LinMap& eps() const { return coalg_.counit; }
  const LinMap& delta() const { return coalg_.comult; }
  const LinMap& lambda() const { return lambda_; }
  const std::optional<LinMap>& lambda_inverse() const { return lambda_inv_; }

  LinMap id() const { return alg_.id(); }
  LinMap c() const { return symmetry(space(), space(), field()); }
  LinMap eps_mu() const { return eps() * mu(); }
  LinMap delta_eta() const { return delta() * eta(); }

  // Target, source and the barred projections.
  const LinMap& pi_L() const { return pi_L_; }
  const LinMap& pi_R() const { return pi_R_; }
  const LinMap& pibar_L() const { return pibar_L_; }
  const LinMap& pibar_R() const { return pibar_R_; }

  bool cocommutative() const { return c() * delta() == delta(); }
  bool commutative() const { return mu() * c() == mu(); }

 private:
  Algebra alg_;
  Coalgebra coalg_;
  LinMap lambda_;
  std::optional<LinMap> lambda_inv_;
  LinMap pi_L_, pi_R_, pibar_L_, pibar_R_;
};

Report verify_weak_hopf(const WeakHopfAlgebra& h);
// The catalogue of identities relating the target/source projections.
Report verify_projection_identities(const WeakHopfAlgebra& h);

struct Groupoid {
  struct Morphism {
    std::string id, src, tgt;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;  // sorted by (src, tgt, id)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;  // (g, f) -> g∘f
  std::vector<std::size_t> inv;
  std::string name;

  // Validates and canonicalises; comp holds triples (g, f, g∘f) by label.
  static Groupoid make(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                       const std::vector<std::array<std::string, 3>>& comp,
                       const std::vector<std::pair<std::string, std::string>>& inv = {});

  std::size_t index(const std::string& label) const;
  std::size_t identity_at(const std::string& object) const;
  bool composable(std::size_t g, std::size_t f) const { return morphisms[f].tgt == morphisms[g].src; }

  // One-object groupoid of a finite group given by its multiplication table over labels.
  static Groupoid from_group(std::string name, std::vector<std::string> elements,
                             const std::function<std::string(const std::string&, const std::string&)>& mul);
  static Groupoid cyclic(unsigned n);
  static Groupoid klein();
  // k objects, identities only.
  static Groupoid discrete(unsigned k);
  // Exactly one morphism between any two of k objects.
  static Groupoid indiscrete(unsigned k);
  static Groupoid disjoint_union(const Groupoid& a, const Groupoid& b, std::string name);
};

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, FieldSpec f);

// Every groupoid with at most two objects and at most four morphisms, up to isomorphism.
std::vector<Groupoid> small_groupoids();

}  // namespace whopf

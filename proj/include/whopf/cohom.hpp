#pragma once

#include <cstdint>
#include <vector>

#include "whopf/cleft2cross.hpp"

namespace whopf {

struct EnumOptions {
  std::uint64_t max_enum = 10'000'000;
  unsigned threads = 1;
};

// Normalized Reg cocycles τ: H⊗H -> Z for a strict action on a commutative algebra,
// in enumeration order. GF(p) only; throws SearchSpaceTooLarge.
std::vector<RegMap> enumerate_cocycles(const WeakModuleAlgebra& zm, const EnumOptions& opt = {});

// Every σ making (φ, σ) a crossed system, in enumeration order.
std::vector<CrossedSystem> enumerate_crossed_systems(const WeakModuleAlgebra& m, const EnumOptions& opt = {});

struct CocycleClass {
  RegMap tau;
  std::size_t classId = 0;
  bool representative = false;
};

// Classes under τ ~ τ' when a normalized witness relates them with the action fixed.
std::vector<CocycleClass> h2_classes(const WeakModuleAlgebra& zm, const std::vector<RegMap>& cocycles,
                                     const EnumOptions& opt = {});
std::size_t class_count(const std::vector<CocycleClass>& classes);

// (φ, σ∧(i_Z∘τ)).
CrossedSystem twist(const CrossedSystem& base, const LinMap& iZ, const LinMap& tau);
// The factorization of σ⁻¹∧γ through i_Z; throws FactorizationFailure.
LinMap untwist(const CrossedSystem& base, const LinMap& iZ, const CrossedSystem& other);

struct H2Bijection {
  std::size_t cocycles = 0, cocycleClasses = 0, systems = 0, systemClasses = 0;
  Report report{"second cohomology bijection"};
};

// Compares H² of the center with the classes of crossed systems sharing the induced action.
H2Bijection verify_h2_bijection(const CleftCertificate& cert, const EnumOptions& opt = {});

}  // namespace whopf

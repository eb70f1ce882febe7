#pragma once

#include <cstdint>
#include <optional>

#include "whopf/crossed.hpp"

namespace whopf {

struct ExtractedSystem {
  CleftCertificate cert;
  CrossedSystem cs;  // over A_H
  Report report{"extracted crossed system"};
};

// (φ_{A_H}, σ_{A_H}) from a cleft extension with cocommutative H and total integral.
ExtractedSystem extract_crossed_system(const CleftCertificate& cert);

// T: A -> A_H ×σ H with inverse μ∘(i_A⊗f)∘i.
Isomorphism roundtrip_cleft(const ExtractedSystem& ex);

// Entry-wise comparison of the actions and cocycles, naming the first differing basis vector.
Report compare_systems(const CrossedSystem& got, const CrossedSystem& want);

struct CrossedRoundTrip {
  bool equal = false;
  CrossedSystem extracted;
  Report report{"crossed round trip"};
};

// Builds A×σH, extracts with the canonical integral and compares with (φ, σ) exactly.
CrossedRoundTrip roundtrip_crossed(const CrossedSystem& cs);

struct CrossedSystemEquivalence {
  RegMap h;
  CrossedSystem lhs, rhs;
  Report report{"equivalence"};
};

// Checks lhs ≈ rhs with witness h; nullopt when any condition fails (reasons in *why).
std::optional<CrossedSystemEquivalence> check_equivalence(const CrossedSystem& lhs, const CrossedSystem& rhs,
                                                          const LinMap& h, Report* why = nullptr);

struct SearchOptions {
  std::uint64_t max_enum = 10'000'000;
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<CrossedSystemEquivalence> witness;
  std::uint64_t candidates = 0;  // size of the pruned family
};

// Exhaustive search over normalized witnesses; GF(p) only. Throws SearchSpaceTooLarge.
SearchResult search_equivalence(const CrossedSystem& lhs, const CrossedSystem& rhs, const SearchOptions& opt = {});

// The witnesses from the proof that ≈ is an equivalence relation.
CrossedSystemEquivalence reflexive_witness(const CrossedSystem& cs);
std::optional<CrossedSystemEquivalence> symmetric_witness(const CrossedSystemEquivalence& e);
std::optional<CrossedSystemEquivalence> transitive_witness(const CrossedSystemEquivalence& a,
                                                           const CrossedSystemEquivalence& b);

// The comodule algebra isomorphism A×_σH -> A×_τH induced by a witness.
Isomorphism equivalence_to_iso(const CrossedSystemEquivalence& e);

}  // namespace whopf

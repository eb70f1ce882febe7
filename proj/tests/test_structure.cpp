#include "doctest.h"
#include "whopf/structure.hpp"

using namespace whopf;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

// Target/source projections straight from the groupoid: g -> id at target / source.
LinMap oracle_target(const Groupoid& g, const WeakHopfAlgebra& H, bool target) {
  LinMap out(H.space(), H.space(), H.field());
  for (std::size_t i = 0; i < g.morphisms.size(); ++i)
    out.set(g.identity_at(target ? g.morphisms[i].tgt : g.morphisms[i].src), i, 1);
  return out;
}

}  // namespace

TEST_CASE("small groupoid population") {
  auto gs = small_groupoids();
  CHECK(gs.size() == 10);
  for (const auto& g : gs) {
    CHECK(g.objects.size() <= 2);
    CHECK(g.morphisms.size() <= 4);
  }
}

TEST_CASE("groupoid algebras are weak Hopf algebras with all projection identities") {
  for (FieldSpec f : {F2, F3, FieldSpec::rationals()})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      auto r = verify_weak_hopf(H);
      INFO(g.name << " over " << f.name() << "\n" << r.to_text());
      CHECK(r.ok());
      auto p = verify_projection_identities(H);
      INFO(p.to_text());
      CHECK(p.checks.size() == 24);
      CHECK(p.ok());
      CHECK(H.pi_L() == oracle_target(g, H, true));
      CHECK(H.pi_R() == oracle_target(g, H, false));
      CHECK(H.cocommutative());
      REQUIRE(H.lambda_inverse());
      CHECK(*H.lambda_inverse() == H.lambda());
    }
}

TEST_CASE("weak versus Hopf: unit of the indiscrete groupoid") {
  auto H = groupoid_algebra(Groupoid::indiscrete(2), F3);
  // δ(1) ≠ 1⊗1 for two objects
  CHECK(H.delta_eta() != tensor(H.eta(), H.eta()));
  auto G = groupoid_algebra(Groupoid::cyclic(2), F3);
  CHECK(G.delta_eta() == tensor(G.eta(), G.eta()));
  CHECK(G.pi_L() == G.eta() * G.eps());
}

TEST_CASE("non-commutative group algebra S3") {
  std::vector<std::string> el = {"123", "132", "213", "231", "312", "321"};
  auto mul = [](const std::string& a, const std::string& b) {
    std::string r(3, ' ');
    for (int i = 0; i < 3; ++i) r[i] = a[b[i] - '1'];
    return r;
  };
  auto g = Groupoid::from_group("S3", el, mul);
  auto H = groupoid_algebra(g, F3);
  CHECK(!H.commutative());
  CHECK(verify_weak_hopf(H).ok());
  CHECK(verify_projection_identities(H).ok());
}

TEST_CASE("fault injection: perturbed antipode is detected") {
  auto H0 = groupoid_algebra(Groupoid::cyclic(2), F3);
  LinMap bad = H0.id();
  auto H = WeakHopfAlgebra(H0.algebra(), H0.coalgebra(), bad + H0.eta() * H0.eps());
  auto p = verify_projection_identities(H);
  CHECK(!p.passed("PiL=PiRbar.lambda=lambda.PiLbar"));
  CHECK(!verify_weak_hopf(H).passed("(a4-1)"));
}

TEST_CASE("invalid groupoids are rejected") {
  using M = Groupoid::Morphism;
  CHECK_THROWS_AS(Groupoid::make("g", {"x"}, {M{"e", "x", "x"}, M{"a", "x", "x"}},
                                 {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"a", "a", "a"}}),
                  Error);
  CHECK_THROWS_AS(Groupoid::make("g", {"x"}, {M{"e", "x", "x"}}, {}), Error);
  CHECK_THROWS_AS(Groupoid::make("g", {"x"}, {M{"e", "x", "y"}}, {}), Error);
}

TEST_CASE("tensor algebra and convolution unit") {
  auto H = groupoid_algebra(Groupoid::indiscrete(2), F2);
  auto hh = tensor_algebra(H.algebra(), H.algebra());
  CHECK(verify_algebra(hh).ok());
  auto cc = tensor_coalgebra(H.coalgebra(), H.coalgebra());
  CHECK(verify_coalgebra(cc).ok());
  // η∘ε is a convolution unit only for the Hopf case; in general Π^L∧id = id.
  CHECK(convolution(H.pi_L(), H.id(), H.coalgebra(), H.algebra()) == H.id());
  CHECK(convolution(H.id(), H.pi_R(), H.coalgebra(), H.algebra()) == H.id());
}

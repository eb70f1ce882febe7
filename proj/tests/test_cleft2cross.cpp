#include "doctest.h"
#include "whopf/cleft2cross.hpp"
#include "whopf/error.hpp"

using namespace whopf;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

LinMap nth_map(const Space& d, const Space& c, FieldSpec f, std::uint64_t idx) {
  LinMap m(d, c, f);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m.set(i, j, static_cast<long>(idx % f.p));
      idx /= f.p;
    }
  return m;
}

LinMap z2_sigma(const WeakHopfAlgebra& H, long v) {
  LinMap s(tensor(H.space(), H.space()), Space::unit(), H.field());
  for (std::size_t c = 0; c < 4; ++c) s.set(0, c, c == 3 ? v : 1);
  return s;
}

// Integral x ↦ w(x)·x on H over itself, identities weighted 1.
LinMap weighted(const WeakHopfAlgebra& H, const Groupoid& g, long w) {
  LinMap f(H.space(), H.space(), H.field());
  for (std::size_t i = 0; i < g.morphisms.size(); ++i) {
    const auto& m = g.morphisms[i];
    const bool ident = m.src == m.tgt && g.identity_at(m.src) == i;
    f.set(i, i, ident ? 1 : w);
  }
  return f;
}

WeakModuleAlgebra conjugation() {
  auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
  auto A = matrix_algebra(2, F3);
  LinMap u(Space::unit(), A.space, F3), uinv(Space::unit(), A.space, F3);
  u.set(0, 0, 1), u.set(1, 0, 1), u.set(3, 0, 1);
  uinv.set(0, 0, 1), uinv.set(1, 0, 2), uinv.set(3, 0, 1);
  LinMap conj = A.mult * tensor(A.mult * tensor(u, A.id()), uinv);
  LinMap phi(tensor(H.space(), A.space), A.space, F3);
  for (std::size_t j = 0; j < 4; ++j) {
    phi.set(j, j, 1);
    for (std::size_t i = 0; i < 4; ++i) phi.put(i, 4 + j, conj.at(i, j));
  }
  return WeakModuleAlgebra(A, H, phi);
}

}  // namespace

TEST_CASE("extraction from H over itself") {
  SUBCASE("group algebra: smash over the scalars") {
    auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
    auto ex = extract_crossed_system(is_cleft(ComoduleAlgebra::regular(H), H.id()));
    INFO(ex.report.to_text());
    CHECK(ex.report.ok());
    CHECK(ex.cs.A().space.dim() == 1);
    CHECK(ex.cs.sigma == ex.cs.M.u2());
    CHECK(ex.cs.M.phi() == tensor(H.eps(), ex.cs.A().id()).retyped(ex.cs.M.phi().dom(), ex.cs.M.phi().cod()));
  }
  SUBCASE("k2: u2 on k2") {
    auto H = groupoid_algebra(Groupoid::discrete(2), F3);
    auto ex = extract_crossed_system(is_cleft(ComoduleAlgebra::regular(H), H.id()));
    CHECK(ex.report.ok());
    CHECK(ex.cs.A().space.dim() == 2);
    CHECK(ex.cs.sigma == ex.cs.M.u2());
  }
  SUBCASE("every small groupoid, identity and weighted integrals") {
    for (FieldSpec f : {F2, F3, FieldSpec::rationals()})
      for (const auto& g : small_groupoids()) {
        auto H = groupoid_algebra(g, f);
        auto ca = ComoduleAlgebra::regular(H);
        for (long w : {1L, 2L}) {
          if (f == F2 && w == 2) continue;
          auto cert = is_cleft(ca, weighted(H, g, w));
          REQUIRE(cert.cleft);
          auto ex = extract_crossed_system(cert);
          INFO(g.name << " " << f.name() << " w=" << w << "\n" << ex.report.to_text());
          CHECK(ex.report.ok());
          auto iso = roundtrip_cleft(ex);
          INFO(iso.report.to_text());
          CHECK(iso.ok());
        }
      }
  }
  SUBCASE("non-total integrals are rejected until totalized") {
    auto H = groupoid_algebra(Groupoid::indiscrete(2), F3);
    auto ca = ComoduleAlgebra::regular(H);
    LinMap f = Scalar(F3, 2) * H.id();
    auto cert = is_cleft(ca, f);
    REQUIRE(cert.cleft);
    CHECK_THROWS_AS(extract_crossed_system(cert), Error);
    Integral t = totalize(ca, Integral{f, std::nullopt, false});
    auto ex = extract_crossed_system(is_cleft(ca, t.f));
    CHECK(ex.report.ok());
  }
}

TEST_CASE("crossed round trip returns the same system") {
  SUBCASE("twisted group algebra") {
    auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
    auto m = WeakModuleAlgebra::trivial(unit_algebra(F3), H);
    auto rt = roundtrip_crossed(make_crossed_system(m, z2_sigma(H, 2)));
    INFO(rt.report.to_text());
    CHECK(rt.equal);
    CHECK(rt.report.ok());
  }
  SUBCASE("smash on the regular coinvariants of every small groupoid") {
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, F3);
      auto m = induced_module_structure(is_cleft(ComoduleAlgebra::regular(H), H.id())).M;
      auto rt = roundtrip_crossed(make_crossed_system(m, m.u2()));
      INFO(g.name << "\n" << rt.report.to_text());
      CHECK(rt.equal);
      CHECK(rt.report.ok());
    }
  }
  SUBCASE("non-strict action with a non-central cocycle") {
    auto m = conjugation();
    LinMap s(tensor(m.H().space(), m.H().space()), m.A().space, F3);
    for (std::size_t c = 0; c < 4; ++c) {
      s.set(0, c, 1);
      s.set(3, c, 1);
      if (c == 3) s.set(1, c, 2);
    }
    auto rt = roundtrip_crossed(make_crossed_system(m, s));
    INFO(rt.report.to_text());
    CHECK(rt.equal);
  }
  SUBCASE("a perturbed cocycle is localized") {
    auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
    auto m = WeakModuleAlgebra::trivial(unit_algebra(F3), H);
    auto cs = make_crossed_system(m, z2_sigma(H, 2));
    auto rt = roundtrip_crossed(cs);
    CrossedSystem bad = rt.extracted;
    bad.sigma.set(0, 3, 1);
    auto cmp = compare_systems(bad, cs);
    CHECK(cmp.passed("phi recovered"));
    REQUIRE(cmp.find("sigma recovered"));
    CHECK_FALSE(cmp.passed("sigma recovered"));
    CHECK(cmp.find("sigma recovered")->detail == "differs on g|g");
  }
}

TEST_CASE("equivalence of crossed systems") {
  auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
  auto m = WeakModuleAlgebra::trivial(unit_algebra(F3), H);
  auto s1 = make_crossed_system(m, z2_sigma(H, 1));
  auto s2 = make_crossed_system(m, z2_sigma(H, 2));

  SUBCASE("reflexivity with u1") {
    auto e = reflexive_witness(s2);
    CHECK(e.h.map == m.u1());
    auto iso = equivalence_to_iso(e);
    INFO(iso.report.to_text());
    CHECK(iso.ok());
    CHECK(iso.T == LinMap::identity(iso.T.dom(), F3));
  }
  SUBCASE("different square classes are inequivalent, exhaustively") {
    auto res = search_equivalence(s1, s2);
    CHECK_FALSE(res.witness);
    CHECK(res.candidates == 3);
    // every map H -> K, normalized or not
    for (std::uint64_t i = 0; i < 9; ++i) CHECK_FALSE(check_equivalence(s1, s2, nth_map(H.space(), Space::unit(), F3, i)));
    auto both = search_equivalence(s2, s2, SearchOptions{100, 4});
    CHECK(both.witness);
  }
  SUBCASE("search bound") {
    CHECK_THROWS_AS(search_equivalence(s1, s2, SearchOptions{2, 1}), Error);
    auto q = WeakModuleAlgebra::trivial(unit_algebra(FieldSpec::rationals()), groupoid_algebra(Groupoid::cyclic(2), FieldSpec::rationals()));
    auto sq = make_crossed_system(q, q.u2());
    CHECK_THROWS_AS(search_equivalence(sq, sq), Error);
  }
  SUBCASE("symmetry and transitivity on the conjugation system") {
    auto c = conjugation();
    LinMap s(tensor(c.H().space(), c.H().space()), c.A().space, F3);
    for (std::size_t k = 0; k < 4; ++k) {
      s.set(0, k, 1);
      s.set(3, k, 1);
      if (k == 3) s.set(1, k, 2);
    }
    auto base = make_crossed_system(c, s);
    // Conjugating the data by h(g) = v for an invertible v gives an equivalent system.
    const Algebra& A = c.A();
    LinMap h(c.H().space(), A.space, F3);
    h.set(0, 0, 1), h.set(3, 0, 1);                    // h(e) = 1
    h.set(0, 1, 1), h.set(2, 1, 1), h.set(3, 1, 1);    // h(g) = [[1,0],[1,1]]
    auto reg = solve_reg(c, h, 1);
    REQUIRE(reg);
    const WeakHopfAlgebra& Hc = c.H();
    const LinMap a = A.id(), hid = Hc.id(), &mu = A.mult, &d = Hc.delta();
    const LinMap cHA = symmetry(Hc.space(), A.space, F3);
    // φ' = h⁻¹ φ h, so that φ = h φ' h⁻¹.
    LinMap phi2 = mu * tensor(mu, a) * tensor(reg->inv, c.phi(), h) * tensor(d, cHA) * tensor(d, a);
    WeakModuleAlgebra c2(A, Hc, phi2);
    // Over group-likes τ(x,y) = φ'(x, h⁻¹(y)) h⁻¹(x) σ(x,y) h(xy).
    auto basis = [&](std::size_t i) {
      LinMap v(Space::unit(), Hc.space(), F3);
      v.set(i, 0, 1);
      return v;
    };
    auto times = [&](const LinMap& x, const LinMap& y) { return mu * tensor(x, y); };
    LinMap tau(tensor(Hc.space(), Hc.space()), A.space, F3);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        LinMap bx = basis(x), by = basis(y), bxy = Hc.mu() * tensor(bx, by);
        LinMap v = times(times(times(phi2 * tensor(bx, reg->inv * by), reg->inv * bx), s * tensor(bx, by)), h * bxy);
        for (std::size_t r = 0; r < 4; ++r) tau.put(r, x * 2 + y, v.at(r, 0));
      }
    auto other = make_crossed_system(c2, tau);
    Report why;
    auto e = check_equivalence(base, other, h, &why);
    INFO(why.to_text());
    REQUIRE(e);
    auto back = symmetric_witness(*e);
    REQUIRE(back);
    auto iso = equivalence_to_iso(*e);
    INFO(iso.report.to_text());
    CHECK(iso.ok());
    auto iso_back = equivalence_to_iso(*back);
    CHECK(iso_back.T == iso.Tinv);
    auto loop = transitive_witness(*e, *back);
    REQUIRE(loop);
    CHECK(loop->h.map == c.u1());
    auto composite = equivalence_to_iso(*loop);
    CHECK(composite.T == iso_back.T * iso.T);
  }
}

TEST_CASE("different integrals on one cleft extension give equivalent systems") {
  for (FieldSpec f : {F3, FieldSpec::prime(5)})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      auto ca = ComoduleAlgebra::regular(H);
      auto cf = is_cleft(ca, H.id());
      auto cg = is_cleft(ca, weighted(H, g, 2));
      auto ef = extract_crossed_system(cf), eg = extract_crossed_system(cg);
      // witness: the factorization of f∧g⁻¹ through A_H
      LinMap w = factor_through(ca.conv(cf.f, cg.finv), cf.co.iA);
      Report why;
      auto e = check_equivalence(ef.cs, eg.cs, w, &why);
      INFO(g.name << " " << f.name() << "\n" << why.to_text());
      CHECK(e);
      if (f.size() <= 5 && g.morphisms.size() <= 4) {
        auto res = search_equivalence(ef.cs, eg.cs);
        CHECK(res.witness);
      }
    }
}

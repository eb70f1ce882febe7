#include "whopf/comodule.hpp"

namespace whopf {

ComoduleAlgebra::ComoduleAlgebra(Algebra alg, WeakHopfAlgebra h, LinMap r)
    : A(std::move(alg)), H(std::move(h)), rho(std::move(r)) {
  const FieldSpec f = A.field;
  if (!(rho.dom() == A.space) || !(rho.cod() == tensor(A.space, H.space())))
    throw Error(ErrorCode::ShapeMismatch, "coaction must map A -> A⊗H");
  const LinMap a = A.id(), hid = H.id();
  gamma = tensor(a, H.mu()) * tensor(symmetry(H.space(), A.space, f), hid) * tensor(hid, rho);
  eA = tensor(a, H.eps()) * gamma * tensor(hid, A.unit);
  zeta = tensor(A.mult, hid) * tensor(a, symmetry(H.space(), A.space, f)) * tensor(rho * A.unit, a);
}

ComoduleAlgebra ComoduleAlgebra::regular(const WeakHopfAlgebra& h) {
  return ComoduleAlgebra(h.algebra(), h, h.delta());
}

LinMap ComoduleAlgebra::right_unit() const {
  return tensor(A.id(), H.eps_mu()) * tensor(rho * A.unit, H.id());
}

Report verify_comodule_algebra(const ComoduleAlgebra& ca) {
  Report r("comodule algebra " + ca.A.space.name() + " over " + ca.H.space().name());
  const FieldSpec f = ca.field();
  const LinMap a = ca.A.id(), h = ca.H.id(), &rho = ca.rho, &mu = ca.A.mult, &eta = ca.A.unit;
  const WeakHopfAlgebra& H = ca.H;
  r.merge(verify_algebra(ca.A));
  r.expect_equal("comodule counit", tensor(a, H.eps()) * rho, a);
  r.expect_equal("comodule coassociativity", tensor(rho, h) * rho, tensor(a, H.delta()) * rho);
  r.expect_equal("multiplicativity", rho * mu, ca.AH_algebra().mult * tensor(rho, rho));

  const LinMap rn = rho * eta;
  r.expect_equal("(b1)", tensor(a, H.pi_L()) * rho,
                 tensor(mu, h) * tensor(a, symmetry(H.space(), ca.A.space, f)) * tensor(rn, a));
  r.expect_equal("(b2)", tensor(a, H.pibar_R()) * rho, tensor(mu, h) * tensor(a, rn));
  r.expect_equal("(b3)", tensor(a, H.pi_L()) * rn, rn);
  r.expect_equal("(b4)", tensor(a, H.pibar_R()) * rn, rn);
  const LinMap b56 = tensor(rho, h) * rn;
  r.expect_equal("(b5)", b56, tensor(a, H.mu(), h) * tensor(rho, H.delta()) * tensor(eta, H.eta()));
  r.expect_equal("(b6)", b56, tensor(a, H.mu() * H.c(), h) * tensor(rho, H.delta()) * tensor(eta, H.eta()));

  const LinMap& g = ca.gamma;
  r.expect_equal("entwining a", g * tensor(h, mu), tensor(mu, h) * tensor(a, g) * tensor(g, a));
  r.expect_equal("entwining b", tensor(a, H.delta()) * g, tensor(g, h) * tensor(h, g) * tensor(H.delta(), a));
  r.expect_equal("entwining c", g * tensor(h, eta), tensor(ca.eA, h) * H.delta());
  r.expect_equal("entwining d", tensor(a, H.eps()) * g, mu * tensor(ca.eA, a));
  r.expect_equal("entwined module", rho * mu, tensor(mu, h) * tensor(a, g) * tensor(rho, a));
  r.expect_equal("zeta=(A@PiL).rho", ca.zeta, tensor(a, H.pi_L()) * rho);
  return r;
}

namespace {

Coinvariants induced(const ComoduleAlgebra& ca, const LinMap& i) {
  try {
    Space s = i.dom();
    LinMap unit = factor_through(ca.A.unit, i);
    LinMap mult = factor_through(ca.A.mult * tensor(i, i), i);
    return Coinvariants{Algebra{s, ca.field(), unit, mult}, i};
  } catch (const Error& e) {
    throw Error(ErrorCode::FactorizationFailure, std::string("coinvariant algebra structure: ") + e.what());
  }
}

}  // namespace

Coinvariants coinvariants(const ComoduleAlgebra& ca, const std::string& name) {
  Subspace eq = equalizer(ca.rho, ca.zeta, name);
  const LinMap alt = tensor(ca.A.id(), ca.H.pibar_R()) * ca.rho;
  Subspace eq2 = equalizer(ca.rho, alt, name);
  if (!same_image(eq.inclusion, eq2.inclusion))
    throw Error(ErrorCode::FactorizationFailure, "equalizers with ζ and with Π̄^R disagree");
  return induced(ca, eq.inclusion);
}

Coinvariants coinvariants_from(const ComoduleAlgebra& ca, const LinMap& mono) {
  Subspace eq = equalizer(ca.rho, ca.zeta, "eq");
  if (mono.rank() != mono.cols() || !same_image(mono, eq.inclusion))
    throw Error(ErrorCode::FactorizationFailure, "supplied map is not the coinvariant equalizer");
  return induced(ca, mono);
}

bool check_integral(const ComoduleAlgebra& ca, const LinMap& f) {
  return tensor(f, ca.H.id()) * ca.H.delta() == ca.rho * f;
}

bool is_total(const ComoduleAlgebra& ca, const LinMap& f) { return f * ca.H.eta() == ca.A.unit; }

Report verify_convolution_inverse(const ComoduleAlgebra& ca, const LinMap& f, const LinMap& finv) {
  Report r("convolution inverse");
  r.expect_equal("(c1)", ca.conv(finv, f), ca.eA);
  r.expect_equal("(c2)", ca.conv(f, finv), ca.right_unit());
  r.expect_equal("(c3)", ca.conv(ca.conv(finv, f), finv), finv);
  return r;
}

std::optional<LinMap> solve_convolution_inverse(const ComoduleAlgebra& ca, const LinMap& f) {
  LinearSystem sys(ca.H.space(), ca.A.space, ca.field());
  sys.add([&](const LinMap& x) { return ca.conv(x, f); }, ca.eA);
  sys.add([&](const LinMap& x) { return ca.conv(f, x); }, ca.right_unit());
  auto fam = sys.solve();
  if (!fam) return std::nullopt;
  // Any solution x of the linear part projects to the unique inverse x∧f∧x.
  LinMap y = ca.conv(ca.conv(fam->particular, f), fam->particular);
  if (!verify_convolution_inverse(ca, f, y).ok()) return std::nullopt;
  return y;
}

Integral totalize(const ComoduleAlgebra& ca, const Integral& in, Report* report) {
  const WeakHopfAlgebra& H = ca.H;
  if (!H.cocommutative()) throw Error(ErrorCode::NotCocommutative, "totalize needs a cocommutative H");
  std::optional<LinMap> finv = in.finv ? in.finv : solve_convolution_inverse(ca, in.f);
  if (!finv) throw Error(ErrorCode::NotInvertible, "integral has no convolution inverse");
  const LinMap& f = in.f;
  Integral out;
  out.f = ca.A.mult * tensor(f, *finv * H.eta());
  out.finv = ca.A.mult * tensor(f * H.eta(), *finv);
  out.total = is_total(ca, out.f);
  if (report) {
    report->expect_equal("h=f*(finv.PiRbar)", out.f, ca.conv(f, *finv * H.pibar_R()));
    report->expect_equal("hinv=(f.PiR)*finv", *out.finv, ca.conv(f * H.pi_R(), *finv));
    report->expect_equal("finv(1)f(1)=1", ca.A.mult * tensor(*finv * H.eta(), f * H.eta()), ca.A.unit);
    report->expect("h integral", check_integral(ca, out.f));
    report->expect("h total", out.total);
    report->merge(verify_convolution_inverse(ca, out.f, *out.finv), "h ");
  }
  return out;
}

CleftCertificate is_cleft(const ComoduleAlgebra& ca, const LinMap& f, const std::optional<Coinvariants>& given) {
  CleftCertificate c;
  c.ca = ca;
  c.co = given ? *given : coinvariants(ca);
  c.f = f;
  Report& r = c.report;
  r.title = "cleft extension " + ca.A.space.name() + " over " + ca.H.space().name();
  r.expect("integral", check_integral(ca, f), "f is not a comodule morphism");
  auto finv = solve_convolution_inverse(ca, f);
  if (!r.expect("convolution inverse", finv.has_value(), "no map satisfies (c1)-(c3)")) return c;
  c.finv = *finv;
  r.merge(verify_convolution_inverse(ca, f, c.finv));

  const WeakHopfAlgebra& H = ca.H;
  const LinMap a = ca.A.id(), h = H.id(), &mu = ca.A.mult, &rho = ca.rho, &iA = c.co.iA;
  const bool ff = r.expect("f*finv factors through A_H", factors_through(ca.conv(f, c.finv), iA));
  c.qA = mu * tensor(a, c.finv) * rho;
  const bool q = r.expect("q_A factors through A_H", factors_through(c.qA, iA));
  c.cleft = r.passed("integral") && ff;
  r.expect_equal("rho.finv=(finv@lambda).c.delta", rho * c.finv, tensor(c.finv, H.lambda()) * H.c() * H.delta());
  const LinMap wc = ca.gamma * tensor(h, c.finv) * H.delta();
  r.expect_equal("weak cleft", wc, tensor(a, H.pibar_R()) * rho * c.finv);
  r.note(std::string("weak cleft with zeta on the right: ") + (wc == ca.zeta * c.finv ? "holds" : "fails"));
  if (!q) return c;
  c.pA = factor_through(c.qA, iA);
  r.expect_equal("mu.(A@e_A).rho=id", mu * tensor(a, ca.eA) * rho, a);
  r.expect_equal("mu.(q_A@f).rho=id", mu * tensor(c.qA, f) * rho, a);
  r.expect_equal("rho.mu via q_A", rho * mu, tensor(mu, h) * tensor(c.qA, rho * mu * tensor(f, a)) * tensor(rho, a));
  r.expect_equal("mu.(i_A@f) via q_A", mu * tensor(iA, f),
                 mu * tensor(c.qA, a) * tensor(mu, f) * tensor(iA, rho * f));
  r.expect_equal("p_A is A_H-linear", c.pA * mu * tensor(iA, a), c.co.AH.mult * tensor(c.co.AH.id(), c.pA));
  return c;
}

Report verify_comodule_iso(const ComoduleAlgebra& a, const ComoduleAlgebra& b, const LinMap& T, const LinMap& Tinv) {
  Report r("comodule algebra isomorphism");
  r.expect_equal("T multiplicative", T * a.A.mult, b.A.mult * tensor(T, T));
  r.expect_equal("T unital", T * a.A.unit, b.A.unit);
  r.expect_equal("T colinear", b.rho * T, tensor(T, a.H.id()) * a.rho);
  r.expect_equal("T.Tinv=id", T * Tinv, b.A.id());
  r.expect_equal("Tinv.T=id", Tinv * T, a.A.id());
  return r;
}

std::optional<Isomorphism> cleft_equivalence(const CleftCertificate& a, const CleftCertificate& b,
                                             const std::optional<LinMap>& ident, Report* report) {
  if (!a.cleft || !b.cleft) throw Error(ErrorCode::NotCleft, "cleft_equivalence needs two cleft extensions");
  LinMap J;
  if (ident) {
    J = *ident;
  } else {
    if (!(a.ca.A.space == b.ca.A.space) || !same_image(a.co.iA, b.co.iA))
      throw Error(ErrorCode::NotComparable, "coinvariant subalgebras differ and no identification was given");
    J = factor_through(a.co.iA, b.co.iA);
  }
  if (!(J.dom() == a.co.AH.space) || !(J.cod() == b.co.AH.space) || J.rank() != J.cols() || J.rows() != J.cols() ||
      !(J * a.co.AH.unit == b.co.AH.unit) || !(J * a.co.AH.mult == b.co.AH.mult * tensor(J, J)))
    throw Error(ErrorCode::NotComparable, "identification is not an algebra isomorphism of coinvariants");
  const LinMap h = a.ca.H.id();
  const LinMap gammaA = tensor(a.pA, h) * a.ca.rho, gammaB = tensor(b.pA, h) * b.ca.rho;
  const LinMap chiA = a.ca.A.mult * tensor(a.co.iA, a.f), chiB = b.ca.A.mult * tensor(b.co.iA, b.f);
  Isomorphism iso;
  iso.T = chiB * tensor(J, h) * gammaA;
  iso.Tinv = chiA * tensor(inverse(J), h) * gammaB;
  iso.report = verify_comodule_iso(a.ca, b.ca, iso.T, iso.Tinv);
  iso.report.expect_equal("T.i_A=i_B.J", iso.T * a.co.iA, b.co.iA * J);
  if (report) *report = iso.report;
  if (!iso.ok()) return std::nullopt;
  return iso;
}

}  // namespace whopf

#include "whopf/maction.hpp"

#include "whopf/error.hpp"

namespace whopf {

namespace {

LinMap factor_or_throw(const LinMap& m, const LinMap& mono, const std::string& what) {
  if (!factors_through(m, mono)) throw Error(ErrorCode::FactorizationFailure, what);
  return factor_through(m, mono);
}

}  // namespace

WeakModuleAlgebra::WeakModuleAlgebra(Algebra a, WeakHopfAlgebra h, LinMap phi)
    : a_(std::move(a)), h_(std::move(h)), phi_(std::move(phi)) {
  if (phi_.dom() != tensor(h_.space(), a_.space) || phi_.cod() != a_.space)
    throw Error(ErrorCode::ShapeMismatch, "action must be H⊗A -> A");
  const LinMap hid = h_.id();
  u1_ = phi_ * tensor(hid, a_.unit);
  u2_ = phi_ * tensor(hid, u1_);
  hh_ = tensor_coalgebra(h_.coalgebra(), h_.coalgebra());
  strict_ = phi_ * tensor(h_.mu(), a_.id()) == phi_ * tensor(hid, phi_);
}

WeakModuleAlgebra WeakModuleAlgebra::trivial(const Algebra& a, const WeakHopfAlgebra& h) {
  LinMap phi = tensor(h.eps(), a.id()).retyped(tensor(h.space(), a.space), a.space);
  return WeakModuleAlgebra(a, h, phi);
}

LinMap WeakModuleAlgebra::psi() const {
  const LinMap hid = h_.id();
  return tensor(phi_, hid) * tensor(hid, symmetry(h_.space(), a_.space, field())) * tensor(h_.delta(), a_.id());
}

Report verify_weak_module_algebra(const WeakModuleAlgebra& m) {
  const WeakHopfAlgebra& H = m.H();
  const Algebra& A = m.A();
  const LinMap h = H.id(), a = A.id(), &phi = m.phi(), &u1 = m.u1(), &mu = A.mult;
  const LinMap cHA = symmetry(H.space(), A.space, m.field());
  const LinMap cAA = symmetry(A.space, A.space, m.field());
  const LinMap cHH = H.c();
  Report r("weak module algebra " + A.space.name() + " over " + H.space().name());
  r.expect_equal("(d1)", phi * tensor(H.eta(), a), a);
  r.expect_equal("(d2)", phi * tensor(h, mu),
                 mu * tensor(phi, phi) * tensor(h, cHA, a) * tensor(H.delta(), a, a));
  r.expect_equal("(d3)", phi * tensor(H.mu(), A.unit), phi * tensor(h, u1));
  r.expect_equal("(d4)", phi * tensor(H.pi_L(), a), mu * tensor(u1, a));
  r.expect_equal("(d5)", phi * tensor(H.pibar_L(), a), mu * cAA * tensor(u1, a));
  r.expect_equal("(d6)", phi * tensor(H.pi_L(), A.unit), u1);
  r.expect_equal("(d7)", phi * tensor(H.pibar_L(), A.unit), u1);
  r.expect_equal("(d8)", phi * tensor(h, u1), tensor(u1, H.eps_mu()) * tensor(H.delta(), h));
  r.expect_equal("(d9)", phi * tensor(h, u1), tensor(H.eps_mu(), u1) * tensor(h, cHH) * tensor(H.delta(), h));
  r.expect_equal("u2=u1.mu", m.u2(), u1 * H.mu());
  r.expect_equal("mu.(u1@phi).(delta@A)=phi", mu * tensor(u1, phi) * tensor(H.delta(), a), phi);
  r.expect_equal("(A@eps).psi.(H@eta)=u1", tensor(a, H.eps()) * m.psi() * tensor(h, A.unit), u1);
  if (H.cocommutative()) r.expect("u1 central", is_central(A, u1), "u1 does not factor through the center");
  r.note(std::string("strict: ") + (m.strict() ? "yes" : "no"));
  return r;
}

OmegaData omega_data(const WeakHopfAlgebra& H) {
  const LinMap h = H.id(), hh = tensor(h, h);
  const LinMap dHH = tensor_coalgebra(H.coalgebra(), H.coalgebra()).comult;
  OmegaData o;
  const Space h2 = tensor(H.space(), H.space());
  o.L = (tensor(H.eps_mu(), hh) * dHH).retyped(h2, h2);
  o.R = (tensor(hh, H.eps_mu()) * dHH).retyped(h2, h2);
  Report& r = o.report;
  r.expect_equal("OmegaL idempotent", o.L * o.L, o.L);
  r.expect_equal("OmegaR idempotent", o.R * o.R, o.R);
  r.expect_equal("mu.OmegaL=mu", H.mu() * o.L, H.mu());
  r.expect_equal("mu.OmegaR=mu", H.mu() * o.R, H.mu());
  r.expect_equal("OmegaL module form 1", tensor(H.mu() * tensor(h, H.pi_L()), h) * tensor(h, H.delta()), o.L);
  r.expect_equal("OmegaL module form 2", tensor(h, H.mu() * tensor(H.pibar_R(), h)) * tensor(H.c() * H.delta(), h),
                 o.L);
  if (H.cocommutative()) {
    r.expect_equal("OmegaL=OmegaR", o.L, o.R);
    const LinMap lhs = tensor(o.L, hh) * dHH;
    r.expect_equal("Omega.delta left", lhs, tensor(hh, o.L) * dHH);
    r.expect_equal("Omega.delta right", lhs, dHH * o.L);
  }
  return o;
}

LinMap omega2(const WeakHopfAlgebra& h) { return omega_data(h).L; }

std::optional<RegMap> solve_reg(const WeakModuleAlgebra& m, const LinMap& map, int arity) {
  if (arity != 1 && arity != 2) throw Error(ErrorCode::ShapeMismatch, "arity must be 1 or 2");
  const Coalgebra& C = arity == 1 ? m.H().coalgebra() : m.HH();
  const LinMap& u = arity == 1 ? m.u1() : m.u2();
  if (map.dom() != C.space || map.cod() != m.A().space)
    throw Error(ErrorCode::ShapeMismatch, "Reg candidate has the wrong shape");
  auto conv = [&](const LinMap& x, const LinMap& y) { return convolution(x, y, C, m.A()); };
  LinearSystem sys(C.space, m.A().space, m.field());
  sys.add([&](const LinMap& x) { return conv(map, x); }, u);
  sys.add([&](const LinMap& x) { return conv(x, map); }, u);
  auto fam = sys.solve();
  if (!fam) return std::nullopt;
  // x∧h∧x is the same for every solution x of the linear part.
  RegMap out;
  out.arity = arity;
  out.map = map;
  out.inv = conv(conv(fam->particular, map), fam->particular);
  const std::string e = arity == 1 ? "(e" : "(f";
  Report& r = out.report;
  r.title = arity == 1 ? "Reg(H,A)" : "Reg(H@H,A)";
  r.expect_equal(e + "1) left", conv(map, out.inv), u);
  r.expect_equal(e + "1) right", conv(out.inv, map), u);
  r.expect_equal(e + "2)", conv(conv(map, out.inv), map), map);
  r.expect_equal(e + "3)", conv(conv(out.inv, map), out.inv), out.inv);
  if (!r.ok()) return std::nullopt;
  return out;
}

namespace {

// Records each condition of a cluster as a note and checks that they agree.
void cluster(Report& r, const std::string& name, const std::vector<std::pair<std::string, bool>>& conds) {
  bool all = true, any = false;
  for (const auto& [label, ok] : conds) {
    r.note(name + " " + label + ": " + (ok ? "holds" : "fails"));
    all = all && ok;
    any = any || ok;
  }
  r.expect(name + " conditions agree", all || !any);
}

}  // namespace

Report normalization_report(const WeakModuleAlgebra& m, const RegMap& reg) {
  const WeakHopfAlgebra& H = m.H();
  const LinMap h = H.id(), &u1 = m.u1(), &s = reg.map, &eta = H.eta(), &delta = H.delta();
  const auto& linv = H.lambda_inverse();
  Report r("normalization");
  if (reg.arity == 1) {
    std::vector<std::pair<std::string, bool>> c = {
        {"h.eta=eta", s * eta == m.A().unit},
        {"h.PiL=u1", s * H.pi_L() == u1},
        {"h.PiLbar=u1", s * H.pibar_L() == u1},
    };
    if (linv) {
      c.push_back({"h.PiR=u1.lambda", s * H.pi_R() == u1 * H.lambda()});
      c.push_back({"h.PiRbar=u1.lambdainv", s * H.pibar_R() == u1 * *linv});
    }
    cluster(r, "unit", c);
    r.expect("h.eta=eta iff hinv.eta=eta", (s * eta == m.A().unit) == (reg.inv * eta == m.A().unit));
    return r;
  }
  const LinMap c = H.c();
  std::vector<std::pair<std::string, bool>> left = {
      {"sigma.(eta@H)=u1", s * tensor(eta, h) == u1},
      {"sigma.(PiL@H).delta=u1", s * tensor(H.pi_L(), h) * delta == u1},
      {"sigma.c.(H@PiLbar).delta=u1", s * c * tensor(h, H.pibar_L()) * delta == u1},
  };
  std::vector<std::pair<std::string, bool>> right = {
      {"sigma.(H@eta)=u1", s * tensor(h, eta) == u1},
      {"sigma.(H@PiR).delta=u1", s * tensor(h, H.pi_R()) * delta == u1},
      {"sigma.c.(PiRbar@H).delta=u1", s * c * tensor(H.pibar_R(), h) * delta == u1},
  };
  if (linv) {
    left.push_back({"sigma.(PiR@lambda).delta=u1.lambda", s * tensor(H.pi_R(), H.lambda()) * delta == u1 * H.lambda()});
    left.push_back({"sigma.c.(lambdainv@PiRbar).delta=u1.lambdainv",
                    s * c * tensor(*linv, H.pibar_R()) * delta == u1 * *linv});
    right.push_back({"sigma.(lambda@PiL).delta=u1.lambda", s * tensor(H.lambda(), H.pi_L()) * delta == u1 * H.lambda()});
    right.push_back({"sigma.c.(PiLbar@lambdainv).delta=u1.lambdainv",
                     s * c * tensor(H.pibar_L(), *linv) * delta == u1 * *linv});
  }
  cluster(r, "left", left);
  cluster(r, "right", right);
  if (H.cocommutative()) {
    r.expect("sigma.(eta@H)=u1 iff sigmainv.(eta@H)=u1",
             (s * tensor(eta, h) == u1) == (reg.inv * tensor(eta, h) == u1));
    r.expect("sigma.(H@eta)=u1 iff sigmainv.(H@eta)=u1",
             (s * tensor(h, eta) == u1) == (reg.inv * tensor(h, eta) == u1));
    const LinMap om = omega2(H);
    r.expect_equal("sigma.Omega=sigma", s * om, s);
    r.expect_equal("sigmainv.Omega=sigmainv", reg.inv * om, reg.inv);
  }
  return r;
}

bool is_central(const Algebra& a, const LinMap& f) {
  const LinMap x = tensor(f, a.id());
  return a.mult * x == a.mult * symmetry(a.space, a.space, a.field) * x;
}

Center center(const Algebra& a, const std::string& name) {
  const std::size_t n = a.space.dim();
  const LinMap comm = a.mult - a.mult * symmetry(a.space, a.space, a.field);
  // a ↦ (b ↦ ab - ba), flattened to A -> A⊗A with b in the first slot.
  LinMap ad(a.space, tensor(a.space, a.space), a.field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) ad.put(j * n + k, i, comm.at(k, i * n + j));
  Subspace z = kernel(ad, name);
  Center c;
  c.iZ = z.inclusion;
  c.ZA.space = z.space;
  c.ZA.field = a.field;
  c.ZA.unit = factor_through(a.unit, c.iZ);
  c.ZA.mult = factor_through(a.mult * tensor(c.iZ, c.iZ), c.iZ);
  return c;
}

InducedModule induced_module_structure(const CleftCertificate& cert) {
  const ComoduleAlgebra& ca = cert.ca;
  const WeakHopfAlgebra& H = ca.H;
  if (!H.cocommutative()) throw Error(ErrorCode::NotCocommutative, "induced action needs a cocommutative H");
  if (!cert.cleft || cert.pA.dom() != ca.A.space)
    throw Error(ErrorCode::NotCleft, "induced action needs a cleft certificate");
  const LinMap a = ca.A.id(), &mu = ca.A.mult, &iA = cert.co.iA, &f = cert.f, &finv = cert.finv;
  const LinMap muc = mu * symmetry(ca.A.space, ca.A.space, ca.field());
  const LinMap phiA = mu * tensor(a, muc) * tensor(tensor(f, finv) * H.delta(), iA);
  const LinMap phi = factor_or_throw(phiA, iA, "the induced action does not land in A_H");
  InducedModule out{WeakModuleAlgebra(cert.co.AH, H, phi), Report("induced module structure")};
  Report& r = out.report;
  r.expect_equal("phi=p_A.mu.(f@i_A)", phi, cert.pA * mu * tensor(f, iA));
  r.merge(verify_weak_module_algebra(out.M));
  const LinMap z = cert.co.AH.id();
  const bool barL = phi * tensor(H.pibar_L(), z) == phi;
  const bool fc = mu * tensor(f, iA) == muc * tensor(f, iA);
  r.expect("phi.(PiLbar@A_H)=phi iff f central on A_H", barL == fc);
  const bool piL = phi * tensor(H.pi_L(), z) == phi;
  const bool finvc = mu * tensor(finv, iA) == muc * tensor(finv, iA);
  r.expect("phi.(PiL@A_H)=phi iff finv central on A_H", piL == finvc);
  r.note(std::string("phi.(PiLbar@A_H)=phi: ") + (barL ? "holds" : "fails"));
  r.note(std::string("phi.(PiL@A_H)=phi: ") + (piL ? "holds" : "fails"));
  return out;
}

CenterModule center_module_structure(const CleftCertificate& cert, const WeakModuleAlgebra& mah) {
  const ComoduleAlgebra& ca = cert.ca;
  const WeakHopfAlgebra& H = ca.H;
  if (!H.cocommutative()) throw Error(ErrorCode::NotCocommutative, "center action needs a cocommutative H");
  const LinMap h = H.id(), a = ca.A.id(), &mu = ca.A.mult, &iA = cert.co.iA, &f = cert.f, &finv = cert.finv;
  const LinMap z = mah.A().id();
  const LinMap muc = mu * symmetry(ca.A.space, ca.A.space, ca.field());
  Center Z = center(mah.A(), "Z(" + mah.A().space.name() + ")");
  const LinMap phiZ = factor_or_throw(mah.phi() * tensor(h, Z.iZ), Z.iZ, "the action does not preserve the center");
  CenterModule out{Z, WeakModuleAlgebra(Z.ZA, H, phiZ), LinMap(), Report("center module structure")};
  Report& r = out.report;
  r.merge(verify_weak_module_algebra(out.M));
  r.expect("Z(A_H) commutative", Z.ZA.mult * symmetry(Z.ZA.space, Z.ZA.space, Z.ZA.field) == Z.ZA.mult);
  r.expect("phi_Z strict", out.M.strict(), "(d3-1) fails on the center");

  const LinMap psiA = mu * tensor(a, muc) * tensor(tensor(finv, f) * H.delta(), iA);
  out.psiAH = factor_or_throw(psiA, iA, "psi_A does not land in A_H");
  const LinMap cHZ = symmetry(H.space(), mah.A().space, ca.field());
  r.expect_equal("mu.(finv@i_A) via psi", mu * tensor(finv, iA), mu * tensor(psiA, finv) * tensor(h, cHZ) * tensor(H.delta(), z));
  r.expect_equal("mu.c.(f@i_A) via psi", muc * tensor(f, iA), mu * tensor(f, psiA) * tensor(H.delta(), z));
  const Algebra& AH = mah.A();
  r.expect_equal("phi.(H@psi).(delta@A_H)", mah.phi() * tensor(h, out.psiAH) * tensor(H.delta(), z),
                 AH.mult * tensor(mah.phi() * tensor(h, AH.unit), z));
  return out;
}

}  // namespace whopf

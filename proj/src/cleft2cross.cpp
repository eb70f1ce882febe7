#include "whopf/cleft2cross.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "whopf/error.hpp"

namespace whopf {

namespace {

LinMap factor_or_throw(const LinMap& m, const LinMap& mono, const std::string& what) {
  if (!factors_through(m, mono)) throw Error(ErrorCode::FactorizationFailure, what);
  return factor_through(m, mono);
}

LinMap mu_c(const Algebra& a) { return a.mult * symmetry(a.space, a.space, a.field); }

}  // namespace

ExtractedSystem extract_crossed_system(const CleftCertificate& cert) {
  const ComoduleAlgebra& ca = cert.ca;
  const WeakHopfAlgebra& H = ca.H;
  const Algebra& A = ca.A;
  if (!H.cocommutative()) throw Error(ErrorCode::NotCocommutative, "extraction needs a cocommutative H");
  if (!cert.cleft || cert.pA.dom() != A.space) throw Error(ErrorCode::NotCleft, "extraction needs a cleft certificate");
  if (!is_total(ca, cert.f)) throw Error(ErrorCode::NotTotal, "extraction needs a total integral");
  const LinMap &f = cert.f, &finv = cert.finv, &mu = A.mult, &iA = cert.co.iA;
  InducedModule ind = induced_module_structure(cert);
  const Coalgebra hh = tensor_coalgebra(H.coalgebra(), H.coalgebra());
  auto conv2 = [&](const LinMap& x, const LinMap& y) { return convolution(x, y, hh, A); };
  const LinMap sA = conv2(mu * tensor(f, f), finv * H.mu());
  const LinMap sAinv = conv2(f * H.mu(), mu_c(A) * tensor(finv, finv));
  ExtractedSystem ex{cert, CrossedSystem{ind.M, factor_or_throw(sA, iA, "sigma does not land in A_H"),
                                         factor_or_throw(sAinv, iA, "sigma inverse does not land in A_H")},
                     Report("extracted crossed system")};
  Report& r = ex.report;
  r.merge(ind.report, "action ");
  r.expect_equal("sigma=p_A.mu.(f@f)", ex.cs.sigma, cert.pA * mu * tensor(f, f));
  auto reg = solve_reg(ind.M, ex.cs.sigma, 2);
  if (r.expect("sigma in Reg", reg.has_value())) r.expect_equal("sigmainv is the Reg inverse", reg->inv, ex.cs.sigmainv);
  r.merge(verify_crossed_system(ex.cs), "system ");
  const bool smash = ex.cs.sigma == ind.M.u2();
  r.expect("sigma=u2 iff f multiplicative", smash == (mu * tensor(f, f) == f * H.mu()));
  return ex;
}

Isomorphism roundtrip_cleft(const ExtractedSystem& ex) {
  const CleftCertificate& cert = ex.cert;
  const ComoduleAlgebra& ca = cert.ca;
  const LinMap h = ca.H.id(), &mu = ca.A.mult, &iA = cert.co.iA;
  CrossedProductData cpd = build_crossed_product(ex.cs);
  CrossedComodule cc = comodule_structure(cpd);
  Isomorphism iso;
  iso.T = cpd.split.proj * tensor(cert.pA, h) * ca.rho;
  iso.Tinv = mu * tensor(iA, cert.f) * cpd.split.inj;
  iso.report = verify_comodule_iso(ca, cc.ca, iso.T, iso.Tinv);
  iso.report.title = "cleft round trip";
  iso.report.expect_equal("Tinv.i=i_A", iso.Tinv * cc.iA, iA);
  iso.report.expect_equal("nabla=(p_A@H).rho.mu.(i_A@f)", cpd.maps.nabla, tensor(cert.pA, h) * ca.rho * mu * tensor(iA, cert.f));
  return iso;
}

CrossedRoundTrip roundtrip_crossed(const CrossedSystem& cs) {
  const WeakHopfAlgebra& H = cs.H();
  const Algebra& A = cs.A();
  const LinMap h = H.id(), a = A.id();
  CrossedProductData cpd = build_crossed_product(cs);
  CrossedComodule cc = comodule_structure(cpd);
  CrossedRoundTrip out;
  Report& r = out.report;
  Integral in = canonical_integral(cpd, &r);
  CleftCertificate cert = is_cleft(cc.ca, in.f, coinvariants_from(cc.ca, cc.iA));
  r.merge(cert.report, "cleft ");
  r.expect_equal("canonical finv is the inverse", *in.finv, cert.finv);
  const LinMap &i = cpd.split.inj, &p = cpd.split.proj;
  r.expect_equal("q=p.(A@PiL).i", cert.qA, p * tensor(a, H.pi_L()) * i);
  r.expect_equal("p_A=(A@eps).i", cert.pA, tensor(a, H.eps()) * i);
  const LinMap c = H.c();
  const LinMap dHH = cs.M.HH().comult;
  const LinMap lhs = A.mult * tensor(cs.M.phi() * tensor(h, cs.sigmainv), cs.sigma) *
                     tensor(h, h, tensor(c, h) * tensor(h, c)) *
                     tensor(dHH * tensor(h, H.lambda()) * H.delta(), h) * H.delta();
  r.expect_equal("u1 from sigma and sigmainv", lhs, cs.M.u1());
  ExtractedSystem ex = extract_crossed_system(cert);
  r.merge(ex.report, "extracted ");
  out.extracted = ex.cs;
  Report cmp = compare_systems(ex.cs, cs);
  r.merge(cmp);
  out.equal = cmp.ok();
  return out;
}

Report compare_systems(const CrossedSystem& got, const CrossedSystem& want) {
  Report r("comparison");
  r.expect_equal("phi recovered", got.M.phi(), want.M.phi());
  r.expect_equal("sigma recovered", got.sigma, want.sigma);
  return r;
}

std::optional<CrossedSystemEquivalence> check_equivalence(const CrossedSystem& lhs, const CrossedSystem& rhs,
                                                          const LinMap& h, Report* why) {
  const WeakHopfAlgebra& H = lhs.H();
  const Algebra& A = lhs.A();
  Report r("equivalence");
  const LinMap hid = H.id(), a = A.id(), &mu = A.mult, &d = H.delta();
  bool ok = r.expect_equal("shared u1", lhs.M.u1(), rhs.M.u1());
  ok = r.expect_equal("h.eta=eta", h * H.eta(), A.unit) && ok;
  auto reg = solve_reg(lhs.M, h, 1);
  ok = r.expect("h in Reg", reg.has_value()) && ok;
  if (reg) {
    const LinMap& hinv = reg->inv;
    const LinMap cHA = symmetry(H.space(), A.space, A.field);
    ok = r.expect_equal("phi relation", lhs.M.phi(),
                        mu * tensor(mu, a) * tensor(h, rhs.M.phi(), hinv) * tensor(d, cHA) * tensor(d, a)) && ok;
    const LinMap dHH = lhs.M.HH().comult;
    ok = r.expect_equal("sigma relation", lhs.sigma,
                        mu * tensor(mu, hinv) * tensor(mu, rhs.sigma, H.mu()) * tensor(h, rhs.M.phi(), dHH) *
                            tensor(d, h, hid, hid) * dHH) && ok;
  }
  if (why) *why = r;
  if (!ok) return std::nullopt;
  return CrossedSystemEquivalence{*reg, lhs, rhs, r};
}

namespace {

// h∘η = η_A and h∘Π^L = u1, plus φ(x1,a)h(x2) = h(x1)φ'(x2,a) when H is cocommutative.
std::optional<AffineFamily> witness_family(const CrossedSystem& lhs, const CrossedSystem& rhs) {
  const WeakHopfAlgebra& H = lhs.H();
  const Algebra& A = lhs.A();
  const LinMap hid = H.id(), a = A.id();
  LinearSystem sys(H.space(), A.space, A.field);
  sys.add([&](const LinMap& x) { return x * H.eta(); }, A.unit);
  sys.add([&](const LinMap& x) { return x * H.pi_L(); }, lhs.M.u1());
  if (H.cocommutative()) {
    const LinMap cHA = symmetry(H.space(), A.space, A.field);
    const LinMap left = tensor(hid, cHA) * tensor(H.delta(), a);
    const LinMap right = tensor(H.delta(), a);
    sys.add(
        [&](const LinMap& x) {
          return A.mult * tensor(lhs.M.phi(), x) * left - A.mult * tensor(x, rhs.M.phi()) * right;
        },
        LinMap(tensor(H.space(), A.space), A.space, A.field));
  }
  return sys.solve();
}

}  // namespace

SearchResult search_equivalence(const CrossedSystem& lhs, const CrossedSystem& rhs, const SearchOptions& opt) {
  if (!lhs.A().field.is_finite()) throw Error(ErrorCode::NotEnumerable, "witness search needs a finite field");
  SearchResult res;
  if (lhs.M.u1() != rhs.M.u1()) return res;
  auto fam = witness_family(lhs, rhs);
  if (!fam) return res;
  res.candidates = fam->count();
  if (res.candidates > opt.max_enum)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(res.candidates) + " candidate witnesses exceed the bound " + std::to_string(opt.max_enum));
  const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{none};
  auto scan = [&](std::uint64_t start, std::uint64_t stride) {
    for (std::uint64_t k = start; k < res.candidates && k < best.load(); k += stride)
      if (check_equivalence(lhs, rhs, fam->member(k))) {
        std::uint64_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
        return;
      }
  };
  const unsigned n = std::max(1u, opt.threads);
  if (n == 1) {
    scan(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(scan, t, n);
    for (auto& th : pool) th.join();
  }
  if (best.load() != none) res.witness = check_equivalence(lhs, rhs, fam->member(best.load()));
  return res;
}

CrossedSystemEquivalence reflexive_witness(const CrossedSystem& cs) {
  auto e = check_equivalence(cs, cs, cs.M.u1());
  if (!e) throw Error(ErrorCode::InvalidStructure, "u1 does not witness reflexivity");
  return *e;
}

std::optional<CrossedSystemEquivalence> symmetric_witness(const CrossedSystemEquivalence& e) {
  return check_equivalence(e.rhs, e.lhs, e.h.inv);
}

std::optional<CrossedSystemEquivalence> transitive_witness(const CrossedSystemEquivalence& a,
                                                           const CrossedSystemEquivalence& b) {
  return check_equivalence(a.lhs, b.rhs, a.lhs.M.conv1(a.h.map, b.h.map));
}

Isomorphism equivalence_to_iso(const CrossedSystemEquivalence& e) {
  const WeakHopfAlgebra& H = e.lhs.H();
  const Algebra& A = e.lhs.A();
  const LinMap hid = H.id(), a = A.id(), &mu = A.mult, &d = H.delta();
  CrossedProductData l = build_crossed_product(e.lhs), r = build_crossed_product(e.rhs);
  CrossedComodule cl = comodule_structure(l), cr = comodule_structure(r);
  auto theta = [&](const LinMap& x) { return tensor(mu, hid) * tensor(a, x, hid) * tensor(a, d); };
  Isomorphism iso;
  iso.T = r.split.proj * theta(e.h.map) * l.split.inj;
  iso.Tinv = l.split.proj * theta(e.h.inv) * r.split.inj;
  iso.report = verify_comodule_iso(cl.ca, cr.ca, iso.T, iso.Tinv);
  iso.report.title = "isomorphism from equivalence";
  iso.report.expect_equal("T.i=i'", iso.T * cl.iA, cr.iA);
  const LinMap& h = e.h.map;
  const LinMap hphi = mu * tensor(h, e.rhs.M.phi());
  iso.report.expect_equal("mu.(A@h).sigmaLift", mu * tensor(a, h) * l.maps.sigmaLift,
                          mu * tensor(hphi * tensor(d, h), e.rhs.sigma) * e.lhs.M.HH().comult);
  const LinMap cHA = symmetry(H.space(), A.space, A.field);
  iso.report.expect_equal("(nabla@H) against psi",
                          tensor(r.maps.nabla, hid) * tensor(hphi * tensor(d, a), d) * tensor(hid, cHA) * tensor(d, a),
                          tensor(mu, d) * tensor(h, r.maps.psi) * tensor(d, a));
  return iso;
}

}  // namespace whopf

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "group_h2.hpp"
#include "whopf/cohom.hpp"
#include "whopf/error.hpp"
#include "whopf/io.hpp"

using namespace whopf;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

// Collects failures for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r, const std::string& what) {
    if (!r.ok()) failures.push_back(what + ": " + (r.failures().empty() ? r.title : r.failures().front()));
  }
};

std::string gf(FieldSpec f) { return "GF(" + std::to_string(f.p) + ")"; }

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
    f.set(i, i, m.src == m.tgt && g.identity_at(m.src) == i ? 1 : w);
  }
  return f;
}

// Conjugation by [[1,1],[0,1]] for the generator of Z/2 on M2(GF(3)).
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

// σ(g,g) = [[1,2],[0,1]], 1 elsewhere.
LinMap conjugation_sigma(const WeakModuleAlgebra& m) {
  LinMap s(tensor(m.H().space(), m.H().space()), m.A().space, F3);
  for (std::size_t c = 0; c < 4; ++c) {
    s.set(0, c, 1);
    s.set(3, c, 1);
    if (c == 3) s.set(1, c, 2);
  }
  return s;
}

struct Named {
  std::string name;
  CrossedSystem cs;
};

// The three crossed systems of the crossed-product suite.
std::vector<Named> crossed_suite() {
  std::vector<Named> out;
  auto z2 = groupoid_algebra(Groupoid::cyclic(2), F3);
  auto smash = WeakModuleAlgebra::trivial(unit_algebra(F3), z2);
  out.push_back({"Hopf smash GF(3)[Z2]", make_crossed_system(smash, smash.u2())});
  auto k2 = groupoid_algebra(Groupoid::discrete(2), F3);
  WeakModuleAlgebra weak(k2.algebra(), k2, k2.mu());
  out.push_back({"weak smash k2 over k2", make_crossed_system(weak, weak.u2())});
  out.push_back({"twisted GF(3)[Z2]", make_crossed_system(smash, z2_sigma(z2, 2))});
  return out;
}

bool identity(const LinMap& m) { return m.dom() == m.cod() && m == LinMap::identity(m.dom(), m.field()); }

Outcome axiom_suite() {
  Outcome o;
  std::size_t n = 0;
  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      auto w = verify_weak_hopf(H);
      auto p = verify_projection_identities(H);
      o.expect(w, g.name + " over " + gf(f));
      o.expect(p, g.name + " over " + gf(f));
      o.expect(p.checks.size() == 24, g.name + ": expected 24 projection identities");
      ++n;
    }
  o.info.push_back(std::to_string(n) + " algebras");
  return o;
}

Outcome integral_suite() {
  Outcome o;
  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      const std::string where = g.name + " over " + gf(f);
      if (!H.cocommutative()) continue;
      auto ca = ComoduleAlgebra::regular(H);
      o.expect(check_integral(ca, H.id()), where + ": id is not an integral");
      o.expect(is_total(ca, H.id()), where + ": id is not total");
      auto finv = solve_convolution_inverse(ca, H.id());
      o.expect(finv && *finv == H.lambda(), where + ": convolution inverse of id is not lambda");
      auto cert = is_cleft(ca, H.id());
      o.expect(cert.cleft, where + ": not cleft");
      o.expect(cert.report, where);
      o.expect(cert.report.passed("rho.finv=(finv@lambda).c.delta"), where + ": cleaving identity");
    }
  return o;
}

Outcome coinvariant_oracle() {
  Outcome o;
  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      auto co = coinvariants(ComoduleAlgebra::regular(H));
      o.expect(same_image(co.iA, H.pi_L()), g.name + " over " + gf(f) + ": H_L differs from the image of PiL");
    }
  auto dim = [](const Groupoid& g) {
    return coinvariants(ComoduleAlgebra::regular(groupoid_algebra(g, F3))).AH.space.dim();
  };
  const std::size_t z2 = dim(Groupoid::cyclic(2)), ind = dim(Groupoid::indiscrete(2));
  o.expect(z2 == 1, "dim H_L for GF(3)[Z2] is " + std::to_string(z2));
  o.expect(ind == 2, "dim H_L for the indiscrete groupoid is " + std::to_string(ind));
  o.info.push_back("dims 1, 2");
  return o;
}

Outcome crossed_product_suite() {
  Outcome o;
  for (const auto& [name, cs] : crossed_suite()) {
    try {
      auto d = build_crossed_product(cs);
      o.expect(d.report, name);
      o.expect(verify_algebra(d.small), name + ": crossed product algebra");
      auto cc = comodule_structure(d);
      o.expect(cc.report, name);
      o.expect(cc.iA.rank() == cs.A().space.dim(), name + ": A -> A x H not injective");
      o.expect(same_image(coinvariants(cc.ca).iA, cc.iA), name + ": coinvariants differ from A");
      Report r("canonical integral");
      auto in = canonical_integral(d, &r);
      o.expect(r, name);
      o.expect(in.total, name + ": canonical integral not total");
      auto cert = is_cleft(cc.ca, in.f);
      o.expect(cert.cleft && cert.report.ok(), name + ": canonical cleft certificate");
      if (cs.H().eps_mu() == tensor(cs.H().eps(), cs.H().eps()))
        o.expect(identity(d.maps.nabla), name + ": nabla is not the identity in the Hopf case");
    } catch (const Error& e) {
      o.expect(false, name + ": " + e.what());
    }
  }
  return o;
}

Outcome round_trips() {
  Outcome o;
  auto check_iso = [&](const Isomorphism& iso, const std::string& name) {
    o.expect(iso.report, name);
    o.expect(identity(iso.T * iso.Tinv) && identity(iso.Tinv * iso.T), name + ": composites are not the identity");
  };
  for (const auto& [name, cs] : crossed_suite()) {
    auto rt = roundtrip_crossed(cs);
    o.expect(rt.equal, name + ": crossed round trip not equal");
    o.expect(rt.report, name);
    auto d = build_crossed_product(cs);
    auto cc = comodule_structure(d);
    auto cert = is_cleft(cc.ca, canonical_integral(d).f);
    auto ex = extract_crossed_system(cert);
    o.expect(ex.report, name);
    check_iso(roundtrip_cleft(ex), name);
  }
  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      auto ex = extract_crossed_system(is_cleft(ComoduleAlgebra::regular(H), H.id()));
      o.expect(ex.report, g.name + " over " + gf(f));
      check_iso(roundtrip_cleft(ex), g.name + " over " + gf(f));
    }
  return o;
}

H2Bijection regular_bijection(const Groupoid& g, FieldSpec f) {
  auto H = groupoid_algebra(g, f);
  return verify_h2_bijection(is_cleft(ComoduleAlgebra::regular(H), H.id()));
}

Outcome h2_oracle() {
  Outcome o;
  auto H = groupoid_algebra(Groupoid::cyclic(2), F3);
  auto m = WeakModuleAlgebra::trivial(unit_algebra(F3), H);
  auto cocycles = enumerate_cocycles(m);
  auto classes = h2_classes(m, cocycles);
  o.expect(cocycles.size() == 2, "GF(3)[Z2]: " + std::to_string(cocycles.size()) + " cocycles");
  o.expect(class_count(classes) == 2, "GF(3)[Z2]: " + std::to_string(class_count(classes)) + " classes");
  auto s1 = make_crossed_system(m, z2_sigma(H, 1)), s2 = make_crossed_system(m, z2_sigma(H, 2));
  auto res = search_equivalence(s1, s2);
  o.expect(!res.witness, "GF(3)[Z2]: witness between sigma(g,g)=1 and 2");
  o.expect(res.candidates == 3, "GF(3)[Z2]: " + std::to_string(res.candidates) + " normalized candidates");
  for (std::uint64_t i = 0; i < 9; ++i)
    o.expect(!check_equivalence(s1, s2, nth_map(H.space(), Space::unit(), F3, i)),
             "GF(3)[Z2]: map " + std::to_string(i) + " is a witness");

  struct Expect {
    Groupoid g;
    FieldSpec f;
    std::size_t classes;
  };
  for (const auto& [g, f, k] : std::vector<Expect>{
           {Groupoid::cyclic(2), F3, 2}, {Groupoid::cyclic(2), F2, 1}, {Groupoid::discrete(2), F3, 1}}) {
    auto b = regular_bijection(g, f);
    const std::string where = g.name + " over " + gf(f);
    o.expect(b.report, where);
    o.expect(b.cocycleClasses == k && b.systemClasses == k,
             where + ": " + std::to_string(b.cocycleClasses) + " = " + std::to_string(b.systemClasses));
    o.info.push_back(where + " " + std::to_string(b.cocycleClasses) + " = " + std::to_string(b.systemClasses));
  }

  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      if (g.objects.size() != 1) continue;
      auto Hg = groupoid_algebra(g, f);
      auto zm = WeakModuleAlgebra::trivial(unit_algebra(f), Hg);
      auto cs = enumerate_cocycles(zm);
      auto oracle = testing::group_h2(g, f.p);
      const std::string where = g.name + " over " + gf(f);
      o.expect(cs.size() == oracle.cocycles.size(), where + ": cocycle count differs from the group oracle");
      o.expect(class_count(h2_classes(zm, cs)) == oracle.classes, where + ": class count differs from the group oracle");
    }
  return o;
}

Outcome class_coherence() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& g : {Groupoid::cyclic(2), Groupoid::cyclic(3)}) {
    auto H = groupoid_algebra(g, F3);
    auto m = WeakModuleAlgebra::trivial(unit_algebra(F3), H);
    auto cocycles = enumerate_cocycles(m);
    auto classes = h2_classes(m, cocycles);
    std::vector<CrossedSystem> systems;
    for (const auto& c : cocycles) systems.push_back(make_crossed_system(m, c.map));
    for (std::size_t i = 0; i < systems.size(); ++i)
      for (std::size_t j = 0; j < systems.size(); ++j) {
        auto res = search_equivalence(systems[i], systems[j]);
        const std::string where = g.name + " cocycles " + std::to_string(i) + ", " + std::to_string(j);
        o.expect(res.witness.has_value() == (classes[i].classId == classes[j].classId), where + ": class mismatch");
        if (!res.witness) continue;
        ++pairs;
        auto iso = equivalence_to_iso(*res.witness);
        o.expect(iso.report, where);
        auto extracted = [](const CrossedSystem& cs) {
          auto d = build_crossed_product(cs);
          auto cc = comodule_structure(d);
          return extract_crossed_system(is_cleft(cc.ca, canonical_integral(d).f)).cs;
        };
        o.expect(search_equivalence(extracted(systems[i]), extracted(systems[j])).witness.has_value(),
                 where + ": extracted systems of isomorphic crossed products not found equivalent");
      }
  }
  for (const auto& g : small_groupoids()) {
    auto H = groupoid_algebra(g, F3);
    auto ca = ComoduleAlgebra::regular(H);
    auto cf = is_cleft(ca, H.id()), cg = is_cleft(ca, weighted(H, g, 2));
    o.expect(cf.cleft && cg.cleft, g.name + ": weighted integral not cleft");
    o.expect(verify_comodule_iso(ca, ca, ca.A.id(), ca.A.id()), g.name);
    auto res = search_equivalence(extract_crossed_system(cf).cs, extract_crossed_system(cg).cs);
    o.expect(res.witness.has_value(), g.name + ": extracted systems not found equivalent");
  }
  o.info.push_back(std::to_string(pairs) + " equivalent pairs");
  return o;
}

Outcome theorem_checks() {
  Outcome o;
  std::vector<Named> instances = crossed_suite();
  for (FieldSpec f : {F2, F3})
    for (const auto& g : {Groupoid::cyclic(2), Groupoid::discrete(2)}) {
      auto H = groupoid_algebra(g, f);
      auto ex = extract_crossed_system(is_cleft(ComoduleAlgebra::regular(H), H.id()));
      for (auto& cs : enumerate_crossed_systems(ex.cs.M))
        instances.push_back({g.name + " over " + gf(f) + " enumerated", cs});
    }
  auto conj = conjugation();
  instances.push_back({"conjugation", make_crossed_system(conj, conjugation_sigma(conj))});
  for (const auto& [name, cs] : instances) {
    auto sc = special_case_checks(cs);
    o.expect(sc.report, name);
    o.expect(cs.M.strict() == sc.centerValued, name + ": strict differs from center-valued");
  }

  auto strict = WeakModuleAlgebra::trivial(matrix_algebra(2, F3), groupoid_algebra(Groupoid::cyclic(2), F3));
  o.expect(strict.strict(), "trivial action on M2 is not strict");
  o.expect(verify_crossed_system(make_crossed_system(strict, strict.u2())), "strict (phi, u2)");
  o.expect(!conj.strict(), "conjugation action is strict");
  auto bad = make_crossed_system(conj, conj.u2());
  o.expect(!verify_crossed_system(bad).ok(), "non-strict (phi, u2) verified as a crossed system");
  bool threw = false;
  try {
    build_crossed_product(bad);
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::TwistedFail;
  }
  o.expect(threw, "non-strict (phi, u2) did not raise TwistedFail");
  o.info.push_back(std::to_string(instances.size()) + " instances");
  return o;
}

// Every task document under `data` plus the core reports, as one JSON document.
Json suite_json(const std::filesystem::path& data, unsigned threads) {
  Json out = Json::object();
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    Json entry;
    try {
      RunOptions opt;
      opt.threads = threads;
      opt.max_enum = 100'000;
      auto r = run_document(parse_input_file(p.string()), opt);
      entry["exit"] = r.exit_code;
      entry["report"] = r.report;
    } catch (const Error& e) {
      entry["error"] = e.what();
    }
    out["documents"][p.filename().string()] = entry;
  }
  for (const auto& [name, cs] : crossed_suite()) {
    auto d = build_crossed_product(cs);
    out["crossed"][name] = report_json(d.report);
    out["roundtrip"][name] = report_json(roundtrip_crossed(cs).report);
  }
  for (FieldSpec f : {F2, F3})
    for (const auto& g : small_groupoids()) {
      auto H = groupoid_algebra(g, f);
      const std::string key = g.name + " over " + gf(f);
      out["weak hopf"][key] = report_json(verify_weak_hopf(H));
      out["projections"][key] = report_json(verify_projection_identities(H));
      auto cert = is_cleft(ComoduleAlgebra::regular(H), H.id());
      out["cleft"][key] = report_json(cert.report);
      out["h2"][key] = report_json(verify_h2_bijection(cert, EnumOptions{10'000'000, threads}).report);
    }
  return out;
}

Outcome determinism(const std::filesystem::path& data) {
  Outcome o;
  const std::string a = suite_json(data, 1).dump(2), b = suite_json(data, 3).dump(2);
  o.expect(a == b, "JSON reports differ between runs");
  o.info.push_back(std::to_string(a.size()) + " bytes");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path data = argc > 1 ? argv[1] : WHOPF_TEST_DATA;
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria{
      {1, "axiom suite", axiom_suite, 5.0},
      {2, "integral suite", integral_suite, 0},
      {3, "coinvariant oracle", coinvariant_oracle, 0},
      {4, "crossed-product suite", crossed_product_suite, 0},
      {5, "round trips", round_trips, 0},
      {6, "equivalence and H2 oracle", h2_oracle, 30.0},
      {7, "equivalence-class coherence", class_coherence, 0},
      {8, "theorem cross-checks", theorem_checks, 0},
      {9, "determinism", [&] { return determinism(data); }, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      std::ostringstream s;
      s << "runtime " << secs << " s exceeds " << c.limit << " s";
      o.failures.push_back(s.str());
    }
    const bool pass = o.failures.empty();
    failed += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
    for (const auto& i : o.info) line << "; " << i;
    line.precision(3);
    line << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "  " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}

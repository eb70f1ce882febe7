#include "whopf/structure.hpp"

#include <algorithm>
#include <set>

namespace whopf {

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const FieldSpec f = a.field;
  Space s = tensor(a.space, b.space);
  const std::size_t da = a.space.dim(), db = b.space.dim(), d = da * db;
  // (x⊗y)(x'⊗y') = xx'⊗yy', filled entrywise to avoid the symmetry on A⊗B⊗A⊗B.
  LinMap mult(tensor(s, s), s, f);
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t x2 = 0; x2 < da; ++x2)
      for (std::size_t i = 0; i < da; ++i) {
        const Scalar& u = a.mult.at(i, x * da + x2);
        if (u.is_zero()) continue;
        for (std::size_t y = 0; y < db; ++y)
          for (std::size_t y2 = 0; y2 < db; ++y2)
            for (std::size_t j = 0; j < db; ++j) {
              const Scalar& v = b.mult.at(j, y * db + y2);
              if (!v.is_zero()) mult.put(i * db + j, (x * db + y) * d + (x2 * db + y2), u * v);
            }
      }
  return Algebra{s, f, tensor(a.unit, b.unit), mult};
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& e) {
  const FieldSpec f = c.field;
  Space s = tensor(c.space, e.space);
  const std::size_t dc = c.space.dim(), de = e.space.dim(), d = dc * de;
  // δ(x⊗y) = x1⊗y1⊗x2⊗y2
  LinMap comult(s, tensor(s, s), f);
  for (std::size_t x = 0; x < dc; ++x)
    for (std::size_t i = 0; i < dc * dc; ++i) {
      const Scalar& u = c.comult.at(i, x);
      if (u.is_zero()) continue;
      const std::size_t x1 = i / dc, x2 = i % dc;
      for (std::size_t y = 0; y < de; ++y)
        for (std::size_t j = 0; j < de * de; ++j) {
          const Scalar& v = e.comult.at(j, y);
          if (v.is_zero()) continue;
          const std::size_t y1 = j / de, y2 = j % de;
          comult.put((x1 * de + y1) * d + (x2 * de + y2), x * de + y, u * v);
        }
    }
  return Coalgebra{s, f, tensor(c.counit, e.counit), comult};
}

Algebra unit_algebra(FieldSpec f) {
  LinMap one = LinMap::identity(Space::unit(), f);
  return Algebra{Space::unit(), f, one, one};
}

Algebra matrix_algebra(unsigned n, FieldSpec f, const std::string& name) {
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) labels.push_back("e" + std::to_string(i) + std::to_string(j));
  Space s = Space::atom(name, labels);
  const std::size_t d = s.dim();
  LinMap unit(Space::unit(), s, f), mult(tensor(s, s), s, f);
  for (unsigned i = 0; i < n; ++i) unit.set(i * n + i, 0, 1);
  // e_ij e_kl = [j = k] e_il
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      for (unsigned l = 0; l < n; ++l) mult.set(i * n + l, (i * n + j) * d + (j * n + l), 1);
  return Algebra{s, f, unit, mult};
}

LinMap convolution(const LinMap& a, const LinMap& b, const Coalgebra& c, const Algebra& alg) {
  return through_tensor(alg.mult, a, b, c.comult);
}

Report verify_algebra(const Algebra& a) {
  Report r("algebra " + a.space.name());
  const LinMap id = a.id();
  r.expect_equal("associativity", a.mult * tensor(a.mult, id), a.mult * tensor(id, a.mult));
  r.expect_equal("left unit", a.mult * tensor(a.unit, id), id);
  r.expect_equal("right unit", a.mult * tensor(id, a.unit), id);
  return r;
}

Report verify_coalgebra(const Coalgebra& c) {
  Report r("coalgebra " + c.space.name());
  const LinMap id = c.id();
  r.expect_equal("coassociativity", tensor(c.comult, id) * c.comult, tensor(id, c.comult) * c.comult);
  r.expect_equal("left counit", tensor(c.counit, id) * c.comult, id);
  r.expect_equal("right counit", tensor(id, c.counit) * c.comult, id);
  return r;
}

// ---------------------------------------------------------------- weak Hopf algebras

WeakHopfAlgebra::WeakHopfAlgebra(Algebra alg, Coalgebra coalg, LinMap antipode)
    : alg_(std::move(alg)), coalg_(std::move(coalg)), lambda_(std::move(antipode)) {
  if (!(alg_.space == coalg_.space) || !(lambda_.dom() == alg_.space) || !(lambda_.cod() == alg_.space))
    throw Error(ErrorCode::ShapeMismatch, "weak Hopf algebra data on different spaces");
  const LinMap h = id(), cc = c(), em = eps_mu(), de = delta_eta();
  pi_L_ = tensor(em, h) * tensor(h, cc) * tensor(de, h);
  pi_R_ = tensor(h, em) * tensor(cc, h) * tensor(h, de);
  pibar_L_ = tensor(h, em) * tensor(de, h);
  pibar_R_ = tensor(em, h) * tensor(h, de);
  if (lambda_.rank() == lambda_.cols()) lambda_inv_ = inverse(lambda_);
}

Report verify_weak_hopf(const WeakHopfAlgebra& H) {
  Report r("weak Hopf algebra " + H.space().name());
  r.merge(verify_algebra(H.algebra()));
  r.merge(verify_coalgebra(H.coalgebra()));
  const LinMap h = H.id(), c = H.c(), mu = H.mu(), de = H.delta(), eps = H.eps(), eta = H.eta(),
               lam = H.lambda();
  const Coalgebra hh = tensor_coalgebra(H.coalgebra(), H.coalgebra());
  auto conv = [&](const LinMap& a, const LinMap& b) { return convolution(a, b, H.coalgebra(), H.algebra()); };

  r.expect_equal("(a1)", de * mu, tensor(mu, mu) * hh.comult);
  const LinMap a2 = eps * mu * tensor(mu, h);
  r.expect_equal("(a2) first form", a2, tensor(eps, eps) * tensor(mu, mu) * tensor(h, de, h));
  r.expect_equal("(a2) second form", a2, tensor(eps, eps) * tensor(mu, mu) * tensor(h, c * de, h));
  const LinMap a3 = tensor(de, h) * de * eta;
  r.expect_equal("(a3) first form", a3, tensor(h, mu, h) * tensor(de, de) * tensor(eta, eta));
  r.expect_equal("(a3) second form", a3, tensor(h, mu * c, h) * tensor(de, de) * tensor(eta, eta));
  r.expect_equal("(a4-1)", conv(h, lam), H.pi_L());
  r.expect_equal("(a4-2)", conv(lam, h), H.pi_R());
  r.expect_equal("(a4-3)", conv(conv(lam, h), lam), lam);

  r.expect_equal("antipode antimultiplicative", lam * mu, mu * tensor(lam, lam) * c);
  r.expect_equal("antipode anticomultiplicative", de * lam, c * tensor(lam, lam) * de);
  r.expect_equal("antipode unit", lam * eta, eta);
  r.expect_equal("antipode counit", eps * lam, eps);

  r.expect_equal("PiL idempotent", H.pi_L() * H.pi_L(), H.pi_L());
  r.expect_equal("PiR idempotent", H.pi_R() * H.pi_R(), H.pi_R());
  r.expect_equal("PiLbar idempotent", H.pibar_L() * H.pibar_L(), H.pibar_L());
  r.expect_equal("PiRbar idempotent", H.pibar_R() * H.pibar_R(), H.pibar_R());
  r.expect_equal("PiL=id*lambda", conv(h, lam), H.pi_L());
  r.expect_equal("PiR=lambda*id", conv(lam, h), H.pi_R());
  r.expect_equal("PiL*PiL=PiL", conv(H.pi_L(), H.pi_L()), H.pi_L());
  r.expect_equal("PiR*PiR=PiR", conv(H.pi_R(), H.pi_R()), H.pi_R());
  return r;
}

Report verify_projection_identities(const WeakHopfAlgebra& H) {
  Report r("projection identities " + H.space().name());
  const LinMap h = H.id(), c = H.c(), mu = H.mu(), de = H.delta(), lam = H.lambda(), em = H.eps_mu(),
               dn = H.delta_eta();
  const LinMap &L = H.pi_L(), &R = H.pi_R(), &Lb = H.pibar_L(), &Rb = H.pibar_R();

  r.expect_equal("PiL.PiLbar=PiL", L * Lb, L);
  r.expect_equal("PiL.PiRbar=PiRbar", L * Rb, Rb);
  r.expect_equal("PiR.PiLbar=PiLbar", R * Lb, Lb);
  r.expect_equal("PiR.PiRbar=PiR", R * Rb, R);
  r.expect_equal("PiLbar.PiL=PiLbar", Lb * L, Lb);
  r.expect_equal("PiLbar.PiR=PiR", Lb * R, R);
  r.expect_equal("PiRbar.PiL=PiL", Rb * L, L);
  r.expect_equal("PiRbar.PiR=PiRbar", Rb * R, Rb);

  r.expect("PiL=PiRbar.lambda=lambda.PiLbar", Rb * lam == L && lam * Lb == L,
           Rb * lam == L ? "lambda.PiLbar differs" : "PiRbar.lambda differs");
  r.expect("PiR=PiLbar.lambda=lambda.PiRbar", Lb * lam == R && lam * Rb == R,
           Lb * lam == R ? "lambda.PiRbar differs" : "PiLbar.lambda differs");
  r.expect("PiL.lambda=PiL.PiR=lambda.PiR", L * lam == L * R && lam * R == L * R,
           L * lam == L * R ? "lambda.PiR differs" : "PiL.lambda differs");
  r.expect("PiR.lambda=PiR.PiL=lambda.PiL", R * lam == R * L && lam * L == R * L,
           R * lam == R * L ? "lambda.PiL differs" : "PiR.lambda differs");

  r.expect_equal("PiL-mu", mu * tensor(h, L), tensor(em, h) * tensor(h, c) * tensor(de, h));
  r.expect_equal("PiR-mu", mu * tensor(R, h), tensor(h, em) * tensor(c, h) * tensor(h, de));
  r.expect_equal("PiLbar-mu", mu * tensor(h, Lb), tensor(h, em) * tensor(de, h));
  r.expect_equal("PiRbar-mu", mu * tensor(Rb, h), tensor(em, h) * tensor(h, de));
  r.expect_equal("delta-PiL", tensor(h, L) * de, tensor(mu, h) * tensor(h, c) * tensor(dn, h));
  r.expect_equal("delta-PiR", tensor(R, h) * de, tensor(h, mu) * tensor(c, h) * tensor(h, dn));
  r.expect_equal("delta-PiLbar", tensor(Lb, h) * de, tensor(h, mu) * tensor(dn, h));
  r.expect_equal("delta-PiRbar", tensor(h, Rb) * de, tensor(mu, h) * tensor(h, dn));

  r.expect_equal("PiL-mu-PiL", L * mu * tensor(h, L), L * mu);
  r.expect_equal("PiR-mu-PiR", R * mu * tensor(R, h), R * mu);
  r.expect_equal("PiL-delta-PiL", tensor(h, L) * de * L, de * L);
  r.expect_equal("PiR-delta-PiR", tensor(R, h) * de * R, de * R);
  return r;
}

// ---------------------------------------------------------------- groupoids

namespace {

[[noreturn]] void bad(const std::string& name, const std::string& what) {
  throw Error(ErrorCode::InvalidGroupoid, name + ": " + what);
}

}  // namespace

std::size_t Groupoid::index(const std::string& label) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i)
    if (morphisms[i].id == label) return i;
  bad(name, "unknown morphism '" + label + "'");
}

std::size_t Groupoid::identity_at(const std::string& object) const {
  for (std::size_t e = 0; e < morphisms.size(); ++e) {
    if (morphisms[e].src != object || morphisms[e].tgt != object) continue;
    if (comp.at({e, e}) == e) return e;
  }
  bad(name, "no identity at '" + object + "'");
}

Groupoid Groupoid::make(std::string name, std::vector<std::string> objects, std::vector<Morphism> morphisms,
                        const std::vector<std::array<std::string, 3>>& comp_triples,
                        const std::vector<std::pair<std::string, std::string>>& inv_pairs) {
  Groupoid g;
  g.name = std::move(name);
  std::sort(objects.begin(), objects.end());
  if (std::adjacent_find(objects.begin(), objects.end()) != objects.end()) bad(g.name, "duplicate object");
  if (objects.empty()) bad(g.name, "no objects");
  std::set<std::string> obj(objects.begin(), objects.end());
  std::set<std::string> ids;
  for (const auto& m : morphisms) {
    if (!obj.count(m.src) || !obj.count(m.tgt)) bad(g.name, "morphism '" + m.id + "' has an undeclared end");
    if (!ids.insert(m.id).second) bad(g.name, "duplicate morphism '" + m.id + "'");
  }
  std::sort(morphisms.begin(), morphisms.end(), [](const Morphism& a, const Morphism& b) {
    return std::tie(a.src, a.tgt, a.id) < std::tie(b.src, b.tgt, b.id);
  });
  g.objects = std::move(objects);
  g.morphisms = std::move(morphisms);
  const std::size_t n = g.morphisms.size();

  for (const auto& t : comp_triples) {
    std::size_t a = g.index(t[0]), b = g.index(t[1]), ab = g.index(t[2]);
    if (!g.composable(a, b)) bad(g.name, t[0] + "∘" + t[1] + " is not composable");
    if (g.morphisms[ab].src != g.morphisms[b].src || g.morphisms[ab].tgt != g.morphisms[a].tgt)
      bad(g.name, t[0] + "∘" + t[1] + " has wrong ends");
    if (!g.comp.emplace(std::make_pair(a, b), ab).second) bad(g.name, "composite " + t[0] + "∘" + t[1] + " given twice");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.composable(a, b) && !g.comp.count({a, b}))
        bad(g.name, "missing composite " + g.morphisms[a].id + "∘" + g.morphisms[b].id);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.composable(a, b) && g.composable(b, c) &&
            g.comp.at({g.comp.at({a, b}), c}) != g.comp.at({a, g.comp.at({b, c})}))
          bad(g.name, "composition is not associative");
  for (const auto& x : g.objects) {
    std::size_t e = g.identity_at(x);
    for (std::size_t f = 0; f < n; ++f) {
      if (g.morphisms[f].tgt == x && g.comp.at({e, f}) != f) bad(g.name, "identity at " + x + " is not neutral");
      if (g.morphisms[f].src == x && g.comp.at({f, e}) != f) bad(g.name, "identity at " + x + " is not neutral");
    }
  }
  g.inv.assign(n, n);
  for (const auto& [a, b] : inv_pairs) g.inv[g.index(a)] = g.index(b);
  for (std::size_t f = 0; f < n; ++f) {
    const std::size_t es = g.identity_at(g.morphisms[f].src), et = g.identity_at(g.morphisms[f].tgt);
    if (g.inv[f] == n)
      for (std::size_t k = 0; k < n; ++k)
        if (g.composable(k, f) && g.comp.at({k, f}) == es && g.composable(f, k) && g.comp.at({f, k}) == et)
          g.inv[f] = k;
    std::size_t k = g.inv[f];
    if (k == n) bad(g.name, "'" + g.morphisms[f].id + "' has no inverse");
    if (!g.composable(k, f) || g.comp.at({k, f}) != es || !g.composable(f, k) || g.comp.at({f, k}) != et)
      bad(g.name, "wrong inverse for '" + g.morphisms[f].id + "'");
  }
  return g;
}

Groupoid Groupoid::from_group(std::string name, std::vector<std::string> elements,
                              const std::function<std::string(const std::string&, const std::string&)>& mul) {
  std::vector<Morphism> ms;
  std::vector<std::array<std::string, 3>> comp;
  for (const auto& a : elements) {
    ms.push_back({a, "*", "*"});
    for (const auto& b : elements) comp.push_back({a, b, mul(a, b)});
  }
  return make(std::move(name), {"*"}, std::move(ms), comp);
}

Groupoid Groupoid::cyclic(unsigned n) {
  std::vector<std::string> el;
  auto label = [](unsigned k) { return k == 0 ? std::string("e") : k == 1 ? std::string("g") : "g" + std::to_string(k); };
  for (unsigned k = 0; k < n; ++k) el.push_back(label(k));
  auto power = [&](const std::string& s) -> unsigned {
    for (unsigned k = 0; k < n; ++k)
      if (label(k) == s) return k;
    return 0;
  };
  return from_group("Z" + std::to_string(n), el,
                    [&](const std::string& a, const std::string& b) { return label((power(a) + power(b)) % n); });
}

Groupoid Groupoid::klein() {
  std::vector<std::string> el = {"e", "a", "b", "c"};
  auto code = [&](const std::string& s) -> unsigned { return static_cast<unsigned>(std::find(el.begin(), el.end(), s) - el.begin()); };
  return from_group("Z2xZ2", el, [&](const std::string& a, const std::string& b) { return el[code(a) ^ code(b)]; });
}

Groupoid Groupoid::discrete(unsigned k) {
  std::vector<std::string> objs;
  std::vector<Morphism> ms;
  std::vector<std::array<std::string, 3>> comp;
  for (unsigned i = 0; i < k; ++i) {
    std::string x = "x" + std::to_string(i), e = "e" + std::to_string(i);
    objs.push_back(x);
    ms.push_back({e, x, x});
    comp.push_back({e, e, e});
  }
  return make("discrete" + std::to_string(k), objs, ms, comp);
}

Groupoid Groupoid::indiscrete(unsigned k) {
  std::vector<std::string> objs;
  std::vector<Morphism> ms;
  std::vector<std::array<std::string, 3>> comp;
  auto label = [](unsigned i, unsigned j) { return i == j ? "e" + std::to_string(i) : "t" + std::to_string(i) + std::to_string(j); };
  for (unsigned i = 0; i < k; ++i) objs.push_back("x" + std::to_string(i));
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) ms.push_back({label(i, j), objs[i], objs[j]});
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j)
      for (unsigned l = 0; l < k; ++l) comp.push_back({label(j, l), label(i, j), label(i, l)});
  return make("indiscrete" + std::to_string(k), objs, ms, comp);
}

Groupoid Groupoid::disjoint_union(const Groupoid& a, const Groupoid& b, std::string name) {
  std::vector<std::string> objs;
  std::vector<Morphism> ms;
  std::vector<std::array<std::string, 3>> comp;
  auto add = [&](const Groupoid& g, const std::string& tag) {
    for (const auto& o : g.objects) objs.push_back(tag + o);
    for (const auto& m : g.morphisms) ms.push_back({tag + m.id, tag + m.src, tag + m.tgt});
    for (const auto& [key, v] : g.comp)
      comp.push_back({tag + g.morphisms[key.first].id, tag + g.morphisms[key.second].id, tag + g.morphisms[v].id});
  };
  add(a, "x.");
  add(b, "y.");
  return make(std::move(name), objs, ms, comp);
}

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, FieldSpec f) {
  std::vector<std::string> labels;
  for (const auto& m : g.morphisms) labels.push_back(m.id);
  const Space H = Space::atom("H", labels), K = Space::unit();
  const std::size_t n = labels.size();

  LinMap mult(tensor(H, H), H, f), unit(K, H, f), comult(H, tensor(H, H), f), counit(H, K, f), anti(H, H, f);
  for (const auto& [key, v] : g.comp) mult.set(v, key.first * n + key.second, 1);
  for (const auto& x : g.objects) unit.set(g.identity_at(x), 0, 1);
  for (std::size_t i = 0; i < n; ++i) {
    comult.set(i * n + i, i, 1);
    counit.set(0, i, 1);
    anti.set(g.inv[i], i, 1);
  }
  return WeakHopfAlgebra(Algebra{H, f, unit, mult}, Coalgebra{H, f, counit, comult}, anti);
}

std::vector<Groupoid> small_groupoids() {
  std::vector<Groupoid> out;
  out.push_back(Groupoid::cyclic(1));
  out.back().name = "trivial";
  out.push_back(Groupoid::cyclic(2));
  out.push_back(Groupoid::cyclic(3));
  out.push_back(Groupoid::cyclic(4));
  out.push_back(Groupoid::klein());
  out.push_back(Groupoid::discrete(2));
  out.push_back(Groupoid::disjoint_union(Groupoid::cyclic(2), Groupoid::cyclic(1), "Z2+1"));
  out.push_back(Groupoid::disjoint_union(Groupoid::cyclic(3), Groupoid::cyclic(1), "Z3+1"));
  out.push_back(Groupoid::disjoint_union(Groupoid::cyclic(2), Groupoid::cyclic(2), "Z2+Z2"));
  out.push_back(Groupoid::indiscrete(2));
  return out;
}

}  // namespace whopf

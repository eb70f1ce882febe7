#include "whopf/cohom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "whopf/error.hpp"

namespace whopf {

namespace {

using Key = std::vector<std::uint32_t>;

Key key_of(const LinMap& m) {
  Key k;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    k.push_back(static_cast<std::uint32_t>(m.col(j).size()));
    for (const auto& [r, v] : m.col(j)) {
      k.push_back(r);
      k.push_back(v.residue());
    }
  }
  return k;
}

void require_enumerable(const AffineFamily& fam, const EnumOptions& opt, const std::string& what) {
  if (!fam.particular.field().is_finite()) throw Error(ErrorCode::NotEnumerable, what + " needs a finite field");
  const std::uint64_t n = fam.count();
  if (n > opt.max_enum)
    throw Error(ErrorCode::SearchSpaceTooLarge,
                what + ": " + std::to_string(n) + " candidates exceed the bound " + std::to_string(opt.max_enum));
}

// Members of fam accepted by keep, in index order.
template <class T, class Fn>
std::vector<T> filter_family(const AffineFamily& fam, const EnumOptions& opt, Fn keep) {
  const std::uint64_t n = fam.count();
  const unsigned threads = std::max(1u, opt.threads);
  std::vector<std::vector<std::pair<std::uint64_t, T>>> found(threads);
  auto work = [&](unsigned t) {
    for (std::uint64_t k = t; k < n; k += threads)
      if (auto v = keep(fam.member(k))) found[t].emplace_back(k, std::move(*v));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::pair<std::uint64_t, T>> all;
  for (auto& v : found)
    for (auto& e : v) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<T> out;
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

// σ(η⊗H) = σ(H⊗η) = u1 and σ∘Ω² = σ.
std::optional<AffineFamily> normalized_cochains(const WeakModuleAlgebra& m) {
  const WeakHopfAlgebra& H = m.H();
  const LinMap h = H.id();
  LinearSystem sys(tensor(H.space(), H.space()), m.A().space, m.A().field);
  sys.add([&](const LinMap& x) { return x * tensor(H.eta(), h); }, m.u1());
  sys.add([&](const LinMap& x) { return x * tensor(h, H.eta()); }, m.u1());
  if (H.cocommutative()) {
    const LinMap om = omega2(H);
    sys.add([&](const LinMap& x) { return x * om - x; }, LinMap(tensor(H.space(), H.space()), m.A().space, m.A().field));
  }
  return sys.solve();
}

// (g2) and (g1) evaluated on σ alone, used to discard candidates before the full check.
class QuickCheck {
 public:
  explicit QuickCheck(const WeakModuleAlgebra& m)
      : m_(m),
        h_(m.H().id()),
        a_(m.A().id()),
        hhh_(tensor_coalgebra(m.HH(), m.H().coalgebra()).comult),
        omL_h_(tensor(omega2(m.H()), h_)),
        h_omL_(tensor(h_, omega2(m.H()))),
        h_mu_(tensor(h_, m.H().mu())),
        mu_h_(tensor(m.H().mu(), h_)),
        dHH_a_(tensor(m.HH().comult, a_)),
        phiphi_a_(tensor(m.phi() * tensor(h_, m.phi()), a_)),
        hh_cAA_(tensor(h_, h_, symmetry(m.A().space, m.A().space, m.A().field))) {}

  bool operator()(const LinMap& s) const {
    const LinMap& mu = m_.A().mult;
    const LinMap l2 = through_tensor(mu, m_.phi() * tensor(h_, s) * omL_h_, s * h_mu_, hhh_);
    const LinMap r2 = through_tensor(mu, tensor(s, m_.H().eps()) * h_omL_, s * mu_h_, hhh_);
    if (l2 != r2) return false;
    const LinMap l1 = mu * tensor(a_, m_.phi()) * tensor(s, m_.H().mu(), a_) * dHH_a_;
    const LinMap r1 = mu * phiphi_a_ * hh_cAA_ * tensor(h_, h_, s, a_) * dHH_a_;
    return l1 == r1;
  }

 private:
  const WeakModuleAlgebra& m_;
  LinMap h_, a_, hhh_, omL_h_, h_omL_, h_mu_, mu_h_, dHH_a_, phiphi_a_, hh_cAA_;
};

std::optional<CrossedSystem> as_crossed(const WeakModuleAlgebra& m, const QuickCheck& quick, const LinMap& s) {
  if (!quick(s)) return std::nullopt;
  auto reg = solve_reg(m, s, 2);
  if (!reg) return std::nullopt;
  CrossedSystem cs{m, s, reg->inv};
  if (!verify_normal(cs) || !verify_twisted(cs) || !verify_cocycle(cs)) return std::nullopt;
  return cs;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<RegMap> enumerate_cocycles(const WeakModuleAlgebra& zm, const EnumOptions& opt) {
  auto fam = normalized_cochains(zm);
  if (!fam) return {};
  require_enumerable(*fam, opt, "cocycle enumeration");
  const QuickCheck quick(zm);
  return filter_family<RegMap>(*fam, opt, [&](const LinMap& s) -> std::optional<RegMap> {
    auto cs = as_crossed(zm, quick, s);
    if (!cs) return std::nullopt;
    return RegMap{2, cs->sigma, cs->sigmainv, Report()};
  });
}

std::vector<CrossedSystem> enumerate_crossed_systems(const WeakModuleAlgebra& m, const EnumOptions& opt) {
  auto fam = normalized_cochains(m);
  if (!fam) return {};
  require_enumerable(*fam, opt, "crossed system enumeration");
  const QuickCheck quick(m);
  return filter_family<CrossedSystem>(*fam, opt, [&](const LinMap& s) { return as_crossed(m, quick, s); });
}

std::vector<CocycleClass> h2_classes(const WeakModuleAlgebra& zm, const std::vector<RegMap>& cocycles,
                                     const EnumOptions& opt) {
  std::vector<CocycleClass> out;
  if (cocycles.empty()) return out;
  const WeakHopfAlgebra& H = zm.H();
  const Algebra& Z = zm.A();
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < cocycles.size(); ++i) index[key_of(cocycles[i].map)] = i;

  // Normalized witnesses h: H -> Z with the action fixed.
  LinearSystem sys(H.space(), Z.space, Z.field);
  sys.add([&](const LinMap& x) { return x * H.eta(); }, Z.unit);
  sys.add([&](const LinMap& x) { return x * H.pi_L(); }, zm.u1());
  auto fam = sys.solve();
  UnionFind uf(cocycles.size());
  if (fam) {
    require_enumerable(*fam, opt, "coboundary enumeration");
    const LinMap hid = H.id(), a = Z.id(), &mu = Z.mult, &d = H.delta();
    const LinMap cHA = symmetry(H.space(), Z.space, Z.field);
    const LinMap& phi = zm.phi();
    const LinMap spread = tensor(hid, hid, cHA) * tensor(hid, d, a) * tensor(d, a);
    auto images = filter_family<std::vector<std::pair<std::size_t, std::size_t>>>(
        *fam, opt, [&](const LinMap& h) -> std::optional<std::vector<std::pair<std::size_t, std::size_t>>> {
          auto reg = solve_reg(zm, h, 1);
          if (!reg) return std::nullopt;
          const LinMap& hinv = reg->inv;
          if (mu * tensor(mu, a) * tensor(h, phi, hinv) * spread != phi) return std::nullopt;
          const LinMap lead = zm.conv2(tensor(h, H.eps()), phi * tensor(hid, h));
          const LinMap tail = hinv * H.mu();
          std::vector<std::pair<std::size_t, std::size_t>> edges;
          for (std::size_t j = 0; j < cocycles.size(); ++j) {
            LinMap s = zm.conv2(zm.conv2(lead, cocycles[j].map), tail);
            auto it = index.find(key_of(s));
            if (it != index.end()) edges.emplace_back(it->second, j);
          }
          return edges;
        });
    for (const auto& edges : images)
      for (auto [i, j] : edges) uf.unite(i, j);
  }
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto [it, fresh] = ids.emplace(root, ids.size());
    out.push_back(CocycleClass{cocycles[i], it->second, fresh});
  }
  return out;
}

std::size_t class_count(const std::vector<CocycleClass>& classes) {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.representative ? 1 : 0;
  return n;
}

CrossedSystem twist(const CrossedSystem& base, const LinMap& iZ, const LinMap& tau) {
  return make_crossed_system(base.M, base.M.conv2(base.sigma, iZ * tau));
}

LinMap untwist(const CrossedSystem& base, const LinMap& iZ, const CrossedSystem& other) {
  const LinMap g = base.M.conv2(base.sigmainv, other.sigma);
  if (!factors_through(g, iZ)) throw Error(ErrorCode::FactorizationFailure, "sigmainv*gamma is not center-valued");
  return factor_through(g, iZ);
}

H2Bijection verify_h2_bijection(const CleftCertificate& cert, const EnumOptions& opt) {
  H2Bijection out;
  Report& r = out.report;
  ExtractedSystem ex = extract_crossed_system(cert);
  r.expect("base system", ex.report.ok());
  CenterModule cm = center_module_structure(cert, ex.cs.M);
  r.expect("center action", cm.report.ok());
  const LinMap& iZ = cm.Z.iZ;

  auto cocycles = enumerate_cocycles(cm.M, opt);
  auto classes = h2_classes(cm.M, cocycles, opt);
  auto systems = enumerate_crossed_systems(ex.cs.M, opt);
  out.cocycles = cocycles.size();
  out.cocycleClasses = class_count(classes);
  out.systems = systems.size();

  std::vector<std::size_t> sys_class(systems.size());
  std::vector<std::size_t> reps;
  SearchOptions so{opt.max_enum, opt.threads};
  for (std::size_t i = 0; i < systems.size(); ++i) {
    std::size_t c = reps.size();
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (search_equivalence(systems[i], systems[reps[k]], so).witness) {
        c = k;
        break;
      }
    if (c == reps.size()) reps.push_back(i);
    sys_class[i] = c;
  }
  out.systemClasses = reps.size();

  std::map<Key, std::size_t> sys_index;
  for (std::size_t i = 0; i < systems.size(); ++i) sys_index[key_of(systems[i].sigma)] = i;
  std::map<Key, std::size_t> co_index;
  for (std::size_t i = 0; i < cocycles.size(); ++i) co_index[key_of(cocycles[i].map)] = i;

  bool lands = true, recovers = true, back = true;
  std::map<std::size_t, std::size_t> induced;  // cocycle class -> system class
  bool well_defined = true;
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    CrossedSystem t = twist(ex.cs, iZ, cocycles[k].map);
    auto it = sys_index.find(key_of(t.sigma));
    if (it == sys_index.end()) {
      lands = false;
      continue;
    }
    recovers = recovers && untwist(ex.cs, iZ, systems[it->second]) == cocycles[k].map;
    auto [pos, fresh] = induced.emplace(classes[k].classId, sys_class[it->second]);
    if (!fresh && pos->second != sys_class[it->second]) well_defined = false;
  }
  for (const auto& s : systems) {
    LinMap tau = untwist(ex.cs, iZ, s);
    back = back && co_index.count(key_of(tau)) && twist(ex.cs, iZ, tau).sigma == s.sigma;
  }
  std::vector<bool> hit(reps.size(), false);
  bool injective = true;
  for (const auto& [cc, sc] : induced) {
    if (hit[sc]) injective = false;
    hit[sc] = true;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  r.expect("twist lands in the crossed systems", lands);
  r.expect("untwist recovers tau", recovers);
  r.expect("every crossed system is a twist", back);
  r.expect("twist well defined on classes", well_defined);
  r.expect("twist injective on classes", injective);
  r.expect("twist surjective on classes", surjective);
  r.expect("class counts agree", out.cocycleClasses == out.systemClasses,
           std::to_string(out.cocycleClasses) + " vs " + std::to_string(out.systemClasses));
  r.note("cocycles " + std::to_string(out.cocycles) + ", classes " + std::to_string(out.cocycleClasses));
  r.note("crossed systems " + std::to_string(out.systems) + ", classes " + std::to_string(out.systemClasses));
  return out;
}

}  // namespace whopf

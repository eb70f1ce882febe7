#include "whopf/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "whopf/cohom.hpp"
#include "whopf/error.hpp"

namespace whopf {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing \"" + key + "\"");
  return j.at(key);
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Scalar scalar(const Json& j, FieldSpec f, const std::string& where) {
  try {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer or a \"a/b\" string");
}

std::size_t label(const Json& j, const Space& s, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.get<long>() < 0) fail(where, "negative index");
    const auto i = j.get<std::size_t>();
    if (i >= s.dim()) fail(where, "index " + std::to_string(i) + " out of range for " + s.name());
    return i;
  }
  if (j.is_string()) {
    if (auto i = s.index_of(j.get<std::string>())) return *i;
    fail(where, "\"" + j.get<std::string>() + "\" is not a basis label of " + s.name());
  }
  fail(where, "expected a basis label or index");
}

// Reads entries [in_1, ..., in_k, out_1, ..., out_m, scalar] into a map from the
// tensor product of `ins` to the tensor product of `outs`.
LinMap entries(const Json& j, const std::vector<Space>& ins, const std::vector<Space>& outs, FieldSpec f,
               const std::string& where) {
  Space dom, cod;
  for (const auto& s : ins) dom = tensor(dom, s);
  for (const auto& s : outs) cod = tensor(cod, s);
  LinMap m(dom, cod, f);
  const std::size_t arity = ins.size() + outs.size() + 1;
  std::size_t k = 0;
  for (const auto& e : array(j, where)) {
    const std::string at = where + "[" + std::to_string(k++) + "]";
    if (!e.is_array() || e.size() != arity) fail(at, "expected " + std::to_string(arity) + " components");
    std::size_t col = 0, row = 0, pos = 0;
    for (const auto& s : ins) col = col * s.dim() + label(e[pos++], s, at);
    for (const auto& s : outs) row = row * s.dim() + label(e[pos++], s, at);
    m.put(row, col, m.at(row, col) + scalar(e[pos], f, at));
  }
  return m;
}

std::vector<std::string> labels(const Json& j, const std::string& where) {
  std::vector<std::string> out;
  for (const auto& x : array(j, where)) out.push_back(str(x, where));
  if (out.empty()) fail(where, "empty basis");
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(where, "repeated basis label");
  return out;
}

Groupoid parse_groupoid(const std::string& name, const Json& j, const std::string& where) {
  try {
    if (j.contains("builtin")) {
      const std::string b = str(j.at("builtin"), where + ".builtin");
      const unsigned n = j.contains("n") ? j.at("n").get<unsigned>() : 0;
      Groupoid g;
      if (b == "cyclic") g = Groupoid::cyclic(n);
      else if (b == "klein") g = Groupoid::klein();
      else if (b == "discrete") g = Groupoid::discrete(n);
      else if (b == "indiscrete") g = Groupoid::indiscrete(n);
      else fail(where + ".builtin", "unknown builtin \"" + b + "\"");
      g.name = name;
      return g;
    }
    std::vector<std::string> objects;
    for (const auto& o : array(member(j, "objects", where), where + ".objects"))
      objects.push_back(str(o, where + ".objects"));
    std::vector<Groupoid::Morphism> morphisms;
    for (const auto& m : array(member(j, "morphisms", where), where + ".morphisms"))
      morphisms.push_back({str(member(m, "id", where + ".morphisms"), where + ".morphisms"),
                           str(member(m, "src", where + ".morphisms"), where + ".morphisms"),
                           str(member(m, "tgt", where + ".morphisms"), where + ".morphisms")});
    std::vector<std::array<std::string, 3>> comp;
    for (const auto& c : array(member(j, "comp", where), where + ".comp")) {
      if (!c.is_array() || c.size() != 3) fail(where + ".comp", "expected [g, f, g.f]");
      comp.push_back({str(c[0], where + ".comp"), str(c[1], where + ".comp"), str(c[2], where + ".comp")});
    }
    std::vector<std::pair<std::string, std::string>> inv;
    if (j.contains("inv"))
      for (const auto& c : array(j.at("inv"), where + ".inv")) {
        if (!c.is_array() || c.size() != 2) fail(where + ".inv", "expected [g, ginv]");
        inv.emplace_back(str(c[0], where + ".inv"), str(c[1], where + ".inv"));
      }
    return Groupoid::make(name, objects, morphisms, comp, inv);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(where, e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(where, e.what());
  }
}

std::string kind_of(const Json& s) {
  if (s.contains("kind")) return s.at("kind").is_string() ? s.at("kind").get<std::string>() : "";
  if (s.contains("comult")) return "hopf";
  if (s.contains("cocycle")) return "system";
  if (s.contains("action")) return "module";
  if (s.contains("coaction")) return "comodule";
  return "algebra";
}

Json scalar_json(const Scalar& s) {
  if (s.field().is_finite()) return s.residue();
  return s.to_string();
}

// [input label, output label, scalar] for every nonzero entry.
Json map_json(const LinMap& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [r, v] : m.col(j)) out.push_back(Json::array({m.dom().basis_label(j), m.cod().basis_label(r), scalar_json(v)}));
  return out;
}

// Builds and caches the named structures of a document.
class Env {
 public:
  explicit Env(const InputDocument& d) : doc_(d) {}

  FieldSpec field() const { return doc_.field; }

  const WeakHopfAlgebra& hopf(const std::string& name, const std::string& where) {
    if (auto it = hopfs_.find(name); it != hopfs_.end()) return it->second;
    if (auto g = doc_.groupoids.find(name); g != doc_.groupoids.end())
      return hopfs_.emplace(name, groupoid_algebra(g->second, field())).first->second;
    const Json& s = structure(name, "hopf", where);
    const std::string at = "structures." + name;
    const Space H = Space::atom(name, labels(member(s, "basis", at), at + ".basis"));
    const FieldSpec f = field();
    Algebra alg{H, f, entries(member(s, "unit", at), {}, {H}, f, at + ".unit"),
                entries(member(s, "mult", at), {H, H}, {H}, f, at + ".mult")};
    Coalgebra co{H, f, entries(member(s, "counit", at), {H}, {}, f, at + ".counit"),
                 entries(member(s, "comult", at), {H}, {H, H}, f, at + ".comult")};
    LinMap anti = entries(member(s, "antipode", at), {H}, {H}, f, at + ".antipode");
    return hopfs_.emplace(name, WeakHopfAlgebra(alg, co, anti)).first->second;
  }

  Algebra algebra(const std::string& name, const std::string& where) {
    if (name == "K") return unit_algebra(field());
    if (name.size() > 1 && name[0] == 'M' && std::all_of(name.begin() + 1, name.end(), ::isdigit) &&
        !doc_.structures.count(name))
      return matrix_algebra(static_cast<unsigned>(std::stoul(name.substr(1))), field(), name);
    if (is_hopf(name)) return hopf(name, where).algebra();
    const Json& s = structure(name, "algebra", where);
    const std::string at = "structures." + name;
    const Space A = Space::atom(name, labels(member(s, "basis", at), at + ".basis"));
    return Algebra{A, field(), entries(member(s, "unit", at), {}, {A}, field(), at + ".unit"),
                   entries(member(s, "mult", at), {A, A}, {A}, field(), at + ".mult")};
  }

  const WeakModuleAlgebra& module(const std::string& name, const std::string& where) {
    if (auto it = modules_.find(name); it != modules_.end()) return it->second;
    const Json& s = doc_.structures.count(name) ? doc_.structures.at(name) : structure(name, "module", where);
    const std::string k = kind_of(s);
    if (k != "module" && k != "system") fail(where, "\"" + name + "\" is not a module algebra");
    if (k == "system" && s.contains("module")) {
      const WeakModuleAlgebra& m = module(str(s.at("module"), "structures." + name + ".module"), where);
      return modules_.emplace(name, m).first->second;
    }
    const std::string at = "structures." + name;
    const Algebra A = algebra(str(member(s, "algebra", at), at + ".algebra"), at + ".algebra");
    const WeakHopfAlgebra& H = hopf(str(member(s, "hopf", at), at + ".hopf"), at + ".hopf");
    const Json& act = member(s, "action", at);
    if (act.is_string()) {
      if (act.get<std::string>() != "trivial") fail(at + ".action", "expected entries or \"trivial\"");
      return modules_.emplace(name, WeakModuleAlgebra::trivial(A, H)).first->second;
    }
    LinMap phi = entries(act, {H.space(), A.space}, {A.space}, field(), at + ".action");
    return modules_.emplace(name, WeakModuleAlgebra(A, H, phi)).first->second;
  }

  LinMap cocycle(const std::string& name, const std::string& where) {
    const Json& s = structure(name, "system", where);
    const std::string at = "structures." + name;
    const WeakModuleAlgebra& m = module(name, where);
    const Json& c = member(s, "cocycle", at);
    if (c.is_string()) {
      if (c.get<std::string>() != "u2") fail(at + ".cocycle", "expected entries or \"u2\"");
      return m.u2();
    }
    return entries(c, {m.H().space(), m.H().space()}, {m.A().space}, field(), at + ".cocycle");
  }

  CrossedSystem system(const std::string& name, const std::string& where) {
    return make_crossed_system(module(name, where), cocycle(name, where));
  }

  ComoduleAlgebra comodule(const std::string& name, const std::string& where) {
    const Json& s = structure(name, "comodule", where);
    const std::string at = "structures." + name;
    const WeakHopfAlgebra& H = hopf(str(member(s, "hopf", at), at + ".hopf"), at + ".hopf");
    const Json& co = member(s, "coaction", at);
    if (co.is_string()) {
      if (co.get<std::string>() != "regular") fail(at + ".coaction", "expected entries or \"regular\"");
      return ComoduleAlgebra::regular(H);
    }
    const Algebra A = algebra(str(member(s, "algebra", at), at + ".algebra"), at + ".algebra");
    return ComoduleAlgebra(A, H, entries(co, {A.space}, {A.space, H.space()}, field(), at + ".coaction"));
  }

  bool is_hopf(const std::string& name) const {
    if (doc_.groupoids.count(name)) return true;
    auto it = doc_.structures.find(name);
    return it != doc_.structures.end() && kind_of(it->second) == "hopf";
  }

  // First name of the given kind, in document order of groupoids then structures.
  std::string first(const std::string& kind, const std::string& where) const {
    if (kind == "hopf" && !doc_.groupoids.empty()) return doc_.groupoids.begin()->first;
    if (kind == "groupoid") {
      if (doc_.groupoids.empty()) fail(where, "no groupoid declared");
      return doc_.groupoids.begin()->first;
    }
    for (const auto& [n, s] : doc_.structures)
      if (kind_of(s) == kind) return n;
    fail(where, "no " + kind + " declared");
  }

  std::string arg(const Json& args, const std::string& key, const std::string& kind, const std::string& where) {
    if (args.contains(key)) return str(args.at(key), where + "." + key);
    return first(kind, where);
  }

  // Comodule algebra and integral named by task arguments; H over itself with id by default.
  CleftCertificate cleft(const Json& args, const std::string& where) {
    ComoduleAlgebra ca = args.contains("comodule")
                             ? comodule(str(args.at("comodule"), where + ".comodule"), where + ".comodule")
                             : ComoduleAlgebra::regular(hopf(arg(args, "hopf", "hopf", where), where + ".hopf"));
    LinMap f;
    const Json integral = args.contains("integral") ? args.at("integral") : Json("id");
    if (integral.is_string()) {
      if (integral.get<std::string>() != "id") fail(where + ".integral", "expected entries or \"id\"");
      if (!(ca.A.space == ca.H.space())) fail(where + ".integral", "\"id\" needs H over itself");
      f = ca.H.id();
    } else {
      f = entries(integral, {ca.H.space()}, {ca.A.space}, field(), where + ".integral");
    }
    return is_cleft(ca, f);
  }

  // Resolves every structure once.
  void validate() {
    for (const auto& [name, s] : doc_.structures) {
      const std::string k = kind_of(s), where = "structures." + name;
      if (k == "hopf") hopf(name, where);
      else if (k == "algebra") algebra(name, where);
      else if (k == "module") module(name, where);
      else if (k == "system") cocycle(name, where);
      else if (k == "comodule") comodule(name, where);
      else fail(where + ".kind", "unknown kind \"" + k + "\"");
    }
  }

 private:
  const Json& structure(const std::string& name, const std::string& kind, const std::string& where) const {
    auto it = doc_.structures.find(name);
    if (it == doc_.structures.end()) fail(where, "unknown " + kind + " \"" + name + "\"");
    const std::string k = kind_of(it->second);
    if (k != kind) fail(where, "\"" + name + "\" is a " + k + ", not a " + kind);
    return it->second;
  }

  const InputDocument& doc_;
  std::map<std::string, WeakHopfAlgebra> hopfs_;
  std::map<std::string, WeakModuleAlgebra> modules_;
};

struct Outcome {
  std::vector<Report> reports;
  Json results = Json::object();
  std::vector<std::string> lines;
  bool ok = true;  // besides the reports

  void add(Report r) { reports.push_back(std::move(r)); }
  bool pass() const {
    return ok && std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
  }
};

Outcome run_verify(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  const std::string name = env.arg(args, "hopf", "hopf", where);
  const WeakHopfAlgebra& H = env.hopf(name, where + ".hopf");
  o.add(verify_weak_hopf(H));
  o.add(verify_projection_identities(H));
  o.results["hopf"] = name;
  o.results["dim"] = H.space().dim();
  o.results["cocommutative"] = H.cocommutative();
  if (args.contains("module")) o.add(verify_weak_module_algebra(env.module(str(args.at("module"), where), where)));
  if (args.contains("comodule"))
    o.add(verify_comodule_algebra(env.comodule(str(args.at("comodule"), where), where)));
  if (args.contains("system")) o.add(verify_crossed_system(env.system(str(args.at("system"), where), where)));
  return o;
}

Outcome run_groupoid(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  const std::string name = env.arg(args, "groupoid", "groupoid", where);
  const WeakHopfAlgebra& H = env.hopf(name, where + ".groupoid");
  o.add(verify_weak_hopf(H));
  o.add(verify_projection_identities(H));
  o.add(verify_comodule_algebra(ComoduleAlgebra::regular(H)));
  const Coinvariants co = coinvariants(ComoduleAlgebra::regular(H));
  Report r("coinvariants of H over itself");
  r.expect("H_L = image of PiL", same_image(co.iA, H.pi_L()));
  o.add(r);
  o.results["groupoid"] = name;
  o.results["dim"] = H.space().dim();
  o.results["cocommutative"] = H.cocommutative();
  o.results["dim_H_L"] = co.iA.dom().dim();
  o.lines.push_back("dim H = " + std::to_string(H.space().dim()) + ", dim H_L = " + std::to_string(co.iA.dom().dim()));
  return o;
}

Outcome run_comodule(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  ComoduleAlgebra ca = args.contains("comodule")
                           ? env.comodule(str(args.at("comodule"), where + ".comodule"), where + ".comodule")
                           : ComoduleAlgebra::regular(env.hopf(env.arg(args, "hopf", "hopf", where), where + ".hopf"));
  o.add(verify_comodule_algebra(ca));
  const Coinvariants co = coinvariants(ca);
  o.results["dim_A"] = ca.A.space.dim();
  o.results["dim_A_H"] = co.iA.dom().dim();
  o.results["coinvariants"] = map_json(co.iA);
  o.lines.push_back("dim A = " + std::to_string(ca.A.space.dim()) + ", dim A_H = " + std::to_string(co.iA.dom().dim()));
  return o;
}

Outcome run_cleft(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  CleftCertificate cert = env.cleft(args, where);
  o.add(cert.report);
  o.ok = cert.cleft;
  const bool total = is_total(cert.ca, cert.f);
  o.results["cleft"] = cert.cleft;
  o.results["total"] = total;
  if (cert.cleft) {
    o.results["dim_A_H"] = cert.co.iA.dom().dim();
    o.results["finv"] = map_json(cert.finv);
    if (!total && cert.ca.H.cocommutative()) {
      Report tr("totalized integral");
      Integral h = totalize(cert.ca, Integral{cert.f, cert.finv, false}, &tr);
      o.add(tr);
      o.results["totalized"] = map_json(h.f);
    }
  }
  o.lines.push_back(std::string("cleft: ") + (cert.cleft ? "yes" : "no") + ", total: " + (total ? "yes" : "no"));
  return o;
}

Outcome run_crossed(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  const std::string name = env.arg(args, "system", "system", where);
  const CrossedSystem cs = env.system(name, where + ".system");
  o.results["system"] = name;
  o.add(verify_crossed_system(cs));
  if (!o.reports.back().ok()) return o;
  const CrossedProductData cpd = build_crossed_product(cs);
  o.add(cpd.report);
  const CrossedComodule cc = comodule_structure(cpd);
  o.add(cc.report);
  Report canon("canonical integral");
  const Integral in = canonical_integral(cpd, &canon);
  o.add(canon);
  o.add(is_cleft(cc.ca, in.f).report);
  const SpecialCases sc = special_case_checks(cs);
  o.add(sc.report);
  o.results["dim_AxH"] = cpd.small.space.dim();
  o.results["smash"] = sc.smash;
  o.results["twisted"] = sc.twisted;
  o.results["center_valued"] = sc.centerValued;
  o.lines.push_back("dim A x H = " + std::to_string(cpd.small.space.dim()));
  return o;
}

Outcome run_roundtrip(Env& env, const Json& args, const std::string& where) {
  Outcome o;
  if (args.contains("system") || (!args.contains("hopf") && !args.contains("comodule"))) {
    const CrossedSystem cs = env.system(env.arg(args, "system", "system", where), where + ".system");
    const CrossedRoundTrip rt = roundtrip_crossed(cs);
    o.add(rt.report);
    o.ok = rt.equal;
    const CrossedProductData cpd = build_crossed_product(cs);
    const CrossedComodule cc = comodule_structure(cpd);
    const Integral in = canonical_integral(cpd);
    const ExtractedSystem ex = extract_crossed_system(is_cleft(cc.ca, in.f, Coinvariants{cpd.cs.A(), cc.iA}));
    const Isomorphism iso = roundtrip_cleft(ex);
    o.add(iso.report);
    o.results["crossed_cleft_crossed"] = rt.equal ? "exact equality" : "differs";
    o.results["cleft_crossed_cleft"] = iso.ok() ? "verified isomorphism" : "failed";
    o.lines.push_back(std::string("crossed→cleft→crossed: ") + (rt.equal ? "exact equality" : "differs"));
    o.lines.push_back(std::string("cleft→crossed→cleft: ") + (iso.ok() ? "verified isomorphism" : "failed"));
    return o;
  }
  const ExtractedSystem ex = extract_crossed_system(env.cleft(args, where));
  o.add(ex.report);
  const Isomorphism iso = roundtrip_cleft(ex);
  o.add(iso.report);
  const CrossedRoundTrip rt = roundtrip_crossed(ex.cs);
  o.add(rt.report);
  o.ok = rt.equal;
  o.results["cleft_crossed_cleft"] = iso.ok() ? "verified isomorphism" : "failed";
  o.results["crossed_cleft_crossed"] = rt.equal ? "exact equality" : "differs";
  o.lines.push_back(std::string("cleft→crossed→cleft: ") + (iso.ok() ? "verified isomorphism" : "failed"));
  o.lines.push_back(std::string("crossed→cleft→crossed: ") + (rt.equal ? "exact equality" : "differs"));
  return o;
}

Outcome run_equiv(Env& env, const Json& args, const std::string& where, const RunOptions& opt) {
  Outcome o;
  const std::string l = str(member(args, "lhs", where), where + ".lhs");
  const std::string r = str(member(args, "rhs", where), where + ".rhs");
  const CrossedSystem lhs = env.system(l, where + ".lhs"), rhs = env.system(r, where + ".rhs");
  const SearchResult res = search_equivalence(lhs, rhs, SearchOptions{opt.max_enum, opt.threads});
  const bool eq = res.witness.has_value();
  o.results["equivalent"] = eq;
  o.results["candidates"] = res.candidates;
  if (eq) {
    o.add(res.witness->report);
    o.add(equivalence_to_iso(*res.witness).report);
    o.results["witness"] = map_json(res.witness->h.map);
  }
  if (args.contains("expect")) o.ok = args.at("expect").get<bool>() == eq;
  o.lines.push_back(std::string("equivalent: ") + (eq ? "yes" : "no") + " (" + std::to_string(res.candidates) +
                    " normalized candidates)");
  return o;
}

Json class_table(const std::vector<CocycleClass>& classes) {
  Json t = Json::array();
  for (std::size_t i = 0; i < classes.size(); ++i)
    t.push_back(Json{{"cocycle", i},
                     {"class", classes[i].classId},
                     {"representative", classes[i].representative},
                     {"tau", map_json(classes[i].tau.map)}});
  return t;
}

Outcome run_h2(Env& env, const Json& args, const std::string& where, const RunOptions& opt) {
  Outcome o;
  const EnumOptions eo{opt.max_enum, opt.threads};
  std::size_t count = 0;
  if (args.contains("module")) {
    const WeakModuleAlgebra& m = env.module(str(args.at("module"), where + ".module"), where + ".module");
    Report r("cocycle classes");
    r.expect("action strict", m.strict());
    r.expect("algebra commutative", m.A().mult * symmetry(m.A().space, m.A().space, m.field()) == m.A().mult);
    const auto cocycles = enumerate_cocycles(m, eo);
    const auto classes = h2_classes(m, cocycles, eo);
    count = class_count(classes);
    o.add(r);
    o.results["cocycles"] = cocycles.size();
    o.results["classes"] = count;
    o.results["table"] = class_table(classes);
    o.lines.push_back("cocycles: " + std::to_string(cocycles.size()));
  } else {
    const CleftCertificate cert = env.cleft(args, where);
    const H2Bijection b = verify_h2_bijection(cert, eo);
    o.add(b.report);
    count = b.cocycleClasses;
    o.results["cocycles"] = b.cocycles;
    o.results["classes"] = b.cocycleClasses;
    o.results["crossed_systems"] = b.systems;
    o.results["crossed_system_classes"] = b.systemClasses;
    o.lines.push_back("cocycles: " + std::to_string(b.cocycles) + ", crossed systems: " + std::to_string(b.systems) +
                      ", crossed system classes: " + std::to_string(b.systemClasses));
  }
  o.lines.push_back("classes: " + std::to_string(count));
  if (args.contains("expect_classes")) o.ok = args.at("expect_classes").get<std::size_t>() == count;
  return o;
}

Outcome run_task(Env& env, const Task& t, const std::string& where, const RunOptions& opt) {
  if (t.op == "verify") return run_verify(env, t.args, where);
  if (t.op == "groupoid") return run_groupoid(env, t.args, where);
  if (t.op == "comodule") return run_comodule(env, t.args, where);
  if (t.op == "cleft") return run_cleft(env, t.args, where);
  if (t.op == "crossed") return run_crossed(env, t.args, where);
  if (t.op == "roundtrip") return run_roundtrip(env, t.args, where);
  if (t.op == "equiv") return run_equiv(env, t.args, where, opt);
  if (t.op == "h2") return run_h2(env, t.args, where, opt);
  fail(where + ".op", "unknown op \"" + t.op + "\"");
}

}  // namespace

const std::vector<std::string>& task_ops() {
  static const std::vector<std::string> ops{"verify", "groupoid", "comodule", "cleft",
                                            "crossed", "roundtrip", "equiv", "h2"};
  return ops;
}

FieldSpec parse_field(const Json& j, const std::string& where) {
  const std::string kind = str(member(j, "field", where), where + ".field");
  if (kind == "Q") return FieldSpec::rationals();
  if (kind != "GF") fail(where + ".field", "expected \"Q\" or \"GF\"");
  const Json& p = member(j, "p", where);
  if (!p.is_number_integer() || p.get<long>() < 0) fail(where + ".p", "expected a prime");
  try {
    return FieldSpec::prime(p.get<std::uint32_t>());
  } catch (const Error& e) {
    fail(where + ".p", e.what());
  }
}

Json field_json(FieldSpec f) {
  if (f.is_rational()) return Json{{"field", "Q"}};
  return Json{{"field", "GF"}, {"p", f.p}};
}

InputDocument parse_input(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  for (const auto& [k, v] : doc.items())
    if (k != "field" && k != "groupoids" && k != "structures" && k != "tasks") fail(k, "unknown key");
  InputDocument d;
  d.field = parse_field(member(doc, "field", "document"));
  if (doc.contains("groupoids")) {
    if (!doc.at("groupoids").is_object()) fail("groupoids", "expected an object");
    for (const auto& [name, g] : doc.at("groupoids").items())
      d.groupoids.emplace(name, parse_groupoid(name, g, "groupoids." + name));
  }
  if (doc.contains("structures")) {
    if (!doc.at("structures").is_object()) fail("structures", "expected an object");
    for (const auto& [name, s] : doc.at("structures").items()) {
      if (!s.is_object()) fail("structures." + name, "expected an object");
      if (d.groupoids.count(name)) fail("structures." + name, "name already used by a groupoid");
      d.structures.emplace(name, s);
    }
  }
  if (doc.contains("tasks")) {
    std::size_t k = 0;
    for (const auto& t : array(doc.at("tasks"), "tasks")) {
      const std::string where = "tasks[" + std::to_string(k++) + "]";
      Task task;
      task.op = str(member(t, "op", where), where + ".op");
      if (std::find(task_ops().begin(), task_ops().end(), task.op) == task_ops().end())
        fail(where + ".op", "unknown op \"" + task.op + "\"");
      task.name = t.contains("name") ? str(t.at("name"), where + ".name") : task.op + "-" + std::to_string(k);
      if (t.contains("args")) {
        if (!t.at("args").is_object()) fail(where + ".args", "expected an object");
        task.args = t.at("args");
      }
      d.tasks.push_back(std::move(task));
    }
  }
  try {
    Env env(d);
    env.validate();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail("structures", e.what());
  }
  return d;
}

InputDocument parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(path, std::string("byte ") + std::to_string(e.byte) + ": invalid JSON");
  }
  return parse_input(doc);
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"label", c.label}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  Json out{{"title", r.title}, {"ok", r.ok()}, {"checks", checks}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

std::string report_text(const Report& r, const std::string& indent) {
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
  std::ostringstream os;
  os << indent << r.title << ": " << passed << "/" << r.checks.size() << " checks pass\n";
  for (const auto& c : r.checks)
    if (!c.pass) os << indent << "  FAIL " << c.label << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  for (const auto& n : r.notes) os << indent << "  note: " << n << "\n";
  return os.str();
}

RunResult run_document(const InputDocument& doc, const RunOptions& opt) {
  std::vector<Task> tasks;
  for (const auto& t : doc.tasks)
    if ((!opt.op || t.op == *opt.op) && (!opt.task || t.name == *opt.task)) tasks.push_back(t);
  if (tasks.empty() && opt.op && !opt.task) tasks.push_back(Task{*opt.op, *opt.op, Json::object()});
  if (tasks.empty() && opt.task) fail("--task", "no task named \"" + *opt.task + "\"");

  Env env(doc);
  RunResult out;
  Json jt = Json::array();
  std::ostringstream text;
  bool failed = false, too_large = false;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const std::string where = "task " + t.name;
    Json tj{{"name", t.name}, {"op", t.op}};
    std::string status;
    try {
      Outcome o = run_task(env, t, where, opt);
      status = o.pass() ? "pass" : "fail";
      text << "== " << t.name << " (" << t.op << "): " << (o.pass() ? "PASS" : "FAIL") << "\n";
      for (const auto& r : o.reports) text << report_text(r);
      for (const auto& l : o.lines) text << "  " << l << "\n";
      Json reps = Json::array();
      for (const auto& r : o.reports) reps.push_back(report_json(r));
      tj["status"] = status;
      tj["results"] = o.results;
      tj["reports"] = reps;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      status = "error";
      if (e.code() == ErrorCode::SearchSpaceTooLarge) too_large = true;
      text << "== " << t.name << " (" << t.op << "): ERROR\n  " << e.what() << "\n";
      tj["status"] = status;
      tj["error"] = Json{{"code", error_name(e.code())}, {"message", e.what()}};
    }
    failed = failed || status != "pass";
    jt.push_back(tj);
  }
  out.exit_code = too_large ? 3 : failed ? 1 : 0;
  text << (out.exit_code == 0 ? "all tasks pass" : "some tasks failed") << "\n";
  out.report = Json{{"tool", "whopf"},
                    {"field", field_json(doc.field)},
                    {"status", out.exit_code == 0 ? "pass" : "fail"},
                    {"exit_code", out.exit_code},
                    {"tasks", jt}};
  out.text = text.str();
  return out;
}

}  // namespace whopf

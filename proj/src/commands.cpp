#include "opcat/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "opcat/co.hpp"
#include "opcat/equivariant.hpp"
#include "opcat/error.hpp"
#include "opcat/finset.hpp"
#include "opcat/homology.hpp"
#include "opcat/james.hpp"
#include "opcat/monadics.hpp"
#include "opcat/operad.hpp"
#include "opcat/pi_objects.hpp"
#include "opcat/simplicial.hpp"
#include "opcat/terms.hpp"

namespace opcat {

using nlohmann::json;

namespace {

// ---- manifest access ----

const json& field(const json& j, const std::string& key) {
  if (!(j.is_object() && j.contains(key))) fail(ErrorCode::Parse, "missing field '" + key + "'");
  return j.at(key);
}

std::string get_str(const json& j, const std::string& key, std::optional<std::string> dflt = std::nullopt) {
  if (dflt && (!j.is_object() || !j.contains(key))) return *dflt;
  const json& v = field(j, key);
  if (!v.is_string()) fail(ErrorCode::Parse, "field '" + key + "': expected a string");
  return v.get<std::string>();
}

std::size_t get_uint(const json& j, const std::string& key, std::optional<std::size_t> dflt = std::nullopt) {
  if (dflt && (!j.is_object() || !j.contains(key))) return *dflt;
  const json& v = field(j, key);
  if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0))) fail(ErrorCode::Parse,
          "field '" + key + "': expected a non-negative integer");
  return v.get<std::size_t>();
}

bool get_bool(const json& j, const std::string& key, bool dflt) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  const json& v = j.at(key);
  if (!v.is_boolean()) fail(ErrorCode::Parse, "field '" + key + "': expected true or false");
  return v.get<bool>();
}

std::vector<std::size_t> get_uint_list(const json& v, const std::string& key) {
  if (!v.is_array()) fail(ErrorCode::Parse, "field '" + key + "': expected an array of integers");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!(e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0))) fail(ErrorCode::Parse,
            "field '" + key + "': expected non-negative integers");
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

// Bounds: command-line options, then the manifest, then the command default.
struct Bounds {
  json used = json::object();
  const json* opt = nullptr;
  const json* man = nullptr;

  std::size_t get(const std::string& name, std::size_t dflt, std::size_t lo = 1) {
    std::size_t v = dflt;
    if (man && man->contains("bounds") && man->at("bounds").contains(name)) v = get_uint(man->at("bounds"), name);
    if (opt && opt->contains(name)) v = get_uint(*opt, name);
    if (!(v >= lo)) fail(ErrorCode::Validation, "bound '" + name + "' must be at least " + std::to_string(lo));
    used[name] = v;
    return v;
  }
};

// ---- objects named in manifests ----

GroupPtr parse_group(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "trivial" || s == "e") return make_group(FiniteGroup::trivial());
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S')) {
      std::size_t n = 0;
      try {
        n = std::stoul(s.substr(1));
      } catch (...) {
        fail(ErrorCode::Parse, "field 'group': cannot read '" + s + "'");
      }
      if (!(n >= 1 && n <= 24)) fail(ErrorCode::Validation, "field 'group': order out of range in '" + s + "'");
      if (s[0] == 'C') return make_group(FiniteGroup::cyclic(n));
      require(n <= 4, ErrorCode::Validation, "field 'group': symmetric groups up to S4");
      return make_group(FiniteGroup::symmetric(n));
    }
    fail(ErrorCode::Parse, "field 'group': expected Cn, Sn, trivial or a table, got '" + s + "'");
  }
  require(v.is_object(), ErrorCode::Parse, "field 'group': expected a name or an object");
  if (v.contains("table")) {
    std::vector<std::vector<std::size_t>> t;
    for (const auto& row : v.at("table")) t.push_back(get_uint_list(row, "group.table"));
    return make_group(FiniteGroup::from_table(std::move(t), get_str(v, "name", std::string("G"))));
  }
  if (v.contains("generators")) {
    std::vector<Perm> gens;
    for (const auto& p : v.at("generators")) {
      std::vector<std::size_t> img = get_uint_list(p, "group.generators");
      Perm q{0};
      for (auto x : img) q.push_back(x);
      require(is_perm(q), ErrorCode::Validation, "field 'group.generators': not a permutation of 1..n");
      gens.push_back(q);
    }
    return make_group(FiniteGroup::from_perm_gens(gens, get_str(v, "name", std::string("G"))));
  }
  fail(ErrorCode::Parse, "field 'group': expected 'table' or 'generators'");
}

OperadPtr parse_operad(const json& v, std::size_t bound) {
  std::string name;
  std::size_t points = 2;
  if (v.is_string()) {
    name = v.get<std::string>();
  } else {
    require(v.is_object(), ErrorCode::Parse, "field 'operad': expected a name or an object");
    name = get_str(v, "name");
    points = get_uint(v, "points", 2);
  }
  if (name == "assoc" || name == "M") return std::make_shared<const Operad>(associativity_operad(bound));
  if (name == "comm" || name == "N") return std::make_shared<const Operad>(commutativity_operad(bound));
  if (name == "end" || name == "End") {
    require(points >= 1 && points <= 3, ErrorCode::Validation, "field 'operad.points': expected 1..3");
    return std::make_shared<const Operad>(endomorphism_operad(points, bound));
  }
  fail(ErrorCode::Parse, "field 'operad': expected assoc, comm or end, got '" + name + "'");
}

std::vector<Obj> probes_for(const Category& c, std::size_t n) {
  const Shape& s = c.shape();
  if (s.monoid) return monoid_probes(n + 1);
  if (s.orbits) return presheaf_probes(c, n);
  if (s.group) return gset_probes(c, n);
  return set_probes(n, c.based());
}

Adjunction parse_adjunction(const json& v) {
  require(v.is_object(), ErrorCode::Parse, "field 'adjunction': expected an object");
  std::string kind = get_str(v, "kind");
  if (kind == "free_gset" || kind == "gset_free") return free_gset_adjunction(parse_group(field(v, "group")), get_bool(v, "based", false));
  if (kind == "pointed") return free_pointed_adjunction();
  if (kind == "presheaf") return presheaf_reflection(std::make_shared<const OrbitCategory>(parse_group(field(v, "group"))));
  if (kind == "partial_monoid") return free_partial_monoid_adjunction(get_uint(v, "k", 3));
  if (kind == "identity") return identity_adjunction(get_bool(v, "based", false) ? pointed_category() : set_category());
  fail(ErrorCode::Parse, "field 'adjunction.kind': unknown kind '" + kind + "'");
}

struct MonadSpec {
  Monad monad;
  std::vector<Obj> probes;
};

MonadSpec parse_monad(const json& v, std::size_t arity, std::size_t objects) {
  require(v.is_object(), ErrorCode::Parse, "field 'monad': expected an object");
  std::string kind = get_str(v, "kind");
  bool based = get_bool(v, "based", true);
  std::size_t k = get_uint(v, "k", arity);
  auto cat = based ? pointed_category() : set_category();
  MonadSpec out;
  if (kind == "words") out.monad = lift(free_monoid_terms(k, based), cat);
  else if (kind == "multisets") out.monad = lift(multiset_terms(k, based), cat);
  else if (kind == "monoid_with_zero") out.monad = lift(monoid_with_zero_terms(k), pointed_category());
  else if (kind == "operad" || kind == "operad_monad") out.monad = lift(operad_terms(parse_operad(field(v, "operad"), k), k), pointed_category());
  else if (kind == "identity") out.monad = identity_monad(cat);
  else if (kind == "adjunction") out.monad = monad_of(parse_adjunction(field(v, "adjunction")));
  else if (kind == "gset_free") out.monad = monad_of(parse_adjunction(v));
  else if (kind == "co_monad") {
    std::size_t n = get_uint(v, "n", 2);
    Monad m = co_monad(std::make_shared<const CatOfOperators>(build_co(parse_operad(field(v, "operad"), n), n)));
    for (std::size_t j = 0; j < objects; ++j) out.probes.push_back(pi_power(*m.cat, set_obj(*pointed_category(), atoms(j, true))));
    out.monad = m;
    return out;
  } else if (kind == "conjugate") {
    // R C L on presheaves over the orbit category, C = K+ smash (-) on G-sets.
    auto g = parse_group(field(v, "group"));
    auto kg = v.contains("smash_group") ? parse_group(v.at("smash_group")) : g;
    Adjunction lr = presheaf_reflection(std::make_shared<const OrbitCategory>(g));
    out.monad = conjugate_monad(lift(group_smash_terms(kg), lr.left.dst), lr);
  } else if (kind == "group_smash") {
    auto g = parse_group(field(v, "group"));
    auto gcat = gset_category(g, true);
    out.monad = lift(group_smash_terms(g), gcat);
  } else {
    fail(ErrorCode::Parse, "field 'monad.kind': unknown kind '" + kind + "'");
  }
  out.probes = probes_for(*out.monad.cat, objects);
  return out;
}

// Based simplicial sets: simplex 0 of every level is the basepoint.
SimplicialObject parse_space(const json& v, std::size_t levels) {
  require(v.is_object(), ErrorCode::Parse, "field 'space': expected an object");
  std::string model = get_str(v, "model");
  if (model == "sphere") {
    std::size_t n = get_uint(v, "dim");
    require(n >= 1, ErrorCode::Validation, "field 'space.dim': expected a positive dimension");
    return sphere_model(n, levels);
  }
  auto cat = pointed_category();
  auto constant = [&](std::size_t points) {
    Obj x = set_obj(*cat, atoms(points, true));
    SimplicialObject k;
    k.cat = cat;
    k.level.assign(levels + 1, x);
    k.face.resize(levels + 1);
    k.degen.resize(levels + 1);
    for (std::size_t q = 0; q <= levels; ++q) {
      if (q > 0) k.face[q].assign(q + 1, cat->identity(x));
      if (q < levels) k.degen[q].assign(q + 1, cat->identity(x));
    }
    return k;
  };
  if (model == "point") return constant(0);
  if (model == "discrete") return constant(get_uint(v, "points"));
  require(model == "explicit", ErrorCode::Parse, "field 'space.model': expected sphere, point, discrete or explicit");
  std::vector<std::size_t> sizes = get_uint_list(field(v, "sizes"), "space.sizes");
  if (!(sizes.size() >= levels + 1)) fail(ErrorCode::Bound,
          "field 'space.sizes': " + std::to_string(sizes.size()) + " levels given, " + std::to_string(levels + 1) + " needed");
  SimplicialObject k;
  k.cat = cat;
  for (std::size_t q = 0; q <= levels; ++q) {
    require(sizes[q] >= 1, ErrorCode::Validation, "field 'space.sizes': every level needs the basepoint");
    k.level.push_back(set_obj(*cat, atoms(sizes[q] - 1, true)));
  }
  auto table = [&](const json& t, std::size_t from, std::size_t to, const std::string& what) {
    std::vector<std::size_t> img = get_uint_list(t, what);
    if (!(img.size() == sizes[from])) fail(ErrorCode::Validation, "field '" + what + "': wrong length");
    Mor m;
    m.level = {img};
    for (auto y : img) if (!(y < sizes[to])) fail(ErrorCode::Validation, "field '" + what + "': value out of range");
    std::string why;
    if (!(cat->is_mor(k.level[from], k.level[to], m, &why))) fail(ErrorCode::Validation, "field '" + what + "': " + why);
    return m;
  };
  const json& faces = field(v, "faces");
  const json& degens = field(v, "degeneracies");
  k.face.resize(levels + 1);
  k.degen.resize(levels + 1);
  for (std::size_t q = 1; q <= levels; ++q) {
    if (!(faces.size() > q - 1 && faces[q - 1].size() == q + 1)) fail(ErrorCode::Validation,
            "field 'space.faces': level " + std::to_string(q) + " needs " + std::to_string(q + 1) + " maps");
    for (std::size_t i = 0; i <= q; ++i)
      k.face[q].push_back(table(faces[q - 1][i], q, q - 1, "space.faces[" + std::to_string(q) + "][" + std::to_string(i) + "]"));
  }
  for (std::size_t q = 0; q < levels; ++q) {
    if (!(degens.size() > q && degens[q].size() == q + 1)) fail(ErrorCode::Validation,
            "field 'space.degeneracies': level " + std::to_string(q) + " needs " + std::to_string(q + 1) + " maps");
    for (std::size_t i = 0; i <= q; ++i)
      k.degen[q].push_back(table(degens[q][i], q, q + 1, "space.degeneracies[" + std::to_string(q) + "][" + std::to_string(i) + "]"));
  }
  Report r = check_simplicial(k);
  require(r.ok(), ErrorCode::Validation, "field 'space': simplicial identities fail");
  return k;
}

json group_json(const AbelianGroup& g) {
  return {{"group", g.str()}, {"rank", g.rank}, {"torsion", g.torsion}};
}

json homology_json(const std::vector<AbelianGroup>& h) {
  json a = json::array();
  for (std::size_t q = 0; q < h.size(); ++q) {
    json e = group_json(h[q]);
    e["degree"] = q;
    a.push_back(e);
  }
  return a;
}

// ---- the commands ----

struct Ctx {
  const json& m;
  Bounds& b;
  json reports = json::array();
  json result = json::object();
  bool ok = true;

  void add(const Report& r) {
    reports.push_back(r.to_json());
    ok = ok && r.ok();
  }
  void flag(const std::string& name, bool v, const std::string& why) {
    Report r(name);
    r.check(name).expect(v, why);
    add(r);
  }
};

void cmd_enum_homs(Ctx& c) {
  if (c.m.contains("group")) {
    GroupPtr g = parse_group(c.m.at("group"));
    std::size_t n = get_uint(c.m, "degree", c.b.get("arity", 3, 0));
    auto homs = enumerate_homs_to_sym(g, n);
    Report r("homomorphisms " + g->name() + " -> S_" + std::to_string(n));
    json list = json::array();
    for (const auto& a : homs) {
      bool hom = true;
      for (std::size_t x = 0; x < g->order(); ++x)
        for (std::size_t y = 0; y < g->order(); ++y) hom = hom && perm_compose(a(x), a(y)) == a(g->mul(x, y));
      r.check("homomorphism").expect(hom, "not a homomorphism");
      json imgs = json::array();
      for (const auto& p : a.images) imgs.push_back(std::vector<std::size_t>(p.begin() + 1, p.end()));
      list.push_back(imgs);
    }
    c.add(r);
    c.result["group"] = g->name();
    c.result["order"] = g->order();
    c.result["degree"] = n;
    c.result["count"] = homs.size();
    c.result["homomorphisms"] = list;
    c.result["graph_subgroups"] = graph_family(*g, n).size();
    return;
  }
  Kind k = parse_kind(get_str(c.m, "kind", std::string("F")));
  std::size_t m = get_uint(c.m, "m"), n = get_uint(c.m, "n");
  require(m <= 6 && n <= 6, ErrorCode::Bound, "enum-homs: objects up to 6");
  auto homs = enumerate_homs(k, m, n);
  Report r(std::string(kind_name(k)) + "(" + std::to_string(m) + ", " + std::to_string(n) + ")");
  std::size_t filtered = 0;
  for (const auto& f : enumerate_homs(Kind::F, m, n)) filtered += is_member(k, f);
  r.check("members").pass();
  for (const auto& f : homs) r.check("members").expect(is_member(k, f), to_string(f));
  r.check("count_matches_filter").expect(filtered == homs.size(), "filter over F gives " + std::to_string(filtered));
  r.check("sorted").expect(std::is_sorted(homs.begin(), homs.end()), "enumeration is not lexicographic");
  c.add(r);
  json list = json::array();
  for (const auto& f : homs) list.push_back(std::vector<std::size_t>(f.table().begin() + 1, f.table().end()));
  c.result["kind"] = kind_name(k);
  c.result["count"] = homs.size();
  c.result["maps"] = list;
}

void cmd_check_operad(Ctx& c) {
  std::size_t bound = c.b.get("arity", 3);
  OperadPtr op = parse_operad(field(c.m, "operad"), bound);
  c.add(check_operad(*op));
  c.result["operad"] = op->name();
  c.result["cardinalities"] = op->cards();
  if (c.m.contains("group")) {
    GroupPtr g = parse_group(c.m.at("group"));
    GOperad p = prolong_operad(op, g);
    c.add(check_goperad(p));
    c.flag("restriction", restrict_goperad(p) == *op, "restricting the prolongation does not recover the operad");
    c.result["group"] = g->name();
  }
}

void cmd_build_co(Ctx& c) {
  std::size_t n = c.b.get("objects", 3);
  OperadPtr op = parse_operad(field(c.m, "operad"), c.b.get("arity", n));
  auto d = std::make_shared<const CatOfOperators>(build_co(op, n));
  c.add(check_co(*d));
  Operad back = extract_operad(*d);
  OperadPtr cut = parse_operad(field(c.m, "operad"), n);
  c.flag("extract_build", back == *cut, "extract(build(C)) differs from C");
  json sizes = json::array();
  for (std::size_t a = 0; a <= n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b <= n; ++b) row.push_back(d->homs(a, b).size());
    sizes.push_back(row);
  }
  c.result["operad"] = op->name();
  c.result["hom_sizes"] = sizes;
  if (c.m.contains("group")) {
    GroupPtr g = parse_group(c.m.at("group"));
    EquivariantCO e = prolong_co(d, g);
    c.add(check_equivariant_co(e, std::min<std::size_t>(n, 2)));
    c.add(cross_check_goperad(e, prolong_operad(op, g)));
    if (op->name() == commutativity_operad(1).name()) c.add(compare_with_fg(e));
    c.result["group"] = g->name();
  }
}

void cmd_check_monad(Ctx& c) {
  MonadSpec s = parse_monad(field(c.m, "monad"), c.b.get("words", 3), c.b.get("objects", 2, 0));
  c.add(check_monad(s.monad, s.probes));
  json algs = json::array();
  Report ar("algebras of " + s.monad.name);
  ar.check("laws");
  for (const Obj& x : s.probes) {
    bool complete = true;
    auto ys = enumerate_algebras(s.monad, x, 100000, {}, &complete);
    for (const auto& y : ys) ar.merge(check_algebra(s.monad, y), "laws.");
    algs.push_back({{"carrier", x.total_size()}, {"algebras", ys.size()}, {"complete", complete}});
  }
  c.add(ar);
  c.result["monad"] = s.monad.name;
  c.result["algebras"] = algs;
}

void cmd_beck(Ctx& c) {
  Adjunction a = parse_adjunction(field(c.m, "adjunction"));
  std::size_t n = c.b.get("objects", 2, 0);
  auto tp = probes_for(*a.left.src, n);
  auto sp = probes_for(*a.left.dst, n);
  c.add(check_adjunction(a, tp, sp));
  Report r = beck_check(a, tp, sp);
  c.add(r);
  c.result["adjunction"] = a.name;
  c.result["monadic"] = r.info().value("monadic", false);
  c.result["details"] = r.info();
}

void cmd_monad_pair(Ctx& c) {
  std::size_t k = c.b.get("words", 3);
  std::string kind = get_str(c.m, "pair");
  auto inner = [&]() {
    std::string mk = get_str(c.m, "monad", std::string("words"));
    require(mk == "words" || mk == "multisets", ErrorCode::Parse, "field 'monad': expected words or multisets");
    return mk == "words" ? free_monoid_terms(k, true) : multiset_terms(k, true);
  };
  MonadPair p = kind == "distributive" ? distributive_pair(k)
                : kind == "outer"      ? trivial_pair_outer(inner())
                : kind == "inner"      ? trivial_pair_inner(inner())
                                       : (fail(ErrorCode::Parse, "field 'pair': expected distributive, outer or inner"), MonadPair{});
  std::size_t n = c.b.get("objects", 1, 0);
  PairOptions opt;
  opt.algebras = get_bool(c.m, "algebras", true);
  Report r = check_monad_pair(p, pointed_category(), set_probes(n, true), opt);
  c.add(r);
  c.result["pair"] = p.name;
  c.result["details"] = r.info();
}

void cmd_bar(Ctx& c) {
  Adjunction a = parse_adjunction(field(c.m, "adjunction"));
  std::size_t q = c.b.get("levels", 4);
  std::size_t n = c.b.get("objects", 2, 0);
  Monad m = monad_of(a);
  Action act = adjunction_action(a);
  CFunctor sigma = adjoint_cfunctor(m, a, act);
  std::size_t algebras = 0;
  json sizes = json::array();
  for (const Obj& x : probes_for(*a.left.src, n)) {
    for (const Algebra& y : enumerate_algebras(m, x)) {
      ++algebras;
      SimplicialObject b = bar(self_cfunctor(m), m, y, q);
      c.add(check_simplicial(b));
      c.add(check_simplicial(bar(sigma, m, y, q)));
      c.add(check_contraction(m, y, q));
      if (!m.cat->shape().monoid && !a.left.dst->shape().monoid) c.add(check_levelwise_sigma(m, a, act, y, q));
      json row = json::array();
      for (const Obj& l : b.level) row.push_back(l.total_size());
      sizes.push_back(row);
    }
    c.add(check_free_collapse(sigma, m, x, q));
  }
  c.result["adjunction"] = a.name;
  c.result["algebras"] = algebras;
  c.result["level_sizes"] = sizes;
}

void cmd_segal(Ctx& c) {
  std::size_t n = c.b.get("objects", 2);
  const json& v = field(c.m, "pi_object");
  std::string kind = get_str(v, "kind");
  auto pi = pi_category(n);
  Obj y = set_obj(*pointed_category(), atoms(get_uint(v, "size", 1), true));
  Obj x;
  if (kind == "power") {
    x = pi_power(*pi, y);
  } else if (kind == "sub_power") {
    const json& lv = field(v, "levels");
    if (!(lv.is_array() && lv.size() == n + 1)) fail(ErrorCode::Validation,
            "field 'pi_object.levels': expected " + std::to_string(n + 1) + " levels");
    std::vector<std::vector<Value>> levels;
    for (std::size_t l = 0; l <= n; ++l) {
      std::vector<Value> elems;
      for (const auto& t : lv[l]) {
        std::vector<std::size_t> ids = get_uint_list(t, "pi_object.levels");
        require(ids.size() == l, ErrorCode::Validation, "field 'pi_object.levels': tuple of the wrong length");
        std::vector<Value> ys;
        for (auto i : ids) ys.push_back(i == 0 ? Value::base() : Value::atom(static_cast<std::int64_t>(i)));
        elems.push_back(tuple_value(ys));
      }
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      levels.push_back(elems);
    }
    x = pi_sub_power(*pi, y, levels);
  } else if (kind == "co") {
    OperadPtr op = parse_operad(field(v, "operad"), n);
    auto d = std::make_shared<const CatOfOperators>(build_co(op, n));
    c.add(check_omega(d, y));
    Monad dm = co_monad(d);
    x = dm.apply(pi_power(*dm.cat, y));
    pi = dm.cat;
  } else {
    fail(ErrorCode::Parse, "field 'pi_object.kind': expected power, sub_power or co");
  }
  Report r = segal_special(*pi, x);
  c.result["strictly_special"] = r.info()["strictly_special"];
  c.result["per_level"] = r.info()["per_level"];
  // Non-special inputs are results, not failures, unless the manifest asks for special.
  if (c.m.contains("expect_special")) {
    bool want = get_bool(c.m, "expect_special", true);
    c.flag("expected_verdict", r.info()["strictly_special"] == want,
           std::string("expected strictly_special = ") + (want ? "true" : "false"));
  }
}

void cmd_homology(Ctx& c) {
  std::size_t n = c.b.get("degree", 4, 0);
  SimplicialObject s = parse_space(field(c.m, "space"), n + 1);
  FiniteSSet k = underlying(s);
  ChainComplex nc = normalized_chains(k);
  auto h = homology(nc, n);
  Report r("homology");
  r.check("boundary_squared_zero").expect(boundary_squared_defects(nc) == 0, "d d != 0");
  std::size_t total = 0;
  for (auto sz : k.size) total += sz;
  if (total <= 5000) {
    ChainComplex uc = unnormalized_chains(k);
    r.check("unnormalized_agrees").expect(homology(uc, n) == h, "unnormalized chains give a different answer");
    r.check("boundary_squared_zero").expect(boundary_squared_defects(uc) == 0, "d d != 0 (unnormalized)");
  }
  r.check("permutation_invariant").expect(homology(permuted(k, 1), n) == h, "relabelled simplices change homology");
  c.add(r);
  c.result["homology"] = homology_json(h);
  c.result["nondegenerate"] = nc.rank;
}

void cmd_james(Ctx& c) {
  if (c.m.contains("grothendieck")) {
    const json& g = c.m.at("grothendieck");
    MonoidPresentation p;
    if (g.contains("table")) {
      std::vector<std::vector<std::size_t>> t;
      for (const auto& row : g.at("table")) {
        std::vector<std::size_t> r;
        for (const auto& e : row) r.push_back(e.is_null() ? kUndef : e.get<std::size_t>());
        t.push_back(r);
      }
      for (const auto& row : t)
        for (auto e : row) require(e == kUndef || e < t.size(), ErrorCode::Validation, "field 'grothendieck.table': entry out of range");
      p = table_presentation(t, get_uint(g, "unit", 0));
    } else {
      p.generators = get_uint(g, "generators");
      p.commutative = get_bool(g, "commutative", true);
      for (const auto& rel : g.value("relations", json::array())) {
        require(rel.is_array() && rel.size() == 2, ErrorCode::Parse, "field 'grothendieck.relations': expected [lhs, rhs] pairs");
        auto side = [&](const json& s) {
          std::vector<std::int64_t> v;
          for (const auto& e : s) v.push_back(e.get<std::int64_t>());
          require(v.size() == p.generators, ErrorCode::Validation, "field 'grothendieck.relations': wrong length");
          return v;
        };
        p.relations.push_back({side(rel[0]), side(rel[1])});
      }
    }
    GroupCompletion gc = grothendieck(p);
    c.result["grothendieck"] = {{"group", gc.group.str()}, {"rank", gc.group.rank}, {"torsion", gc.group.torsion}, {"images", gc.images}};
  }
  if (c.m.contains("pi0_s0")) {
    Pi0Monoid pm = pi0_james_s0(get_uint(c.m, "pi0_s0"));
    c.flag("pi0_truncated_naturals", pm.is_truncated_naturals, "pi_0 of F_k J S^0 is not N truncated at k");
    c.result["pi0_s0"] = {{"k", pm.k}, {"classes", pm.classes}, {"completion", pm.completion.group.str()}};
  }
  if (!c.m.contains("space")) return;
  std::size_t n = c.b.get("degree", 4, 0);
  SimplicialObject x = parse_space(c.m.at("space"), n + 1);
  JamesHomology jh = james_homology(x, n);
  c.flag("tensor_algebra_match", jh.tensor_algebra_match, "H_*(F_{n+1} J X) ranks differ from the tensor algebra");
  json out;
  out["stage"] = jh.stage;
  out["homology"] = homology_json(jh.homology);
  out["base_homology"] = homology_json(jh.base);
  out["tensor_algebra_ranks"] = jh.tensor;
  out["tensor_algebra_match"] = jh.tensor_algebra_match;
  out["level_sizes"] = jh.level_sizes;
  if (!jh.previous.empty()) {
    out["previous_stage"] = jh.stage - 1;
    out["previous_homology"] = homology_json(jh.previous);
    std::vector<std::size_t> differ;
    for (std::size_t q = 0; q < jh.agrees.size(); ++q)
      if (!jh.agrees[q]) differ.push_back(q);
    out["stages_differ_in_degrees"] = differ;
  }
  if (c.m.contains("stages")) {
    json st = json::array();
    std::size_t wmax = c.b.get("words", 6);
    for (std::size_t k : get_uint_list(c.m.at("stages"), "stages")) {
      if (!(k >= 1 && k <= wmax)) fail(ErrorCode::Bound,
              "field 'stages': word length " + std::to_string(k) + " outside 1.." + std::to_string(wmax));
      SimplicialObject f = james_filtration(x, k);
      st.push_back({{"k", k}, {"homology", homology_json(homology(underlying(f), n))}});
    }
    out["stages"] = st;
  }
  if (get_bool(c.m, "simplicial_check", true)) c.add(check_simplicial(james_filtration(x, jh.stage)));
  c.result["james"] = out;
}

void cmd_orbit(Ctx& c) {
  GroupPtr g = parse_group(field(c.m, "group"));
  std::size_t n = c.b.get("objects", 3, 0);
  std::size_t arity = c.b.get("arity", 2, 0);
  OrbitCategory oc(g);
  json subs = json::array(), homs = json::array();
  for (std::size_t h = 0; h < oc.num_objects(); ++h) {
    subs.push_back(oc.subgroup(h));
    json row = json::array();
    for (std::size_t k = 0; k < oc.num_objects(); ++k) row.push_back(oc.homs(h, k).size());
    homs.push_back(row);
  }
  Report r("fixed-point presheaves of " + g->name());
  for (const char* nm : {"strictly_special", "lr_identity"}) r.check(nm);
  for (std::size_t s = 0; s <= n; ++s)
    for (const auto& a : enumerate_homs_to_sym(g, s)) {
      BasedGSet x = gset_from_hom(a);
      OrbitalPresheaf p = fixed_point_presheaf(oc, x);
      SpecialReport sr = strictly_special(oc, p);
      r.check("strictly_special").expect(sr.strictly_special, sr.failures.empty() ? "" : sr.failures[0]);
      BasedGSet back = evaluate_at_e(oc, p);
      r.check("lr_identity").expect(back.size == x.size && back.act == x.act, "L R X != X");
    }
  c.add(r);
  json fam = json::array();
  for (std::size_t k = 0; k <= arity; ++k) fam.push_back(graph_family(*g, k).size());
  c.result["group"] = g->name();
  c.result["subgroups"] = subs;
  c.result["hom_counts"] = homs;
  c.result["graph_family_sizes"] = fam;
}

void cmd_conjugate(Ctx& c) {
  GroupPtr g = parse_group(field(c.m, "group"));
  GroupPtr k = c.m.contains("smash_group") ? parse_group(c.m.at("smash_group")) : g;
  std::size_t n = c.b.get("objects", 2, 0);
  auto oc = std::make_shared<const OrbitCategory>(g);
  Adjunction lr = presheaf_reflection(oc);
  auto terms = group_smash_terms(k);
  Monad cm = lift(terms, lr.left.dst);
  Monad dm = lift(terms, lr.left.src);
  Report r = conjugate_check(cm, dm, lr, presheaf_probes(*lr.left.src, n), gset_probes(*lr.left.dst, n));
  c.add(r);
  c.result["group"] = g->name();
  c.result["details"] = r.info();
}

using Handler = std::function<void(Ctx&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"enum-homs", cmd_enum_homs}, {"check-operad", cmd_check_operad}, {"build-co", cmd_build_co},
      {"check-monad", cmd_check_monad}, {"beck-check", cmd_beck}, {"monad-pair", cmd_monad_pair},
      {"bar", cmd_bar}, {"segal", cmd_segal}, {"homology", cmd_homology},
      {"james", cmd_james}, {"orbit", cmd_orbit}, {"conjugate", cmd_conjugate}};
  return h;
}

}  // namespace

SimplicialObject space_from_json(const json& v, std::size_t levels) { return parse_space(v, levels); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

json self_test_manifest(const std::string& name) {
  static const std::map<std::string, json> m{
      {"enum-homs", {{"kind", "Pi"}, {"m", 2}, {"n", 1}}},
      {"check-operad", {{"operad", "assoc"}, {"group", "C2"}}},
      {"build-co", {{"operad", {{"name", "end"}, {"points", 2}}}, {"bounds", {{"objects", 2}}}}},
      {"check-monad", {{"monad", {{"kind", "words"}, {"k", 3}}}}},
      {"beck-check", {{"adjunction", {{"kind", "free_gset"}, {"group", "C2"}}}}},
      {"monad-pair", {{"pair", "distributive"}}},
      {"bar", {{"adjunction", {{"kind", "free_gset"}, {"group", "C2"}}}, {"bounds", {{"levels", 3}}}}},
      {"segal", {{"pi_object", {{"kind", "power"}, {"size", 2}}}, {"expect_special", true}}},
      {"homology", {{"space", {{"model", "sphere"}, {"dim", 2}}}}},
      {"james", {{"space", {{"model", "sphere"}, {"dim", 1}}}, {"bounds", {{"degree", 3}}}, {"pi0_s0", 3},
                 {"grothendieck", {{"generators", 1}}}}},
      {"orbit", {{"group", "S3"}}},
      {"conjugate", {{"group", "C2"}}}};
  auto it = m.find(name);
  if (!(it != m.end())) fail(ErrorCode::Parse, "unknown command '" + name + "'");
  return it->second;
}

json run_command(const std::string& name, const json& manifest, const json& options) {
  auto it = handlers().find(name);
  if (!(it != handlers().end())) fail(ErrorCode::Parse, "unknown command '" + name + "'");
  require(options.is_object(), ErrorCode::Parse, "options: expected an object");
  bool self = options.value("self_test", false);
  json man = self ? self_test_manifest(name) : manifest;
  require(man.is_object(), ErrorCode::Parse, "manifest: expected a JSON object");
  if (man.contains("command"))
    if (!(get_str(man, "command") == name)) fail(ErrorCode::Validation,
            "field 'command': manifest is for '" + get_str(man, "command") + "', not '" + name + "'");
  Bounds b;
  b.man = &man;
  json bo = self ? json::object() : options.value("bounds", json::object());
  b.opt = &bo;
  Ctx c{man, b};
  it->second(c);
  json out;
  out["tool"] = "opcat";
  out["version"] = kVersion;
  out["command"] = name;
  out["self_test"] = self;
  out["bounds"] = b.used;
  out["ok"] = c.ok;
  out["reports"] = c.reports;
  out["result"] = c.result;
  return out;
}

}  // namespace opcat

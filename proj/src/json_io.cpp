#include "ras/json_io.hpp"

#include <algorithm>
#include <limits>

#include "ras/error.hpp"

namespace ras::json {

json to_json(const Integer& x) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  if (x >= lo && x <= hi) return static_cast<long long>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ValidationError("bad integer \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ValidationError("bad integer \"" + s + "\"");
    return Integer(s);
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

json to_json(const DivisorClass& D) {
  json a = json::array();
  for (const auto& x : D.coeffs()) a.push_back(to_json(x));
  return a;
}

DivisorClass class_from_json(const json& j, const LatticeContext& ctx) {
  if (!j.is_array()) throw ValidationError("a class must be a JSON array [n, d, r1, ...]");
  std::vector<Integer> c;
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return DivisorClass(ctx, std::move(c));
}

json to_json(const ReflectionWord& w) { return w.letters; }

ReflectionWord word_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("a reflection word must be a JSON array");
  ReflectionWord w;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      throw ValidationError("reflection letters must be nonnegative integers");
    w.letters.push_back(x.get<std::size_t>());
  }
  return w;
}

json to_json(const AbGroup& G) {
  json t = json::array();
  for (const auto& n : G.torsion()) t.push_back(to_json(n));
  return json{{"free_rank", G.free_rank()}, {"torsion", t}};
}

AbGroup group_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("pic0 must be an object");
  std::size_t r = j.value("free_rank", 0);
  std::vector<Integer> tors;
  if (j.contains("torsion"))
    for (const auto& x : j.at("torsion")) tors.push_back(integer_from_json(x));
  return AbGroup(r, std::move(tors));
}

json element_to_json(const AbGroup::Element& x) {
  json a = json::array();
  for (const auto& c : x) a.push_back(to_json(c));
  return a;
}

AbGroup::Element element_from_json(const json& j, const AbGroup& G) {
  if (!j.is_array()) throw ValidationError("a group element must be a JSON array");
  AbGroup::Element x;
  for (const auto& c : j) x.push_back(integer_from_json(c));
  G.check(x);
  return G.reduce(std::move(x));
}

json to_json(const PicElement& p) {
  json d = json::array();
  for (const auto& x : p.degrees) d.push_back(to_json(x));
  return json{{"degrees", d}, {"pic0", element_to_json(p.pic0)}};
}

json to_json(const SurfaceData& X) {
  json comps = json::array();
  for (const auto& c : X.components())
    comps.push_back(json{{"class", to_json(c.cls)}, {"multiplicity", to_json(c.multiplicity)}});
  json e = json::array();
  for (std::size_t i = 1; i <= X.m(); ++i) e.push_back(element_to_json(X.image_e(i)));
  return json{{"m", X.m()},
              {"parity", to_string(X.context().parity)},
              {"curve_type", X.curve_type().to_string()},
              {"components", comps},
              {"pic0", to_json(X.pic0())},
              {"images", json{{"s", element_to_json(X.image_s())},
                              {"f", element_to_json(X.image_f())},
                              {"e", e}}}};
}

SurfaceData surface_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("surface must be a JSON object");
  if (!j.contains("m")) throw ValidationError("surface is missing \"m\"");
  const json& jm = j.at("m");
  if (!jm.is_number_integer() || jm.get<long long>() < 0)
    throw ValidationError("\"m\" must be a nonnegative integer");
  LatticeContext ctx{jm.get<std::size_t>(), parity_from_string(j.value("parity", std::string("even")))};
  SurfaceData generic = SurfaceData::generic(ctx);

  std::vector<Component> comps;
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      if (!c.is_object() || !c.contains("class"))
        throw ValidationError("each component needs a \"class\"");
      Integer mult = c.contains("multiplicity") ? integer_from_json(c.at("multiplicity")) : Integer(1);
      comps.push_back(Component{class_from_json(c.at("class"), ctx), mult});
    }
  } else {
    comps = generic.components();
  }
  CurveTypeTag tag;
  if (j.contains("curve_type")) {
    tag = CurveTypeTag::parse(j.at("curve_type").get<std::string>());
  } else if (comps.size() != 1 || comps[0].multiplicity != 1) {
    tag.kind = comps.size() > 1 && std::all_of(comps.begin(), comps.end(),
                                               [](const Component& c) { return c.multiplicity == 1; })
                   ? CurveKind::Polygon
                   : CurveKind::Other;
    tag.sides = comps.size();
  }

  AbGroup G = generic.pic0();
  std::vector<AbGroup::Element> imgs = generic.images();
  if (j.contains("pic0") || j.contains("images")) {
    if (!j.contains("pic0") || !j.contains("images"))
      throw ValidationError("\"pic0\" and \"images\" must be given together");
    G = group_from_json(j.at("pic0"));
    const json& im = j.at("images");
    if (!im.is_object() || !im.contains("s") || !im.contains("f"))
      throw ValidationError("images need \"s\", \"f\" and \"e\"");
    imgs = {element_from_json(im.at("s"), G), element_from_json(im.at("f"), G)};
    const json e = im.value("e", json::array());
    if (e.size() != ctx.m)
      throw ValidationError("images.e has " + std::to_string(e.size()) + " entries, expected " +
                            std::to_string(ctx.m));
    for (const auto& x : e) imgs.push_back(element_from_json(x, G));
  }
  SurfaceData X(ctx, std::move(comps), tag, std::move(G), std::move(imgs));
  if (j.contains("kernel_relations"))
    for (const auto& r : j.at("kernel_relations")) X = X.with_kernel_relation(class_from_json(r, ctx));
  return X;
}

json to_json(const CurveTest& t) {
  return json{{"accepted", t.accepted},
              {"witness", to_json(t.witness)},
              {"witness_steps", t.witness.steps()},
              {"reason", t.reason}};
}

json to_json(const ChamberResult& r) {
  json out{{"success", r.success},
           {"failure", r.success ? "" : to_string(r.failure)},
           {"witness", to_json(r.word)},
           {"witness_steps", r.word.steps()},
           {"detail", r.detail}};
  if (r.chamber_form) {
    out["chamber_form"] = to_json(*r.chamber_form);
    out["chamber_parity"] = to_string(r.chamber_form->parity());
  }
  return out;
}

json to_json(const NefResult& r) {
  json out{{"nef", r.nef},
           {"reason", r.reason},
           {"witness", to_json(r.witness)},
           {"witness_steps", r.witness.steps()}};
  if (r.chamber_form) out["chamber_form"] = to_json(*r.chamber_form);
  return out;
}

json to_json(const EffectiveDecomposition& d) {
  json parts = json::array();
  for (const auto& p : d.parts)
    parts.push_back(json{{"class", to_json(p.cls)},
                         {"coefficient", to_json(p.coefficient)},
                         {"kind", to_string(p.kind)},
                         {"d", to_json(p.self_intersection_negated)}});
  return parts;
}

json to_json(const EffectivityResult& r) {
  json out{{"effective", r.effective},
           {"decomposition", to_json(r.decomposition)},
           {"witness", to_json(r.witness)},
           {"witness_steps", r.witness.steps()},
           {"reason", r.reason}};
  if (r.residual) out["residual"] = to_json(*r.residual);
  return out;
}

json to_json(const PencilCase& p) {
  json out{{"kind", to_string(p.kind)}, {"r", to_json(p.r)}};
  if (p.chamber_form) out["chamber_form"] = to_json(*p.chamber_form);
  return out;
}

json to_json(const IntegralityReport& r) {
  json out{{"verdict", to_string(r.verdict)},
           {"r", to_json(r.r)},
           {"r_prime", to_json(r.r_prime)},
           {"witness", to_json(r.witness)},
           {"witness_steps", r.witness.steps()},
           {"detail", r.detail}};
  if (r.chamber_form) out["chamber_form"] = to_json(*r.chamber_form);
  return out;
}

json to_json(const ModuliReport& r) {
  json flags{{"separably_unirational", r.separably_unirational}};
  flags["unirational"] = r.unirational ? json(*r.unirational) : json(nullptr);
  return json{{"dimension", to_json(r.dimension)},
              {"divisibility_r", to_json(r.divisibility_r)},
              {"rational", r.rational},
              {"unirational_flags", flags}};
}

json to_json(const RootClassification& r) {
  return json{{"kind", to_string(r.kind)},
              {"witness", to_json(r.witness)},
              {"witness_steps", r.witness.steps()},
              {"negated", r.negated}};
}

json to_json(const EquationReport& r) {
  json sing = json::array();
  for (const auto& p : r.singularities) {
    json part = json::array();
    for (const auto& x : p.partition) part.push_back(to_json(x));
    sing.push_back(json{{"indices", p.indices}, {"partition", part}});
  }
  return json{{"order", to_json(r.order)},
              {"singularities", sing},
              {"rigid", r.rigid},
              {"kind", to_string(r.kind)},
              {"twist_degree", to_json(r.twist_degree)},
              {"trivial", r.trivial},
              {"reordered", r.reordered},
              {"warnings", r.warnings}};
}

json to_json(const StratumDescriptor& s) {
  json comps = json::array();
  for (const auto& c : s.components)
    comps.push_back(json{{"class", to_json(c.cls)}, {"multiplicity", to_json(c.multiplicity)}});
  return json{{"key", s.key},
              {"components", comps},
              {"curve_type", s.curve_type.to_string()},
              {"orbit", s.orbit},
              {"combinatorial_orbit", s.combinatorial_orbit}};
}

json census_summary(const CensusResult& r) {
  json stats = json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  return json{{"strata", r.strata.size()},
              {"classes", r.orbit_count},
              {"combinatorial_strata", r.combinatorial_strata},
              {"combinatorial_classes", r.combinatorial_orbit_count},
              {"target_strata", 3182},
              {"target_classes", 41},
              {"matches_target", r.strata.size() == 3182 && r.orbit_count == 41},
              {"closure_defects", r.closure_defects.size()},
              {"digest", r.digest},
              {"stats", stats}};
}

}  // namespace ras::json

#include "ras/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ras/classify.hpp"
#include "ras/error.hpp"

namespace ras {

std::vector<DivisorClass> weyl_orbit(const DivisorClass& D) {
  if (D.m() > 7) throw PreconditionError("Weyl orbits are infinite for m >= 8");
  const auto roots = simple_roots(D.context());
  std::set<DivisorClass> seen{D};
  std::deque<DivisorClass> queue{D};
  while (!queue.empty()) {
    DivisorClass x = queue.front();
    queue.pop_front();
    for (const auto& sigma : roots) {
      DivisorClass y = reflect(x, sigma);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<DivisorClass>(seen.begin(), seen.end());
}

namespace {

constexpr std::size_t kCensusM = 6;

using State = std::vector<Component>;

void canonicalize(State& s) {
  std::sort(s.begin(), s.end(), [](const Component& a, const Component& b) {
    if (!(a.cls == b.cls)) return a.cls < b.cls;
    return a.multiplicity < b.multiplicity;
  });
}

std::string coeff_list(const DivisorClass& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) {
    if (i) out += ',';
    out += v.coeffs()[i].str();
  }
  return out + "]";
}

std::string key_of(const State& s) {
  std::string out;
  for (const auto& c : s) {
    if (!out.empty()) out += ' ';
    out += c.multiplicity.str() + "*" + coeff_list(c.cls);
  }
  return out;
}

// First k + 2 coordinates of 2s + f - e_1 - ... - e_6.
DivisorClass target_at_level(std::size_t k) {
  DivisorClass D(LatticeContext{k, Parity::Even});
  D[0] = 2;
  D[1] = 1;
  for (std::size_t i = 1; i <= k; ++i) D[i + 1] = 1;
  return D;
}

std::vector<State> initial_states() {
  const LatticeContext ctx{0, Parity::Even};
  auto C = [&](long long a, long long b, long long mult) {
    return Component{DivisorClass(ctx, {a, b}), Integer(mult)};
  };
  std::vector<State> out = {
      {C(2, 2, 1)},
      {C(2, 1, 1), C(0, 1, 1)},
      {C(1, 2, 1), C(1, 0, 1)},
      {C(1, 1, 1), C(1, 1, 1)},
      {C(1, 1, 2)},
      {C(1, 1, 1), C(1, 0, 1), C(0, 1, 1)},
      {C(1, 0, 1), C(1, 0, 1), C(0, 1, 1), C(0, 1, 1)},
      {C(1, 0, 2), C(0, 1, 1), C(0, 1, 1)},
      {C(1, 0, 1), C(1, 0, 1), C(0, 1, 2)},
      {C(1, 0, 2), C(0, 1, 2)},
  };
  for (auto& s : out) canonicalize(s);
  return out;
}

struct Move {
  std::vector<std::pair<std::size_t, int>> centre;  // component index, multiplicity at the point
  std::string describe() const {
    std::string out;
    for (const auto& [i, mu] : centre) {
      if (!out.empty()) out += '+';
      out += std::to_string(i);
      if (mu != 1) out += "^" + std::to_string(mu);
    }
    return out;
  }
};

Integer arithmetic_genus(const DivisorClass& v) {
  return 1 + (intersect(v, v) + intersect(v, canonical_class(v.context()))) / 2;
}

std::vector<Move> moves_for(const State& s, bool triple_points) {
  std::vector<Move> out;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    // Equal entries are interchangeable, so only the first of a run is used.
    if (i > 0 && s[i] == s[i - 1]) continue;
    out.push_back(Move{{{i, 1}}});
    if (arithmetic_genus(s[i].cls) >= 1) out.push_back(Move{{{i, 2}}});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersect(s[i].cls, s[j].cls) >= 1) out.push_back(Move{{{i, 1}, {j, 1}}});
  if (triple_points)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          if (intersect(s[i].cls, s[j].cls) >= 1 && intersect(s[i].cls, s[l].cls) >= 1 &&
              intersect(s[j].cls, s[l].cls) >= 1)
            out.push_back(Move{{{i, 1}, {j, 1}, {l, 1}}});
  return out;
}

State blow_up(const State& s, const Move& mv, std::size_t new_m) {
  const LatticeContext ctx{new_m, Parity::Even};
  State out;
  Integer e_mult = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    DivisorClass v = extend(s[i].cls, new_m);
    for (const auto& [idx, mu] : mv.centre)
      if (idx == i) {
        v[new_m + 1] = mu;
        e_mult += s[i].multiplicity * mu;
      }
    out.push_back(Component{v, s[i].multiplicity});
  }
  if (e_mult > 0) out.push_back(Component{DivisorClass::e(ctx, new_m), e_mult});
  canonicalize(out);
  return out;
}

std::string prune_reason(const State& s, std::size_t k) {
  const DivisorClass D = target_at_level(k);
  for (const auto& c : s) {
    if (intersect(c.cls, c.cls) < -2) return "pruned:self-intersection below -2";
    if (intersect(D, c.cls) < 0) return "pruned:target meets a component negatively";
  }
  return "";
}

bool is_cycle(const State& s) {
  const std::size_t n = s.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t nbrs = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Integer t = intersect(s[i].cls, s[j].cls);
      if (t > 1) return false;
      if (t == 1) ++nbrs;
    }
    if (nbrs != 2) return false;
  }
  return true;
}

CurveTypeTag tag_for(const State& s) {
  CurveTypeTag t;
  bool reduced = std::all_of(s.begin(), s.end(), [](const Component& c) { return c.multiplicity == 1; });
  if (s.size() == 1 && reduced) return t;
  if (!reduced) {
    t.kind = CurveKind::Other;
    t.label = "nonreduced";
    return t;
  }
  if (s.size() == 2 || is_cycle(s)) {
    t.kind = CurveKind::Polygon;
    t.sides = s.size();
    return t;
  }
  t.kind = CurveKind::Other;
  t.label = "reduced";
  return t;
}

// Analytic types sharing one combinatorial type. An integral curve may be
// smooth, nodal or cuspidal, two components may meet transversally or be
// tangent, and three may form a triangle or pass through a common point.
// Longer cycles and nonreduced curves have no further degenerations here.
std::vector<CurveTypeTag> analytic_types_for(const State& s) {
  CurveTypeTag base = tag_for(s);
  if (s.size() == 1 && base.kind == CurveKind::SmoothGenusOne)
    return {base, CurveTypeTag{CurveKind::Node211, 0, ""}, CurveTypeTag{CurveKind::Cusp31, 0, ""}};
  if (base.kind == CurveKind::Polygon && base.sides == 2)
    return {base, CurveTypeTag{CurveKind::Other, 0, "tangent"}};
  if (base.kind == CurveKind::Polygon && base.sides == 3)
    return {base, CurveTypeTag{CurveKind::Other, 0, "concurrent"}};
  return {base};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

DivisorClass rigid_second_order_class() { return target_at_level(kCensusM); }

SurfaceData instantiate_stratum(const StratumDescriptor& s) {
  const LatticeContext ctx = s.components.front().cls.context();
  SurfaceData generic = SurfaceData::generic(ctx);
  SurfaceData X(ctx, s.components, s.curve_type, generic.pic0(), generic.images());
  return X.with_kernel_relation(rigid_second_order_class());
}

CensusResult enumerate_rigid_second_order(const CensusOptions& options) {
  CensusResult res;
  std::vector<StratumDescriptor> combinatorial;
  std::ostream* audit = options.audit;
  std::vector<State> level = initial_states();
  for (const auto& s : level)
    if (audit) *audit << "{\"level\":0,\"child\":\"" << json_escape(key_of(s)) << "\",\"outcome\":\"seed\"}\n";
  res.stats["level0"] = level.size();

  for (std::size_t k = 0; k < kCensusM; ++k) {
    std::set<std::string> seen;
    std::vector<State> next;
    for (const auto& s : level) {
      const std::string parent = key_of(s);
      for (const auto& mv : moves_for(s, options.triple_points)) {
        State child = blow_up(s, mv, k + 1);
        std::string ckey = key_of(child);
        std::string outcome = prune_reason(child, k + 1);
        if (outcome.empty()) outcome = seen.insert(ckey).second ? "new" : "duplicate";
        if (outcome == "new") next.push_back(std::move(child));
        ++res.stats["moves"];
        ++res.stats[outcome];
        if (audit)
          *audit << "{\"level\":" << (k + 1) << ",\"parent\":\"" << json_escape(parent)
                 << "\",\"move\":\"" << mv.describe() << "\",\"child\":\"" << json_escape(ckey)
                 << "\",\"outcome\":\"" << outcome << "\"}\n";
      }
    }
    level = std::move(next);
    res.stats["level" + std::to_string(k + 1)] = level.size();
  }

  // Final filter: the target must miss the anticanonical curve and the walk
  // must certify it as a -2-curve once it lies in the kernel.
  const DivisorClass D = rigid_second_order_class();
  for (const auto& s : level) {
    std::string outcome = "accepted";
    for (const auto& c : s)
      if (intersect(D, c.cls) != 0) {
        outcome = "rejected:target meets the anticanonical curve";
        break;
      }
    StratumDescriptor desc{s, tag_for(s), key_of(s), 0, 0};
    if (outcome == "accepted") {
      try {
        SurfaceData X = instantiate_stratum(desc);
        CurveTest t = is_minus_two_class(X, D);
        if (!t.accepted) outcome = "rejected:" + t.reason;
      } catch (const Error& e) {
        outcome = std::string("rejected:") + e.what();
      }
    }
    ++res.stats[outcome.substr(0, outcome.find(':'))];
    if (audit)
      *audit << "{\"final\":\"" << json_escape(desc.key) << "\",\"outcome\":\"" << json_escape(outcome)
             << "\"}\n";
    if (outcome == "accepted") combinatorial.push_back(std::move(desc));
  }
  std::sort(combinatorial.begin(), combinatorial.end(),
            [](const StratumDescriptor& a, const StratumDescriptor& b) { return a.key < b.key; });

  // Orbits of the dot action of the reflections fixing D: an ineffective
  // root acts by reflection, an effective one fixes the stratum or does not act.
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < combinatorial.size(); ++i) index[combinatorial[i].key] = i;
  std::vector<std::size_t> parent(combinatorial.size());
  std::iota(parent.begin(), parent.end(), 0);
  const LatticeContext ctx{kCensusM, Parity::Even};
  for (std::size_t i = 0; i < combinatorial.size(); ++i) {
    const SurfaceData X = instantiate_stratum(combinatorial[i]);
    for (SimpleRootIndex g = 1; g <= kCensusM; ++g) {
      const DivisorClass sigma = simple_root(ctx, g);
      if (is_root_effective(X, sigma)) continue;
      State image;
      for (const auto& c : combinatorial[i].components)
        image.push_back(Component{reflect(c.cls, sigma), c.multiplicity});
      canonicalize(image);
      auto it = index.find(key_of(image));
      if (it == index.end()) {
        res.closure_defects.push_back(combinatorial[i].key + " under letter " + std::to_string(g));
        continue;
      }
      std::size_t a = find_root(parent, i), b = find_root(parent, it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::size_t> orbit_ids;
  for (std::size_t i = 0; i < combinatorial.size(); ++i) {
    std::size_t root = find_root(parent, i);
    auto [it, inserted] = orbit_ids.emplace(root, orbit_ids.size());
    combinatorial[i].combinatorial_orbit = it->second;
  }
  res.combinatorial_strata = combinatorial.size();
  res.combinatorial_orbit_count = orbit_ids.size();

  // Reflections preserve the analytic type, so an orbit of refined strata is
  // a combinatorial orbit together with one of its analytic types.
  std::map<std::pair<std::size_t, std::string>, std::size_t> refined_ids;
  for (const auto& c : combinatorial) {
    for (const auto& tag : analytic_types_for(c.components)) {
      StratumDescriptor r = c;
      r.curve_type = tag;
      r.key = c.key + " | " + tag.to_string();
      auto [it, inserted] =
          refined_ids.emplace(std::make_pair(c.combinatorial_orbit, tag.to_string()), refined_ids.size());
      r.orbit = it->second;
      res.strata.push_back(std::move(r));
    }
  }
  res.orbit_count = refined_ids.size();

  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& s : res.strata) {
    h = fnv1a(s.key + "#" + std::to_string(s.orbit) + ";", h);
  }
  std::ostringstream hex;
  hex << std::hex << h;
  res.digest = hex.str();
  return res;
}

}  // namespace ras

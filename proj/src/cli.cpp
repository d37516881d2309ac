#include "ras/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ras/classify.hpp"
#include "ras/enumerate.hpp"
#include "ras/equations.hpp"
#include "ras/error.hpp"
#include "ras/json_io.hpp"

namespace ras::cli {

namespace {

using nlohmann::json;
namespace rj = ras::json;

struct Config {
  std::string surface_path;
  std::string class_text;
  std::string x_text;
  std::string q_text;
  std::string char_p_text = "0";
  std::size_t max_iter = 0;
  std::string format = "json";
  std::optional<std::size_t> m;
  std::string parity = "even";
  std::string word_text;
  std::string audit_path;
  bool no_triple_points = false;
  bool summary_only = false;
};

struct Outcome {
  json body;
  int code = 0;
  // Records printed one per line ahead of the body.
  std::vector<json> lines;
};

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + what + ": " + e.what());
  }
}

SurfaceData load_surface(const Config& cfg, const json* class_json) {
  if (!cfg.surface_path.empty()) {
    std::ifstream in(cfg.surface_path);
    if (!in) throw ValidationError("cannot open surface file " + cfg.surface_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return rj::surface_from_json(parse_json_text(buf.str(), cfg.surface_path));
  }
  std::size_t m = 0;
  if (cfg.m) {
    m = *cfg.m;
  } else if (class_json && class_json->is_array() && class_json->size() >= 2) {
    m = class_json->size() - 2;
  } else {
    throw ValidationError("need --surface, --m, or a --class to infer the lattice");
  }
  return SurfaceData::generic(LatticeContext{m, parity_from_string(cfg.parity)});
}

json require_class_json(const Config& cfg) {
  if (cfg.class_text.empty()) throw ValidationError("this subcommand needs --class");
  return parse_json_text(cfg.class_text, "--class");
}

Integer parse_integer_flag(const std::string& text, const std::string& flag) {
  if (text.empty()) throw ValidationError("this subcommand needs " + flag);
  return rj::integer_from_json(json(text));
}

Outcome dispatch(const std::string& cmd, const Config& cfg) {
  const Limits limits{cfg.max_iter};
  Outcome out;

  if (cmd == "enumerate-rigid") {
    std::ofstream audit;
    CensusOptions opts;
    opts.triple_points = !cfg.no_triple_points;
    if (!cfg.audit_path.empty()) {
      audit.open(cfg.audit_path);
      if (!audit) throw ValidationError("cannot open audit file " + cfg.audit_path);
      opts.audit = &audit;
    }
    CensusResult r = enumerate_rigid_second_order(opts);
    out.body = rj::census_summary(r);
    out.body["record"] = "summary";
    if (!cfg.summary_only)
      for (const auto& s : r.strata) {
        json line = rj::to_json(s);
        line["record"] = "stratum";
        out.lines.push_back(std::move(line));
      }
    return out;
  }

  if (cmd == "elementary") {
    json cj = require_class_json(cfg);
    LatticeContext ctx{cj.size() >= 2 ? cj.size() - 2 : 0, parity_from_string(cfg.parity)};
    if (!cfg.surface_path.empty()) ctx = load_surface(cfg, &cj).context();
    DivisorClass D = rj::class_from_json(cj, ctx);
    DivisorClass T = elementary_transform(D);
    out.body = json{{"class", rj::to_json(T)}, {"parity", to_string(T.parity())}};
    return out;
  }

  json cj;
  const bool needs_class = cmd != "picr";
  if (needs_class) cj = require_class_json(cfg);
  SurfaceData X = load_surface(cfg, needs_class ? &cj : nullptr);
  std::optional<DivisorClass> D;
  if (needs_class) D = rj::class_from_json(cj, X.context());

  if (cmd == "minus-one" || cmd == "minus-two") {
    CurveTest t = cmd == "minus-one" ? is_minus_one_class(X, *D, limits) : is_minus_two_class(X, *D, limits);
    out.body = rj::to_json(t);
    out.code = t.accepted ? 0 : 1;
  } else if (cmd == "nef") {
    NefResult r = is_nef(X, *D, limits);
    out.body = rj::to_json(r);
    out.code = r.nef ? 0 : 1;
  } else if (cmd == "effective") {
    EffectivityResult r = is_effective(X, *D, limits);
    out.body = rj::to_json(r);
    out.code = r.effective ? 0 : 1;
  } else if (cmd == "h0") {
    EffectivityResult r = is_effective(X, *D, limits);
    out.body = json{{"h0", rj::to_json(h0(X, *D, limits))},
                    {"decomposition", rj::to_json(r.decomposition)},
                    {"witness", rj::to_json(r.witness)}};
  } else if (cmd == "pencil") {
    out.body = rj::to_json(classify_pencil(X, *D, limits));
  } else if (cmd == "integrality") {
    out.body = rj::to_json(generic_integrality(X, *D, limits));
  } else if (cmd == "moduli") {
    Integer x = parse_integer_flag(cfg.x_text, "--x");
    Integer p = parse_integer_flag(cfg.char_p_text, "--char-p");
    out.body = rj::to_json(moduli_report(X, *D, x, p, limits));
  } else if (cmd == "interpret") {
    out.body = rj::to_json(interpret(X, *D));
  } else if (cmd == "reduce") {
    ChamberResult r = reduce_to_chamber(X, *D, limits);
    out.body = rj::to_json(r);
    out.code = r.success ? 0 : 1;
  } else if (cmd == "root") {
    out.body = rj::to_json(classify_root(*D, cfg.max_iter));
  } else if (cmd == "twist") {
    if (cfg.q_text.empty()) throw ValidationError("twist needs --q");
    AbGroup::Element q = rj::element_from_json(parse_json_text(cfg.q_text, "--q"), X.pic0());
    out.body = json{{"surface", rj::to_json(twist_action(X, *D, q))}};
  } else if (cmd == "picr") {
    out.body = json{{"surface", rj::to_json(relative_pic_transform(X))}};
  } else if (cmd == "orbit") {
    auto orbit = weyl_orbit(*D);
    json list = json::array();
    for (const auto& v : orbit) list.push_back(rj::to_json(v));
    out.body = json{{"size", orbit.size()}, {"orbit", list}};
  } else if (cmd == "dot") {
    ReflectionWord w = rj::word_from_json(parse_json_text(cfg.word_text.empty() ? "[]" : cfg.word_text, "--word"));
    DotActionResult r = apply_dot_action(X, w, limits);
    out.body = json{{"surface", rj::to_json(r.surface)}, {"applied", rj::to_json(r.applied)}};
  } else {
    throw ValidationError("unknown subcommand " + cmd);
  }
  if (D) out.body["class"] = rj::to_json(*D);
  return out;
}

void print_human(const json& body, std::ostream& out) {
  for (auto it = body.begin(); it != body.end(); ++it) {
    out << it.key() << ": ";
    if (it->is_string())
      out << it->get<std::string>();
    else
      out << it->dump();
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational anticanonical surface toolkit", "ras"};
  app.require_subcommand(1);
  Config cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"minus-one", "test whether a class is a -1-curve"},
      {"minus-two", "test whether a class is a -2-curve"},
      {"nef", "test nefness"},
      {"effective", "test effectiveness and decompose"},
      {"h0", "dimension of the space of global sections"},
      {"pencil", "classify genus one pencils"},
      {"integrality", "generic integrality verdict"},
      {"moduli", "moduli dimension and rationality report"},
      {"interpret", "read off an equation report"},
      {"reduce", "walk a class to the fundamental chamber"},
      {"root", "classify a class as a root"},
      {"elementary", "apply the elementary transformation"},
      {"twist", "apply a twist to the restriction map"},
      {"picr", "relative Picard transform"},
      {"enumerate-rigid", "census of rigid second-order strata"},
      {"orbit", "finite Weyl group orbit"},
      {"dot", "apply the dot action of a reflection word"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--surface", cfg.surface_path, "surface JSON file");
    sub->add_option("--class", cfg.class_text, "class as a JSON array [n, d, r1, ...]");
    sub->add_option("--x", cfg.x_text, "integer parameter x");
    sub->add_option("--q", cfg.q_text, "Pic^0 element as a JSON array");
    sub->add_option("--char-p", cfg.char_p_text, "characteristic");
    sub->add_option("--max-iter", cfg.max_iter, "iteration cap for walks");
    sub->add_option("--format", cfg.format, "json or human")->check(CLI::IsMember({"json", "human"}));
    sub->add_option("--m", cfg.m, "number of blown-up points when no surface is given");
    sub->add_option("--parity", cfg.parity, "parity when no surface is given")->check(CLI::IsMember({"even", "odd"}));
    sub->add_option("--word", cfg.word_text, "reflection word as a JSON array");
    sub->add_option("--audit", cfg.audit_path, "write the census generation log here");
    sub->add_flag("--no-triple-points", cfg.no_triple_points, "census without triple-point blowups");
    sub->add_flag("--summary-only", cfg.summary_only, "print only the census summary record");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "ras: " << e.what() << '\n';
    return 2;
  }

  std::string cmd;
  for (const auto* sub : app.get_subcommands()) cmd = sub->get_name();
  try {
    Outcome o = dispatch(cmd, cfg);
    json body = json{{"format", rj::kFormatVersion}, {"command", cmd}};
    body.update(o.body);
    for (const auto& line : o.lines) out << line.dump() << '\n';
    if (cfg.format == "human")
      print_human(body, out);
    else
      out << body.dump() << '\n';
    return o.code;
  } catch (const IterationLimit& e) {
    err << "ras: " << e.what() << " after " << e.steps().size() << " reflections\n";
  } catch (const Error& e) {
    err << "ras: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "ras: bad JSON: " << e.what() << '\n';
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace ras::cli

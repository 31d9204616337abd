#include "coaf/io.hpp"
#include "coaf/lift.hpp"
#include "coaf/random.hpp"
#include "coaf/suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using namespace coaf;

constexpr int kExitPass = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string format = "json";
  std::string out;
  std::string input;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string kind = "body";
  int dim = 2;
  int n = 2;
  std::int64_t bound = 4;
  std::string t;
  std::string identity = "all";
  std::vector<std::string> heights;
  std::optional<int> trials;
  std::vector<std::string> suites;
};

Json read_input(const std::string& path) {
  if (path == "-") {
    try {
      return Json::parse(std::cin);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("stdin: ") + e.what());
    }
  }
  return read_json_file(path);
}

bool is_coconvex_family(const Json& j) { return j.is_object() && j.contains("cone") && j.contains("generators"); }

void emit(const Options& opt, const Json& j, const std::string& csv) {
  const std::string text = opt.format == "csv" ? csv : dump(j);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(opt.out, text);
  }
}

std::string csv_scalar(const std::string& header, const Rational& value) { return header + "\n" + to_string(value) + "\n"; }

std::string csv_polynomial(const Polynomial& p) {
  std::ostringstream out;
  for (int i = 0; i < p.nvars(); ++i) out << "exp_" << i + 1 << ',';
  out << "coeff\n";
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (int a : it->first) out << a << ',';
    out << to_string(it->second) << '\n';
  }
  return out.str();
}

std::string csv_forms(const AfForms& f, const Signature& s) {
  std::ostringstream out;
  out << "form,row,col,value\n";
  for (const auto& [name, form] : {std::pair<const char*, const Form*>{"B", &f.bilinear}, {"Q", &f.quadratic}}) {
    for (Eigen::Index i = 0; i < form->size(); ++i) {
      for (Eigen::Index j = 0; j < form->size(); ++j) out << name << ',' << i << ',' << j << ',' << to_string((*form)(i, j)) << '\n';
    }
  }
  out << "signature,pos,neg,zero\n";
  out << "Q," << s.pos << ',' << s.neg << ',' << s.zero << '\n';
  return out.str();
}

int cmd_gen(const Options& opt) {
  if (opt.format != "json") throw InputError("gen writes JSON only");
  SplitMix64 rng(opt.seed.value_or(1));
  Json j;
  if (opt.kind == "body") {
    j = to_json(gen_convex_body(rng, opt.dim, opt.bound));
  } else if (opt.kind == "cone") {
    j = to_json(gen_cone(rng, opt.dim, opt.bound));
  } else if (opt.kind == "coconvex") {
    const Cone c = gen_cone(rng, opt.dim, opt.bound);
    j = to_json(gen_coconvex_body(rng, c, opt.bound));
  } else if (opt.kind == "family") {
    j = to_json(gen_convex_family(rng, opt.dim, opt.n, opt.bound));
  } else {
    j = to_json(gen_coconvex_family(rng, opt.dim, opt.n, opt.bound));
  }
  emit(opt, j, "");
  return kExitPass;
}

int cmd_volume(const Options& opt) {
  const Json in = read_input(opt.input);
  Rational v;
  if (in.contains("cone")) {
    const CoconvexBody body = coconvex_from_json(in);
    std::optional<Truncation> tr;
    if (!opt.t.empty()) tr = Truncation{body.cone().xi(), parse_rational(opt.t)};
    v = co_volume(body, tr);
  } else {
    const Polyhedron p = polyhedron_from_json(in);
    if (!p.is_bounded()) throw InputError("volume of an unbounded polyhedron");
    v = volume(p);
  }
  emit(opt, Json{{"volume", to_string(v)}}, csv_scalar("volume", v));
  return kExitPass;
}

int cmd_mixedvol(const Options& opt) {
  const Json in = read_input(opt.input);
  const Json& list = in.is_array() ? in : (in.contains("bodies") ? in["bodies"] : in.value("generators", Json()));
  if (!list.is_array()) throw InputError("mixedvol expects an array of bodies, {\"bodies\": [...]} or a family");
  std::vector<Polyhedron> bodies;
  for (const auto& b : list) bodies.push_back(polyhedron_from_json(b));
  const Rational mv = mixed_volume(bodies);
  emit(opt, Json{{"mixed_volume", to_string(mv)}}, csv_scalar("mixed_volume", mv));
  return kExitPass;
}

int cmd_volpoly(const Options& opt) {
  const Json in = read_input(opt.input);
  const Polynomial p = is_coconvex_family(in) ? co_volume_polynomial(coconvex_family_from_json(in))
                                              : volume_polynomial(convex_family_from_json(in));
  emit(opt, to_json(p), csv_polynomial(p));
  return kExitPass;
}

int emit_forms(const Options& opt, const AfForms& f) {
  const Signature s = signature(f.quadratic);
  emit(opt, Json{{"B", to_json(f.bilinear)}, {"Q", to_json(f.quadratic)},
                 {"Q_polynomial", to_json(f.quadratic_polynomial)}, {"signature", to_json(s)}},
       csv_forms(f, s));
  return kExitPass;
}

int cmd_afform(const Options& opt) { return emit_forms(opt, af_form(convex_family_from_json(read_input(opt.input)))); }

int cmd_co_afform(const Options& opt) {
  return emit_forms(opt, co_af_form(coconvex_family_from_json(read_input(opt.input))));
}

int cmd_signature(const Options& opt) {
  const Signature s = signature(form_from_json(read_input(opt.input)));
  emit(opt, to_json(s), "pos,neg,zero\n" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," +
                            std::to_string(s.zero) + "\n");
  return kExitPass;
}

int cmd_lift_verify(const Options& opt) {
  const CoconvexFamily fam = coconvex_family_from_json(read_input(opt.input));
  std::optional<std::vector<Rational>> heights;
  if (!opt.heights.empty()) {
    heights.emplace();
    for (const auto& h : opt.heights) heights->push_back(parse_rational(h));
  }
  const LiftedFamily lf = lift(fam, heights);
  std::vector<IdentityReport> reports;
  if (opt.identity == "all" || opt.identity == "V") reports.push_back(verify_identity_V(lf));
  if (opt.identity == "all" || opt.identity == "Q") reports.push_back(verify_identity_Q(lf));
  if (opt.identity == "all" || opt.identity == "signature") reports.push_back(verify_signature_argument(lf));
  Json arr = Json::array();
  std::ostringstream csv;
  csv << "identity,status,samples\n";
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    csv << r.identity << ',' << (r.ok ? "ok" : "fail") << ',' << r.samples << '\n';
    ok = ok && r.ok;
  }
  emit(opt, Json{{"lift", to_json(lf)}, {"reports", arr}}, csv.str());
  return ok ? kExitPass : kExitPropertyFailure;
}

int cmd_suite(const Options& opt, const CLI::App& sub) {
  ExperimentConfig cfg = opt.config.empty() ? ExperimentConfig{} : config_from_json(read_json_file(opt.config));
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.trials) cfg.n_trials = *opt.trials;
  if (sub.count("--dim")) cfg.dim = opt.dim;
  if (sub.count("--n")) cfg.n_generators = opt.n;
  if (sub.count("--bound")) cfg.coordinate_bound = opt.bound;
  if (!opt.suites.empty()) cfg.suites = opt.suites;
  const TrialReport report = run_suite(cfg);
  emit(opt, to_json(report), to_csv(report));
  return report.all_pass() ? kExitPass : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed volumes, Aleksandrov-Fenchel forms and coconvex bodies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", COAF_VERSION);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out, "Write output to this file instead of stdout");

  auto input = [&](CLI::App* s) { s->add_option("input", opt.input, "JSON input file, or - for stdin")->required(); };

  auto* gen = app.add_subcommand("gen", "Emit a random body, cone, coconvex body or family");
  gen->add_option("kind", opt.kind, "What to generate")
      ->check(CLI::IsMember({"body", "cone", "coconvex", "family", "cofamily"}));
  gen->add_option("--dim", opt.dim, "Ambient dimension")->check(CLI::Range(2, 4));
  gen->add_option("--n", opt.n, "Number of family generators")->check(CLI::Range(1, 4));
  gen->add_option("--bound", opt.bound, "Coordinate bound")->check(CLI::PositiveNumber);
  gen->add_option("--seed", opt.seed, "Random seed (default 1)");

  auto* vol = app.add_subcommand("volume", "Volume of a polytope or co-volume of a coconvex body");
  input(vol);
  vol->add_option("--t", opt.t, "Truncation height for coconvex bodies");

  auto* mv = app.add_subcommand("mixedvol", "Mixed volume of d bodies");
  input(mv);
  auto* vp = app.add_subcommand("volpoly", "Volume polynomial of a convex or coconvex family");
  input(vp);
  auto* af = app.add_subcommand("afform", "Aleksandrov-Fenchel forms of a convex family");
  input(af);
  auto* caf = app.add_subcommand("co-afform", "Aleksandrov-Fenchel forms of a coconvex family");
  input(caf);
  auto* sig = app.add_subcommand("signature", "Signature of a symmetric form");
  input(sig);

  auto* lv = app.add_subcommand("lift-verify", "Verify the lifting identities for a coconvex family");
  input(lv);
  lv->add_option("--identity", opt.identity, "Which identity to check")
      ->check(CLI::IsMember({"all", "V", "Q", "signature"}));
  lv->add_option("--heights", opt.heights, "Heights s_i of the lifted marked points");

  auto* suite = app.add_subcommand("suite", "Run the seeded property suites");
  suite->add_option("--config", opt.config, "ExperimentConfig JSON file");
  suite->add_option("--seed", opt.seed, "Override the seed");
  suite->add_option("--trials", opt.trials, "Override the number of trials");
  suite->add_option("--dim", opt.dim, "Override the dimension");
  suite->add_option("--n", opt.n, "Override the number of generators");
  suite->add_option("--bound", opt.bound, "Override the coordinate bound");
  suite->add_option("--suite", opt.suites, "Suites to run");

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*gen) return cmd_gen(opt);
    if (*vol) return cmd_volume(opt);
    if (*mv) return cmd_mixedvol(opt);
    if (*vp) return cmd_volpoly(opt);
    if (*af) return cmd_afform(opt);
    if (*caf) return cmd_co_afform(opt);
    if (*sig) return cmd_signature(opt);
    if (*lv) return cmd_lift_verify(opt);
    return cmd_suite(opt, *suite);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << '\n';
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitInputError;
}

#include "coaf/suite.hpp"

#include "coaf/corollary.hpp"
#include "coaf/lift.hpp"
#include "coaf/random.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>

namespace coaf {

namespace {

enum Stream : std::uint64_t {
  kConvexFamily = 0,
  kCoconvexFamily = 1,
  kKernel = 2,
  kAf = 3,
  kCoAf = 4,
  kRbm = 5,
  kGrbm = 6,
  kMink1 = 7,
  kMink2 = 8,
};

constexpr int kPairs = 10;
constexpr int kCorollaryPairs = 3;

SplitMix64 trial_stream(const ExperimentConfig& cfg, int trial, Stream purpose) {
  return SplitMix64::stream(cfg.seed, (static_cast<std::uint64_t>(trial) << 8) | purpose);
}

bool selected(const ExperimentConfig& cfg, const std::string& suite) {
  return std::find(cfg.suites.begin(), cfg.suites.end(), suite) != cfg.suites.end();
}

class Recorder {
 public:
  explicit Recorder(const ExperimentConfig& cfg) {
    for (const auto& s : all_suites()) {
      if (!selected(cfg, s)) continue;
      add(s);
      if (s == "af" || s == "co_af") add(s + "_signature");
    }
  }

  void record(const std::string& name, bool ok, int trial, Json counterexample = nullptr) {
    auto& p = props_[index_.at(name)];
    ++p.trials;
    if (ok) {
      ++p.pass;
      return;
    }
    ++p.fail;
    if (p.counterexamples.size() < kMaxCounterexamples) {
      counterexample["trial"] = trial;
      p.counterexamples.push_back(std::move(counterexample));
    }
  }

  void fail_all(const std::vector<std::string>& names, int trial, const std::string& error) {
    for (const auto& n : names) {
      if (index_.count(n)) record(n, false, trial, Json{{"error", error}});
    }
  }

  std::vector<PropertyStats> take() { return std::move(props_); }

 private:
  void add(const std::string& name) {
    index_[name] = props_.size();
    props_.push_back({name});
  }

  std::vector<PropertyStats> props_;
  std::map<std::string, std::size_t> index_;
};

void run_kernel(const ExperimentConfig& cfg, int trial, Recorder& rec) {
  auto rng = trial_stream(cfg, trial, kKernel);
  std::vector<Polyhedron> gens;
  for (int i = 0; i < cfg.n_generators; ++i) gens.push_back(gen_convex_body(rng, cfg.dim, cfg.coordinate_bound));
  const auto fam = make_convex_family(gens, std::vector<Vector>(static_cast<std::size_t>(cfg.dim - 2),
                                                                Vector::Ones(cfg.n_generators)));
  const Polynomial by_polarization = volume_polynomial(fam);
  const auto pts = interpolation_points<Rational>(cfg.n_generators, cfg.dim);
  std::vector<Rational> vals;
  for (const auto& lambda : pts) vals.push_back(volume(combination(fam, lambda)));
  const Polynomial by_interpolation = interpolate(cfg.n_generators, cfg.dim, pts, vals);
  const bool ok = by_polarization == by_interpolation;
  rec.record("kernel", ok, trial,
             ok ? Json(nullptr)
                : Json{{"family", to_json(fam)},
                       {"polarization", to_json(by_polarization)},
                       {"interpolation", to_json(by_interpolation)}});
}

void run_af(const ExperimentConfig& cfg, int trial, const ConvexFamily& fam, Recorder& rec) {
  auto rng = trial_stream(cfg, trial, kAf);
  const AfForms forms = af_form(fam);
  const Signature sig = signature(forms.quadratic);
  const bool sig_ok = sig.pos == 1;
  rec.record("af_signature", sig_ok, trial,
             sig_ok ? Json(nullptr)
                    : Json{{"family", to_json(fam)}, {"q", to_json(forms.quadratic)}, {"signature", to_json(sig)}});
  std::optional<Json> bad;
  for (int k = 0; k < kPairs && !bad; ++k) {
    const Vector u1 = gen_positive_vector(rng, fam.size(), cfg.coordinate_bound);
    const Vector u2 = gen_positive_vector(rng, fam.size(), cfg.coordinate_bound);
    if (!reversed_cs_check(forms.bilinear, u1, u2)) {
      bad = Json{{"family", to_json(fam)}, {"b", to_json(forms.bilinear)}, {"u1", to_json(u1)}, {"u2", to_json(u2)}};
    }
  }
  rec.record("af", !bad, trial, bad.value_or(nullptr));
}

void run_co_af(const ExperimentConfig& cfg, int trial, const CoconvexFamily& fam, const Polynomial& vol,
               const SuiteHooks& hooks, Recorder& rec) {
  auto rng = trial_stream(cfg, trial, kCoAf);
  AfForms forms = af_forms(vol, fam.marked);
  if (hooks.corrupt_co_af) hooks.corrupt_co_af(forms);
  const Signature sig = signature(forms.quadratic);
  const bool sig_ok = sig.neg == 0;
  rec.record("co_af_signature", sig_ok, trial,
             sig_ok ? Json(nullptr)
                    : Json{{"family", to_json(fam)}, {"q", to_json(forms.quadratic)}, {"signature", to_json(sig)}});
  std::optional<Json> bad;
  for (int k = 0; k < kPairs && !bad; ++k) {
    const Vector u1 = gen_vector(rng, fam.size(), cfg.coordinate_bound);
    const Vector u2 = gen_vector(rng, fam.size(), cfg.coordinate_bound);
    if (!cs_check(forms.bilinear, u1, u2)) {
      bad = Json{{"family", to_json(fam)}, {"b", to_json(forms.bilinear)}, {"u1", to_json(u1)}, {"u2", to_json(u2)}};
    }
  }
  rec.record("co_af", !bad, trial, bad.value_or(nullptr));
}

template <typename Check>
void run_pairs(const ExperimentConfig& cfg, int trial, Stream purpose, const std::string& name,
               const CoconvexFamily& fam, Recorder& rec, Check check) {
  auto rng = trial_stream(cfg, trial, purpose);
  std::optional<Json> bad;
  for (int k = 0; k < kCorollaryPairs && !bad; ++k) {
    const Vector u = gen_positive_vector(rng, fam.size(), cfg.coordinate_bound);
    const Vector v = gen_positive_vector(rng, fam.size(), cfg.coordinate_bound);
    CheckResult r = check(rng, u, v);
    if (!r.ok) {
      r.counterexample["family"] = to_json(fam);
      bad = std::move(r.counterexample);
    }
  }
  rec.record(name, !bad, trial, bad.value_or(nullptr));
}

void run_corollaries(const ExperimentConfig& cfg, int trial, const CoconvexFamily& fam, const Polynomial& vol,
                     Recorder& rec) {
  const int d = cfg.dim;
  const int n = fam.size();
  if (selected(cfg, "rbm")) {
    const std::vector<Rational> ts{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
    run_pairs(cfg, trial, kRbm, "rbm", fam, rec,
              [&](SplitMix64&, const Vector& u, const Vector& v) { return check_reversed_bm(vol, u, v, ts); });
  }
  if (selected(cfg, "grbm")) {
    run_pairs(cfg, trial, kGrbm, "grbm", fam, rec, [&](SplitMix64& rng, const Vector& u, const Vector& v) {
      std::vector<int> ks{1};
      if (d - 2 != 1 && d - 2 > 0) ks.push_back(d - 2);
      for (int k : ks) {
        std::vector<Vector> dirs;
        for (int i = 0; i < k; ++i) {
          dirs.push_back(i < static_cast<int>(fam.marked.size()) ? fam.marked[static_cast<std::size_t>(i)]
                                                                 : gen_positive_vector(rng, n, cfg.coordinate_bound));
        }
        CheckResult r = check_generalized_reversed_bm(vol, dirs, u, v);
        if (!r.ok) return r;
      }
      return CheckResult{};
    });
  }
  if (selected(cfg, "mink1")) {
    run_pairs(cfg, trial, kMink1, "mink1", fam, rec, [&](SplitMix64&, const Vector& u, const Vector& v) {
      return check_first_reversed_minkowski(vol, u, v);
    });
  }
  if (selected(cfg, "mink2")) {
    run_pairs(cfg, trial, kMink2, "mink2", fam, rec, [&](SplitMix64&, const Vector& u, const Vector& v) {
      return check_second_reversed_minkowski(vol, u, v);
    });
  }
}

void run_lift(const ExperimentConfig& cfg, int trial, const CoconvexFamily& fam, Recorder& rec) {
  const LiftedFamily lf = lift(fam);
  const std::vector<std::pair<std::string, std::function<IdentityReport()>>> checks = {
      {"lift_V", [&] { return verify_identity_V(lf); }},
      {"lift_Q", [&] { return verify_identity_Q(lf); }},
      {"lift_sig", [&] { return verify_signature_argument(lf); }},
  };
  for (const auto& [name, run] : checks) {
    if (!selected(cfg, name)) continue;
    const IdentityReport r = run();
    rec.record(name, r.ok, trial,
               r.ok ? Json(nullptr) : Json{{"family", to_json(fam)}, {"report", to_json(r)}});
  }
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names = {"kernel", "af",    "co_af",  "rbm",    "grbm",
                                                 "mink1",  "mink2", "lift_V", "lift_Q", "lift_sig"};
  return names;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim > 4) throw InputError("config: dim must be 2, 3 or 4");
  if (cfg.n_generators < 1 || cfg.n_generators > 4) throw InputError("config: n_generators must be in 1..4");
  if (cfg.n_trials < 1) throw InputError("config: n_trials must be at least 1");
  if (cfg.coordinate_bound < 1) throw InputError("config: coordinate_bound must be positive");
  if (cfg.suites.empty()) throw InputError("config: no suites selected");
  for (const auto& s : cfg.suites) {
    if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
      throw InputError("config: unknown suite \"" + s + "\"");
    }
  }
}

Json to_json(const ExperimentConfig& cfg) {
  return Json{{"dim", cfg.dim},
              {"n_generators", cfg.n_generators},
              {"n_trials", cfg.n_trials},
              {"seed", cfg.seed},
              {"coordinate_bound", cfg.coordinate_bound},
              {"suite", cfg.suites}};
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    if (j.contains("dim")) cfg.dim = j["dim"].get<int>();
    if (j.contains("n_generators")) cfg.n_generators = j["n_generators"].get<int>();
    if (j.contains("n_trials")) cfg.n_trials = j["n_trials"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("coordinate_bound")) cfg.coordinate_bound = j["coordinate_bound"].get<std::int64_t>();
    if (j.contains("suite")) {
      const Json& s = j["suite"];
      if (s.is_string() && s.get<std::string>() == "all") {
        cfg.suites = all_suites();
      } else {
        cfg.suites = s.get<std::vector<std::string>>();
      }
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

bool TrialReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyStats& p) { return p.fail == 0; });
}

TrialReport run_suite(const ExperimentConfig& cfg, const SuiteHooks& hooks) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(cfg);
  const bool want_convex = selected(cfg, "af");
  const std::vector<std::string> co_suites = {"co_af", "rbm", "grbm", "mink1", "mink2", "lift_V", "lift_Q", "lift_sig"};
  const bool want_coconvex =
      std::any_of(co_suites.begin(), co_suites.end(), [&](const std::string& s) { return selected(cfg, s); });

  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    if (selected(cfg, "kernel")) {
      try {
        run_kernel(cfg, trial, rec);
      } catch (const std::exception& e) {
        rec.fail_all({"kernel"}, trial, e.what());
      }
    }
    if (want_convex) {
      try {
        auto rng = trial_stream(cfg, trial, kConvexFamily);
        const auto fam = gen_convex_family(rng, cfg.dim, cfg.n_generators, cfg.coordinate_bound);
        run_af(cfg, trial, fam, rec);
      } catch (const std::exception& e) {
        rec.fail_all({"af", "af_signature"}, trial, e.what());
      }
    }
    if (want_coconvex) {
      std::optional<CoconvexFamily> fam;
      try {
        auto rng = trial_stream(cfg, trial, kCoconvexFamily);
        fam = gen_coconvex_family(rng, cfg.dim, cfg.n_generators, cfg.coordinate_bound);
        const Polynomial vol = co_volume_polynomial(*fam);
        if (selected(cfg, "co_af")) run_co_af(cfg, trial, *fam, vol, hooks, rec);
        run_corollaries(cfg, trial, *fam, vol, rec);
      } catch (const std::exception& e) {
        rec.fail_all({"co_af", "co_af_signature", "rbm", "grbm", "mink1", "mink2"}, trial, e.what());
      }
      if (fam) {
        try {
          run_lift(cfg, trial, *fam, rec);
        } catch (const std::exception& e) {
          rec.fail_all({"lift_V", "lift_Q", "lift_sig"}, trial, e.what());
        }
      }
    }
  }

  TrialReport report;
  report.config = cfg;
  report.properties = rec.take();
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const TrialReport& report, bool include_wall_time) {
  Json props = Json::object();
  for (const auto& p : report.properties) {
    props[p.name] = Json{{"trials", p.trials}, {"pass", p.pass}, {"fail", p.fail}, {"counterexamples", p.counterexamples}};
  }
  Json j{{"version", COAF_VERSION},
         {"config", to_json(report.config)},
         {"status", report.all_pass() ? "pass" : "fail"},
         {"properties", props}};
  if (include_wall_time) j["wall_time_seconds"] = report.wall_time_seconds;
  return j;
}

std::string to_csv(const TrialReport& report) {
  std::ostringstream out;
  out << "property,trials,pass,fail\n";
  for (const auto& p : report.properties) out << p.name << ',' << p.trials << ',' << p.pass << ',' << p.fail << '\n';
  return out.str();
}

}  // namespace coaf

// syt: exact and Monte Carlo descent statistics of standard Young tableaux.
//
// Exit codes: 0 success, 1 usage error, 2 domain error (bad shape, cap
// exceeded, ...), 3 internal invariant failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sytkit/errors.hpp"
#include "sytkit/json_io.hpp"
#include "sytkit/moments.hpp"
#include "sytkit/sampling.hpp"
#include "sytkit/selftest.hpp"
#include "sytkit/version.hpp"

namespace {

using sytkit::json;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void emit_envelope(const std::string& command, json input, json result,
                   double ms) {
  const json envelope{{"command", command},
                      {"version", sytkit::kVersion},
                      {"input", std::move(input)},
                      {"result", std::move(result)},
                      {"timing_ms", ms}};
  std::cout << envelope.dump(2) << "\n";
}

// "des" | "maj" | "power:X" | "table:FILE", where FILE holds a JSON array of
// integers or "p/q" strings, giving f(1), f(2), ....
sytkit::DescentFunction parse_stat(const std::string& spec) {
  constexpr std::string_view prefix = "table:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string path = spec.substr(prefix.size());
    std::ifstream in(path);
    if (!in) throw sytkit::domain_error("cannot open weight table " + path);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw sytkit::domain_error("weight table " + path + ": " + e.what());
    }
    if (!j.is_array())
      throw sytkit::domain_error("weight table must be a JSON array");
    std::vector<sytkit::Rational> values;
    for (const auto& item : j) {
      if (item.is_number_integer())
        values.emplace_back(item.get<std::int64_t>());
      else if (item.is_string())
        values.push_back(sytkit::rational_parse(item.get<std::string>()));
      else
        throw sytkit::domain_error(
            "weight table entries must be integers or 'p/q' strings");
    }
    return sytkit::DescentFunction::table(std::move(values));
  }
  return sytkit::DescentFunction::parse(spec);
}

struct Flags {
  std::string shape;
  std::string mu;
  std::string stat = "maj";
  std::string method = "mn";
  std::string format = "json";
  std::string csv_out;
  std::string growth;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  long long count = 1;
  long long samples = 1000;
  double epsilon = 0.1;
  double delta = 0.5;
  double deviation = 0;  // 0 = derive from epsilon
  int workers = 1;
  int max_n = 7;
  long long cap = 0;  // 0 = default
  bool omega = false;
  bool emit_tableaux = false;
  bool no_sampling = false;
};

sytkit::EnumerationOptions enum_options(const Flags& flags) {
  sytkit::EnumerationOptions opts;
  if (flags.cap > 0) opts.cap = flags.cap;
  return opts;
}

int run_count(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  json result{{"count", sytkit::count_syt(lam).str()}};
  emit_envelope("count", json{{"shape", flags.shape}}, std::move(result),
                timer.ms());
  return 0;
}

int run_enumerate(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  if (flags.format == "text") {
    sytkit::for_each_syt(
        lam,
        [&](const sytkit::StandardTableau& t) {
          std::cout << t.to_text() << "\n";
          return true;
        },
        enum_options(flags));
    return 0;
  }
  json tableaux = json::array();
  sytkit::for_each_syt(
      lam,
      [&](const sytkit::StandardTableau& t) {
        tableaux.push_back(sytkit::tableau_to_json(t));
        return true;
      },
      enum_options(flags));
  json result{{"shape", sytkit::partition_to_json(lam)},
              {"count", sytkit::count_syt(lam).str()},
              {"tableaux", std::move(tableaux)}};
  emit_envelope("enumerate", json{{"shape", flags.shape}}, std::move(result),
                timer.ms());
  return 0;
}

int run_genfun(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  const auto gf = sytkit::maj_generating_function(lam);
  if (flags.format == "pretty") {
    std::cout << gf.pretty() << "\n";
    return 0;
  }
  emit_envelope("genfun", json{{"shape", flags.shape}},
                sytkit::qpolynomial_to_json(gf), timer.ms());
  return 0;
}

int run_char(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  const auto mu = sytkit::Partition::parse(flags.mu);
  sytkit::Integer chi;
  if (flags.method == "mn") {
    chi = sytkit::mn_character(lam, mu);
  } else if (flags.method == "descent-weights") {
    chi = sytkit::character_via_descent_weights(lam, mu, enum_options(flags));
  } else {
    throw sytkit::domain_error("unknown method '" + flags.method +
                               "' (use mn or descent-weights)");
  }
  const sytkit::Rational normalized(chi, sytkit::count_syt(lam));
  json result{{"chi", sytkit::integer_to_json(chi)},
              {"normalized", sytkit::rational_str(normalized)},
              {"method", flags.method}};
  emit_envelope("char", json{{"shape", flags.shape}, {"mu", flags.mu}},
                std::move(result), timer.ms());
  return 0;
}

int run_moments(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  const auto f = parse_stat(flags.stat);
  const auto report = sytkit::moment_report(lam, f);
  emit_envelope("moments", json{{"shape", flags.shape}, {"stat", flags.stat}},
                sytkit::moment_report_to_json(report), timer.ms());
  return 0;
}

int run_sample(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  const sytkit::RandomSource base(flags.seed, flags.stream);

  if (flags.emit_tableaux) {
    // one tableau JSON object per line
    for (long long idx = 0; idx < flags.count; ++idx) {
      auto rng = base.substream(static_cast<std::uint64_t>(idx));
      std::cout << sytkit::tableau_to_json(sytkit::sample_syt(lam, rng)).dump()
                << "\n";
    }
    return 0;
  }

  const auto f = parse_stat(flags.stat);
  if (f.exact()) {
    const auto values =
        sytkit::sample_statistics(lam, f, flags.count, base, flags.workers);
    if (flags.format == "csv") {
      for (const auto& v : values) std::cout << sytkit::rational_str(v) << "\n";
      return 0;
    }
    json arr = json::array();
    for (const auto& v : values) {
      if (denominator(v) == 1 &&
          numerator(v) >= std::numeric_limits<std::int64_t>::min() &&
          numerator(v) <= std::numeric_limits<std::int64_t>::max())
        arr.push_back(numerator(v).convert_to<std::int64_t>());
      else
        arr.push_back(sytkit::rational_str(v));
    }
    emit_envelope("sample",
                  json{{"shape", flags.shape},
                       {"stat", flags.stat},
                       {"count", flags.count},
                       {"seed", flags.seed},
                       {"stream", flags.stream}},
                  json{{"values", std::move(arr)}}, timer.ms());
    return 0;
  }

  const auto values =
      sytkit::sample_statistics_real(lam, f, flags.count, base, flags.workers);
  if (flags.format == "csv") {
    char buf[32];
    for (double v : values) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      std::cout << buf << "\n";
    }
    return 0;
  }
  emit_envelope("sample",
                json{{"shape", flags.shape},
                     {"stat", flags.stat},
                     {"count", flags.count},
                     {"seed", flags.seed},
                     {"stream", flags.stream}},
                json{{"values", values}}, timer.ms());
  return 0;
}

int run_concentrate(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  auto f = parse_stat(flags.stat);
  if (!flags.growth.empty()) {
    // "c1,c2,alpha"
    double c1 = 0, c2 = 0, alpha = 0;
    if (std::sscanf(flags.growth.c_str(), "%lf,%lf,%lf", &c1, &c2, &alpha) != 3)
      throw sytkit::domain_error("--growth needs c1,c2,alpha");
    f = f.with_growth(sytkit::GrowthWitness(c1, c2, alpha));
  }
  sytkit::ConcentrationConfig cfg;
  cfg.delta = flags.delta;
  cfg.epsilon = flags.epsilon;
  if (flags.deviation > 0) cfg.t = flags.deviation;
  cfg.samples = flags.samples;
  cfg.seed = flags.seed;
  cfg.stream = flags.stream;
  cfg.workers = flags.workers;
  cfg.keep_samples = !flags.csv_out.empty();

  const auto report = sytkit::run_concentration_experiment(cfg, lam, f);
  if (!flags.csv_out.empty()) {
    std::ofstream out(flags.csv_out);
    if (!out)
      throw sytkit::domain_error("cannot write samples to " + flags.csv_out);
    char buf[32];
    for (double v : report.sample_values) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << buf << "\n";
    }
  }
  emit_envelope("concentrate",
                json{{"shape", flags.shape},
                     {"stat", flags.stat},
                     {"samples", flags.samples},
                     {"seed", flags.seed},
                     {"epsilon", flags.epsilon},
                     {"delta", flags.delta}},
                sytkit::experiment_report_to_json(report), timer.ms());
  return 0;
}

int run_hecke(const Flags& flags) {
  Timer timer;
  const auto lam = sytkit::Partition::parse(flags.shape);
  const auto report =
      sytkit::hecke_exponents(lam, flags.omega, enum_options(flags));
  emit_envelope("hecke", json{{"shape", flags.shape}, {"omega", flags.omega}},
                sytkit::hecke_report_to_json(report), timer.ms());
  return 0;
}

int run_verify(const Flags& flags) {
  Timer timer;
  sytkit::selftest::VerifyOptions opts;
  opts.max_n = flags.max_n;
  opts.seed = flags.seed != 0 ? flags.seed : 42;
  opts.include_sampling = !flags.no_sampling;

  const auto results = sytkit::selftest::run_verification(opts);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& r : results) {
    std::cerr << (r.pass ? "[ok]   " : "[FAIL] ") << r.name << " (" << r.ms
              << " ms) " << r.detail << "\n";
    checks.push_back(json{
        {"name", r.name}, {"pass", r.pass}, {"ms", r.ms}, {"detail", r.detail}});
    all_pass = all_pass && r.pass;
  }
  emit_envelope(
      "verify", json{{"max_n", flags.max_n}},
      json{{"checks", std::move(checks)}, {"all_pass", all_pass}}, timer.ms());
  return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"descent statistics of standard Young tableaux"};
  app.require_subcommand(1);
  Flags flags;

  const auto add_shape = [&](CLI::App* cmd) {
    cmd->add_option("--shape", flags.shape,
                    "partition as decreasing comma-separated parts")
        ->required();
  };
  const auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--cap", flags.cap,
                    "enumeration cap (default 10^7 or SYT_ENUM_CAP)");
  };
  const auto add_rng = [&](CLI::App* cmd) {
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--stream", flags.stream, "independent substream id");
    cmd->add_option("--workers", flags.workers, "worker threads");
  };

  auto* count = app.add_subcommand("count", "number of standard tableaux");
  add_shape(count);

  auto* enumerate =
      app.add_subcommand("enumerate", "list all standard tableaux");
  add_shape(enumerate);
  add_cap(enumerate);
  enumerate->add_option("--format", flags.format, "json|text");

  auto* genfun =
      app.add_subcommand("genfun", "maj generating function of a shape");
  add_shape(genfun);
  genfun->add_option("--format", flags.format, "json|pretty");

  auto* chr = app.add_subcommand("char", "irreducible character value");
  add_shape(chr);
  chr->add_option("--mu", flags.mu, "cycle type")->required();
  chr->add_option("--method", flags.method, "mn|descent-weights");
  add_cap(chr);

  auto* moments =
      app.add_subcommand("moments", "exact moments of a descent statistic");
  add_shape(moments);
  moments->add_option("--stat", flags.stat,
                      "des|maj|power:<a>|table:<file>");

  auto* sample = app.add_subcommand("sample", "uniform random tableaux");
  add_shape(sample);
  sample->add_option("--count", flags.count, "number of samples")->required();
  sample->add_option("--stat", flags.stat, "des|maj|power:<a>|table:<file>");
  sample->add_option("--format", flags.format, "json|csv");
  sample->add_flag("--emit-tableaux", flags.emit_tableaux,
                   "emit sampled tableaux as JSON lines");
  add_rng(sample);

  auto* concentrate =
      app.add_subcommand("concentrate", "concentration experiment");
  add_shape(concentrate);
  concentrate->add_option("--stat", flags.stat, "des|maj|power:<a>|table:<file>");
  concentrate->add_option("--samples", flags.samples, "number of samples");
  concentrate->add_option("--epsilon", flags.epsilon,
                          "deviation exponent; t = n^(-1/2+epsilon)");
  concentrate->add_option("--delta", flags.delta, "row bound lam1 <= delta*n");
  concentrate->add_option("--t", flags.deviation,
                          "explicit relative deviation (overrides epsilon)");
  concentrate->add_option("--csv-out", flags.csv_out,
                          "write sampled values to a CSV file");
  concentrate->add_option("--growth", flags.growth,
                          "growth witness c1,c2,alpha for table statistics");
  add_rng(concentrate);

  auto* hecke = app.add_subcommand("hecke", "eigenvalue exponent report");
  add_shape(hecke);
  hecke->add_flag("--omega", flags.omega, "list maj mod n over all tableaux");
  add_cap(hecke);

  auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
  verify->add_option("--max-n", flags.max_n, "sweep partitions of n up to this");
  verify->add_option("--seed", flags.seed, "seed for statistical checks");
  verify->add_flag("--no-sampling", flags.no_sampling,
                   "skip the statistical sampler checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (count->parsed()) return run_count(flags);
    if (enumerate->parsed()) return run_enumerate(flags);
    if (genfun->parsed()) return run_genfun(flags);
    if (chr->parsed()) return run_char(flags);
    if (moments->parsed()) return run_moments(flags);
    if (sample->parsed()) return run_sample(flags);
    if (concentrate->parsed()) return run_concentrate(flags);
    if (hecke->parsed()) return run_hecke(flags);
    if (verify->parsed()) return run_verify(flags);
  } catch (const sytkit::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const sytkit::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

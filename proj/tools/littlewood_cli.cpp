// Command-line front end: verification suites, partition statistics,
// single evaluations and the Koornwinder cache.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "littlewood/pfaffian.hpp"
#include "littlewood/verify.hpp"

namespace lw = littlewood;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::unique_ptr<lw::KoornwinderCache> open_cache(const std::string& flag) {
  const auto dir = lw::resolve_cache_dir(flag);
  if (dir.empty()) return nullptr;
  return std::make_unique<lw::KoornwinderCache>(dir);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> identities;
  bool all = false;
  lw::Budget budget;
  int jobs = 0;
  std::string cache_dir;
  std::string format = "json";
  std::string out;
  bool timings = false;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<lw::IdentityId> ids;
  if (a.all) {
    ids = lw::all_identities();
  } else {
    if (a.identities.empty()) throw UsageError("give --identity or --all");
    for (const auto& name : a.identities) {
      auto id = lw::parse_identity(name);
      if (!id) throw UsageError("unknown identity: " + name);
      ids.push_back(*id);
    }
  }
  const auto& b = a.budget;
  if (b.max_size < 0 || b.n < 1 || b.m < 1 || b.degree < 0 || b.order < 0) throw UsageError("budgets must be positive");
  lw::set_thread_count(a.jobs);
  auto cache = open_cache(a.cache_dir);
  lw::VerifyOptions options;
  options.policy = a.serial ? lw::ExecPolicy::Serial : lw::ExecPolicy::OpenMP;
  options.cache = cache.get();
  const auto report = lw::run_verification(lw::default_instances(ids, b), options);
  if (cache) cache->save();
  emit(a.format == "markdown" ? report.to_markdown(a.timings) : report.to_json(a.timings).dump(2) + "\n", a.out);
  return report.all_passed() ? 0 : kMismatch;
}

// ---------------------------------------------------------------------------

int cmd_partition(const std::string& text, const std::string& format) {
  lw::Partition lambda;
  try {
    lambda = lw::Partition::parse(text);
  } catch (const lw::Error& e) {
    throw UsageError(e.what());
  }
  const auto conj = lw::conjugate(lambda);
  const auto hooks = lw::hook_multisets(lambda);
  const bool empty_core = lw::has_empty_two_core(lambda);
  std::vector<int> even_contents, odd_contents;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) ((i + j) % 2 ? odd_contents : even_contents).push_back(j - i);
  }
  const long b = lw::b_statistic(lambda);
  const long bc = lw::b_statistic(conj);
  const auto he = lw::hook_poly(lambda, lw::ParityVariant::Even);
  const auto ho = lw::hook_poly(lambda, lw::ParityVariant::Odd);

  if (format == "json") {
    lw::Json j = {{"partition", lw::to_json(lambda)},
                  {"size", lambda.size()},
                  {"conjugate", lw::to_json(conj)},
                  {"hooks", hooks.all},
                  {"even_hooks", hooks.even},
                  {"odd_hooks", hooks.odd},
                  {"even_cell_contents", even_contents},
                  {"odd_cell_contents", odd_contents},
                  {"two_core", lw::to_json(lw::two_core(lambda))},
                  {"empty_two_core", empty_core},
                  {"b", b},
                  {"b_conjugate", bc},
                  {"H_even", he.to_string()},
                  {"H_odd", ho.to_string()}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "partition:      (" << lambda.to_string() << ")\n"
            << "size:           " << lambda.size() << "\n"
            << "conjugate:      (" << conj.to_string() << ")\n"
            << "hooks:          " << join(hooks.all) << "\n"
            << "even hooks:     " << join(hooks.even) << "\n"
            << "odd hooks:      " << join(hooks.odd) << "\n"
            << "contents i+j even: " << join(even_contents) << "\n"
            << "contents i+j odd:  " << join(odd_contents) << "\n"
            << "2-core:         (" << lw::two_core(lambda).to_string() << ")"
            << (empty_core ? " empty" : " nonempty") << "\n"
            << "b:              " << b << "\n"
            << "b':             " << bc << "\n"
            << "H^e(q):         " << he.to_string() << "\n"
            << "H^o(q):         " << ho.to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  std::string lambda;
  int n = 1;
  std::string family = "I_qq";
  int order = 12;
};

int cmd_eval(const EvalArgs& a) {
  lw::Partition lambda;
  try {
    lambda = lw::Partition::parse(a.lambda);
  } catch (const lw::Error& e) {
    throw UsageError(e.what());
  }
  try {
    if (a.kind == "pf1") {
      std::cout << lw::pf_formula_p1(lambda, a.n).to_string() << "\n";
    } else if (a.kind == "pf2") {
      std::cout << lw::pf_formula_p2(lambda, a.n).to_string() << "\n";
    } else if (a.kind == "int1") {
      std::cout << lw::closed_form_int1(lambda, a.n).to_string() << "\n";
    } else if (a.kind == "int2") {
      std::cout << lw::closed_form_int2(lambda, a.n).to_string() << "\n";
    } else {
      const lw::DensitySpec spec{a.n, lw::parse_family(a.family), a.order};
      std::cout << lw::integral_I(lambda, spec).value.to_string() << "\n";
    }
  } catch (const lw::Error& e) {
    throw UsageError(e.what());
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct CacheArgs {
  std::string action;
  std::string cache_dir;
  int n = 2;
  int m = 2;
  int order = 20;
  int jobs = 0;
};

int cmd_cache(const CacheArgs& a) {
  const auto dir = lw::resolve_cache_dir(a.cache_dir);
  if (dir.empty()) throw UsageError("no cache directory: pass --cache-dir or set LITTLEWOOD_CACHE_DIR");
  if (a.action == "clear") {
    const auto file = dir / lw::KoornwinderCache::kFileName;
    std::error_code ec;
    std::filesystem::remove(file, ec);
    std::cout << "removed " << file.string() << "\n";
    return 0;
  }
  lw::KoornwinderCache cache(dir);
  if (a.action == "warm") {
    lw::set_thread_count(a.jobs);
    for (lw::Family f : {lw::Family::K_halfquarters, lw::Family::K_1m1qmq}) {
      for (int m = 0; m <= a.m; ++m) {
        for (int n = 1; n <= a.n; ++n) lw::koornwinder_poly(lw::rectangle(m, n), n, f, a.order, lw::ExecPolicy::OpenMP, &cache);
      }
    }
    cache.save();
  }
  std::cout << "file:    " << cache.file().string() << "\n"
            << "version: " << lw::KoornwinderCache::kVersion << "\n"
            << "records: " << cache.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of Schur function expansions over partitions with empty 2-core"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run identity verification suites");
  auto* ident = verify->add_option("--identity", va.identities, "identity id (repeatable)");
  auto* all = verify->add_flag("--all", va.all, "every identity");
  ident->excludes(all);
  verify->add_option("--vars", va.budget.n, "largest number of variables n")->capture_default_str();
  verify->add_option("--m", va.budget.m, "largest bound m for the bounded identities")->capture_default_str();
  verify->add_option("--x-degree", va.budget.degree, "x-degree truncation d")->capture_default_str();
  verify->add_option("--q-order", va.budget.order, "q-order truncation D")->capture_default_str();
  verify->add_option("--max-size", va.budget.max_size, "largest |lambda| in sweeps")->capture_default_str();
  verify->add_option("--jobs", va.jobs, "worker threads (0 = OpenMP default)");
  verify->add_option("--cache-dir", va.cache_dir, "Koornwinder cache directory");
  verify->add_option("--format", va.format, "json or markdown")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
  verify->add_option("--out", va.out, "write the report here instead of stdout");
  verify->add_flag("--timings", va.timings, "include wall-clock seconds (reports are then not reproducible)");
  verify->add_flag("--serial", va.serial, "run every kernel on the serial reference path");

  std::string partition_text;
  std::string partition_format = "text";
  auto* partition = app.add_subcommand("partition", "print partition statistics");
  partition->add_option("lambda", partition_text, "comma-separated parts; \"\" is the empty partition")->required();
  partition->add_option("--format", partition_format)->check(CLI::IsMember({"text", "json"}));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate one Pfaffian formula, closed form or integral");
  eval->add_option("kind", ea.kind)->required()->check(CLI::IsMember({"pf1", "pf2", "int1", "int2", "integral"}));
  eval->add_option("--lambda", ea.lambda, "partition")->required();
  eval->add_option("--n", ea.n, "number of variables")->capture_default_str();
  eval->add_option("--family", ea.family, "I_qq, I_1q2, K_halfquarters or K_1m1qmq")->capture_default_str();
  eval->add_option("--q-order", ea.order, "q-order for integrals")->capture_default_str();

  CacheArgs ca;
  auto* cache = app.add_subcommand("cache", "inspect, warm or clear the Koornwinder cache");
  cache->add_option("action", ca.action)->required()->check(CLI::IsMember({"info", "warm", "clear"}));
  cache->add_option("--cache-dir", ca.cache_dir);
  cache->add_option("--vars", ca.n)->capture_default_str();
  cache->add_option("--m", ca.m)->capture_default_str();
  cache->add_option("--q-order", ca.order)->capture_default_str();
  cache->add_option("--jobs", ca.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*partition) return cmd_partition(partition_text, partition_format);
    if (*eval) return cmd_eval(ea);
    if (*cache) return cmd_cache(ca);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

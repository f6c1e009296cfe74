// Command-line front end for the stableperm library.
//
// Exit codes: 0 stable / clean sweep, 2 input error, 3 verified unstable,
// 4 theorem mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "stableperm/report.hpp"
#include "stableperm/stableperm.hpp"

namespace sp = stableperm;
namespace rp = stableperm::report;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_unstable = 3;
constexpr int exit_mismatch = 4;

unsigned default_jobs() {
  if (const char* env = std::getenv("STABLEPERM_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0)
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring STABLEPERM_JOBS=" << env << '\n';
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f)
    throw sp::error("cannot open " + out_path + " for writing");
  f << text;
}

struct CheckArgs {
  int n = 0, k = 0;
  std::string perm;
  int k_max = sp::default_k_max, l_max = sp::default_l_max;
  bool exact = false;
  std::string format = "text";
};

int run_check(const CheckArgs& a) {
  const sp::Permutation u = sp::parse_permutation(a.perm, a.n, a.k);
  const sp::StabilityVerdict v =
      a.exact ? sp::stability_exact_rank1(u) : sp::stability_bounded(u, a.k_max, a.l_max);
  if (a.format == "json") {
    rp::json in;
    in["n"] = a.n;
    in["k"] = a.k;
    in["perm"] = sp::format_cycles(u);
    in["k_max"] = a.exact ? rp::json(nullptr) : rp::json(a.k_max);
    in["l_max"] = a.exact ? rp::json(nullptr) : rp::json(a.l_max);
    in["exact_rank1"] = a.exact;
    std::cout << rp::dump(rp::envelope("check", std::move(in), rp::to_json(v)));
  } else {
    std::cout << "permutation: " << sp::format_cycles(u) << '\n' << rp::to_text(v);
  }
  return v.stable() ? exit_ok : exit_unstable;
}

struct FamilyArgs {
  sp::FamilySpec spec;
  std::string format = "text";
};

int run_family(const FamilyArgs& a) {
  const sp::FamilyVerdict v = sp::verify(a.spec);
  if (a.format == "json") {
    rp::json in = rp::to_json(a.spec);
    in["cycles"] = sp::format_cycles(sp::build(a.spec));
    std::cout << rp::dump(rp::envelope("family", std::move(in), rp::to_json(v)));
  } else {
    std::cout << "involution: " << sp::format_cycles(sp::build(a.spec)) << '\n' << rp::to_text(v);
  }
  return v.verified_stable ? exit_ok : exit_unstable;
}

struct PsiArgs {
  int n = 0, k = 0;
  std::string perm;
  int upto = 2;
  std::string format = "text";
};

int run_psi(const PsiArgs& a) {
  const sp::Permutation u = sp::parse_permutation(a.perm, a.n, a.k);
  const sp::PsiTrace t = sp::psi_trace(u, a.upto);
  if (a.format == "json") {
    rp::json in;
    in["n"] = a.n;
    in["k"] = a.k;
    in["perm"] = sp::format_cycles(u);
    in["upto"] = a.upto;
    std::cout << rp::dump(rp::envelope("psi", std::move(in), rp::to_json(t)));
  } else {
    std::cout << rp::to_text(t);
  }
  return exit_ok;
}

struct EnumerateArgs {
  std::string mode;
  int n = 0;
  std::string space = "all";
  unsigned jobs = 1;
  std::uint64_t seed = sp::default_seed;
  std::uint64_t samples = sp::default_samples;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

int run_enumerate(const EnumerateArgs& a) {
  sp::RunOptions opt;
  opt.jobs = a.jobs;
  opt.seed = a.seed;
  opt.samples = a.samples;

  sp::EnumReport r = [&] {
    if (a.mode == "rank1")
      return sp::census_rank1(a.n, a.space == "involutions"
                                       ? sp::SpaceKind::two_transposition_involutions
                                       : sp::SpaceKind::all_of_sn2,
                              opt);
    if (a.mode == "family")
      return sp::sweep_theorem(a.n, opt);
    return sp::sweep_t1(a.n, opt);
  }();

  std::string text;
  if (a.format == "json") {
    rp::json in;
    in["mode"] = a.mode;
    in["n"] = a.n;
    in["space"] = std::string(sp::label(r.space.kind));
    in["samples"] = r.sampling ? rp::json(r.sampling->samples) : rp::json(nullptr);
    std::optional<std::uint64_t> seed;
    if (r.sampling)
      seed = r.sampling->seed;
    text = rp::dump(rp::envelope("enumerate", std::move(in), rp::to_json(r, a.timing), seed));
  } else if (a.format == "csv") {
    text = rp::to_csv(r);
  } else {
    text = rp::to_text(r);
    if (a.timing)
      text += "wall time: " +
              std::to_string(std::chrono::duration<double, std::milli>(r.wall_time).count()) +
              " ms\n";
  }
  emit(text, a.out);
  if (a.timing)
    std::cerr << "jobs=" << a.jobs << " partitions=" << r.partitions << " wall="
              << std::chrono::duration<double, std::milli>(r.wall_time).count() << "ms\n";
  return r.mismatches.empty() ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable permutations of [n]^k: stability checks, the two-transposition family, "
               "and exhaustive sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sp::version));

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a permutation for stability");
  c->add_option("--n", check.n, "Alphabet size")->required()->check(CLI::PositiveNumber);
  c->add_option("--k", check.k, "Word length")->required()->check(CLI::PositiveNumber);
  c->add_option("--perm", check.perm, "Cycle notation, e.g. \"((1,1),(1,2))\"")->required();
  c->add_option("--kmax", check.k_max, "Largest rank tried")->check(CLI::PositiveNumber);
  c->add_option("--lmax", check.l_max, "Largest l checked per rank")->check(CLI::NonNegativeNumber);
  c->add_flag("--exact-rank1", check.exact, "Use the exact rank-1 commutation criterion (k=2)");
  c->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "Classify ((a1,b1),(a1,b2))((a2,b3),(a2,b4))");
  f->add_option("--n", family.spec.n)->required()->check(CLI::PositiveNumber);
  f->add_option("--a1", family.spec.a1)->required();
  f->add_option("--a2", family.spec.a2)->required();
  f->add_option("--b1", family.spec.b1)->required();
  f->add_option("--b2", family.spec.b2)->required();
  f->add_option("--b3", family.spec.b3)->required();
  f->add_option("--b4", family.spec.b4)->required();
  f->add_option("--format", family.format)->check(CLI::IsMember({"text", "json"}));

  PsiArgs psi;
  auto* p = app.add_subcommand("psi", "Print Psi_0 .. Psi_K");
  p->add_option("--n", psi.n)->required()->check(CLI::PositiveNumber);
  p->add_option("--k", psi.k)->required()->check(CLI::PositiveNumber);
  p->add_option("--perm", psi.perm)->required();
  p->add_option("--upto", psi.upto, "Last level K")->check(CLI::NonNegativeNumber);
  p->add_option("--format", psi.format)->check(CLI::IsMember({"text", "json"}));

  EnumerateArgs en;
  en.jobs = default_jobs();
  auto* e = app.add_subcommand("enumerate", "Exhaustive and sampled sweeps");
  e->add_option("--mode", en.mode)->required()->check(CLI::IsMember({"rank1", "family", "t1"}));
  e->add_option("--n", en.n)->required()->check(CLI::PositiveNumber);
  e->add_option("--space", en.space, "rank1 candidates: all of S([n]^2) or two-transposition involutions")
      ->check(CLI::IsMember({"all", "involutions"}));
  e->add_option("--jobs", en.jobs, "Worker threads (default: $STABLEPERM_JOBS or CPU count)")
      ->check(CLI::PositiveNumber);
  e->add_option("--seed", en.seed, "Seed for sampled family sweeps (n >= 5)");
  e->add_option("--samples", en.samples, "Sample count for sampled family sweeps")
      ->check(CLI::PositiveNumber);
  e->add_option("--format", en.format)->check(CLI::IsMember({"json", "csv", "text"}));
  e->add_option("--out", en.out, "Write the report here instead of stdout");
  e->add_flag("--timing", en.timing, "Include wall time (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return exit_input;
  }

  try {
    if (*c)
      return run_check(check);
    if (*f)
      return run_family(family);
    if (*p)
      return run_psi(psi);
    return run_enumerate(en);
  } catch (const sp::theorem_violation& err) {
    std::cerr << "theorem mismatch: " << err.what() << '\n';
    return exit_mismatch;
  } catch (const sp::consistency_error& err) {
    std::cerr << "theorem mismatch: " << err.what() << '\n';
    return exit_mismatch;
  } catch (const sp::parse_error& err) {
    std::cerr << "parse error " << err.what() << '\n';
    return exit_input;
  } catch (const sp::capacity_error& err) {
    std::cerr << "refused: " << err.what() << '\n';
    return exit_input;
  } catch (const sp::error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_input;
  }
}

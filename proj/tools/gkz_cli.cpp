#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "gkz/commands.hpp"
#include "gkz/kernels.hpp"
#include "gkz/oracle.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mod-p hypergeometric solutions and Hasse invariants of exponential sums"};
  app.require_subcommand(1);
  app.fallthrough();

  gkz::CommandOptions opts;
  std::string out_path = "-";
  unsigned threads = 1;
  std::string isa = "auto";

  app.add_option("--out", out_path, "output file, - for stdout")->capture_default_str();
  app.add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for point counting")->check(CLI::Range(1u, 1024u));
  app.add_option("--cap-override", opts.cap_overrides, "weight_cap=K, relation_norm_cap=K or oracle_budget=K");
  app.add_option("--isa", isa, "kernel instruction set")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  const std::pair<const char*, const char*> commands[] = {
      {"solutions", "good points, F/G basis and operator checks for beta"},
      {"hasse", "Hasse invariant of the sum (toric when m = n, affine otherwise)"},
      {"series", "truncated series congruence for u0"},
      {"oracle", "brute-force oracle named in the spec"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* flag = sub->add_option("--spec", opts.spec_path, "problem specification (JSON)");
    auto* pos = sub->add_option("spec_file", opts.spec_path, "problem specification (JSON)");
    flag->excludes(pos);
    sub->callback([&opts, name = std::string(name)] { opts.command = name; });
  }
  CLI::App* corpus = app.add_subcommand("corpus", "run the acceptance suite");
  corpus->add_option("--criterion", opts.criteria, "restrict to these criteria (1..10)")->check(CLI::Range(1, 10));
  corpus->callback([&opts] { opts.command = "corpus"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gkz::kExitInputError;
  }
  if (opts.command != "corpus" && opts.spec_path.empty()) {
    std::cerr << "error: a spec file is required\n";
    return gkz::kExitInputError;
  }

  gkz::set_oracle_threads(threads);
  if (isa == "scalar") gkz::kernels::set_isa_override(gkz::kernels::Isa::Scalar);
  if (isa == "avx2") {
    if (gkz::kernels::detected_isa() != gkz::kernels::Isa::Avx2) {
      std::cerr << "error: AVX2 is not available on this machine\n";
      return gkz::kExitInputError;
    }
    gkz::kernels::set_isa_override(gkz::kernels::Isa::Avx2);
  }

  if (out_path == "-") return gkz::run_command(opts, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return gkz::kExitInputError;
  }
  return gkz::run_command(opts, out, std::cerr);
}

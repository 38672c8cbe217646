// Command line front end; talks to the library strictly through muposet.h.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "muposet.h"

namespace {

struct Perm {
  muposet_perm* p = nullptr;
  ~Perm() { muposet_perm_free(p); }
};

struct Str {
  char* s = nullptr;
  ~Str() { muposet_string_free(s); }
};

struct Report {
  muposet_report* r = nullptr;
  ~Report() { muposet_report_free(r); }
};

int api_error() {
  std::fprintf(stderr, "error: %s\n", muposet_last_error());
  return 2;
}

int run_mobius(const std::string& lower, const std::string& upper) {
  Perm lo, up;
  if (muposet_perm_parse(lower.c_str(), &lo.p) != MUPOSET_OK) return api_error();
  if (muposet_perm_parse(upper.c_str(), &up.p) != MUPOSET_OK) return api_error();
  long long value = 0;
  if (muposet_mobius(lo.p, up.p, &value) != MUPOSET_OK) return api_error();
  std::printf("%lld\n", value);
  return 0;
}

int run_downset(const std::string& perm, int min_length) {
  Perm pi;
  if (muposet_perm_parse(perm.c_str(), &pi.p) != MUPOSET_OK) return api_error();
  Str text;
  if (muposet_downset_text(pi.p, min_length, &text.s) != MUPOSET_OK) return api_error();
  std::fputs(text.s, stdout);
  return 0;
}

int run_theorem4(const std::string& perm, bool explain) {
  Perm pi;
  if (muposet_perm_parse(perm.c_str(), &pi.p) != MUPOSET_OK) return api_error();
  if (explain) {
    Str text;
    if (muposet_theorem4_explain(pi.p, &text.s) != MUPOSET_OK) return api_error();
    std::fputs(text.s, stdout);
    return 0;
  }
  long long value = 0;
  Str label;
  if (muposet_theorem4(pi.p, &value, &label.s) != MUPOSET_OK) return api_error();
  std::printf("%lld (%s)\n", value, label.s);
  return 0;
}

int run_conj1(const std::string& sigma, const std::string& shape, int n) {
  Perm s;
  if (muposet_perm_parse(sigma.c_str(), &s.p) != MUPOSET_OK) return api_error();
  long long value = 0;
  Str detail;
  if (muposet_conjecture1(s.p, shape[0], n, &value, &detail.s) != MUPOSET_OK)
    return api_error();
  std::printf("%lld (%s)\n", value, detail.s);
  return 0;
}

int run_conj2(int m, const std::string& perm, bool stats) {
  Perm pi;
  if (muposet_perm_parse(perm.c_str(), &pi.p) != MUPOSET_OK) return api_error();
  long long value = 0;
  if (muposet_conjecture2(m, pi.p, &value) != MUPOSET_OK) return api_error();
  if (stats) {
    Str text;
    if (muposet_conjecture2_stats(m, pi.p, &text.s) != MUPOSET_OK) return api_error();
    std::fputs(text.s, stdout);
  }
  std::printf("%lld\n", value);
  return 0;
}

int run_verify(const std::string& campaign, bool extended, bool max_n_set, int max_n,
               bool max_m_set, int max_m, const std::string& format, int jobs) {
  Report report;
  muposet_status status = MUPOSET_OK;
  if (campaign == "theorem4") {
    const int n = max_n_set ? max_n : (extended ? 9 : 8);
    status = muposet_verify_theorem4(n, jobs, &report.r);
  } else if (campaign == "conjecture1") {
    const int n = max_n_set ? max_n : (extended ? 5 : 4);
    status = muposet_verify_conjecture1(n, jobs, &report.r);
  } else if (campaign == "conjecture2") {
    const int m = max_m_set ? max_m : (extended ? 5 : 3);
    const int n = max_n_set ? max_n : (extended ? 11 : 9);
    status = muposet_verify_conjecture2(m, n, jobs, &report.r);
  } else {
    const int n = max_n_set ? max_n : (extended ? 9 : 8);
    status = muposet_verify_lemmas(n, jobs, &report.r);
  }
  if (status != MUPOSET_OK) return api_error();

  muposet_format fmt = MUPOSET_FORMAT_TEXT;
  if (format == "json") fmt = MUPOSET_FORMAT_JSON;
  if (format == "csv") fmt = MUPOSET_FORMAT_CSV;
  Str text;
  if (muposet_report_render(report.r, fmt, &text.s) != MUPOSET_OK) return api_error();
  std::fputs(text.s, stdout);
  if (fmt == MUPOSET_FORMAT_JSON) std::fputs("\n", stdout);
  return muposet_report_failed(report.r) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobius function of the permutation pattern order"};
  app.require_subcommand(1);
  int code = 0;

  std::string lower_text, upper_text;
  auto* mobius_cmd =
      app.add_subcommand("mobius", "Mobius value of an interval, by recursion");
  mobius_cmd->add_option("--lower", lower_text, "lower permutation")->required();
  mobius_cmd->add_option("--upper", upper_text, "upper permutation")->required();
  mobius_cmd->callback([&] { code = run_mobius(lower_text, upper_text); });

  std::string downset_perm;
  int min_length = 1;
  auto* downset_cmd =
      app.add_subcommand("downset", "All patterns of a permutation with their Mobius values");
  downset_cmd->add_option("perm", downset_perm, "root permutation")->required();
  downset_cmd->add_option("--min-length", min_length, "smallest pattern length to list");
  downset_cmd->callback([&] { code = run_downset(downset_perm, min_length); });

  std::string t4_perm;
  bool t4_explain = false;
  auto* t4_cmd = app.add_subcommand(
      "theorem4", "Closed-form Mobius value for at most one descent");
  t4_cmd->add_option("perm", t4_perm, "permutation with at most one descent")->required();
  t4_cmd->add_flag("--explain", t4_explain, "show the case analysis");
  t4_cmd->callback([&] { code = run_theorem4(t4_perm, t4_explain); });

  std::string c1_sigma, c1_shape;
  int c1_n = 0;
  auto* c1_cmd = app.add_subcommand(
      "conj1", "Conjectured interval value up to the M- or W-shaped permutation");
  c1_cmd->add_option("--sigma", c1_sigma, "one-descent pattern")->required();
  c1_cmd->add_option("--shape", c1_shape, "target shape")
      ->required()
      ->check(CLI::IsMember({"M", "W"}));
  c1_cmd->add_option("--n", c1_n, "target half-length")->required();
  c1_cmd->callback([&] { code = run_conj1(c1_sigma, c1_shape, c1_n); });

  std::string c2_pi;
  int c2_m = 0;
  bool c2_stats = false;
  auto* c2_cmd = app.add_subcommand(
      "conj2", "Conjectured interval value from the M-shaped permutation");
  c2_cmd->add_option("--m", c2_m, "half-length of the lower permutation")->required();
  c2_cmd->add_option("--pi", c2_pi, "upper permutation, at most one descent")->required();
  c2_cmd->add_flag("--stats", c2_stats, "show the intermediate quantities");
  c2_cmd->callback([&] { code = run_conj2(c2_m, c2_pi, c2_stats); });

  std::string campaign, format = "text";
  int max_n = 0, max_m = 0, jobs = 0;
  bool extended = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "Compare a formula against recursion over a sweep");
  verify_cmd->add_option("campaign", campaign, "what to check")
      ->required()
      ->check(CLI::IsMember({"theorem4", "conjecture1", "conjecture2", "lemmas"}));
  auto* opt_max_n = verify_cmd->add_option("--max-n", max_n, "largest upper length");
  auto* opt_max_m = verify_cmd->add_option("--max-m", max_m, "largest lower half-length");
  verify_cmd->add_flag("--extended", extended, "wider default sweep");
  verify_cmd->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify_cmd->add_option("--jobs", jobs, "worker threads, 0 = hardware");
  verify_cmd->callback([&] {
    code = run_verify(campaign, extended, opt_max_n->count() > 0, max_n,
                      opt_max_m->count() > 0, max_m, format, jobs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return code;
}

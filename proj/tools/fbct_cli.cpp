// fbct: connectivity tables and Feistel boomerang spectra over GF(2^n).
//
//   fbct spectrum    --n 9 --function paper
//   fbct verify      --n 12
//   fbct kloosterman --n 20
//   fbct tables      --n 6 --function 3 --table ddt --output csv
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 capacity refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fbct/fbct.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct RunConfig {
  unsigned n = 0;
  std::string modulus;
  std::string function = "paper";
  std::string table = "fbct";
  std::string output = "json";
  unsigned threads = 0;
  std::string out_path;
};

unsigned default_threads() {
  if (const char* env = std::getenv("SBOX_DEFAULT_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return fbct::hardware_threads();
}

fbct::Field make_field(const RunConfig& cfg) {
  if (cfg.modulus.empty()) return fbct::Field(cfg.n);
  return fbct::Field(cfg.n, fbct::parse_hex(cfg.modulus));
}

bool is_default_function(const RunConfig& cfg) { return cfg.function == "paper"; }

fbct::BoxedFunction make_function(const RunConfig& cfg, const fbct::Field& field) {
  if (is_default_function(cfg)) return fbct::BoxedFunction::power(field, fbct::default_exponent(cfg.n));
  if (!cfg.function.empty() && cfg.function.front() == '@') {
    return fbct::load_lookup_table(field, cfg.function.substr(1));
  }
  std::size_t used = 0;
  unsigned long long d = 0;
  try {
    d = std::stoull(cfg.function, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cfg.function.size()) {
    throw fbct::UsageError("--function expects 'paper', a decimal exponent, or @<path>; got '" + cfg.function + "'");
  }
  return fbct::BoxedFunction::power(field, d);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw fbct::UsageError("cannot write " + cfg.out_path);
  out << text;
}

int cmd_spectrum(const RunConfig& cfg) {
  const fbct::Field field = make_field(cfg);
  const fbct::BoxedFunction f = make_function(cfg, field);
  fbct::Spectrum s;
  std::string path;
  if (auto d = f.exponent()) {
    s = fbct::fbct_spectrum_power(*d, field, cfg.threads);
    path = "ratio-reduced";
  } else {
    s = fbct::fbct_spectrum_bruteforce(fbct::EvaluatedFunction(f), cfg.threads);
    path = "brute-force";
  }
  if (cfg.output == "csv") {
    std::cerr << "path: " << path << "\n";
    emit(cfg, fbct::spectrum_to_csv(s));
  } else {
    auto j = fbct::spectrum_to_json(s, field, f.describe());
    j["path"] = path;
    emit(cfg, j.dump() + "\n");
  }
  return kExitOk;
}

int cmd_tables(const RunConfig& cfg) {
  const fbct::Field field = make_field(cfg);
  const fbct::EvaluatedFunction f(make_function(cfg, field));
  fbct::Table t;
  if (cfg.table == "ddt") t = fbct::ddt_table(f);
  else if (cfg.table == "bct") t = fbct::bct_table(f, cfg.threads);
  else t = fbct::fbct_table(f, cfg.threads);

  if (cfg.output == "csv") {
    std::ostringstream out;
    for (const auto& row : t) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << "\n";
    }
    emit(cfg, out.str());
  } else {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["modulus"] = fbct::to_hex(field.modulus());
    j["function"] = f.describe();
    j["table"] = cfg.table;
    j["matrix"] = t;
    emit(cfg, j.dump() + "\n");
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (!is_default_function(cfg)) throw fbct::UsageError("verify only applies to --function paper");
  const fbct::Field field = make_field(cfg);
  (void)fbct::default_exponent(cfg.n);
  const fbct::TheoremReport report = fbct::verify_theorem(field, cfg.threads);
  emit(cfg, fbct::report_to_json(report).dump(2) + "\n");
  return report.pass ? kExitOk : kExitMismatch;
}

int cmd_kloosterman(const RunConfig& cfg) {
  const std::int64_t carlitz = fbct::kloosterman_carlitz(cfg.n);
  std::optional<std::int64_t> direct;
  std::optional<fbct::Field> field;
  if (cfg.n <= fbct::kMaxDegree) {
    field = make_field(cfg);
    direct = fbct::kloosterman_direct(*field);
  } else if (!cfg.modulus.empty()) {
    throw fbct::UsageError("--modulus only applies to n <= 24");
  }
  const bool agree = !direct || *direct == carlitz;
  const bool mod4 = carlitz % 4 == 0;

  if (cfg.output == "csv") {
    std::ostringstream out;
    out << "n,direct,carlitz,agree,mod4\n"
        << cfg.n << ',' << (direct ? std::to_string(*direct) : "") << ',' << carlitz << ','
        << (agree ? "true" : "false") << ',' << (mod4 ? "true" : "false") << "\n";
    emit(cfg, out.str());
  } else {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["modulus"] = field ? nlohmann::ordered_json(fbct::to_hex(field->modulus())) : nlohmann::ordered_json();
    j["direct"] = direct ? nlohmann::ordered_json(*direct) : nlohmann::ordered_json();
    j["carlitz"] = carlitz;
    j["agree"] = agree;
    j["mod4"] = mod4;
    emit(cfg, j.dump() + "\n");
  }
  return agree && mod4 ? kExitOk : kExitMismatch;
}

void add_common(CLI::App* cmd, RunConfig& cfg, unsigned max_n) {
  cmd->add_option("--n", cfg.n, "field degree")->required()->check(CLI::Range(2u, max_n));
  cmd->add_option("--modulus", cfg.modulus, "irreducible modulus as hex, bit i = coefficient of x^i");
  cmd->add_option("--output", cfg.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", cfg.threads, "worker count (default: SBOX_DEFAULT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential and boomerang connectivity tables over GF(2^n)"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* spectrum = app.add_subcommand("spectrum", "Feistel boomerang spectrum");
  add_common(spectrum, cfg, fbct::kMaxDegree);
  spectrum->add_option("--function", cfg.function, "paper | <decimal d> | @<lookup-table path>");

  auto* tables = app.add_subcommand("tables", "full DDT, BCT or FBCT (n <= 8)");
  add_common(tables, cfg, fbct::kMaxDegree);
  tables->add_option("--function", cfg.function, "paper | <decimal d> | @<lookup-table path>");
  tables->add_option("--table", cfg.table, "ddt, bct or fbct")->check(CLI::IsMember({"ddt", "bct", "fbct"}));

  auto* verify = app.add_subcommand("verify", "check the closed-form FBCT of x^(2^(n-2)-1)");
  add_common(verify, cfg, fbct::kMaxDegree);
  verify->add_option("--function", cfg.function, "must be 'paper'");

  auto* kloosterman = app.add_subcommand("kloosterman", "K_n(1) by direct sum and by the Carlitz formula");
  add_common(kloosterman, cfg, fbct::kMaxCarlitzDegree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (cfg.threads == 0) cfg.threads = default_threads();

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (tables->parsed()) return cmd_tables(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_kloosterman(cfg);
  } catch (const fbct::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fbct::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}

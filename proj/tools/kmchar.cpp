#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kmchar.h"

namespace {

using Json = nlohmann::ordered_json;

enum exit_code { EXIT_OK = 0, EXIT_MISMATCH = 1, EXIT_INVALID = 2 };

struct cli_error {
  kmc_status status;
  std::string message;
};

void check(kmc_status st) {
  if (st != KMC_OK) throw cli_error{st, kmc_last_error()};
}

// owns a malloc'd string handed out by the library
struct owned_string {
  char* p = nullptr;
  ~owned_string() { kmc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct owned_series {
  kmc_series* p = nullptr;
  ~owned_series() { kmc_series_free(p); }
};

class sink {
 public:
  explicit sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw cli_error{KMC_ERR_INVALID_ARGUMENT, "cannot open '" + path + "' for writing"};
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string status_word(bool ok) { return ok ? "ok" : "MISMATCH"; }

// "3/1" -> "3"
std::string exponent_text(const Json& e) {
  auto s = e.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

std::string describe_mismatch(const Json& m) {
  if (m.is_null()) return "";
  return "  first mismatch at q^" + exponent_text(m["exponent"]) + ": " + m["lhs"].get<std::string>() + " vs " +
         m["rhs"].get<std::string>();
}

// ---- char

struct char_cfg {
  std::string algebra;
  int level = 0;
  std::optional<int> k0;
  std::vector<int> weight;
  std::vector<int> spec;
  int order = 20;
  std::string format = "table";
  std::string method = "wk";
  std::string output;
};

std::vector<std::vector<int>> select_weights(const char_cfg& cfg) {
  if (!cfg.weight.empty()) {
    int sum = 0;
    owned_string desc;
    check(kmc_describe_json(cfg.algebra.c_str(), &desc.p));
    const auto marks = Json::parse(desc.str())[0]["comarks"].get<std::vector<int>>();
    if (marks.size() != cfg.weight.size())
      throw cli_error{KMC_ERR_INVALID_ARGUMENT, "--weight needs " + std::to_string(marks.size()) + " coordinates"};
    for (std::size_t i = 0; i < marks.size(); ++i) sum += marks[i] * cfg.weight[i];
    if (sum != cfg.level)
      throw cli_error{KMC_ERR_INVALID_ARGUMENT, "--weight has level " + std::to_string(sum) + ", not " +
                                                    std::to_string(cfg.level)};
    if (cfg.k0 && *cfg.k0 != cfg.weight[0])
      throw cli_error{KMC_ERR_INVALID_ARGUMENT, "--k0 disagrees with --weight"};
    return {cfg.weight};
  }
  owned_string list;
  check(kmc_level_weights_json(cfg.algebra.c_str(), cfg.level, &list.p));
  std::vector<std::vector<int>> picked;
  for (const auto& w : Json::parse(list.str())) {
    auto coords = w["coords"].get<std::vector<int>>();
    if (!cfg.k0 || coords[0] == *cfg.k0) picked.push_back(std::move(coords));
  }
  if (picked.empty())
    throw cli_error{KMC_ERR_INVALID_ARGUMENT, "no dominant weight of level " + std::to_string(cfg.level) +
                                                  " has k0 = " + std::to_string(*cfg.k0)};
  return picked;
}

int cmd_char(const char_cfg& cfg) {
  const kmc_method method = cfg.method == "product" ? KMC_METHOD_PRODUCT : KMC_METHOD_WEYL_KAC;
  const kmc_format fmt = cfg.format == "json" ? KMC_FORMAT_JSON : cfg.format == "csv" ? KMC_FORMAT_CSV : KMC_FORMAT_TABLE;
  const auto weights = select_weights(cfg);

  std::vector<std::string> rendered;
  for (const auto& w : weights) {
    owned_series s;
    check(kmc_character(cfg.algebra.c_str(), w.data(), w.size(), cfg.spec.data(), cfg.spec.size(), cfg.order, method,
                        &s.p));
    owned_string text;
    check(kmc_series_format(s.p, fmt, &text.p));
    rendered.push_back(text.str());
  }

  sink dest(cfg.output);
  std::ostream& out = dest.out();
  if (fmt == KMC_FORMAT_JSON) {
    Json doc = Json::array();
    for (std::size_t i = 0; i < weights.size(); ++i)
      doc.push_back(Json{{"algebra", cfg.algebra},
                         {"weight", weights[i]},
                         {"spec", cfg.spec},
                         {"method", cfg.method},
                         {"series", Json::parse(rendered[i])}});
    out << (weights.size() == 1 ? doc[0] : doc).dump(2) << '\n';
  } else if (fmt == KMC_FORMAT_CSV) {
    if (weights.size() == 1) {
      out << rendered[0];
    } else {
      out << "weight,exponent,coefficient\n";
      for (std::size_t i = 0; i < weights.size(); ++i) {
        std::istringstream lines(rendered[i]);
        std::string line;
        std::getline(lines, line);  // header
        while (std::getline(lines, line)) out << join(weights[i], ' ') << ',' << line << '\n';
      }
    }
  } else {
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (i) out << '\n';
      out << "# " << cfg.algebra << " weight (" << join(weights[i], ',') << "), spec (" << join(cfg.spec, ',')
          << ")\n"
          << rendered[i];
    }
  }
  return EXIT_OK;
}

// ---- reports

struct report_cfg {
  int k = 0;
  std::optional<int> k0;
  int order = 0;
  int jobs = 1;
  std::string format = "json";
  std::string output;
};

void duality_table(std::ostream& out, const Json& r) {
  out << "level k = " << r["k"].get<int>() << ", compared through q^" << r["order"].get<int>() << '\n';
  for (const auto& e : r["entries"]) {
    out << "k0 = " << e["k0"].get<int>() << "  lhs = rhs: "
        << status_word(e["first_mismatch"].is_null() && e["max_abs_diff"] == "0")
        << "  lhs = product: " << status_word(e["lhs_vs_product"]["equal"].get<bool>())
        << "  rhs = product: " << status_word(e["rhs_vs_product"]["equal"].get<bool>())
        << "  max |diff| " << e["max_abs_diff"].get<std::string>() << describe_mismatch(e["first_mismatch"]) << '\n';
  }
  out << "status: " << r["status"].get<std::string>() << '\n';
}

int cmd_duality(const report_cfg& cfg) {
  owned_string text;
  int ok = 0;
  check(kmc_duality_report(cfg.k, cfg.order, cfg.jobs, &text.p, &ok));
  const Json r = Json::parse(text.str());
  sink dest(cfg.output);
  if (cfg.format == "table")
    duality_table(dest.out(), r);
  else
    dest.out() << r.dump(2) << '\n';
  return ok ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_qtrace(const report_cfg& cfg, const std::string& trace) {
  sink dest(cfg.output);
  if (!trace.empty()) {
    if (!cfg.k0) throw cli_error{KMC_ERR_INVALID_ARGUMENT, "--trace needs --k0"};
    owned_string text;
    check(kmc_trace_json(trace.c_str(), cfg.k, *cfg.k0, cfg.order, &text.p));
    dest.out() << Json::parse(text.str()).dump(2) << '\n';
    return EXIT_OK;
  }
  owned_string text;
  int ok = 0;
  check(kmc_qtrace_report(cfg.k, cfg.k0.value_or(-1), cfg.order, cfg.jobs, &text.p, &ok));
  const Json r = Json::parse(text.str());
  std::ostream& out = dest.out();
  if (cfg.format == "table") {
    out << "integer grades compared through " << r["order"].get<int>() << '\n';
    for (const auto& c : r["checks"]) {
      out << "k = " << c["k"].get<int>() << ", k0 = " << c["k0"].get<int>() << "  " << c["identity"].get<std::string>()
          << ": " << status_word(c["status"] == "ok");
      if (!c["prefactor_equal"].get<bool>()) out << "  prefactors differ";
      out << describe_mismatch(c["first_mismatch"]) << '\n';
    }
    out << "status: " << r["status"].get<std::string>() << '\n';
  } else {
    out << r.dump(2) << '\n';
  }
  return ok ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_appendix(int order, const std::string& format, const std::string& output) {
  owned_string text;
  int ok = 0;
  check(kmc_appendix_report(order, &text.p, &ok));
  const Json r = Json::parse(text.str());
  sink dest(output);
  std::ostream& out = dest.out();
  if (format == "table") {
    const auto& t = r["theta_decomposition"];
    out << "theta decomposition through total degree " << t["compared_order"].get<int>() << ": "
        << status_word(t["status"] == "ok") << '\n';
    for (const auto& s : r["series"]) out << s["name"].get<std::string>() << ": " << status_word(s["status"] == "ok") << '\n';
    out << "square of level 1 trace: " << status_word(r["square_of_level1"].get<bool>()) << '\n';
    out << "prefactors match central charges: " << status_word(r["prefactor_matches_central_charge"].get<bool>())
        << '\n';
    for (const auto& n : r["nonisomorphy"]) {
      out << n["lhs"].get<std::string>() << " vs " << n["rhs"].get<std::string>() << ": ";
      if (n["first_difference"].is_null())
        out << "no difference through q^" << exponent_text(n["compared_order"]) << '\n';
      else
        out << "differ at q^" << exponent_text(n["first_difference"]["exponent"]) << '\n';
    }
    out << "status: " << r["status"].get<std::string>() << '\n';
  } else {
    out << r.dump(2) << '\n';
  }
  return ok ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_selftest(int jobs, const std::string& format, const std::string& output) {
  owned_string text;
  int ok = 0;
  check(kmc_selftest_report(jobs, format == "json" ? KMC_FORMAT_JSON : KMC_FORMAT_TABLE, &text.p, &ok));
  sink dest(output);
  if (format == "json")
    dest.out() << Json::parse(text.str()).dump(2) << '\n';
  else
    dest.out() << text.str();
  return ok ? EXIT_OK : EXIT_MISMATCH;
}

int cmd_describe(const std::string& algebra, std::optional<int> level, const std::string& output) {
  owned_string text;
  check(kmc_describe_json(algebra.empty() ? nullptr : algebra.c_str(), &text.p));
  Json doc = Json::parse(text.str());
  if (level) {
    if (algebra.empty()) throw cli_error{KMC_ERR_INVALID_ARGUMENT, "--level needs --algebra"};
    owned_string ws;
    check(kmc_level_weights_json(algebra.c_str(), *level, &ws.p));
    doc[0]["weights"] = Json::parse(ws.str());
  }
  sink dest(output);
  dest.out() << doc.dump(2) << '\n';
  return EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact characters, duality and q-trace checks for A1(1), A2(1), A2(2)"};
  app.set_version_flag("--version", std::string(kmc_version()));
  app.require_subcommand(1);

  const std::vector<std::string> algebras{"a1_1", "a2_1", "a2_2"};
  auto positive = CLI::PositiveNumber;
  auto nonneg = CLI::NonNegativeNumber;

  char_cfg cc;
  auto* c = app.add_subcommand("char", "print a specialized character");
  c->add_option("--algebra", cc.algebra, "algebra label")->required()->check(CLI::IsMember(algebras));
  c->add_option("--level", cc.level, "level of the highest weight")->required()->check(positive);
  c->add_option("--k0", cc.k0, "first coordinate of the highest weight (default: every weight of the level)")
      ->check(nonneg);
  c->add_option("--weight", cc.weight, "full coordinate list, e.g. 1,1,1")->delimiter(',')->check(nonneg);
  c->add_option("--spec", cc.spec, "specialization s, comma separated")->required()->delimiter(',')->check(nonneg);
  c->add_option("--order", cc.order, "truncation order in q")->capture_default_str()->check(nonneg);
  c->add_option("--format", cc.format, "table, json or csv")->capture_default_str()->check(
      CLI::IsMember({"table", "json", "csv"}));
  c->add_option("--method", cc.method, "wk (Weyl-Kac quotient) or product")->capture_default_str()->check(
      CLI::IsMember({"wk", "product"}));
  c->add_option("--output", cc.output, "write to this file instead of stdout");

  report_cfg dc;
  dc.order = 40;
  auto* d = app.add_subcommand("duality", "compare both sides of the level k / level 2k+1 identity");
  d->add_option("--level-k", dc.k, "k")->required()->check(positive);
  d->add_option("--order", dc.order, "compare through q^order")->capture_default_str()->check(nonneg);
  d->add_option("--jobs", dc.jobs, "worker threads")->capture_default_str()->check(positive);
  d->add_option("--format", dc.format, "json or table")->capture_default_str()->check(CLI::IsMember({"json", "table"}));
  d->add_option("--output", dc.output, "write to this file instead of stdout");

  report_cfg qc;
  qc.order = 30;
  std::string trace;
  auto* q = app.add_subcommand("qtrace", "check the chain of q-trace identities");
  q->add_option("--level-k", qc.k, "k")->required()->check(positive);
  q->add_option("--k0", qc.k0, "restrict to one k0 (default: all)")->check(nonneg);
  q->add_option("--order", qc.order, "integer grades compared")->capture_default_str()->check(nonneg);
  q->add_option("--jobs", qc.jobs, "worker threads")->capture_default_str()->check(positive);
  q->add_option("--format", qc.format, "json or table")->capture_default_str()->check(CLI::IsMember({"json", "table"}));
  q->add_option("--trace", trace, "print one trace instead of the report")
      ->check(CLI::IsMember({"chi_tilde", "chi_nu", "f", "chi_tau"}));
  q->add_option("--output", qc.output, "write to this file instead of stdout");

  int appendix_order = 12;
  std::string appendix_format = "json";
  std::string appendix_output;
  auto* a = app.add_subcommand("appendix", "level 3 A2(1) series and the theta decomposition");
  a->add_option("--order", appendix_order, "total degree for the theta decomposition")
      ->capture_default_str()
      ->check(nonneg);
  a->add_option("--format", appendix_format, "json or table")->capture_default_str()->check(
      CLI::IsMember({"json", "table"}));
  a->add_option("--output", appendix_output, "write to this file instead of stdout");

  int self_jobs = 1;
  std::string self_format = "table";
  std::string self_output;
  auto* s = app.add_subcommand("selftest", "run every acceptance criterion");
  s->add_option("--jobs", self_jobs, "worker threads")->capture_default_str()->check(positive);
  s->add_option("--format", self_format, "table or json")->capture_default_str()->check(CLI::IsMember({"table", "json"}));
  s->add_option("--output", self_output, "write to this file instead of stdout");

  std::string describe_algebra;
  std::optional<int> describe_level;
  std::string describe_output;
  auto* ds = app.add_subcommand("describe", "dump algebra data as JSON");
  ds->add_option("--algebra", describe_algebra, "one algebra (default: all)")->check(CLI::IsMember(algebras));
  ds->add_option("--level", describe_level, "also list the dominant weights of this level")->check(positive);
  ds->add_option("--output", describe_output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return EXIT_INVALID;
  }

  try {
    if (*c) return cmd_char(cc);
    if (*d) return cmd_duality(dc);
    if (*q) return cmd_qtrace(qc, trace);
    if (*a) return cmd_appendix(appendix_order, appendix_format, appendix_output);
    if (*s) return cmd_selftest(self_jobs, self_format, self_output);
    if (*ds) return cmd_describe(describe_algebra, describe_level, describe_output);
  } catch (const cli_error& e) {
    std::cerr << "error (" << kmc_status_name(e.status) << "): " << e.message << '\n';
    return e.status == KMC_ERR_INTERNAL || e.status == KMC_ERR_IDENTITY_VIOLATION ? EXIT_MISMATCH : EXIT_INVALID;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: unreadable report: " << e.what() << '\n';
    return EXIT_MISMATCH;
  }
  return EXIT_INVALID;
}

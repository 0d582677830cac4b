// cascade-kit: builds root systems, computes the cascade of strongly
// orthogonal roots, and runs the exact verification suites.
#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ck/cascade.hpp"
#include "ck/chevalley.hpp"
#include "ck/coadjoint.hpp"
#include "ck/invariants.hpp"
#include "ck/jsonio.hpp"
#include "ck/rootsys.hpp"
#include "ck/sampler.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::vector<std::string> types;
  std::vector<std::string> positional;
  std::vector<std::string> checks{"all"};
  std::uint64_t seed = 0xC05CADE;
  int samples = 25;
  int r_cap = 6;
  std::string format = "json";
  std::string out;
  bool inject_failure = false;
};

int worker_count() {
  const char* env = std::getenv("CASCADE_KIT_THREADS");
  if (!env) return 1;
  const int v = std::atoi(env);
  return v < 1 ? 1 : (v > 64 ? 64 : v);
}

std::vector<ck::TypeSpec> parse_types(const RunConfig& cfg) {
  std::vector<ck::TypeSpec> specs;
  for (const std::vector<std::string>* src : {&cfg.positional, &cfg.types})
    for (const std::string& t : *src) specs.push_back(ck::TypeSpec::parse(t));
  if (specs.empty()) throw std::invalid_argument("no types given");
  return specs;
}

bool wants(const RunConfig& cfg, const std::string& check) {
  for (const std::string& c : cfg.checks)
    if (c == "all" || c == check) return true;
  return false;
}

// Emit the fully assembled output in one write, so failures beforehand
// leave no partial output behind.
int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) {
    std::cerr << "cascade-kit: cannot open output file " << cfg.out << "\n";
    return 2;
  }
  f << text;
  return f.good() ? 0 : 2;
}

std::string join_coeffs(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ck::Json config_json(const RunConfig& cfg, const std::vector<ck::TypeSpec>& specs) {
  std::vector<std::string> names;
  for (const ck::TypeSpec& s : specs) names.push_back(s.str());
  return ck::Json{{"seed", cfg.seed},
                  {"samples", cfg.samples},
                  {"r_cap", cfg.r_cap},
                  {"checks", cfg.checks},
                  {"types", names}};
}

// ---------- cascade ----------

int cmd_cascade(const RunConfig& cfg) {
  const std::vector<ck::TypeSpec> specs = parse_types(cfg);
  std::string out;
  if (cfg.format == "json") {
    ck::Json doc{{"schema_version", kSchemaVersion},
                 {"artifact_version", kVersion},
                 {"command", "cascade"},
                 {"types", ck::Json::array()}};
    for (const ck::TypeSpec& spec : specs) {
      const ck::RootSystem rs(spec);
      doc["types"].push_back(ck::cascade_json(rs, ck::compute_cascade(rs)));
    }
    out = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    for (const ck::TypeSpec& spec : specs) {
      const ck::RootSystem rs(spec);
      const ck::Cascade c = ck::compute_cascade(rs);
      if (cfg.format == "tsv") {
        s << spec.str() << '\t' << c.m();
        std::string betas, hs, layers;
        for (const ck::CascadeNode& node : c.nodes) {
          if (!betas.empty()) {
            betas += ';';
            hs += ';';
            layers += ';';
          }
          betas += join_coeffs(rs.root(node.beta).coeffs);
          hs += std::to_string(node.h_dual);
          layers += std::to_string(node.layer.size());
        }
        s << '\t' << betas << '\t' << hs << '\t' << layers << '\n';
      } else {
        s << spec.str() << ": rank " << rs.rank() << ", " << rs.num_positive()
          << " positive roots, m = " << c.m() << "\n";
        for (size_t k = 0; k < c.nodes.size(); ++k) {
          const ck::CascadeNode& node = c.nodes[k];
          s << "  beta_" << k + 1 << " = " << join_coeffs(rs.root(node.beta).coeffs)
            << "  parent " << (node.parent < 0 ? std::string("-") : std::to_string(node.parent + 1))
            << "  h_dual " << node.h_dual << "  layer size " << node.layer.size() << "\n";
        }
      }
    }
    out = s.str();
  }
  return emit(cfg, out);
}

// ---------- verify ----------

ck::VerificationReport run_checks(const ck::TypeSpec& spec, const RunConfig& cfg) {
  const ck::RootSystem rs(spec);
  const ck::Cascade c = ck::compute_cascade(rs);
  ck::VerificationReport rep;
  const std::uint64_t type_seed = ck::derive_seed(cfg.seed, spec.str(), 0);
  if (wants(cfg, "section1")) rep.merge(ck::verify_section1(rs, c));
  if (wants(cfg, "coadjoint")) {
    const ck::ChevalleyTable tbl(rs);
    rep.merge(ck::verify_coadjoint(tbl, c, type_seed, cfg.samples, 2 * cfg.samples));
  }
  if (wants(cfg, "invariants")) {
    const ck::ChevalleyTable tbl(rs);
    const int lattice_cap = c.m() <= 2 ? 2 : 1;
    rep.merge(ck::verify_invariants(tbl, c, type_seed, cfg.r_cap, lattice_cap));
  }
  if (cfg.inject_failure) {
    ck::CheckResult& r = rep.add("injected/failure", spec.str());
    r.fail("failure injected via --inject-failure");
  }
  return rep;
}

int cmd_verify(const RunConfig& cfg) {
  const std::vector<ck::TypeSpec> specs = parse_types(cfg);

  std::vector<ck::VerificationReport> reports(specs.size());
  std::vector<std::string> errors(specs.size());
  const int workers = worker_count();
  if (workers <= 1) {
    for (size_t i = 0; i < specs.size(); ++i) {
      try {
        reports[i] = run_checks(specs[i], cfg);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
          try {
            reports[i] = run_checks(specs[i], cfg);
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
        }
      });
    for (std::thread& t : pool) t.join();
  }
  for (size_t i = 0; i < specs.size(); ++i)
    if (!errors[i].empty()) {
      std::cerr << "cascade-kit: " << specs[i].str() << ": " << errors[i] << "\n";
      return 2;
    }

  ck::VerificationReport merged;
  for (ck::VerificationReport& r : reports) merged.merge(std::move(r));
  const bool pass = merged.all_pass();

  std::string out;
  if (cfg.format == "json") {
    ck::Json doc{{"schema_version", kSchemaVersion},
                 {"artifact_version", kVersion},
                 {"command", "verify"},
                 {"config", config_json(cfg, specs)},
                 {"report", ck::report_json(merged)}};
    out = doc.dump(2) + "\n";
  } else if (cfg.format == "tsv") {
    std::ostringstream s;
    for (const ck::CheckResult& r : merged.checks)
      s << r.type << '\t' << r.check << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.kind
        << '\t' << r.seed << '\t' << r.samples << '\n';
    out = s.str();
  } else {
    std::ostringstream s;
    int failed = 0;
    for (const ck::CheckResult& r : merged.checks) {
      s << (r.pass ? "PASS" : "FAIL") << "  " << r.type << "  " << r.check;
      if (r.samples > 0) s << "  (seed " << r.seed << ", " << r.samples << " samples)";
      if (!r.pass) {
        s << "\n      " << r.witness;
        ++failed;
      }
      s << "\n";
    }
    s << merged.checks.size() << " checks, " << failed << " failed\n";
    out = s.str();
  }
  const int rc = emit(cfg, out);
  return rc != 0 ? rc : (pass ? 0 : 1);
}

// ---------- table ----------

int cmd_table(const RunConfig& cfg) {
  const std::vector<ck::TypeSpec> specs = parse_types(cfg);
  struct Row {
    ck::Json json;
    std::string tsv;
    std::string text;
  };
  std::vector<Row> rows;
  for (const ck::TypeSpec& spec : specs) {
    const ck::RootSystem rs(spec);
    const ck::Cascade c = ck::compute_cascade(rs);
    const ck::GeneratorSet g = ck::semigroup_generators(rs, c, cfg.r_cap);
    Row row;
    row.json = ck::generators_json(rs, c, g);
    std::string betas, mus_b, mus_s, degs;
    for (const ck::CascadeNode& node : c.nodes) {
      if (!betas.empty()) betas += ';';
      betas += join_coeffs(rs.root(node.beta).coeffs);
    }
    for (const ck::CascadeLatticePoint& mu : g.mus) {
      if (!mus_b.empty()) {
        mus_b += ';';
        mus_s += ';';
        degs += ',';
      }
      mus_b += ck::lattice_str(mu);
      const ck::Weight w = ck::lattice_weight(rs, c, mu);
      std::string ws = "(";
      for (size_t j = 0; j < w.size(); ++j) {
        if (j) ws += ",";
        ws += ck::to_string(w[j]);
      }
      mus_s += ws + ")";
      degs += std::to_string(ck::to_int(ck::r_total(rs, c, w)));
    }
    const long long dt = row.json["det"].get<long long>();
    std::ostringstream t;
    t << spec.str() << '\t' << c.m() << '\t' << betas << '\t' << mus_b << '\t' << mus_s << '\t'
      << degs << '\t' << dt << '\n';
    row.tsv = t.str();
    std::ostringstream x;
    x << spec.str() << ": m = " << c.m() << ", cascade " << betas << "\n  generators over B: "
      << mus_b << "\n  generators over simples: " << mus_s << "\n  degrees: " << degs
      << "\n  transition det: " << dt << "\n";
    row.text = x.str();
    rows.push_back(std::move(row));
  }

  std::string out;
  if (cfg.format == "json") {
    ck::Json doc{{"schema_version", kSchemaVersion},
                 {"artifact_version", kVersion},
                 {"command", "table"},
                 {"rows", ck::Json::array()}};
    for (Row& row : rows) doc["rows"].push_back(std::move(row.json));
    out = doc.dump(2) + "\n";
  } else if (cfg.format == "tsv") {
    out = "type\tm\tcascade\tmu_over_B\tmu_over_simples\tdegrees\tdet\n";
    for (const Row& row : rows) out += row.tsv;
  } else {
    for (const Row& row : rows) out += row.text;
  }
  return emit(cfg, out);
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_positional) {
  sub->add_option("--types", cfg.types, "comma-separated type specs, e.g. A3,B2xG2")
      ->delimiter(',');
  if (with_positional)
    sub->add_option("specs", cfg.positional, "type specs")->delimiter(',');
  sub->add_option("--seed", cfg.seed, "base seed for all sampled checks");
  sub->add_option("--samples", cfg.samples, "sample count per sampled check")
      ->check(CLI::Range(1, 1000000));
  sub->add_option("--r-cap", cfg.r_cap, "bound on r(nu) for invariant enumeration")
      ->check(CLI::Range(1, 12));
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}));
  sub->add_option("--out", cfg.out, "write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations around cascades of strongly orthogonal roots"};
  app.set_version_flag("--version", std::string("cascade-kit ") + kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  CLI::App* cascade = app.add_subcommand("cascade", "print the cascade forest per type");
  add_common(cascade, cfg, true);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites and report");
  add_common(verify, cfg, true);
  verify->add_option("--checks", cfg.checks, "subset of section1,coadjoint,invariants or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"all", "section1", "coadjoint", "invariants"}));
  verify->add_flag("--inject-failure", cfg.inject_failure)->group("");
  CLI::App* table = app.add_subcommand("table", "summary table: cascade, generators, degrees");
  add_common(table, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cascade->parsed()) return cmd_cascade(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_table(cfg);
  } catch (const std::exception& e) {
    std::cerr << "cascade-kit: " << e.what() << "\n";
    return 2;
  }
}

// eulersum: evaluate and verify variant Euler sum identities.
//
//   eulersum list [filter]
//   eulersum eval ID [--n N] [--m M] [--p P] [--x X] [--side lhs|rhs|both]
//   eulersum verify (--all | ID [--n ...]) [--tol T] [--jobs J]
//   eulersum sweep ID [--n 0..3] [--m 1,2] [--p 0.5,1] [--x ...] [--format csv|json] [-o FILE]
//   eulersum examples
//
// Exit codes: 0 success, 1 a verification failed, 2 bad parameters,
// 3 a series did not converge.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <eulersums/eulersums.hpp>

namespace es = eulersums;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadParams = 2, kNotConverged = 3 };

std::string num(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  return num(v);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string params_json(const es::Params& q) {
  std::string s = "{";
  auto field = [&](const char* k, const std::string& v) {
    if (s.size() > 1) s += ",";
    s += quote(k) + ":" + v;
  };
  if (q.n) field("n", std::to_string(*q.n));
  if (q.m) field("m", std::to_string(*q.m));
  if (q.p) field("p", num(*q.p));
  if (q.x) field("x", num(*q.x));
  return s + "}";
}

struct Outcome {
  es::VerifyReport report;
  double wall_ms = 0.0;
  int error_code = kOk;  // kBadParams or kNotConverged when the point threw
  std::string error;
};

std::string report_json(const std::string& command, const Outcome& o) {
  const es::VerifyReport& r = o.report;
  std::ostringstream s;
  s << "{\"command\":" << quote(command) << ",\"id\":" << quote(es::to_string(r.id))
    << ",\"params\":" << params_json(r.params);
  if (!r.label.empty()) s << ",\"label\":" << quote(r.label);
  if (o.error_code != kOk) {
    s << ",\"error\":" << quote(o.error) << ",\"pass\":false";
  } else {
    s << ",\"lhs\":" << num(r.lhs) << ",\"rhs\":" << num(r.rhs) << ",\"abs_err\":" << num(r.abs_err)
      << ",\"rel_err\":" << num(r.rel_err) << ",\"tol\":" << num(r.tolerance)
      << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"terms\":" << r.lhs_terms
      << ",\"converged\":" << (r.converged ? "true" : "false");
    if (r.expected_mismatch) s << ",\"expected_mismatch\":true";
  }
  s << ",\"wall_ms\":" << num(o.wall_ms) << "}";
  return s.str();
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// "a..b" (integers, inclusive; empty if b < a), "v1,v2,..." or a single value.
template <class T>
std::vector<T> parse_range(const std::string& text) {
  std::vector<T> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(static_cast<T>(v));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    if constexpr (std::is_integral_v<T>) {
      if (v != static_cast<double>(static_cast<T>(v))) throw std::invalid_argument("expected integer '" + item + "'");
    }
    out.push_back(static_cast<T>(v));
  }
  return out;
}

Outcome run_point(es::IdentityId id, const es::Params& q, double tol, const es::EvalConfig& cfg) {
  Outcome o;
  o.report.id = id;
  o.report.params = q;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    o.report = es::verify(id, q, tol, cfg);
  } catch (const es::DomainError& e) {
    o.error_code = kBadParams;
    o.error = e.what();
  } catch (const es::JetMismatch& e) {
    o.error_code = kBadParams;
    o.error = e.what();
  } catch (const es::SeriesError& e) {
    o.error_code = kNotConverged;
    o.error = e.what();
  }
  o.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return o;
}

// Evaluates every case on up to `jobs` threads; results keep input order.
std::vector<Outcome> run_all(const std::vector<std::pair<es::IdentityId, es::Params>>& cases, double tol,
                             const es::EvalConfig& cfg, int jobs) {
  std::vector<Outcome> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      out[i] = run_point(cases[i].first, cases[i].second, tol, cfg);
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int worst_code(const std::vector<Outcome>& outs, bool need_pass) {
  int code = kOk;
  for (const auto& o : outs) {
    if (o.error_code == kBadParams) return kBadParams;
    if (o.error_code == kNotConverged || (o.error_code == kOk && !o.report.converged)) code = kNotConverged;
    else if (code == kOk && need_pass && !o.report.pass) code = kFailed;
  }
  return code;
}

struct ParamFlags {
  std::optional<int> n, m;
  std::optional<double> p, x;
  es::Params get() const { return {n, m, p, x}; }
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--n", f.n, "integer parameter n");
  cmd->add_option("--m", f.m, "integer parameter m");
  cmd->add_option("--p", f.p, "real parameter p");
  cmd->add_option("--x", f.x, "real parameter x");
}

es::IdentityId require_id(const std::string& name) {
  if (auto id = es::parse_identity(name)) return *id;
  throw es::DomainError("unknown identity '" + name + "' (see `eulersum list`)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate and verify variant Euler sum identities"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-9;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--tol", tol, "verification tolerance (relative; absolute near zero)")
      ->envname("EULER_SUM_TOL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  long long max_terms = es::EvalConfig{}.max_terms;
  app.add_option("--max-terms", max_terms, "term budget per series")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for grids")->check(CLI::PositiveNumber)->capture_default_str();

  auto* list = app.add_subcommand("list", "list identities");
  std::string filter;
  list->add_option("filter", filter, "case-insensitive name filter");

  auto* eval = app.add_subcommand("eval", "evaluate one identity");
  std::string eval_id;
  std::string side = "both";
  ParamFlags eval_p;
  eval->add_option("id", eval_id)->required();
  eval->add_option("--side", side)->check(CLI::IsMember({"lhs", "rhs", "both"}))->capture_default_str();
  add_param_flags(eval, eval_p);

  auto* verify = app.add_subcommand("verify", "check identities against their series");
  std::string verify_id;
  bool verify_all = false;
  ParamFlags verify_p;
  verify->add_option("id", verify_id);
  verify->add_flag("--all", verify_all, "run the default grid of every identity");
  add_param_flags(verify, verify_p);

  auto* sweep = app.add_subcommand("sweep", "tabulate one identity over parameter ranges");
  std::string sweep_id, rn, rm, rp, rx, format = "csv", output;
  sweep->add_option("id", sweep_id)->required();
  sweep->add_option("--n", rn, "e.g. 0..3 or 0,2");
  sweep->add_option("--m", rm, "e.g. 1..4");
  sweep->add_option("--p", rp, "e.g. 0.5,1,2");
  sweep->add_option("--x", rx, "e.g. 0.5,1.5");
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sweep->add_option("-o,--output", output, "write the table here instead of stdout");

  auto* examples = app.add_subcommand("examples", "run the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParams;
  }

  es::EvalConfig cfg;
  cfg.max_terms = max_terms;
  try {
    if (*list) {
      const std::string f = lower(filter);
      for (const auto& info : es::identity_table()) {
        if (!f.empty() && lower(info.name).find(f) == std::string::npos) continue;
        std::printf("%-15s %-22s %s\n", info.name, info.signature, info.summary);
      }
      return kOk;
    }

    if (*eval) {
      const es::IdentityId id = require_id(eval_id);
      const es::Params q = eval_p.get();
      const auto t0 = std::chrono::steady_clock::now();
      std::ostringstream s;
      s << "{\"command\":\"eval\",\"id\":" << quote(es::to_string(id)) << ",\"params\":" << params_json(q);
      bool converged = true;
      double lhs = 0.0, rhs = 0.0;
      if (side != "rhs") {
        const es::SumResult r = es::evaluate_lhs(id, q, es::config_for_tolerance(tol, cfg));
        lhs = r.value;
        converged = r.converged;
        s << ",\"lhs\":" << num(r.value) << ",\"tail_estimate\":" << num(r.tail_estimate)
          << ",\"terms\":" << r.terms_used << ",\"converged\":" << (r.converged ? "true" : "false");
      }
      if (side != "lhs") {
        rhs = es::evaluate_rhs(id, q);
        s << ",\"rhs\":" << num(rhs);
      }
      if (side == "both") {
        const double abs_err = std::abs(lhs - rhs);
        s << ",\"abs_err\":" << num(abs_err) << ",\"rel_err\":" << num(rhs != 0.0 ? abs_err / std::abs(rhs) : abs_err);
      }
      s << ",\"wall_ms\":"
        << num(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()) << "}";
      std::puts(s.str().c_str());
      return converged ? kOk : kNotConverged;
    }

    if (*verify) {
      std::vector<std::pair<es::IdentityId, es::Params>> cases;
      if (verify_all) {
        if (!verify_id.empty()) throw es::DomainError("give either --all or an identity, not both");
        for (const auto& info : es::identity_table()) {
          for (const auto& q : es::default_grid(info.id)) cases.emplace_back(info.id, q);
        }
      } else {
        if (verify_id.empty()) throw es::DomainError("verify needs an identity or --all");
        cases.emplace_back(require_id(verify_id), verify_p.get());
      }
      const auto t0 = std::chrono::steady_clock::now();
      const auto outs = run_all(cases, tol, cfg, jobs);
      std::size_t passed = 0;
      for (const auto& o : outs) {
        std::puts(report_json("verify", o).c_str());
        if (o.error_code == kOk && o.report.pass) ++passed;
      }
      std::printf("{\"command\":\"verify\",\"summary\":true,\"total\":%zu,\"passed\":%zu,\"failed\":%zu,\"wall_ms\":%s}\n",
                  outs.size(), passed, outs.size() - passed,
                  num(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count()).c_str());
      return worst_code(outs, true);
    }

    if (*sweep) {
      const es::IdentityId id = require_id(sweep_id);
      std::vector<std::pair<es::IdentityId, es::Params>> cases;
      try {
        const auto ns = parse_range<int>(rn);
        const auto ms = parse_range<int>(rm);
        const auto ps = parse_range<double>(rp);
        const auto xs = parse_range<double>(rx);
        auto axis = [](const auto& values, bool given) {
          using V = typename std::decay_t<decltype(values)>::value_type;
          std::vector<std::optional<V>> a;
          if (!given) a.emplace_back(std::nullopt);
          for (V v : values) a.emplace_back(v);
          return a;
        };
        for (const auto& x : axis(xs, !rx.empty())) {
          for (const auto& p : axis(ps, !rp.empty())) {
            for (const auto& n : axis(ns, !rn.empty())) {
              for (const auto& m : axis(ms, !rm.empty())) cases.emplace_back(id, es::Params{n, m, p, x});
            }
          }
        }
      } catch (const std::logic_error& e) {
        throw es::DomainError(std::string("bad range: ") + e.what());
      }
      const auto outs = run_all(cases, tol, cfg, jobs);
      std::ofstream file;
      if (!output.empty()) {
        file.open(output);
        if (!file) throw es::DomainError("cannot open " + output);
      }
      std::ostream& os = output.empty() ? std::cout : file;
      if (format == "csv") {
        os << "id,n,m,p,lhs,rhs,abs_err,rel_err,terms,converged\n";
        for (const auto& o : outs) {
          const es::VerifyReport& r = o.report;
          const es::Params& q = r.params;
          std::string n_col = q.n ? std::to_string(*q.n) : (q.x ? num(*q.x) : "");
          os << es::to_string(r.id) << ',' << n_col << ',' << (q.m ? std::to_string(*q.m) : "") << ','
             << (q.p ? num(*q.p) : "") << ',';
          if (o.error_code != kOk) {
            os << ",,,,0,false\n";
          } else {
            os << csv_num(r.lhs) << ',' << csv_num(r.rhs) << ',' << csv_num(r.abs_err) << ',' << csv_num(r.rel_err)
               << ',' << r.lhs_terms << ',' << (r.converged ? "true" : "false") << '\n';
          }
        }
      } else {
        for (const auto& o : outs) os << report_json("sweep", o) << '\n';
      }
      os.flush();
      for (const auto& o : outs) {
        if (o.error_code != kOk) std::fprintf(stderr, "eulersum: %s\n", o.error.c_str());
      }
      return worst_code(outs, false);
    }

    if (*examples) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto reports = es::example_suite(tol, cfg);
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      bool ok = true;
      for (const auto& r : reports) {
        Outcome o;
        o.report = r;
        o.wall_ms = ms / static_cast<double>(reports.size());
        std::puts(report_json("examples", o).c_str());
        ok = ok && (r.pass != r.expected_mismatch);
      }
      return ok ? kOk : kFailed;
    }
  } catch (const es::DomainError& e) {
    std::fprintf(stderr, "eulersum: %s\n", e.what());
    return kBadParams;
  } catch (const es::JetMismatch& e) {
    std::fprintf(stderr, "eulersum: %s\n", e.what());
    return kBadParams;
  } catch (const es::SeriesError& e) {
    std::fprintf(stderr, "eulersum: %s\n", e.what());
    return kNotConverged;
  }
  return kOk;
}

// qtcat: higher q,t-Catalan numbers and the checks built on them.
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtcat/verify.hpp"

using namespace qtcat;

namespace {

struct Globals {
  std::string cache_dir;
  int workers = 1;
  bool json = false;
  std::string budget_file;
};

/// "3", "1-4" or "1,3,5".
std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(std::stoi(item));
    } else {
      const int lo = std::stoi(item.substr(0, dash));
      const int hi = std::stoi(item.substr(dash + 1));
      if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + s + "'");
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

class App {
 public:
  Globals g;

  Budget budget() const { return g.budget_file.empty() ? Budget{} : Budget::load(g.budget_file); }

  ResultCache* cache() {
    if (g.cache_dir.empty()) return nullptr;
    std::lock_guard lock(mu_);
    if (!cache_) cache_ = std::make_unique<ResultCache>(g.cache_dir);
    return cache_.get();
  }

  /// Prints reports and returns the exit code.
  int emit(const std::vector<CheckReport>& reports) const {
    bool failed = false;
    if (g.json) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    } else {
      for (const auto& r : reports) std::cout << r.to_text() << "\n";
    }
    for (const auto& r : reports) failed |= r.verdict == Verdict::Fail;
    return failed ? 1 : 0;
  }

  int run_tasks(const std::vector<std::function<CheckReport()>>& tasks) const { return emit(run_parallel(tasks, g.workers)); }

 private:
  std::unique_ptr<ResultCache> cache_;
  std::mutex mu_;
};

CheckReport skipped(const std::string& name, json params, const std::string& why) {
  CheckReport r;
  r.name = name;
  r.params = std::move(params);
  r.verdict = Verdict::Skipped;
  r.detail = why;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  App app;
  CLI::App cli{"Higher q,t-Catalan numbers: five definitions and their cross-checks"};
  cli.require_subcommand(1);
  cli.add_option("--cache-dir", app.g.cache_dir, "Directory for cached results");
  cli.add_option("--workers", app.g.workers, "Concurrent checks")->check(CLI::PositiveNumber);
  cli.add_flag("--json", app.g.json, "Machine-readable reports");
  cli.add_option("--budget-file", app.g.budget_file, "key = value budget overrides")->check(CLI::ExistingFile);

  int rc_code = 0;
  auto set = [&](int code) { rc_code = code; };

  // pc wc dc rc ac
  struct PolyOpts {
    int m = 1, n = 1;
    bool csv = false;
    bool specs = false;
  };
  auto poly_opts = std::make_shared<std::map<std::string, PolyOpts>>();
  for (std::string verb : {"pc", "wc", "dc", "rc", "ac"}) {
    auto& o = (*poly_opts)[verb];
    auto* sub = cli.add_subcommand(verb, "Compute " + verb + "_n^(m)(q,t)");
    sub->add_option("--m", o.m, "Slope parameter")->required()->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "Size")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--csv", o.csv, "Emit d1,d2,coeff rows");
    if (verb == "rc") sub->add_flag("--check-specializations", o.specs, "Also check the t = 1 and t = 1/q specializations");
    sub->callback([&, verb, poly_opts] {
      const auto& p = (*poly_opts)[verb];
      const Budget b = app.budget();
      if (auto why = b.exceeded(verb, p.m, p.n)) {
        set(app.emit({skipped(verb, {{"m", p.m}, {"n", p.n}}, *why)}));
        return;
      }
      QtPoly poly = compute_poly(verb, p.m, p.n, app.cache());
      if (p.csv) std::cout << to_csv(poly);
      else std::cout << to_json(poly).dump() << "\n";
      if (p.specs) {
        CheckReport r = specialization_check(p.m, p.n, b, app.cache());
        if (app.g.json) std::cerr << r.to_json().dump() << "\n";
        else std::cerr << r.to_text() << "\n";
        set(r.verdict == Verdict::Fail ? 1 : 0);
      }
    });
  }

  // stats partition|word|path
  auto* stats = cli.add_subcommand("stats", "Statistics of a single object given as JSON");
  stats->require_subcommand(1);
  int st_m = 1, st_n = 0;
  std::string st_obj;
  for (std::string kind : {"partition", "word", "path"}) {
    auto* sub = stats->add_subcommand(kind, "Statistics of a " + kind);
    sub->add_option("--m", st_m, "Slope parameter")->check(CLI::PositiveNumber);
    sub->add_option("--n", st_n, "Size (path heights and triangle fit)");
    sub->add_option("object", st_obj, kind == "path" ? "JSON heights array or N/E step string" : "JSON array")->required();
    sub->callback([&, kind] {
      json in = json::parse(st_obj, nullptr, false);
      json out = {{"m", st_m}};
      if (kind == "partition") {
        Partition lam(in.get<std::vector<int>>());
        out["partition"] = lam.parts();
        out["area"] = lam.area();
        out["c_m"] = c_m_stat(lam, st_m);
        out["h_plus"] = h_plus(lam, st_m);
        if (st_n > 0) out["fits_triangle"] = fits_triangle(lam, st_m, st_n);
      } else if (kind == "word") {
        DyckWord w(in.get<std::vector<int>>(), st_m);
        out["word"] = w.entries();
        out["area"] = w.area();
        out["dinv"] = dinv_m(w, st_m);
      } else {
        std::optional<DyckPath> pi;
        if (in.is_array()) {
          auto h = in.get<std::vector<int>>();
          const int n = st_n > 0 ? st_n : static_cast<int>(h.size()) / st_m;
          pi.emplace(std::move(h), st_m, n);
        } else {
          pi.emplace(DyckPath::from_steps(in.is_string() ? in.get<std::string>() : st_obj, st_m));
        }
        BounceData bd = bounce(*pi, st_m);
        out["heights"] = pi->heights();
        out["steps"] = pi->steps();
        out["area"] = pi->area();
        out["v"] = bd.v;
        out["bounce"] = bd.b;
        out["partition"] = path_to_partition(*pi).parts();
      }
      std::cout << out.dump() << "\n";
    });
  }

  // dims
  int dm_n = 1, dm_m = 1, dm_d1 = -1, dm_d2 = -1;
  bool dm_csv = false;
  auto* dims = cli.add_subcommand("dims", "dim M^(m)_{d1,d2}, or the whole table");
  dims->add_option("--n", dm_n, "Number of point pairs")->required()->check(CLI::PositiveNumber);
  dims->add_option("--m", dm_m, "Power of the ideal")->check(CLI::PositiveNumber);
  dims->add_option("--d1", dm_d1, "x-degree; with --d2 prints one dimension")->check(CLI::NonNegativeNumber);
  dims->add_option("--d2", dm_d2, "y-degree")->check(CLI::NonNegativeNumber);
  dims->add_flag("--csv", dm_csv, "Emit the table as d1,d2,coeff rows");
  dims->callback([&] {
    const Budget b = app.budget();
    if (auto why = b.exceeded("dims", dm_m, dm_n)) {
      set(app.emit({skipped("dims", {{"n", dm_n}, {"m", dm_m}}, *why)}));
      return;
    }
    if ((dm_d1 < 0) != (dm_d2 < 0)) throw CLI::ValidationError("dims", "--d1 and --d2 go together");
    if (dm_d1 >= 0) {
      json out = {{"n", dm_n}, {"m", dm_m}, {"d1", dm_d1}, {"d2", dm_d2}, {"dim", dim_M(dm_n, dm_m, dm_d1, dm_d2)}};
      std::cout << out.dump() << "\n";
      return;
    }
    if (auto why = b.exceeded("ac", dm_m, dm_n)) {
      set(app.emit({skipped("dims", {{"n", dm_n}, {"m", dm_m}}, *why)}));
      return;
    }
    QtPoly table = compute_poly("ac", dm_m, dm_n, app.cache());
    if (dm_csv) std::cout << to_csv(table);
    else std::cout << to_json(table).dump() << "\n";
  });

  // check transfactor|grafting|staircase|conj61|higher-transfactor
  auto* check = cli.add_subcommand("check", "Lemma and conjecture suites");
  check->require_subcommand(1);
  std::string ck_n = "4", ck_m = "1";
  std::uint64_t ck_seed = 1;
  int ck_count = 50, ck_k = 0, ck_amax = 30;
  for (std::string kind : {"transfactor", "grafting", "staircase", "conj61", "higher-transfactor"}) {
    auto* sub = check->add_subcommand(kind, "Run the " + kind + " suite");
    sub->add_option("--n", ck_n, "n, a range a-b, or a list");
    sub->add_option("--m", ck_m, "m, a range or a list");
    if (kind == "transfactor" || kind == "grafting") {
      sub->add_option("--seed", ck_seed, "RNG seed");
      sub->add_option("--count", ck_count, "Random instances")->check(CLI::PositiveNumber);
    }
    if (kind == "staircase") sub->add_option("--a-max", ck_amax, "Partition identity bound");
    if (kind == "higher-transfactor") sub->add_option("--k", ck_k, "Degree deficit k")->check(CLI::NonNegativeNumber);
    sub->callback([&, kind] {
      const Budget b = app.budget();
      std::vector<std::function<CheckReport()>> tasks;
      for (int n : parse_list(ck_n)) {
        if (kind == "transfactor") tasks.push_back([=] { return transfactor_report(n, ck_count, ck_seed); });
        else if (kind == "grafting") tasks.push_back([=] { return grafting_report(n, ck_count, ck_seed); });
        else if (kind == "staircase") tasks.push_back([=] { return staircase_report(n, ck_amax); });
        else if (kind == "higher-transfactor") tasks.push_back([=] { return higher_transfactor_report(n, ck_k); });
        else
          for (int m : parse_list(ck_m)) tasks.push_back([=, &b] { return conj61_report(m, n, b); });
      }
      set(app.run_tasks(tasks));
    });
  }

  // phi
  int ph_n = 3, ph_d1 = -1, ph_d2 = -1;
  bool ph_inj = false, ph_wd = false, ph_hom = false;
  std::string ph_points;
  auto* phic = cli.add_subcommand("phi", "The phi map into the rho-polynomial ring");
  phic->add_option("--n", ph_n, "Number of point pairs")->check(CLI::PositiveNumber);
  phic->add_option("--d1", ph_d1, "x-degree; default is every bidegree with k <= n-3")->check(CLI::NonNegativeNumber);
  phic->add_option("--d2", ph_d2, "y-degree")->check(CLI::NonNegativeNumber);
  phic->add_option("--points", ph_points, "Evaluate phi on one point set, e.g. [[0,0],[1,0],[0,1]]");
  phic->add_flag("--injectivity", ph_inj, "Compare rank of phi with dim M");
  phic->add_flag("--welldefined", ph_wd, "Check that relations map to zero");
  phic->add_flag("--homogeneity", ph_hom, "Check weight homogeneity on every point set");
  phic->callback([&] {
    if (!ph_points.empty()) {
      RhoPoly r = phi(pointset_from_json(json::parse(ph_points)));
      if (app.g.json) std::cout << to_json(r).dump() << "\n";
      else std::cout << r.to_string() << "\n";
      return;
    }
    if ((ph_d1 < 0) != (ph_d2 < 0)) throw CLI::ValidationError("phi", "--d1 and --d2 go together");
    if (!ph_inj && !ph_wd && !ph_hom) ph_wd = ph_inj = true;
    std::vector<std::function<CheckReport()>> tasks;
    if (ph_wd || ph_inj) tasks.push_back([&] { return phi_report(ph_n, ph_d1, ph_d2, ph_wd, ph_inj); });
    if (ph_hom) tasks.push_back([&] { return phi_homogeneity_report(ph_n); });
    set(app.run_tasks(tasks));
  });

  // compare
  std::string cmp_m = "1", cmp_n = "3", cmp_which = "pc,wc,dc,rc,ac";
  auto* cmp = cli.add_subcommand("compare", "Exact equality across definitions");
  cmp->add_option("--m", cmp_m, "m, a range or a list");
  cmp->add_option("--n", cmp_n, "n, a range or a list");
  cmp->add_option("--which", cmp_which, "Comma-separated subset of pc,wc,dc,rc,ac");
  cmp->callback([&] {
    const Budget b = app.budget();
    const auto which = split(cmp_which);
    for (const auto& w : which)
      if (w != "pc" && w != "wc" && w != "dc" && w != "rc" && w != "ac") throw CLI::ValidationError("--which", "unknown definition " + w);
    std::vector<std::function<CheckReport()>> tasks;
    for (int m : parse_list(cmp_m))
      for (int n : parse_list(cmp_n)) tasks.push_back([&, m, n, which] { return compare_definitions(m, n, which, b, app.cache()); });
    set(app.run_tasks(tasks));
  });

  // limit
  std::string lim_m = "1", lim_n = "14,15";
  int lim_a = 6;
  auto* lim = cli.add_subcommand("limit", "Stabilization of the modified polynomials");
  lim->add_option("--m", lim_m, "m, a range or a list");
  lim->add_option("--a-max", lim_a, "Largest q-degree compared")->check(CLI::NonNegativeNumber);
  lim->add_option("--n", lim_n, "Sizes compared");
  lim->callback([&] {
    const Budget b = app.budget();
    const auto ns = parse_list(lim_n);
    std::vector<std::function<CheckReport()>> tasks;
    for (int m : parse_list(lim_m)) tasks.push_back([&, m, ns] { return limit_check(m, lim_a, ns, b); });
    set(app.run_tasks(tasks));
  });

  // coefficient thm35|cor46|thm14|conj56
  auto* coef = cli.add_subcommand("coefficient", "Dimensions against partition numbers");
  coef->require_subcommand(1);
  int cf_n = 5, cf_m = 1, cf_k = -1;
  const std::vector<std::pair<std::string, std::string>> regions{
      {"thm35", "m = 1, all bidegrees: dim <= p(min(d1,d2),k), equality iff k <= n-3, or k = n-2 and min = 1, or min = 0"},
      {"cor46", "k + d2 < n/2 - 1: dim = p(d2,k)"},
      {"thm14", "n >= 6, k <= n-6: dim = p(min(d1,d2),k)"},
      {"conj56", "m >= 2: dim <= p(min(d1,d2),k), equality iff k <= n-2"}};
  for (const auto& [region, about] : regions) {
    auto* sub = coef->add_subcommand(region, about);
    sub->add_option("--n", cf_n, "Number of point pairs")->check(CLI::PositiveNumber);
    sub->add_option("--m", cf_m, "Power of the ideal")->check(CLI::PositiveNumber);
    sub->add_option("--max-k", cf_k, "Only bidegrees with k <= this");
    sub->callback([&, region] {
      const Budget b = app.budget();
      if (region == "thm14" && b.exceeded("dims", cf_m, cf_n)) {
        set(app.emit({skipped("coefficient", {{"n", cf_n}, {"m", cf_m}, {"region", region}}, "outside dims_max_n")}));
        return;
      }
      set(app.emit({coefficient_theorem_check(cf_n, cf_m, region, b, cf_k)}));
    });
  }

  // specialization
  std::string sp_m = "1", sp_n = "3";
  auto* spec = cli.add_subcommand("specialization", "t = 1 and t = 1/q identities");
  spec->add_option("--m", sp_m, "m, a range or a list");
  spec->add_option("--n", sp_n, "n, a range or a list");
  spec->callback([&] {
    const Budget b = app.budget();
    std::vector<std::function<CheckReport()>> tasks;
    for (int m : parse_list(sp_m))
      for (int n : parse_list(sp_n)) tasks.push_back([&, m, n] { return specialization_check(m, n, b, app.cache()); });
    set(app.run_tasks(tasks));
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc_code;
}

// Acceptance suite: one line per criterion, with pinned time budgets.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>

#include "qtcat/verify.hpp"

using namespace qtcat;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
  void require(const CheckReport& r) {
    require(r.verdict == Verdict::Pass, r.to_text());
  }
};

QtPoly mono(int a, int b) { return QtPoly::monomial(a, b); }

Outcome criterion1() {
  Outcome o;
  QtPoly pc32 = mono(3, 0) + mono(2, 1) + mono(1, 2) + mono(0, 3);
  QtPoly pc23 = mono(6, 0) + mono(5, 1) + mono(4, 2) + mono(4, 1) + mono(3, 3) + mono(3, 2) + mono(2, 2) + mono(2, 3) +
                mono(1, 4) + mono(2, 4) + mono(1, 5) + mono(0, 6);
  o.require(pc_poly(3, 2) == pc32, "pc(3,2) = " + pc_poly(3, 2).to_string());
  o.require(pc_poly(2, 3) == pc23, "pc(2,3) = " + pc_poly(2, 3).to_string());
  o.require(pc23.terms().size() == 12, "expected 12 terms");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Partition lam({7, 5, 4});
  o.require(c_m_stat(lam, 2) == 13, "c_2(7,5,4) = " + std::to_string(c_m_stat(lam, 2)));
  o.require(lam.area() == 16, "area of (7,5,4)");
  DyckWord g({0, 2, 0, 1, 1}, 2);
  o.require(dinv_m(g, 2) == 13, "dinv_2 = " + std::to_string(dinv_m(g, 2)));
  o.require(g.area() == 4, "word area = " + std::to_string(g.area()));
  DyckPath pi({2, 2, 2, 2, 3, 4, 4, 5, 5, 5}, 2, 5);
  BounceData b = bounce(pi, 2);
  o.require(b.v == std::vector<int>{2, 0, 1, 1, 1, 0}, "bounce runs");
  o.require(b.b == 9, "b_2 = " + std::to_string(b.b));
  return o;
}

Outcome criterion3(const Budget& budget, ResultCache* cache, int workers) {
  Outcome o;
  std::vector<std::function<CheckReport()>> tasks;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) tasks.push_back([=, &budget] { return compare_definitions(m, n, {"pc", "wc", "dc"}, budget, cache); });
  for (const auto& r : run_parallel(tasks, workers)) {
    o.require(r);
    o.require(r.seconds < 60.0, "comparison over 60 s: " + r.params.dump());
  }
  return o;
}

Outcome criterion4(const Budget& budget, ResultCache* cache) {
  Outcome o;
  const std::vector<std::tuple<int, int, int>> cases{{1, 2, 2}, {1, 3, 5}, {1, 4, 14}, {2, 2, 3}, {2, 3, 12}, {1, 5, 42}};
  for (auto [m, n, cat] : cases) {
    o.require(compare_definitions(m, n, {"pc", "ac"}, budget, cache));
    o.require(higher_catalan(m, n) == cat, "Catalan number for " + std::to_string(m) + "," + std::to_string(n));
  }
  return o;
}

Outcome criterion5(const Budget& budget, ResultCache* cache) {
  Outcome o;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 4; ++n) o.require(compare_definitions(m, n, {"pc", "rc"}, budget, cache));
    for (int n = 1; n <= 5; ++n) {
      CheckReport r = specialization_check(m, n, budget, cache);
      o.require(r);
      o.require(r.detail.empty(), "specialization skipped part: " + r.detail);
    }
  }
  return o;
}

Outcome criterion6(const Budget& budget) {
  Outcome o;
  for (int m = 1; m <= 2; ++m) o.require(limit_check(m, 6, {14, 15}, budget));
  return o;
}

Outcome criterion7(const Budget& budget) {
  Outcome o;
  CheckReport r = coefficient_theorem_check(5, 1, "thm35", budget);
  o.require(r);
  bool boundary_strict = false;
  for (const auto& w : r.params["strict_cases"])
    if (w["k"] == 3 && std::min(w["d1"].get<int>(), w["d2"].get<int>()) >= 2) boundary_strict = true;
  o.require(boundary_strict, "no strict inequality at k = 3 with min(d1,d2) >= 2");
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.require(transfactor_report(4, 25, 11));
  o.require(transfactor_report(5, 50, 12));
  o.require(grafting_report(4, 20, 13));
  for (int n = 2; n <= 5; ++n) o.require(staircase_report(n, n == 5 ? 30 : 0));
  return o;
}

Outcome criterion9() {
  Outcome o;
  RhoPoly r2;
  r2.add_term({2}, 2);
  r2.add_term({1, 1}, 1);
  o.require(h_poly(2, 2) == r2, "h(2,2) = " + h_poly(2, 2).to_string());
  for (int n = 1; n <= 4; ++n) {
    for (int deg = 0; deg <= binom2(n) + 2; ++deg)
      for (int u = 0; u <= deg; ++u)
        for_each_pointset(n, u, deg - u, [&](const PointSet& d) {
          RhoPoly p = phi(d);
          o.require(p.is_zero() || p.homogeneous_weight() == d.k(), "phi weight at " + d.to_string());
        });
  }
  for (int n = 3; n <= 5; ++n) o.require(phi_report(n, -1, -1, true, true));
  return o;
}

Outcome criterion10(const Budget& budget) {
  Outcome o;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 2}}) o.require(conj61_report(m, n, budget));
  return o;
}

Outcome cache_round_trip(ResultCache& cache) {
  Outcome o;
  for (std::string verb : {"pc", "wc", "dc", "rc", "ac"}) {
    const json params = {{"m", 1}, {"n", 3}};
    QtPoly p = compute_poly(verb, 1, 3, &cache);
    auto back = cache.get(verb, params);
    o.require(back.has_value(), verb + ": no verified cache entry");
    if (back) o.require(qtpoly_from_json(*back) == p, verb + ": payload differs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::string cache_dir = (std::filesystem::temp_directory_path() / "qtcat-acceptance").string();
  int workers = 1;
  app.add_option("--cache-dir", cache_dir, "result cache directory");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::filesystem::remove_all(cache_dir);
  ResultCache cache(cache_dir);
  const Budget budget;

  struct Criterion {
    std::string label;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 pc values", 1, criterion1},
      {"2 statistic spot checks", 1, criterion2},
      {"3 PC = WC = DC, m <= 3, n <= 6", 18 * 60, [&] { return criterion3(budget, &cache, workers); }},
      {"4 AC = PC and Catalan sums", 30 * 60, [&] { return criterion4(budget, &cache); }},
      {"5 RC = PC and specializations", 10 * 60, [&] { return criterion5(budget, &cache); }},
      {"6 limit stabilization at n = 14, 15", 5 * 60, [&] { return criterion6(budget); }},
      {"7 dimension table at n = 5", 20 * 60, [&] { return criterion7(budget); }},
      {"8 lemma suites", 15 * 60, criterion8},
      {"9 phi map", 10 * 60, criterion9},
      {"10 generator span", 15 * 60, [&] { return criterion10(budget); }},
      {"cache round trip", 60, [&] { return cache_round_trip(cache); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < c.limit_seconds, "over time budget");
    all = all && o.ok;
    std::printf("%s  criterion %-40s %9.3f s (limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", c.label.c_str(), secs, c.limit_seconds,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}

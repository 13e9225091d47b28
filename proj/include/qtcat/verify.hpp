// Cross-definition comparisons, limit and coefficient checks, the on-disk
// result cache, budgets, and a small worker pool.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qtcat/catalan.hpp"
#include "qtcat/diagonal_module.hpp"
#include "qtcat/lemmas.hpp"
#include "qtcat/rational_formula.hpp"
#include "qtcat/rho.hpp"

namespace qtcat {

using nlohmann::json;

enum class Verdict { Pass, Fail, Skipped };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "skipped";
  }
}

struct CheckReport {
  std::string name;
  json params = json::object();
  Verdict verdict = Verdict::Pass;
  json witnesses = json::array();
  std::string detail;
  double seconds = 0;

  void fail(json witness) {
    verdict = Verdict::Fail;
    witnesses.push_back(std::move(witness));
  }

  json to_json() const {
    return {{"check", name}, {"params", params}, {"verdict", qtcat::to_string(verdict)},
            {"witnesses", witnesses}, {"detail", detail}, {"seconds", seconds}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "[" << qtcat::to_string(verdict) << "] " << name << " " << params.dump();
    if (!detail.empty()) os << " " << detail;
    os << " (" << std::fixed << std::setprecision(3) << seconds << " s)";
    for (const auto& w : witnesses) os << "\n    witness: " << w.dump();
    return os.str();
  }
};

/// Runs f and records its wall time; exceptions become failures.
inline CheckReport timed(const std::string& name, json params, const std::function<void(CheckReport&)>& f) {
  CheckReport r;
  r.name = name;
  r.params = std::move(params);
  auto t0 = std::chrono::steady_clock::now();
  try {
    f(r);
  } catch (const std::exception& e) {
    r.fail({{"exception", e.what()}});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Size limits per definition. Anything past them is reported as skipped.
struct Budget {
  int comb_max_n = 16;
  int comb_max_m = 3;
  double comb_max_objects = 2e7;  // higher Catalan number cap for full enumeration
  int rc_max_n = 6;
  int ac_max_n_m1 = 5;
  int ac_max_n_m2 = 4;
  int ac_max_n_other = 2;
  int dims_max_n = 6;

  /// `key = value` lines; '#' starts a comment.
  static Budget parse(std::istream& in) {
    Budget b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      auto eq = line.find('=');
      auto trim = [](std::string s) {
        const char* ws = " \t\r";
        s.erase(0, s.find_first_not_of(ws));
        s.erase(s.find_last_not_of(ws) + 1);
        return s;
      };
      if (trim(line).empty()) continue;
      if (eq == std::string::npos) throw std::invalid_argument("budget file line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      try {
        if (key == "comb_max_n") b.comb_max_n = std::stoi(val);
        else if (key == "comb_max_m") b.comb_max_m = std::stoi(val);
        else if (key == "comb_max_objects") b.comb_max_objects = std::stod(val);
        else if (key == "rc_max_n") b.rc_max_n = std::stoi(val);
        else if (key == "ac_max_n_m1") b.ac_max_n_m1 = std::stoi(val);
        else if (key == "ac_max_n_m2") b.ac_max_n_m2 = std::stoi(val);
        else if (key == "ac_max_n_other") b.ac_max_n_other = std::stoi(val);
        else if (key == "dims_max_n") b.dims_max_n = std::stoi(val);
        else throw std::invalid_argument("budget file line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) && std::string(e.what()).rfind("budget file", 0) == 0) throw;
        throw std::invalid_argument("budget file line " + std::to_string(lineno) + ": bad value '" + val + "'");
      }
    }
    return b;
  }

  static Budget load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open budget file " + path);
    return parse(in);
  }

  /// Empty when (verb, m, n) is within budget, else the reason.
  std::optional<std::string> exceeded(const std::string& verb, int m, int n) const {
    if (verb == "pc" || verb == "wc" || verb == "dc") {
      if (n > comb_max_n || m > comb_max_m) return "outside comb_max_n/comb_max_m";
      if (higher_catalan(m, n).get_d() > comb_max_objects) return "object count exceeds comb_max_objects";
    } else if (verb == "rc") {
      if (n > rc_max_n) return "outside rc_max_n";
    } else if (verb == "ac") {
      const int cap = m == 1 ? ac_max_n_m1 : m == 2 ? ac_max_n_m2 : ac_max_n_other;
      if (n > cap) return "outside the ac budget for this m";
    } else if (verb == "dims") {
      if (n > dims_max_n) return "outside dims_max_n";
    }
    return std::nullopt;
  }
};

/// 64-bit FNV-1a, hex.
inline std::string content_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// One JSON file per (verb, params) holding the payload and its hash.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root) : root_(std::move(root)) { std::filesystem::create_directories(root_); }

  static std::string key(const std::string& verb, const json& params) { return verb + " " + params.dump(); }

  std::filesystem::path path_for(const std::string& verb, const json& params) const {
    std::string name = verb + "-" + content_hash(params.dump()) + ".json";
    return root_ / name;
  }

  /// Payload on a hit whose hash verifies; nullopt otherwise.
  std::optional<json> get(const std::string& verb, const json& params) const {
    std::lock_guard lock(mu_);
    std::ifstream in(path_for(verb, params));
    if (!in) return std::nullopt;
    json doc;
    try {
      in >> doc;
    } catch (const json::exception&) {
      return std::nullopt;
    }
    if (!doc.contains("payload") || doc.value("verb", "") != verb || doc.value("params", json()) != params) return std::nullopt;
    if (doc.value("hash", "") != content_hash(doc["payload"].dump())) return std::nullopt;
    return doc["payload"];
  }

  void put(const std::string& verb, const json& params, const json& payload) {
    std::lock_guard lock(mu_);
    json doc = {{"verb", verb}, {"params", params}, {"hash", content_hash(payload.dump())}, {"payload", payload}};
    auto p = path_for(verb, params);
    auto tmp = p;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << doc.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, p);
  }

 private:
  std::filesystem::path root_;
  mutable std::mutex mu_;
};

/// Computes pc/wc/dc/rc/ac, going through the cache when one is given.
inline QtPoly compute_poly(const std::string& verb, int m, int n, ResultCache* cache = nullptr) {
  const json params = {{"m", m}, {"n", n}};
  if (cache)
    if (auto hit = cache->get(verb, params)) return qtpoly_from_json(*hit);
  QtPoly p;
  if (verb == "pc") p = pc_poly(m, n);
  else if (verb == "wc") p = wc_poly(m, n);
  else if (verb == "dc") p = dc_poly(m, n);
  else if (verb == "rc") p = rc_poly(m, n);
  else if (verb == "ac") p = ac_poly(m, n);
  else throw std::invalid_argument("unknown definition '" + verb + "'");
  if (cache) cache->put(verb, params, to_json(p));
  return p;
}

inline CheckReport compare_definitions(int m, int n, const std::vector<std::string>& which, const Budget& budget,
                                       ResultCache* cache = nullptr) {
  return timed("compare", {{"m", m}, {"n", n}, {"which", which}}, [&](CheckReport& r) {
    std::vector<std::pair<std::string, QtPoly>> polys;
    std::vector<std::string> skipped;
    for (const auto& w : which) {
      if (auto why = budget.exceeded(w, m, n)) {
        skipped.push_back(w + ": " + *why);
        continue;
      }
      polys.emplace_back(w, compute_poly(w, m, n, cache));
    }
    if (polys.size() < 2) {
      r.verdict = Verdict::Skipped;
      r.detail = "fewer than two definitions within budget";
    }
    for (std::size_t i = 1; i < polys.size(); ++i)
      if (!(polys[i].second == polys[0].second))
        r.fail({{"pair", polys[0].first + "/" + polys[i].first},
                {polys[0].first, to_json(polys[0].second)},
                {polys[i].first, to_json(polys[i].second)}});
    const mpz_class cat = higher_catalan(m, n);
    for (const auto& [w, p] : polys)
      if (p.coefficient_sum() != cat) r.fail({{"definition", w}, {"coefficient_sum", p.coefficient_sum().get_str()}, {"expected", cat.get_str()}});
    if (!skipped.empty()) {
      std::string s;
      for (const auto& x : skipped) s += (s.empty() ? "" : "; ") + x;
      r.detail = (r.detail.empty() ? "" : r.detail + "; ") + "skipped " + s;
    }
  });
}

/// Truncated modified PC and DC at each n must agree with prod 1/(1 - t q^i) up to q^a_max.
inline CheckReport limit_check(int m, int a_max, const std::vector<int>& n_list, const Budget& budget) {
  return timed("limit", {{"m", m}, {"a_max", a_max}, {"n", n_list}}, [&](CheckReport& r) {
    const QtSeries target = partition_product_series(a_max);
    auto compare = [&](const std::string& what, int n, const QtPoly& p) {
      QtSeries s(a_max);
      for (const auto& [e, c] : p.terms()) s.add_term(e.first, e.second, c);
      if (!(s == target)) {
        for (int a = 0; a <= a_max; ++a)
          for (int b = 0; b <= a; ++b)
            if (s.coeff(a, b) != target.coeff(a, b)) {
              r.fail({{"series", what}, {"n", n}, {"q", a}, {"t", b}, {"got", s.coeff(a, b).get_str()}, {"expected", target.coeff(a, b).get_str()}});
              return;
            }
        r.fail({{"series", what}, {"n", n}, {"note", "extra terms beyond t-degree a_max"}});
      }
    };
    std::vector<std::string> notes;
    for (int n : n_list) {
      compare("pc", n, modified_pc_truncated(m, n, a_max));
      compare("dc", n, modified_dc_truncated(m, n, a_max));
      if (!budget.exceeded("ac", m, n)) compare("ac", n, truncate_q(compute_poly("ac", m, n).modify(m * binom2(n)), a_max));
      else notes.push_back("ac skipped at n=" + std::to_string(n));
    }
    for (const auto& s : notes) r.detail += (r.detail.empty() ? "" : "; ") + s;
  });
}

/// Dimension table checks against partition numbers.
///   thm35: m = 1, every bidegree with k >= 0: dim <= p(delta,k), with equality
///          iff k <= n-3, or k = n-2 and delta = 1, or delta = 0.
///   cor46: k + d2 < n/2 - 1: dim M^(m)_{d1,d2} = p(d2,k).
///   thm14: n >= 6, k <= n-6: dim = p(delta,k).
///   conj56: m >= 2: dim <= p(delta,k), equality iff k <= n-2 (reported, not asserted by the suite).
inline CheckReport coefficient_theorem_check(int n, int m, const std::string& region, const Budget& budget, int max_k = -1) {
  return timed("coefficient", {{"n", n}, {"m", m}, {"region", region}, {"max_k", max_k}}, [&](CheckReport& r) {
    if (budget.exceeded("ac", m, n) && region != "cor46" && region != "thm14") {
      r.verdict = Verdict::Skipped;
      r.detail = "outside the ac budget";
      return;
    }
    const int top = m * binom2(n);
    DiagonalModule& mod = module_for(n, m);
    int equal = 0, strict = 0;
    json strict_cases = json::array();
    auto visit = [&](int d1, int d2, bool expect_equal, bool bound_only) {
      const int k = top - d1 - d2;
      const int delta = std::min(d1, d2);
      const std::int64_t p = partition_count(region == "cor46" ? d2 : delta, k);
      const int dim = mod.dim_M(d1, d2);
      json w = {{"d1", d1}, {"d2", d2}, {"k", k}, {"dim", dim}, {"p", p}};
      if (dim > p) {
        r.fail(w);
        return;
      }
      if (dim == p) ++equal;
      else {
        ++strict;
        if (strict_cases.size() < 50) strict_cases.push_back(w);
      }
      if (!bound_only && ((dim == p) != expect_equal)) r.fail(w);
    };
    if (region == "thm35") {
      if (m != 1) throw std::invalid_argument("thm35 applies to m = 1");
      for (int k = 0; k <= top && (max_k < 0 || k <= max_k); ++k)
        for (int d1 = 0; d1 <= top - k; ++d1) {
          const int d2 = top - k - d1;
          const int delta = std::min(d1, d2);
          visit(d1, d2, k <= n - 3 || (k == n - 2 && delta == 1) || delta == 0, false);
        }
    } else if (region == "cor46") {
      if (n < 3) throw std::invalid_argument("cor46 needs n >= 3");
      // k + d2 < n/2 - 1
      for (int k = 0; 2 * k < n - 2; ++k)
        for (int d2 = 0; 2 * (k + d2) < n - 2; ++d2) visit(top - k - d2, d2, true, false);
    } else if (region == "thm14") {
      if (n < 6) throw std::invalid_argument("thm14 needs n >= 6");
      for (int k = 0; k <= n - 6 && (max_k < 0 || k <= max_k); ++k)
        for (int d1 = 0; d1 <= top - k; ++d1) visit(d1, top - k - d1, true, false);
    } else if (region == "conj56") {
      for (int k = 0; k <= top && (max_k < 0 || k <= max_k); ++k)
        for (int d1 = 0; d1 <= top - k; ++d1) visit(d1, top - k - d1, k <= n - 2, false);
    } else {
      throw std::invalid_argument("unknown region '" + region + "'");
    }
    r.detail = std::to_string(equal) + " bidegrees with equality, " + std::to_string(strict) + " strict";
    r.params["strict_cases"] = strict_cases;
  });
}

/// t = 1 and t = 1/q specializations.
inline CheckReport specialization_check(int m, int n, const Budget& budget, ResultCache* cache = nullptr) {
  return timed("specialization", {{"m", m}, {"n", n}}, [&](CheckReport& r) {
    QtPoly area_gf;
    for_each_dyck_path(m, n, [&](const DyckPath& pi) { area_gf.add_term(pi.area(), 0, 1); });
    const QtPoly target = q_fuss_catalan(m, n);
    const int shift = m * binom2(n);
    std::vector<std::string> skipped;
    std::map<std::string, QtPoly> polys;
    for (std::string w : {"pc", "wc", "dc", "rc"}) {
      if (auto why = budget.exceeded(w, m, n)) skipped.push_back(w);
      else polys[w] = compute_poly(w, m, n, cache);
    }
    if (polys.count("rc") && !(polys["rc"].at_t_one() == area_gf)) r.fail({{"identity", "rc(q,1) = area generating function"}});
    if (polys.count("pc") && polys.count("dc") && !(polys["pc"].at_t_one() == polys["dc"].swap_variables().at_t_one()))
      r.fail({{"identity", "pc(q,1) = dc(1,q)"}});
    for (const auto& [w, p] : polys) {
      QtPoly s = p.at_t_inverse_q().shift(shift, 0);
      if (!(s == target)) r.fail({{"identity", w + " at t = 1/q"}, {"got", to_json(s)}, {"expected", to_json(target)}});
    }
    if (!skipped.empty()) {
      std::string s;
      for (const auto& x : skipped) s += (s.empty() ? "" : ",") + x;
      r.detail = "skipped " + s;
      if (polys.empty()) r.verdict = Verdict::Skipped;
    }
  });
}

inline void absorb(CheckReport& r, const CheckOutcome& o, const std::string& label) {
  r.params[label + "_cases"] = o.cases;
  if (!o.pass)
    for (const auto& w : o.witnesses) r.fail({{"suite", label}, {"witness", w}});
}

/// Column words of the two staircase forms in the grafting example (n = 5, r = 3).
inline const std::vector<std::string>& graft_example_left() {
  static const std::vector<std::string> w{"", "x", "xy", "xx", "xxx"};
  return w;
}
inline const std::vector<std::string>& graft_example_right() {
  static const std::vector<std::string> w{"", "y", "yy", "xy", "xx"};
  return w;
}

inline CheckReport transfactor_report(int n, int count, std::uint64_t seed) {
  return timed("transfactor", {{"n", n}, {"count", count}, {"seed", seed}}, [&](CheckReport& r) {
    absorb(r, transfactor_random_check(n, count, seed), "random");
  });
}

inline CheckReport grafting_report(int n, int count, std::uint64_t seed) {
  return timed("grafting", {{"n", n}, {"count", count}, {"seed", seed}}, [&](CheckReport& r) {
    if (!staircase_graft_exact(graft_example_left(), graft_example_right(), 3))
      r.fail({{"suite", "example"}, {"witness", "exact product identity for the n = 5, r = 3 example"}});
    absorb(r, grafting_random_check(n, count, seed), "random");
  });
}

/// Block-count bound on every staircase form at n, and sum_i p(i, a-i) = p(a) for a <= a_max.
inline CheckReport staircase_report(int n, int a_max) {
  return timed("staircase", {{"n", n}, {"a_max", a_max}}, [&](CheckReport& r) {
    absorb(r, block_count_check(n), "block_count");
    for (int a = 0; a <= a_max; ++a)
      if (!partition_sum_identity(a)) r.fail({{"suite", "partition_sum"}, {"a", a}});
  });
}

inline CheckReport higher_transfactor_report(int n, int k) {
  return timed("higher-transfactor", {{"n", n}, {"k", k}}, [&](CheckReport& r) { absorb(r, higher_transfactor_check(n, k), "containment"); });
}

inline CheckReport conj61_report(int m, int n, const Budget& budget) {
  return timed("conj61", {{"m", m}, {"n", n}}, [&](CheckReport& r) {
    if (auto why = budget.exceeded("ac", m, n)) {
      r.verdict = Verdict::Skipped;
      r.detail = *why;
      return;
    }
    absorb(r, generator_span_check(m, n), "span");
  });
}

/// phi value is zero or homogeneous of weight k(D), for every D with k(D) >= -extra.
inline CheckReport phi_homogeneity_report(int n, int extra = 2) {
  return timed("phi-homogeneity", {{"n", n}, {"extra", extra}}, [&](CheckReport& r) {
    std::size_t cases = 0;
    for (int deg = 0; deg <= binom2(n) + extra; ++deg)
      for (int u = 0; u <= deg; ++u)
        for_each_pointset(n, u, deg - u, [&](const PointSet& d) {
          ++cases;
          try {
            phi(d);
          } catch (const std::logic_error& e) {
            r.fail({{"D", d.to_string()}, {"error", e.what()}});
          }
        });
    r.params["cases"] = cases;
  });
}

/// Well-definedness (and, when asked, injectivity) of phi on the given
/// bidegree, or on every bidegree with 0 <= k <= n-3 when d1 < 0.
inline CheckReport phi_report(int n, int d1, int d2, bool welldefined, bool injectivity) {
  return timed("phi", {{"n", n}, {"d1", d1}, {"d2", d2}, {"welldefined", welldefined}, {"injectivity", injectivity}},
               [&](CheckReport& r) {
    std::vector<std::pair<int, int>> degs;
    const int c = binom2(n);
    if (d1 >= 0) degs.emplace_back(d1, d2);
    else
      for (int k = 0; k <= n - 3; ++k)
        for (int u = 0; u <= c - k; ++u) degs.emplace_back(u, c - k - u);
    json ranks = json::array();
    for (auto [u, v] : degs) {
      if (welldefined && !phi_welldefined_check(n, u, v)) r.fail({{"d1", u}, {"d2", v}, {"property", "well-defined"}});
      if (injectivity) {
        InjectivityResult inj = phi_injectivity_check(n, u, v);
        ranks.push_back({{"d1", u}, {"d2", v}, {"rank", inj.rank}, {"dim", inj.dim}});
        if (!inj.pass()) r.fail({{"d1", u}, {"d2", v}, {"property", "injective"}, {"rank", inj.rank}, {"dim", inj.dim}});
      }
    }
    if (injectivity) r.params["ranks"] = ranks;
  });
}

/// Removing the last point: phi compatibility and injectivity of f -> f0 f,
/// over every (n-1)-point bidegree with k' <= n-4 and every split c.
inline CheckReport phi_extension_report(int n) {
  return timed("phi-extension", {{"n", n}}, [&](CheckReport& r) {
    const int c1 = binom2(n - 1);
    CheckOutcome all;
    for (int k = 0; k <= n - 4; ++k)
      for (int d1p = 0; d1p <= c1 - k; ++d1p)
        for (int c = 0; c < n; ++c) {
          CheckOutcome o = phi_extension_check(n, d1p, c1 - k - d1p, c);
          all.cases += o.cases;
          for (const auto& w : o.witnesses) all.fail(w);
        }
    absorb(r, all, "extension");
  });
}

/// Runs tasks on up to `workers` threads; results keep task order.
inline std::vector<CheckReport> run_parallel(const std::vector<std::function<CheckReport()>>& tasks, int workers) {
  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const int w = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < w; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// d1,d2,coeff rows sorted by (d1, d2).
inline std::string to_csv(const QtPoly& p) {
  std::string s = "d1,d2,coeff\n";
  for (const auto& [e, c] : p.terms()) s += std::to_string(e.first) + "," + std::to_string(e.second) + "," + c.get_str() + "\n";
  return s;
}

}  // namespace qtcat

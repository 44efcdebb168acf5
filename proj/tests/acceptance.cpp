// One pass/fail line per acceptance criterion. Every criterion requires zero failed
// checks (set equalities are exact) and a wall time under 60 s per suite run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "polarity/catalog.hpp"
#include "polarity/error.hpp"
#include "polarity/verify.hpp"

namespace {

using polarity::SuiteReport;
using polarity::VerifyParams;

constexpr double kTimeLimitSeconds = 60.0;

struct Timed {
  SuiteReport report;
  double seconds = 0;
};

Timed timed_run(const std::string& suite, VerifyParams params) {
  const auto start = std::chrono::steady_clock::now();
  Timed t;
  try {
    t.report = polarity::run_suite(suite, params);
  } catch (const polarity::Error& e) {
    t.report.suite = suite;
    t.report.aborted = e.what();
  }
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

VerifyParams with_count(std::size_t n) {
  VerifyParams p;
  p.seed = 1;
  p.count = n;
  return p;
}

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// Shared requirements: the run finished, nothing failed, it was fast enough and every
// named check actually ran.
void require_clean(Verdict& v, const Timed& t, const std::vector<std::string>& checks) {
  const SuiteReport& r = t.report;
  if (r.aborted) v.require(false, r.suite + " aborted: " + *r.aborted);
  v.require(r.failure_count == 0, r.suite + " has " + std::to_string(r.failure_count) + " failed checks");
  v.require(t.seconds < kTimeLimitSeconds, r.suite + " took " + std::to_string(t.seconds) + " s");
  for (const auto& c : checks) {
    auto it = r.checks.find(c);
    v.require(it != r.checks.end() && it->second.checked > 0, r.suite + " ran no '" + c + "' checks");
  }
}

std::string summary(const Timed& t, const std::vector<std::string>& checks) {
  std::string out = t.report.suite + " " + std::to_string(t.report.instances) + " instances";
  for (const auto& c : checks) {
    auto it = t.report.checks.find(c);
    if (it == t.report.checks.end()) continue;
    out += ", " + c + " " + std::to_string(it->second.checked - it->second.failed) + "/" +
           std::to_string(it->second.checked);
  }
  char time[32];
  std::snprintf(time, sizeof time, " (%.2f s)", t.seconds);
  return out + time;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const std::string& title, const Verdict& v, const std::string& info) {
    std::printf("criterion %2d %s: %s: %s%s%s\n", id, v.ok ? "PASS" : "FAIL", title.c_str(), info.c_str(),
                v.detail.empty() ? "" : " | ", v.detail.c_str());
    if (!v.ok) ++failed;
  };

  const std::size_t catalog_frames = polarity::catalog_expansions().size();

  {
    const std::vector<std::string> checks{"closure-coincidence-1", "closure-coincidence-d"};
    const Timed t = timed_run("galois", with_count(200));
    Verdict v;
    require_clean(v, t, checks);
    v.require(t.report.instances >= 200 + catalog_frames, "fewer than 200 random frames plus the catalog frames");
    // Every incidence relation up to 4 x 4 as well, not only the sample.
    VerifyParams all;
    all.exhaustive = true;
    all.max_a = 4;
    all.max_b = 4;
    const Timed e = timed_run("galois", all);
    require_clean(v, e, checks);
    report(1, "closure coincidence", v, summary(t, checks) + "; exhaustive " + summary(e, checks));
  }

  const Timed concepts = timed_run("concepts", with_count(50));
  {
    const std::vector<std::string> checks{"isomorphism"};
    Verdict v;
    require_clean(v, concepts, checks);
    const auto it = concepts.report.checks.find("isomorphism");
    v.require(it != concepts.report.checks.end() && it->second.checked == 7, "isomorphism not checked on all 7 lattices");
    report(2, "concept lattice representation", v, summary(concepts, checks));
  }
  {
    const std::vector<std::string> checks{"operator-roundtrip", "section-stable", "remark-oracle"};
    Verdict v;
    require_clean(v, concepts, checks);
    report(3, "canonical operator round trip", v, summary(concepts, checks));
  }
  {
    const std::vector<std::string> checks{"join-distribution", "bottom-preservation"};
    const Timed t = timed_run("prop21", with_count(0));
    Verdict v;
    require_clean(v, t, checks);
    v.require(t.report.instances == catalog_frames, "not every catalog expansion was checked");
    report(4, "join distribution", v, summary(t, checks));
  }
  {
    const std::vector<std::string> checks{"extent", "intent", "entailment", "duality", "induced-stable"};
    const Timed t = timed_run("thm31", with_count(100));
    Verdict v;
    require_clean(v, t, checks);
    v.require(t.report.instances == 100, "expected 100 instances");
    report(5, "translation theorem", v, summary(t, checks));
  }
  {
    const std::vector<std::string> checks{"translation-stable", "range"};
    const Timed t = timed_run("cor31", with_count(50));
    Verdict v;
    require_clean(v, t, checks);
    report(6, "stable range of the translation", v, summary(t, checks));
  }
  {
    const std::vector<std::string> st_checks{"agreement", "agreement-all-points"};
    const std::vector<std::string> sr_checks{"agreement", "constraints"};
    const Timed st = timed_run("prop41", with_count(200));
    const Timed sr = timed_run("sortreduce", with_count(200));
    Verdict v;
    require_clean(v, st, st_checks);
    require_clean(v, sr, sr_checks);
    v.require(st.report.instances == 200 && sr.report.instances == 200, "expected 200 instances each");
    report(7, "standard translation and sort reduction", v, summary(st, st_checks) + "; " + summary(sr, sr_checks));
  }
  {
    const std::vector<std::string> checks{"invariance", "bounded-equivalence", "distinguishing", "union-oracle",
                                          "fixpoint-sound"};
    const Timed t = timed_run("bisim-invariance", with_count(50));
    Verdict v;
    require_clean(v, t, checks);
    v.require(t.report.instances == 50, "expected 50 instances");
    report(8, "bisimulation invariance", v, summary(t, checks));
  }
  {
    const std::vector<std::string> checks{"translation-stable", "control-unstable"};
    const Timed t = timed_run("stability", with_count(50));
    Verdict v;
    require_clean(v, t, checks);
    const auto it = t.report.checks.find("translation-stable");
    v.require(it != t.report.checks.end() && it->second.checked == 50, "expected 50 translated sentences");
    report(9, "stability of translated sentences", v, summary(t, checks));
  }
  {
    const std::vector<std::string> checks{"K", "B", "D-serial", "D-nonserial-refuted"};
    const Timed t = timed_run("axioms", with_count(100));
    Verdict v;
    require_clean(v, t, checks);
    v.require(t.report.instances >= 100, "expected 100 frames");
    report(10, "axioms", v, summary(t, checks));
  }

  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}

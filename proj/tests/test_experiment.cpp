#include <doctest.h>

#include <sstream>

#include "dibs/errors.hpp"
#include "dibs/experiment.hpp"

using namespace dibs;

namespace {

std::string csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("empty sweep writes only the header") {
  SweepParams p;
  p.models = {"blowup"};
  CHECK(csv(run_g_curve(p)) == std::string(kCsvHeader) + "\n");
  CHECK(csv(run_f_curve(p)) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("unknown model") {
  SweepParams p;
  p.ns = {10};
  p.models = {"nope"};
  CHECK_THROWS_AS(run_f_curve(p), PreconditionError);
  p.ds = {2};
  CHECK_THROWS_AS(run_g_curve(p), PreconditionError);
}

TEST_CASE("g-curve rows meet their guarantees") {
  SweepParams p;
  p.ns = {500};
  p.ds = {25, 50, 100, 200};
  p.models = {"blowup"};
  p.timing = false;
  const auto rows = run_g_curve(p);
  int pairs = 0;
  for (const auto& r : rows) {
    CHECK(r.n == 500);
    CHECK(r.achieved >= r.guarantee);
    if (r.algo == "dense-pair") {
      ++pairs;
      CHECK(r.guarantee == (r.d_or_m * r.d_or_m + 999) / 1000);
    }
  }
  CHECK(pairs == 4);
  // byte-identical without timing
  CHECK(csv(run_g_curve(p)) == csv(rows));
  std::istringstream in(csv(rows));
  const auto back = read_csv(in);
  CHECK(back.size() == rows.size());
  CHECK(csv(back) == csv(rows));
}

TEST_CASE("f-curve on C5") {
  SweepParams p;
  p.ns = {5};
  p.models = {"cycle"};
  p.timing = false;
  const auto rows = run_f_curve(p);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.d_or_m == 5);
    CHECK(r.achieved >= r.guarantee);
    if (r.algo == "color-pair") CHECK(r.achieved >= 2);
    else CHECK(r.achieved == 1);  // C5 has no 4-cycles: one edge
  }
}

TEST_CASE("f-curve models") {
  SweepParams p;
  p.ns = {64, 200};
  p.models = {"cycle", "blowup", "process", "gnp-tf", "alon"};
  p.seeds = {1, 2};
  p.timing = false;
  const auto rows = run_f_curve(p);
  CHECK(rows.size() >= 10);
  for (const auto& r : rows) CHECK(r.achieved >= r.guarantee);
}

TEST_CASE("csv reader rejects bad input") {
  std::istringstream bad_header("n,d\n");
  CHECK_THROWS_AS(read_csv(bad_header), InputError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), InputError);
  std::istringstream bad_num(std::string(kCsvHeader) + "\nx,2,m,1,a,1,1,0.000\n");
  CHECK_THROWS_AS(read_csv(bad_num), InputError);
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rays/error.hpp"
#include "rays/interval_set.hpp"

using namespace rays;

namespace {
Rational Q(long n, long d = 1) { return oracle::frac(n, d); }
}  // namespace

TEST_CASE("construction checks order and disjointness") {
  IntervalSet s({{Q(0), Q(1, 4)}, {Q(1, 2), Q(1, 2)}});
  CHECK(s.size() == 2);
  CHECK(s.measure() == Q(1, 4));
  CHECK(s.contains(Q(1, 2)));
  CHECK_FALSE(s.contains(Q(1, 3)));
  CHECK_THROWS_AS(IntervalSet({{Q(1, 2), Q(1, 4)}}), Error);
  CHECK_THROWS_AS(IntervalSet({{Q(0), Q(1, 2)}, {Q(1, 2), Q(1)}}), Error);
  CHECK_THROWS_AS(IntervalSet({{Q(1, 2), Q(1)}, {Q(0), Q(1, 4)}}), Error);
}

TEST_CASE("covers") {
  IntervalSet big({{Q(0), Q(1, 2)}});
  IntervalSet small({{Q(0), Q(0)}, {Q(1, 3), Q(1, 2)}});
  CHECK(big.covers(small));
  CHECK_FALSE(small.covers(big));
  CHECK(small.to_csv() == "lo,hi\n0,0\n1/3,1/2\n");
}

TEST_CASE("box counting") {
  std::vector<int> scales{4, 5, 6, 7, 8, 9, 10};
  auto full = box_count(IntervalSet({{Q(0), Q(1, 2)}}), scales);
  // [0, 1/2] meets the cells of [0, 1/2) and the one starting at 1/2
  for (std::size_t i = 0; i < scales.size(); ++i) CHECK(full.counts[i] == (1u << (scales[i] - 1)) + 1);
  CHECK(full.slope > 0.97);
  CHECK(full.slope < 1.0);
  auto open_right = box_count(IntervalSet({{Q(0), Q(1, 2) - Q(1, 4096)}}), scales);
  CHECK(open_right.slope == doctest::Approx(1.0).epsilon(1e-9));
  auto point = box_count(IntervalSet({{Q(1, 3), Q(1, 3)}}), scales);
  CHECK(point.slope == doctest::Approx(0.0));
  auto last = dyadic_cell_counts(IntervalSet({{Q(1), Q(1)}}), scales);
  CHECK(last[0] == 1);
  std::vector<int> one{4};
  CHECK_THROWS_AS(box_count(IntervalSet({{Q(0), Q(1)}}), one), Error);
}

TEST_CASE("least squares") {
  std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  auto f = least_squares(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  std::vector<double> same{2, 2};
  try {
    least_squares(same, same);
    FAIL("expected degenerate fit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_fit);
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "sweep.hpp"

using filling::detail::parallel_min;

TEST(Sweep, FindsMinimum) {
  const auto best = parallel_min(1000, 1, [](std::size_t i) { return std::abs(double(i) - 617.0); });
  EXPECT_EQ(best.index, 617u);
  EXPECT_EQ(best.value, 0.0);
}

TEST(Sweep, TiesGoToLowestIndex) {
  for (unsigned w : {1u, 2u, 3u, 7u, 16u}) {
    const auto best = parallel_min(100, w, [](std::size_t i) { return i % 10 == 3 ? -1.0 : 0.0; });
    EXPECT_EQ(best.index, 3u) << w;
  }
}

TEST(Sweep, NanWins) {
  for (unsigned w : {1u, 4u}) {
    const auto best = parallel_min(100, w, [](std::size_t i) {
      return i == 70 ? std::nan("") : -double(i);
    });
    EXPECT_TRUE(std::isnan(best.value));
    EXPECT_EQ(best.index, 70u);
  }
}

TEST(Sweep, ExceptionsBecomeNan) {
  const auto best = parallel_min(10, 2, [](std::size_t i) -> double {
    if (i == 6) throw std::domain_error("outside");
    return 1.0;
  });
  EXPECT_TRUE(std::isnan(best.value));
  EXPECT_EQ(best.index, 6u);
}

TEST(Sweep, IndependentOfWorkerCount) {
  auto eval = [](std::size_t i) { return std::sin(0.37 * double(i)) * std::cos(0.011 * double(i)); };
  const auto reference = parallel_min(100000, 1, eval);
  for (unsigned w : {2u, 3u, 5u, 8u, 13u}) {
    const auto best = parallel_min(100000, w, eval);
    EXPECT_EQ(best.index, reference.index) << w;
    EXPECT_EQ(best.value, reference.value) << w;
  }
}

TEST(Sweep, EmptyRange) {
  const auto best = parallel_min(0, 4, [](std::size_t) { return 0.0; });
  EXPECT_TRUE(std::isinf(best.value));
}

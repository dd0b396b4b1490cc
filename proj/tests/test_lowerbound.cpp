#include "repmatch/rank_witness.hpp"

#include <doctest.h>

using repmatch::Role;
using repmatch::Task;

TEST_CASE("matrix-element span ranks for gate arrays") {
  const long long expected[] = {4, 10, 20};
  for (int n = 1; n <= 3; ++n) {
    const auto report = repmatch::matrix_element_rank(n, 2, Role::kUnitaryArray);
    CHECK(report.expected == expected[n - 1]);
    CHECK(report.measured == expected[n - 1]);
    CHECK(report.stable);
    CHECK(report.samples >= report.expected + 8);
    CHECK(report.to_json().find("\"stable\": true") != std::string::npos);
  }
}

TEST_CASE("matrix-element span ranks for site permutations") {
  const auto n3 = repmatch::matrix_element_rank(3, 2, Role::kPermutation);
  CHECK(n3.expected == 5);  // 1^2 + 2^2
  CHECK(n3.measured == 5);
  CHECK(n3.stable);

  const auto n4 = repmatch::matrix_element_rank(4, 2, Role::kPermutation);
  CHECK(n4.expected == 14);  // 1 + 9 + 4
  CHECK(n4.measured == 14);
  CHECK(n4.stable);
}

TEST_CASE("qubit cost covers the span dimension") {
  // 2^c_rm >= d_tot_sq over the calculator grid, all tasks.
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n <= 60; ++n)
      for (const Task task : {Task::kUnitaryArray, Task::kPermutation}) {
        const auto rep = repmatch::check_lower_bound(n, d, task);
        CHECK(rep.holds);
      }

  const auto tight = repmatch::check_lower_bound(1, 2, Task::kUnitaryArray);
  CHECK(tight.c_rm == 2);
  CHECK(tight.d_tot_sq == 4);  // 2^2 = 4: the bound is tight here
  CHECK(tight.holds);

  const auto with_rank = repmatch::check_lower_bound(2, 2, Task::kUnitaryArray, true);
  REQUIRE(with_rank.rank.has_value());
  CHECK(with_rank.rank->measured == 10);
  CHECK(with_rank.to_json().find("\"holds\": true") != std::string::npos);
}

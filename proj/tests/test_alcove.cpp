#include <vector>

#include "doctest.h"

#include "alcove.hpp"
#include "error.hpp"
#include "test_util.hpp"

using namespace bunblocks;
using alcove::AlcoveClass;

namespace {

AlcoveClass reg(long long length, std::vector<long long> reduced) {
  AlcoveClass c;
  c.regular = true;
  c.length = length;
  c.reduced = std::move(reduced);
  return c;
}

AlcoveClass sing() { return AlcoveClass{}; }

bool in_open_alcove(const std::vector<long long>& p, long long kappa) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] <= p[i + 1])
      return false;
  return p.front() - p.back() < kappa;
}

// Replays the reflection word from the shifted start point and checks that
// it lands in the open fundamental alcove in exactly length steps.
void check_word_replay(int rank, long long level, const std::vector<long long>& lam) {
  auto cls = alcove::classify_bfs(rank, level, lam);
  if (!cls.regular)
    return;
  REQUIRE(cls.length == static_cast<long long>(cls.word.size()));
  const long long kappa = level + rank + 1;
  auto p = alcove::shifted_coordinates(rank, lam);
  for (int i : cls.word)
    p = alcove::apply_reflection(p, i, kappa);
  CHECK(in_open_alcove(p, kappa));
}

} // namespace

TEST_CASE("rank-1 closed-form fixtures") {
  CHECK(alcove::classify_sl2(0, 0) == reg(0, {0}));
  CHECK(alcove::classify_sl2(0, 1) == sing());
  CHECK(alcove::classify_sl2(0, 2) == reg(1, {0}));
  CHECK(alcove::classify_sl2(2, 1) == reg(0, {1}));
  CHECK(alcove::classify_sl2(2, 3) == sing());
  CHECK(alcove::classify_sl2(1, 7) == reg(2, {1}));
}

TEST_CASE("rank-1 closed form agrees with the word search") {
  for (long long level = 0; level <= 4; ++level)
    for (long long w = 0; w <= 25; ++w) {
      std::vector<long long> lam{w};
      CHECK(alcove::classify_sl2(level, w) == alcove::classify_bfs(1, level, lam));
    }
}

TEST_CASE("type A residue-route fixtures") {
  auto ck = [](int rank, long long level, std::vector<long long> lam) {
    return alcove::classify_type_a(rank, level, lam);
  };
  CHECK(ck(2, 2, {3, 1}) == reg(1, {2, 0}));
  CHECK(ck(3, 2, {1, 0, 2}) == sing());
  CHECK(ck(3, 1, {0, 2, 1}) == sing());
  CHECK(ck(3, 3, {2, 0, 1}) == reg(0, {2, 0, 1}));
  CHECK(ck(3, 3, {1, 1, 1}) == reg(0, {1, 1, 1}));
  CHECK(ck(2, 0, {6, 3}) == reg(6, {0, 0}));
  CHECK(ck(2, 1, {4, 2}) == sing());
  CHECK(ck(2, 2, {8, 0}) == sing());
}

TEST_CASE("residue route agrees with the word search in rank 2") {
  for (long long level = 0; level <= 2; ++level)
    for (long long a = 0; a <= 4; ++a)
      for (long long b = 0; b <= 4; ++b) {
        std::vector<long long> lam{a, b};
        CHECK(alcove::classify_type_a(2, level, lam) == alcove::classify_bfs(2, level, lam));
      }
}

TEST_CASE("residue route agrees with the word search in rank 3") {
  for (long long level = 0; level <= 2; ++level)
    for (long long a = 0; a <= 3; ++a)
      for (long long b = 0; b <= 3; ++b)
        for (long long c = 0; c <= 3; ++c) {
          std::vector<long long> lam{a, b, c};
          CHECK(alcove::classify_type_a(3, level, lam) == alcove::classify_bfs(3, level, lam));
        }
}

TEST_CASE("search words replay to the open alcove") {
  for (long long w = 0; w <= 12; ++w)
    check_word_replay(1, 0, {w});
  for (long long a = 0; a <= 3; ++a)
    for (long long b = 0; b <= 3; ++b)
      check_word_replay(2, 1, {a, b});
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 0; b <= 2; ++b)
      for (long long c = 0; c <= 2; ++c)
        check_word_replay(3, 1, {a, b, c});
}

TEST_CASE("validation and search limits") {
  CHECK(testutil::throws_code(errc::invalid_argument, [] { alcove::classify_sl2(-1, 0); }));
  CHECK(testutil::throws_code(errc::invalid_argument, [] { alcove::classify_sl2(0, -1); }));
  std::vector<long long> neg{1, -1};
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [&] { alcove::classify_type_a(2, 0, neg); }));
  std::vector<long long> short_lam{1};
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [&] { alcove::classify_type_a(2, 0, short_lam); }));
  std::vector<long long> empty;
  CHECK(testutil::throws_code(errc::invalid_argument,
                              [&] { alcove::classify_type_a(0, 0, empty); }));
  std::vector<long long> far{20};
  CHECK(testutil::throws_code(errc::search_limit, [&] { alcove::classify_bfs(1, 0, far, 3); }));
}

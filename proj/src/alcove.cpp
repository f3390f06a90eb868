#include "alcove.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "error.hpp"

namespace bunblocks::alcove {

namespace {

void check_level(long long level) {
  if (level < 0)
    throw_invalid("alcove classification needs level >= 0 (negative levels are the "
                  "cohomology module's vanishing range)");
}

void check_dominant(std::span<const long long> lambda) {
  for (long long x : lambda)
    if (x < 0)
      throw_invalid("weight must be dominant (nonnegative coordinates)");
}

} // namespace

AlcoveClass classify_sl2(long long level, long long weight) {
  check_level(level);
  if (weight < 0)
    throw_invalid("SL2 weight must be nonnegative");
  const long long kappa = level + 2;
  const long long n = weight + 1;
  if (n % kappa == 0)
    return AlcoveClass{};
  const long long q = n / kappa;
  const long long r = n - q * kappa;
  AlcoveClass out;
  out.regular = true;
  out.length = q;
  out.reduced = {q % 2 == 0 ? r - 1 : kappa - r - 1};
  return out;
}

std::vector<long long> shifted_coordinates(int rank, std::span<const long long> lambda) {
  if (rank < 1)
    throw_invalid("rank must be >= 1");
  if (static_cast<int>(lambda.size()) != rank)
    throw_invalid("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                  std::to_string(rank));
  check_dominant(lambda);
  std::vector<long long> y(rank + 1, 0);
  long long tail = 0;
  for (int i = rank - 1; i >= 0; --i) {
    tail += lambda[i];
    y[i] = tail;
  }
  for (int i = 0; i <= rank; ++i)
    y[i] += rank - i; // rho
  return y;
}

std::vector<long long> apply_reflection(const std::vector<long long>& point, int i,
                                        long long kappa) {
  const int rank = static_cast<int>(point.size()) - 1;
  if (i < 0 || i > rank)
    throw_invalid("reflection index out of range");
  std::vector<long long> q = point;
  if (i == 0) { // across the wall (y, theta) = kappa
    q[0] = point[rank] + kappa;
    q[rank] = point[0] - kappa;
  } else {
    std::swap(q[i - 1], q[i]);
  }
  return q;
}

namespace {

bool in_open_alcove(const std::vector<long long>& y, long long kappa) {
  for (size_t i = 0; i + 1 < y.size(); ++i)
    if (y[i] <= y[i + 1])
      return false;
  return y.front() - y.back() < kappa;
}

bool on_wall(const std::vector<long long>& y, long long kappa) {
  const int rank = static_cast<int>(y.size()) - 1;
  for (int i = 0; i <= rank; ++i)
    if (apply_reflection(y, i, kappa) == y)
      return true;
  return false;
}

std::vector<long long> reduced_from_alcove_point(const std::vector<long long>& y) {
  std::vector<long long> lambda(y.size() - 1);
  for (size_t i = 0; i + 1 < y.size(); ++i)
    lambda[i] = y[i] - y[i + 1] - 1;
  return lambda;
}

} // namespace

AlcoveClass classify_bfs(int rank, long long level, std::span<const long long> lambda,
                         int radius) {
  check_level(level);
  const long long kappa = level + rank + 1;
  const std::vector<long long> start = shifted_coordinates(rank, lambda);

  std::set<std::vector<long long>> seen{start};
  // parent map for word reconstruction: point -> (previous point, reflection)
  std::map<std::vector<long long>, std::pair<std::vector<long long>, int>> parent;
  std::vector<std::vector<long long>> frontier{start};

  auto word_to = [&](std::vector<long long> p) {
    std::vector<int> w;
    while (p != start) {
      const auto& [prev, refl] = parent.at(p);
      w.push_back(refl);
      p = prev;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  for (int depth = 0; depth <= radius; ++depth) {
    for (const auto& p : frontier) {
      if (on_wall(p, kappa))
        return AlcoveClass{}; // fixed by an affine reflection: singular
      if (in_open_alcove(p, kappa)) {
        AlcoveClass out;
        out.regular = true;
        out.length = depth;
        out.reduced = reduced_from_alcove_point(p);
        out.word = word_to(p);
        return out;
      }
    }
    std::vector<std::vector<long long>> next;
    for (const auto& p : frontier)
      for (int i = 0; i <= rank; ++i) {
        auto q = apply_reflection(p, i, kappa);
        if (seen.insert(q).second) {
          parent.emplace(q, std::make_pair(p, i));
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  throw_search_limit("alcove BFS exceeded radius " + std::to_string(radius));
}

AlcoveClass classify_type_a(int rank, long long level, std::span<const long long> lambda) {
  check_level(level);
  const long long kappa = level + rank + 1;
  const std::vector<long long> y = shifted_coordinates(rank, lambda);

  // Singular iff two coordinates are congruent mod kappa.
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j)
      if ((y[i] - y[j]) % kappa == 0)
        return AlcoveClass{};

  // Length: affine walls (e_i - e_j, . ) = k*kappa separating y from the
  // fundamental alcove.  y is strictly decreasing, so each pair contributes
  // floor((y_i - y_j) / kappa).
  long long length = 0;
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j)
      length += (y[i] - y[j]) / kappa;

  // Reduced representative.  Coordinate-wise residues use translations with
  // arbitrary coordinate sum (the extended group); rotating the alcove by
  // the diagram automorphism t times, t = -sum of the removed kappa-steps
  // mod (rank+1), lands back in the non-extended orbit.
  long long steps = 0;
  std::vector<long long> res(y.size());
  for (size_t i = 0; i < y.size(); ++i) {
    long long q = y[i] / kappa; // y[i] >= 0 here
    res[i] = y[i] - q * kappa;
    steps += q;
  }
  std::sort(res.rbegin(), res.rend());
  const long long n = static_cast<long long>(y.size());
  long long t = ((-steps) % n + n) % n;
  for (long long s = 0; s < t; ++s) {
    // rotate: (r_1 >= ... >= r_n) -> sort(r_2, ..., r_n, r_1 - kappa)
    long long head = res.front() - kappa;
    res.erase(res.begin());
    res.push_back(head); // r_1 - kappa <= all remaining entries
  }
  AlcoveClass out;
  out.regular = true;
  out.length = length;
  out.reduced = reduced_from_alcove_point(res);
  return out;
}

} // namespace bunblocks::alcove

#include "liecore.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "error.hpp"

namespace bunblocks::liecore {

GroupType::GroupType(Series s, int r) : series(s), rank(r) {
  bool ok = false;
  switch (s) {
  case Series::A: ok = r >= 1; break;
  case Series::B: ok = r >= 2; break;
  case Series::C: ok = r >= 2; break;
  case Series::D: ok = r >= 3; break;
  case Series::E: ok = r == 6 || r == 7 || r == 8; break;
  case Series::F: ok = r == 4; break;
  case Series::G: ok = r == 2; break;
  }
  if (!ok)
    throw_invalid("invalid simple type " + std::string(1, static_cast<char>(s)) +
                  std::to_string(r));
}

GroupType GroupType::parse(char series, int rank) {
  switch (series) {
  case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
    return GroupType(static_cast<Series>(series), rank);
  default:
    throw_invalid("unknown series '" + std::string(1, series) + "' (expected A-G)");
  }
}

std::string GroupType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::vector<std::vector<int>> cartan_matrix(const GroupType& t) {
  const int r = t.rank;
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.series) {
  case Series::A:
    for (int i = 0; i + 1 < r; ++i)
      chain(i, i + 1);
    break;
  case Series::B: // alpha_r short: a[r-2][r-1] = -1, a[r-1][r-2] = -2
    for (int i = 0; i + 2 < r; ++i)
      chain(i, i + 1);
    a[r - 2][r - 1] = -1;
    a[r - 1][r - 2] = -2;
    break;
  case Series::C: // alpha_r long
    for (int i = 0; i + 2 < r; ++i)
      chain(i, i + 1);
    a[r - 2][r - 1] = -2;
    a[r - 1][r - 2] = -1;
    break;
  case Series::D:
    for (int i = 0; i + 2 < r; ++i)
      chain(i, i + 1);
    chain(r - 3, r - 1);
    break;
  case Series::E: // Bourbaki: chain 1-3-4-5-..., node 2 attached to node 4
    chain(0, 2);
    chain(1, 3);
    for (int i = 2; i + 1 < r; ++i)
      chain(i, i + 1);
    break;
  case Series::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
    chain(0, 1);
    a[1][2] = -1;
    a[2][1] = -2;
    chain(2, 3);
    break;
  case Series::G: // alpha_1 long, alpha_2 short
    a[0][1] = -1;
    a[1][0] = -3;
    break;
  }
  return a;
}

namespace {

int height(const std::vector<int>& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

// <beta, alpha_i^vee> for beta in simple-root coordinates.
int pair_with_coroot(const std::vector<std::vector<int>>& a, const std::vector<int>& beta,
                     int i) {
  int s = 0;
  for (size_t j = 0; j < beta.size(); ++j)
    s += a[i][j] * beta[j];
  return s;
}

// Symmetrizer d_i = (alpha_i, alpha_i)/2, smallest positive integers with
// d_i a[i][j] = d_j a[j][i].
std::vector<int> symmetrizer(const std::vector<std::vector<int>>& a) {
  const int r = static_cast<int>(a.size());
  std::vector<int> d(r, 0);
  d[0] = 1;
  bool changed = true;
  while (changed) { // propagate along edges until all assigned
    changed = false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j || a[i][j] == 0)
          continue;
        if (d[i] != 0 && d[j] == 0) {
          // d_j = d_i a[i][j] / a[j][i]
          int num = d[i] * a[i][j];
          if (num % a[j][i] != 0) { // rescale everything assigned so far
            int f = std::abs(a[j][i]);
            for (int k = 0; k < r; ++k)
              d[k] *= f;
            num = d[i] * a[i][j];
          }
          d[j] = num / a[j][i];
          changed = true;
        }
      }
  }
  int g = 0;
  for (int x : d)
    g = std::gcd(g, x);
  for (int& x : d)
    x /= g;
  return d;
}

} // namespace

std::vector<std::vector<int>> positive_roots(const GroupType& t) {
  const auto a = cartan_matrix(t);
  const int r = t.rank;
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  // String closure: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0
  // where p is the largest k with beta - k alpha_i a root.
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < r; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !roots.count(down))
            break;
          ++p;
        }
        if (p - pair_with_coroot(a, beta, i) > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second)
            next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  return out;
}

int dual_coxeter(const GroupType& t) {
  const auto a = cartan_matrix(t);
  const auto roots = positive_roots(t);
  const auto d = symmetrizer(a);
  const auto& theta = roots.back(); // unique root of maximal height
  // (theta, theta)/2 = sum_{i,j} c_i c_j d_i a[i][j] / 2
  long long norm2 = 0;
  for (size_t i = 0; i < theta.size(); ++i)
    for (size_t j = 0; j < theta.size(); ++j)
      norm2 += static_cast<long long>(theta[i]) * theta[j] * d[i] * a[i][j];
  const long long d_theta = norm2 / 2;
  // theta^vee = sum_i c_i (d_i / d_theta) alpha_i^vee; h^vee = 1 + sum of comarks.
  long long comark_sum = 0;
  for (size_t i = 0; i < theta.size(); ++i)
    comark_sum += static_cast<long long>(theta[i]) * d[i];
  if (comark_sum % d_theta != 0)
    throw Error(errc::internal, "non-integral comarks for " + t.name());
  return static_cast<int>(1 + comark_sum / d_theta);
}

// ---------------------------------------------------------------------------

SL2Character::SL2Character(std::map<long long, Int> mult) : mult_(std::move(mult)) {
  for (auto it = mult_.begin(); it != mult_.end();) {
    if (it->second == 0)
      it = mult_.erase(it);
    else
      ++it;
  }
  for (const auto& [w, m] : mult_) {
    if (m < 0)
      throw_invalid("character has negative multiplicity at weight " + std::to_string(w));
    auto neg = mult_.find(-w);
    if (neg == mult_.end() || neg->second != m)
      throw_invalid("character not symmetric under weight negation at weight " +
                    std::to_string(w));
  }
}

Int SL2Character::at(long long weight) const {
  auto it = mult_.find(weight);
  return it == mult_.end() ? Int(0) : it->second;
}

Int SL2Character::dimension() const {
  Int d = 0;
  for (const auto& [w, m] : mult_)
    d += m;
  return d;
}

SL2Character SL2Character::operator+(const SL2Character& other) const {
  std::map<long long, Int> out = mult_;
  for (const auto& [w, m] : other.mult_)
    out[w] += m;
  return SL2Character(std::move(out));
}

SL2Character SL2Character::operator*(const SL2Character& other) const {
  std::map<long long, Int> out;
  for (const auto& [wa, ma] : mult_)
    for (const auto& [wb, mb] : other.mult_)
      out[wa + wb] += ma * mb;
  return SL2Character(std::move(out));
}

SL2Character irrep_character(long long m) {
  if (m < 0)
    throw_invalid("highest weight must be nonnegative, got " + std::to_string(m));
  std::map<long long, Int> mult;
  for (long long w = -m; w <= m; w += 2)
    mult[w] = 1;
  return SL2Character(std::move(mult));
}

Decomposition decompose(const SL2Character& c) {
  std::map<long long, Int> rest = c.mult();
  Decomposition out;
  while (!rest.empty()) {
    const long long top = rest.rbegin()->first;
    const Int mult = rest.rbegin()->second;
    if (top < 0 || mult < 0)
      throw_invalid("not a nonnegative combination of irreducible characters");
    out.emplace_back(top, mult);
    for (long long w = -top; w <= top; w += 2) {
      auto it = rest.find(w);
      if (it == rest.end())
        throw_invalid("not a nonnegative combination of irreducible characters");
      it->second -= mult;
      if (it->second == 0)
        rest.erase(it);
      else if (it->second < 0)
        throw_invalid("not a nonnegative combination of irreducible characters");
    }
  }
  return out;
}

Decomposition tensor_decompose(const SL2Character& a, const SL2Character& b) {
  return decompose(a * b);
}

SL2Character tensor_power_character(long long m) {
  if (m < 0)
    throw_invalid("tensor power exponent must be nonnegative");
  SL2Character c = irrep_character(0);
  const SL2Character v = irrep_character(1);
  for (long long i = 0; i < m; ++i)
    c = c * v;
  return c;
}

Decomposition tensor_power_multiplicities(long long m) {
  return decompose(tensor_power_character(m));
}

int central_parity(const SL2Character& c) {
  if (c.empty())
    throw_invalid("central parity of the zero character is undefined");
  const int parity = static_cast<int>(((c.mult().begin()->first % 2) + 2) % 2);
  for (const auto& [w, mult] : c.mult()) {
    (void)mult;
    if (((w % 2) + 2) % 2 != parity)
      throw_invalid("character mixes weights of both parities");
  }
  return parity;
}

} // namespace bunblocks::liecore

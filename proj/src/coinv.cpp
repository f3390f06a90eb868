#include "coinv.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

#include "error.hpp"

namespace bunblocks::coinv {

namespace {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Reduced row echelon form with leftmost-column pivoting; trims zero rows
// and returns the pivot columns.
std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty())
    return pivots;
  const int cols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(a.size()); ++col) {
    int sel = -1;
    for (int r = row; r < static_cast<int>(a.size()); ++r) {
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0)
      continue;
    std::swap(a[row], a[sel]);
    const Rat lead = a[row][col];
    for (int c = col; c < cols; ++c)
      a[row][c] /= lead;
    for (int r = 0; r < static_cast<int>(a.size()); ++r) {
      if (r == row || a[r][col] == 0)
        continue;
      const Rat f = a[r][col];
      for (int c = col; c < cols; ++c)
        a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(pivots.size());
  return pivots;
}

// Incrementally maintained row-reduced spanning set.
class RowSpan {
public:
  explicit RowSpan(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  const Mat& rows() const { return rows_; }

  // Reduces v against the span and keeps the remainder; returns whether the
  // rank grew.
  bool insert(Vec v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat f = v[pivots_[k]];
      if (f == 0)
        continue;
      for (int c = 0; c < cols_; ++c)
        v[c] -= f * rows_[k][c];
    }
    int p = -1;
    for (int c = 0; c < cols_; ++c) {
      if (v[c] != 0) {
        p = c;
        break;
      }
    }
    if (p < 0)
      return false;
    const Rat lead = v[p];
    for (int c = p; c < cols_; ++c)
      v[c] /= lead;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rat f = rows_[k][p];
      if (f == 0)
        continue;
      for (int c = 0; c < cols_; ++c)
        rows_[k][c] -= f * v[c];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

private:
  int cols_;
  Mat rows_;
  std::vector<int> pivots_;
};

// Monomials of the given total degree in m variables, in descending
// lexicographic order on exponent vectors.
std::vector<std::vector<int>> monomials(int m, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == m - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[pos] = e;
      rec(pos + 1, rem - e);
    }
  };
  rec(0, degree);
  return out;
}

// Square-free monomials with exactly k variables present: the terms of the
// k-th elementary symmetric polynomial.
std::vector<std::vector<int>> elementary_terms(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      std::vector<int> e(m, 0);
      for (int j : pick)
        e[j] = 1;
      out.push_back(e);
      return;
    }
    for (int v = start; v <= m - (k - depth); ++v) {
      pick[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<std::vector<int>> permutations_of(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Columns of the averaging projector onto S_m-invariants, restricted to one
// coinvariant degree and one set of weight patterns (bit i set = lowest
// weight vector in tensor factor i).  Row g is the image of the g-th basis
// state in local coordinates (pattern position x basis monomial index).
Mat projector_columns(const QuotientPresentation& qp, int degree,
                      const std::vector<int>& patterns,
                      const std::vector<std::vector<int>>& perms) {
  const int m = qp.m();
  const auto& basis = qp.basis(degree);
  const int dimd = static_cast<int>(basis.size());
  std::vector<int> pat_pos(std::size_t{1} << m, -1);
  for (int k = 0; k < static_cast<int>(patterns.size()); ++k)
    pat_pos[patterns[k]] = k;
  const int n = static_cast<int>(patterns.size()) * dimd;
  const Rat avg = Rat(1) / Rat(static_cast<long long>(perms.size()));
  Mat cols(n, Vec(n, Rat(0)));
  std::vector<int> e2(m, 0);
  for (int k = 0; k < static_cast<int>(patterns.size()); ++k) {
    const int p = patterns[k];
    for (int b = 0; b < dimd; ++b) {
      Vec& out = cols[k * dimd + b];
      for (const auto& perm : perms) {
        int p2 = 0;
        for (int i = 0; i < m; ++i) {
          if ((p >> i) & 1)
            p2 |= 1 << perm[i];
          e2[perm[i]] = basis[b][i];
        }
        const Vec nf = qp.normal_form(e2);
        for (int c = 0; c < static_cast<int>(nf.size()); ++c)
          if (nf[c] != 0)
            out[pat_pos[p2] * dimd + c] += avg * nf[c];
      }
    }
  }
  return cols;
}

// Flat model of V^{tensor m} (x) coinvariants with global basis states
// (pattern, degree, basis monomial index).
struct ModuleModel {
  QuotientPresentation qp;
  int m;
  int npat;
  std::vector<int> offset; // global offset of each degree block
  int dim = 0;
  std::vector<std::array<int, 3>> decode; // global index -> (pattern, degree, b)

  explicit ModuleModel(int m_in) : qp(m_in), m(m_in), npat(1 << m_in) {
    offset.resize(qp.top_degree() + 1, 0);
    for (int d = 0; d <= qp.top_degree(); ++d) {
      offset[d] = dim;
      const int dimd = static_cast<int>(qp.basis(d).size());
      for (int p = 0; p < npat; ++p)
        for (int b = 0; b < dimd; ++b)
          decode.push_back({p, d, b});
      dim += npat * dimd;
    }
  }

  int index(int pattern, int degree, int b) const {
    return offset[degree] + pattern * static_cast<int>(qp.basis(degree).size()) + b;
  }
};

enum class Op { E, F, H };

// Image under x (x) t^a acting diagonally: sum over tensor factors of the
// sl2 generator on the factor times multiplication by t_i^a.
Vec apply_op(const ModuleModel& M, Op x, int a, const Vec& v) {
  Vec out(M.dim, Rat(0));
  for (int g = 0; g < M.dim; ++g) {
    if (v[g] == 0)
      continue;
    const auto [p, d, b] = M.decode[g];
    if (d + a > M.qp.top_degree())
      continue; // every term lands in a degree where the quotient vanishes
    const auto& mono = M.qp.basis(d)[b];
    for (int i = 0; i < M.m; ++i) {
      const int bit = (p >> i) & 1;
      int p2 = p;
      int coeff = 1;
      switch (x) {
      case Op::E:
        if (bit == 0)
          continue; // e kills the highest weight vector
        p2 = p & ~(1 << i);
        break;
      case Op::F:
        if (bit == 1)
          continue;
        p2 = p | (1 << i);
        break;
      case Op::H:
        coeff = bit == 0 ? 1 : -1;
        break;
      }
      std::vector<int> e2 = mono;
      e2[i] += a;
      const Vec nf = M.qp.normal_form(e2);
      for (int c = 0; c < static_cast<int>(nf.size()); ++c)
        if (nf[c] != 0)
          out[M.index(p2, d + a, c)] += v[g] * nf[c] * coeff;
    }
  }
  return out;
}

} // namespace

// ---------------------------------------------------------------------------
// GradedModule
// ---------------------------------------------------------------------------

long long GradedModule::top_degree() const {
  for (long long d = static_cast<long long>(pieces.size()) - 1; d >= 0; --d)
    if (!pieces[d].empty())
      return d;
  return -1;
}

liecore::SL2Character GradedModule::piece(long long degree) const {
  if (degree < 0 || degree >= static_cast<long long>(pieces.size()))
    return {};
  return pieces[degree];
}

liecore::SL2Character GradedModule::filtration_piece(long long index) const {
  const long long top = top_degree();
  if (index < 0 || index > top)
    return {};
  return pieces[top - index];
}

liecore::SL2Character GradedModule::total() const {
  liecore::SL2Character sum;
  for (const auto& c : pieces)
    sum = sum + c;
  return sum;
}

// ---------------------------------------------------------------------------
// QuotientPresentation
// ---------------------------------------------------------------------------

QuotientPresentation::QuotientPresentation(int m) : m_(m) {
  if (m < 1 || m > 4)
    throw_invalid("quotient presentation supports 1 <= m <= 4");
  trunc_ = m * (m - 1) / 2 + 1;
  monos_.resize(trunc_ + 1);
  basis_.resize(trunc_ + 1);
  nf_.resize(trunc_ + 1);

  for (int d = 0; d <= trunc_; ++d) {
    monos_[d] = monomials(m, d);
    std::map<std::vector<int>, int> index;
    for (int j = 0; j < static_cast<int>(monos_[d].size()); ++j)
      index.emplace(monos_[d][j], j);

    // Degree-d slice of the ideal: monomial multiples of each elementary
    // symmetric polynomial.
    Mat rows;
    for (int i = 1; i <= m && i <= d; ++i) {
      const auto terms = elementary_terms(m, i);
      for (const auto& u : monomials(m, d - i)) {
        Vec row(monos_[d].size(), Rat(0));
        for (const auto& t : terms) {
          std::vector<int> prod(m);
          for (int v = 0; v < m; ++v)
            prod[v] = u[v] + t[v];
          row[index.at(prod)] += 1;
        }
        rows.push_back(std::move(row));
      }
    }
    const std::vector<int> pivots = rref(rows);

    std::vector<bool> is_pivot(monos_[d].size(), false);
    for (int c : pivots)
      is_pivot[c] = true;
    std::vector<int> pos(monos_[d].size(), -1);
    for (int j = 0; j < static_cast<int>(monos_[d].size()); ++j) {
      if (!is_pivot[j]) {
        pos[j] = static_cast<int>(basis_[d].size());
        basis_[d].push_back(monos_[d][j]);
      }
    }
    nf_[d].assign(monos_[d].size(), std::vector<Rat>(basis_[d].size(), Rat(0)));
    for (int j = 0; j < static_cast<int>(monos_[d].size()); ++j)
      if (!is_pivot[j])
        nf_[d][j][pos[j]] = 1;
    // A pivot monomial equals minus the non-pivot tail of its reduced row.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const int j = pivots[r];
      for (int c = 0; c < static_cast<int>(monos_[d].size()); ++c) {
        if (c == j || rows[r][c] == 0)
          continue;
        nf_[d][j][pos[c]] -= rows[r][c];
      }
    }
  }

  if (!basis_[trunc_].empty())
    throw Error(errc::internal, "coinvariant quotient does not vanish at the truncation degree");
  hilbert_.reserve(trunc_);
  for (int d = 0; d < trunc_; ++d)
    hilbert_.push_back(Int(basis_[d].size()));
}

const std::vector<std::vector<int>>& QuotientPresentation::basis(int degree) const {
  static const std::vector<std::vector<int>> kEmpty;
  if (degree < 0 || degree > top_degree())
    return kEmpty;
  return basis_[degree];
}

std::vector<Rat> QuotientPresentation::normal_form(const std::vector<int>& mono) const {
  if (static_cast<int>(mono.size()) != m_)
    throw_invalid("monomial has the wrong number of variables");
  int d = 0;
  for (int e : mono) {
    if (e < 0)
      throw_invalid("monomial exponents must be nonnegative");
    d += e;
  }
  if (d > trunc_)
    return {};
  const auto& list = monos_[d];
  const auto it = std::lower_bound(list.begin(), list.end(), mono, std::greater<>());
  if (it == list.end() || *it != mono)
    throw Error(errc::internal, "monomial missing from the degree table");
  return nf_[d][it - list.begin()];
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

std::vector<Int> coinvariant_hilbert(int m) {
  if (m < 1 || m > 4)
    throw_invalid("coinvariant Hilbert series supports 1 <= m <= 4");
  return QuotientPresentation(m).hilbert();
}

GradedModule graded_character_R(int m) {
  if (m < 1 || m > 4)
    throw_invalid("graded character of R_m supports 1 <= m <= 4");
  const QuotientPresentation qp(m);
  const auto perms = permutations_of(m);
  GradedModule out;
  out.pieces.resize(qp.top_degree() + 1);
  for (int d = 0; d <= qp.top_degree(); ++d) {
    std::map<long long, Int> mult;
    for (int k = 0; k <= m; ++k) {
      std::vector<int> patterns;
      for (int p = 0; p < (1 << m); ++p)
        if (std::popcount(static_cast<unsigned>(p)) == k)
          patterns.push_back(p);
      Mat cols = projector_columns(qp, d, patterns, perms);
      const auto rank = rref(cols).size();
      if (rank > 0)
        mult[m - 2LL * k] = Int(rank);
    }
    out.pieces[d] = liecore::SL2Character(std::move(mult));
  }
  return out;
}

SModel parse_s_model(const std::string& tag) {
  if (tag == "quotient-by-t")
    return SModel::QuotientByT;
  if (tag == "fiber-tensor")
    return SModel::FiberTensor;
  throw_invalid("unknown S_n model tag \"" + tag + "\" (expected quotient-by-t or fiber-tensor)");
}

liecore::SL2Character character_S(long long n, SModel model) {
  if (n < 0)
    throw_invalid("character of S_n needs n >= 0");
  switch (model) {
  case SModel::QuotientByT:
    return liecore::irrep_character(n);
  case SModel::FiberTensor:
    return liecore::tensor_power_character(n);
  }
  throw_invalid("unknown S_n model");
}

Int hom_mult(long long m, const liecore::SL2Character& c) {
  if (m < 0)
    throw_invalid("highest weight must be nonnegative");
  for (const auto& [w, mult] : liecore::decompose(c))
    if (w == m)
      return mult;
  return 0;
}

bool gtgen_check(int m) {
  if (m < 1 || m > 3)
    throw_invalid("generation check supports 1 <= m <= 3");
  const ModuleModel M(m);
  const auto perms = permutations_of(m);
  std::vector<int> all_patterns(M.npat);
  std::iota(all_patterns.begin(), all_patterns.end(), 0);

  // Degree-homogeneous invariant bases; the degree-0 one seeds the closure.
  int invariant_dim = 0;
  RowSpan span(M.dim);
  for (int d = 0; d <= M.qp.top_degree(); ++d) {
    Mat cols = projector_columns(M.qp, d, all_patterns, perms);
    rref(cols);
    invariant_dim += static_cast<int>(cols.size());
    if (d > 0)
      continue;
    const int dimd = static_cast<int>(M.qp.basis(d).size());
    for (const auto& row : cols) {
      Vec v(M.dim, Rat(0));
      for (int l = 0; l < static_cast<int>(row.size()); ++l)
        if (row[l] != 0)
          v[M.index(l / dimd, d, l % dimd)] = row[l];
      span.insert(std::move(v));
    }
    if (span.rank() != m + 1)
      throw Error(errc::internal, "degree-0 invariants are not a copy of Sym^m V");
  }

  // Close the seed under the loop operators until the rank stabilizes.  The
  // operators commute with S_m, so the closure stays inside the invariants.
  bool grew = true;
  while (grew) {
    grew = false;
    const Mat snapshot = span.rows();
    for (const auto& v : snapshot)
      for (const Op x : {Op::E, Op::F, Op::H})
        for (int a = 0; a <= M.qp.top_degree(); ++a)
          if (span.insert(apply_op(M, x, a, v)))
            grew = true;
  }
  return span.rank() == invariant_dim;
}

} // namespace bunblocks::coinv

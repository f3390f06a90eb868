#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "alcove.hpp"
#include "bwb.hpp"
#include "coinv.hpp"
#include "error.hpp"
#include "fusion.hpp"
#include "liecore.hpp"
#include "sod.hpp"

namespace bunblocks::verify {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Accumulates expectations; the detail string keeps the first few failures.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (ok)
      return;
    ++failures_;
    if (failures_ <= 3) {
      if (!detail_.empty())
        detail_ += "; ";
      detail_ += what;
    }
  }

  Outcome outcome() const {
    if (failures_ == 0)
      return {true, std::to_string(total_) + " checks"};
    return {false,
            std::to_string(failures_) + "/" + std::to_string(total_) + " failed: " + detail_};
  }

private:
  long long total_ = 0;
  long long failures_ = 0;
  std::string detail_;
};

CriterionResult run(int id, const std::string& description, double budget_seconds,
                    const std::function<Outcome()>& body) {
  CriterionResult r;
  r.id = id;
  r.description = description;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = body();
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0) {
    if (r.seconds >= budget_seconds) {
      r.pass = false;
      r.detail += " (runtime " + std::to_string(r.seconds) + "s exceeds " +
                  std::to_string(budget_seconds) + "s budget)";
    }
  }
  return r;
}

// Nonnegative integer vectors of the given length with entry sum <= cap,
// ordered by total then lexicographically.
std::vector<std::vector<long long>> weight_vectors(int length, long long cap) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(length, 0);
  std::function<void(int, long long)> rec = [&](int pos, long long rem) {
    if (pos == length - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (long long e = 0; e <= rem; ++e) {
      cur[pos] = e;
      rec(pos + 1, rem - e);
    }
  };
  for (long long total = 0; total <= cap; ++total)
    rec(0, total);
  return out;
}

// Nondecreasing insertion tuples with entries in [0, maxw] and sizes up to
// max_size (multisets; the Verlinde dimension is symmetric).
std::vector<std::vector<int>> insertion_multisets(int maxw, int max_size) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> prev{{}};
  for (int s = 1; s <= max_size; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& base : prev) {
      for (int w = base.empty() ? 0 : base.back(); w <= maxw; ++w) {
        auto v = base;
        v.push_back(w);
        next.push_back(std::move(v));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  return out;
}

std::string case_tag(const std::string& prefix, std::initializer_list<long long> values) {
  std::ostringstream os;
  os << prefix;
  bool first = true;
  for (long long v : values) {
    os << (first ? "(" : ",") << v;
    first = false;
  }
  os << ")";
  return os.str();
}

// 1. Closed-form alcove classification agrees with the reflection-word search.
Outcome criterion_alcove_oracle() {
  Check ck;
  for (long long c = 0; c <= 6; ++c) {
    for (long long lam = 0; lam <= 40; ++lam) {
      const std::vector<long long> v{lam};
      ck.expect(alcove::classify_sl2(c, lam) == alcove::classify_bfs(1, c, v),
                case_tag("sl2 vs bfs ", {c, lam}));
    }
  }
  for (int rank : {2, 3}) {
    const auto lambdas = weight_vectors(rank, 8);
    for (long long c = 0; c <= 3; ++c) {
      for (const auto& lam : lambdas) {
        ck.expect(alcove::classify_type_a(rank, c, lam) == alcove::classify_bfs(rank, c, lam),
                  case_tag("typeA vs bfs rank=" + std::to_string(rank) + " ", {c, lam[0]}));
      }
    }
  }
  return ck.outcome();
}

// 2. Level-0 closed form: odd weights singular, even weights reduce to 0
//    with length lambda/2.
Outcome criterion_level0() {
  Check ck;
  for (long long lam = 0; lam <= 40; ++lam) {
    const auto cls = alcove::classify_sl2(0, lam);
    if (lam % 2 == 1) {
      ck.expect(!cls.regular, case_tag("odd weight not singular ", {lam}));
    } else {
      ck.expect(cls.regular && cls.length == lam / 2 &&
                    cls.reduced == std::vector<long long>{0},
                case_tag("even weight closed form ", {lam}));
    }
  }
  return ck.outcome();
}

// 3. Verlinde dimensions: trigonometric cross-check, the level-1 and
//    genus-1 families, handle-cutting factorization.
Outcome criterion_verlinde() {
  Check ck;
  constexpr double kTrigTolerance = 1e-6; // pinned; observed worst error ~6e-8
  for (int k = 0; k <= 8; ++k) {
    const fusion::FusionRing ring(k);
    const auto sweeps = insertion_multisets(k, 4);
    for (long long g = 0; g <= 4; ++g) {
      for (const auto& ins : sweeps) {
        const Int exact = ring.verlinde_dim(g, ins);
        const double trig = ring.verlinde_dim_trig(g, ins);
        const double diff = std::abs(exact.convert_to<double>() - trig);
        ck.expect(diff <= kTrigTolerance,
                  case_tag("trig mismatch ", {k, g, static_cast<long long>(ins.size())}));
      }
    }
  }
  for (long long g = 0; g <= 10; ++g) {
    const Int expected = Int(1) << g;
    ck.expect(fusion::verlinde_dim(1, g, {}) == expected, case_tag("level 1 genus ", {g}));
  }
  for (int k = 0; k <= 20; ++k)
    ck.expect(fusion::verlinde_dim(k, 1, {}) == Int(k + 1), case_tag("genus 1 level ", {k}));
  for (int k = 0; k <= 5; ++k) {
    const fusion::FusionRing ring(k);
    const auto sweeps = insertion_multisets(k, 2);
    for (long long g = 1; g <= 3; ++g) {
      for (const auto& ins : sweeps) {
        Int glued = 0;
        for (int a = 0; a <= k; ++a) {
          auto cut = ins;
          cut.push_back(a);
          cut.push_back(a);
          glued += ring.verlinde_dim(g - 1, cut);
        }
        ck.expect(glued == ring.verlinde_dim(g, ins),
                  case_tag("handle cutting ", {k, g, static_cast<long long>(ins.size())}));
      }
    }
  }
  return ck.outcome();
}

// 4. Cohomology oracle: the no-insertion fixture concentrates the unit in
//    degree 0; every negative level vanishes across insertion sweeps.
Outcome criterion_cohomology() {
  Check ck;
  for (long long g = 0; g <= 8; ++g) {
    for (int xi = 0; xi <= 1; ++xi) {
      const auto ans = bwb::cohomology(0, g, {}, bwb::TwistFlag{xi});
      ck.expect(!ans.vanishes && ans.degree == 0 && ans.dim == 1,
                case_tag("unit fixture ", {g, xi}));
    }
  }
  for (long long c : {-1LL, -2LL, -3LL}) {
    for (int xi = 0; xi <= 1; ++xi) {
      for (long long w = 0; w <= 20; ++w) {
        const std::vector<long long> single{w};
        ck.expect(bwb::cohomology(c, 2, single, bwb::TwistFlag{xi}).vanishes,
                  case_tag("negative level single ", {c, w}));
        for (long long w2 = w; w2 <= 20; ++w2) {
          const std::vector<long long> pair{w, w2};
          ck.expect(bwb::cohomology(c, 0, pair, bwb::TwistFlag{xi}).vanishes,
                    case_tag("negative level pair ", {c, w, w2}));
        }
      }
    }
  }
  return ck.outcome();
}

// 5. Coinvariant suite: Hilbert series, graded character sums, Hom
//    vanishing in both models, generation by the degree-0 component.
Outcome criterion_coinvariants() {
  Check ck;
  for (int m = 1; m <= 4; ++m) {
    // q-factorial [m]_q! by convolution.
    std::vector<Int> qfact{1};
    for (int i = 2; i <= m; ++i) {
      std::vector<Int> next(qfact.size() + i - 1, Int(0));
      for (std::size_t d = 0; d < qfact.size(); ++d)
        for (int j = 0; j < i; ++j)
          next[d + j] += qfact[d];
      qfact = std::move(next);
    }
    const auto hilbert = coinv::coinvariant_hilbert(m);
    ck.expect(hilbert == qfact, case_tag("Hilbert series ", {m}));
    Int total = 0;
    for (const Int& h : hilbert)
      total += h;
    Int factorial = 1;
    for (int i = 2; i <= m; ++i)
      factorial *= i;
    ck.expect(total == factorial, case_tag("total dimension ", {m}));
    ck.expect(coinv::graded_character_R(m).total() == liecore::tensor_power_character(m),
              case_tag("graded character sum ", {m}));
  }
  for (long long m = 1; m <= 6; ++m) {
    for (long long n = 0; n < m; ++n) {
      for (const auto model : {coinv::SModel::QuotientByT, coinv::SModel::FiberTensor}) {
        ck.expect(coinv::hom_mult(m, coinv::character_S(n, model)) == 0,
                  case_tag("Hom vanishing ", {m, n, model == coinv::SModel::QuotientByT ? 0 : 1}));
      }
    }
  }
  for (int m = 1; m <= 3; ++m)
    ck.expect(coinv::gtgen_check(m), case_tag("generation ", {m}));
  return ck.outcome();
}

// 6. Semiorthogonality certificates and Hom-amplitude bounds.
Outcome criterion_certificates() {
  Check ck;
  for (long long m = 1; m <= 12; ++m) {
    for (long long n = m % 2; n < m; n += 2) {
      ck.expect(bwb::semiorthogonality_certificate(m, n).pass, case_tag("certificate ", {m, n}));
    }
  }
  for (long long m = 0; m <= 8; ++m) {
    for (long long n = m % 2; m + n <= 8; n += 2) {
      const auto amp = bwb::hom_amplitude(m, n);
      ck.expect(amp.lo == 0 && amp.lo <= amp.enumerated_max && amp.enumerated_max <= amp.hi,
                case_tag("amplitude ", {m, n}));
    }
  }
  return ck.outcome();
}

// 7. Block counts for the stable-locus variants and the genus-2 coarse table.
Outcome criterion_blocks() {
  Check ck;
  const liecore::GroupType a1(liecore::Series::A, 1);
  for (long long g = 2; g <= 12; ++g) {
    const auto semi = sod::enumerate_blocks(sod::Variant::Semistable, a1, g);
    ck.expect(static_cast<long long>(semi.blocks.size()) == 4 * g - 2,
              case_tag("semistable count ", {g}));
    const auto coarse = sod::enumerate_blocks(sod::Variant::Coarse, a1, g);
    ck.expect(static_cast<long long>(coarse.blocks.size()) == 2 * g - 1,
              case_tag("coarse count ", {g}));
  }
  const auto table = sod::enumerate_blocks(sod::Variant::Coarse, a1, 2);
  const std::vector<sod::BlockSpec> expected{{0, sod::Factor::SymPower, {0}},
                                             {0, sod::Factor::SymPower, {1}},
                                             {1, sod::Factor::SymPower, {0}}};
  ck.expect(table.blocks == expected, "genus-2 coarse table");
  return ck.outcome();
}

// 8. Hochschild additivity across the coarse blocks, with the genus-2
//    instance pinned term by term.
Outcome criterion_hochschild() {
  Check ck;
  for (long long g = 2; g <= 5; ++g)
    ck.expect(sod::hh_additivity_check(g).pass, case_tag("additivity ", {g}));
  const auto report = sod::hh_additivity_check(2);
  ck.expect(report.lhs.str() == "2s^-1+4+2s", "genus-2 lhs string");
  ck.expect(report.lhs.total() == 8, "genus-2 total");
  const auto block0 = sod::hh_collapse(sod::hodge_sym_power(2, 0));
  const auto block1 = sod::hh_collapse(sod::hodge_sym_power(2, 1));
  ck.expect(block0.str() == "1" && block0.total() == 1, "genus-2 point block");
  ck.expect(block1.str() == "2s^-1+2+2s" && block1.total() == 6, "genus-2 curve block");
  ck.expect(report.rhs == block0 + block1 + block0, "genus-2 block sum");
  return ck.outcome();
}

// 9. The moduli Hodge polynomial passes its internal validations.
Outcome criterion_moduli_hodge() {
  Check ck;
  for (long long g = 2; g <= 6; ++g) {
    const auto h = sod::hodge_moduli_rank2_odd(g); // throws if any validation fails
    const int dim = static_cast<int>(3 * g - 3);
    ck.expect(h.h(0, 0) == 1 && h.h(dim, dim) == 1 && h.poly().max_total_degree() == 2 * dim,
              case_tag("moduli degrees ", {g}));
  }
  return ck.outcome();
}

} // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  out.push_back(run(1, "alcove closed forms agree with the reflection-word search", 10.0,
                    criterion_alcove_oracle));
  out.push_back(run(2, "level-0 alcove closed form", 0.0, criterion_level0));
  out.push_back(run(3, "Verlinde dimensions: trig cross-check, small families, handle cutting",
                    30.0, criterion_verlinde));
  out.push_back(run(4, "cohomology oracle: unit fixture and negative-level vanishing", 0.0,
                    criterion_cohomology));
  out.push_back(run(5, "coinvariant suite: Hilbert series, characters, Hom vanishing, generation",
                    60.0, criterion_coinvariants));
  out.push_back(
      run(6, "semiorthogonality certificates and Hom-amplitude bounds", 0.0, criterion_certificates));
  out.push_back(run(7, "block counts and the genus-2 coarse table", 0.0, criterion_blocks));
  out.push_back(run(8, "Hochschild additivity across the coarse blocks", 10.0, criterion_hochschild));
  out.push_back(run(9, "moduli Hodge polynomial internal validations", 0.0, criterion_moduli_hodge));
  return out;
}

bool all_pass(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass)
      return false;
  return true;
}

} // namespace bunblocks::verify

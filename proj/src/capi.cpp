#include "bunblocks.h"

#include <exception>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "alcove.hpp"
#include "bwb.hpp"
#include "coinv.hpp"
#include "error.hpp"
#include "fusion.hpp"
#include "jsonio.hpp"
#include "liecore.hpp"
#include "sod.hpp"
#include "verify.hpp"

using nlohmann::json;
namespace bb = bunblocks;

struct bb_result {
  bb_status status = BB_OK;
  std::string json_text;
  std::string error;
};

namespace {

bb_status status_of(bb::errc code) {
  switch (code) {
  case bb::errc::invalid_argument:
    return BB_ERR_INVALID_ARGUMENT;
  case bb::errc::unsupported:
    return BB_ERR_UNSUPPORTED;
  case bb::errc::search_limit:
    return BB_ERR_SEARCH_LIMIT;
  case bb::errc::check_failed:
    return BB_ERR_CHECK_FAILED;
  case bb::errc::internal:
    return BB_ERR_INTERNAL;
  }
  return BB_ERR_INTERNAL;
}

// Runs one operation, capturing the payload or translating the exception.
bb_result* make(const std::function<json()>& op) {
  auto* r = new bb_result;
  try {
    r->json_text = op().dump();
  } catch (const bb::Error& e) {
    r->status = status_of(e.code());
    r->error = e.what();
  } catch (const std::exception& e) {
    r->status = BB_ERR_INTERNAL;
    r->error = e.what();
  }
  return r;
}

std::span<const long long> as_span(const long long* p, size_t n) {
  return p == nullptr ? std::span<const long long>{} : std::span<const long long>{p, n};
}

std::span<const int> as_span(const int* p, size_t n) {
  return p == nullptr ? std::span<const int>{} : std::span<const int>{p, n};
}

} // namespace

extern "C" {

const char* bb_version(void) { return "0.1.0"; }

bb_status bb_result_status(const bb_result* r) { return r->status; }

const char* bb_result_json(const bb_result* r) { return r->json_text.c_str(); }

const char* bb_result_error(const bb_result* r) { return r->error.c_str(); }

void bb_result_free(bb_result* r) { delete r; }

bb_result* bb_dual_coxeter(char series, int rank) {
  return make([&] {
    auto t = bb::liecore::GroupType::parse(series, rank);
    return json{{"dual_coxeter", bb::liecore::dual_coxeter(t)}, {"type", t.name()}};
  });
}

bb_result* bb_irrep_character(long long m) {
  return make([&] {
    auto c = bb::liecore::irrep_character(m);
    return json{{"character", bb::jsonio::character_json(c)},
                {"dimension", c.dimension().str()},
                {"weight", m}};
  });
}

bb_result* bb_tensor_power(long long m) {
  return make([&] {
    auto c = bb::liecore::tensor_power_character(m);
    return json{{"character", bb::jsonio::character_json(c)},
                {"decomposition", bb::jsonio::decomposition_json(bb::liecore::decompose(c))},
                {"dimension", c.dimension().str()},
                {"m", m}};
  });
}

bb_result* bb_alcove_sl2(long long level, long long weight) {
  return make([&] {
    return bb::jsonio::alcove_json(bb::alcove::classify_sl2(level, weight), false);
  });
}

bb_result* bb_alcove_type_a(int rank, long long level, const long long* lambda, size_t len) {
  return make([&] {
    auto c = bb::alcove::classify_type_a(rank, level, as_span(lambda, len));
    return bb::jsonio::alcove_json(c, false);
  });
}

bb_result* bb_alcove_bfs(int rank, long long level, const long long* lambda, size_t len,
                         int radius) {
  return make([&] {
    if (radius <= 0)
      radius = bb::alcove::kDefaultBfsRadius;
    auto c = bb::alcove::classify_bfs(rank, level, as_span(lambda, len), radius);
    return bb::jsonio::alcove_json(c, true);
  });
}

bb_result* bb_fusion_coefficient(int level, int a, int b, int c) {
  return make([&] {
    return json{{"a", a},
                {"b", b},
                {"c", c},
                {"coefficient", bb::fusion::fusion_coefficient(level, a, b, c).str()},
                {"level", level}};
  });
}

bb_result* bb_fusion_matrix(int level, int a) {
  return make([&] {
    bb::fusion::FusionRing ring(level);
    return json{{"a", a}, {"level", level}, {"matrix", bb::jsonio::matrix_json(ring.n_matrix(a))}};
  });
}

bb_result* bb_verlinde(int level, long long genus, const int* insertions, size_t len,
                       int include_trig) {
  return make([&] {
    bb::fusion::FusionRing ring(level);
    auto ins = as_span(insertions, len);
    json j{{"dim", ring.verlinde_dim(genus, ins).str()},
           {"genus", genus},
           {"insertions", std::vector<int>(ins.begin(), ins.end())},
           {"level", level}};
    if (include_trig != 0)
      j["trig"] = json{{"approx", true}, {"value", ring.verlinde_dim_trig(genus, ins)}};
    return j;
  });
}

bb_result* bb_cohomology(long long level, long long genus, const long long* insertions,
                         size_t len, int xi_parity) {
  return make([&] {
    auto a = bb::bwb::cohomology(level, genus, as_span(insertions, len),
                                 bb::bwb::TwistFlag{xi_parity});
    return bb::jsonio::cohomology_json(a);
  });
}

bb_result* bb_homs(long long m, long long n) {
  return make([&] {
    bool obstructed = bb::bwb::hom_parity_obstruction(m, n);
    json j{{"m", m}, {"n", n}, {"parity_obstruction", obstructed}};
    if (!obstructed && m + n > 0) {
      auto amp = bb::bwb::hom_amplitude(m, n);
      j["amplitude"] =
          json{{"enumerated_max", amp.enumerated_max}, {"hi", amp.hi}, {"lo", amp.lo}};
      if (m > n) {
        auto cert = bb::bwb::semiorthogonality_certificate(m, n);
        j["certificate"] =
            json{{"amplitude_length_after_degree0", cert.amplitude_length_after_degree0},
                 {"diagonal_codim", cert.diagonal_codim},
                 {"pass", cert.pass}};
      }
    }
    return j;
  });
}

bb_result* bb_coinv_hilbert(int m) {
  return make([&] {
    auto h = bb::coinv::coinvariant_hilbert(m);
    json dims = json::array();
    bb::Int total = 0;
    for (const auto& d : h) {
      dims.push_back(d.str());
      total += d;
    }
    return json{{"hilbert", dims}, {"m", m}, {"total", total.str()}};
  });
}

bb_result* bb_coinv_graded_character(int m) {
  return make([&] {
    json j = bb::jsonio::graded_module_json(bb::coinv::graded_character_R(m));
    j["m"] = m;
    return j;
  });
}

bb_result* bb_coinv_character_s(long long n, const char* model) {
  return make([&] {
    auto mdl = bb::coinv::parse_s_model(model != nullptr ? model : "");
    auto c = bb::coinv::character_S(n, mdl);
    return json{{"character", bb::jsonio::character_json(c)},
                {"dimension", c.dimension().str()},
                {"model", model},
                {"n", n}};
  });
}

bb_result* bb_coinv_hom_mult(long long m, long long n, const char* model) {
  return make([&] {
    auto mdl = bb::coinv::parse_s_model(model != nullptr ? model : "");
    auto mult = bb::coinv::hom_mult(m, bb::coinv::character_S(n, mdl));
    return json{{"m", m}, {"model", model}, {"multiplicity", mult.str()}, {"n", n}};
  });
}

bb_result* bb_coinv_generation_check(int m) {
  return make([&] { return json{{"generated", bb::coinv::gtgen_check(m)}, {"m", m}}; });
}

bb_result* bb_blocks(const char* variant, char series, int rank, long long genus,
                     long long index_cap, int xi_parity) {
  return make([&] {
    auto v = bb::sod::parse_variant(variant != nullptr ? variant : "");
    auto t = bb::liecore::GroupType::parse(series, rank);
    bb::sod::Caps caps;
    if (index_cap >= 0)
      caps.max_index = index_cap;
    auto table = bb::sod::enumerate_blocks(v, t, genus, caps, xi_parity);
    return bb::jsonio::block_table_json(table);
  });
}

bb_result* bb_hodge_sym_power(long long genus, long long n) {
  return make([&] {
    auto h = bb::sod::hodge_sym_power(genus, n);
    json poincare = json::array();
    for (const auto& c : h.poincare())
      poincare.push_back(c.str());
    return json{{"genus", genus},
                {"hodge", bb::jsonio::hodge_json(h)},
                {"n", n},
                {"poincare", poincare}};
  });
}

bb_result* bb_hodge_moduli_rank2_odd(long long genus) {
  return make([&] {
    auto h = bb::sod::hodge_moduli_rank2_odd(genus);
    json poincare = json::array();
    for (const auto& c : h.poincare())
      poincare.push_back(c.str());
    return json{{"genus", genus}, {"hodge", bb::jsonio::hodge_json(h)}, {"poincare", poincare}};
  });
}

bb_result* bb_hh_check(long long genus) {
  return make([&] {
    auto rep = bb::sod::hh_additivity_check(genus);
    return json{{"genus", genus},
                {"lhs", bb::jsonio::hh_json(rep.lhs)},
                {"pass", rep.pass},
                {"rhs", bb::jsonio::hh_json(rep.rhs)}};
  });
}

bb_result* bb_verify_all(void) {
  return make([&] {
    auto results = bb::verify::run_all();
    return json{{"criteria", bb::jsonio::criteria_json(results)},
                {"pass", bb::verify::all_pass(results)}};
  });
}

} // extern "C"

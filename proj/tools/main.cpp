// bunblocks command-line interface.  Thin shell over the C API: every
// subcommand dispatches to one library operation, prints either a
// human-readable table or a single JSON object {command, params, result},
// and exits 0 on success, 1 when a check subcommand reports failure, 2 on
// usage errors.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bunblocks.h"

using nlohmann::json;

namespace {

struct Options {
  bool as_json = false;
  std::string out_path;
};

// Owns one bb_result for the duration of a subcommand.
class Result {
public:
  explicit Result(bb_result* r) : r_(r) {}
  ~Result() { bb_result_free(r_); }
  Result(const Result&) = delete;
  Result& operator=(const Result&) = delete;

  bb_status status() const { return bb_result_status(r_); }
  std::string error() const { return bb_result_error(r_); }
  json payload() const { return json::parse(bb_result_json(r_)); }

private:
  bb_result* r_;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f)
    throw CLI::ValidationError("--out", "cannot open '" + opt.out_path + "' for writing");
  f << text;
}

// Renders the payload (human or JSON envelope), writes it, and maps the
// status to the exit code.  `check_ok`, when given, marks a check
// subcommand: a well-formed "failed" payload exits 1.
int finish(const std::string& command, const json& params, bb_result* raw, const Options& opt,
           const std::function<std::string(const json&)>& human,
           const std::function<bool(const json&)>& check_ok = {}) {
  Result res(raw);
  if (res.status() != BB_OK) {
    std::cerr << command << ": " << res.error() << "\n";
    bool usage = res.status() == BB_ERR_INVALID_ARGUMENT || res.status() == BB_ERR_UNSUPPORTED;
    return usage ? 2 : 1;
  }
  json payload = res.payload();
  std::string text;
  if (opt.as_json) {
    text = json{{"command", command}, {"params", params}, {"result", payload}}.dump() + "\n";
  } else {
    text = human(payload);
  }
  write_output(opt, text);
  return (check_ok && !check_ok(payload)) ? 1 : 0;
}

// "[[k, "v"], ...]" -> "k:v  k:v".
std::string pairs_line(const json& arr) {
  std::string s;
  for (const auto& e : arr) {
    if (!s.empty())
      s += "  ";
    s += e[0].dump() + ":" + e[1].get<std::string>();
  }
  return s.empty() ? "(zero)" : s;
}

std::string human_alcove(const json& r) {
  if (!r["regular"].get<bool>())
    return "singular\n";
  std::string s = "regular: length=" + r["length"].dump() + " reduced=" + r["reduced"].dump();
  if (r.contains("word"))
    s += "\nword: " + r["word"].dump();
  return s + "\n";
}

std::string human_cohomology(const json& r) {
  if (r["vanishes"].get<bool>())
    return "vanishes\n";
  return "degree: " + r["degree"].dump() + "\ndim: " + r["dim"].get<std::string>() + "\n";
}

std::string human_verlinde(const json& r) {
  std::string s = "dim: " + r["dim"].get<std::string>() + "\n";
  if (r.contains("trig"))
    s += "trig: " + r["trig"]["value"].dump() + " (approx)\n";
  return s;
}

std::string human_matrix(const json& rows) {
  std::string s;
  for (const auto& row : rows) {
    std::string line;
    for (const auto& e : row) {
      if (!line.empty())
        line += " ";
      line += e.get<std::string>();
    }
    s += line + "\n";
  }
  return s;
}

std::string human_tensor(const json& r) {
  return "dimension: " + r["dimension"].get<std::string>() +
         "\ncharacter: " + pairs_line(r["character"]) +
         "\ndecomposition: " + pairs_line(r["decomposition"]) + "\n";
}

std::string human_graded(const json& r) {
  std::string s;
  for (const auto& p : r["pieces"]) {
    s += "degree " + p["degree"].dump() + " (filtration " + p["filtration_index"].dump() +
         "): " + pairs_line(p["decomposition"]) + "\n";
  }
  s += "total: " + pairs_line(r["total_character"]) + "  dimension " +
       r["total_dimension"].get<std::string>() + "\n";
  return s;
}

std::string human_blocks(const json& r) {
  std::string s = "variant: " + r["variant"].get<std::string>() +
                  "\ntype: " + r["type"].get<std::string>() + "\ngenus: " + r["genus"].dump() +
                  "\ncount: " + r["count"].dump() + "\n";
  for (const auto& b : r["blocks"])
    s += "twist " + b["twist"].dump() + ": " + b["label"].get<std::string>() + "\n";
  return s;
}

std::string human_homs(const json& r) {
  if (r["parity_obstruction"].get<bool>())
    return "parity obstruction: all Homs vanish\n";
  std::string s = "parity obstruction: none\n";
  if (r.contains("amplitude")) {
    const auto& a = r["amplitude"];
    s += "amplitude: [" + a["lo"].dump() + ", " + a["hi"].dump() +
         "]  enumerated max: " + a["enumerated_max"].dump() + "\n";
  }
  if (r.contains("certificate")) {
    const auto& c = r["certificate"];
    s += "certificate: amplitude length after degree 0 = " +
         c["amplitude_length_after_degree0"].dump() +
         " < diagonal codimension = " + c["diagonal_codim"].dump() +
         (c["pass"].get<bool>() ? "  (pass)" : "  (FAIL)") + "\n";
  }
  return s;
}

std::string human_hh(const json& r) {
  return "lhs: " + r["lhs"]["str"].get<std::string>() +
         "\nrhs: " + r["rhs"]["str"].get<std::string>() +
         "\npass: " + (r["pass"].get<bool>() ? "true" : "false") + "\n";
}

std::string human_verify(const json& r) {
  std::string s;
  int failed = 0;
  for (const auto& c : r["criteria"]) {
    bool ok = c["pass"].get<bool>();
    failed += ok ? 0 : 1;
    s += std::string(ok ? "PASS" : "FAIL") + " [" + c["id"].dump() + "] " +
         c["description"].get<std::string>() + " (" + c["detail"].get<std::string>() + ", " +
         c["ms"].dump() + " ms)\n";
  }
  s += failed == 0 ? "all criteria passed\n"
                   : std::to_string(failed) + " criteria failed\n";
  return s;
}

// "A1" -> ('A', 1); anything else is a usage error.
void parse_type(const std::string& tag, char& series, int& rank) {
  if (tag.size() < 2 || tag[0] < 'A' || tag[0] > 'G')
    throw CLI::ValidationError("--type", "expected a simple type such as A1, B3, G2");
  series = tag[0];
  try {
    size_t used = 0;
    rank = std::stoi(tag.substr(1), &used);
    if (used + 1 != tag.size())
      throw std::invalid_argument(tag);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--type", "expected a simple type such as A1, B3, G2");
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"bunblocks: alcove classification, fusion rings and Verlinde dimensions, a "
               "cohomology oracle, coinvariant characters, and semiorthogonal block tables "
               "with Hochschild checks"};
  app.require_subcommand(1);

  Options opt;
  int rc = 0;
  auto add_common = [&opt](CLI::App* sub) {
    sub->add_flag("--json", opt.as_json, "Emit one JSON object {command, params, result}");
    sub->add_option("--out", opt.out_path, "Write the output to a file instead of stdout");
  };

  // --- alcove --------------------------------------------------------------
  auto* alcove = app.add_subcommand(
      "alcove", "Classify a dominant weight under the shifted affine Weyl action: singular, or "
                "regular with its minimal length and reduced level-integrable weight");
  long long a_level = 0;
  long long a_weight = 0;
  std::vector<long long> a_lambda;
  int a_rank = 0;
  bool a_bfs = false;
  int a_radius = 0;
  alcove->add_option("--level", a_level, "Nonnegative integer level")->required();
  auto* a_wopt = alcove->add_option("--weight", a_weight, "Highest weight (rank-1 closed form)");
  auto* a_lopt =
      alcove->add_option("--lambda", a_lambda, "Type A weight coordinates (needs --rank)");
  auto* a_ropt = alcove->add_option("--rank", a_rank, "Rank for the type A residue route");
  alcove->add_flag("--bfs", a_bfs,
                   "Classify by breadth-first reflection-word search (reports the word)");
  alcove->add_option("--radius", a_radius, "Reflection-word search radius (default 64)")
      ->envname("BUNBLOCKS_BFS_RADIUS");
  a_wopt->excludes(a_lopt);
  a_lopt->needs(a_ropt);
  add_common(alcove);
  alcove->callback([&] {
    if ((a_wopt->count() == 0) == (a_lopt->count() == 0))
      throw CLI::ValidationError("alcove", "exactly one of --weight or --lambda is required");
    json params{{"level", a_level}};
    bb_result* raw = nullptr;
    if (a_wopt->count() > 0) {
      params["weight"] = a_weight;
      if (a_bfs) {
        params["bfs"] = true;
        raw = bb_alcove_bfs(1, a_level, &a_weight, 1, a_radius);
      } else {
        raw = bb_alcove_sl2(a_level, a_weight);
      }
    } else {
      params["rank"] = a_rank;
      params["lambda"] = a_lambda;
      if (a_bfs) {
        params["bfs"] = true;
        raw = bb_alcove_bfs(a_rank, a_level, a_lambda.data(), a_lambda.size(), a_radius);
      } else {
        raw = bb_alcove_type_a(a_rank, a_level, a_lambda.data(), a_lambda.size());
      }
    }
    rc = finish("alcove", params, raw, opt, human_alcove);
  });

  // --- bwb -----------------------------------------------------------------
  auto* bwb = app.add_subcommand(
      "bwb", "Cohomology of a level twist with evaluation insertions on the rank-2 moduli: "
             "all-vanishing, or concentrated in one degree with a conformal-block dimension");
  long long b_level = 0;
  long long b_genus = 0;
  std::vector<long long> b_ins;
  int b_xi = 0;
  bwb->add_option("--level", b_level, "Integer level of the determinant twist")->required();
  bwb->add_option("--genus", b_genus, "Curve genus")->required();
  bwb->add_option("--ins", b_ins, "Insertion weights (nonnegative integers)");
  bwb->add_option("--xi", b_xi, "Twisting-class parity, 0 or 1")->default_val(0);
  add_common(bwb);
  bwb->callback([&] {
    json params{{"genus", b_genus}, {"ins", b_ins}, {"level", b_level}, {"xi", b_xi}};
    rc = finish("bwb", params, bb_cohomology(b_level, b_genus, b_ins.data(), b_ins.size(), b_xi),
                opt, human_cohomology);
  });

  // --- verlinde ------------------------------------------------------------
  auto* verlinde = app.add_subcommand(
      "verlinde", "Conformal-block dimension at a level for a genus with insertion labels, by "
                  "exact fusion-matrix contraction");
  int v_level = 0;
  long long v_genus = 0;
  std::vector<int> v_ins;
  bool v_trig = false;
  verlinde->add_option("--level", v_level, "Fusion level k >= 0")->required();
  verlinde->add_option("--genus", v_genus, "Curve genus")->required();
  verlinde->add_option("--ins", v_ins, "Insertion labels in 0..k");
  verlinde->add_flag("--trig", v_trig, "Add the floating trigonometric cross-check");
  add_common(verlinde);
  verlinde->callback([&] {
    json params{{"genus", v_genus}, {"ins", v_ins}, {"level", v_level}, {"trig", v_trig}};
    rc = finish("verlinde", params,
                bb_verlinde(v_level, v_genus, v_ins.data(), v_ins.size(), v_trig ? 1 : 0), opt,
                human_verlinde);
  });

  // --- fusion --------------------------------------------------------------
  auto* fusion = app.add_subcommand(
      "fusion", "Level-k rank-1 fusion ring: one structure coefficient, or the whole fusion "
                "matrix of a label");
  int f_level = 0;
  int f_a = 0;
  int f_b = 0;
  int f_c = 0;
  fusion->add_option("--level", f_level, "Fusion level k >= 0")->required();
  fusion->add_option("--a", f_a, "First label")->required();
  auto* f_bopt = fusion->add_option("--b", f_b, "Second label (with --c: one coefficient)");
  auto* f_copt = fusion->add_option("--c", f_c, "Third label (with --b: one coefficient)");
  f_bopt->needs(f_copt);
  f_copt->needs(f_bopt);
  add_common(fusion);
  fusion->callback([&] {
    if (f_bopt->count() > 0) {
      json params{{"a", f_a}, {"b", f_b}, {"c", f_c}, {"level", f_level}};
      rc = finish("fusion", params, bb_fusion_coefficient(f_level, f_a, f_b, f_c), opt,
                  [](const json& r) {
                    return "coefficient: " + r["coefficient"].get<std::string>() + "\n";
                  });
    } else {
      json params{{"a", f_a}, {"level", f_level}};
      rc = finish("fusion", params, bb_fusion_matrix(f_level, f_a), opt,
                  [](const json& r) { return human_matrix(r["matrix"]); });
    }
  });

  // --- tensor --------------------------------------------------------------
  auto* tensor = app.add_subcommand(
      "tensor", "Character and irreducible decomposition of the m-th tensor power of the "
                "defining rank-2 representation");
  long long t_m = 0;
  tensor->add_option("--m", t_m, "Tensor power m >= 0")->required();
  add_common(tensor);
  tensor->callback([&] {
    rc = finish("tensor", json{{"m", t_m}}, bb_tensor_power(t_m), opt, human_tensor);
  });

  // --- coinv ---------------------------------------------------------------
  auto* coinv = app.add_subcommand(
      "coinv", "Coinvariant-algebra calculators: Hilbert series, graded symmetric-invariant "
               "characters, quotient-module characters, Hom multiplicities, and the "
               "loop-generation check");
  coinv->require_subcommand(1);

  auto* ch = coinv->add_subcommand(
      "hilbert", "Graded dimension of the rank-m coinvariant algebra (the q-factorial [m]_q!)");
  int c_hm = 0;
  ch->add_option("--m", c_hm, "Number of variables, 1..4")->required();
  add_common(ch);
  ch->callback([&] {
    rc = finish("coinv hilbert", json{{"m", c_hm}}, bb_coinv_hilbert(c_hm), opt,
                [](const json& r) {
                  std::string s = "hilbert:";
                  for (const auto& d : r["hilbert"])
                    s += " " + d.get<std::string>();
                  return s + "\ntotal: " + r["total"].get<std::string>() + "\n";
                });
  });

  auto* cg = coinv->add_subcommand(
      "graded", "Graded character of the symmetric invariants of the m-fold tensor model over "
                "the coinvariant algebra");
  int c_gm = 0;
  cg->add_option("--m", c_gm, "Number of tensor factors, 1..4")->required();
  add_common(cg);
  cg->callback([&] {
    rc = finish("coinv graded", json{{"m", c_gm}}, bb_coinv_graded_character(c_gm), opt,
                human_graded);
  });

  auto* cs = coinv->add_subcommand(
      "s-character", "Character of the rank-n quotient module in one of the two models");
  long long c_sn = 0;
  std::string c_smodel = "quotient-by-t";
  cs->add_option("--n", c_sn, "Module rank n >= 0")->required();
  cs->add_option("--model", c_smodel, "quotient-by-t | fiber-tensor")->default_val("quotient-by-t");
  add_common(cs);
  cs->callback([&] {
    json params{{"model", c_smodel}, {"n", c_sn}};
    rc = finish("coinv s-character", params, bb_coinv_character_s(c_sn, c_smodel.c_str()), opt,
                [](const json& r) {
                  return "dimension: " + r["dimension"].get<std::string>() +
                         "\ncharacter: " + pairs_line(r["character"]) + "\n";
                });
  });

  auto* cm = coinv->add_subcommand(
      "hom", "Multiplicity of the weight-m irreducible inside the rank-n quotient module");
  long long c_mm = 0;
  long long c_mn = 0;
  std::string c_mmodel = "quotient-by-t";
  cm->add_option("--m", c_mm, "Irreducible highest weight m >= 0")->required();
  cm->add_option("--n", c_mn, "Module rank n >= 0")->required();
  cm->add_option("--model", c_mmodel, "quotient-by-t | fiber-tensor")->default_val("quotient-by-t");
  add_common(cm);
  cm->callback([&] {
    json params{{"m", c_mm}, {"model", c_mmodel}, {"n", c_mn}};
    rc = finish("coinv hom", params, bb_coinv_hom_mult(c_mm, c_mn, c_mmodel.c_str()), opt,
                [](const json& r) {
                  return "multiplicity: " + r["multiplicity"].get<std::string>() + "\n";
                });
  });

  auto* cgen = coinv->add_subcommand(
      "generation", "Check that the degree-0 invariants generate the whole graded module under "
                    "the loop operators (exit 1 when they do not)");
  int c_genm = 0;
  cgen->add_option("--m", c_genm, "Number of tensor factors, 1..3")->required();
  add_common(cgen);
  cgen->callback([&] {
    rc = finish(
        "coinv generation", json{{"m", c_genm}}, bb_coinv_generation_check(c_genm), opt,
        [](const json& r) {
          return std::string("generated: ") + (r["generated"].get<bool>() ? "true" : "false") +
                 "\n";
        },
        [](const json& r) { return r["generated"].get<bool>(); });
  });

  // --- blocks ----------------------------------------------------------------
  auto* blocks = app.add_subcommand(
      "blocks", "Semiorthogonal block table of one decomposition variant: stack, semistable, "
                "coarse, generalG, generalG-coarse, or conjecture");
  std::string k_variant;
  std::string k_type = "A1";
  long long k_genus = 0;
  long long k_cap = -1;
  int k_xi = 1;
  blocks->add_option("--variant", k_variant,
                     "stack | semistable | coarse | generalG | generalG-coarse | conjecture")
      ->required();
  blocks->add_option("--type", k_type, "Simple type, e.g. A1, A2, B3")->default_val("A1");
  blocks->add_option("--genus", k_genus, "Curve genus");
  blocks->add_option("--cap", k_cap,
                     "Index cap for the infinite families (stack, conjecture); -1 = none");
  blocks->add_option("--xi", k_xi, "Twisting-class parity, 0 or 1")->default_val(1);
  add_common(blocks);
  blocks->callback([&] {
    char series = 'A';
    int rank = 1;
    parse_type(k_type, series, rank);
    json params{{"cap", k_cap}, {"genus", k_genus}, {"type", k_type},
                {"variant", k_variant}, {"xi", k_xi}};
    rc = finish("blocks", params,
                bb_blocks(k_variant.c_str(), series, rank, k_genus, k_cap, k_xi), opt,
                human_blocks);
  });

  // --- homs ------------------------------------------------------------------
  auto* homs = app.add_subcommand(
      "homs", "Hom-degree report between the m-th and n-th kernel-image blocks: central parity "
              "obstruction, cohomological amplitude, and the semiorthogonality certificate");
  long long h_m = 0;
  long long h_n = 0;
  homs->add_option("--m", h_m, "First index m >= 0")->required();
  homs->add_option("--n", h_n, "Second index n >= 0")->required();
  add_common(homs);
  homs->callback([&] {
    rc = finish("homs", json{{"m", h_m}, {"n", h_n}}, bb_homs(h_m, h_n), opt, human_homs);
  });

  // --- hh-check ----------------------------------------------------------------
  auto* hh = app.add_subcommand(
      "hh-check", "Hochschild additivity: the collapsed Hodge polynomial of the rank-2 moduli "
                  "must equal the sum over the coarse block table (exit 1 on mismatch)");
  long long hh_genus = 0;
  hh->add_option("--genus", hh_genus, "Curve genus, 2..6")->required();
  add_common(hh);
  hh->callback([&] {
    rc = finish(
        "hh-check", json{{"genus", hh_genus}}, bb_hh_check(hh_genus), opt, human_hh,
        [](const json& r) { return r["pass"].get<bool>(); });
  });

  // --- verify-all ---------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify-all", "Run the full acceptance sweep; one PASS/FAIL line per criterion, exit 1 on "
                    "any failure");
  add_common(verify);
  verify->callback([&] {
    rc = finish("verify-all", json::object(), bb_verify_all(), opt, human_verify,
                [](const json& r) { return r["pass"].get<bool>(); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qpi/json_io.hpp"
#include "qpi/rng.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  uint64_t seed = 0;
  double tol = -1;
  int threads = 1;
};

void emit(const GlobalOpts& g, const std::string& command,
          const qpi::json& config, const qpi::json& result) {
  qpi::json doc{{"header",
                 {{"tool", "qpi"},
                  {"version", kVersion},
                  {"command", command},
                  {"config", config},
                  {"seed", g.seed}}},
                {"result", result}};
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw qpi::parameter_error("cannot open output: " + g.out);
    os = &file;
  }
  if (g.format == "json") {
    *os << doc.dump(2) << "\n";
  } else {
    // csv: flattened key,value rows (arrays of records get one row each)
    *os << "key,value\n";
    for (const auto& [k, v] : doc.flatten().items())
      *os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump())
          << "\n";
  }
}

long parse_order(const std::string& s) {
  if (s == "inf" || s == "infinity") return qpi::kInfiniteOrder;
  long x = std::stol(s);
  if (x < 0) throw qpi::parameter_error("sign order must be >= 0 or 'inf'");
  return x;
}

}  // namespace

int run(int argc, char** argv) {
  using namespace qpi;
  CLI::App app{"exact and numeric engines for partial-isometry semigroups"};
  app.require_subcommand(1);
  app.set_config("--config");

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance override (engine default if < 0)");
  app.add_option("--threads", g.threads, "parallelism bound")
      ->capture_default_str();

  // enumerate
  int e_N = 0, e_k = -1;
  std::string e_x = "1";
  auto* cmd_enum = app.add_subcommand("enumerate", "signed partial permutations");
  cmd_enum->add_option("--N", e_N, "ground set size")->required();
  cmd_enum->add_option("--x", e_x, "sign order (or 'inf')")->capture_default_str();
  cmd_enum->add_option("--k", e_k, "restrict to rank k");

  // law
  int l_N = 0, l_k = 0, l_l = 0;
  long l_x = 1;
  std::string l_mode = "formula", l_st;
  auto* cmd_law = app.add_subcommand("law", "fixed-point laws on rank slices");
  cmd_law->add_option("--N", l_N)->required();
  cmd_law->add_option("--k", l_k)->required();
  cmd_law->add_option("--l", l_l)->required();
  cmd_law->add_option("--x", l_x, "sign order")->capture_default_str();
  cmd_law->add_option("--mode", l_mode)
      ->check(CLI::IsMember({"formula", "bruteforce", "signmix", "compare", "tv"}))
      ->capture_default_str();
  cmd_law->add_option("--st", l_st, "Poisson rate for tv mode (default kl/N^2)");

  // weingarten
  int w_n = 0, w_l = -1;
  long w_N = 0, w_k = -1;
  std::string w_cat = "NC", w_mode = "table", w_word;
  auto* cmd_wg = app.add_subcommand("weingarten", "Gram/Weingarten calculus");
  cmd_wg->add_option("--n", w_n)->required();
  cmd_wg->add_option("--N", w_N)->required();
  cmd_wg->add_option("--k", w_k);
  cmd_wg->add_option("--l", w_l);
  cmd_wg->add_option("--cat", w_cat, "P|P2|Px(x)|NC|NC2|NCx(x)")
      ->capture_default_str();
  cmd_wg->add_option("--word", w_word, "colored word over 1/*");
  cmd_wg->add_option("--mode", w_mode)
      ->check(CLI::IsMember({"table", "moment", "triple", "haar-check"}))
      ->capture_default_str();

  // bp
  std::string b_pair = "poisson", b_st = "1";
  int b_nmax = 6;
  auto* cmd_bp = app.add_subcommand("bp", "classical vs free cumulant match");
  cmd_bp->add_option("--pair", b_pair)
      ->check(CLI::IsMember({"poisson", "real-gaussian", "bessel2"}))
      ->capture_default_str();
  cmd_bp->add_option("--st", b_st, "partition weight")->capture_default_str();
  cmd_bp->add_option("--nmax", b_nmax)->capture_default_str();

  // sample
  std::string s_cls = "O", s_mode = "law";
  int s_N = 0, s_k = 0, s_l = -1, s_nmax = 4;
  long s_samples = 1000;
  auto* cmd_sample = app.add_subcommand("sample", "Haar UVW samples and laws");
  cmd_sample->add_option("--class", s_cls, "O|U|B|H|K|S")->capture_default_str();
  cmd_sample->add_option("--N", s_N)->required();
  cmd_sample->add_option("--k", s_k)->required();
  cmd_sample->add_option("--l", s_l, "truncation (default k)");
  cmd_sample->add_option("--samples", s_samples)->capture_default_str();
  cmd_sample->add_option("--nmax", s_nmax)->capture_default_str();
  cmd_sample->add_option("--mode", s_mode)
      ->check(CLI::IsMember({"matrix", "law"}))
      ->capture_default_str();

  // model-check
  std::string m_cls = "U", m_mode = "crossed", m_variant = "abc_cba",
              m_target = "O2N_from_U";
  int m_N = 4, m_count = 100;
  auto* cmd_model = app.add_subcommand("model-check", "half-liberation models");
  cmd_model->add_option("--class", m_cls)->capture_default_str();
  cmd_model->add_option("--N", m_N)->capture_default_str();
  cmd_model->add_option("--count", m_count)->capture_default_str();
  cmd_model->add_option("--mode", m_mode)
      ->check(CLI::IsMember({"crossed", "double", "restricted"}))
      ->capture_default_str();
  cmd_model->add_option("--variant", m_variant)
      ->check(CLI::IsMember({"abc_cba", "abstarc"}))
      ->capture_default_str();
  cmd_model->add_option("--target", m_target)
      ->check(CLI::IsMember({"O2N_from_U", "H2N_from_K"}))
      ->capture_default_str();

  // global flags may follow the subcommand
  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad params exit 2
  }

  if (cmd_enum->parsed()) {
    long x = parse_order(e_x);
    std::optional<int> k = e_k >= 0 ? std::optional<int>(e_k) : std::nullopt;
    json records = json::array();
    enumerate(e_N, x, k,
              [&](const SignedPartialPermutation& f) { records.push_back(to_json(f)); });
    emit(g, "enumerate",
         {{"N", e_N}, {"x", e_x}, {"k", e_k}},
         {{"count", records.size()}, {"records", records}});
    return 0;
  }

  if (cmd_law->parsed()) {
    json cfg{{"N", l_N}, {"k", l_k}, {"l", l_l}, {"x", l_x}, {"mode", l_mode}};
    json result;
    if (l_mode == "formula") {
      result = to_json(mu_formula(l_N, l_k, l_l));
    } else if (l_mode == "bruteforce") {
      result = to_json(mu_bruteforce(l_N, l_k, l_l, l_x));
    } else if (l_mode == "signmix") {
      result = to_json(sign_mixing(l_N, l_k, l_l));
    } else if (l_mode == "compare") {
      RationalMeasure lhs = l_x == 2 ? sign_mixing(l_N, l_k, l_l)
                                     : mu_formula(l_N, l_k, l_l);
      RationalMeasure rhs = mu_bruteforce(l_N, l_k, l_l, l_x);
      result = json{{"equal", lhs == rhs},
                    {"lhs", to_json(lhs)},
                    {"rhs", to_json(rhs)}};
    } else {  // tv
      Rational st = l_st.empty()
                        ? Rational(Int(l_k) * l_l, Int(l_N) * l_N)
                        : parse_rational(l_st);
      cfg["st"] = to_string(st);
      double tv = tv_to_poisson(mu_formula(l_N, l_k, l_l), to_double(st));
      result = json{{"tv", tv}};
    }
    emit(g, "law", cfg, result);
    return 0;
  }

  if (cmd_wg->parsed()) {
    Category cat = parse_category(w_cat);
    std::optional<ColoredWord> word;
    if (!w_word.empty()) {
      ColoredWord cw;
      for (char c : w_word) {
        if (c == '1') cw.push_back(1);
        else if (c == '*') cw.push_back(-1);
        else throw parameter_error("word letters must be '1' or '*'");
      }
      word = cw;
    } else if (cat.colored()) {
      word = ones_word(w_n);
    }
    json cfg{{"n", w_n}, {"N", w_N}, {"k", w_k}, {"l", w_l},
             {"cat", w_cat}, {"mode", w_mode}, {"word", w_word}};
    json result;
    if (w_mode == "table") {
      result = to_json(build_table(w_n, w_N, cat, word));
    } else if (w_mode == "moment") {
      if (w_l < 0) throw parameter_error("moment mode needs --l");
      result = json{{"moment", to_string(single_group_moment(w_n, w_N, w_l, cat, word))}};
    } else if (w_mode == "triple") {
      if (w_k < 0 || w_l < 0) throw parameter_error("triple mode needs --k --l");
      result = json{{"moment", to_string(triple_moment(w_n, w_N, w_k, w_l, cat, word))}};
    } else {  // haar-check: at k=N the triple moment is the group moment
      if (w_l < 0) throw parameter_error("haar-check mode needs --l");
      Rational triple = triple_moment(w_n, w_N, w_N, w_l, cat, word);
      Rational single = single_group_moment(w_n, w_N, w_l, cat, word);
      result = json{{"pass", triple == single},
                    {"triple", to_string(triple)},
                    {"single", to_string(single)}};
    }
    emit(g, "weingarten", cfg, result);
    return 0;
  }

  if (cmd_bp->parsed()) {
    Rational st = parse_rational(b_st);
    Category classical = Category::P(), free = Category::NC();
    if (b_pair == "real-gaussian") {
      classical = Category::P2();
      free = Category::NC2();
    } else if (b_pair == "bessel2") {
      classical = Category::Px(2);
      free = Category::NCx(2);
    }
    std::vector<Rational> cm, fm;
    json cm_json = json::array(), fm_json = json::array();
    for (int n = 1; n <= b_nmax; ++n) {
      std::optional<ColoredWord> word;
      if (classical.colored()) word = ones_word(n);
      cm.push_back(partition_moment(classical, n, word, st));
      fm.push_back(partition_moment(free, n, word, st));
      cm_json.push_back(to_string(cm.back()));
      fm_json.push_back(to_string(fm.back()));
    }
    json result = to_json(bp_check(cm, fm, b_nmax));
    result["classical_moments"] = cm_json;
    result["free_moments"] = fm_json;
    emit(g, "bp",
         {{"pair", b_pair}, {"st", b_st}, {"nmax", b_nmax}}, result);
    return 0;
  }

  if (cmd_sample->parsed()) {
    IsoClass cls = parse_class(s_cls);
    if (s_l < 0) s_l = s_k;
    json cfg{{"class", s_cls}, {"N", s_N}, {"k", s_k}, {"l", s_l},
             {"samples", s_samples}, {"nmax", s_nmax}, {"mode", s_mode}};
    json result;
    if (s_mode == "matrix") {
      auto T = sample(cls, s_N, s_k, g.seed);
      result = json{{"matrix", to_json(T.m)},
                    {"rank", T.rank},
                    {"residual", T.residual()}};
    } else {
      result = to_json(monte_carlo_law(cls, s_N, s_k, s_l, s_samples, g.seed,
                                       s_nmax, g.threads));
    }
    emit(g, "sample", cfg, result);
    return 0;
  }

  if (cmd_model->parsed()) {
    IsoClass cls = parse_class(m_cls);
    double tol = g.tol >= 0 ? g.tol : (m_mode == "double" ? 1e-8 : 1e-9);
    json cfg{{"class", m_cls}, {"N", m_N}, {"count", m_count},
             {"mode", m_mode}, {"variant", m_variant}, {"target", m_target},
             {"tol", tol}};
    json result;
    if (m_mode == "crossed") {
      auto variant = m_variant == "abc_cba" ? HalfCommVariant::AbcCba
                                            : HalfCommVariant::AbStarC;
      double max_pattern = 0, max_iso = 0, max_hc = 0;
      bool pass = true;
      for (int i = 0; i < m_count; ++i) {
        int k = i % (m_N + 1);
        auto U = sample(cls, m_N, k, splitmix64(g.seed + i));
        auto model = crossed_model(U);
        auto hc = check_half_commutation(model, variant, tol, g.seed);
        max_pattern = std::max(max_pattern, model.pattern_residual());
        max_iso = std::max(max_iso, model.isometry_residual());
        max_hc = std::max(max_hc, hc.max_residual);
        pass = pass && model.pattern_residual() <= tol &&
               model.isometry_residual() <= tol && hc.pass;
      }
      result = json{{"max_pattern_residual", max_pattern},
                    {"max_isometry_residual", max_iso},
                    {"max_half_commutation_residual", max_hc},
                    {"pass", pass}};
    } else if (m_mode == "double") {
      double max_res = 0;
      bool pass = true;
      for (int i = 0; i < m_count; ++i) {
        auto U = sample(cls, m_N, i % (m_N + 1), splitmix64(g.seed) + 2 * i);
        auto V = sample(cls, m_N, (i + 1) % (m_N + 1),
                        splitmix64(g.seed) + 2 * i + 1);
        auto rep = double_compose_check(U, V, tol);
        max_res = std::max(max_res, rep.residual);
        pass = pass && rep.pass;
      }
      result = json{{"max_residual", max_res}, {"pass", pass}};
    } else {  // restricted
      auto target = parse_target(m_target);
      int hits = 0;
      for (int i = 0; i < m_count; ++i) {
        auto U = sample(cls, m_N, i % (m_N + 1), splitmix64(g.seed) + i);
        if (restricted_class_check(U, target, tol)) ++hits;
      }
      result = json{{"count", m_count},
                    {"members", hits},
                    {"pass", hits == m_count}};
    }
    emit(g, "model-check", cfg, result);
    return 0;
  }

  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qpi::singular_gram_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const qpi::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const qpi::guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

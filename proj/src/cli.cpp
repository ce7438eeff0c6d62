#include "fvkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "fvkit/decompose.hpp"
#include "fvkit/efgame.hpp"
#include "fvkit/enumerate.hpp"
#include "fvkit/errors.hpp"
#include "fvkit/interp.hpp"
#include "fvkit/json_io.hpp"
#include "fvkit/modelcheck.hpp"

namespace fvkit {

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Vocabulary formula_vocab(const std::string& text, const std::string& vocab_arg) {
  return vocab_arg.empty() ? infer_vocabulary(text) : vocab_from_json(load_json(vocab_arg));
}

Structure load_structure(const std::string& arg) { return structure_from_json(load_json(arg)); }

// NAME, nlc-sum:<file or JSON with r and S>, or an interpretation file via interp_arg.
SumLikeOp make_op(const std::string& spec, const std::string& interp_arg,
                  const std::string& vocab_arg) {
  if (!interp_arg.empty()) {
    SumLikeOp op;
    op.name = "custom";
    op.interp = interp_from_json(load_json(interp_arg));
    Vocabulary expect = op.interp.target_vocab;
    expect[kMarker] = 1;
    if (op.interp.source_vocab != expect)
      throw InputError("interpretation source must be the target vocabulary plus P");
    return op;
  }
  BuiltinParams params;
  std::string name = spec;
  if (spec.rfind("nlc-sum", 0) == 0) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("nlc-sum needs a label file: nlc-sum:<file>");
    name = "nlc-sum";
    Json j = load_json(spec.substr(colon + 1));
    try {
      params.r = j.at("r").get<int>();
      for (const auto& p : j.at("S")) params.s.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    } catch (const Json::exception& e) {
      throw InputError(std::string("malformed nlc-sum labels: ") + e.what());
    }
  } else if (!vocab_arg.empty()) {
    params.vocab = vocab_from_json(load_json(vocab_arg));
  }
  return builtin(name, params);
}

Json classification_json(const Classification& c) {
  Json j;
  j["sigma_level"] = c.sigma_level;
  j["pi_level"] = c.pi_level;
  j["rank"] = c.rank;
  j["block_uniform_k"] = c.block_uniform_k ? Json(*c.block_uniform_k) : Json(nullptr);
  return j;
}

std::vector<Structure> load_structure_dir(const std::string& dir) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  if (ec) throw InputError("cannot read directory '" + dir + "'");
  std::sort(files.begin(), files.end());
  std::vector<Structure> out;
  for (const auto& f : files) out.push_back(structure_from_json(read_json_file(f)));
  if (out.empty()) throw InputError("no structure files in '" + dir + "'");
  return out;
}

std::vector<Structure> bed_structures(const std::string& dir, const std::string& vocab_arg,
                                      int max_size) {
  if (!dir.empty()) return load_structure_dir(dir);
  if (vocab_arg.empty()) throw InputError("give --structures DIR or --vocab with --max-size");
  return all_structures(vocab_from_json(load_json(vocab_arg)), max_size);
}

struct RandomSpec {
  Mode mode = Mode::Sigma;
  int n = 1, m = 1, fanout = 3;
};

RandomSpec parse_random_spec(const std::string& s) {
  RandomSpec r;
  for (const auto& part : split_list(s)) {
    if (part == "sigma") r.mode = Mode::Sigma;
    else if (part == "pi") r.mode = Mode::Pi;
    else {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw InputError("bad random spec item '" + part + "'");
      const std::string key = part.substr(0, eq);
      int value = 0;
      try {
        value = std::stoi(part.substr(eq + 1));
      } catch (const std::exception&) {
        throw InputError("bad number in random spec item '" + part + "'");
      }
      if (key == "n") r.n = value;
      else if (key == "m") r.m = value;
      else if (key == "fanout") r.fanout = value;
      else throw InputError("unknown random spec key '" + key + "'");
    }
  }
  return r;
}

// One direct-versus-reduced comparison setting.
struct CheckContext {
  bool has_op = false;
  SumLikeOp op;
  Vocabulary tau;         // structure vocabulary
  Vocabulary formula_vocab;
  VarPartition part;
};

Structure composite(const CheckContext& cx, const Structure& a, const Structure& b) {
  return cx.has_op ? apply_sum_like(cx.op, a, b) : annotated_disjoint_union(a, b);
}

ReductionSequence reduce(const CheckContext& cx, const Formula& f, bool simplify) {
  DecomposeOptions opts;
  opts.simplify = simplify;
  return cx.has_op ? decompose_over_op(f, cx.op, cx.part, opts)
                   : decompose(f, cx.formula_vocab, cx.part, opts);
}

struct Mismatch {
  Tuple t1, t2;
  bool direct = false, reduced = false;
};

// Compares on every assignment of the partition; returns the first mismatch.
std::optional<Mismatch> compare_pair(const CheckContext& cx, const Formula& f,
                                     const ReductionSequence& d, const Structure& a,
                                     const Structure& b, std::uint64_t& checks) {
  std::optional<Structure> image;
  try {
    image = composite(cx, a, b);
  } catch (const InputError&) {
    return std::nullopt;  // empty image universe
  }
  const Structure& c = *image;
  std::vector<std::string> ctx = cx.part.left;
  ctx.insert(ctx.end(), cx.part.right.begin(), cx.part.right.end());
  CompiledFormula direct(f, c, ctx);
  const auto l = static_cast<int>(cx.part.left.size());
  const auto r = static_cast<int>(cx.part.right.size());
  for (const auto& ta : all_index_tuples(a.size(), l)) {
    Tuple t1;
    std::vector<int> vals;
    bool inside = true;
    for (int i : ta) {
      t1.push_back(a.universe()[i]);
      std::string id = "L:" + a.universe()[i];
      if (!c.contains(id)) inside = false;
      else vals.push_back(c.index_of(id));
    }
    if (!inside) continue;
    for (const auto& tb : all_index_tuples(b.size(), r)) {
      Tuple t2;
      std::vector<int> v2 = vals;
      bool in2 = true;
      for (int i : tb) {
        t2.push_back(b.universe()[i]);
        std::string id = "R:" + b.universe()[i];
        if (!c.contains(id)) in2 = false;
        else v2.push_back(c.index_of(id));
      }
      if (!in2) continue;
      ++checks;
      const bool x = direct.eval(v2);
      const bool y = eval_reduction(d, a, b, t1, t2);
      if (x != y) return Mismatch{t1, t2, x, y};
    }
  }
  return std::nullopt;
}

Json bundle_json(const CheckContext& cx, const std::string& op_spec, const Formula& f,
                 const Structure& a, const Structure& b, const Mismatch& m) {
  Json j;
  j["formula"] = print_formula(f);
  j["vocabulary"] = vocab_to_json(cx.formula_vocab);
  if (cx.has_op) {
    j["op"] = op_spec;
    j["interp"] = interp_to_json(cx.op.interp);
  } else {
    j["op"] = nullptr;
  }
  j["partition"] = {{"left", cx.part.left}, {"right", cx.part.right}};
  j["left"] = structure_to_json(a);
  j["right"] = structure_to_json(b);
  j["left_tuple"] = m.t1;
  j["right_tuple"] = m.t2;
  j["direct"] = m.direct;
  j["reduced"] = m.reduced;
  return j;
}

int cmd_replay(const std::string& file, bool simplify, std::ostream& out) {
  Json j = load_json(file);
  CheckContext cx;
  try {
    cx.formula_vocab = vocab_from_json(j.at("vocabulary"));
    cx.part.left = j.at("partition").at("left").get<std::vector<std::string>>();
    cx.part.right = j.at("partition").at("right").get<std::vector<std::string>>();
    if (!j.at("op").is_null()) {
      cx.has_op = true;
      cx.op.name = j.at("op").get<std::string>();
      cx.op.interp = interp_from_json(j.at("interp"));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed counterexample bundle: ") + e.what());
  }
  Formula f = parse_formula(j.at("formula").get<std::string>(), cx.formula_vocab);
  Structure a = structure_from_json(j.at("left"));
  Structure b = structure_from_json(j.at("right"));
  cx.tau = a.vocab();
  Tuple t1 = j.at("left_tuple").get<Tuple>(), t2 = j.at("right_tuple").get<Tuple>();
  ReductionSequence d = reduce(cx, f, simplify);
  Structure c = composite(cx, a, b);
  Assignment asg;
  for (std::size_t i = 0; i < t1.size(); ++i) asg[cx.part.left.at(i)] = "L:" + t1[i];
  for (std::size_t i = 0; i < t2.size(); ++i) asg[cx.part.right.at(i)] = "R:" + t2[i];
  const bool direct = eval(c, f, asg);
  const bool reduced = eval_reduction(d, a, b, t1, t2);
  Json res{{"direct", direct}, {"reduced", reduced}, {"mismatch", direct != reduced}};
  out << res.dump() << "\n";
  return direct != reduced ? kExitViolation : kExitOk;
}

struct CheckArgs {
  std::string formula, random, op, interp, vocab, left, right, replay;
  int max_size = 2, trials = 100, samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_limit = 4096;
  bool simplify = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  if (!args.replay.empty()) return cmd_replay(args.replay, args.simplify, out);
  if (args.formula.empty() == args.random.empty())
    throw InputError("give exactly one of --formula and --random");
  CheckContext cx;
  cx.part.left = split_list(args.left);
  cx.part.right = split_list(args.right);
  cx.has_op = !args.op.empty() || !args.interp.empty();
  if (cx.has_op) {
    cx.op = make_op(args.op, args.interp, args.vocab);
    cx.tau = cx.op.vocab();
    cx.formula_vocab = cx.tau;
  } else if (!args.vocab.empty()) {
    cx.formula_vocab = vocab_from_json(load_json(args.vocab));
  } else if (!args.formula.empty()) {
    cx.formula_vocab = infer_vocabulary(args.formula);
  } else {
    cx.formula_vocab = {{"E", 2}};
  }
  if (!cx.has_op) {
    cx.tau = cx.formula_vocab;
    cx.tau.erase(kMarker);
  }
  if (args.max_size < 1) throw InputError("--max-size must be at least 1");

  std::vector<Formula> formulas;
  if (!args.formula.empty()) {
    formulas.push_back(parse_formula(args.formula, cx.formula_vocab));
  } else {
    RandomSpec spec = parse_random_spec(args.random);
    std::vector<std::string> free = cx.part.left;
    free.insert(free.end(), cx.part.right.begin(), cx.part.right.end());
    Vocabulary gen_vocab = cx.tau;
    for (int t = 0; t < args.trials; ++t)
      formulas.push_back(random_formula(spec.mode, spec.n, spec.m, gen_vocab, free, spec.fanout,
                                        args.seed * 1000003ULL + static_cast<std::uint64_t>(t)));
  }

  const auto all = all_structures(cx.tau, args.max_size);
  const bool exhaustive =
      static_cast<std::uint64_t>(all.size()) * all.size() <= args.exhaustive_limit;
  std::uint64_t checks = 0;
  for (std::size_t t = 0; t < formulas.size(); ++t) {
    const Formula& f = formulas[t];
    ReductionSequence d = reduce(cx, f, args.simplify);
    auto try_pair = [&](const Structure& a, const Structure& b) -> bool {
      auto m = compare_pair(cx, f, d, a, b, checks);
      if (!m) return true;
      out << bundle_json(cx, args.op, f, a, b, *m).dump(2) << "\n";
      return false;
    };
    if (exhaustive) {
      for (const auto& a : all)
        for (const auto& b : all)
          if (!try_pair(a, b)) return kExitViolation;
    } else {
      std::mt19937_64 rng(args.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1)));
      for (int s = 0; s < args.samples; ++s) {
        const Structure& a = all[rng() % all.size()];
        const Structure& b = all[rng() % all.size()];
        if (!try_pair(a, b)) return kExitViolation;
      }
    }
  }
  Json summary{{"formulas", formulas.size()},
               {"exhaustive", exhaustive},
               {"checks", checks},
               {"mismatches", 0}};
  out << summary.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Feferman-Vaught decompositions, prefix games and class enumeration", "fvkit"};
  app.require_subcommand(1);
  int code = kExitOk;

  std::string formula, vocab, op, interp, left, right, outfile, assign;
  bool simplify = false, no_memo = false;

  auto* classify_cmd = app.add_subcommand("classify", "Print the level classification as JSON");
  classify_cmd->add_option("--formula", formula)->required();
  classify_cmd->add_option("--vocab", vocab, "Vocabulary JSON text or file");
  classify_cmd->callback([&] {
    Formula f = parse_formula(formula, formula_vocab(formula, vocab));
    out << classification_json(classify(f)).dump() << "\n";
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Build a reduction sequence");
  decompose_cmd->add_option("--formula", formula)->required();
  decompose_cmd->add_option("--vocab", vocab);
  decompose_cmd->add_option("--left", left, "Comma-separated left variables");
  decompose_cmd->add_option("--right", right, "Comma-separated right variables");
  decompose_cmd->add_option("--op", op, "disjoint-union | ordered-sum | join | nlc-sum:<file>");
  decompose_cmd->add_option("--interp", interp, "Interpretation file defining the operation");
  decompose_cmd->add_flag("--simplify", simplify);
  decompose_cmd->add_flag("--no-memo", no_memo);
  decompose_cmd->add_option("--out", outfile);
  decompose_cmd->callback([&] {
    VarPartition part{split_list(left), split_list(right)};
    DecomposeOptions opts;
    opts.simplify = simplify;
    opts.memoize = !no_memo;
    ReductionSequence d;
    if (!op.empty() || !interp.empty()) {
      SumLikeOp sop = make_op(op, interp, vocab);
      d = decompose_over_op(parse_formula(formula, sop.vocab()), sop, part, opts);
    } else {
      Vocabulary v = formula_vocab(formula, vocab);
      d = decompose(parse_formula(formula, v), v, part, opts);
    }
    const std::string text = reduction_to_json(d).dump(2) + "\n";
    if (outfile.empty()) out << text;
    else write_text_file(outfile, text);
  });

  auto* transform_cmd = app.add_subcommand("transform", "Apply an interpretation to a formula");
  transform_cmd->add_option("--formula", formula)->required();
  transform_cmd->add_option("--interp", interp, "Interpretation file");
  transform_cmd->add_option("--op", op, "Built-in operation whose definition to apply");
  transform_cmd->add_option("--vocab", vocab);
  transform_cmd->add_flag("--simplify", simplify);
  transform_cmd->callback([&] {
    Interpretation xi;
    if (!interp.empty()) xi = interp_from_json(load_json(interp));
    else if (!op.empty()) xi = make_op(op, "", vocab).interp;
    else throw InputError("transform needs --interp or --op");
    out << print_formula(transform_formula(xi, parse_formula(formula, xi.target_vocab), simplify))
        << "\n";
  });

  std::vector<std::string> structures;
  auto* eval_cmd = app.add_subcommand("eval", "Model-check a formula");
  eval_cmd->add_option("--structure", structures, "One structure, or two for a binary operation")
      ->required();
  eval_cmd->add_option("--formula", formula)->required();
  eval_cmd->add_option("--op", op);
  eval_cmd->add_option("--interp", interp);
  eval_cmd->add_option("--vocab", vocab);
  eval_cmd->add_option("--assign", assign, "Assignment JSON text or file");
  eval_cmd->callback([&] {
    if (structures.size() > 2) throw InputError("at most two --structure arguments");
    Structure a = load_structure(structures[0]);
    std::optional<Structure> target;
    if (structures.size() == 2) {
      Structure b = load_structure(structures[1]);
      if (!op.empty() || !interp.empty()) target = apply_sum_like(make_op(op, interp, vocab), a, b);
      else target = annotated_disjoint_union(a, b);
    } else if (!interp.empty()) {
      target = apply_interpretation(interp_from_json(load_json(interp)), a);
    } else {
      if (!op.empty()) throw InputError("--op needs two structures");
      target = a;
    }
    Assignment asg = assign.empty() ? Assignment{} : assignment_from_json(load_json(assign));
    out << (eval(*target, parse_formula(formula, target->vocab()), asg) ? "true" : "false") << "\n";
  });

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check-decomposition", "Cross-check decompositions");
  check_cmd->add_option("--formula", check.formula);
  check_cmd->add_option("--random", check.random, "e.g. sigma,n=2,m=3,fanout=3");
  check_cmd->add_option("--op", check.op);
  check_cmd->add_option("--interp", check.interp);
  check_cmd->add_option("--vocab", check.vocab);
  check_cmd->add_option("--left", check.left);
  check_cmd->add_option("--right", check.right);
  check_cmd->add_option("--max-size", check.max_size);
  check_cmd->add_option("--trials", check.trials);
  check_cmd->add_option("--samples", check.samples, "Sampled pairs per formula when not exhaustive");
  check_cmd->add_option("--exhaustive-limit", check.exhaustive_limit);
  check_cmd->add_option("--seed", check.seed);
  check_cmd->add_option("--replay", check.replay, "Re-run a counterexample bundle");
  check_cmd->add_flag("--simplify", check.simplify);
  check_cmd->callback([&] { code = cmd_check(check, out); });

  std::string mode = "prefix", left_file, right_file, left_tuple, right_tuple;
  int n = 0, k = 1;
  auto* game_cmd = app.add_subcommand("game", "Decide a prefix or tree-prefix game");
  game_cmd->add_option("--mode", mode)->check(CLI::IsMember({"prefix", "tree"}));
  game_cmd->add_option("--n", n)->required();
  game_cmd->add_option("--k", k)->required();
  game_cmd->add_option("--left", left_file)->required();
  game_cmd->add_option("--right", right_file)->required();
  game_cmd->add_option("--left-tuple", left_tuple);
  game_cmd->add_option("--right-tuple", right_tuple);
  game_cmd->callback([&] {
    Structure a = load_structure(left_file), b = load_structure(right_file);
    GameConfig cfg{n, k};
    Tuple ta = split_list(left_tuple), tb = split_list(right_tuple);
    Player p = mode == "tree" ? tree_prefix_game_winner(cfg, a, ta, b, tb)
                              : prefix_game_winner(cfg, a, ta, b, tb);
    out << player_name(p) << "\n";
  });

  std::string klass = "sigma", dir, vars;
  int max_size = 2;
  std::size_t max_classes = EnumerationCaps{}.max_classes;
  auto* enum_cmd = app.add_subcommand("enumerate", "List semantic classes over a test bed");
  enum_cmd->add_option("--class", klass)->check(CLI::IsMember({"sigma", "pi"}));
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--k", k);
  enum_cmd->add_option("--structures", dir, "Directory of structure files");
  enum_cmd->add_option("--vocab", vocab, "With --max-size: all small structures");
  enum_cmd->add_option("--max-size", max_size);
  enum_cmd->add_option("--vars", vars);
  enum_cmd->add_option("--max-classes", max_classes);
  enum_cmd->callback([&] {
    TestBed bed(bed_structures(dir, vocab, max_size), split_list(vars));
    EnumerationCaps caps;
    caps.max_classes = max_classes;
    for (const auto& c :
         enumerate_classes(klass == "pi" ? Mode::Pi : Mode::Sigma, n, k, bed, caps))
      out << c.bits.hex() << " " << print_formula(c.representative) << "\n";
  });

  int m = 0, t = 0;
  auto* count_cmd = app.add_subcommand("count-check", "Compare the class count with its bound");
  count_cmd->add_option("--n", n)->required();
  count_cmd->add_option("--m", m)->required();
  count_cmd->add_option("--t", t)->required();
  count_cmd->add_option("--vocab", vocab)->required();
  count_cmd->add_option("--structures", dir);
  count_cmd->add_option("--max-size", max_size);
  count_cmd->callback([&] {
    Vocabulary v = vocab_from_json(load_json(vocab));
    std::vector<std::string> ctx;
    for (int i = 1; i <= t; ++i) ctx.push_back("x" + std::to_string(i));
    TestBed bed(dir.empty() ? all_structures(v, max_size) : load_structure_dir(dir), ctx);
    CountResult r = count_bound_check(n, m, t, v, bed);
    Json j{{"count", r.count}, {"bound", r.bound_text()}, {"ok", r.ok}};
    out << j.dump() << "\n";
    if (!r.ok) code = kExitViolation;
  });

  int width = SeparatorBudget{}.max_width;
  auto* sep_cmd = app.add_subcommand("separate", "Search a separating sentence");
  sep_cmd->add_option("--n", n)->required();
  sep_cmd->add_option("--k", k)->required();
  sep_cmd->add_option("--left", left_file)->required();
  sep_cmd->add_option("--right", right_file)->required();
  sep_cmd->add_option("--max-width", width);
  sep_cmd->callback([&] {
    SeparatorBudget budget;
    budget.max_width = width;
    auto r = find_separator(n, k, load_structure(left_file), load_structure(right_file), budget);
    if (r.sentence) {
      out << print_formula(*r.sentence) << "\n";
    } else if (r.status == SeparatorStatus::NoSeparator) {
      out << "none\n";
    } else {
      out << "none within budget\n";
      code = kExitCap;
    }
  });

  int n_max = 2, m_max = 3, bench_samples = 5, fanout = 3;
  std::uint64_t seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Decomposition size and time as CSV");
  bench_cmd->add_option("--n-max", n_max);
  bench_cmd->add_option("--m-max", m_max);
  bench_cmd->add_option("--samples", bench_samples);
  bench_cmd->add_option("--fanout", fanout);
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--op", op);
  bench_cmd->add_option("--vocab", vocab);
  bench_cmd->callback([&] {
    std::optional<SumLikeOp> sop;
    Vocabulary v{{"E", 2}};
    if (!op.empty()) {
      sop = make_op(op, "", vocab);
      v = sop->vocab();
    } else if (!vocab.empty()) {
      v = vocab_from_json(load_json(vocab));
    }
    out << "n,m,phi_size,decomp_size,millis\n";
    for (int bn = 0; bn <= n_max; ++bn)
      for (int bm = 0; bm <= m_max; ++bm)
        for (int s = 0; s < bench_samples; ++s) {
          Formula f = random_formula(Mode::Sigma, bn, bm, v, {}, fanout,
                                     seed * 7919ULL + static_cast<std::uint64_t>(bn * 1000 + bm * 100 + s));
          auto t0 = std::chrono::steady_clock::now();
          ReductionSequence d = sop ? decompose_over_op(f, *sop, {}) : decompose(f, v, {});
          auto t1 = std::chrono::steady_clock::now();
          double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
          out << bn << "," << bm << "," << f.size() << "," << reduction_stats(d).total_size << ","
              << ms << "\n";
        }
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace fvkit

// Copyright 2026 The octoclif Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// octoclif: emit operator matrices, run verification suites, compute span ranks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octoclif/octoclif.hpp"

namespace {

using namespace octoclif;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string target;
  std::string algebra = "O";
  std::vector<int> indices;
  std::string set = "cliff76";
  std::string format = "json";
  std::string output;
};

struct VerifyArgs {
  std::string suite;
  std::string semantics = "priority";
  std::string right_order = "reading";
};

struct RankArgs {
  std::vector<std::string> words;
  std::string preset;
  std::string algebra = "O";
};

std::string word_label(const Factor& f) {
  return (f.side == Side::Left ? "e" : "1|e") + std::to_string(f.index);
}

// A barred generator has no faithful single matrix, so it is emitted as its
// left-factor and right-factor matrices.
std::vector<std::vector<LabeledMatrix>> gamma_groups(const GammaSet& gs, std::vector<std::string>& names) {
  std::vector<std::vector<LabeledMatrix>> groups;
  for (std::size_t a = 0; a < gs.generators.size(); ++a) {
    const auto& w = gs.generators[a];
    names.push_back("gamma" + std::to_string(a) + " = " + to_string(w));
    std::vector<LabeledMatrix> group;
    for (const auto& f : w.factors()) {
      const auto i = static_cast<std::size_t>(f.index);
      const bool left = f.side == Side::Left;
      group.push_back({word_label(f), gs.algebra, left ? "left" : "right", {f.index},
                       left ? left_matrix(gs.algebra, i) : right_matrix(gs.algebra, i)});
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

GammaSet gamma_set_named(const std::string& s) {
  if (s == "quaternion") return quaternion_gamma_set();
  if (s == "cliff70-left") return cliff70_set(Side::Left);
  if (s == "cliff70-right") return cliff70_set(Side::Right);
  if (s == "cliff76") return cliff76_set();
  throw UsageError("unknown gamma set: " + s);
}

std::string render(const std::vector<LabeledMatrix>& ms, Format fmt, bool as_array,
                   const std::vector<std::string>& headings = {}, const std::vector<std::size_t>& group_sizes = {}) {
  if (fmt == Format::Json) {
    if (!group_sizes.empty()) {
      nlohmann::json out = nlohmann::json::array();
      std::size_t k = 0;
      for (std::size_t g = 0; g < group_sizes.size(); ++g) {
        nlohmann::json mats = nlohmann::json::array();
        for (std::size_t m = 0; m < group_sizes[g]; ++m) mats.push_back(to_json(ms[k++]));
        out.push_back({{"generator", g}, {"word", headings[g]}, {"matrices", std::move(mats)}});
      }
      return out.dump(2) + "\n";
    }
    if (!as_array) return to_json(ms.front()).dump(2) + "\n";
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  std::size_t k = 0;
  auto emit = [&](const LabeledMatrix& m) {
    if (as_array || !group_sizes.empty()) os << "# " << m.label << " (" << m.side << ")\n";
    os << (fmt == Format::Csv ? to_csv(m.matrix) : to_plain(m.matrix));
  };
  if (!group_sizes.empty()) {
    for (std::size_t g = 0; g < group_sizes.size(); ++g) {
      os << (g ? "\n" : "") << "## " << headings[g] << '\n';
      for (std::size_t m = 0; m < group_sizes[g]; ++m) emit(ms[k++]);
    }
  } else {
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) os << '\n';
      emit(ms[i]);
    }
  }
  return os.str();
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : kExitIo;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kExitIo;
  }
  f << text;
  f.close();
  if (!f) {
    std::cerr << "error: write to " << path << " failed\n";
    return kExitIo;
  }
  return 0;
}

int cmd_gen(const GenArgs& args) {
  const Format fmt = parse_format(args.format);
  const Algebra alg = parse_algebra(args.algebra);
  std::vector<LabeledMatrix> ms;
  bool as_array = false;
  std::vector<std::string> headings;
  std::vector<std::size_t> group_sizes;

  auto need = [&](std::size_t n) {
    if (args.indices.size() != n)
      throw UsageError("target '" + args.target + "' needs " + std::to_string(n) + " --index value(s)");
  };
  if (args.target == "left" || args.target == "right") {
    need(1);
    const int i = args.indices.front();
    if (i < 1 || static_cast<std::size_t>(i) >= dimension(alg)) throw UsageError("index out of range");
    const bool left = args.target == "left";
    const auto idx = static_cast<std::size_t>(i);
    ms.push_back({(left ? "e" : "1|e") + std::to_string(i), alg, args.target, {i},
                  left ? left_matrix(alg, idx) : right_matrix(alg, idx)});
  } else if (args.target == "mixed") {
    need(2);
    const int i = args.indices[0], j = args.indices[1];
    const auto lim = static_cast<int>(dimension(alg));
    if (i < 1 || j < 1 || i >= lim || j >= lim) throw UsageError("index out of range");
    ms.push_back({"e" + std::to_string(i) + "|e" + std::to_string(j), alg, "mixed", {i, j},
                  mixed_matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j), alg)});
  } else if (args.target == "appendix") {
    as_array = true;
    for (const auto& [label, m] : appendix_tables()) {
      const bool right = label.starts_with("1|");
      ms.push_back({label, Algebra::O, right ? "right" : "left", {label.back() - '0'}, m});
    }
  } else if (args.target == "gamma") {
    const auto groups = gamma_groups(gamma_set_named(args.set), headings);
    for (const auto& g : groups) {
      group_sizes.push_back(g.size());
      ms.insert(ms.end(), g.begin(), g.end());
    }
  } else {
    throw UsageError("unknown gen target: " + args.target);
  }
  return write_out(render(ms, fmt, as_array, headings, group_sizes), args.output);
}

int cmd_verify(const VerifyArgs& args) {
  if (args.suite != "all") {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end())
      throw UsageError("unknown suite: " + args.suite);
  }
  SuiteOptions opt;
  opt.semantics = parse_semantics(args.semantics);
  if (args.right_order == "reading")
    opt.right_order = RightOrder::Reading;
  else if (args.right_order == "reversed")
    opt.right_order = RightOrder::Reversed;
  else
    throw UsageError("unknown right order: " + args.right_order);

  const RunReport rep = run_verification(args.suite, opt);
  for (const auto& r : rep.results)
    std::cerr << (r.failures() == 0 ? "PASS " : "FAIL ") << r.suite << " (" << r.checks.size() << " checks)\n";
  std::cout << to_json(rep).dump(2) << '\n';
  return rep.pass() ? 0 : kExitFail;
}

struct Preset {
  std::vector<IntMatrix> matrices;
  std::optional<std::size_t> expected;
};

Preset preset_named(const std::string& p) {
  if (p == "quaternion-16") return {matrices_of(quaternion_operator_basis()), 16};
  if (p == "complex-4") {
    constexpr Algebra C = Algebra::C;
    return {{identity_matrix(C), conj_matrix(C), left_matrix(C, 1), conj_twisted(1)}, 4};
  }
  if (p == "spin23") return {spin23_basis().matrices, 10};
  if (p == "so7-left") return {so7_basis(Side::Left).matrices, 21};
  if (p == "so7-right") return {so7_basis(Side::Right).matrices, 21};
  if (p == "so8-left") return {so8_basis(Side::Left).matrices, 28};
  if (p == "so8-right") return {so8_basis(Side::Right).matrices, 28};
  if (p == "octonion-barred") {
    std::vector<IntMatrix> ms;
    for (int i = 1; i <= 7; ++i) {
      ms.push_back(translate({L(i)}));
      ms.push_back(translate({R(i)}));
      for (int j = 1; j <= 7; ++j) ms.push_back(translate(r_op(i, j)));
    }
    return {std::move(ms), std::nullopt};
  }
  throw UsageError("unknown preset: " + p);
}

int cmd_rank(const RankArgs& args) {
  if (args.preset.empty() == args.words.empty()) throw UsageError("rank takes either words or --preset");
  Preset p;
  if (!args.preset.empty()) {
    p = preset_named(args.preset);
  } else {
    const Algebra alg = parse_algebra(args.algebra);
    for (const auto& w : args.words) {
      try {
        p.matrices.push_back(translate(parse_word(w), alg));
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
    }
  }
  std::cout << span_rank(p.matrices) << '\n';
  if (p.expected) std::cout << "expected " << *p.expected << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact octonionic operator matrices and Clifford verification"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Emit operator matrices");
  g->add_option("target", gen.target, "left | right | mixed | appendix | gamma")->required();
  g->add_option("--algebra", gen.algebra, "C, H or O");
  g->add_option("--index", gen.indices, "Imaginary unit index (repeat for mixed)");
  g->add_option("--set", gen.set, "quaternion | cliff70-left | cliff70-right | cliff76");
  g->add_option("--format", gen.format, "json | csv | plain");
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  v->add_option("--suite", verify.suite, "Suite name or 'all'")->required();
  v->add_option("--semantics", verify.semantics, "priority | naive");
  v->add_option("--right-order", verify.right_order, "reading | reversed");

  RankArgs rank;
  auto* r = app.add_subcommand("rank", "Span rank of operator words or a preset");
  r->add_option("words", rank.words, "Words such as L1 R4 L2.L1.R4");
  r->add_option("--preset", rank.preset,
                "quaternion-16 | complex-4 | spin23 | so7-left | so7-right | so8-left | so8-right | octonion-barred");
  r->add_option("--algebra", rank.algebra, "Algebra the words act on (default O)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*v) return cmd_verify(verify);
    if (*r) return cmd_rank(rank);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

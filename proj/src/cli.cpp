#include "baire/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "baire/demo.hpp"
#include "baire/format.hpp"
#include "baire/strips.hpp"
#include "baire/target_io.hpp"
#include "baire/verification.hpp"

namespace baire {

namespace {

struct Options {
  std::string input;
  std::string regime;
  unsigned depth = 10;
  unsigned grid = 1024;
  std::string eps;
  int precision = 12;
  bool signed_variant = false;
  std::string out;
};

struct Input {
  TargetSet set;
  std::optional<std::vector<Rational>> c_order;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Input load(const Options& o, std::istream& in, std::ostream& err) {
  if (o.input == "-") return {parse_target(in), std::nullopt};
  if (std::filesystem::exists(o.input)) return {parse_target_file(o.input), std::nullopt};
  const auto& names = demo_names();
  if (std::find(names.begin(), names.end(), o.input) == names.end()) {
    throw UsageError("no such file or demo: " + o.input);
  }
  if (auto notice = demo_notice(o.input, o.depth)) err << "note: " << *notice << "\n";
  return {demo_set(o.input, o.depth), demo_c_order(o.input, o.depth)};
}

Regime regime_of(const Options& o) {
  if (o.regime.empty()) throw UsageError("--regime is required");
  return *parse_regime(o.regime);
}

double eps_of(const Options& o) {
  if (o.eps.empty()) return 2.0 / o.grid;
  const auto q = parse_rational(o.eps);
  if (!q || sgn(*q) <= 0) throw UsageError("--eps must be a positive number");
  return to_double(*q);
}

// All files appear together or not at all.
void write_files(const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<std::string> temps;
  for (const auto& [path, content] : files) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    std::ofstream os(tmp, std::ios::binary);
    os << content;
    os.close();
    if (!os) {
      std::remove(tmp.c_str());
      for (const auto& t : temps) std::remove(t.c_str());
      throw std::runtime_error("cannot write " + path);
    }
    temps.push_back(tmp);
  }
  for (std::size_t i = 0; i < files.size(); ++i) std::filesystem::rename(temps[i], files[i].first);
}

void emit(const Options& o, const std::string& content, std::ostream& out) {
  if (o.out.empty()) {
    out << content;
  } else {
    write_files({{o.out, content}});
  }
}

SynthFunction build(const Options& o, std::istream& in, std::ostream& err) {
  const Regime r = regime_of(o);
  Input input = load(o, in, err);
  return synthesize(input.set, r, o.depth, o.signed_variant, input.c_order);
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Input input = load(o, in, err);
  if (o.regime.empty()) {
    std::string report;
    for (Regime r : kAllRegimes) report += check_regime(input.set, r).render();
    emit(o, report, out);
    return 0;
  }
  const Verdict v = check_regime(input.set, regime_of(o));
  emit(o, v.render(), out);
  return v.passed ? 0 : 1;
}

int cmd_synth(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const SynthFunction f = build(o, in, err);
  for (const auto& c : f.c_enum) {
    if (c.sign_defaulted) err << "note: no divergence at c_" << c.index << "=" << to_string(c.x) << ", sign +\n";
  }
  std::string csv = "x,y\n";
  for (const auto& p : sample_graph(f, Rational(1, o.grid), o.depth)) {
    csv += format_double(to_double(p.x), o.precision) + "," + format_double(to_double(p.y), o.precision) + "\n";
  }
  emit(o, csv, out);
  return 0;
}

int cmd_strips(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const SynthFunction f = build(o, in, err);
  const EpsilonSchedule sched = epsilon_schedule(f, strip_centers(f, uniform_grid(o.grid)), o.depth);
  const StripFamily fam = build_strips(sched);
  const StripReport report = verify_strips(fam, sched, f);
  if (!o.out.empty()) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& level : fam.levels) {
      files.emplace_back(o.out + ".n" + std::to_string(level.n) + ".csv", strip_csv(level, o.precision));
    }
    write_files(files);
  }
  out << report.render(o.precision);
  return report.passed() ? 0 : 1;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const SynthFunction f = build(o, in, err);
  VerifyParams p;
  p.h = Rational(1, o.grid);
  p.eps = eps_of(o);
  p.y_cap = o.depth / 2.0;
  const VerifyReport report = verify(f, p);
  if (!o.out.empty()) {
    std::string csv = "x,y\n";
    for (const auto& c : report.estimate.candidates) {
      csv += format_double(c.x, o.precision) + "," + format_double(c.y, o.precision) + "\n";
    }
    write_files({{o.out, csv}});
  }
  out << report.render(o.precision) << "\n";
  return report.passed() ? 0 : 1;
}

int cmd_demo(const Options& o, std::ostream& out, std::ostream& err) {
  const TargetSet t = demo_set(o.input, o.depth);
  std::string text;
  if (auto notice = demo_notice(o.input, o.depth)) {
    err << "note: " << *notice << "\n";
    text += "# " + *notice + "\n";
  }
  text += format_target(t);
  emit(o, text, out);
  return 0;
}

void add_common(CLI::App* sub, Options& o, bool with_regime) {
  sub->add_option("input", o.input, "target file, demo name, or - for stdin")->required();
  if (with_regime) {
    sub->add_option("--regime", o.regime, "b2-bounded | b2 | b1-bounded | b1")
        ->check(CLI::IsMember({"b2-bounded", "b2", "b1-bounded", "b1"}));
  }
  sub->add_option("--depth", o.depth, "truncation depth N")->check(CLI::PositiveNumber);
  sub->add_option("--grid", o.grid, "grid resolution M (pitch 1/M)")->check(CLI::PositiveNumber);
  sub->add_option("--eps", o.eps, "cluster resolution (default 2/M)");
  sub->add_option("--precision", o.precision, "significant digits")->check(CLI::Range(1, 17));
  sub->add_flag("--signed", o.signed_variant, "signed values on C");
  sub->add_option("--out", o.out, "output path (strips: file prefix)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide, synthesize and verify accumulation-set witnesses", "baire"};
  app.require_subcommand(1);
  Options o;
  auto* check = app.add_subcommand("check", "run the regime conditions");
  auto* synth = app.add_subcommand("synth", "emit the sampled graph of the witness function");
  auto* strips = app.add_subcommand("strips", "build and verify open-strip certificates");
  auto* verify_cmd = app.add_subcommand("verify", "estimate the accumulation set and compare");
  auto* demo = app.add_subcommand("demo", "print a built-in target set");
  for (auto* sub : {check, synth, strips, verify_cmd}) add_common(sub, o, true);
  add_common(demo, o, false);

  std::vector<const char*> argv{"baire"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(o, in, out, err);
    if (synth->parsed()) return cmd_synth(o, in, out, err);
    if (strips->parsed()) return cmd_strips(o, in, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, in, out, err);
    return cmd_demo(o, out, err);
  } catch (const RegimeUnsatisfied& e) {
    err << e.what() << "\n" << e.verdict.render();
    return 1;
  } catch (const ScheduleInfeasible& e) {
    err << "schedule infeasible: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidPiece& e) {
    err << "invalid piece: " << e.what() << "\n";
    return 2;
  } catch (const UnknownDemo& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace baire

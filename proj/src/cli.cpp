#include "wfa/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "wfa/canonical.hpp"
#include "wfa/continuity.hpp"
#include "wfa/error.hpp"
#include "wfa/io.hpp"
#include "wfa/plot.hpp"
#include "wfa/reductions.hpp"
#include "wfa/stability.hpp"
#include "wfa/synthesis.hpp"

namespace wfa {

namespace {

struct Options {
  std::string wfa;
  std::string other;
  std::string set;
  std::string input;
  std::string word;
  std::string head;
  std::string period;
  std::string out;
  std::string format = "csv";
  std::string kind;
  long depth = 12;
  long resolution = 8;
  bool exact = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int eval() {
    const Wfa a = load_wfa(o_.wfa);
    return emit(eval_word(a, a.parse_word(o_.word)).str() + "\n");
  }

  int omega_eval() {
    const Wfa a = load_wfa(o_.wfa);
    const OmegaValue v = wfa::omega_eval(a, periodic(a));
    return emit((v ? v->str() : std::string("undefined")) + "\n");
  }

  int minimize() { return emit_json(to_json(wfa::minimize(load_wfa(o_.wfa)))); }

  int check() {
    const Wfa a = load_wfa(o_.wfa);
    bool result = false;
    if (o_.kind == "ap") result = is_ap(a);
    if (o_.kind == "minimal") result = is_minimal(a);
    if (o_.kind == "zero") result = is_zero_ap(a);
    if (o_.kind == "constant") result = is_constant_function(a);
    return emit(result ? "true\n" : "false\n");
  }

  int canonicalize() {
    const auto c = to_canonical_form(load_wfa(o_.wfa));
    if (!c) {
      Json j;
      j["canonical"] = nullptr;
      j["reason"] = "no common left 1-eigenvector";
      return emit(j.dump() + "\n");
    }
    return emit_json(to_json(*c));
  }

  int stability() {
    const MatrixSet s = load_set(o_.set);
    const auto v = decide_stability(s, budget());
    emit(to_json(v, s, budget()).dump() + "\n");
    return std::holds_alternative<verdict::Unknown>(v) ? kExitUnknown : kExitOk;
  }

  int rcp() {
    const MatrixSet s = load_set(o_.set);
    const auto v = is_continuous_rcp(s, budget());
    emit(to_json(v, s, budget()).dump() + "\n");
    return std::holds_alternative<verdict::Unknown>(v) ? kExitUnknown : kExitOk;
  }

  int continuity() {
    const Wfa a = load_wfa(o_.wfa);
    const auto v = analyze_omega_continuity(a, budget());
    emit(to_json(v, a, budget()).dump() + "\n");
    return std::holds_alternative<verdict::Unknown>(v) ? kExitUnknown : kExitOk;
  }

  int uniform_continuity() {
    const Wfa a = load_wfa(o_.wfa);
    const auto v = analyze_uniform_continuity(a, budget());
    emit(to_json(v, a, budget()).dump() + "\n");
    return std::holds_alternative<verdict::Unknown>(v) ? kExitUnknown : kExitOk;
  }

  int synthesize() {
    const auto in = synthesis_input_from_json(parse_json(read_file(o_.input)));
    return emit_json(to_json(synthesize_continuous(in)));
  }

  int sample() {
    if (o_.resolution < 0 || o_.resolution > 24) throw PreconditionError("--resolution must be in 0..24");
    if (o_.format != "csv" && o_.format != "svg") throw PreconditionError("--format must be csv or svg");
    const Wfa a = load_wfa(o_.wfa);
    auto samples = wfa::sample(a, static_cast<unsigned>(o_.resolution));
    if (o_.format == "csv") return emit(render_csv(samples, o_.exact));
    // the polyline closes at x = 1 with the left limit there
    if (auto end = endpoint_left_limit(a)) samples.push_back({Rational(1), std::move(end)});
    return emit(render_svg(samples));
  }

  int reduce() {
    const MatrixSet s = load_set(o_.set);
    if (o_.kind == "pair") return emit_json(to_json(reduce_to_pair(s)));
    if (o_.kind == "zero-test") return emit_json(to_json(zero_test_gadgets(s)));
    if (s.size() != 2) throw PreconditionError("gadget families need a set of exactly two matrices");
    if (o_.kind == "ap-gadgets") return emit_json(to_json(stability_to_ap_continuity_gadgets(s[0], s[1])));
    return emit_json(to_json(stability_to_uniform_gadgets(s[0], s[1])));
  }

  int equal() {
    const Wfa a = load_wfa(o_.wfa);
    const Wfa b = load_wfa(o_.other);
    const bool result = equal_ap(a, b);
    const auto is_discontinuous = [&](const Wfa& x) {
      return std::holds_alternative<verdict::NotContinuous>(analyze_omega_continuity(x, budget()));
    };
    if (is_discontinuous(a) && is_discontinuous(b)) {
      err_ << "warning: neither omega-function is certified continuous; the answer assumes one is "
              "everywhere defined\n";
    }
    return emit(result ? "true\n" : "false\n");
  }

  int redistribute() {
    const Wfa a = load_wfa(o_.wfa);
    const auto r = ap_redistribute(a, periodic(a));
    if (!r) throw PreconditionError("redistribution limit does not exist along the anchor word");
    return emit_json(to_json(*r));
  }

 private:
  Wfa load_wfa(const std::string& path) const { return wfa_from_json(parse_json(read_file(path))); }
  MatrixSet load_set(const std::string& path) const {
    return matrix_set_from_json(parse_json(read_file(path)));
  }

  UltimatelyPeriodicWord periodic(const Wfa& a) const {
    const Word period = a.parse_word(o_.period);
    if (period.empty()) throw PreconditionError("--period must be nonempty");
    return UltimatelyPeriodicWord(a.parse_word(o_.head), period);
  }

  std::size_t budget() const {
    if (o_.depth <= 0) throw PreconditionError("--depth must be positive");
    return static_cast<std::size_t>(o_.depth);
  }

  int emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_file(o_.out, text);
    }
    return kExitOk;
  }

  int emit_json(const Json& j) { return emit(j.dump(2) + "\n"); }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Exact analysis of weighted finite automata", "wfatool");
  app.require_subcommand(1, 1);

  const auto add_wfa = [&](CLI::App* c) { c->add_option("--wfa", o.wfa, "automaton JSON file")->required(); };
  const auto add_set = [&](CLI::App* c) { c->add_option("--set", o.set, "matrix set JSON file")->required(); };
  const auto add_depth = [&](CLI::App* c) {
    c->add_option("--depth", o.depth, "product length budget")->capture_default_str();
  };
  const auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "output file (default stdout)"); };
  const auto add_periodic = [&](CLI::App* c) {
    c->add_option("--head", o.head, "finite prefix u of u v^omega");
    c->add_option("--period", o.period, "nonempty period v of u v^omega")->required();
  };

  std::map<CLI::App*, std::function<int(Runner&)>> dispatch;
  const auto sub = [&](const char* name, const char* help, std::function<int(Runner&)> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    dispatch[c] = std::move(fn);
    add_out(c);
    return c;
  };

  auto* c = sub("eval", "word function value", &Runner::eval);
  add_wfa(c);
  c->add_option("--word", o.word, "word (characters, or comma separated letters)");
  c = sub("omega-eval", "omega-function value at u v^omega", &Runner::omega_eval);
  add_wfa(c);
  add_periodic(c);
  c = sub("minimize", "minimal equivalent automaton", &Runner::minimize);
  add_wfa(c);
  c = sub("check", "property check: ap, minimal, zero or constant", &Runner::check);
  c->add_option("kind", o.kind, "ap | minimal | zero | constant")
      ->required()
      ->check(CLI::IsMember({"ap", "minimal", "zero", "constant"}));
  add_wfa(c);
  c = sub("canonicalize", "canonical form with stable blocks", &Runner::canonicalize);
  add_wfa(c);
  c = sub("stability", "matrix product stability", &Runner::stability);
  add_set(c);
  add_depth(c);
  c = sub("rcp", "continuous right-convergent products", &Runner::rcp);
  add_set(c);
  add_depth(c);
  c = sub("continuity", "continuity of the omega-function of an ap automaton", &Runner::continuity);
  add_wfa(c);
  add_depth(c);
  c = sub("uniform-continuity", "continuity of the omega-function and the real function",
          &Runner::uniform_continuity);
  add_wfa(c);
  add_depth(c);
  c = sub("synthesize", "continuous ap automaton from a stable pair", &Runner::synthesize);
  c->add_option("--input", o.input, "JSON with B0, B1, k, b0 and optional initial")->required();
  c = sub("sample", "real function on the dyadic grid", &Runner::sample);
  add_wfa(c);
  c->add_option("--resolution", o.resolution, "grid of 2^m points")->capture_default_str();
  c->add_option("--format", o.format, "csv | svg")->capture_default_str();
  c->add_flag("--exact", o.exact, "rationals as p/q in CSV output");
  c = sub("reduce", "reduction gadgets", &Runner::reduce);
  c->add_option("mode", o.kind, "pair | zero-test | ap-gadgets | uniform-gadgets")
      ->required()
      ->check(CLI::IsMember({"pair", "zero-test", "ap-gadgets", "uniform-gadgets"}));
  add_set(c);
  c = sub("equal", "equality of two ap automata", &Runner::equal);
  add_wfa(c);
  c->add_option("--other", o.other, "second automaton JSON file")->required();
  add_depth(c);
  c = sub("redistribute", "ap automaton with the same prefix behaviour", &Runner::redistribute);
  add_wfa(c);
  add_periodic(c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitError;
  }

  Runner runner(o, out, err);
  try {
    for (auto& [cmd, fn] : dispatch) {
      if (cmd->parsed()) return fn(runner);
    }
    return kExitError;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "error: schema: " << e.what() << "\n";
  } catch (const DimensionError& e) {
    err << "error: dimension: " << e.what() << "\n";
  } catch (const NonconstantImpossible& e) {
    err << "error: nonconstant impossible: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace wfa

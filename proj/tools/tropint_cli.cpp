// tropint: command line front end for the tropical intersection library.

#include "tropint/tropint.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tropint;
using io::json;

namespace {

enum ExitCode { kOk = 0, kMath = 1, kUsage = 2 };

struct Failure {
  int code;
  std::string kind;
  std::string message;
};

bool g_json = false;

int report(const Failure& f) {
  if (g_json) {
    json err = {{"error", {{"kind", f.kind}, {"message", f.message}, {"exit_code", f.code}}}};
    std::cerr << err.dump() << "\n";
  } else {
    std::cerr << "tropint: " << f.message << "\n";
  }
  return f.code;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw io::ParseError("", "cannot write \"" + output + "\"");
  out << text;
}

svg::BoundingBox parse_bbox(const std::string& text) {
  std::vector<Rational> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    try {
      v.push_back(parse_rational(text.substr(pos, next - pos)));
    } catch (const Error& e) {
      throw io::ParseError("--bbox", e.what());
    }
    pos = next + 1;
  }
  if (v.size() != 4) throw io::ParseError("--bbox", "expected x0,y0,x1,y1");
  return {v[0], v[1], v[2], v[3]};
}

std::string describe_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical intersection theory for cycles in R^n"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Report errors as JSON on stderr");
  app.fallthrough();

  std::string output;
  std::string a, b, func, name;
  std::vector<std::string> chain_args;
  std::string bbox = "-5,-5,5,5";

  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Output file (default stdout)"); };

  auto* validate = app.add_subcommand("validate", "Check that a cycle is a valid balanced complex");
  validate->add_option("cycle", a, "Cycle file, - or built-in")->default_val("-");

  auto* divisor = app.add_subcommand("divisor", "Weil divisor of a function on a cycle");
  divisor->add_option("function", func)->required();
  divisor->add_option("cycle", a)->required();
  add_output(divisor);

  auto* chain = app.add_subcommand("chain", "phi_1 ... phi_r . C (phi_r applied first)");
  chain->add_option("args", chain_args, "FUNC... CYCLE")->required()->expected(2, -1);
  add_output(chain);

  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection product of two cycles");
  intersect_cmd->add_option("a", a)->required();
  intersect_cmd->add_option("b", b)->required();
  add_output(intersect_cmd);

  auto* pushforward = app.add_subcommand("pushforward", "Push a cycle forward along an integer linear map");
  pushforward->add_option("map", func)->required();
  pushforward->add_option("cycle", a)->required();
  add_output(pushforward);

  auto* pullback = app.add_subcommand("pullback", "Pull a function back along an integer linear map");
  pullback->add_option("map", func)->required();
  pullback->add_option("function", a)->required();
  add_output(pullback);

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a cycle");
  degree_cmd->add_option("cycle", a, "Cycle file, - or built-in")->default_val("-");

  auto* bezout = app.add_subcommand("bezout", "Compare deg(A.B) with deg A * deg B");
  bezout->add_option("a", a)->required();
  bezout->add_option("b", b)->required();

  auto* example = app.add_subcommand("example", "Write a built-in object");
  example->add_option("name", name)->required();
  add_output(example);

  auto* render = app.add_subcommand("render", "Draw a 1-dimensional cycle in R^2 as SVG");
  render->add_option("cycle", a, "Cycle file, - or built-in")->default_val("-");
  render->add_option("--bbox", bbox, "x0,y0,x1,y1");
  add_output(render);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (g_json) return report({kUsage, "usage", e.what()});
    app.exit(e);
    return kUsage;
  }

  try {
    if (validate->parsed()) {
      WeightedComplex c = io::load(a).complex();
      auto diag = validate_complex(c);
      for (const auto& v : diag.violations) std::cout << "violation: " << v << "\n";
      if (!diag.ok()) return kMath;
      auto bal = balancing_report(c);
      if (!bal.balanced) {
        std::cout << "unbalanced at " << describe(*bal.witness) << ", weighted normal sum "
                  << describe_vector(bal.defect) << "\n";
        return kMath;
      }
      std::cout << "valid balanced " << c.dim() << "-cycle in R^" << c.ambient_dim() << " with " << c.size()
                << " maximal cells\n";
      return kOk;
    }
    if (divisor->parsed()) {
      PLFunction f = io::load(func).function();
      Cycle c = io::load(a).cycle();
      emit(io::serialize(weil_divisor(f, c)), output);
      return kOk;
    }
    if (chain->parsed()) {
      std::vector<PLFunction> fs;
      for (std::size_t i = 0; i + 1 < chain_args.size(); ++i) fs.push_back(io::load(chain_args[i]).function());
      Cycle c = io::load(chain_args.back()).cycle();
      emit(io::serialize(divisor_chain(fs, c)), output);
      return kOk;
    }
    if (intersect_cmd->parsed()) {
      Cycle c = io::load(a).cycle();
      Cycle d = io::load(b).cycle();
      emit(io::serialize(stable_intersect(c, d)), output);
      return kOk;
    }
    if (pushforward->parsed()) {
      IntegerLinearMap f = io::load(func).map();
      Cycle c = io::load(a).cycle();
      emit(io::serialize(push_forward(f, c)), output);
      return kOk;
    }
    if (pullback->parsed()) {
      IntegerLinearMap f = io::load(func).map();
      PLFunction h = io::load(a).function();
      emit(io::serialize(pull_back(f, h)), output);
      return kOk;
    }
    if (degree_cmd->parsed()) {
      std::cout << to_string(degree(io::load(a).cycle())) << "\n";
      return kOk;
    }
    if (bezout->parsed()) {
      auto r = bezout_check(io::load(a).cycle(), io::load(b).cycle());
      std::cout << to_string(r.degree_c) << " " << to_string(r.degree_d) << " " << to_string(r.degree_product) << " "
                << (!r.applicable ? "NOT-APPLICABLE" : r.pass ? "PASS" : "FAIL") << "\n";
      return r.applicable && !r.pass ? kMath : kOk;
    }
    if (example->parsed()) {
      auto doc = io::builtin(name);
      if (!doc) {
        std::string names;
        for (const auto& n : io::builtin_names()) names += " " + n;
        throw io::ParseError("", "unknown example \"" + name + "\"; available:" + names);
      }
      emit(io::serialize(io::to_json(*doc)), output);
      return kOk;
    }
    if (render->parsed()) {
      auto box = parse_bbox(bbox);
      emit(svg::render(io::load(a).complex(), box), output);
      return kOk;
    }
  } catch (const io::ParseError& e) {
    return report({kUsage, "parse", e.what()});
  } catch (const Error& e) {
    return report({kMath, "math", e.what()});
  } catch (const std::exception& e) {
    return report({kUsage, "usage", e.what()});
  }
  return kUsage;
}

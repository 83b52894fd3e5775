// Command line front end: parse words and diagrams, report invariants, run
// the relation/witness suites, and render split-braid-merge pictures.
//
// Exit codes: 0 on success (or a mathematically true answer), 1 on a
// mathematically false answer, 2 on input errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "braidthom/bns.hpp"
#include "braidthom/diagram.hpp"
#include "braidthom/gens.hpp"
#include "braidthom/quotient.hpp"
#include "braidthom/render.hpp"
#include "braidthom/sampling.hpp"

using njson = nlohmann::json;
using namespace braidthom;

namespace {

Diagram element_from_text(const std::string& text) {
  if (text.find('|') != std::string::npos) return Diagram::parse(text);
  return eval_word(parse_word(text));
}

std::string chars_str(const Characters& c) { return c.str(); }

std::string xess_str(const std::vector<Dyadic>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += pts[i].str();
  }
  return s + "}";
}

int cmd_eval(const std::string& word, bool emit, bool do_reduce, bool json) {
  Diagram d = eval_word(parse_word(word));
  if (do_reduce) d = d.reduce();
  if (json) {
    njson out;
    out["class"] = to_string(d.classify());
    out["strands"] = d.strands();
    if (emit) out["diagram"] = d.str();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "class=" << to_string(d.classify()) << "\n";
    if (emit) std::cout << "diagram=" << d.str() << "\n";
  }
  return 0;
}

int cmd_invariants(const std::string& input, bool json) {
  const Diagram d = element_from_text(input);
  const Diagram r = d.reduce();
  const ElementClass cls = d.classify();
  njson out;
  out["class"] = to_string(cls);
  out["size"] = r.strands();
  out["reduced"] = r.str();
  if (cls != ElementClass::vbr) {
    const Characters c = d.characters();
    out["chars"] = {c.phi0, c.phi1, c.omega0, c.omega1};
  }
  if (cls == ElementClass::pure_kernel || cls == ElementClass::identity) {
    njson pts = njson::array();
    for (const auto& p : d.essential_points()) pts.push_back(p.str());
    out["xess"] = pts;
  }
  if (json) {
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "class=" << to_string(cls) << "\n";
  if (cls != ElementClass::vbr) std::cout << "chars=" << chars_str(d.characters()) << "\n";
  if (cls == ElementClass::pure_kernel || cls == ElementClass::identity)
    std::cout << "xess=" << xess_str(d.essential_points()) << "\n";
  std::cout << "size=" << r.strands() << "\n";
  std::cout << "reduced=" << r.str() << "\n";
  return 0;
}

int cmd_equal(const std::string& a, const std::string& b, bool json) {
  const bool eq = equal(element_from_text(a), element_from_text(b));
  if (json)
    std::cout << njson{{"equal", eq}}.dump() << "\n";
  else
    std::cout << (eq ? "equal" : "different") << "\n";
  return eq ? 0 : 1;
}

int cmd_reduce(const std::string& input, bool json) {
  const Diagram r = element_from_text(input).reduce();
  if (json)
    std::cout << njson{{"diagram", r.str()}, {"size", r.strands()}}.dump() << "\n";
  else
    std::cout << r.str() << "\n";
  return 0;
}

int cmd_relations(const std::string& name, int bound, bool json) {
  Presentation p;
  if (name == "vbr")
    p = Presentation::vbr;
  else if (name == "fbr")
    p = Presentation::fbr;
  else
    throw std::invalid_argument("unknown presentation '" + name + "' (use vbr or fbr)");
  const SuiteReport rep = run_relation_suite(p, bound);
  if (json) {
    njson out;
    out["presentation"] = name;
    out["bound"] = bound;
    out["total"] = rep.total;
    njson fams = njson::object();
    for (const auto& [tag, count] : rep.family_counts) fams[tag] = count;
    out["families"] = fams;
    njson fails = njson::array();
    for (const auto& f : rep.failures) fails.push_back(f.str());
    out["failures"] = fails;
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [tag, count] : rep.family_counts)
      std::cout << tag << "\t" << count << " instances\n";
    if (rep.passed()) {
      std::cout << "all " << rep.total << " instances pass\n";
    } else {
      std::cout << rep.failures.size() << " of " << rep.total << " instances fail:\n";
      for (const auto& f : rep.failures) std::cout << "  " << f.str() << "\n";
    }
  }
  return rep.passed() ? 0 : 1;
}

int cmd_xess(const std::string& input, bool json) {
  const Diagram d = element_from_text(input);
  const auto pts = d.essential_points();
  if (json) {
    njson arr = njson::array();
    for (const auto& p : pts) arr.push_back(p.str());
    std::cout << njson{{"xess", arr}}.dump() << "\n";
  } else {
    std::cout << xess_str(pts) << "\n";
  }
  return 0;
}

int cmd_loose(const std::string& braid_text, int m, bool json) {
  const BraidWord b = BraidWord::parse(braid_text);
  const bool loose = b.is_m_loose(m);
  if (json)
    std::cout << njson{{"m", m}, {"loose", loose}}.dump() << "\n";
  else
    std::cout << (loose ? "yes" : "no") << "\n";
  return loose ? 0 : 1;
}

int cmd_quotient(const std::string& input, bool json) {
  const AbelianizedDiagram a = quotient_map(element_from_text(input));
  if (json)
    std::cout << njson{{"top", a.top.str()},
                       {"vector", a.vector.str()},
                       {"bottom", a.bottom.str()},
                       {"identity", a.is_identity()}}
                     .dump()
              << "\n";
  else
    std::cout << a.str() << "\n";
  return 0;
}

int cmd_bns(int bound, const std::string& chi_text, const std::string& input, bool json) {
  if (!chi_text.empty()) {
    const Character chi = Character::parse(chi_text);
    const Diagram d = element_from_text(input);
    const Rational v = evaluate(chi, d);
    if (json)
      std::cout << njson{{"value", v.str()}, {"survives", !v.is_zero()}}.dump() << "\n";
    else
      std::cout << "value=" << v.str() << " (" << (v.is_zero() ? "dies" : "survives") << ")\n";
    return 0;
  }
  Rng rng = Rng::from_env();
  const BuiltinReport rep = builtin_witnesses(bound, rng);
  if (json) {
    njson cases = njson::array();
    for (const auto& c : rep.cases)
      cases.push_back({{"label", c.label},
                       {"j", c.j_size},
                       {"i", c.i_size},
                       {"dead", c.dead},
                       {"undominated", c.undominated},
                       {"connected", c.connected},
                       {"passed", c.passed()}});
    njson details = njson::array();
    for (const auto& [name, ok] : rep.details) details.push_back({{"check", name}, {"ok", ok}});
    std::cout << njson{{"bound", rep.bound},
                       {"cases", cases},
                       {"details", details},
                       {"passed", rep.passed()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "finite witness checks, truncation bound " << rep.bound << "\n";
    for (const auto& c : rep.cases) std::cout << "  " << c.summary() << "\n";
    for (const auto& [name, ok] : rep.details)
      std::cout << "  " << (ok ? "ok  " : "FAIL") << " " << name << "\n";
    std::cout << (rep.passed() ? "all checks pass" : "CHECKS FAILED") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_render(const std::string& input, const std::string& path) {
  const Diagram d = element_from_text(input);
  const std::string svg = render_svg(d);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << svg;
  if (!out.good()) throw std::invalid_argument("write failed for '" + path + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with braided paired tree diagrams"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit structured output");
  app.fallthrough();

  std::function<int()> run;

  {
    auto* c = app.add_subcommand("eval", "evaluate a generator word");
    auto word = std::make_shared<std::string>();
    auto emit = std::make_shared<bool>(false);
    auto red = std::make_shared<bool>(false);
    c->add_option("word", *word, "generator word, e.g. \"x0 b1,2^-1\"");
    c->add_flag("--emit-diagram", *emit, "print the diagram in text form");
    c->add_flag("--reduce", *red, "fully reduce before printing");
    c->callback([&, word, emit, red] { run = [&, word, emit, red] {
      return cmd_eval(*word, *emit, *red, json); }; });
  }
  {
    auto* c = app.add_subcommand("invariants", "classify and report characters and essential points");
    auto input = std::make_shared<std::string>();
    c->add_option("input", *input, "generator word or top|braid|bottom diagram");
    c->callback([&, input] { run = [&, input] { return cmd_invariants(*input, json); }; });
  }
  {
    auto* c = app.add_subcommand("equal", "decide equality of two elements");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a, "first element")->required();
    c->add_option("b", *b, "second element")->required();
    c->callback([&, a, b] { run = [&, a, b] { return cmd_equal(*a, *b, json); }; });
  }
  {
    auto* c = app.add_subcommand("reduce", "fully reduce a diagram");
    auto input = std::make_shared<std::string>();
    c->add_option("input", *input, "generator word or diagram");
    c->callback([&, input] { run = [&, input] { return cmd_reduce(*input, json); }; });
  }
  {
    auto* c = app.add_subcommand("relations", "check a presentation's relations up to a bound");
    auto name = std::make_shared<std::string>();
    auto bound = std::make_shared<int>(6);
    c->add_option("presentation", *name, "vbr or fbr")->required();
    c->add_option("bound", *bound, "index bound (>= 3)");
    c->callback([&, name, bound] { run = [&, name, bound] {
      return cmd_relations(*name, *bound, json); }; });
  }
  {
    auto* c = app.add_subcommand("xess", "essential subdivision points of a kernel element");
    auto input = std::make_shared<std::string>();
    c->add_option("input", *input, "generator word or diagram");
    c->callback([&, input] { run = [&, input] { return cmd_xess(*input, json); }; });
  }
  {
    auto* c = app.add_subcommand("loose", "test whether a pure braid is m-loose");
    auto braid = std::make_shared<std::string>();
    auto m = std::make_shared<int>();
    c->add_option("braid", *braid, "braid word, e.g. B3:1,-2,1,-2,1,-2")->required();
    c->add_option("m", *m, "number of strands kept")->required();
    c->callback([&, braid, m] { run = [&, braid, m] { return cmd_loose(*braid, *m, json); }; });
  }
  {
    auto* c = app.add_subcommand("quotient", "image in the abelianized-braid quotient");
    auto input = std::make_shared<std::string>();
    c->add_option("input", *input, "generator word or diagram");
    c->callback([&, input] { run = [&, input] { return cmd_quotient(*input, json); }; });
  }
  {
    auto* c = app.add_subcommand("bns", "run the finite witness suites, or evaluate a character");
    auto bound = std::make_shared<int>(6);
    auto chi = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    c->add_option("--bound", *bound, "truncation bound (default 6)");
    c->add_option("--char", *chi, "character a,b,c,d to evaluate");
    c->add_option("input", *input, "element to evaluate the character on");
    c->callback([&, bound, chi, input] { run = [&, bound, chi, input] {
      return cmd_bns(*bound, *chi, *input, json); }; });
  }
  {
    auto* c = app.add_subcommand("render", "render a diagram to SVG");
    auto input = std::make_shared<std::string>();
    auto path = std::make_shared<std::string>();
    c->add_option("input", *input, "generator word or diagram");
    c->add_option("-o,--output", *path, "output SVG path")->required();
    c->callback([&, input, path] { run = [&, input, path] { return cmd_render(*input, *path); }; });
  }

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return run ? run() : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

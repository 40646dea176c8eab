#include "magnus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "magnus/json.hpp"
#include "magnus/magnus.hpp"

namespace magnus::cli {

namespace {

using nlohmann::json;
namespace mj = magnus::json;

struct Config {
  std::vector<std::string> inputs;
  std::string output;
  int n = 0;
  int degree = 0;
  std::string ring = "int";
  unsigned long p = 0;
  int prec = 0;
  std::string order;
  std::string word;
  std::string t;
  std::string pm;
  int m = 0;
  int nu = 0;
  int max_len = 0;
  bool enumerate = false;
  bool as_json = false;
  bool standard = false;
  std::vector<std::string> ks;
};

// Result of a subcommand: text for stdout plus an exit code.
struct Outcome {
  std::string text;
  int code = kOk;
};

class Runner {
 public:
  Runner(Config& cfg, std::istream& in) : cfg_(cfg), in_(in) {}

  std::string read_input(std::size_t i) const {
    if (i >= cfg_.inputs.size()) throw ParseError("missing --in argument");
    const std::string& path = cfg_.inputs[i];
    std::ostringstream buf;
    if (path == "-") {
      buf << in_.rdbuf();
    } else {
      std::ifstream f(path);
      if (!f) throw ParseError("cannot open " + path);
      buf << f.rdbuf();
    }
    return buf.str();
  }

  json read_json(std::size_t i) const {
    try {
      return json::parse(read_input(i));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

  Series read_series(std::size_t i) const { return mj::series_from_json(read_json(i)); }

  RingTag ring() const {
    if (cfg_.ring == "int") return RingTag::integers();
    if (cfg_.ring == "rat") return RingTag::rationals();
    if (cfg_.ring == "padic") {
      if (cfg_.p == 0 || cfg_.prec == 0) throw ParseError("--ring padic needs --p and --prec");
      return RingTag::padics(cfg_.p, cfg_.prec);
    }
    return mj::parse_ring(cfg_.ring);
  }

  SeriesContext context() const {
    if (cfg_.n < 1) throw ParseError("--n is required");
    if (cfg_.degree < 1) throw ParseError("--degree is required");
    return SeriesContext(cfg_.n, cfg_.degree, ring());
  }

  LyndonOrder order(int n) const {
    if (cfg_.order.empty()) return LyndonOrder::graded();
    if (cfg_.order == "graded" || cfg_.order == "lex") return mj::order_from_json(cfg_.order, n);
    std::ifstream f(cfg_.order);
    if (!f) throw ParseError("order must be graded, lex or a ranking file; cannot open " + cfg_.order);
    try {
      return mj::order_from_json(json::parse(f), n);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid order file: ") + e.what());
    }
  }

  // n for word-level commands: --n, or the largest letter used.
  int alphabet_for(const std::string& text) const {
    if (cfg_.n > 0) return cfg_.n;
    int n = 1;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        n = std::max(n, std::stoi(tok));
      } else {
        for (char c : tok) n = std::max(n, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
      }
    }
    return n;
  }

  OpenSubgroupSpec subgroup() const {
    if (cfg_.nu < 1) throw ParseError("--nu is required");
    unsigned long p = cfg_.p;
    int m = cfg_.m;
    if (!cfg_.pm.empty()) {
      auto [pp, mm] = parse_prime_power(cfg_.pm);
      if ((p && p != pp) || (m && m != mm)) throw ParseError("--pm disagrees with --p/--m");
      p = pp;
      m = mm;
    }
    if (p == 0 || m == 0) throw ParseError("subgroup needs --pm or both --p and --m");
    return OpenSubgroupSpec(cfg_.nu, p, m);
  }

  static std::pair<unsigned long, int> parse_prime_power(const std::string& text) {
    const auto caret = text.find('^');
    try {
      if (caret != std::string::npos) return {std::stoul(text.substr(0, caret)), std::stoi(text.substr(caret + 1))};
      unsigned long v = std::stoul(text);
      if (v < 2) throw ParseError("--pm must be a prime power");
      unsigned long p = 2;
      while (v % p != 0) ++p;
      int m = 0;
      while (v % p == 0) {
        v /= p;
        ++m;
      }
      if (v != 1) throw ParseError("--pm " + text + " is not a prime power");
      return {p, m};
    } catch (const std::logic_error&) {
      throw ParseError("bad --pm value '" + text + "'");
    }
  }

  static std::string dump(const json& j) { return j.dump(2) + "\n"; }

  // ---- lyndon ----

  Outcome lyndon_list() const {
    if (cfg_.n < 1 || cfg_.max_len < 1) throw ParseError("lyndon list needs --n and --max-len");
    const auto words = lyndon_words(cfg_.n, cfg_.max_len, order(cfg_.n));
    if (cfg_.as_json) {
      json a = json::array();
      for (const Word& w : words) a.push_back(mj::to_json(w));
      return {dump(a)};
    }
    std::string s;
    for (const Word& w : words) s += (s.empty() ? "" : ", ") + w.to_string();
    return {s + "\n"};
  }

  Outcome lyndon_factor() const {
    const Word w = Word::parse(cfg_.word, alphabet_for(cfg_.word));
    const auto [v, s] = standard_factorization(w);
    if (cfg_.as_json) return {dump(json::array({mj::to_json(v), mj::to_json(s)}))};
    return {"(" + v.to_string() + ", " + s.to_string() + ")\n"};
  }

  Outcome lyndon_paren() const {
    const Word w = Word::parse(cfg_.word, alphabet_for(cfg_.word));
    return {parenthesize(w).to_string() + "\n"};
  }

  // ---- series ----

  Outcome series_embed() const {
    const SeriesContext ctx = context();
    return {dump(mj::to_json(magnus_embed(GroupWord::parse(cfg_.word, ctx.n), ctx)))};
  }

  Outcome series_mul() const {
    Series g = read_series(0);
    for (std::size_t i = 1; i < cfg_.inputs.size(); ++i) g = g * read_series(i);
    return {dump(mj::to_json(g))};
  }

  Outcome series_unary(const std::string& op) const {
    const Series g = read_series(0);
    if (op == "inv") return {dump(mj::to_json(inverse(g)))};
    if (op == "exp") return {dump(mj::to_json(exp(g)))};
    if (op == "ln") return {dump(mj::to_json(ln(g)))};
    if (cfg_.t.empty()) throw ParseError("series pow needs --t");
    return {dump(mj::to_json(power(g, mj::parse_coefficient(cfg_.t, g.ring()))))};
  }

  // ---- check ----

  Outcome check(const std::string& what) const {
    const Series g = read_series(0);
    json report{{"property", what}};
    bool holds = false;
    if (what == "grouplike") {
      const auto kind = cfg_.standard ? CoproductKind::Standard : CoproductKind::Twisted;
      report["coproduct"] = cfg_.standard ? "standard" : "twisted";
      if (!g.constant_term().is_one()) {
        report["reason"] = "constant term is not 1";
      } else if (auto v = find_grouplike_violation(g, kind)) {
        report["violation"] = mj::to_json(*v);
      } else {
        holds = true;
      }
    } else if (what == "primitive") {
      if (!g.constant_term().is_zero()) {
        report["reason"] = "constant term is not 0";
      } else {
        holds = is_primitive(g);
      }
    } else {
      holds = is_integral(g);
      if (!holds) {
        for (const auto& [w, c] : g.terms()) {
          if (!c.is_integral()) {
            report["violation"] = {{"word", mj::to_json(w)}, {"coeff", mj::to_json(c)}};
            break;
          }
        }
      }
    }
    report["holds"] = holds;
    return {dump(report), holds ? kOk : kFails};
  }

  // ---- malcev ----

  Outcome malcev_decompose_cmd() const {
    const Series g = read_series(0);
    if (!is_in_group(g)) {
      json report{{"error", "input is not grouplike"}};
      if (g.constant_term().is_one()) {
        report["violation"] = mj::to_json(*find_grouplike_violation(g, CoproductKind::Twisted));
      }
      return {dump(report), kFails};
    }
    return {dump(mj::to_json(malcev_decompose(g, order(g.n()), false), g.context()))};
  }

  Outcome malcev_compose_cmd() const {
    auto [t, ctx] = mj::malcev_from_json(read_json(0));
    if (!cfg_.order.empty()) t.order = order(ctx.n);
    return {dump(mj::to_json(malcev_compose(t, ctx)))};
  }

  Outcome malcev_reconstruct_cmd() const {
    const json doc = read_json(0);
    SeriesContext ctx;
    if (doc.is_object() && doc.contains("n")) {
      ctx = SeriesContext(doc.at("n").get<int>(), doc.at("max_degree").get<int>(),
                          mj::parse_ring(doc.at("ring").get<std::string>()));
    } else {
      ctx = context();
    }
    const auto a = mj::coefficients_from_json(doc, ctx);
    const auto [g, t] = reconstruct_from_lyndon_coeffs(a, order(ctx.n), ctx);
    return {dump({{"series", mj::to_json(g)}, {"coordinates", mj::to_json(t, ctx)}})};
  }

  // ---- padic ----

  Outcome padic_member() const {
    const bool member = in_open_subgroup(read_series(0), subgroup());
    return {member ? "true\n" : "false\n", member ? kOk : kFails};
  }

  Outcome padic_order() const { return {order_mod_subgroup(read_series(0), subgroup()).get_str() + "\n"}; }

  Outcome padic_coset() const {
    const OpenSubgroupSpec spec = subgroup();
    auto row = [](const std::map<Word, Integer, GradedLess>& coords) {
      json r = json::array();
      for (const auto& [L, v] : coords) r.push_back({{"word", mj::to_json(L)}, {"t", v.get_str()}});
      return r;
    };
    auto text_row = [](const std::map<Word, Integer, GradedLess>& coords) {
      std::string s;
      for (const auto& [L, v] : coords) s += (s.empty() ? "" : "  ") + L.to_string() + "=" + v.get_str();
      return s;
    };
    if (!cfg_.enumerate) {
      const auto coords = coset_coordinates(read_series(0), spec);
      if (cfg_.as_json) return {dump(row(coords))};
      return {text_row(coords) + "\n"};
    }
    if (cfg_.n < 1) throw ParseError("--enumerate needs --n");
    const auto classes = enumerate_coordinate_classes(cfg_.n, spec);
    const std::size_t index = quotient_order(cfg_.n, spec);
    const Integer expected = prime_power(spec.p, static_cast<unsigned long>(spec.m) * sigma(cfg_.n, spec.nu));
    if (cfg_.as_json) {
      json rows = json::array();
      for (const auto& c : classes) rows.push_back(row(c));
      return {dump({{"coordinate_classes", classes.size()},
                    {"classes", rows},
                    {"quotient_order", index},
                    {"p_m_sigma", expected.get_str()}})};
    }
    std::ostringstream os;
    os << classes.size() << " distinct coordinate tuples\n";
    for (const auto& c : classes) os << "  " << text_row(c) << "\n";
    os << "p^(m*sigma(nu)) = " << expected.get_str() << "\n";
    os << "quotient order by coefficient closure = " << index << "\n";
    return {os.str()};
  }

  Outcome padic_converge() const {
    const SeriesContext ctx = context();
    if (ctx.ring.kind() != RingTag::Kind::PAdic) throw PreconditionError("padic converge needs --ring padic");
    if (cfg_.t.empty()) throw ParseError("--t is required");
    const Word L = Word::parse(cfg_.word, ctx.n);
    const Coefficient t = mj::parse_coefficient(cfg_.t, ctx.ring);
    std::vector<Integer> ks;
    for (const auto& k : cfg_.ks) {
      try {
        ks.emplace_back(k);
      } catch (const std::invalid_argument&) {
        throw ParseError("bad integer '" + k + "'");
      }
    }
    const auto report = integer_power_limit(L, t, ks, ctx);
    if (cfg_.as_json) {
      json a = json::array();
      for (std::size_t i = 0; i < report.size(); ++i) {
        a.push_back({{"i", i + 1},
                     {"k", report[i].k.get_str()},
                     {"precision", report[i].precision ? json(*report[i].precision) : json("exact")}});
      }
      return {dump(a)};
    }
    std::ostringstream os;
    os << std::setw(4) << "i" << std::setw(14) << "k_i" << std::setw(11) << "precision" << "\n";
    for (std::size_t i = 0; i < report.size(); ++i) {
      os << std::setw(4) << i + 1 << std::setw(14) << report[i].k.get_str() << std::setw(11)
         << (report[i].precision ? std::to_string(*report[i].precision) : std::string("exact")) << "\n";
    }
    return {os.str()};
  }

 private:
  Config& cfg_;
  std::istream& in_;
};

void add_io(CLI::App* app, Config& cfg) {
  app->add_option("--in", cfg.inputs, "input JSON file ('-' for stdin); repeatable");
  app->add_option("--out", cfg.output, "write the result here instead of stdout");
}

void add_context(CLI::App* app, Config& cfg) {
  app->add_option("--n", cfg.n, "alphabet size");
  app->add_option("--degree", cfg.degree, "truncation degree N");
  app->add_option("--ring", cfg.ring, "int | rat | padic");
  app->add_option("--p", cfg.p, "prime for --ring padic");
  app->add_option("--prec", cfg.prec, "p-adic precision");
}

void add_subgroup(CLI::App* app, Config& cfg) {
  app->add_option("--nu", cfg.nu, "degree cutoff");
  app->add_option("--pm", cfg.pm, "prime power p^m, e.g. 4 or 2^2");
  app->add_option("--p", cfg.p, "prime");
  app->add_option("--m", cfg.m, "exponent m");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  Runner runner(cfg, in);
  CLI::App app{"Free group completions in truncated noncommutative series", "magnus"};
  app.require_subcommand(1);
  std::function<Outcome()> action;

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words")->require_subcommand(1);
  {
    auto* list = lyndon->add_subcommand("list", "enumerate Lyndon words");
    list->add_option("--n", cfg.n, "alphabet size")->required();
    list->add_option("--max-len", cfg.max_len, "maximal length")->required();
    list->add_option("--order", cfg.order, "graded | lex | ranking file");
    list->add_flag("--json", cfg.as_json);
    list->callback([&] { action = [&] { return runner.lyndon_list(); }; });
    for (const char* name : {"factor", "paren"}) {
      auto* sub = lyndon->add_subcommand(name, name == std::string("factor") ? "standard factorization" : "parenthesization");
      sub->add_option("word", cfg.word, "Lyndon word, e.g. aab or \"1 1 2\"")->required();
      sub->add_option("--n", cfg.n, "alphabet size");
      sub->add_flag("--json", cfg.as_json);
      const std::string which = name;
      sub->callback([&, which] {
        action = [&, which] { return which == "factor" ? runner.lyndon_factor() : runner.lyndon_paren(); };
      });
    }
  }

  auto* series = app.add_subcommand("series", "series arithmetic")->require_subcommand(1);
  {
    auto* embed = series->add_subcommand("embed", "Magnus image of a group word");
    embed->add_option("--word", cfg.word, "\"1 2 -1\" or \"a b A\"")->required();
    add_context(embed, cfg);
    embed->add_option("--out", cfg.output);
    embed->callback([&] { action = [&] { return runner.series_embed(); }; });
    auto* mul = series->add_subcommand("mul", "product of the inputs");
    add_io(mul, cfg);
    mul->callback([&] { action = [&] { return runner.series_mul(); }; });
    for (const char* name : {"inv", "exp", "ln", "pow"}) {
      auto* sub = series->add_subcommand(name);
      add_io(sub, cfg);
      if (std::string(name) == "pow") sub->add_option("--t", cfg.t, "exponent, e.g. 1/2");
      const std::string op = name;
      sub->callback([&, op] { action = [&, op] { return runner.series_unary(op); }; });
    }
  }

  auto* check = app.add_subcommand("check", "membership tests; exit 1 when the property fails")->require_subcommand(1);
  for (const char* name : {"grouplike", "primitive", "integral"}) {
    auto* sub = check->add_subcommand(name);
    add_io(sub, cfg);
    if (std::string(name) == "grouplike") sub->add_flag("--standard", cfg.standard, "use the standard coproduct");
    const std::string what = name;
    sub->callback([&, what] { action = [&, what] { return runner.check(what); }; });
  }

  auto* malcev = app.add_subcommand("malcev", "Malcev coordinates")->require_subcommand(1);
  {
    auto* dec = malcev->add_subcommand("decompose");
    add_io(dec, cfg);
    dec->add_option("--order", cfg.order, "graded | lex | ranking file");
    dec->callback([&] { action = [&] { return runner.malcev_decompose_cmd(); }; });
    auto* comp = malcev->add_subcommand("compose");
    add_io(comp, cfg);
    comp->add_option("--order", cfg.order, "override the order stored in the input");
    comp->callback([&] { action = [&] { return runner.malcev_compose_cmd(); }; });
    auto* rec = malcev->add_subcommand("reconstruct", "grouplike series with prescribed Lyndon coefficients");
    add_io(rec, cfg);
    add_context(rec, cfg);
    rec->add_option("--order", cfg.order, "graded | lex | ranking file");
    rec->callback([&] { action = [&] { return runner.malcev_reconstruct_cmd(); }; });
  }

  auto* padic = app.add_subcommand("padic", "open subgroups U(nu, p^m) and convergence")->require_subcommand(1);
  {
    auto* member = padic->add_subcommand("member");
    add_io(member, cfg);
    add_subgroup(member, cfg);
    member->callback([&] { action = [&] { return runner.padic_member(); }; });
    auto* ord = padic->add_subcommand("order");
    add_io(ord, cfg);
    add_subgroup(ord, cfg);
    ord->callback([&] { action = [&] { return runner.padic_order(); }; });
    auto* coset = padic->add_subcommand("coset");
    add_io(coset, cfg);
    add_subgroup(coset, cfg);
    coset->add_option("--n", cfg.n, "alphabet size (with --enumerate)");
    coset->add_flag("--enumerate", cfg.enumerate, "enumerate all cosets reachable from the generators");
    coset->add_flag("--json", cfg.as_json);
    coset->callback([&] { action = [&] { return runner.padic_coset(); }; });
    auto* conv = padic->add_subcommand("converge", "Xi_L^{k_i} against Xi_L^t");
    conv->add_option("--word", cfg.word, "Lyndon word L")->required();
    add_context(conv, cfg);
    conv->add_option("--t", cfg.t, "p-adic exponent as a rational")->required();
    conv->add_option("--k", cfg.ks, "integer approximations k_1, k_2, ... (repeatable)")->required();
    conv->add_option("--out", cfg.output);
    conv->add_flag("--json", cfg.as_json);
    conv->callback([&] { action = [&] { return runner.padic_converge(); }; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    const Outcome result = action();
    if (cfg.output.empty()) {
      out << result.text;
    } else {
      std::ofstream f(cfg.output);
      if (!f) throw ParseError("cannot write " + cfg.output);
      f << result.text;
    }
    return result.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
}

}  // namespace magnus::cli

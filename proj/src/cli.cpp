#include "lucasforge/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lucasforge/fib.hpp"
#include "lucasforge/identities.hpp"
#include "lucasforge/lucas.hpp"
#include "lucasforge/report.hpp"

namespace lucasforge {

namespace {

long parse_long(const std::string& text) {
  try {
    std::size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size()) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error("bad integer '" + text + "'");
  }
}

// "a..b" inclusive, or a bare integer "a" meaning a..a.
AxisRange parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    long v = parse_long(text);
    return {v, v};
  }
  return {parse_long(text.substr(0, pos)), parse_long(text.substr(pos + 2))};
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item));
  return out;
}

int default_lucas_guard() {
  if (const char* env = std::getenv("LUCASFORGE_MAX_INDEX")) {
    try {
      long v = parse_long(env);
      if (v > 0) return static_cast<int>(v);
    } catch (const Error&) {
      // ignore malformed environment; the built-in default applies
    }
  }
  return kLucasDefaultMaxIndex;
}

// F_k F_2k ... F_nk, the integer specialization of {n:k}!.
BigInt kdiv_fib_factorial(const FibCache& f, long n, long k) {
  BigInt p = 1;
  for (long i = 1; i <= n; ++i) p *= f.fib(i * k);
  return p;
}

struct CommonOpts {
  std::string format = "text";
  int max_index = default_lucas_guard();
  int jobs = 1;
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_jobs = false) {
  sub->add_option("--format", opts.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--max-index", opts.max_index,
                  "Lucas cache guard (default from LUCASFORGE_MAX_INDEX or 500)");
  if (with_jobs)
    sub->add_option("--jobs,-j", opts.jobs, "Evaluate suite points concurrently")
        ->check(CLI::Range(1, 256));
}

int emit_suite(std::ostream& out, std::ostream& err, const SuiteReport& report,
               OutputFormat format) {
  std::string summary = "passed " + std::to_string(report.passed) + " failed " +
                        std::to_string(report.failed) + " total " +
                        std::to_string(report.passed + report.failed);
  emit_records(out, to_records(report), format, summary);
  for (const auto& [family, seconds] : report.family_seconds) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "# " << family << " " << seconds << "s\n";
    err << line.str();
  }
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lucasforge: exact Lucas/Fibonacci Catalan families and identity verification"};
  app.require_subcommand(1);

  std::function<int()> action;

  // --- fib ---
  struct {
    long n = 0;
    CommonOpts common;
  } fib_opts;
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci number F_n");
  fib_cmd->add_option("n", fib_opts.n, "index")->required();
  add_common(fib_cmd, fib_opts.common);
  fib_cmd->callback([&] {
    action = [&]() -> int {
      FibCache f;
      Record rec{"fib", {{"n", fib_opts.n}}, to_string(f.fib(fib_opts.n)), {}, {}, {}};
      emit_value(out, rec, parse_format(fib_opts.common.format));
      return 0;
    };
  });

  // --- lucas poly|factorial|atom ---
  struct {
    long n = 0;
    long k = 1;
    CommonOpts common;
  } lucas_opts;
  auto* lucas_cmd = app.add_subcommand("lucas", "Lucas polynomials, factorials and atoms");
  lucas_cmd->require_subcommand(1);
  auto* lucas_poly = lucas_cmd->add_subcommand("poly", "Lucas polynomial {n}");
  lucas_poly->add_option("n", lucas_opts.n, "index")->required();
  add_common(lucas_poly, lucas_opts.common);
  auto* lucas_fact = lucas_cmd->add_subcommand("factorial", "Lucas factorial {n}! or {n:k}!");
  lucas_fact->add_option("n", lucas_opts.n, "index")->required();
  auto* lucas_fact_k = lucas_fact->add_option("-k", lucas_opts.k, "divisibility parameter");
  add_common(lucas_fact, lucas_opts.common);
  auto* lucas_atom = lucas_cmd->add_subcommand("atom", "Lucas atom P_d");
  lucas_atom->add_option("d", lucas_opts.n, "index")->required();
  add_common(lucas_atom, lucas_opts.common);
  lucas_cmd->callback([&] {
    action = [&]() -> int {
      LucasCache l(lucas_opts.common.max_index);
      Record rec;
      if (*lucas_poly) {
        rec = {"lucas-poly", {{"n", lucas_opts.n}}, to_string(l.poly(static_cast<int>(lucas_opts.n))), {}, {}, {}};
      } else if (*lucas_fact) {
        if (lucas_fact_k->count() > 0) {
          rec = {"kdiv-lucas-factorial",
                 {{"n", lucas_opts.n}, {"k", lucas_opts.k}},
                 to_string(l.kdiv_factorial(static_cast<int>(lucas_opts.n),
                                            static_cast<int>(lucas_opts.k))),
                 {},
                 {},
                 {}};
        } else {
          rec = {"lucas-factorial",
                 {{"n", lucas_opts.n}},
                 to_string(l.factorial(static_cast<int>(lucas_opts.n))),
                 {},
                 {},
                 {}};
        }
      } else {
        rec = {"lucas-atom", {{"d", lucas_opts.n}}, to_string(l.atom(static_cast<int>(lucas_opts.n))), {}, {}, {}};
      }
      emit_value(out, rec, parse_format(lucas_opts.common.format));
      return 0;
    };
  });

  // --- lucanomial ---
  struct {
    long n = 0;
    long m = 0;
    long k = 1;
    CommonOpts common;
  } lucanomial_opts;
  auto* lucanomial_cmd = app.add_subcommand("lucanomial", "Lucanomial {n choose m}, optionally k-divisible");
  lucanomial_cmd->add_option("n", lucanomial_opts.n, "upper index")->required();
  lucanomial_cmd->add_option("m", lucanomial_opts.m, "lower index")->required();
  auto* lucanomial_k = lucanomial_cmd->add_option("-k", lucanomial_opts.k, "divisibility parameter");
  add_common(lucanomial_cmd, lucanomial_opts.common);
  lucanomial_cmd->callback([&] {
    action = [&]() -> int {
      LucasCache l(lucanomial_opts.common.max_index);
      Record rec;
      if (lucanomial_k->count() > 0) {
        rec = {"kdiv-lucanomial",
               {{"n", lucanomial_opts.n}, {"m", lucanomial_opts.m}, {"k", lucanomial_opts.k}},
               to_string(l.kdiv_lucanomial(static_cast<int>(lucanomial_opts.n),
                                           static_cast<int>(lucanomial_opts.m),
                                           static_cast<int>(lucanomial_opts.k))),
               {},
               {},
               {}};
      } else {
        rec = {"lucanomial",
               {{"n", lucanomial_opts.n}, {"m", lucanomial_opts.m}},
               to_string(l.lucanomial(static_cast<int>(lucanomial_opts.n),
                                      static_cast<int>(lucanomial_opts.m))),
               {},
               {},
               {}};
      }
      emit_value(out, rec, parse_format(lucanomial_opts.common.format));
      return 0;
    };
  });

  // --- catalan / fibocatalan ---
  struct {
    long n = 0;
    CommonOpts common;
  } catalan_opts;
  auto* catalan_cmd = app.add_subcommand("catalan", "Classical Catalan number C_n");
  catalan_cmd->add_option("n", catalan_opts.n, "index")->required();
  add_common(catalan_cmd, catalan_opts.common);
  catalan_cmd->callback([&] {
    action = [&]() -> int {
      Record rec{"catalan", {{"n", catalan_opts.n}}, to_string(catalan(catalan_opts.n)), {}, {}, {}};
      emit_value(out, rec, parse_format(catalan_opts.common.format));
      return 0;
    };
  });

  struct {
    long n = 0;
    CommonOpts common;
  } fibocat_opts;
  auto* fibocat_cmd = app.add_subcommand("fibocatalan", "FiboCatalan number C_{n,F}");
  fibocat_cmd->add_option("n", fibocat_opts.n, "index")->required();
  add_common(fibocat_cmd, fibocat_opts.common);
  fibocat_cmd->callback([&] {
    action = [&]() -> int {
      FibCache f;
      Record rec{"fibocatalan", {{"n", fibocat_opts.n}}, to_string(f.fibocatalan(fibocat_opts.n)), {}, {}, {}};
      emit_value(out, rec, parse_format(fibocat_opts.common.format));
      return 0;
    };
  });

  // --- super ---
  struct {
    long m = 0;
    long n = 0;
    long k = 1;
    bool classical = false;
    bool fibonacci = false;
    bool lucas = false;
    CommonOpts common;
  } super_opts;
  auto* super_cmd = app.add_subcommand("super", "Super Catalan family S(m,n) / S(m,n)_F / S{m,n}");
  super_cmd->add_option("m", super_opts.m, "first index")->required();
  super_cmd->add_option("n", super_opts.n, "second index")->required();
  auto* super_mode = super_cmd->add_option_group("mode");
  super_mode->add_flag("--classical", super_opts.classical, "classical super Catalan");
  super_mode->add_flag("--fib", super_opts.fibonacci, "super FiboCatalan");
  super_mode->add_flag("--lucas", super_opts.lucas, "Lucas analogue");
  super_mode->require_option(1);
  auto* super_k = super_cmd->add_option("-k", super_opts.k, "divisibility parameter (--lucas/--fib)");
  add_common(super_cmd, super_opts.common);
  super_cmd->callback([&] {
    action = [&]() -> int {
      const bool kdiv = super_k->count() > 0;
      Record rec;
      if (super_opts.classical) {
        if (kdiv) throw Error("-k is not defined for --classical");
        rec = {"super-classical",
               {{"m", super_opts.m}, {"n", super_opts.n}},
               to_string(super_catalan(super_opts.m, super_opts.n)),
               {},
               {},
               {}};
      } else if (super_opts.fibonacci) {
        FibCache f;
        if (kdiv) {
          BigInt num = kdiv_fib_factorial(f, 2 * super_opts.m, super_opts.k) *
                       kdiv_fib_factorial(f, 2 * super_opts.n, super_opts.k);
          BigInt den = kdiv_fib_factorial(f, super_opts.m, super_opts.k) *
                       kdiv_fib_factorial(f, super_opts.n, super_opts.k) *
                       kdiv_fib_factorial(f, super_opts.m + super_opts.n, super_opts.k);
          if (!divides(den, num))
            throw NotDivisible("super --fib -k: integer quotient is not integral");
          rec = {"super-fib-kdiv",
                 {{"m", super_opts.m}, {"n", super_opts.n}, {"k", super_opts.k}},
                 to_string(BigInt(num / den)),
                 {},
                 {},
                 {}};
        } else {
          rec = {"super-fib",
                 {{"m", super_opts.m}, {"n", super_opts.n}},
                 to_string(f.super_fibocatalan(super_opts.m, super_opts.n)),
                 {},
                 {},
                 {}};
        }
      } else {
        LucasCache l(super_opts.common.max_index);
        if (kdiv) {
          rec = {"super-lucas-kdiv",
                 {{"m", super_opts.m}, {"n", super_opts.n}, {"k", super_opts.k}},
                 to_string(l.super_kdiv(static_cast<int>(super_opts.m),
                                        static_cast<int>(super_opts.n),
                                        static_cast<int>(super_opts.k))),
                 {},
                 {},
                 {}};
        } else {
          rec = {"super-lucas",
                 {{"m", super_opts.m}, {"n", super_opts.n}},
                 to_string(l.super(static_cast<int>(super_opts.m), static_cast<int>(super_opts.n))),
                 {},
                 {},
                 {}};
        }
      }
      emit_value(out, rec, parse_format(super_opts.common.format));
      return 0;
    };
  });

  // --- gencat ---
  struct {
    long r = 0;
    long n = 0;
    bool fibonacci = false;
    bool lucas = false;
    CommonOpts common;
  } gencat_opts;
  auto* gencat_cmd = app.add_subcommand("gencat", "Generalized FiboCatalan family");
  gencat_cmd->add_option("r", gencat_opts.r, "parameter r")->required();
  gencat_cmd->add_option("n", gencat_opts.n, "index n")->required();
  auto* gencat_mode = gencat_cmd->add_option_group("mode");
  gencat_mode->add_flag("--fib", gencat_opts.fibonacci, "generalized FiboCatalan");
  gencat_mode->add_flag("--lucas", gencat_opts.lucas, "Lucas analogue");
  gencat_mode->require_option(1);
  add_common(gencat_cmd, gencat_opts.common);
  gencat_cmd->callback([&] {
    action = [&]() -> int {
      Record rec;
      if (gencat_opts.fibonacci) {
        FibCache f;
        rec = {"gencat-fib",
               {{"r", gencat_opts.r}, {"n", gencat_opts.n}},
               to_string(f.generalized_fibocatalan(gencat_opts.r, gencat_opts.n)),
               {},
               {},
               {}};
      } else {
        LucasCache l(gencat_opts.common.max_index);
        rec = {"gencat-lucas",
               {{"r", gencat_opts.r}, {"n", gencat_opts.n}},
               to_string(l.generalized(static_cast<int>(gencat_opts.r),
                                       static_cast<int>(gencat_opts.n))),
               {},
               {},
               {}};
      }
      emit_value(out, rec, parse_format(gencat_opts.common.format));
      return 0;
    };
  });

  // --- ratcat ---
  struct {
    long a = 0;
    long b = 0;
    bool classical = false;
    bool lucas = false;
    CommonOpts common;
  } ratcat_opts;
  auto* ratcat_cmd = app.add_subcommand("ratcat", "Rational Catalan number Cat(a,b) / Cat{a,b}");
  ratcat_cmd->add_option("a", ratcat_opts.a, "first index")->required();
  ratcat_cmd->add_option("b", ratcat_opts.b, "second index")->required();
  auto* ratcat_mode = ratcat_cmd->add_option_group("mode");
  ratcat_mode->add_flag("--classical", ratcat_opts.classical, "classical rational Catalan");
  ratcat_mode->add_flag("--lucas", ratcat_opts.lucas, "Lucas analogue");
  ratcat_mode->require_option(1);
  add_common(ratcat_cmd, ratcat_opts.common);
  ratcat_cmd->callback([&] {
    action = [&]() -> int {
      Record rec;
      if (ratcat_opts.classical) {
        rec = {"ratcat-classical",
               {{"a", ratcat_opts.a}, {"b", ratcat_opts.b}},
               to_string(rational_catalan(ratcat_opts.a, ratcat_opts.b)),
               {},
               {},
               {}};
      } else {
        LucasCache l(ratcat_opts.common.max_index);
        rec = {"ratcat-lucas",
               {{"a", ratcat_opts.a}, {"b", ratcat_opts.b}},
               to_string(l.rational_catalan(static_cast<int>(ratcat_opts.a),
                                            static_cast<int>(ratcat_opts.b))),
               {},
               {},
               {}};
      }
      emit_value(out, rec, parse_format(ratcat_opts.common.format));
      return 0;
    };
  });

  // --- valuation ---
  struct {
    std::string nums;
    std::string dens;
    long k = 1;
    CommonOpts common;
  } valuation_opts;
  auto* valuation_cmd =
      app.add_subcommand("valuation", "Atom-valuation report for a Lucas factorial quotient");
  valuation_cmd->add_option("--num", valuation_opts.nums, "numerator indices, comma separated")
      ->required();
  valuation_cmd->add_option("--den", valuation_opts.dens, "denominator indices, comma separated");
  valuation_cmd->add_option("-k", valuation_opts.k, "divisibility parameter");
  add_common(valuation_cmd, valuation_opts.common);
  valuation_cmd->callback([&] {
    action = [&]() -> int {
      auto report = factorial_quotient_report(parse_list(valuation_opts.nums),
                                              parse_list(valuation_opts.dens), valuation_opts.k);
      OutputFormat format = parse_format(valuation_opts.common.format);
      if (format == OutputFormat::kText) {
        for (const auto& row : report.rows)
          out << "d=" << row.d << " a=" << row.num_exponent << " b=" << row.den_exponent
              << '\n';
        out << "verdict: " << (report.verdict ? "true" : "false") << '\n';
      } else {
        emit_value(out, to_record(report), format);
      }
      return 0;
    };
  });

  // --- verify ---
  struct {
    std::string family;
    std::map<std::string, std::string> axis_inputs;
    CommonOpts common;
  } verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Verify one identity family over a grid");
  verify_cmd->add_option("family", verify_opts.family, "identity family id")->required();
  for (const char* axis : {"n", "m", "l", "r", "k"})
    verify_cmd->add_option("--" + std::string(axis), verify_opts.axis_inputs[axis],
                           std::string("range for axis ") + axis + " (a..b or a)");
  add_common(verify_cmd, verify_opts.common, true);
  verify_cmd->callback([&] {
    action = [&]() -> int {
      FamilySpec spec = default_family_spec(verify_opts.family);
      for (const auto& [axis, text] : verify_opts.axis_inputs) {
        if (text.empty()) continue;
        bool found = false;
        for (auto& [name, range] : spec.axes) {
          if (name == axis) {
            range = parse_range(text);
            found = true;
          }
        }
        if (!found)
          throw Error("family '" + spec.id + "' has no axis '" + axis + "'");
      }
      SuiteConfig config;
      config.jobs = verify_opts.common.jobs;
      config.lucas_max_index = verify_opts.common.max_index;
      config.families = {spec};
      return emit_suite(out, err, run_suite(config), parse_format(verify_opts.common.format));
    };
  });

  // --- suite ---
  struct {
    std::vector<std::string> only;
    std::vector<std::string> ranges;
    CommonOpts common;
  } suite_opts;
  auto* suite_cmd = app.add_subcommand("suite", "Run every identity family at its full grid");
  suite_cmd->add_option("--only", suite_opts.only, "restrict to these families")
      ->take_all()
      ->expected(0, -1);
  suite_cmd->add_option("--range", suite_opts.ranges,
                        "override: FAMILY=a..b (all axes) or FAMILY.axis=a..b");
  add_common(suite_cmd, suite_opts.common, true);
  suite_cmd->callback([&] {
    action = [&]() -> int {
      SuiteConfig config = SuiteConfig::defaults();
      config.jobs = suite_opts.common.jobs;
      config.lucas_max_index = suite_opts.common.max_index;
      if (!suite_opts.only.empty()) {
        std::vector<FamilySpec> kept;
        for (const auto& id : suite_opts.only) {
          FamilySpec spec = default_family_spec(id);  // validates the id
          for (auto& fam : config.families)
            if (fam.id == spec.id) kept.push_back(fam);
        }
        config.families = std::move(kept);
      }
      for (const auto& text : suite_opts.ranges) {
        auto eq = text.find('=');
        if (eq == std::string::npos) throw Error("bad --range '" + text + "'");
        std::string target = text.substr(0, eq);
        AxisRange range = parse_range(text.substr(eq + 1));
        std::string family = target;
        std::string axis;
        if (auto dot = target.find('.'); dot != std::string::npos) {
          family = target.substr(0, dot);
          axis = target.substr(dot + 1);
        }
        bool applied = false;
        for (auto& fam : config.families) {
          if (fam.id != family) continue;
          for (auto& [name, r] : fam.axes) {
            if (axis.empty() || name == axis) {
              r = range;
              applied = true;
            }
          }
        }
        if (!applied) throw Error("--range '" + text + "' matched no family axis");
      }
      return emit_suite(out, err, run_suite(config), parse_format(suite_opts.common.format));
    };
  });

  // --- search ---
  struct {
    std::string template_id;
    std::string weight_id = "alt";
    std::map<std::string, std::string> axis_inputs;
    CommonOpts common;
  } search_opts;
  auto* search_cmd =
      app.add_subcommand("search", "Try a Fibonacci analogue of a classical identity on a grid");
  search_cmd->add_option("--template", search_opts.template_id,
                         "von-szily-f, mikic-super-f or mikic-catalan-f")
      ->required();
  search_cmd->add_option("--weights", search_opts.weight_id,
                         "sign family: alt, alt-tri, alt-sq or alt-binom2");
  for (const char* axis : {"m", "n", "l"})
    search_cmd->add_option("--" + std::string(axis), search_opts.axis_inputs[axis],
                           std::string("range for axis ") + axis + " (a..b or a)");
  add_common(search_cmd, search_opts.common);
  search_cmd->callback([&] {
    action = [&]() -> int {
      FibCache f;
      LucasCache l(search_opts.common.max_index);
      IdentityContext ctx{f, l};

      std::vector<std::pair<std::string, AxisRange>> defaults;
      const std::string tid = search_opts.template_id;
      if (tid.find("von") != std::string::npos) {
        defaults = {{"m", {0, 6}}, {"n", {0, 6}}};
      } else if (tid.find("super") != std::string::npos) {
        defaults = {{"n", {0, 5}}, {"l", {0, 5}}};
      } else {
        defaults = {{"n", {0, 10}}};
      }
      for (auto& [name, range] : defaults) {
        auto it = search_opts.axis_inputs.find(name);
        if (it != search_opts.axis_inputs.end() && !it->second.empty())
          range = parse_range(it->second);
      }

      SearchOutcome outcome =
          search_fib_analogue(ctx, search_opts.template_id, search_opts.weight_id, defaults);
      const std::size_t total = outcome.holding.size() + outcome.residuals.size();
      std::string summary = "held " + std::to_string(outcome.holding.size()) + " of " +
                            std::to_string(total) + " points";
      emit_records(out, to_records(outcome), parse_format(search_opts.common.format), summary);
      return 0;
    };
  });

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("lucasforge");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace lucasforge

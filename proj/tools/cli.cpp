#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unitpoly/census.hpp"
#include "unitpoly/context.hpp"
#include "unitpoly/error.hpp"
#include "unitpoly/int_poly.hpp"
#include "unitpoly/poly_core.hpp"
#include "unitpoly/quasigroup.hpp"
#include "unitpoly/solve.hpp"
#include "unitpoly/units.hpp"

namespace unitpoly::cli {

namespace {

using nlohmann::json;

struct UsageError {
  std::string flag;
  std::string message;
};

struct Output {
  std::string text;
  json value;
};

unsigned configured_max_n() {
  const char* env = std::getenv("UNITPOLY_MAX_N");
  if (env == nullptr || *env == '\0') return Context::kDefaultMaxN;
  try {
    std::size_t used = 0;
    const unsigned long value = std::stoul(env, &used);
    if (used != std::string(env).size() || value < 2) throw std::invalid_argument(env);
    return static_cast<unsigned>(value);
  } catch (const std::exception&) {
    throw UsageError{"UNITPOLY_MAX_N", std::string("invalid value '") + env + "'"};
  }
}

Context make_context(unsigned n) {
  const unsigned max_n = configured_max_n();
  if (n < 2 || n > max_n) {
    throw UsageError{"--n", "n must lie in [2, " + std::to_string(max_n) + "], got " + std::to_string(n)};
  }
  return Context(n, max_n);
}

template <typename F>
auto parse_flag(const std::string& flag, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const Error& e) {
    throw UsageError{flag, e.what()};
  }
}

IntPoly poly_arg(const std::string& flag, const std::string& text) {
  return parse_flag(flag, [&] { return IntPoly::parse(text); });
}

std::vector<Residue> residue_list(const std::string& flag, const std::string& text, unsigned n) {
  const IntPoly parsed = poly_arg(flag, text);
  std::vector<Residue> out;
  // Keep explicit zeros: count commas instead of trusting the trimmed poly.
  const std::size_t count = static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Residue::from_mpz(n, parsed.coeff(i)));
  return out;
}

std::vector<UnitResidue> unit_list(const std::string& flag, const std::string& text, unsigned n) {
  std::vector<UnitResidue> out;
  for (auto& r : residue_list(flag, text, n)) {
    if (!r.is_odd()) throw UsageError{flag, "entry " + r.to_string() + " is not odd"};
    out.emplace_back(std::move(r));
  }
  return out;
}

Residue residue_arg(const std::string& flag, const std::string& text, unsigned n) {
  return parse_flag(flag, [&] { return Residue::from_decimal(n, text); });
}

Output poly_output(const ReducedPoly& p) { return {p.to_string(), json{{"poly", p.to_string()}}}; }
Output poly_output(const IntPoly& p) { return {p.to_string(), json{{"poly", p.to_string()}}}; }
// Coefficient-wise residues in [0, 2^n); keeps the induced map on all of Z_{2^n}.
Output ring_poly_output(const IntPoly& p, unsigned n) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), c.get_mpz_t(), n);
    coeffs.push_back(r);
  }
  return poly_output(IntPoly(std::move(coeffs)));
}

Output bool_output(bool value) { return {value ? "true" : "false", json{{"result", value}}}; }

Output poly_set_output(const std::vector<ReducedPoly>& polys) {
  std::string text;
  json list = json::array();
  for (const auto& p : polys) {
    text += p.to_string() + "\n";
    list.push_back(p.to_string());
  }
  if (!text.empty()) text.pop_back();
  return {text, json{{"polys", list}, {"count", polys.size()}}};
}

json census_json(const CensusReport& r) {
  return json{{"n", r.n},
              {"d_n", r.max_degree},
              {"log2_reduced", r.log2_reduced},
              {"log2_permutational", r.log2_permutational},
              {"log2_ring_permutational", r.log2_ring_permutational},
              {"keller_exponent", r.keller_exponent},
              {"identity_ok", r.identity_ok}};
}

QuasigroupSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"--spec", "cannot open '" + path + "'"};
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw UsageError{"--spec", std::string("invalid JSON: ") + e.what()};
  }
  return QuasigroupSpec::from_json(doc, configured_max_n());
}

std::string error_code_label(ErrorCode code) { return std::string(error_code_name(code)); }

}  // namespace

bool selftest(std::ostream& out) {
  bool all = true;
  const auto check = [&](const std::string& name, const std::string& got, const std::string& want) {
    const bool ok = got == want;
    all = all && ok;
    out << (ok ? "PASS " : "FAIL ") << name << ": got " << got << ", expected " << want << "\n";
  };
  try {
    check("reduce 1+3x^5 mod 2^5", reduce(IntPoly::parse("1,0,0,0,0,3"), Context(5)).to_string(), "31,3,2");

    const Context c4(4);
    std::vector<UnitResidue> table;
    for (unsigned v : {9U, 5U, 9U}) table.emplace_back(c4.residue(v));
    check("interpolate 9,5,9 at 1,3,5 mod 2^4", interpolate(ValueTable(c4, table), c4).to_string(), "6,2,1");

    std::vector<UnitResidue> nodes;
    std::vector<UnitResidue> nines;
    for (unsigned x : {1U, 5U, 9U}) {
      nodes.emplace_back(c4.residue(x));
      nines.emplace_back(c4.residue(9));
    }
    std::string joined;
    for (const auto& p : interpolate_at_nodes(nodes, nines, c4)) joined += (joined.empty() ? "" : " | ") + p.to_string();
    check("all solutions at nodes 1,5,9 mod 2^4", joined, "2,6,1 | 5,4 | 6,2,1 | 9");

    check("inverse of 5+x+x^2 mod 2^4", invert_permutation(IntPoly::parse("5,1,1"), c4).to_string(), "13,5,1");

    check("1/(2+x) mod 2^3", multiplicative_inverse(IntPoly::parse("2,1"), Context(3)).to_string(), "2,1");
    check("1/(4+3x) mod 2^4", multiplicative_inverse(IntPoly::parse("4,3"), c4).to_string(), "3,3,1");
    check("1/(31+2x+2x^2+x^3+x^4) mod 2^5",
          multiplicative_inverse(IntPoly::parse("31,2,2,1,1"), Context(5)).to_string(), "4,7,2");

    const IdealGenerators gens = ideal_generators(Context(5));
    const std::vector<std::string> expected{"32", "16,16", "12,16,4", "30,14,18,2", "9,16,22,16,1"};
    for (std::size_t i = 0; i < expected.size(); ++i) {
      check("generator P_{5," + std::to_string(i) + "}", gens.polys.at(i).to_string(), expected[i]);
    }

    unsigned failures = 0;
    for (unsigned n = 2; n <= 1024; ++n) failures += keller_identity_check(n) ? 0 : 1;
    check("counting identity for 2 <= n <= 1024 (failures)", std::to_string(failures), "0");
  } catch (const std::exception& e) {
    out << "FAIL exception: " << e.what() << "\n";
    all = false;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced polynomials, inverses and quasigroups modulo 2^n", "unitpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  unsigned n = 0;
  std::string poly_text;
  std::string other_text;
  std::string values_text;
  std::string nodes_text;
  std::string point_text;
  std::string spec_path;
  std::string mode_text = "UNIT_PRODUCT";
  std::size_t coordinate = 0;
  std::size_t arity = 2;
  std::optional<std::uint64_t> seed;

  std::vector<std::pair<CLI::App*, std::function<Output()>>> commands;
  const auto add = [&](const std::string& name, const std::string& help, auto&& configure, std::function<Output()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    configure(sub);
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };
  const auto need_n = [&](CLI::App* s) { s->add_option("--n", n, "Modulus exponent (modulus 2^n)")->required(); };
  const auto need_poly = [&](CLI::App* s) {
    s->add_option("--poly", poly_text, "Coefficients, lowest degree first, e.g. 1,0,3")->required();
  };

  add("reduce", "Reduced form of a polynomial", [&](CLI::App* s) { need_n(s); need_poly(s); },
      [&] { return poly_output(reduce(poly_arg("--poly", poly_text), make_context(n))); });
  add("eval", "Evaluate a polynomial at a residue",
      [&](CLI::App* s) {
        need_n(s);
        need_poly(s);
        s->add_option("--at", point_text, "Evaluation point")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        const Residue v = eval(poly_arg("--poly", poly_text), residue_arg("--at", point_text, ctx.n()));
        return Output{v.to_string(), json{{"value", v.to_string()}}};
      });
  add("member", "Does the polynomial map Q_n into Q_n?", need_poly,
      [&] { return bool_output(induces_function_on_units(poly_arg("--poly", poly_text))); });
  add("perm", "Does the polynomial permute Q_n?", need_poly,
      [&] { return bool_output(induces_permutation_on_units(poly_arg("--poly", poly_text))); });
  add("rivest", "Does the polynomial permute Z/2^n?", need_poly,
      [&] { return bool_output(rivest_permutes_ring(poly_arg("--poly", poly_text))); });
  add("bivariate", "Does P(x,y) define a quasigroup on Z/2^n?",
      [&](CLI::App* s) {
        need_n(s);
        s->add_option("--poly", poly_text, "Rows of x^i y^j coefficients: 'c00,c01;c10,c11'")->required();
      },
      [&] {
        const BivariatePoly p = parse_flag("--poly", [&] { return BivariatePoly::parse(poly_text); });
        return bool_output(bivariate_quasigroup_check(p, make_context(n).n()));
      });
  add("generators", "Generators of the ideal of polynomials vanishing on Q_n", need_n, [&] {
    const IdealGenerators gens = ideal_generators(make_context(n));
    std::string text;
    json list = json::array();
    for (const auto& g : gens.polys) {
      text += g.to_string() + "\n";
      list.push_back(g.to_string());
    }
    text.pop_back();
    return Output{text, json{{"generators", list}}};
  });
  add("conjugate", "H(x+1)-1", [&](CLI::App* s) { need_n(s); need_poly(s); }, [&] {
    const Context ctx = make_context(n);
    return ring_poly_output(conjugate_to_nonunits(poly_arg("--poly", poly_text)), ctx.n());
  });
  add("glue", "One polynomial inducing P on units and H(x+1)-1 elsewhere",
      [&](CLI::App* s) {
        need_n(s);
        need_poly(s);
        s->add_option("--h-poly", other_text, "Polynomial H")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        return ring_poly_output(glue_polynomial(poly_arg("--poly", poly_text), poly_arg("--h-poly", other_text), ctx),
                                ctx.n());
      });
  add("interp", "Reduced polynomial from values at 1,3,...,2d_n+1",
      [&](CLI::App* s) {
        need_n(s);
        s->add_option("--values", values_text, "Odd values p(1),p(3),...")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        std::vector<UnitResidue> values = unit_list("--values", values_text, ctx.n());
        if (values.size() != ctx.max_degree() + 1) {
          throw UsageError{"--values", "expected " + std::to_string(ctx.max_degree() + 1) + " values"};
        }
        return poly_output(interpolate(ValueTable(ctx, std::move(values)), ctx));
      });
  add("interp-nodes", "All reduced polynomials taking given values at given nodes",
      [&](CLI::App* s) {
        need_n(s);
        s->add_option("--nodes", nodes_text, "Distinct odd nodes")->required();
        s->add_option("--values", values_text, "Odd values, one per node")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        const auto nodes = unit_list("--nodes", nodes_text, ctx.n());
        const auto values = unit_list("--values", values_text, ctx.n());
        if (nodes.size() != values.size()) throw UsageError{"--values", "needs one value per node"};
        for (std::size_t a = 0; a < nodes.size(); ++a) {
          for (std::size_t b = a + 1; b < nodes.size(); ++b) {
            if (nodes[a] == nodes[b]) throw UsageError{"--nodes", "nodes must be distinct"};
          }
        }
        return poly_set_output(interpolate_at_nodes(nodes, values, ctx));
      });
  add("invert", "Compositional inverse of a permutation of Q_n",
      [&](CLI::App* s) { need_n(s); need_poly(s); },
      [&] { return poly_output(invert_permutation(poly_arg("--poly", poly_text), make_context(n))); });
  add("mulinv", "Multiplicative inverse 1/P in reduced form",
      [&](CLI::App* s) { need_n(s); need_poly(s); },
      [&] { return poly_output(multiplicative_inverse(poly_arg("--poly", poly_text), make_context(n))); });
  add("mul", "Product of two polynomials in reduced form",
      [&](CLI::App* s) {
        need_n(s);
        s->add_option("--a", poly_text, "First factor")->required();
        s->add_option("--b", other_text, "Second factor")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        return poly_output(
            multiply_reduced(reduce(poly_arg("--a", poly_text), ctx), reduce(poly_arg("--b", other_text), ctx), ctx));
      });
  add("hensel-roots", "All roots of P modulo 2^n",
      [&](CLI::App* s) { need_n(s); need_poly(s); },
      [&] {
        const Context ctx = make_context(n);
        std::string text;
        json list = json::array();
        for (const auto& r : hensel_roots(poly_arg("--poly", poly_text), ctx.n())) {
          text += (text.empty() ? "" : ",") + r.to_string();
          list.push_back(r.to_string());
        }
        return Output{text, json{{"roots", list}}};
      });
  add("unit-inv", "Inverse of an odd residue",
      [&](CLI::App* s) {
        need_n(s);
        s->add_option("--a", point_text, "Odd residue")->required();
      },
      [&] {
        const Context ctx = make_context(n);
        Residue a = residue_arg("--a", point_text, ctx.n());
        if (!a.is_odd()) throw UsageError{"--a", a.to_string() + " is not odd"};
        const Residue inv = unit_inverse(UnitResidue(std::move(a))).value();
        return Output{inv.to_string(), json{{"value", inv.to_string()}}};
      });
  add("unit-group", "Check that 5 has order 2^(n-2) in Q_n", need_n, [&] {
    const Context ctx = make_context(n);
    const UnitGroupReport r = unit_group_order_check(ctx.n());
    return Output{r.pass() ? "true" : "false", json{{"result", r.pass()},
                                                    {"five_pow_half_order", r.half_order_power.to_string()},
                                                    {"expected", r.expected_half_order_power.to_string()}}};
  });
  add("count", "Counting exponents (log2) for polynomial function classes", need_n, [&] {
    const CensusReport r = census(make_context(n).n());
    std::ostringstream text;
    text << "n=" << r.n << " d_n=" << r.max_degree << " log2_reduced=" << r.log2_reduced
         << " log2_permutational=" << r.log2_permutational << " log2_ring_permutational=" << r.log2_ring_permutational
         << " keller_exponent=" << r.keller_exponent << " identity_ok=" << (r.identity_ok ? "true" : "false");
    return Output{text.str(), census_json(r)};
  });
  add("keller", "Check the counting identity against the classical formula", need_n,
      [&] { return bool_output(keller_identity_check(make_context(n).n())); });

  CLI::App* qg = app.add_subcommand("qg", "Huge k-ary quasigroups");
  qg->require_subcommand(1);
  qg->fallthrough();
  std::vector<std::pair<CLI::App*, std::function<Output()>>> qg_commands;
  const auto add_qg = [&](const std::string& name, const std::string& help, auto&& configure,
                          std::function<Output()> fn) {
    CLI::App* sub = qg->add_subcommand(name, help);
    configure(sub);
    qg_commands.emplace_back(sub, std::move(fn));
  };
  const auto need_spec = [&](CLI::App* s) { s->add_option("--spec", spec_path, "Quasigroup spec JSON file")->required(); };
  const auto parse_args = [&](const QuasigroupSpec& spec) {
    return residue_list("--args", values_text, spec.n());
  };
  add_qg("apply", "Evaluate f",
         [&](CLI::App* s) {
           need_spec(s);
           s->add_option("--args", values_text, "Comma-separated arguments")->required();
         },
         [&] {
           const QuasigroupSpec spec = load_spec(spec_path);
           const Residue v = qg_apply(spec, parse_args(spec));
           return Output{v.to_string(), json{{"value", v.to_string()}}};
         });
  add_qg("adjoint", "Evaluate the i-th adjoint (the i-th argument holds the target)",
         [&](CLI::App* s) {
           need_spec(s);
           s->add_option("--i", coordinate, "Coordinate, 1-based")->required();
           s->add_option("--args", values_text, "Comma-separated arguments")->required();
         },
         [&] {
           const QuasigroupSpec spec = load_spec(spec_path);
           const Residue v = qg_adjoint(spec, coordinate, parse_args(spec));
           return Output{v.to_string(), json{{"value", v.to_string()}}};
         });
  add_qg("check", "Exhaustive Latin-cube and adjoint check", need_spec,
         [&] { return bool_output(qg_latin_check(load_spec(spec_path))); });
  add_qg("random", "Random spec with uniformly drawn permutational polynomials",
         [&](CLI::App* s) {
           need_n(s);
           s->add_option("--k", arity, "Arity")->required();
           s->add_option("--mode", mode_text, "UNIT_PRODUCT, RING_ADDITIVE or RING_GLUED");
           s->add_option("--seed", seed, "Random seed")->required();
         },
         [&] {
           const Context ctx = make_context(n);
           const QuasigroupMode mode = parse_flag("--mode", [&] { return parse_mode(mode_text); });
           if (arity < 1) throw UsageError{"--k", "arity must be at least 1"};
           std::mt19937_64 rng(*seed);
           const json doc = QuasigroupSpec::random(ctx, mode, arity, rng).to_json();
           return Output{doc.dump(), doc};
         });

  CLI::App* self = app.add_subcommand("selftest", "Re-run the worked examples and the counting identity");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  const bool as_json = format == "json";
  if (self->parsed()) {
    std::ostringstream log;
    const bool ok = selftest(log);
    if (as_json) {
      out << json{{ok ? "ok" : "error", json{{"passed", ok}, {"log", log.str()}}}}.dump() << "\n";
    } else {
      out << log.str();
    }
    return ok ? kExitOk : kExitDomainError;
  }

  std::function<Output()> handler;
  for (auto& [sub, fn] : commands) {
    if (sub->parsed()) handler = fn;
  }
  for (auto& [sub, fn] : qg_commands) {
    if (sub->parsed()) handler = fn;
  }

  try {
    const Output result = handler();
    if (as_json) {
      out << json{{"ok", result.value}}.dump() << "\n";
    } else {
      out << result.text << "\n";
    }
    return kExitOk;
  } catch (const UsageError& e) {
    if (as_json) {
      out << json{{"error", json{{"code", "UsageError"}, {"flag", e.flag}, {"message", e.message}}}}.dump() << "\n";
    } else {
      err << "usage error: " << e.flag << ": " << e.message << "\n";
    }
    return kExitUsageError;
  } catch (const Error& e) {
    if (as_json) {
      out << json{{"error", json{{"code", error_code_label(e.code())}, {"message", e.what()}}}}.dump() << "\n";
    } else {
      err << "error: " << error_code_label(e.code()) << ": " << e.what() << "\n";
    }
    return kExitDomainError;
  }
}

}  // namespace unitpoly::cli

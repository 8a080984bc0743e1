// Command-line front end: exact characteristic-polynomial invariants of
// matrix tuples, multisymmetric decomposition, and randomized property
// trials, with stable text and JSON output.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "msym/msym.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace msym;

struct CommonOpts {
  unsigned n = 2;
  unsigned m = 1;
  std::string ring_name = "int";
  std::string format = "text";
  std::string expr;
  std::uint64_t seed = 0;

  Ring ring() const {
    if (ring_name == "int") return Ring::integers();
    if (ring_name == "rat") return Ring::rationals();
    if (ring_name.rfind("mod:", 0) == 0) {
      const std::string p = ring_name.substr(4);
      if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("--ring mod:<p> needs a numeric modulus");
      return Ring::mod(std::stoul(p));
    }
    throw std::invalid_argument("--ring must be int, rat, or mod:<p>");
  }

  Context context() const { return Context(ring(), n, m); }

  std::string expr_text() const {
    if (expr != "-") return expr;
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_expr) {
  cmd->add_option("--n", o.n, "matrix size n")->check(CLI::PositiveNumber);
  cmd->add_option("--m", o.m, "number of matrices m")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--ring", o.ring_name, "coefficient ring: int, rat, mod:<p>");
  cmd->add_option("--format", o.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", o.seed, "random seed");
  if (with_expr)
    cmd->add_option("--expr", o.expr, "input expression ('-' reads stdin)")
        ->required();
}

json base_json(const std::string& command, const CommonOpts& o) {
  json j;
  j["command"] = command;
  j["inputs"] = json::object();
  j["inputs"]["n"] = std::to_string(o.n);
  j["inputs"]["m"] = std::to_string(o.m);
  j["inputs"]["ring"] = o.ring().str();
  return j;
}

void emit(const json& j, const CommonOpts& o,
          const std::vector<std::string>& text_lines) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const std::string& line : text_lines) std::cout << line << "\n";
  }
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned trial) {
  return seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
}

int cmd_charpoly(const CommonOpts& o) {
  const Context ctx = o.context();
  const std::string text = o.expr_text();
  // Words use the letters z1..zm; anything with a 'z' is a word expression.
  const bool word_mode = text.find('z') != std::string::npos;
  PolyMatrix F(ctx.n, ctx.n, Polynomial::zero(ctx));
  if (word_mode) {
    F = eval_element_at_matrices(parse_word_element(text, ctx),
                                 generic_matrices(ctx));
  } else {
    F = eval_poly_at_matrices(parse_polynomial(text, ctx),
                              generic_matrices(ctx));
  }
  const CharPolyCoeffs<Polynomial> coeffs = charpoly(F);
  const bool verified = ctx.n > 4 || coeffs == charpoly_naive(F);

  json j = base_json("charpoly", o);
  j["inputs"]["expr"] = text;
  j["inputs"]["mode"] = word_mode ? "word" : "commutative";
  j["result"] = json::array();
  std::vector<std::string> lines;
  for (unsigned k = 1; k <= ctx.n; ++k) {
    j["result"].push_back(coeffs[k].str());
    lines.push_back("theta[" + std::to_string(k) + "] = " + coeffs[k].str());
  }
  j["verified"] = verified;
  emit(j, o, lines);
  return verified ? 0 : 2;
}

int cmd_ek(const CommonOpts& o, unsigned k) {
  const Context ctx = o.context();
  const std::string text = o.expr_text();
  const Polynomial f = parse_polynomial(text, ctx);
  const Polynomial result = ek_of_f(k, f);
  const bool verified = is_multisymmetric(result);

  json j = base_json("ek", o);
  j["inputs"]["k"] = std::to_string(k);
  j["inputs"]["expr"] = text;
  j["result"] = result.str();
  j["verified"] = verified;
  emit(j, o, {result.str()});
  return verified ? 0 : 2;
}

int cmd_decompose(const CommonOpts& o) {
  const Context ctx = o.context();
  const std::string text = o.expr_text();
  const Polynomial p = parse_polynomial(text, ctx);
  const GeneratorExpr g = decompose(p);
  const bool verified = expand_generator_expr(g) == p;

  json j = base_json("decompose", o);
  j["inputs"]["expr"] = text;
  j["result"] = g.str();
  j["verified"] = verified;
  emit(j, o, {g.str()});
  return verified ? 0 : 2;
}

int cmd_witness(const CommonOpts& o) {
  const Context ctx = o.context();
  const std::string text = o.expr_text();
  const FreeElement f = parse_word_element(text, ctx);
  const auto [lhs, rhs] = junker_weyl_witness(f);
  const bool verified = lhs == rhs;

  json j = base_json("witness", o);
  j["inputs"]["expr"] = text;
  j["result"] = json::object();
  j["result"]["delta_theta"] = json::array();
  j["result"]["ek_ab"] = json::array();
  std::vector<std::string> lines;
  for (unsigned k = 1; k <= ctx.n; ++k) {
    j["result"]["delta_theta"].push_back(lhs[k - 1].str());
    j["result"]["ek_ab"].push_back(rhs[k - 1].str());
    lines.push_back("delta_theta[" + std::to_string(k) +
                    "] = " + lhs[k - 1].str());
    lines.push_back("ek_ab[" + std::to_string(k) + "] = " + rhs[k - 1].str());
  }
  lines.push_back(std::string("verified: ") + (verified ? "true" : "false"));
  j["verified"] = verified;
  emit(j, o, lines);
  return verified ? 0 : 2;
}

int cmd_invariance(const CommonOpts& o, unsigned trials, unsigned long prime) {
  const Ring ring = Ring::mod(prime);
  const Context ctx(ring, o.n, o.m);
  unsigned failures = 0;
  for (unsigned i = 0; i < trials; ++i) {
    std::mt19937_64 rng(trial_seed(o.seed, i));
    const FreeElement f = sample_element(ctx, 3, rng);
    const MatrixTuple t = sample_tuple(ctx, rng);
    const ScalarMatrix g = sample_invertible_matrix(ring, ctx.n, rng);
    if (!invariance_trial(f, t, g)) ++failures;
  }
  const bool verified = failures == 0;

  json j = base_json("invariance", o);
  j["inputs"]["ring"] = ring.str();
  j["inputs"]["trials"] = std::to_string(trials);
  j["inputs"]["prime"] = std::to_string(prime);
  j["inputs"]["seed"] = std::to_string(o.seed);
  j["result"] = json::object();
  j["result"]["trials"] = std::to_string(trials);
  j["result"]["failures"] = std::to_string(failures);
  j["verified"] = verified;
  emit(j, o,
       {"trials: " + std::to_string(trials),
        "failures: " + std::to_string(failures),
        std::string("verified: ") + (verified ? "true" : "false")});
  return verified ? 0 : 2;
}

int cmd_degeneration(const CommonOpts& o, unsigned trials) {
  const Context ctx = o.context();
  unsigned failures = 0;
  for (unsigned i = 0; i < trials; ++i) {
    const MatrixTuple t = commuting_tuple_sampler(ctx, trial_seed(o.seed, i));
    std::mt19937_64 rng(trial_seed(o.seed, i) ^ 0x5DEECE66DULL);
    const FreeElement f =
        FreeElement::word(ctx, sample_word(ctx.m, 3, rng));
    if (!degeneration_check(t, f)) ++failures;
  }
  const bool verified = failures == 0;

  json j = base_json("degeneration", o);
  j["inputs"]["trials"] = std::to_string(trials);
  j["inputs"]["seed"] = std::to_string(o.seed);
  j["result"] = json::object();
  j["result"]["trials"] = std::to_string(trials);
  j["result"]["failures"] = std::to_string(failures);
  j["verified"] = verified;
  emit(j, o,
       {"trials: " + std::to_string(trials),
        "failures: " + std::to_string(failures),
        std::string("verified: ") + (verified ? "true" : "false")});
  return verified ? 0 : 2;
}

int cmd_preimage(const CommonOpts& o) {
  const Context ctx = o.context();
  const std::string text = o.expr_text();
  const Polynomial p = parse_polynomial(text, ctx);
  const Polynomial pre = preimage_in_C(p);
  const bool verified = delta_specialize(pre) == p;

  json j = base_json("preimage", o);
  j["inputs"]["expr"] = text;
  j["result"] = pre.str();
  j["verified"] = verified;
  emit(j, o, {pre.str()});
  return verified ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact invariants of matrix tuples: characteristic-polynomial "
      "coefficients, multisymmetric decomposition, and property trials"};
  app.require_subcommand(1);

  CommonOpts o;
  unsigned k = 1;
  unsigned trials = 100;
  unsigned long prime = 101;

  CLI::App* c_charpoly = app.add_subcommand(
      "charpoly", "theta_1..theta_n of a word or commutative expression "
                  "evaluated at the generic matrices");
  add_common(c_charpoly, o, true);

  CLI::App* c_ek = app.add_subcommand(
      "ek", "e_k of the row copies of a polynomial in y");
  add_common(c_ek, o, true);
  c_ek->add_option("-k,--k", k, "coefficient index")->required();

  CLI::App* c_decompose = app.add_subcommand(
      "decompose", "write a multisymmetric polynomial in the generators "
                   "E(k;f)");
  add_common(c_decompose, o, true);

  CLI::App* c_witness = app.add_subcommand(
      "witness", "diagonal specialization of theta vs e_k of the "
                 "abelianization, for a word expression");
  add_common(c_witness, o, true);

  CLI::App* c_invariance = app.add_subcommand(
      "invariance", "randomized conjugation-invariance trials over Z/p");
  add_common(c_invariance, o, false);
  c_invariance->add_option("--trials", trials, "number of trials");
  c_invariance->add_option("--prime", prime, "prime modulus");

  CLI::App* c_degeneration = app.add_subcommand(
      "degeneration", "diagonal-degeneration trials on commuting "
                      "triangular tuples (field rings)");
  add_common(c_degeneration, o, false);
  c_degeneration->add_option("--trials", trials, "number of trials");

  CLI::App* c_preimage = app.add_subcommand(
      "preimage", "explicit preimage of a multisymmetric polynomial as a "
                  "polynomial in the xi variables");
  add_common(c_preimage, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_charpoly->parsed()) return cmd_charpoly(o);
    if (c_ek->parsed()) return cmd_ek(o, k);
    if (c_decompose->parsed()) return cmd_decompose(o);
    if (c_witness->parsed()) return cmd_witness(o);
    if (c_invariance->parsed()) return cmd_invariance(o, trials, prime);
    if (c_degeneration->parsed()) return cmd_degeneration(o, trials);
    if (c_preimage->parsed()) return cmd_preimage(o);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const msym::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const msym::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

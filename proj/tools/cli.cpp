#include "cli.hpp"

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggp/error.hpp"
#include "ggp/gelfand_graev.hpp"
#include "ggp/hall_littlewood.hpp"
#include "ggp/serialize.hpp"

namespace ggp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CommonOptions {
  std::string format = "text";
  std::string q;
  std::string out_path;
};

struct Options {
  CommonOptions common;
  int n = 0;
  std::string basis = "h";
  int max_n = 6;
  std::vector<int> components;
  std::string input_path;
  std::string t;
  bool nonzero_root = false;
};

// Like CLI::NonNegativeNumber / PositiveNumber, with readable messages.
CLI::Validator whole_number(int minimum) {
  const std::string name = minimum == 0 ? "NONNEGATIVE" : "POSITIVE";
  return CLI::Validator(
      [minimum](std::string& value) -> std::string {
        const bool digits = !value.empty() && value.size() <= 9 &&
                            value.find_first_not_of("0123456789") == std::string::npos;
        if (digits && std::stoi(value) >= minimum) return {};
        return "expected an integer >= " + std::to_string(minimum) + ", got '" + value + "'";
      },
      name);
}

const std::vector<std::string> kBasisTags{"m", "e", "h", "p", "s"};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, CommonOptions& common, bool with_q) {
  sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  if (with_q) sub->add_option("--q", common.q, "Specialize q to an exact rational a/b");
  sub->add_option("--out", common.out_path, "Write output to this path instead of standard output");
}

bool structured(const CommonOptions& o) { return o.format == "structured"; }

std::optional<Rational> q_value(const CommonOptions& o) {
  if (o.q.empty()) return std::nullopt;
  try {
    return parse_rational(o.q);
  } catch (const Error&) {
    throw Error(ErrorCode::invalid_argument, "--q expects an integer or a/b, got '" + o.q + "'");
  }
}

std::string render(const SymFunc& f, const CommonOptions& o) {
  SymFunc shown = f;
  if (auto q = q_value(o)) shown = evaluate_at(f, *q);
  return structured(o) ? to_structured(shown) : render_text(shown) + "\n";
}

std::string cmd_rho(const Options& o) {
  return render(convert(rho(o.n), parse_basis(o.basis)), o.common);
}

std::string cmd_product(const Options& o) {
  return render(convert(product_rho(o.components), parse_basis(o.basis)), o.common);
}

std::string cmd_hl(const Options& o) {
  const HLParam t = o.t.empty() ? HLParam::inverse_q() : HLParam{LaurentPoly(parse_rational(o.t))};
  return render(convert(hl_one_row(o.n, t), parse_basis(o.basis)), o.common);
}

std::string cmd_count_irr(const Options& o) {
  const LaurentPoly count = o.nonzero_root ? count_irreducible_nonzero_root(o.n) : count_irreducible(o.n);
  const std::string name = o.nonzero_root ? "l_q" : "L_q";
  const auto q = q_value(o.common);
  if (structured(o.common)) {
    Json doc{{"i", o.n}, {"kind", name}};
    if (q) {
      doc["q"] = to_string(*q);
      doc["value"] = to_string(eval(count, *q));
    } else {
      doc["value"] = Json::parse(to_structured(count));
    }
    return doc.dump(2) + "\n";
  }
  const std::string value = q ? to_string(eval(count, *q)) : to_string(count);
  return name + "(" + std::to_string(o.n) + ") = " + value + "\n";
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) throw IoError("cannot read '" + path + "': is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buffer.str();
}

std::string cmd_to_rho(const Options& o) {
  const auto q = q_value(o.common);
  if (!q) throw Error(ErrorCode::invalid_argument, "to-rho requires --q");
  const SymFunc f = expression_value(parse_expression(read_file(o.input_path)));
  const RhoExpansion e = to_rho_basis(f, *q);
  if (structured(o.common)) return to_structured(e);
  return render_text(e) + "\ndim = " + to_string(dim_sum(e)) + "\n";
}

struct VerifyResult {
  std::string output;
  bool all_passed = true;
};

VerifyResult cmd_verify(const Options& o) {
  struct Check {
    std::string family;
    int n;
    bool passed;
  };
  std::vector<Check> checks;
  const SymFunc one = SymFunc::one();
  checks.push_back({"rho0-unit", 0,
                    rho(0) == one && rho_via_hl(0) == one && rho_via_m(0) == one && rho_via_theta(0) == one});
  for (int n = 1; n <= o.max_n; ++n) {
    checks.push_back({"four-way-agreement", n, verify_four_way(n)});
    checks.push_back({"convolution", n, verify_convolution(n)});
    checks.push_back({"moebius-product", n, verify_moebius_product(n)});
    checks.push_back({"sign-law", n, verify_sign_law(n)});
  }

  VerifyResult result;
  int failures = 0;
  for (const auto& c : checks) failures += c.passed ? 0 : 1;
  result.all_passed = failures == 0;

  if (structured(o.common)) {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back(Json{{"family", c.family}, {"n", c.n}, {"pass", c.passed}});
    result.output = Json{{"max_n", o.max_n}, {"checks", std::move(list)}, {"failures", failures}}.dump(2) + "\n";
    return result;
  }
  std::ostringstream text;
  for (const auto& c : checks) text << (c.passed ? "PASS " : "FAIL ") << c.family << " n=" << c.n << "\n";
  text << checks.size() << " checks, " << failures << " failures\n";
  result.output = text.str();
  return result;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::parse_error: return kParseError;
    case ErrorCode::degenerate_q: return kDegenerateQ;
    case ErrorCode::not_homogeneous: return kNotHomogeneous;
    case ErrorCode::internal:
    case ErrorCode::not_divisible: return kInternalError;
    default: return kArgumentError;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact plethysm images of Gelfand-Graev characteristics"};
  app.require_subcommand(1);
  Options o;

  auto* rho_cmd = app.add_subcommand("rho", "Print rho_n in a chosen basis");
  rho_cmd->add_option("n", o.n, "Degree")->required()->check(whole_number(0));
  rho_cmd->add_option("--basis", o.basis, "Output basis: m, e, h, p or s")->check(CLI::IsMember(kBasisTags));
  add_common(rho_cmd, o.common, true);

  auto* verify_cmd = app.add_subcommand("verify", "Check the rho identities up to a degree");
  verify_cmd->add_option("--max-n", o.max_n, "Largest degree to check")->check(whole_number(0));
  add_common(verify_cmd, o.common, false);

  auto* product_cmd = app.add_subcommand("product", "Print the product rho_{n_1} ... rho_{n_k}");
  product_cmd->add_option("components", o.components, "Component sizes")->required()->check(whole_number(1));
  product_cmd->add_option("--basis", o.basis, "Output basis: m, e, h, p or s")->check(CLI::IsMember(kBasisTags));
  add_common(product_cmd, o.common, true);

  auto* to_rho_cmd = app.add_subcommand("to-rho", "Expand an expression file in the rho basis at numeric q");
  to_rho_cmd->add_option("input", o.input_path, "Expression file (structured SymFunc or rho_terms)")->required();
  add_common(to_rho_cmd, o.common, true);

  auto* hl_cmd = app.add_subcommand("hl", "Print the one-row Hall-Littlewood function P_(n)(Y;t)");
  hl_cmd->add_option("n", o.n, "Degree")->required()->check(whole_number(1));
  hl_cmd->add_option("--t", o.t, "Constant parameter t (default: the twisted form, t = q^-1)");
  hl_cmd->add_option("--basis", o.basis, "Output basis: m, e, h, p or s")->check(CLI::IsMember(kBasisTags));
  add_common(hl_cmd, o.common, true);

  auto* count_cmd = app.add_subcommand("count-irr", "Print the number of monic irreducibles of degree i over F_q");
  count_cmd->add_option("i", o.n, "Degree")->required()->check(whole_number(1));
  count_cmd->add_flag("--nonzero-root", o.nonzero_root, "Exclude the polynomial x (l_q instead of L_q)");
  add_common(count_cmd, o.common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kArgumentError;
  }

  try {
    std::string output;
    int status = kSuccess;
    if (rho_cmd->parsed()) {
      output = cmd_rho(o);
    } else if (verify_cmd->parsed()) {
      auto result = cmd_verify(o);
      output = std::move(result.output);
      status = result.all_passed ? kSuccess : kIdentityFailure;
    } else if (product_cmd->parsed()) {
      output = cmd_product(o);
    } else if (to_rho_cmd->parsed()) {
      output = cmd_to_rho(o);
    } else if (hl_cmd->parsed()) {
      output = cmd_hl(o);
    } else {
      output = cmd_count_irr(o);
    }

    if (o.common.out_path.empty()) {
      out << output;
    } else {
      std::ofstream file(o.common.out_path, std::ios::binary);
      if (!file || !(file << output)) {
        err << "error: cannot write '" << o.common.out_path << "'\n";
        return kIoError;
      }
    }
    return status;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace ggp::cli

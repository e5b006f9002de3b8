// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: ggp_acceptance <path-to-ggp-binary>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "finite_field.hpp"
#include "generators.hpp"
#include "ggp/error.hpp"
#include "ggp/gelfand_graev.hpp"
#include "ggp/hall_littlewood.hpp"
#include "ggp/serialize.hpp"
#include "identities.hpp"

using namespace ggp;

namespace {

const LaurentPoly q = LaurentPoly::q();

// Collects failure descriptions; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

SymFunc h(const Partition& lambda, const LaurentPoly& c = 1) { return SymFunc::element(Basis::complete, lambda, c); }

std::string label(const Partition& lambda) { return to_string(lambda); }

void golden_values(Check& c) {
  c.expect(rho(1).terms() == h({1}, q - 1).terms(), "rho(1)");
  c.expect(rho(2).terms() == ((q - 1) * (h({2}, q + 1) - h({1, 1}))).terms(), "rho(2)");
  c.expect(rho(3).terms() == ((q - 1) * (h({3}, q * q + q + 1) - h({2, 1}, q + 2) + h({1, 1, 1}))).terms(), "rho(3)");
  c.expect(rho_coeff(3, {2, 1}) == -(q - 1) * (q + 2), "[h_{2,1}] rho_3");
  c.expect(rho_coeff(3, {1, 1, 1}) == q - 1, "[h_{1,1,1}] rho_3");
}

void four_way(Check& c) {
  for (int n = 0; n <= 8; ++n) {
    const SymFunc r = rho(n);
    const std::string at = " at n=" + std::to_string(n);
    c.expect(rho_via_hl(n).terms() == r.terms(), "rho_via_hl" + at);
    c.expect(rho_via_m(n).terms() == r.terms(), "rho_via_m" + at);
    c.expect(rho_via_theta(n).terms() == r.terms(), "rho_via_theta" + at);
  }
}

void sign_law(Check& c) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const LaurentPoly coefficient = rho_coeff(n, lambda);
      const LaurentPoly signed_c = (lambda.length() - 1) % 2 == 0 ? coefficient : -coefficient;
      bool ok = !signed_c.is_zero();
      try {
        const LaurentPoly quotient = exact_div(signed_c, q - 1);
        for (const auto& [e, a] : quotient.terms()) ok = ok && e >= 0 && a > 0 && a.get_den() == 1;
      } catch (const Error&) {
        ok = false;
      }
      c.expect(ok, "sign law at " + label(lambda));
    }
  }
}

void generating_functions(Check& c) {
  for (int n = 1; n <= 10; ++n) c.expect(verify_convolution(n), "convolution at n=" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) c.expect(verify_moebius_product(n), "Mobius product at n=" + std::to_string(n));
  for (int qv : {2, 3, 4, 5}) c.expect(testing::moebius_concrete(qv, 6, 5), "concrete Mobius at q=" + std::to_string(qv));
}

void hall_littlewood(Check& c) {
  for (const HLParam& t : {HLParam::inverse_q(), HLParam{0}}) {
    for (int r = 1; r <= 10; ++r) {
      c.expect(((1 - t.value) * hl_one_row(r, t)).terms() == qr_symfunc(r, t).terms(),
               "(1-t) P_r = q_r at r=" + std::to_string(r) + ", t=" + to_string(t.value));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    c.expect((LaurentPoly::q(n - 1) * (q - 1) * twisted_hl_one_row(n)).terms() == rho(n).terms(),
             "twisted identity at n=" + std::to_string(n));
  }
}

void symfunc_core(Check& c) {
  testing::Gen gen(2024);
  for (Basis a : kAllBases) {
    for (Basis b : kAllBases) {
      if (a == b) continue;
      const std::string pair = std::string(1, basis_tag(a)) + "->" + basis_tag(b);
      for (int d = 0; d <= 8; ++d) {
        for (const auto& lambda : partitions_of(d)) {
          const SymFunc f = SymFunc::element(a, lambda);
          c.expect(convert(convert(f, b), a).terms() == f.terms(), "roundtrip " + pair + " at " + label(lambda));
        }
      }
      const SymFunc f = gen.mixed(a, 8, 6);
      c.expect(convert(convert(f, b), a).terms() == f.terms(), "random roundtrip " + pair);
    }
  }

  for (Basis b : kAllBases) {
    for (int trial = 0; trial < 4; ++trial) {
      const SymFunc f = gen.mixed(b, 4);
      const SymFunc g = gen.mixed(b, 4);
      c.expect(omega(omega(f)).terms() == f.terms(), "omega involution");
      c.expect(omega(f * g) == omega(f) * omega(g), "omega multiplicative");
      c.expect(omega(f + g) == omega(f) + omega(g), "omega additive");

      const SymFunc small_f = gen.mixed(b, 3, 3);
      const SymFunc small_g = gen.mixed(b, 3, 3);
      for (int x = 1; x <= 3; ++x) {
        c.expect(plethysm_pb(small_f * small_g, x) == plethysm_pb(small_f, x) * plethysm_pb(small_g, x),
                 "plethysm multiplicative");
        c.expect(plethysm_pb(small_f + small_g, x) == plethysm_pb(small_f, x) + plethysm_pb(small_g, x),
                 "plethysm additive");
        c.expect(plethysm_pb(plethysm_pb(small_f, x), 2) == plethysm_pb(small_f, 2 * x), "plethysm composition");
      }
    }
  }
  for (int n = 0; n <= 8; ++n) {
    c.expect(omega(h(Partition::row(n))) == SymFunc::element(Basis::elementary, Partition::row(n)), "omega h_n = e_n");
  }

  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (const auto& mu : partitions_of(n)) {
        const LaurentPoly delta = lambda == mu ? 1 : 0;
        c.expect(inner(h(lambda), SymFunc::element(Basis::monomial, mu)) == delta,
                 "<h, m> at " + label(lambda) + ", " + label(mu));
      }
    }
  }
  c.expect(testing::cauchy_truncated(3, 4), "Cauchy identity");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void regression_data(Check& c) {
  const std::filesystem::path dir = std::filesystem::path(GGP_DATA_DIR) / "regression";
  const std::array<std::pair<const char*, int>, 4> cases{{
      {"induced_u3_arc13.json", 2},
      {"induced_u4_arc14.json", 4},
      {"induced_u4_arcs13_24.json", 4},
      {"induced_u4_arcs12_24.json", 2},
  }};
  for (const auto& [file, dim] : cases) {
    const std::string text = slurp(dir / file);
    const auto meta = nlohmann::json::parse(text);
    const Rational qv = parse_rational(meta.at("q").get<std::string>());
    const auto terms = std::get<RhoTerms>(parse_expression(text));
    const SymFunc f = expression_value(parse_expression(text));
    c.expect(f.is_homogeneous(), std::string(file) + " is homogeneous");

    const RhoExpansion e = to_rho_basis(f, qv);
    RhoExpansion stored{qv, {}};
    for (const auto& [lambda, coefficient] : terms) stored.coeffs.emplace(lambda, coefficient.coefficient(0));
    c.expect(e == stored, std::string(file) + " roundtrip");
    c.expect(dim_sum(e) == dim, std::string(file) + " dimension");
    c.expect(dim_sum(e) == parse_rational(meta.at("expected_dim").get<std::string>()),
             std::string(file) + " stored dimension");
  }
}

void counting(Check& c) {
  for (int p : {2, 3}) {
    for (int i = 1; i <= 5; ++i) {
      const auto brute = testing::count_monic_irreducible(i, p);
      const std::string at = " at q=" + std::to_string(p) + ", i=" + std::to_string(i);
      c.expect(eval(count_irreducible(i), p) == Rational(brute.all), "L_q" + at);
      c.expect(eval(count_irreducible_nonzero_root(i), p) == Rational(brute.nonzero_root), "l_q" + at);
    }
  }
}

struct Run {
  int status;
  std::string out;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

Run run_binary(const std::string& binary, const std::string& args) {
  const std::string command = shell_quote(binary) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

void cli_contract(Check& c, const std::string& binary) {
  const Run verify = run_binary(binary, "verify --max-n 6");
  c.expect(verify.status == 0, "verify --max-n 6 exits 0 (got " + std::to_string(verify.status) + ")");

  for (const char* args : {"verify --max-n 6 --format structured", "rho 5 --format structured",
                           "to-rho " GGP_DATA_DIR "/regression/induced_u4_arc14.json --q 2 --format structured"}) {
    const Run first = run_binary(binary, args);
    const Run second = run_binary(binary, args);
    c.expect(first.status == 0 && !first.out.empty() && first.out == second.out,
             std::string("byte-identical output of '") + args + "'");
  }

  const auto bad = std::filesystem::temp_directory_path() / "ggp_acceptance_bad.json";
  std::ofstream(bad) << "{\"basis\": ";
  const std::string examples = std::string(GGP_DATA_DIR) + "/examples/";
  const std::vector<std::pair<std::string, int>> paths{
      {"rho -1", 2},
      {"to-rho " + shell_quote(bad.string()) + " --q 2", 3},
      {"to-rho " + examples + "h21.json --q 1", 4},
      {"to-rho " + examples + "mixed_degree.json --q 2", 5},
      {"to-rho /nonexistent/ggp.json --q 2", 6},
  };
  std::vector<int> seen;
  for (const auto& [args, expected] : paths) {
    const int status = run_binary(binary, args).status;
    c.expect(status == expected, "'" + args + "' exits " + std::to_string(expected) + " (got " + std::to_string(status) + ")");
    seen.push_back(status);
  }
  std::sort(seen.begin(), seen.end());
  c.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "error statuses are distinct");
  c.expect(std::find(seen.begin(), seen.end(), 0) == seen.end(), "error statuses are nonzero");
  std::filesystem::remove(bad);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: ggp_acceptance <path-to-ggp>\n";
    return 2;
  }
  const std::string binary = argv[1];

  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "golden values", 1, golden_values},
      {2, "four-way agreement, n <= 8", 60, four_way},
      {3, "sign and divisibility law, n <= 10", 30, sign_law},
      {4, "generating-function identities", 60, generating_functions},
      {5, "Hall-Littlewood consistency", 0, hall_littlewood},
      {6, "symmetric-function core", 0, symfunc_core},
      {7, "regression data at q = 2", 0, regression_data},
      {8, "irreducible counts vs F_q brute force", 0, counting},
      {9, "CLI contract", 0, [&](Check& c) { cli_contract(c, binary); }},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds >= criterion.limit_seconds) {
      check.failures.push_back("took " + std::to_string(seconds) + " s");
    }

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (check.failures.empty() ? "PASS" : "FAIL") << " criterion " << criterion.id << ": " << criterion.name
         << " (" << seconds << " s";
    if (criterion.limit_seconds > 0) line << ", limit " << criterion.limit_seconds << " s";
    line << ")";
    std::cout << line.str() << "\n";
    for (const auto& f : check.failures) std::cout << "    " << f << "\n";
    failed += check.failures.empty() ? 0 : 1;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

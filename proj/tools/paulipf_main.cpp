// Command-line front end: verification suites, group generation, basis
// decomposition, exact commutants, and circuit simulation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paulipf/circuits.hpp"
#include "paulipf/pauli.hpp"
#include "paulipf/pseudofermion.hpp"
#include "paulipf/verify.hpp"
#include "paulipf/xbasis.hpp"

namespace {

using namespace paulipf;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitOverflow = 4;

/// Parses "a", "a+bi", "a-bi" or "bi" (no whitespace, 'i' suffix on the
/// imaginary part). Throws ParseError.
ComplexScalar parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex literal");
  auto to_double = [](const std::string& s) {
    size_t used = 0;
    double v;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParseError("bad number '" + s + "'");
    }
    if (used != s.size()) throw ParseError("bad number '" + s + "'");
    return v;
  };
  // A bare sign is a valid coefficient only next to the trailing 'i'.
  auto imag_coeff = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return to_double(s);
  };

  if (text.back() != 'i') return {to_double(text), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  // Split at the last top-level sign (not part of an exponent).
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') &&
        body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, imag_coeff(body)};
  return {to_double(body.substr(0, split)), imag_coeff(body.substr(split))};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

CVector parse_state(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4)
    throw ParseError("--psi0 needs 4 comma-separated complex values");
  CVector v(4);
  for (int i = 0; i < 4; ++i) v[i] = parse_complex(parts[i]);
  return v;
}

std::string format_complex(ComplexScalar z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();  // drop negative zero
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  char buf[64];
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", re);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  }
  return buf;
}

int run_verify(const std::string& scope, std::uint64_t seed,
               const std::string& out_path, const std::string& sweep_path,
               const std::vector<double>& triple) {
  std::optional<std::vector<PseudofermionParams>> sweep;
  if (!sweep_path.empty()) {
    std::ifstream in(sweep_path);
    if (!in) {
      std::cerr << "cannot open sweep file: " << sweep_path << '\n';
      return kExitIo;
    }
    sweep = read_param_sweep(in);
  }
  if (!triple.empty()) {
    if (!sweep) sweep.emplace();
    sweep->emplace_back(triple[0], triple[1], triple[2]);
  }
  if (sweep && sweep->empty()) {
    std::cerr << "sweep is empty: nothing to verify\n";
    return kExitUsage;
  }

  std::vector<CheckResult> checks;
  if (scope == "all") {
    checks = verify_all(seed);
    if (sweep) {
      std::vector<CheckResult> extra = verify_pseudofermion_suite(seed, sweep);
      for (auto& c : extra) c.name = "sweep_" + c.name;
      append(checks, std::move(extra));
    }
  } else if (scope == "group") {
    checks = verify_group_suite(seed);
  } else if (scope == "pseudofermion") {
    checks = verify_pseudofermion_suite(seed, sweep);
  } else if (scope == "xbasis") {
    checks = verify_xbasis_suite(seed);
  } else if (scope == "circuits") {
    checks = verify_circuits_suite(seed);
  } else {
    std::cerr << "unknown scope '" << scope << "'\n";
    return kExitUsage;
  }

  print_checks(std::cout, checks);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << '\n';
      return kExitIo;
    }
    write_checks_csv(out, checks);
  }
  return all_pass(checks) ? kExitOk : kExitCheckFailed;
}

int run_simulate(const std::string& system, double alpha, double mu,
                 double gamma, double b, double d, double r,
                 const std::string& psi0_text, double t_end, int steps,
                 const std::string& out_path) {
  const CVector psi0 = parse_state(psi0_text);
  CMatrix generator;
  if (system == "S") {
    generator = build_LS({alpha, mu, gamma});
  } else if (system == "T") {
    // i dPsi/dt = H_T Psi, evolved as dPsi/dt = (-i H_T) Psi.
    generator = build_HT({b, d, r}) * ComplexScalar(0.0, -1.0);
  } else {
    std::cerr << "system must be S or T\n";
    return kExitUsage;
  }

  std::vector<double> times;
  times.reserve(steps);
  const double h = t_end / (steps - 1);
  for (int k = 0; k < steps; ++k) times.push_back(k * h);

  Trajectory traj;
  try {
    traj = evolve(generator, psi0, times);
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file: " << out_path << '\n';
      return kExitIo;
    }
    write_trajectory_csv(out, traj);
    if (!out) {
      std::cerr << "write failed: " << out_path << '\n';
      return kExitIo;
    }
  } else {
    write_trajectory_csv(std::cout, traj);
  }

  if (h <= 1e-2 && steps >= 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", derivative_check(traj, generator));
    std::cout << "derivative_check_residual " << buf << '\n';
  } else {
    std::cout << "derivative_check_residual skipped (needs a uniform grid "
                 "with step <= 1e-2 and at least 3 points)\n";
  }
  return kExitOk;
}

void print_decomposition(const XDecomposition& dec,
                         const std::array<ComplexScalar, 12>* reference) {
  for (int j = 0; j < 12; ++j) {
    std::cout << "c[" << (j + 1) << "] = " << format_complex(dec.coefficients[j]);
    if (reference) {
      const double diff = std::abs(dec.coefficients[j] - (*reference)[j]);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3e", diff);
      std::cout << "  closed_form = " << format_complex((*reference)[j])
                << "  |diff| = " << buf;
    }
    std::cout << '\n';
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", dec.residual);
  std::cout << "residual " << buf << '\n';
  if (dec.residual > 1e-8)
    std::cout << "warning: residual exceeds 1e-8; target is outside the "
                 "span\n";
}

int run_decompose(const std::string& target, double alpha, double mu,
                  double gamma, double b, double d, double r,
                  const std::string& path) {
  if (target == "LS") {
    const CircuitParamsS p{alpha, mu, gamma};
    const XDecomposition dec = decompose_in_xbasis(build_LS(p));
    const auto ref = ls_x_coefficients(p);
    print_decomposition(dec, &ref);
    // The alternate slot-9 sign convention (alpha_9 = -alpha mu/(2i)) does
    // not reconstruct L_S; report its distance from the fitted value.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e",
                  std::abs(dec.coefficients[8] + ref[8]));
    std::cout << "INFO alpha9_sign_alternate_gap " << buf << '\n';
  } else if (target == "HT") {
    const CircuitParamsT p{b, d, r};
    const XDecomposition dec = decompose_in_xbasis(build_HT(p));
    const auto ref = ht_x_coefficients(p);
    print_decomposition(dec, &ref);
    // Alternate list carrying the i*r weight on slot 6 instead of slot 12.
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e",
                  std::abs(dec.coefficients[5] - ref[11]));
    std::cout << "INFO beta6_alternate_gap " << buf << '\n';
  } else if (target == "file") {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open matrix file: " << path << '\n';
      return kExitIo;
    }
    std::string all, tok;
    std::ostringstream ss;
    ss << in.rdbuf();
    all = ss.str();
    for (char& c : all)
      if (c == '\n' || c == '\r' || c == '\t' || c == ' ') c = ',';
    std::vector<ComplexScalar> entries;
    for (const std::string& piece : split(all, ','))
      if (!piece.empty()) entries.push_back(parse_complex(piece));
    if (entries.size() != 16)
      throw ParseError("matrix file must contain 16 comma-separated "
                       "complex entries, got " +
                       std::to_string(entries.size()));
    CMatrix m(4, 4);
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = entries[k];
    print_decomposition(decompose_in_xbasis(m), nullptr);
  } else {
    std::cerr << "target must be LS, HT or file\n";
    return kExitUsage;
  }
  return kExitOk;
}

int run_group(const std::string& file, const std::string& preset) {
  std::vector<PauliElement> gens;
  if (!preset.empty()) {
    using L = PauliLetter;
    if (preset == "p1") {
      gens = {PauliElement::single(L::X), PauliElement::single(L::Y),
              PauliElement::single(L::Z)};
    } else if (preset == "p2") {
      gens = {PauliElement::two(L::X, L::I), PauliElement::two(L::Y, L::I),
              PauliElement::two(L::Z, L::I), PauliElement::two(L::I, L::X),
              PauliElement::two(L::I, L::Y), PauliElement::two(L::I, L::Z)};
    } else {
      std::cerr << "preset must be p1 or p2\n";
      return kExitUsage;
    }
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open generator file: " << file << '\n';
      return kExitIo;
    }
    gens = read_generator_file(in);
    if (gens.empty()) {
      std::cerr << "generator file is empty\n";
      return kExitUsage;
    }
  }
  const FiniteMatrixGroup g = generate_group(gens);
  std::cout << "order " << g.order() << '\n';
  for (const auto& e : g.elements()) std::cout << e.to_string() << '\n';
  return kExitOk;
}

int run_commutant(const std::string& subset) {
  const XBasis& xb = XBasis::instance();
  std::vector<CMatrix> mats;
  if (subset.empty()) {
    mats = xb.mats_vector();
  } else {
    for (const std::string& tok : split(subset, ',')) {
      size_t used = 0;
      int j = 0;
      try {
        j = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw ParseError("bad index '" + tok + "'");
      }
      if (used != tok.size() || j < 1 || j > 12)
        throw ParseError("matrix indices must be 1..12, got '" + tok + "'");
      mats.push_back(xb.mat(j - 1));
    }
  }
  const CommutantResult res = commutant_dimension(mats);
  std::cout << "dimension " << res.dim << '\n';
  for (int k = 0; k < res.dim; ++k) {
    std::cout << "basis[" << k << "]\n";
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j)
        std::cout << (j ? " " : "  ") << res.basis[k](i, j).to_string();
      std::cout << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-group and pseudofermion verification toolkit"};
  app.require_subcommand(1);

  // verify
  std::string scope = "all", out_path, sweep_path;
  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "run invariant check suites");
  verify->add_option("--scope", scope,
                     "all|group|pseudofermion|xbasis|circuits");
  verify->add_option("--seed", seed, "seed for randomized sweeps");
  verify->add_option("--out", out_path, "write a CSV summary here");
  verify->add_option("--sweep", sweep_path,
                     "parameter file (theta delta omega_abs per line)");
  std::vector<double> triple;
  verify->add_option("--params", triple,
                     "single triple: theta delta omega_abs")
      ->expected(3);

  // simulate
  std::string system, psi0_text = "1,0,0,0", sim_out;
  double alpha = 1.0, mu = 0.0, gamma = 0.0;
  double b = 1.0, d = 0.0, r = 0.0;
  double t_end = 1.0;
  int steps = 0;
  auto* simulate = app.add_subcommand("simulate", "evolve a circuit state");
  simulate->add_option("system", system, "S or T")->required();
  simulate->add_option("--alpha", alpha, "system S alpha");
  simulate->add_option("--mu", mu, "system S mu");
  simulate->add_option("--gamma", gamma, "system S gamma");
  simulate->add_option("--b", b, "system T b");
  simulate->add_option("--d", d, "system T d");
  simulate->add_option("--r", r, "system T r");
  simulate->add_option("--psi0", psi0_text, "initial state, 4 complex values");
  simulate->add_option("--t-end", t_end, "final time")->required();
  simulate->add_option("--steps", steps, "number of grid points (>= 2)")
      ->required();
  simulate->add_option("--out", sim_out, "CSV output path (default stdout)");

  // decompose
  std::string target, matrix_path;
  auto* decompose =
      app.add_subcommand("decompose", "coefficients over the X basis");
  decompose->add_option("target", target, "LS, HT or file")->required();
  decompose->add_option("path", matrix_path,
                        "matrix file (16 comma-separated complex entries)");
  decompose->add_option("--alpha", alpha, "L_S alpha");
  decompose->add_option("--mu", mu, "L_S mu");
  decompose->add_option("--gamma", gamma, "L_S gamma");
  decompose->add_option("--b", b, "H_T b");
  decompose->add_option("--d", d, "H_T d");
  decompose->add_option("--r", r, "H_T r");

  // group
  std::string gen_file, preset;
  auto* group = app.add_subcommand("group", "closure of Pauli generators");
  group->add_option("file", gen_file,
                    "generator file, one [+|-][i]LETTERS element per line");
  group->add_option("--preset", preset, "p1 or p2");

  // commutant
  std::string subset;
  auto* commutant =
      app.add_subcommand("commutant", "exact commutant of X matrices");
  commutant->add_option("--mats", subset,
                        "comma-separated 1-based indices (default: all 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed())
      return run_verify(scope, seed, out_path, sweep_path, triple);
    if (simulate->parsed()) {
      if (steps < 2 || !(t_end > 0.0)) {
        std::cerr << "simulate needs --steps >= 2 and --t-end > 0\n";
        return kExitUsage;
      }
      return run_simulate(system, alpha, mu, gamma, b, d, r, psi0_text, t_end,
                          steps, sim_out);
    }
    if (decompose->parsed()) {
      if (target == "file" && matrix_path.empty()) {
        std::cerr << "decompose file needs a path\n";
        return kExitUsage;
      }
      return run_decompose(target, alpha, mu, gamma, b, d, r, matrix_path);
    }
    if (group->parsed()) {
      if (gen_file.empty() == preset.empty()) {
        std::cerr << "group needs exactly one of: a generator file, "
                     "--preset\n";
        return kExitUsage;
      }
      return run_group(gen_file, preset);
    }
    if (commutant->parsed()) return run_commutant(subset);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateParams& e) {
    std::cerr << "bad parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

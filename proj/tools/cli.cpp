/*
 * Copyright 2026 The framelet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "framelet/cascade.hpp"
#include "framelet/errors.hpp"
#include "framelet/filter_bank.hpp"
#include "framelet/json_io.hpp"
#include "framelet/reference_banks.hpp"

namespace framelet::cli {
namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string rational_str(Rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string support_str(const LaurentPoly& p) {
  if (p.is_zero()) return "[]";
  return "[" + std::to_string(p.low()) + ", " + std::to_string(p.high()) + "]";
}

PseudoSplineParams params_of(const RunConfig& cfg) {
  if (!cfg.d || !cfg.m || !cfg.n) throw InvalidArgument("need -d, -m and -n");
  PseudoSplineParams p{*cfg.d, *cfg.m, *cfg.n};
  p.validate();
  return p;
}

bool has_params(const RunConfig& cfg) { return cfg.d || cfg.m || cfg.n; }

// Bank named by --fixture, read from --in, or constructed from -d -m -n.
FilterBank load_bank(const RunConfig& cfg) {
  const int sources = (cfg.fixture.empty() ? 0 : 1) + (cfg.input.empty() ? 0 : 1) + (has_params(cfg) ? 1 : 0);
  if (sources == 0) throw InvalidArgument("no filter bank given: use --in, --fixture or -d/-m/-n");
  if (sources > 1) throw InvalidArgument("give exactly one of --in, --fixture and -d/-m/-n");
  if (!cfg.fixture.empty()) return fixture(cfg.fixture);
  if (!cfg.input.empty()) return read_bank(cfg.input);
  return construct(params_of(cfg));
}

void print_table(const FilterBank& bank, const VerificationReport* rep, std::ostream& out) {
  out << "d=" << bank.d << " m=" << bank.m << " n=" << bank.n << " L=" << bank.L();
  if (bank.trace) out << " J=" << bank.trace->J;
  out << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %-12s %-4s %-4s %s\n", "filter", "support", "vm", "eps", "center");
  out << line;
  std::string c0 = "-";
  if (const auto s = sym_of(bank.lowpass); s && !s->is_wildcard()) c0 = rational_str(Rational::make(s->center2, bank.d - 1));
  std::snprintf(line, sizeof line, "%-8s %-12s %-4s %-4s %s\n", "a0", support_str(bank.lowpass).c_str(), "-", "+1",
                c0.c_str());
  out << line;
  for (int l = 0; l < bank.L(); ++l) {
    const auto& hp = bank.highpass[static_cast<std::size_t>(l)];
    const std::string vm = rep && l < static_cast<int>(rep->vm_orders.size())
                               ? std::to_string(rep->vm_orders[static_cast<std::size_t>(l)])
                               : "-";
    std::snprintf(line, sizeof line, "%-8s %-12s %-4s %-4s %s\n", ("a" + std::to_string(l + 1)).c_str(),
                  support_str(hp.poly).c_str(), vm.c_str(), hp.epsilon > 0 ? "+1" : "-1",
                  rational_str(hp.center).c_str());
    out << line;
  }
}

void print_report(const VerificationReport& rep, std::ostream& out) {
  const bool dual_only = rep.symmetry_ok.empty() && rep.biorthogonal_residual;
  if (!dual_only) {
    out << "uep_residual   " << fmt("%.3e", rep.uep_residual) << '\n';
    out << "system_vm      " << rep.system_vm << '\n';
    out << "vm_orders     ";
    for (int v : rep.vm_orders) out << ' ' << v;
    out << '\n';
    out << "symmetry      ";
    for (bool b : rep.symmetry_ok) out << (b ? " ok" : " FAIL");
    out << '\n';
    out << "support        " << (rep.support_ok ? "ok" : "FAIL") << '\n';
    out << "vm_bound       " << (rep.vm_ok ? "ok" : "FAIL") << '\n';
    out << "orthogonal     " << (rep.orthogonal ? "yes" : "no") << '\n';
  }
  out << "lowpass_sym    " << (rep.lowpass_symmetric ? "ok" : "FAIL") << '\n';
  if (rep.biorthogonal_residual) out << "biorthogonal   " << fmt("%.3e", *rep.biorthogonal_residual) << '\n';
  out << "tolerance      " << fmt("%.1e", rep.tol) << '\n';
  out << "result         " << (rep.passed() ? "PASS" : "FAIL") << '\n';
}

void write_csv(const std::filesystem::path& path, const std::string& name, const SampledFunction& f, int d,
               int levels, const std::string& note) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("cannot open '" + path.string() + "' for writing");
  os << "# meta function=" << name << " d=" << d << " levels=" << levels << " start=" << rational_str(f.start())
     << " step=" << rational_str(f.step()) << " points=" << f.values.size() << note << '\n';
  os << "t,re,im\n";
  char line[96];
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", f.t(i), f.values[i].real(), f.values[i].imag());
    os << line;
  }
  if (!os) throw InvalidArgument("failed writing '" + path.string() + "'");
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBreakdown;
  } catch (const NumericalBreakdown& e) {
    err << "numerical breakdown: " << e.what() << '\n';
    return kBreakdown;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kBreakdown;
  }
}

}  // namespace

double effective_tolerance(const RunConfig& cfg) {
  double tol = kVerifyTol;
  if (const char* env = std::getenv("FRAMELET_TOL"); env && *env) {
    char* end = nullptr;
    tol = std::strtod(env, &end);
    if (end == env || *end != '\0') throw InvalidArgument(std::string("FRAMELET_TOL is not a number: ") + env);
  }
  if (cfg.tol) tol = *cfg.tol;
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("tolerance must be positive");
  return tol;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double tol = effective_tolerance(cfg);
    const FilterBank bank = construct(params_of(cfg));
    const VerificationReport rep = verify(bank, tol);
    if (!cfg.output.empty()) write_bank(cfg.output, bank, cfg.trace);
    print_table(bank, &rep, out);
    out << "uep_residual " << fmt("%.3e", rep.uep_residual) << "  system_vm " << rep.system_vm << '\n';
    if (!cfg.output.empty()) out << "wrote " << cfg.output << '\n';
    if (!rep.passed()) {
      err << "constructed bank failed verification\n";
      return kVerifyFailed;
    }
    return kOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double tol = effective_tolerance(cfg);
    const FilterBank bank = load_bank(cfg);
    const VerificationReport rep = verify(bank, tol);
    print_report(rep, out);
    return rep.passed() ? kOk : kVerifyFailed;
  });
}

int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const double tol = effective_tolerance(cfg);
    const FilterBank bank = load_bank(cfg);
    const VerificationReport rep = verify(bank, tol);
    if (!rep.passed()) {
      print_report(rep, err);
      err << "bank failed verification; nothing plotted\n";
      return kVerifyFailed;
    }
    const std::filesystem::path dir = cfg.output.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.output);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw InvalidArgument("cannot create '" + dir.string() + "': " + ec.message());

    const CascadeResult res = cascade(bank, cfg.levels);
    const auto& sd = res.refinement.sup_diff;
    std::string note = sd.empty() ? "" : " sup_diff=" + fmt("%.3e", sd.back());
    if (res.refinement.diverging) {
      note += " warning=nonconvergent";
      err << "warning: cascade iteration does not appear to converge\n";
    }
    const auto emit = [&](const std::string& name, const SampledFunction& f) {
      const auto path = dir / (name + ".csv");
      write_csv(path, name, f, bank.d, cfg.levels, note);
      out << "wrote " << path.string() << '\n';
    };
    emit("phi", res.refinement.phi);
    for (std::size_t l = 0; l < res.psi.size(); ++l) emit("psi" + std::to_string(l + 1), res.psi[l]);
    if (bank.dual_lowpass) emit("phi_dual", refine(*bank.dual_lowpass, bank.d, cfg.levels).phi);
    return kOk;
  });
}

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.fixture.empty() && cfg.input.empty() && !has_params(cfg)) {
      out << kGeneratorVersion << '\n';
      out << "dilation 2.." << kMaxDilation << ", sum rules 1.." << kMaxSumRules << ", 1 <= 2n-1 <= m\n";
      out << "levels 0.." << kMaxLevels << " (d^levels <= " << kMaxGrid << ")\n";
      out << "fixtures:";
      for (const auto& f : fixture_names()) out << ' ' << f;
      out << '\n';
      return kOk;
    }
    const FilterBank bank = load_bank(cfg);
    print_table(bank, nullptr, out);
    if (bank.dual_lowpass) out << "dual     " << support_str(*bank.dual_lowpass) << '\n';
    out << "generator " << bank.generator << '\n';
    if (!cfg.output.empty()) {
      write_bank(cfg.output, bank, cfg.trace);
      out << "wrote " << cfg.output << '\n';
    }
    return kOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric complex tight wavelet frames from pseudo-splines", "framelet"};
  app.require_subcommand(1);
  RunConfig cfg;
  int d = 0, m = 0, n = 0;
  double tol = 0.0;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("-d,--dilation", d, "dilation factor");
    sub->add_option("-m,--sum-rules", m, "order of sum rules");
    sub->add_option("-n,--moments-half", n, "wavelets get 2n-1 vanishing moments");
  };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", tol, "verification tolerance"); };
  auto add_source = [&](CLI::App* sub) {
    sub->add_option("-i,--in", cfg.input, "filter bank JSON");
    sub->add_option("--fixture", cfg.fixture, "built-in reference bank");
  };

  CLI::App* construct_cmd = app.add_subcommand("construct", "build a filter bank");
  add_params(construct_cmd);
  add_tol(construct_cmd);
  construct_cmd->add_option("-o,--out", cfg.output, "output JSON path");
  construct_cmd->add_flag("--trace", cfg.trace, "store the extension factors in the JSON");

  CLI::App* verify_cmd = app.add_subcommand("verify", "check a filter bank");
  add_params(verify_cmd);
  add_source(verify_cmd);
  add_tol(verify_cmd);

  CLI::App* plot_cmd = app.add_subcommand("plot", "sample phi and psi to CSV");
  add_params(plot_cmd);
  add_source(plot_cmd);
  add_tol(plot_cmd);
  plot_cmd->add_option("-o,--out", cfg.output, "output directory");
  plot_cmd->add_option("--levels", cfg.levels, "refinement levels")->check(CLI::Range(0, kMaxLevels));

  CLI::App* info_cmd = app.add_subcommand("info", "describe the tool or a bank");
  add_params(info_cmd);
  add_source(info_cmd);
  info_cmd->add_option("-o,--out", cfg.output, "write the bank as JSON");
  info_cmd->add_flag("--trace", cfg.trace, "include the extension factors when writing");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--dilation")) cfg.d = d;
    if (sub->count("--sum-rules")) cfg.m = m;
    if (sub->count("--moments-half")) cfg.n = n;
    if (sub->get_option_no_throw("--tol") && sub->count("--tol")) cfg.tol = tol;
  }
  if (has_params(cfg)) {
    const int code = guarded(err, [&] {
      params_of(cfg);
      return kOk;
    });
    if (code != kOk) return code;
  }

  if (construct_cmd->parsed()) {
    cfg.command = Command::construct;
    return cmd_construct(cfg, out, err);
  }
  if (verify_cmd->parsed()) {
    cfg.command = Command::verify;
    return cmd_verify(cfg, out, err);
  }
  if (plot_cmd->parsed()) {
    cfg.command = Command::plot;
    return cmd_plot(cfg, out, err);
  }
  cfg.command = Command::info;
  return cmd_info(cfg, out, err);
}

}  // namespace framelet::cli

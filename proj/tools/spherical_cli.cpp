// Command line front end.
//
// Exit status: 0 success or PASS, 1 verification mismatch, 2 invalid input
// or usage error.

#include "spherical/arch.hpp"
#include "spherical/cache.hpp"
#include "spherical/json_io.hpp"
#include "spherical/kostka.hpp"
#include "spherical/lseries.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spherical;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Common {
  std::string group = "gl2";
  std::string datum_file;
  std::string rho = "std";
  int n = 4;
  int jobs = 1;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t weyl_cap = kDefaultWeylCap;
  bool pretty = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("invalid JSON in " + path);
  return j;
}

std::unique_ptr<GroupContext> make_context(const Common& c) {
  RootDatum rd = c.datum_file.empty() ? RootDatum::preset(c.group)
                                      : root_datum_from_json(read_json_file(c.datum_file));
  auto ctx = std::make_unique<GroupContext>(std::move(rd), c.weyl_cap);
  if (!c.no_cache) {
    std::filesystem::path dir = c.cache_dir.empty() ? KostkaDiskCache::default_dir()
                                                    : std::filesystem::path(c.cache_dir);
    if (!dir.empty()) ctx->attach_cache(std::make_shared<KostkaDiskCache>(dir));
  }
  return ctx;
}

std::shared_ptr<KostkaDiskCache> open_cache(const Common& c) {
  std::filesystem::path dir = c.cache_dir.empty() ? KostkaDiskCache::default_dir()
                                                  : std::filesystem::path(c.cache_dir);
  if (dir.empty()) throw InvalidInput("no cache directory: pass --cache-dir or set SPHERICAL_CACHE_DIR");
  return std::make_shared<KostkaDiskCache>(dir);
}

void emit(const Common& c, const json& j) { std::cout << (c.pretty ? j.dump(2) : j.dump()) << "\n"; }

// "1,0" is a basis element; anything else names a JSON file.
HeckeElement hecke_arg(const GroupContext& ctx, const std::string& text) {
  if (text.find_first_not_of("-0123456789,() ") == std::string::npos)
    return basis_element(ctx, parse_weight(text));
  HeckeElement f = hecke_from_json(read_json_file(text));
  validate(ctx, f);
  return f;
}

arch::cplx parse_complex(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {std::stod(text), 0};
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw InvalidInput("bad complex number " + text + " (use re or re:im)");
  }
}

std::vector<arch::cplx> parse_complex_list(const std::string& text) {
  std::vector<arch::cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

int two_s_of(const std::string& text) {
  Rational s = parse_rational(text);
  Rational t = s * 2;
  if (boost::multiprecision::denominator(t) != 1)
    throw InvalidInput("--specialize needs a half-integer");
  return boost::multiprecision::numerator(t).convert_to<int>();
}

arch::Field field_of(const std::string& f) {
  if (f == "real") return arch::Field::real;
  if (f == "complex") return arch::Field::complex;
  throw InvalidInput("field must be real or complex");
}

json cplx_json(arch::cplx z) { return {z.real(), z.imag()}; }

json factor_json(const arch::FactorValue& v) {
  return {{"value", cplx_json(v.value)}, {"pole", v.pole}, {"zero", v.zero}};
}

int report_exit(const Common& c, const VerifyReport& r) {
  emit(c, to_json(r));
  return r.pass ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical Hecke algebra, Satake transform and rho-Fourier kernel toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--group", c.group, "preset: gl1..gl9, or A1..A8, B2.., C2.., D3.., G2");
  app.add_option("--datum", c.datum_file, "root datum JSON file (overrides --group)");
  app.add_option("--rho", c.rho, "representation: std or a highest weight a,b,...");
  app.add_option("--N", c.n, "truncation grade")->check(CLI::NonNegativeNumber);
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", c.cache_dir, "Kostka cache directory (default $SPHERICAL_CACHE_DIR)");
  app.add_flag("--no-cache", c.no_cache, "do not use the persistent Kostka cache");
  app.add_option("--weyl-cap", c.weyl_cap, "largest Weyl group to enumerate");
  app.add_flag("--pretty", c.pretty, "indent JSON output");

  int exit_code = 0;
  auto run = [&](auto body) { return [&, body] { exit_code = body(); }; };

  // basic
  auto* basic = app.add_subcommand("basic", "the basic function 1_rho on grades 0..N");
  std::string specialize;
  basic->add_option("--specialize", specialize, "substitute a half-integer s into 1_{rho,s}");
  basic->callback(run([&] {
    auto ctx = make_context(c);
    RepSpec rho = parse_rep(*ctx, c.rho);
    HeckeElement f = basic_function(*ctx, rho, c.n, c.jobs);
    if (!specialize.empty()) f = f.twisted(1, 0).specialized(two_s_of(specialize));
    emit(c, to_json(f));
    return 0;
  }));

  // kostka
  auto* kostka = app.add_subcommand("kostka", "Lusztig's q-analogue K_{lambda mu}(q)");
  std::string lam_text, mu_text;
  bool kostka_json = false;
  kostka->add_option("--lambda", lam_text)->required();
  kostka->add_option("--mu", mu_text)->required();
  kostka->add_flag("--json", kostka_json, "print [[exp, coeff], ...]");
  kostka->callback(run([&] {
    auto ctx = make_context(c);
    QPoly k = lusztig_q_analogue(*ctx, parse_weight(lam_text), parse_weight(mu_text));
    if (kostka_json)
      emit(c, to_json(k));
    else
      std::cout << k.str() << "\n";
    return 0;
  }));

  // satake
  auto* sat = app.add_subcommand("satake", "Satake transform and its inverse");
  std::string sat_input;
  bool inverse = false;
  sat->add_option("--mu", mu_text, "basis element 1_{K mu K}");
  sat->add_option("--input", sat_input, "JSON element to transform");
  sat->add_flag("--inverse", inverse, "input is a character series");
  sat->callback(run([&] {
    auto ctx = make_context(c);
    if (inverse) {
      SatakeImage s = sat_input.empty() ? character_element(*ctx, parse_weight(mu_text))
                                        : satake_from_json(read_json_file(sat_input));
      emit(c, to_json(inverse_satake(*ctx, s)));
    } else {
      if (sat_input.empty() && mu_text.empty()) throw InvalidInput("give --mu or --input");
      HeckeElement f = sat_input.empty() ? basis_element(*ctx, parse_weight(mu_text))
                                         : hecke_from_json(read_json_file(sat_input));
      emit(c, to_json(satake(*ctx, f)));
    }
    return 0;
  }));

  // convolve
  auto* conv = app.add_subcommand("convolve", "convolution of two Hecke elements");
  std::string lhs, rhs;
  conv->add_option("--lhs", lhs, "weight a,b,... or JSON file")->required();
  conv->add_option("--rhs", rhs, "weight a,b,... or JSON file")->required();
  conv->callback(run([&] {
    auto ctx = make_context(c);
    emit(c, to_json(convolve(*ctx, hecke_arg(*ctx, lhs), hecke_arg(*ctx, rhs))));
    return 0;
  }));

  // kernel
  auto* kernel = app.add_subcommand("kernel", "the Fourier kernel Phi_s, s kept as X = q^{-s}");
  kernel->callback(run([&] {
    auto ctx = make_context(c);
    emit(c, to_json(gamma_kernel(*ctx, parse_rep(*ctx, c.rho), c.n, c.jobs)));
    return 0;
  }));

  // verify
  auto* verify = app.add_subcommand("verify", "coefficientwise verification up to grade N");
  verify->require_subcommand(1);
  verify->fallthrough();
  std::string inject;
  auto verify_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = verify->add_subcommand(name, help);
    sub->add_option("--inject-basic", inject, "use this basic function (JSON) instead of computing it");
    sub->callback(run([&, fn] {
      auto ctx = make_context(c);
      RepSpec rho = parse_rep(*ctx, c.rho);
      VerifyOptions opts;
      opts.jobs = c.jobs;
      if (!inject.empty()) opts.basic_override = hecke_from_json(read_json_file(inject));
      return report_exit(c, fn(*ctx, rho, c.n, opts));
    }));
  };
  verify_cmd("fixed-point", "F(1_{rho,-l/2}) = 1_{rho,-l/2}", verify_fixed_point);
  verify_cmd("unitarity", "S(Phi)(c) S(Phi^vee)(c q^{-(l+1)}) = 1", verify_unitarity);
  verify_cmd("gj-standard", "GL(n) standard: 1_{rho,-(n-1)/2} is the integral-matrix indicator",
             verify_gj_standard);

  // zeta
  auto* zeta = app.add_subcommand("zeta", "zeta integral of 1_{rho,-l/2} * h");
  std::string h_text, c_text, s_text = "2";
  double q = 3;
  bool over_l = false;
  zeta->add_option("--test-fn", h_text, "weight or JSON file (default: identity)");
  zeta->add_option("--c", c_text, "torus element, comma separated re or re:im");
  zeta->add_option("--q", q, "residue field size");
  zeta->add_option("--s", s_text, "complex s as re or re:im");
  zeta->add_flag("--over-l", over_l, "print Z / L as a character polynomial in X");
  zeta->callback(run([&] {
    auto ctx = make_context(c);
    RepSpec rho = parse_rep(*ctx, c.rho);
    HeckeElement h = h_text.empty() ? identity_hecke(*ctx) : hecke_arg(*ctx, h_text);
    if (over_l) {
      emit(c, to_json(zeta_over_l(*ctx, rho, h)));
      return 0;
    }
    if (c_text.empty()) throw InvalidInput("--c is required");
    auto cv = parse_complex_list(c_text);
    auto s = parse_complex(s_text);
    ZetaValue z = zeta_closed_form(*ctx, rho, h, cv, q, s);
    auto l = check_rho(*ctx, rho).l;
    SatakeImage series = satake(*ctx, materialize(*ctx, rho, {h}, c.n).twisted(1, -static_cast<int>(l)));
    NumericEval ev = eval_numeric(*ctx, series, cv, q, s, c.n);
    emit(c, {{"closed_form", cplx_json(z.value)},
             {"divergent", z.divergent},
             {"series", cplx_json(ev.value)},
             {"series_N", c.n},
             {"tail_bound", ev.tail_bound},
             {"converged", ev.converged},
             {"relative_gap", std::abs(ev.value - z.value) / std::abs(z.value)}});
    return 0;
  }));

  // decomp
  auto* decomp = app.add_subcommand("decomp", "decompose Sym^k, wedge^k or tensor products");
  int sym_k = -1, ext_k = -1;
  std::string tensor;
  decomp->add_option("--sym", sym_k, "Sym^k of rho");
  decomp->add_option("--ext", ext_k, "wedge^k of rho");
  decomp->add_option("--tensor", tensor, "V(a) (x) V(b), given as a;b");
  decomp->callback(run([&] {
    auto ctx = make_context(c);
    if (!tensor.empty()) {
      auto semi = tensor.find(';');
      if (semi == std::string::npos) throw InvalidInput("--tensor expects a;b");
      emit(c, to_json(tensor_decomp(*ctx, parse_weight(tensor.substr(0, semi)),
                                    parse_weight(tensor.substr(semi + 1)))));
      return 0;
    }
    RepSpec rho = parse_rep(*ctx, c.rho);
    if (sym_k >= 0) emit(c, to_json(sym_power_decomp(*ctx, rho, sym_k)));
    else if (ext_k >= 0) emit(c, to_json(ext_power_decomp(*ctx, rho, ext_k)));
    else throw InvalidInput("give --sym, --ext or --tensor");
    return 0;
  }));

  // arch
  auto* ar = app.add_subcommand("arch", "archimedean factors and thresholds");
  ar->require_subcommand(1);
  ar->fallthrough();
  std::string field = "real", lambda_text, p_text = "2", which = "basic", csv_path;
  std::string as = "1";
  double sx = 2, sy = 100;
  int dn = 0, t = 4;
  std::string z_text = "300";
  arch::ProbeGrid grid;
  auto weights_of = [&](const GroupContext& ctx) { return parse_rep(ctx, c.rho).weight_list(); };
  auto lambda_of = [&](const GroupContext& ctx) {
    std::vector<arch::cplx> lam(ctx.datum().coweight_rank(), 0);
    if (!lambda_text.empty()) lam = parse_complex_list(lambda_text);
    return lam;
  };
  auto* lf = ar->add_subcommand("lfactor", "L(s, pi_lambda, rho)");
  auto* gf = ar->add_subcommand("gamma", "gamma factor by two routes");
  for (auto* sub : {lf, gf}) {
    sub->add_option("--field", field);
    sub->add_option("--s", as, "complex s as re or re:im");
    sub->add_option("--lambda", lambda_text, "spectral parameter, comma separated");
  }
  lf->callback(run([&] {
    auto ctx = make_context(c);
    arch::ArchParams p{field_of(field), parse_complex(as), lambda_of(*ctx), weights_of(*ctx), 0};
    emit(c, factor_json(arch::lfactor(p)));
    return 0;
  }));
  gf->callback(run([&] {
    auto ctx = make_context(c);
    RepSpec rho = parse_rep(*ctx, c.rho);
    arch::ArchParams p{field_of(field), parse_complex(as), lambda_of(*ctx), rho.weight_list(),
                       l_constant(ctx->datum(), rho)};
    arch::GammaFactor g = arch::gamma_factor(p);
    emit(c, {{"route1", factor_json(g.route1)}, {"route2", factor_json(g.route2)},
             {"discrepancy", g.discrepancy}});
    return 0;
  }));
  auto* st = ar->add_subcommand("stirling", "Stirling ratio, or the derivative ratio with --n");
  st->add_option("--x", sx);
  st->add_option("--y", sy);
  st->add_option("--n", dn, "derivative order for Gamma^(n)/(Gamma log^n)");
  st->add_option("--z", z_text, "point for the derivative ratio, re or re:im");
  st->callback(run([&] {
    if (dn > 0)
      emit(c, {{"derivative_ratio", cplx_json(arch::derivative_ratio(dn, parse_complex(z_text)))}});
    else
      emit(c, {{"stirling_ratio", arch::stirling_ratio(sx, sy)}});
    return 0;
  }));
  auto* th = ar->add_subcommand("threshold", "decay threshold, exact");
  th->add_option("--p", p_text, "0 < p <= 2");
  th->add_option("--which", which, "basic or kernel");
  th->add_option("--field", field);
  th->callback(run([&] {
    auto ctx = make_context(c);
    if (which != "basic" && which != "kernel") throw InvalidInput("--which must be basic or kernel");
    Rational r = arch::threshold(*ctx, parse_rep(*ctx, c.rho), parse_rational(p_text),
                                 which == "basic" ? arch::Which::basic : arch::Which::kernel, field_of(field));
    std::cout << to_string(r) << "\n";
    return 0;
  }));
  auto* cr = ar->add_subcommand("crho", "the weight-norm constant C_rho, exact");
  cr->callback(run([&] {
    auto ctx = make_context(c);
    std::cout << to_string(arch::c_rho_constant(weights_of(*ctx))) << "\n";
    return 0;
  }));
  auto* pr = ar->add_subcommand("probe", "sample the Schwartz seminorm of L(s, pi_lambda, rho)");
  pr->add_option("--s", as);
  pr->add_option("--p", p_text);
  pr->add_option("--t", t);
  pr->add_option("--field", field);
  pr->add_option("--radius", grid.radius);
  pr->add_option("--shells", grid.shells);
  pr->add_option("--directions", grid.directions);
  pr->add_option("--csv", csv_path, "write per-shell maxima as CSV");
  pr->callback(run([&] {
    auto ctx = make_context(c);
    arch::ProbeReport r = arch::seminorm_probe(*ctx, parse_rep(*ctx, c.rho), parse_complex(as),
                                               parse_rational(p_text), t, grid, field_of(field), c.jobs);
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      out << "radius,max_log10\n";
      for (std::size_t i = 0; i < r.shell_radius.size(); ++i)
        out << r.shell_radius[i] << "," << r.shell_max_log10[i] << "\n";
    }
    emit(c, {{"max_log10", r.max_log10},
             {"inner_max_log10", r.inner_max_log10},
             {"last_shell_max_log10", r.last_shell_max_log10},
             {"decaying", r.decaying},
             {"pole_flag", r.pole_flag},
             {"samples", r.samples}});
    return 0;
  }));

  // cache
  auto* cache = app.add_subcommand("cache", "persistent Kostka cache");
  cache->require_subcommand(1);
  cache->fallthrough();
  std::string cache_file;
  cache->add_subcommand("stats", "entry count")->callback(run([&] {
    auto k = open_cache(c);
    emit(c, {{"file", k->file().string()}, {"entries", k->size()}, {"ignored_lines", k->ignored_lines()}});
    return 0;
  }));
  cache->add_subcommand("clear", "delete all entries")->callback(run([&] {
    open_cache(c)->clear();
    return 0;
  }));
  auto* exp = cache->add_subcommand("export", "write canonical records");
  exp->add_option("--out", cache_file, "file (default stdout)");
  exp->callback(run([&] {
    auto k = open_cache(c);
    if (cache_file.empty()) {
      k->export_to(std::cout);
    } else {
      std::ofstream out(cache_file);
      k->export_to(out);
    }
    return 0;
  }));
  auto* imp = cache->add_subcommand("import", "merge records from a file");
  imp->add_option("--in", cache_file, "file")->required();
  imp->callback(run([&] {
    auto k = open_cache(c);
    std::ifstream in(cache_file);
    if (!in) throw InvalidInput("cannot open " + cache_file);
    emit(c, {{"accepted", k->import_from(in)}});
    return 0;
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const WindowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const arch::PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return exit_code;
}

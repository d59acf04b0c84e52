// hlab: exact homological computations for tilting-type quiver algebras.
//
// Subcommands: build, hh, gldim, ext, bott, fixed-point, hilbert, check.
// Exit codes: 0 success / all checks pass, 1 at least one check failed,
// 2 usage or configuration error, 3 insufficient precision only.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hlab/algebra_io.hpp"
#include "hlab/check.hpp"
#include "hlab/constructions.hpp"
#include "hlab/geometry_oracle.hpp"
#include "hlab/hochschild.hpp"
#include "hlab/resolution.hpp"
#include "hlab/resource.hpp"

namespace {

using namespace hlab;

struct Output {
  std::string format = "table";  // table | json | csv
  std::string path;              // empty: stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write to '" + path + "'");
    out << text;
  }
};

std::string format_dim_table(const DimTable& t, const std::string& format,
                             const std::string& title) {
  if (format == "json") return table_to_json(t).dump(2) + "\n";
  std::ostringstream os;
  if (format == "csv") {
    os << "i,d,dim\n";
    for (const auto& [key, value] : t.entries()) {
      os << key.i << ",";
      if (key.internal) os << *key.internal;
      os << "," << value << "\n";
    }
    return os.str();
  }
  os << "# " << title << ", i in [" << t.window.min_i << ".." << t.window.max_i << "]";
  if (t.window.graded())
    os << ", internal degree in [" << t.window.internal->first << ".."
       << t.window.internal->second << "]";
  os << "\n" << t.str() << "\n";
  return os.str();
}

std::string format_hilbert(const HilbertSeries& h, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["dims"] = h.dims;
    j["complete"] = h.complete;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "degree,dim\n";
    for (std::size_t d = 0; d < h.dims.size(); ++d) os << d << "," << h.dims[d] << "\n";
    return os.str();
  }
  return h.str() + "\n";
}

// --field value: "rat" or "fp:<prime>"
template <class Fn>
int dispatch_field(const std::string& field, Fn&& fn) {
  if (field == "rat") return fn(RationalField{});
  if (field.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(field.substr(3));
    } catch (const std::exception&) {
      throw UsageError("bad --field '" + field + "'");
    }
    return fn(PrimeField(p));
  }
  throw UsageError("bad --field '" + field + "' (expected rat or fp:<prime>)");
}

std::vector<int> parse_weights(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + item + "'");
    }
  }
  return out;
}

struct SpecAlgebra {
  std::string kind;
  int n = 0;
  int D = 0;
  CyclicAction action;
  std::uint64_t p = 0;
};

// beilinson-sym:N | beilinson-ext:N | rolled-up:N:D |
// twisted:VARS:ORDER:w1,w2,..:P:D | dual-numbers[:D]
SpecAlgebra parse_spec(const std::string& spec, int default_D) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw UsageError("empty --spec");
  SpecAlgebra out;
  out.kind = parts[0];
  try {
    if (out.kind == "beilinson-sym" || out.kind == "beilinson-ext") {
      if (parts.size() != 2) throw UsageError("expected " + out.kind + ":<n>");
      out.n = std::stoi(parts[1]);
    } else if (out.kind == "rolled-up") {
      if (parts.size() == 2) {
        out.n = std::stoi(parts[1]);
        out.D = default_D;
      } else if (parts.size() == 3) {
        out.n = std::stoi(parts[1]);
        out.D = std::stoi(parts[2]);
      } else {
        throw UsageError("expected rolled-up:<n>[:<D>]");
      }
    } else if (out.kind == "twisted") {
      if (parts.size() != 6)
        throw UsageError("expected twisted:<vars>:<order>:<w,..>:<p>:<D>");
      out.action.num_vars = std::stoi(parts[1]);
      out.action.order = std::stoi(parts[2]);
      out.action.weights = parse_weights(parts[3]);
      out.p = std::stoull(parts[4]);
      out.D = std::stoi(parts[5]);
    } else if (out.kind == "dual-numbers") {
      if (parts.size() > 2) throw UsageError("expected dual-numbers[:<D>]");
      out.D = parts.size() == 2 ? std::stoi(parts[1]) : std::max(default_D, 2);
    } else {
      throw UsageError("unknown spec kind '" + out.kind + "'");
    }
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed --spec '" + spec + "'");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hochschild/tilting computations on quiver algebras"};
  app.require_subcommand(1);

  std::string field = "rat";
  Output output;
  long resource_mb = 0;
  app.add_option("--field", field, "coefficient field: rat or fp:<prime>")->capture_default_str();
  app.add_option("--format", output.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", output.path, "write output to a file");
  app.add_option("--resource-mb", resource_mb, "memory-estimate cap (overrides HLAB_RESOURCE_MB)");
  app.fallthrough();

  // ---- build ----
  auto* build = app.add_subcommand("build", "construct an algebra and write its description file");
  std::string build_kind, build_file, weights_csv;
  int opt_n = 0, opt_D = -1, opt_vars = 0, opt_order = 0;
  std::uint64_t opt_p = 0;
  build->add_option("kind", build_kind, "beilinson-sym|beilinson-ext|rolled-up|twisted|custom-file")
      ->required();
  build->add_option("--n", opt_n, "dimension parameter");
  build->add_option("--D", opt_D, "truncation degree");
  build->add_option("--vars", opt_vars, "number of polynomial variables");
  build->add_option("--order", opt_order, "cyclic group order");
  build->add_option("--weights", weights_csv, "comma-separated weights mod order");
  build->add_option("--p", opt_p, "prime modulus for the twisted construction");
  build->add_option("--file", build_file, "input description (kind custom-file)");

  // ---- hh ----
  auto* hh = app.add_subcommand("hh", "Hochschild (co)homology dimension table");
  std::string hh_spec, hh_file, hh_direction = "cohomology";
  int hh_max_i = 3, hh_D = 6;
  std::optional<int> hh_d;
  int hh_d_from = 0, hh_d_to = -1;
  hh->add_option("--spec", hh_spec, "built-in algebra, e.g. beilinson-sym:3");
  hh->add_option("--file", hh_file, "algebra description file");
  hh->add_option("--direction", hh_direction, "cohomology|homology")
      ->check(CLI::IsMember({"cohomology", "homology"}));
  hh->add_option("--max-i", hh_max_i, "highest homological degree")->capture_default_str();
  hh->add_option("--D", hh_D, "truncation degree for file/rolled-up inputs")
      ->capture_default_str();
  auto* hh_d_opt = hh->add_option("--d", hh_d, "single internal degree window");
  auto* hh_from = hh->add_option("--d-from", hh_d_from, "first internal degree");
  auto* hh_to = hh->add_option("--d-to", hh_d_to, "last internal degree");
  hh_from->needs(hh_to);
  hh_to->needs(hh_from);
  hh_d_opt->excludes(hh_from);

  // ---- gldim ----
  auto* gldim = app.add_subcommand("gldim", "global dimension via minimal resolutions");
  std::string gl_spec, gl_file;
  int gl_max_len = 8, gl_D = 6;
  gldim->add_option("--spec", gl_spec, "built-in algebra");
  gldim->add_option("--file", gl_file, "algebra description file");
  gldim->add_option("--max-len", gl_max_len, "resolution length bound")->capture_default_str();
  gldim->add_option("--D", gl_D, "truncation degree for file inputs")->capture_default_str();

  // ---- ext ----
  auto* ext = app.add_subcommand("ext", "Ext-algebra dimensions of the vertex simples");
  std::string ext_spec, ext_file;
  int ext_max_i = 3, ext_D = 6;
  ext->add_option("--spec", ext_spec, "built-in algebra");
  ext->add_option("--file", ext_file, "algebra description file");
  ext->add_option("--max-i", ext_max_i, "highest Ext degree")->capture_default_str();
  ext->add_option("--D", ext_D, "truncation degree for file inputs")->capture_default_str();

  // ---- bott ----
  auto* bott = app.add_subcommand("bott", "dim H^q(P^{n-1}, Omega^p(m))");
  int bott_n = 2, bott_p = 0, bott_q = 0, bott_m = 0;
  bott->add_option("--n", bott_n, "projective space P^{n-1}")->required();
  bott->add_option("--p", bott_p, "form degree")->required();
  bott->add_option("--q", bott_q, "cohomology degree")->required();
  bott->add_option("--m", bott_m, "twist")->required();

  // ---- fixed-point ----
  auto* fp = app.add_subcommand("fixed-point",
                                "invariant-form counts on the fixed-point scheme of a diagonal "
                                "cyclic action");
  int fp_vars = 2, fp_order = 2, fp_D = 4;
  std::string fp_weights = "1,1", fp_direction = "homology";
  std::optional<int> fp_i;
  bool fp_identity_only = false;
  fp->add_option("--vars", fp_vars)->required();
  fp->add_option("--order", fp_order)->required();
  fp->add_option("--weights", fp_weights)->required();
  fp->add_option("--D", fp_D, "maximal internal degree")->capture_default_str();
  fp->add_option("--direction", fp_direction, "homology|cohomology")
      ->check(CLI::IsMember({"homology", "cohomology"}));
  fp->add_option("--i", fp_i, "print only this form degree, as per-degree dims");
  fp->add_flag("--identity-only", fp_identity_only, "restrict to the identity summand");

  // ---- hilbert ----
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of an algebra or Veronese ring");
  std::string hil_spec, hil_file;
  int hil_D = 6, hil_veronese = 0;
  hilbert->add_option("--spec", hil_spec, "built-in algebra");
  hilbert->add_option("--file", hil_file, "algebra description file");
  hilbert->add_option("--veronese", hil_veronese, "Veronese subring of n variables");
  hilbert->add_option("--D", hil_D, "truncation degree")->capture_default_str();

  // ---- check ----
  auto* check = app.add_subcommand("check", "run named verification suites");
  std::vector<std::string> check_ids;
  int check_jobs = 1;
  bool check_golden = false;
  check->add_option("ids", check_ids, "suite ids or 'all'")->required();
  check->add_option("--jobs", check_jobs, "worker threads")->capture_default_str();
  check->add_flag("--golden", check_golden, "emit golden JSON (no runtime field)");

  try {
    app.parse(argc, argv);
    if (resource_mb > 0) set_resource_cap_mb(resource_mb);

    // --------------- build ---------------
    if (build->parsed()) {
      AlgebraDescription desc;
      HilbertSeries series;
      if (build_kind == "beilinson-sym" || build_kind == "beilinson-ext") {
        if (opt_n < 2) throw UsageError("build " + build_kind + " needs --n >= 2");
        BeilinsonSpec spec{opt_n, build_kind == "beilinson-sym" ? BeilinsonVariant::kSymmetric
                                                                : BeilinsonVariant::kExterior};
        desc = beilinson_description(spec);
        dispatch_field(field, [&](auto fld) {
          series = beilinson_algebra(fld, spec).hilbert();
          return 0;
        });
      } else if (build_kind == "rolled-up") {
        if (opt_n < 2 || opt_D < 0) throw UsageError("build rolled-up needs --n >= 2 and --D");
        desc = rolled_up_description(opt_n);
        dispatch_field(field, [&](auto fld) {
          series = rolled_up_algebra(fld, opt_n, opt_D).hilbert();
          return 0;
        });
      } else if (build_kind == "twisted") {
        if (opt_vars < 1 || opt_order < 1 || opt_p == 0 || opt_D < 0)
          throw UsageError("build twisted needs --vars, --order, --weights, --p, --D");
        CyclicAction act{opt_vars, opt_order, parse_weights(weights_csv)};
        desc = twisted_description(act);
        series = twisted_group_algebra(PrimeField(opt_p), act, opt_D).hilbert();
      } else if (build_kind == "custom-file") {
        if (build_file.empty()) throw UsageError("build custom-file needs --file");
        std::ifstream in(build_file);
        if (!in) throw UsageError("cannot read '" + build_file + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        desc = parse_algebra(buf.str());
        int D = opt_D >= 0 ? opt_D : 6;
        dispatch_field(field, [&](auto fld) {
          series = build_algebra(fld, desc.quiver, desc.relations, D).hilbert();
          return 0;
        });
      } else {
        throw UsageError("unknown build kind '" + build_kind + "'");
      }
      output.emit(serialize_algebra(desc));
      std::cerr << "hilbert " << series.str() << "\n";
      return 0;
    }

    // Builds the algebra selected by --spec/--file over the requested field
    // and hands it to `fn`; twisted specs force their own prime field.
    auto with_algebra = [&](const std::string& spec_str, const std::string& file_str, int D,
                            auto&& fn) -> int {
      if (!spec_str.empty() && !file_str.empty())
        throw UsageError("give either --spec or --file, not both");
      if (spec_str.empty() && file_str.empty()) throw UsageError("need --spec or --file");
      if (!file_str.empty()) {
        std::ifstream in(file_str);
        if (!in) throw UsageError("cannot read '" + file_str + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        auto desc = parse_algebra(buf.str());
        return dispatch_field(field, [&](auto fld) {
          return fn(build_algebra(fld, desc.quiver, desc.relations, D));
        });
      }
      auto spec = parse_spec(spec_str, D);
      if (spec.kind == "twisted")
        return fn(twisted_group_algebra(PrimeField(spec.p), spec.action, spec.D));
      return dispatch_field(field, [&](auto fld) -> int {
        if (spec.kind == "beilinson-sym")
          return fn(beilinson_algebra(fld, BeilinsonSpec{spec.n, BeilinsonVariant::kSymmetric}));
        if (spec.kind == "beilinson-ext")
          return fn(beilinson_algebra(fld, BeilinsonSpec{spec.n, BeilinsonVariant::kExterior}));
        if (spec.kind == "rolled-up") return fn(rolled_up_algebra(fld, spec.n, spec.D));
        return fn(dual_numbers_algebra(fld, spec.D));
      });
    };

    // --------------- hh ---------------
    if (hh->parsed()) {
      Direction dir =
          hh_direction == "cohomology" ? Direction::kCohomology : Direction::kHomology;
      return with_algebra(hh_spec, hh_file, hh_D, [&](const auto& A) {
        DimTable table;
        if (hh_d) {
          table = hh_graded(A, dir, *hh_d, hh_max_i);
        } else if (hh_to->count()) {
          table.window.max_i = hh_max_i;
          table.window.internal = {{hh_d_from, hh_d_to}};
          for (int d = hh_d_from; d <= hh_d_to; ++d) {
            auto w = hh_graded(A, dir, d, hh_max_i);
            for (int i = 0; i <= hh_max_i; ++i) table.set(i, d, w.at(i, d));
          }
        } else if (dir == Direction::kCohomology) {
          table = hh_cohomology(A, hh_max_i);
        } else {
          table = hh_homology(A, hh_max_i);
        }
        output.emit(format_dim_table(table, output.format, "Hochschild " + hh_direction));
        return 0;
      });
    }

    // --------------- gldim ---------------
    if (gldim->parsed()) {
      return with_algebra(gl_spec, gl_file, gl_D, [&](const auto& A) {
        auto g = global_dimension(A, gl_max_len);
        std::ostringstream os;
        if (output.format == "json") {
          nlohmann::ordered_json j;
          j["global_dimension"] =
              g.value ? nlohmann::ordered_json(*g.value) : nlohmann::ordered_json(nullptr);
          j["status"] = g.value ? "finished" : "not-finished";
          j["simple_pd"] = g.simple_pd;
          j["certified_degree"] = g.certified_degree;
          os << j.dump(2) << "\n";
        } else {
          if (g.value)
            os << "gldim " << *g.value << "\n";
          else
            os << "gldim not-finished (length bound " << gl_max_len << ")\n";
          for (std::size_t v = 0; v < g.simple_pd.size(); ++v)
            os << "pd S_" << v << " = "
               << (g.simple_pd[v] < 0 ? std::string("not-finished")
                                      : std::to_string(g.simple_pd[v]))
               << "\n";
        }
        output.emit(os.str());
        return 0;
      });
    }

    // --------------- ext ---------------
    if (ext->parsed()) {
      return with_algebra(ext_spec, ext_file, ext_D, [&](const auto& A) {
        output.emit(format_dim_table(ext_algebra_dims(A, ext_max_i), output.format,
                                     "Ext-algebra dimensions"));
        return 0;
      });
    }

    // --------------- bott ---------------
    if (bott->parsed()) {
      long v = bott_dim(bott_n, bott_p, bott_q, bott_m);
      if (output.format == "json") {
        nlohmann::ordered_json j;
        j["n"] = bott_n;
        j["p"] = bott_p;
        j["q"] = bott_q;
        j["m"] = bott_m;
        j["dim"] = v;
        output.emit(j.dump(2) + "\n");
      } else {
        output.emit(std::to_string(v) + "\n");
      }
      return 0;
    }

    // --------------- fixed-point ---------------
    if (fp->parsed()) {
      CyclicAction act{fp_vars, fp_order, parse_weights(fp_weights)};
      DimTable t = fp_direction == "homology"
                       ? fixed_point_hh_homology(act, fp_D, -1, fp_identity_only)
                       : fixed_point_hh_cohomology(act, fp_D);
      if (fp_i) {
        std::ostringstream os;
        os << "(";
        for (int d = 0; d <= fp_D; ++d) os << (d ? ", " : "") << t.at(*fp_i, d);
        os << ")\n";
        output.emit(os.str());
      } else {
        output.emit(format_dim_table(t, output.format, "fixed-point " + fp_direction));
      }
      return 0;
    }

    // --------------- hilbert ---------------
    if (hilbert->parsed()) {
      if (hil_veronese > 0) {
        output.emit(format_hilbert(veronese_hilbert(hil_veronese, hil_D), output.format));
        return 0;
      }
      return with_algebra(hil_spec, hil_file, hil_D, [&](const auto& A) {
        output.emit(format_hilbert(A.hilbert(), output.format));
        return 0;
      });
    }

    // --------------- check ---------------
    if (check->parsed()) {
      RunConfig cfg;
      cfg.jobs = check_jobs;
      if (field.rfind("fp:", 0) == 0) {
        cfg.use_prime_field = true;
        cfg.prime = std::stoull(field.substr(3));
      } else if (field != "rat") {
        throw UsageError("bad --field '" + field + "'");
      }
      std::vector<std::string> ids = check_ids;
      if (ids.size() == 1 && ids[0] == "all") ids = all_check_ids();
      auto reports = run_checks(ids, cfg);
      std::ostringstream os;
      if (output.format == "json") {
        if (reports.size() == 1) {
          os << report_to_json(reports[0], !check_golden).dump(2) << "\n";
        } else {
          nlohmann::ordered_json arr = nlohmann::ordered_json::array();
          for (const auto& rep : reports) arr.push_back(report_to_json(rep, !check_golden));
          os << arr.dump(2) << "\n";
        }
      } else if (output.format == "csv") {
        os << "check_id,verdict,runtime_ms\n";
        for (const auto& rep : reports)
          os << rep.check_id << "," << verdict_str(rep.verdict) << "," << rep.runtime_ms << "\n";
      } else {
        for (const auto& rep : reports) {
          os << verdict_str(rep.verdict) << " " << rep.check_id << " [" << rep.left.provenance
             << " vs " << rep.right.provenance << "] (" << rep.runtime_ms << " ms)\n";
          os << "  left  " << rep.left.table.str() << "\n";
          os << "  right " << rep.right.table.str() << "\n";
          if (!rep.detail.empty()) os << "  detail: " << rep.detail << "\n";
        }
      }
      output.emit(os.str());
      return aggregate_exit_code(reports);
    }

    throw UsageError("no subcommand");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientPrecisionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 2;
  }
}

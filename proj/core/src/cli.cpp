#include "acdc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acdc/bench.hpp"
#include "acdc/blockdct.hpp"
#include "acdc/dcf.hpp"
#include "acdc/frm.hpp"
#include "acdc/iqa.hpp"
#include "acdc/pgm.hpp"
#include "acdc/uso.hpp"

namespace acdc {
namespace {

namespace fs = std::filesystem;

std::string fixed6(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

PixelRange parse_range(const std::string& text) {
  int lo = 0, hi = 0;
  char tail = '\0';
  if (std::sscanf(text.c_str(), "%d,%d%c", &lo, &hi, &tail) != 2 || lo >= hi) {
    throw CLI::ValidationError("--range", "expected min,max with min < max");
  }
  return {lo, hi};
}

struct StripArgs {
  std::string input;
  std::string output;
  std::string preview;
  std::string dcs;
  int block_size = 8;
  std::string range = "0,255";
};

int cmd_strip(const StripArgs& args) {
  PixelImage image = load_pgm(args.input);
  image.range = parse_range(args.range);

  CoefficientPlane cp = forward_plane(image, args.block_size);
  const DcPlane dcs = true_dcs(image, args.block_size);
  const BlockGrid& grid = cp.grid;
  for (int br = 0; br < grid.rows; ++br) {
    for (int bc = 0; bc < grid.cols; ++bc) {
      cp.coeffs.at(bc * grid.n, br * grid.n) = 0.0;
    }
  }
  save_dcf(args.output, cp, true);

  if (!args.dcs.empty()) {
    std::ofstream out(args.dcs, std::ios::binary);
    if (!out) throw ParseError("cannot open " + args.dcs + " for writing");
    out << "block_row,block_col,dc\n";
    for (int br = 0; br < grid.rows; ++br) {
      for (int bc = 0; bc < grid.cols; ++bc) {
        out << br << ',' << bc << ',' << fixed6(dcs.at(br, bc)) << '\n';
      }
    }
    if (!out) throw ParseError("cannot write " + args.dcs);
  }

  if (!args.preview.empty()) {
    const DcFreePlane plane = plane_from_coefficients(cp, image.range);
    Raster shifted(plane.data.width(), plane.data.height());
    auto src = plane.data.values();
    auto dst = shifted.values();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] + 128.0;
    save_pgm(args.preview, finalize(shifted, image.range));
  }
  return 0;
}

struct RecoverArgs {
  std::string input;
  std::string output;
  std::string method = "frm";
  std::string search = "exhaustive";
  double delta = 1.0;
  std::string dump_scans;
  std::string range = "0,255";
};

void write_trace_csv(const std::string& path, const SearchTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << "dc0,rate\n";
  for (const SearchEval& e : trace.evals) {
    out << fixed6(e.dc0) << ',' << fixed6(e.rate) << '\n';
  }
  if (!out) throw ParseError("cannot write " + path);
}

int cmd_recover(const RecoverArgs& args) {
  const PixelRange range = parse_range(args.range);
  const DcfFile file = load_dcf(args.input);
  if (!file.dc_stripped) {
    throw UnsupportedError("recover expects a DC-stripped coefficient file");
  }
  const DcFreePlane plane = plane_from_coefficients(file.plane, range);

  const bool dump = !args.dump_scans.empty();
  if (dump) fs::create_directories(args.dump_scans);
  const auto scan_path = [&](Corner corner) {
    return (fs::path(args.dump_scans) / (std::string("scan_") + corner_name(corner) + ".pgm"))
        .string();
  };

  if (args.method == "uso") {
    UsoResult result = recover_uso_traced(plane);
    save_pgm(args.output, result.image);
    if (dump) {
      for (const CornerScan& corner : result.corners) {
        save_pgm(scan_path(corner.corner), finalize(corner.image, range));
      }
    }
    return 0;
  }

  SearchConfig cfg;
  cfg.delta = args.delta;
  cfg.mode = args.search == "bracket" ? SearchMode::Bracket : SearchMode::Exhaustive;
  FrmResult result = recover_frm_traced(plane, cfg);
  save_pgm(args.output, result.image);
  if (dump) {
    for (const CornerRecovery& corner : result.corners) {
      save_pgm(scan_path(corner.corner), finalize(corner.image, range));
      const std::string trace_file =
          (fs::path(args.dump_scans) / (std::string("trace_") + corner_name(corner.corner) + ".csv"))
              .string();
      write_trace_csv(trace_file, corner.trace);
    }
  }
  return 0;
}

struct MetricsArgs {
  std::string reference;
  std::string test;
  std::string range = "0,255";
};

int cmd_metrics(const MetricsArgs& args, std::ostream& out) {
  const PixelRange range = parse_range(args.range);
  PixelImage ref = load_pgm(args.reference);
  PixelImage test = load_pgm(args.test);
  ref.range = range;
  test.range = range;
  const QualityReport report = score(ref, test);
  out << fixed6(report.psnr) << ',' << fixed6(report.ssim) << ',' << fixed6(report.ms_ssim)
      << '\n';
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string out_csv;
  std::string plots;
  std::vector<std::string> methods = {"uso", "frm-exhaustive"};
  double delta = 1.0;
  int block_size = 8;
  std::string range = "0,255";
  int jobs = 0;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchOptions opt;
  opt.corpus_dir = args.corpus;
  opt.methods.clear();
  for (const std::string& name : args.methods) {
    const auto method = parse_method(name);
    if (!method) throw CLI::ValidationError("--methods", "unknown method: " + name);
    opt.methods.push_back(*method);
  }
  opt.delta = args.delta;
  opt.block_size = args.block_size;
  opt.range = parse_range(args.range);
  opt.jobs = args.jobs;

  const BenchReport report = run_bench(opt, err);
  if (!args.out_csv.empty()) write_bench_csv(args.out_csv, report);
  if (!args.plots.empty()) write_bench_plots(args.plots, report);
  out << bench_summary(report);
  return report.images_processed == 0 ? 3 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DC coefficient recovery toolkit for block-DCT images"};
  app.require_subcommand(1);

  StripArgs strip;
  CLI::App* strip_cmd = app.add_subcommand("strip", "Strip DC coefficients from a PGM image");
  strip_cmd->add_option("input", strip.input, "input PGM (P5) image")->required();
  strip_cmd->add_option("output", strip.output, "output DCF coefficient file")->required();
  strip_cmd->add_option("--preview", strip.preview, "write a viewable DC-free PGM preview");
  strip_cmd->add_option("--dcs", strip.dcs, "write the true DC coefficients as a CSV sidecar");
  strip_cmd->add_option("--block-size", strip.block_size, "DCT block size")
      ->check(CLI::Range(2, 1024));
  strip_cmd->add_option("--range", strip.range, "pixel range as min,max");

  RecoverArgs recover;
  CLI::App* recover_cmd =
      app.add_subcommand("recover", "Recover DC coefficients from a stripped file");
  recover_cmd->add_option("input", recover.input, "input DCF coefficient file")->required();
  recover_cmd->add_option("output", recover.output, "output PGM image")->required();
  recover_cmd->add_option("--method", recover.method, "recovery method")
      ->check(CLI::IsMember({"uso", "frm"}));
  recover_cmd->add_option("--search", recover.search, "FRM search strategy")
      ->check(CLI::IsMember({"exhaustive", "bracket"}));
  recover_cmd->add_option("--delta", recover.delta, "search step size in DC units")
      ->check(CLI::PositiveNumber);
  recover_cmd->add_option("--dump-scans", recover.dump_scans,
                          "directory for per-corner scan images and search traces");
  recover_cmd->add_option("--range", recover.range, "pixel range as min,max");

  MetricsArgs metrics;
  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Score a test image against a reference");
  metrics_cmd->add_option("reference", metrics.reference, "reference PGM image")->required();
  metrics_cmd->add_option("test", metrics.test, "test PGM image")->required();
  metrics_cmd->add_option("--range", metrics.range, "pixel range as min,max");

  BenchArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark recovery methods over a corpus");
  bench_cmd->add_option("--corpus", bench.corpus, "directory of PGM images")->required();
  bench_cmd->add_option("--out", bench.out_csv, "output CSV report path");
  bench_cmd->add_option("--plots", bench.plots, "directory for SVG delta plots");
  bench_cmd->add_option("--methods", bench.methods, "methods to run")->delimiter(',');
  bench_cmd->add_option("--delta", bench.delta, "FRM search step size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--block-size", bench.block_size, "DCT block size")
      ->check(CLI::Range(2, 1024));
  bench_cmd->add_option("--range", bench.range, "pixel range as min,max");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads (0 = hardware)")
      ->check(CLI::Range(0, 1024));

  try {
    app.parse(argc, argv);
    if (strip_cmd->parsed()) return cmd_strip(strip);
    if (recover_cmd->parsed()) return cmd_recover(recover);
    if (metrics_cmd->parsed()) return cmd_metrics(metrics, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
    return 1;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace acdc

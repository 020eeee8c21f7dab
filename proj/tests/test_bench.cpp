#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "acdc/bench.hpp"
#include "acdc/pgm.hpp"
#include "acdc/svg.hpp"
#include "acdc/synth.hpp"
#include "acdc/types.hpp"
#include "test_support.hpp"

using namespace acdc;
using namespace testutil;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Rows with the trailing (non-deterministic) seconds column removed.
std::vector<std::string> stable_rows(const std::string& csv) {
  std::vector<std::string> rows = split_lines(csv);
  for (std::string& row : rows) {
    const std::size_t cut = row.rfind(',');
    if (cut != std::string::npos) row.resize(cut);
  }
  return rows;
}

BenchRecord make_record(const std::string& image, Method method, double psnr, double ssim,
                        double ms) {
  BenchRecord rec;
  rec.image = image;
  rec.method = method;
  rec.quality = {psnr, ssim, ms};
  return rec;
}

}  // namespace

TEST_CASE("method names round trip") {
  for (Method m : {Method::Uso, Method::FrmExhaustive, Method::FrmBracket}) {
    const auto back = parse_method(method_name(m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }
  CHECK_FALSE(parse_method("frm").has_value());
  CHECK_FALSE(parse_method("").has_value());
}

TEST_CASE("bench: single constant image, both methods recover it exactly") {
  TempDir dir;
  save_pgm(dir.file("const.pgm"), make_image(176, 176, 128));

  BenchOptions opt;
  opt.corpus_dir = dir.path().string();
  std::ostringstream err;
  const BenchReport report = run_bench(opt, err);

  CHECK(report.images_processed == 1);
  CHECK(report.images_skipped == 0);
  CHECK(report.warnings.empty());
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].method == Method::Uso);
  CHECK(report.records[1].method == Method::FrmExhaustive);
  for (const BenchRecord& rec : report.records) {
    CHECK(rec.image == "const.pgm");
    CHECK(std::isinf(rec.quality.psnr));  // bit-exact recovery
    CHECK(rec.quality.ssim == 1.0);
    CHECK(rec.quality.ms_ssim == 1.0);
    for (double dc0 : rec.dc0) CHECK(dc0 == 1020.0);  // midpoint of [0, 2040]
    for (double flow : rec.flow) CHECK(flow == 0.0);
    CHECK(rec.seconds >= 0.0);
  }

  // Equal infinities count as a zero delta in the summary.
  const std::string summary = bench_summary(report);
  CHECK(summary.find("processed 1 images, skipped 0") != std::string::npos);
  CHECK(summary.find("frm-exhaustive vs uso:") != std::string::npos);
  CHECK(summary.find("psnr: mean delta 0.000000, median delta 0.000000, frm>=uso 1/1") !=
        std::string::npos);
  CHECK(summary.find("ssim: mean delta 0.000000") != std::string::npos);

  const std::string csv_path = dir.file("out.csv");
  write_bench_csv(csv_path, report);
  const std::string csv = read_bytes(csv_path);
  REQUIRE(!csv.empty());
  CHECK(csv.back() == '\n');
  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "image,method,psnr,ssim,ms_ssim,dc0_tl,dc0_tr,dc0_bl,dc0_br,"
        "flow_tl,flow_tr,flow_bl,flow_br,seconds");
  CHECK(lines[1].rfind("const.pgm,uso,inf,1.000000,1.000000,1020.000000,", 0) == 0);
  CHECK(lines[2].rfind("const.pgm,frm-exhaustive,inf,1.000000,1.000000,1020.000000,", 0) == 0);
}

TEST_CASE("bench: unreadable and undersized files are skipped with warnings") {
  TempDir dir;
  save_pgm(dir.file("good.pgm"), make_image(176, 176, 128));
  write_bytes(dir.file("broken.pgm"), "this is not a pgm");
  save_pgm(dir.file("tiny.pgm"), make_image(64, 64, 128));  // too small for MS-SSIM
  write_bytes(dir.file("notes.txt"), "ignored: wrong extension");

  BenchOptions opt;
  opt.corpus_dir = dir.path().string();
  opt.methods = {Method::Uso};
  std::ostringstream err;
  const BenchReport report = run_bench(opt, err);

  CHECK(report.images_processed == 1);
  CHECK(report.images_skipped == 2);
  CHECK(report.records.size() == 1);
  CHECK(report.records[0].image == "good.pgm");
  REQUIRE(report.warnings.size() == 2);
  const std::string joined = err.str();
  CHECK(joined.find("broken.pgm") != std::string::npos);
  CHECK(joined.find("tiny.pgm") != std::string::npos);
  for (const std::string& w : report.warnings) {
    CHECK(w.rfind("warning: skipping ", 0) == 0);
    CHECK(joined.find(w) != std::string::npos);
  }
}

TEST_CASE("bench: missing corpus directory throws") {
  BenchOptions opt;
  opt.corpus_dir = "/nonexistent/acdc-bench";
  std::ostringstream err;
  CHECK_THROWS_AS(run_bench(opt, err), ParseError);
}

TEST_CASE("bench: worker count does not change results or row order") {
  TempDir dir;
  save_pgm(dir.file("a.pgm"), make_image(176, 176, 90));
  save_pgm(dir.file("b.pgm"), make_synthetic(184, 176, 31));
  save_pgm(dir.file("c.pgm"), make_synthetic(176, 192, 57));

  BenchOptions opt;
  opt.corpus_dir = dir.path().string();
  opt.methods = {Method::Uso, Method::FrmBracket};

  opt.jobs = 1;
  std::ostringstream err1, err4;
  const BenchReport serial = run_bench(opt, err1);
  opt.jobs = 4;
  const BenchReport parallel = run_bench(opt, err4);

  REQUIRE(serial.records.size() == 6);
  REQUIRE(parallel.records.size() == serial.records.size());

  const std::string csv1 = dir.file("serial.csv");
  const std::string csv4 = dir.file("parallel.csv");
  write_bench_csv(csv1, serial);
  write_bench_csv(csv4, parallel);
  CHECK(stable_rows(read_bytes(csv1)) == stable_rows(read_bytes(csv4)));

  // Rows are grouped by image in sorted filename order.
  CHECK(serial.records[0].image == "a.pgm");
  CHECK(serial.records[2].image == "b.pgm");
  CHECK(serial.records[4].image == "c.pgm");
  CHECK(serial.records[0].method == Method::Uso);
  CHECK(serial.records[1].method == Method::FrmBracket);
}

TEST_CASE("bench summary: one-sided infinities leave the mean but not the fraction") {
  BenchReport report;
  report.methods = {Method::Uso, Method::FrmExhaustive};
  report.images_processed = 3;
  report.records.push_back(make_record("a.pgm", Method::Uso, kInf, 1.0, 1.0));
  report.records.push_back(make_record("a.pgm", Method::FrmExhaustive, kInf, 1.0, 1.0));
  report.records.push_back(make_record("b.pgm", Method::Uso, 30.0, 0.9, 0.9));
  report.records.push_back(make_record("b.pgm", Method::FrmExhaustive, kInf, 1.0, 1.0));
  report.records.push_back(make_record("c.pgm", Method::Uso, kInf, 1.0, 1.0));
  report.records.push_back(make_record("c.pgm", Method::FrmExhaustive, 28.0, 0.8, 0.8));

  const std::string summary = bench_summary(report);
  // psnr deltas: 0 (inf-inf), +inf, -inf -> only the 0 is averaged; +inf and 0 count as >=.
  CHECK(summary.find("psnr: mean delta 0.000000, median delta 0.000000, frm>=uso 2/3") !=
        std::string::npos);
  // ssim deltas are finite: 0, +0.1, -0.2 -> mean -0.033333, median 0.
  CHECK(summary.find("ssim: mean delta -0.033333, median delta 0.000000, frm>=uso 2/3") !=
        std::string::npos);
}

TEST_CASE("bench summary without a uso baseline only counts images") {
  BenchReport report;
  report.methods = {Method::FrmExhaustive};
  report.images_processed = 2;
  report.images_skipped = 1;
  const std::string summary = bench_summary(report);
  CHECK(summary == "processed 2 images, skipped 1\n");
}

TEST_CASE("delta svg: points, mean line, and non-finite handling") {
  TempDir dir;
  const std::string path = dir.file("d.svg");
  write_delta_svg(path, "psnr delta <test>", {0.5, -0.2, kInf, 0.1});
  const std::string svg = read_bytes(path);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("&lt;test&gt;") != std::string::npos);  // title is escaped
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 3);  // the infinite delta is skipped but keeps its slot
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find("mean 0.133333") != std::string::npos);
}

TEST_CASE("delta svg: empty and constant inputs still produce valid files") {
  TempDir dir;
  write_delta_svg(dir.file("empty.svg"), "empty", {});
  const std::string empty = read_bytes(dir.file("empty.svg"));
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("<circle") == std::string::npos);
  CHECK(empty.find("stroke-dasharray") == std::string::npos);
  CHECK(empty.find("</svg>") != std::string::npos);

  write_delta_svg(dir.file("flat.svg"), "flat", {0.25, 0.25, 0.25});
  const std::string flat = read_bytes(dir.file("flat.svg"));
  std::size_t circles = 0;
  for (std::size_t at = flat.find("<circle"); at != std::string::npos;
       at = flat.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 3);
  CHECK(flat.find("mean 0.250000") != std::string::npos);
}

TEST_CASE("bench plots: one svg per metric and frm method") {
  TempDir dir;
  save_pgm(dir.file("const.pgm"), make_image(176, 176, 128));
  BenchOptions opt;
  opt.corpus_dir = dir.path().string();
  opt.methods = {Method::Uso, Method::FrmBracket};
  std::ostringstream err;
  const BenchReport report = run_bench(opt, err);

  const std::string plots = (dir.path() / "plots").string();
  write_bench_plots(plots, report);
  for (const char* name :
       {"delta_psnr_frm-bracket.svg", "delta_ssim_frm-bracket.svg",
        "delta_ms_ssim_frm-bracket.svg"}) {
    const std::string body = read_bytes((std::filesystem::path(plots) / name).string());
    CHECK(body.find("<svg") != std::string::npos);
  }
}

// Emits a small corpus of deterministic synthetic piecewise-smooth PGM
// images, for exercising the recovery pipeline without natural test data.

#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "acdc/pgm.hpp"
#include "acdc/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic piecewise-smooth PGM corpus generator"};
  std::string out_dir;
  int count = 8;
  int width = 256;
  int height = 256;
  unsigned seed = 1u;
  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--count", count, "number of images")->check(CLI::PositiveNumber);
  app.add_option("--width", width, "image width")->check(CLI::PositiveNumber);
  app.add_option("--height", height, "image height")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "base RNG seed");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    const acdc::PixelImage image =
        acdc::make_synthetic(width, height, seed + static_cast<unsigned>(i));
    char name[64];
    std::snprintf(name, sizeof(name), "synthetic_%03d.pgm", i);
    acdc::save_pgm((std::filesystem::path(out_dir) / name).string(), image);
  }
  return 0;
}

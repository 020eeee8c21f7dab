#include "acdc/pgm.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace acdc {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read " + path);
  return std::move(buf).str();
}

// Skips PGM header whitespace, including '#' comments running to end of line.
void skip_space(const std::string& s, std::size_t& pos) {
  while (pos < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[pos]);
    if (std::isspace(c)) {
      ++pos;
    } else if (c == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

int parse_int(const std::string& s, std::size_t& pos, const std::string& what) {
  skip_space(s, pos);
  const std::size_t start = pos;
  long value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > std::numeric_limits<int>::max()) throw ParseError("pgm: " + what + " out of range");
    ++pos;
  }
  if (pos == start) throw ParseError("pgm: missing " + what);
  return static_cast<int>(value);
}

}  // namespace

PixelImage load_pgm(const std::string& path) {
  const std::string data = read_file(path);
  if (data.size() < 2 || data[0] != 'P') throw ParseError("pgm: bad magic in " + path);
  if (data[1] == '2') throw UnsupportedError("pgm: ASCII (P2) files are not supported");
  if (data[1] != '5') throw ParseError("pgm: bad magic in " + path);

  std::size_t pos = 2;
  const int width = parse_int(data, pos, "width");
  const int height = parse_int(data, pos, "height");
  const int maxval = parse_int(data, pos, "maxval");
  if (width <= 0 || height <= 0) throw ParseError("pgm: non-positive dimensions");
  if (maxval != 255) throw UnsupportedError("pgm: only maxval 255 is supported");
  if (pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[pos]))) {
    throw ParseError("pgm: missing separator after maxval");
  }
  ++pos;  // exactly one whitespace byte before the payload

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (data.size() - pos < count) throw ParseError("pgm: truncated payload in " + path);

  PixelImage image = make_image(width, height, 0);
  for (std::size_t i = 0; i < count; ++i) {
    image.pixels[i] = static_cast<unsigned char>(data[pos + i]);
  }
  return image;
}

void save_pgm(const std::string& path, const PixelImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  std::string payload(image.pixels.size(), '\0');
  for (std::size_t i = 0; i < image.pixels.size(); ++i) {
    int v = image.pixels[i];
    if (v < 0) v = 0;
    if (v > 255) v = 255;
    payload[i] = static_cast<char>(static_cast<unsigned char>(v));
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw ParseError("cannot write " + path);
}

}  // namespace acdc

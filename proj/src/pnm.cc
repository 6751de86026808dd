// Copyright 2026 The chromasub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chromasub/pnm.h"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "chromasub/colorspace.h"

namespace chromasub {

namespace {

// Reads one header integer, skipping whitespace and '#' comments.
int read_header_int(std::istream& is) {
  int c = is.peek();
  while (c != EOF) {
    if (std::isspace(c)) {
      is.get();
    } else if (c == '#') {
      std::string comment;
      std::getline(is, comment);
    } else {
      break;
    }
    c = is.peek();
  }
  int value = 0;
  bool any = false;
  while (std::isdigit(is.peek())) {
    value = value * 10 + (is.get() - '0');
    any = true;
    if (value > (1 << 24)) throw IoError("netpbm header value too large");
  }
  if (!any) throw IoError("malformed netpbm header");
  return value;
}

struct Header {
  int width = 0;
  int height = 0;
};

Header read_header(std::istream& is, const char* magic) {
  char m[2] = {0, 0};
  is.read(m, 2);
  if (!is || m[0] != magic[0] || m[1] != magic[1]) {
    throw IoError(std::string("expected netpbm magic ") + magic);
  }
  Header h;
  h.width = read_header_int(is);
  h.height = read_header_int(is);
  const int maxval = read_header_int(is);
  if (maxval != 255) {
    throw IoError("only maxval 255 is supported, got " + std::to_string(maxval));
  }
  if (!std::isspace(is.get())) throw IoError("malformed netpbm header");
  require_even(h.width, h.height);
  return h;
}

std::vector<unsigned char> read_payload(std::istream& is, std::size_t n) {
  std::vector<unsigned char> buf(n);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
  if (static_cast<std::size_t>(is.gcount()) != n) {
    throw IoError("truncated netpbm payload");
  }
  return buf;
}

unsigned char to_byte(double x) {
  return static_cast<unsigned char>(quantize_sample(x));
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  return is;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path.string());
  return os;
}

}  // namespace

RgbImage read_ppm(std::istream& is) {
  const Header h = read_header(is, "P6");
  const auto buf =
      read_payload(is, static_cast<std::size_t>(h.width) * h.height * 3);
  RgbImage img(h.width, h.height);
  std::size_t i = 0;
  for (int y = 0; y < h.height; ++y) {
    for (int x = 0; x < h.width; ++x) {
      img.r.at(x, y) = buf[i++];
      img.g.at(x, y) = buf[i++];
      img.b.at(x, y) = buf[i++];
    }
  }
  return img;
}

RgbImage read_ppm(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_ppm(is);
}

void write_ppm(std::ostream& os, const RgbImage& img) {
  os << "P6\n" << img.width() << ' ' << img.height() << "\n255\n";
  std::vector<unsigned char> buf;
  buf.reserve(static_cast<std::size_t>(img.width()) * img.height() * 3);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      buf.push_back(to_byte(img.r.at(x, y)));
      buf.push_back(to_byte(img.g.at(x, y)));
      buf.push_back(to_byte(img.b.at(x, y)));
    }
  }
  os.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size()));
  if (!os) throw IoError("failed writing PPM payload");
}

void write_ppm(const std::filesystem::path& path, const RgbImage& img) {
  auto os = open_out(path);
  write_ppm(os, img);
}

ImagePlane read_pgm(std::istream& is) {
  const Header h = read_header(is, "P5");
  const auto buf = read_payload(is, static_cast<std::size_t>(h.width) * h.height);
  std::vector<double> samples(buf.begin(), buf.end());
  return ImagePlane(h.width, h.height, std::move(samples));
}

ImagePlane read_pgm(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_pgm(is);
}

void write_pgm(std::ostream& os, const ImagePlane& plane) {
  os << "P5\n" << plane.width() << ' ' << plane.height() << "\n255\n";
  std::vector<unsigned char> buf;
  buf.reserve(plane.samples().size());
  for (double s : plane.samples()) buf.push_back(to_byte(s));
  os.write(reinterpret_cast<const char*>(buf.data()),
           static_cast<std::streamsize>(buf.size()));
  if (!os) throw IoError("failed writing PGM payload");
}

void write_pgm(const std::filesystem::path& path, const ImagePlane& plane) {
  auto os = open_out(path);
  write_pgm(os, plane);
}

}  // namespace chromasub

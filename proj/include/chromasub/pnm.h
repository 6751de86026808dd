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

#ifndef CHROMASUB_PNM_H_
#define CHROMASUB_PNM_H_

#include <filesystem>
#include <iosfwd>

#include "chromasub/image.h"

namespace chromasub {

// Binary netpbm I/O, maxval 255 only. Throws IoError on malformed input and
// GeometryError for odd dimensions. Writes clamp_quantize the samples.
RgbImage read_ppm(std::istream& is);
RgbImage read_ppm(const std::filesystem::path& path);
void write_ppm(std::ostream& os, const RgbImage& img);
void write_ppm(const std::filesystem::path& path, const RgbImage& img);

ImagePlane read_pgm(std::istream& is);
ImagePlane read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& os, const ImagePlane& plane);
void write_pgm(const std::filesystem::path& path, const ImagePlane& plane);

}  // namespace chromasub

#endif  // CHROMASUB_PNM_H_

#!/usr/bin/env python3
# Copyright 2026 The chromasub Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates tests/data/*.ppm from the scikit-image sample images."""

import os
import sys

from skimage import data


def crop_even(img, max_h=512, max_w=512):
    h = min(img.shape[0], max_h) & ~1
    w = min(img.shape[1], max_w) & ~1
    return img[:h, :w, :3]


def write_ppm(path, img):
    h, w, _ = img.shape
    with open(path, "wb") as f:
        f.write(b"P6\n%d %d\n255\n" % (w, h))
        f.write(img.astype("uint8").tobytes())


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "tests", "data")
    os.makedirs(out, exist_ok=True)
    sources = {
        "astronaut": data.astronaut(),
        "coffee": data.coffee(),
        "chelsea": data.chelsea(),
        "motorcycle": data.stereo_motorcycle()[0],
    }
    for name, img in sources.items():
        write_ppm(os.path.join(out, name + ".ppm"), crop_even(img))


if __name__ == "__main__":
    main()

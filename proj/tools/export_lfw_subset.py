#!/usr/bin/env python3
# Copyright 2026 The qface Authors
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

"""Write the scikit-image LFW subset (25x25) as 8-bit PGM files.

Usage: export_lfw_subset.py OUT_DIR
Produces OUT_DIR/faces/face_NNN.pgm and OUT_DIR/nonfaces/nonface_NNN.pgm.
Blank images are skipped; one non-face in the subset is all black.
"""
import pathlib
import sys

import numpy as np
import skimage.data


def write_pgm(path, img):
    data = np.clip(np.rint(img * 255.0), 0, 255).astype(np.uint8)
    h, w = data.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(data.tobytes())


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data/lfw_subset")
    images = skimage.data.lfw_subset()
    for sub, prefix, block in (("faces", "face", images[:100]), ("nonfaces", "nonface", images[100:])):
        d = out / sub
        d.mkdir(parents=True, exist_ok=True)
        for i, img in enumerate(block):
            # A blank image has no amplitude encoding; leave it out.
            if np.rint(img * 255.0).max() <= 0:
                continue
            write_pgm(d / f"{prefix}_{i:03d}.pgm", img)


if __name__ == "__main__":
    main()

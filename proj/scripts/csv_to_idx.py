#!/usr/bin/env python3
# Copyright 2026 The MPCA Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Convert a CSV of 28x28 digit images (784 pixel columns then the label,
pixels 0..255, optionally gzipped) into an IDX image/label file pair."""

import argparse
import gzip
import struct
import sys

import numpy as np


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("csv")
    ap.add_argument("images_out")
    ap.add_argument("labels_out")
    args = ap.parse_args()

    opener = gzip.open if args.csv.endswith(".gz") else open
    with opener(args.csv, "rt") as f:
        table = np.loadtxt(f, delimiter=",")
    if table.ndim != 2 or table.shape[1] != 785:
        sys.exit(f"expected 785 columns, got {table.shape}")
    pixels = table[:, :-1]
    labels = table[:, -1]
    if pixels.min() < 0 or pixels.max() > 255 or labels.min() < 0 or labels.max() > 9:
        sys.exit("pixel or label values out of range")

    n = table.shape[0]
    with open(args.images_out, "wb") as f:
        f.write(struct.pack(">IIII", 2051, n, 28, 28))
        f.write(pixels.astype(np.uint8).tobytes())
    with open(args.labels_out, "wb") as f:
        f.write(struct.pack(">II", 2049, n))
        f.write(labels.astype(np.uint8).tobytes())
    print(f"wrote {n} samples")
    return 0


if __name__ == "__main__":
    sys.exit(main())

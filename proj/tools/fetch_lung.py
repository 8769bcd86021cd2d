#!/usr/bin/env python3
# Copyright 2026 The kmdp Authors
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

"""Fetches the NCCTG lung cancer dataset and writes it in the R survival layout.

The copy bundled with the `lifelines` wheel recodes status as 0/1 and leaves
missing cells empty. This script restores the R coding (1 = censored,
2 = dead) and writes missing cells as NA, so the file matches
`write.csv(survival::lung)`.
"""

import argparse
import csv
import io
import pathlib
import subprocess
import sys
import tempfile
import zipfile


def fetch_wheel(workdir: pathlib.Path) -> pathlib.Path:
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "--quiet",
         "-d", str(workdir), "lifelines"],
        check=True)
    wheels = sorted(workdir.glob("lifelines-*.whl"))
    if not wheels:
        raise SystemExit("pip did not produce a lifelines wheel")
    return wheels[-1]


def convert(raw: str) -> str:
    reader = csv.DictReader(io.StringIO(raw))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(reader.fieldnames)
    for row in reader:
        cells = []
        for name in reader.fieldnames:
            value = row[name].strip()
            if value == "":
                cells.append("NA")
                continue
            if name == "status":
                value = str(int(float(value)) + 1)
            elif value.endswith(".0"):
                value = value[:-2]
            cells.append(value)
        writer.writerow(cells)
    return out.getvalue()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(
        pathlib.Path(__file__).resolve().parent.parent / "data" / "lung.csv"))
    args = parser.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        wheel = fetch_wheel(pathlib.Path(tmp))
        with zipfile.ZipFile(wheel) as zf:
            raw = zf.read("lifelines/datasets/lung.csv").decode("utf-8")

    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(convert(raw))
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

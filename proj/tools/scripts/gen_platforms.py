#!/usr/bin/env python3
# Copyright 2026 The swapsat Authors
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

"""Regenerates data/platforms/*.json.

melbourne is the 14-qubit IBM Q Melbourne map as published in IBM's backend
configuration (ibmq_16_melbourne, 14-qubit revision). The larger platforms are
generated from their published lattice descriptions:
  eagle127    IBM heavy-hex Eagle r1 (ibm_washington numbering)
  sycamore54  Google Sycamore 54-qubit diagonal grid (9 rows x 6 columns)
  rigetti80   Rigetti Aspen-M style: 2 x 5 octagons linked side to side
"""
import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "platforms"


def melbourne():
    return [[1, 0], [1, 2], [2, 3], [4, 3], [4, 10], [5, 4], [5, 6], [5, 9],
            [6, 8], [7, 8], [9, 8], [9, 10], [11, 3], [11, 10], [11, 12],
            [12, 2], [13, 1], [13, 12]]


def eagle():
    rows = [(0, 14, 0), (18, 15, 0), (37, 15, 0), (56, 15, 0), (75, 15, 0),
            (94, 15, 0), (113, 14, 1)]  # (first id, length, first column)
    edges = []
    for first, length, _ in rows:
        edges += [[first + i, first + i + 1] for i in range(length - 1)]

    def at(row, col):
        first, length, col0 = rows[row]
        assert col0 <= col < col0 + length
        return first + col - col0

    bridges = [14, 33, 52, 71, 90, 109]
    for r, first_bridge in enumerate(bridges):
        cols = [0, 4, 8, 12] if r % 2 == 0 else [2, 6, 10, 14]
        for k, col in enumerate(cols):
            b = first_bridge + k
            edges += [[at(r, col), b], [b, at(r + 1, col)]]
    return 127, edges


def sycamore():
    rows, cols = 9, 6
    edges = []
    for r in range(rows - 1):
        for c in range(cols):
            q = r * cols + c
            edges.append([q, (r + 1) * cols + c])
            if r % 2 == 0 and c >= 1:
                edges.append([q, (r + 1) * cols + c - 1])
            if r % 2 == 1 and c <= cols - 2:
                edges.append([q, (r + 1) * cols + c + 1])
    return rows * cols, edges


def rigetti():
    # Octagon k occupies ids 8k..8k+7, ring order. Positions 1,2 face right,
    # 5,6 face left, 3,4 face down, 7,0 face up.
    edges = []
    grid_rows, grid_cols = 2, 5
    octagon = lambda r, c: 8 * (r * grid_cols + c)
    for r in range(grid_rows):
        for c in range(grid_cols):
            base = octagon(r, c)
            edges += [[base + i, base + (i + 1) % 8] for i in range(8)]
            if c + 1 < grid_cols:
                right = octagon(r, c + 1)
                edges += [[base + 1, right + 6], [base + 2, right + 5]]
            if r + 1 < grid_rows:
                below = octagon(r + 1, c)
                edges += [[base + 4, below + 7], [base + 3, below + 0]]
    return 80, edges


def write(name, n, edges, source):
    norm = sorted({tuple(sorted(e)) for e in edges})
    doc = {"name": name, "num_qubits": n, "source": source,
           "edges": [list(e) for e in norm]}
    text = json.dumps(doc, indent=None, separators=(", ", ": "))
    (OUT / f"{name}.json").write_text(text + "\n")


if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    write("melbourne", 14, melbourne(),
          "IBM Q 16 Melbourne backend configuration, 14-qubit revision")
    n, e = eagle()
    write("eagle127", n, e, "generated IBM Eagle r1 heavy-hex lattice")
    n, e = sycamore()
    write("sycamore54", n, e, "generated Google Sycamore 54-qubit diagonal grid")
    n, e = rigetti()
    write("rigetti80", n, e, "generated Rigetti Aspen-M style octagon lattice")

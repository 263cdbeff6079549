"""Regenerate analysis.json with the temponet CLI (run from this directory).

The network is a hand-written 30-timestamp story chosen to exercise every
view: a stable team, a team that splits in the middle third and remerges,
a short-lived trio, and a ring that only exists in the final third.
"""

import itertools
import subprocess
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent

A = [f"a{i}" for i in range(5)]
B = [f"b{i}" for i in range(6)]
T = ["t0", "t1", "t2"]
C = [f"c{i}" for i in range(6)]

LABELS = (
    {n: "alpha" for n in A}
    | {n: "blue" for n in B[:3]}
    | {n: "teal" for n in B[3:]}
    | {n: "pop" for n in T}
    | {n: "ring" for n in C}
)


def rows():
    for t in range(1, 31):
        yield from ((x, y, t) for x, y in itertools.combinations(A, 2))
    for t in list(range(1, 11)) + list(range(21, 31)):
        yield from ((x, y, t) for x, y in itertools.combinations(B, 2))
    for t in range(11, 21):
        yield from ((x, y, t) for x, y in itertools.combinations(B[:3], 2))
        yield from ((x, y, t) for x, y in itertools.combinations(B[3:], 2))
    for t in (13, 14, 15):
        yield ("t0", "t1", t)
        yield ("t1", "t2", t)
    for t in range(21, 31):
        yield from ((C[i], C[(i + 1) % 6], t) for i in range(6))


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        edges = Path(tmp) / "edges.txt"
        meta = Path(tmp) / "meta.txt"
        edges.write_text("".join(f"{a} {b} {t}\n" for a, b, t in rows()))
        meta.write_text("".join(f"{n}\t{label}\n" for n, label in LABELS.items()))
        subprocess.run(
            [
                "temponet",
                "--edges", str(edges),
                "--metadata", str(meta),
                "--timeslices", "3",
                "--seed", "0",
                "--out", str(HERE / "analysis.json"),
            ],
            check=True,
        )
    print(f"wrote {HERE / 'analysis.json'}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Writes the b-file prefixes under tests/data/.

Terms are computed with sympy, laid out the way the OEIS lists each
sequence (row offset, first column, sign), so the C++ comparison path is
checked against an implementation it shares no code with.
"""
import argparse
from math import comb, factorial
from pathlib import Path

from sympy.functions.combinatorial.numbers import bell, stirling

TRIANGLE_ROWS = 12  # rows 0..11
SEQUENCE_TERMS = 21  # terms 0..20


def s1(n, k):
    return int(stirling(n, k, kind=1))


def s1_signed(n, k):
    return int(stirling(n, k, kind=1, signed=True))


def s2(n, k):
    return int(stirling(n, k, kind=2))


def lah(n, k):
    if n == 0 and k == 0:
        return 1
    if k == 0:
        return 0
    return factorial(n) // factorial(k) * comb(n - 1, k - 1)


def product(a, b):
    return lambda n, m: sum(a(n, k) * b(k, m) for k in range(m, n + 1))


# id -> (T(n,k), first row index n, first column k, b-file index of the first term)
TRIANGLES = {
    "A038207": (lambda n, k: 2 ** (n - k) * comb(n, k), 0, 0, 0),
    "A094816": (product(comb, s1), 0, 0, 0),
    "A008277": (s2, 1, 1, 1),
    "A130534": (lambda n, k: s1(n + 1, k + 1), 0, 0, 0),
    "A325872": (product(s1_signed, s1_signed), 0, 0, 0),
    "A271703": (lah, 0, 0, 0),
    "A049020": (product(s2, comb), 0, 0, 0),
    "A129062": (product(s2, s1), 0, 0, 0),
    "A130191": (product(s2, s2), 1, 1, 1),
    "A271705": (product(comb, lah), 0, 0, 0),
    "A059110": (product(lah, comb), 0, 0, 0),
}

SEQUENCES = {
    "A000262": lambda n: sum(lah(n, k) for k in range(n + 1)),
    "A000670": lambda n: sum(s2(n, k) * factorial(k) for k in range(n + 1)),
    "A007840": lambda n: sum(s1(n, k) * factorial(k) for k in range(n + 1)),
    "A001861": lambda n: sum(s2(n, k) * 2 ** k for k in range(n + 1)),
    "A000522": lambda n: sum(factorial(n) // factorial(k) for k in range(n + 1)),
    "A000258": lambda n: sum(s2(n, k) * int(bell(k)) for k in range(n + 1)),
}


def write(path, first_index, terms):
    lines = [f"# A{path.stem[1:]} prefix, generated by tools/gen_bfiles.py"]
    lines += [f"{first_index + i} {v}" for i, v in enumerate(terms)]
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "data")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for seq_id, (t, n0, k0, first) in TRIANGLES.items():
        terms = [t(n, k) for n in range(n0, n0 + TRIANGLE_ROWS) for k in range(k0, n + 1)]
        write(args.out / f"b{seq_id[1:]}.txt", first, terms)
    for seq_id, f in SEQUENCES.items():
        write(args.out / f"b{seq_id[1:]}.txt", 0, [f(n) for n in range(SEQUENCE_TERMS)])


if __name__ == "__main__":
    main()

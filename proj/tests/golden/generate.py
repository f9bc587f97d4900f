#!/usr/bin/env python3
"""Regenerates the golden files in this directory.

Every value here is produced by brute-force enumeration (or sympy's
partition counter), independently of the C++ implementation under test.
Run from anywhere: writes next to this script.
"""

from pathlib import Path

from sympy.functions.combinatorial.numbers import partition as partition_number
from sympy.utilities.iterables import partitions

HERE = Path(__file__).resolve().parent


def iter_partitions(n):
    """Yields each partition of n as a list of parts (n = 0 yields [])."""
    if n == 0:
        yield []
        return
    for mult in partitions(n):
        parts = []
        for part, count in mult.items():
            parts.extend([part] * count)
        yield parts


def bias_counts(n, a, b, m):
    """(#partitions with more parts = a mod m, #with more = b mod m, ties)."""
    more_a = more_b = tied = 0
    for parts in iter_partitions(n):
        count_a = sum(1 for p in parts if p % m == a % m)
        count_b = sum(1 for p in parts if p % m == b % m)
        if count_a > count_b:
            more_a += 1
        elif count_b > count_a:
            more_b += 1
        else:
            tied += 1
    return more_a, more_b, tied


_restricted_cache = {}


def restricted_count(s, m, k, n):
    """Partitions of n with parts in {s, s+m, ..., s+(k-1)m}, by enumeration."""
    if n < 0:
        return 0
    parts = tuple(s + i * m for i in range(k) if s + i * m <= n)
    key = (parts, n)
    if key in _restricted_cache:
        return _restricted_cache[key]

    def walk(remaining, idx):
        if remaining == 0:
            return 1
        if idx == len(parts):
            return 0
        total = 0
        used = 0
        while used <= remaining:
            total += walk(remaining - used, idx + 1)
            used += parts[idx]
        return total

    value = walk(n, 0)
    _restricted_cache[key] = value
    return value


def inner_coefficient(s, m, n):
    """Coefficient of q^n in sum_{k>=1} q^k (1-q^k) / (q^s; q^m)_k."""
    return sum(
        restricted_count(s, m, k, n - k) - restricted_count(s, m, k, n - 2 * k)
        for k in range(1, n + 1)
    )


def write(name, header, rows):
    path = HERE / name
    with path.open("w") as out:
        out.write(f"# {header}\n")
        for row in rows:
            out.write("\t".join(str(v) for v in row) + "\n")
    print(f"wrote {path} ({len(rows)} rows)")


def main():
    write(
        "partition_numbers.tsv",
        "n p(n), sympy partition counter",
        [(n, partition_number(n)) for n in range(101)],
    )

    rows = []
    for n in range(41):
        more_odd, more_even, tied = bias_counts(n, 1, 2, 2)
        rows.append((n, more_odd, more_even, tied))
    write("parity_bias_m2.tsv", "n more_odd more_even tied, enumeration", rows)

    rows = []
    for n in range(31):
        row = [n]
        for a, b in ((1, 2), (1, 3), (2, 3)):
            more_a, more_b, _ = bias_counts(n, a, b, 3)
            row.extend([more_a, more_b])
        rows.append(tuple(row))
    write(
        "bias_m3.tsv",
        "n p12 p21 p13 p31 p23 p32 (mod 3), enumeration",
        rows,
    )

    for s, m in ((1, 1), (2, 3)):
        write(
            f"inner_s{s}_m{m}.tsv",
            f"n coefficient of inner series s={s} m={m}, enumeration formula",
            [(n, inner_coefficient(s, m, n)) for n in range(41)],
        )

    rows = []
    for s in range(1, 4):
        for m in range(1, 4):
            for k in range(6):
                for n in range(26):
                    rows.append((s, m, k, n, restricted_count(s, m, k, n)))
    write("restricted_counts.tsv", "s m k n count, enumeration", rows)


if __name__ == "__main__":
    main()

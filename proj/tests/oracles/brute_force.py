#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Groups are modelled directly as tuples (rotation exponent, reflection bit) or
residues, never through Cayley tables, so nothing here shares code or
indexing conventions with the library beyond the documented element order.
"""
import itertools
import sys
from math import gcd


def cyclic(n):
    elems = list(range(n))
    return elems, (lambda x, y: (x + y) % n), (lambda x: (-x) % n), 0


def dihedral(n):
    # index i < n is a^i, index n + i is a^i b; b a = a^-1 b
    elems = [(i, 0) for i in range(n)] + [(i, 1) for i in range(n)]

    def mul(x, y):
        (i, s), (j, t) = x, y
        return ((i + (j if s == 0 else -j)) % n, s ^ t)

    def inv(x):
        i, s = x
        return ((-i) % n, 0) if s == 0 else x

    return elems, mul, inv, (0, 0)


def sizes(elems, mul, inv, subset):
    ss = {mul(x, y) for x in subset for y in subset}
    ds = {mul(x, inv(y)) for x in subset for y in subset}
    return len(ss), len(ds)


def census(group):
    elems, mul, inv, _ = group
    counts = [0, 0, 0]  # sum-dominant, balanced, diff-dominant
    for bits in range(1 << len(elems)):
        s = [elems[i] for i in range(len(elems)) if bits >> i & 1]
        a, b = sizes(elems, mul, inv, s)
        counts[0 if a > b else 1 if a == b else 2] += 1
    return counts


def miss_counts(group, mode):
    elems, mul, inv, _ = group
    n = len(elems)
    out = [0] * n
    for bits in range(1 << n):
        s = [elems[i] for i in range(n) if bits >> i & 1]
        if mode == "sum":
            hit = {mul(x, y) for x in s for y in s}
        else:
            hit = {mul(x, inv(y)) for x in s for y in s}
        for g in range(n):
            if elems[g] not in hit:
                out[g] += 1
    return out


def main():
    print("conway", sizes(*cyclic(100)[:3], [0, 2, 3, 4, 7, 11, 12, 14]))
    for n in range(3, 9):
        print(f"dihedral:{n}", census(dihedral(n)))
    for n in range(1, 9):
        print(f"cyclic:{n}", census(cyclic(n)))
    print("dihedral:4 census", census(dihedral(4)))
    print("D6 sum misses", miss_counts(dihedral(3), "sum"))
    print("D6 diff misses", miss_counts(dihedral(3), "diff"))
    print("C4 sum misses", miss_counts(cyclic(4), "sum"))
    print("C6 diff misses", miss_counts(cyclic(6), "diff"))
    print("D12 sum misses", miss_counts(dihedral(6), "sum"))
    # pair lemma: P(k not in S1+S2) over Z/2, count of (S1,S2) pairs
    for n in (1, 2, 3):
        elems, mul, inv, _ = cyclic(n)
        cnt = 0
        for a in range(1 << n):
            for b in range(1 << n):
                s1 = [i for i in range(n) if a >> i & 1]
                s2 = [i for i in range(n) if b >> i & 1]
                if 0 not in {mul(x, y) for x in s1 for y in s2}:
                    cnt += 1
        print(f"pair cyclic:{n} k=0 misses {cnt} of {1 << 2 * n}")


if __name__ == "__main__":
    sys.exit(main())

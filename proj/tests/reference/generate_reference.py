#!/usr/bin/env python3
# Independent reimplementation of the seeded generator, used to freeze the
# golden values in test_gen_io.cpp. Run: python3 generate_reference.py
import itertools
import math

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def counter_hash(seed, counter):
    z = (seed + (counter + 1) * GOLDEN) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def unit_draw(seed, rank, stream):
    return (counter_hash(seed, 2 * rank + stream) >> 11) * 2.0**-53


def generate(n, d, p, low, high, integer, seed):
    lines = [f"scx {d} {n}"]
    for rank, c in enumerate(itertools.combinations(range(1, n + 1), d + 1)):
        if unit_draw(seed, rank, 0) < p:
            u = unit_draw(seed, rank, 1)
            if integer:
                ilow = math.ceil(low)
                span = math.floor(high) - ilow + 1
                w = min(ilow + math.floor(u * span), math.floor(high))
                ws = str(int(w))
            else:
                ws = repr(low + u * (high - low))
            lines.append(" ".join(map(str, c)) + " " + ws)
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    print(hex(counter_hash(0, 0)), hex(counter_hash(0, 1)), hex(counter_hash(42, 7)))
    print(repr(generate(6, 2, 0.5, 1, 10, True, 2026)))
    print(repr(generate(5, 1, 0.6, 0.5, 2.5, False, 7)))

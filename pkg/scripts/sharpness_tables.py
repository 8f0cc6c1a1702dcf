#!/usr/bin/env python3
"""Tables showing where the circumference/girth bound is sharp.

Directed cycles sit at the bottom of the range (value 2) and complete
symmetric digraphs at the top (value n); both families meet the bound
exactly, which brackets how much slack it can have elsewhere.
"""

import argparse

from dichroma import (
    bound_circ_girth,
    complete_symmetric,
    directed_cycle,
    exact_dichromatic_number,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-cycle", type=int, default=12)
    parser.add_argument("--max-complete", type=int, default=6)
    args = parser.parse_args()

    print("directed cycles")
    print(f"{'n':>3} {'bound':>6} {'oracle':>7}")
    for n in range(3, args.max_cycle + 1):
        d = directed_cycle(n)
        value = bound_circ_girth(d).value
        oracle, _ = exact_dichromatic_number(d)
        marker = "" if value == oracle else "  <- slack"
        print(f"{n:>3} {value:>6} {oracle:>7}{marker}")

    print()
    print("complete symmetric digraphs")
    print(f"{'n':>3} {'bound':>6} {'oracle':>7}")
    for n in range(2, args.max_complete + 1):
        d = complete_symmetric(n)
        value = bound_circ_girth(d).value
        oracle, _ = exact_dichromatic_number(d)
        marker = "" if value == oracle else "  <- slack"
        print(f"{n:>3} {value:>6} {oracle:>7}{marker}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

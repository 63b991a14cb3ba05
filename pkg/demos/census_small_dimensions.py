"""Walkthrough: exhaustive censuses of Bott matrices at small dimension.

Streams every strictly upper-triangular 0/1 matrix up to n = 6,
classifies each one, and tabulates how many are orientable, Kahler, and
Spin.  Also lists the Kahler-but-not-Spin population at n = 6, the
smallest dimension where it is nonempty.

Run:  python demos/census_small_dimensions.py
"""

from realbott import CSV_HEADER, CensusConfig, is_kahler, parse_bott, run_census


def main() -> None:
    print(CSV_HEADER)
    for n in range(1, 7):
        row, _ = run_census(CensusConfig(n=n, workers=2))
        print(row.to_csv())
    print()

    cfg = CensusConfig(n=6, emit_matrices=True, kahler=True, spin=False)
    _, lines = run_census(cfg)
    print(f"Kahler but not Spin at n = 6: {len(lines)} matrices")
    for line in lines[:5]:
        pairing = is_kahler(parse_bott(line))
        pairs = " ".join(f"({i + 1},{j + 1})" for i, j in pairing.pairs)
        print(f"  {line}   pairs {pairs}")
    if len(lines) > 5:
        print(f"  ... and {len(lines) - 5} more")


if __name__ == "__main__":
    main()

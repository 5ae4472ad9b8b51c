"""Offline OEIS fixtures and the alignments between catalog series and
the four entries they realize.

The b-files under fixtures/ are shipped with the package so the checks
stay hermetic; each file's header records how it was generated.
"""

from __future__ import annotations

from importlib import resources

from .series import gf_catalog

#: entry -> (pattern, shift): coefficient n of the pattern's avoidance
#: series equals fixture value a(n + shift).
ALIGNMENTS: dict[str, tuple[str, int]] = {
    "A244885": ("1010", 0),
    "A005183": ("0011", -1),  # holds for n >= 1
    "A082582": ("0111", 1),
    "A007051": ("1202", -1),  # holds for n >= 1
}


def read_bfile(entry: str) -> dict[int, int]:
    """Parse a fixture b-file ("n a(n)" per line, # comments allowed)."""
    if entry not in ALIGNMENTS:
        raise KeyError(f"no fixture for {entry}")
    text = (
        resources.files("ascentseq.fixtures").joinpath(f"{entry}.txt").read_text()
    )
    values: dict[int, int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, a = line.split()
        values[int(n)] = int(a)
    return values


def matching_terms(entry: str, order: int = 16) -> int:
    """Number of leading coefficients of the aligned catalog series that
    agree with the fixture; raises on the first disagreement.
    """
    pattern, shift = ALIGNMENTS[entry]
    fixture = read_bfile(entry)
    series = gf_catalog(pattern, order).int_coeffs()
    matched = 0
    for n, coeff in enumerate(series):
        key = n + shift
        if key not in fixture:
            continue
        if fixture[key] != coeff:
            raise AssertionError(
                f"{entry}[{key}] = {fixture[key]} but series({pattern})[{n}] "
                f"= {coeff}"
            )
        matched += 1
    return matched

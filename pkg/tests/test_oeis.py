"""The OEIS fixture files against the catalog, plus re-derivations of
their brute-forceable prefixes from the independent structures the
entries are known to count.
"""

import pytest

from ascentseq.oeis import ALIGNMENTS, matching_terms, read_bfile
from ascentseq.patterns import contains


def dyck_paths_avoiding_uudd(n):
    """Dyck paths of semilength n with no UUDD factor."""
    count = 0

    def rec(path, up, down):
        nonlocal count
        if path.endswith("UUDD"):
            return
        if up == n and down == n:
            count += 1
            return
        if up < n:
            rec(path + "U", up + 1, down)
        if down < up:
            rec(path + "D", up, down + 1)

    rec("", 0, 0)
    return count


def catalan_words_avoiding_1243(n):
    """Catalan words (w1=0, steps at most +1) avoiding the classical
    pattern 1243, i.e. normalized 0132."""
    if n == 0:
        return 1
    count = 0
    word = [0] * n

    def rec(d):
        nonlocal count
        if d == n:
            count += 1
            return
        for v in range(word[d - 1] + 2):
            word[d] = v
            if not contains(word[: d + 1], "0132"):
                rec(d + 1)

    rec(1)
    return count


class TestFixtures:
    @pytest.mark.parametrize("entry", sorted(ALIGNMENTS))
    def test_parse(self, entry):
        values = read_bfile(entry)
        assert values[0] >= 1
        assert len(values) >= 13

    @pytest.mark.parametrize("entry", sorted(ALIGNMENTS))
    def test_catalog_alignment(self, entry):
        assert matching_terms(entry, order=15) >= 12

    def test_unknown_entry(self):
        with pytest.raises(KeyError):
            read_bfile("A000001")


class TestIndependentDerivations:
    def test_a082582_counts_uudd_avoiding_dyck_paths(self):
        fixture = read_bfile("A082582")
        for n in range(10):
            assert fixture[n] == dyck_paths_avoiding_uudd(n)

    def test_a244885_counts_1243_avoiding_catalan_words(self):
        fixture = read_bfile("A244885")
        for n in range(10):
            assert fixture[n] == catalan_words_avoiding_1243(n)

    def test_a005183_closed_form(self):
        fixture = read_bfile("A005183")
        for n in range(1, 16):
            assert fixture[n] == n * 2 ** (n - 1) + 1

    def test_a007051_closed_form(self):
        fixture = read_bfile("A007051")
        for n in range(16):
            assert fixture[n] == (3 ** n + 1) // 2

"""Pattern containment with {<,>,=} order-isomorphism semantics, and
pruned exhaustive enumeration of pattern-avoiding ascent sequences.

A pattern is a word using every letter of {0,...,l} for some l.  A word
contains a pattern when some index subsequence matches it under all
pairwise <, > and = comparisons; otherwise the word avoids it.
"""

from __future__ import annotations

import bisect
import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import MAX_LENGTH, Word, _check_length, parse_sequence

PATTERN_021 = (0, 2, 1)


@dataclass(frozen=True)
class Pattern:
    """A normalized pattern: letters cover {0,...,alphabet_top} exactly."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("patterns are non-empty")
        top = max(self.letters)
        if set(self.letters) != set(range(top + 1)):
            raise ValueError(
                f"pattern letters must cover 0..{top}: {list(self.letters)!r}"
            )

    @property
    def alphabet_top(self) -> int:
        return max(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        if self.alphabet_top > 9:
            return ",".join(str(a) for a in self.letters)
        return "".join(str(a) for a in self.letters)


def normalize_pattern(word: Word | str) -> Pattern:
    """Relabel a word onto the contiguous alphabet {0..l}, preserving all
    pairwise {<,>,=} relations.  Idempotent on normalized input.
    """
    letters = _as_letters(word)
    if not letters:
        raise ValueError("cannot normalize an empty word")
    rank = {v: i for i, v in enumerate(sorted(set(letters)))}
    return Pattern(tuple(rank[v] for v in letters))


@dataclass(frozen=True)
class PatternSet:
    """An ordered, duplicate-free collection of normalized patterns."""

    patterns: tuple[Pattern, ...]

    def __post_init__(self) -> None:
        pats = tuple(self.patterns)
        if len({p.letters for p in pats}) != len(pats):
            raise ValueError("duplicate patterns after normalization")
        object.__setattr__(self, "patterns", pats)

    @classmethod
    def of(cls, *words: Word | str | Pattern) -> "PatternSet":
        pats = []
        seen = set()
        for w in words:
            p = w if isinstance(w, Pattern) else normalize_pattern(w)
            if p.letters not in seen:
                seen.add(p.letters)
                pats.append(p)
        return cls(tuple(pats))

    @classmethod
    def parse(cls, text: str) -> "PatternSet":
        parts = [part.strip() for part in text.split(",") if part.strip()]
        if not parts:
            raise ValueError(f"no patterns in {text!r}")
        return cls.of(*parts)

    def __iter__(self) -> Iterator[Pattern]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, item: Word | str | Pattern) -> bool:
        target = item.letters if isinstance(item, Pattern) else _as_letters(item)
        return any(p.letters == target for p in self.patterns)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.patterns)


def _as_letters(word: Word | str | Pattern) -> tuple[int, ...]:
    if isinstance(word, Pattern):
        return word.letters
    if isinstance(word, str):
        return parse_sequence(word)
    return tuple(word)


class _Matcher:
    """Incremental partial-match tracker for one pattern.

    A state with k matched positions is the tuple of word values bound to
    the distinct letters of pattern[:k], ordered by pattern letter; the
    value tuple is strictly increasing by construction, which makes states
    canonical and cheap to deduplicate.  Appending a word letter extends
    the states whose constraints it satisfies; completes() asks whether
    the letter would finish a full occurrence, using only states built
    from strictly earlier positions.
    """

    __slots__ = ("pattern", "m", "steps", "levels", "last_seen", "last_values")

    def __init__(self, pattern: Pattern):
        letters = pattern.letters
        self.pattern = letters
        self.m = len(letters)
        # steps[k] drives the transition consuming pattern position k:
        # (True, idx)  -> pattern[k] was already bound; the new letter must
        #                 equal state[idx] and the state tuple is unchanged.
        # (False, ins) -> new distinct pattern letter; the new word letter
        #                 must sit strictly between state[ins-1], state[ins].
        steps: list[tuple[bool, int]] = []
        for k in range(self.m):
            prev = sorted(set(letters[:k]))
            t = letters[k]
            if t in prev:
                steps.append((True, prev.index(t)))
            else:
                steps.append((False, bisect.bisect_left(prev, t)))
        self.steps = steps
        self.levels: list[set[tuple[int, ...]]] = [set() for _ in range(self.m)]
        self.last_seen = steps[self.m - 1][0]
        # For a repeated final letter, index the top-level states by the
        # value the final letter must equal: completes() becomes O(1).
        self.last_values: dict[int, int] = {}

    def completes(self, a: int) -> bool:
        if self.m == 1:
            return True
        if self.last_seen:
            return a in self.last_values
        ins = self.steps[self.m - 1][1]
        for state in self.levels[self.m - 1]:
            if (ins == 0 or state[ins - 1] < a) and (
                ins == len(state) or a < state[ins]
            ):
                return True
        return False

    def push(self, a: int) -> list[tuple[int, tuple[int, ...]]]:
        """Register an appended letter; returns an undo token for pop()."""
        added: list[tuple[int, tuple[int, ...]]] = []
        levels = self.levels
        top = self.m - 1
        # High levels first so the new letter is never used twice.
        for k in range(self.m - 2, 0, -1):
            seen, pos = self.steps[k]
            target = levels[k + 1]
            if seen:
                for state in levels[k]:
                    if state[pos] == a and state not in target:
                        target.add(state)
                        added.append((k + 1, state))
            else:
                for state in levels[k]:
                    if (pos == 0 or state[pos - 1] < a) and (
                        pos == len(state) or a < state[pos]
                    ):
                        ns = state[:pos] + (a,) + state[pos:]
                        if ns not in target:
                            target.add(ns)
                            added.append((k + 1, ns))
        if self.m > 1:
            s1 = (a,)
            if s1 not in levels[1]:
                levels[1].add(s1)
                added.append((1, s1))
        if self.last_seen:
            pos = self.steps[top][1]
            for k, state in added:
                if k == top:
                    v = state[pos]
                    self.last_values[v] = self.last_values.get(v, 0) + 1
        return added

    def pop(self, token: list[tuple[int, tuple[int, ...]]]) -> None:
        if self.last_seen:
            pos = self.steps[self.m - 1][1]
            for k, state in token:
                if k == self.m - 1:
                    v = state[pos]
                    c = self.last_values[v] - 1
                    if c:
                        self.last_values[v] = c
                    else:
                        del self.last_values[v]
        for k, state in token:
            self.levels[k].discard(state)


def contains(word: Word, pattern: Pattern | Word | str) -> bool:
    """True iff some subsequence of word is order isomorphic to pattern."""
    pat = pattern if isinstance(pattern, Pattern) else normalize_pattern(pattern)
    matcher = _Matcher(pat)
    for a in word:
        if matcher.completes(a):
            return True
        matcher.push(a)
    return False


def occurrence_count(word: Word, pattern: Pattern | Word | str) -> int:
    """Number of index subsequences of word order isomorphic to pattern.

    Dynamic program over canonical partial-match states, carrying the
    number of index tuples realizing each state.
    """
    pat = pattern if isinstance(pattern, Pattern) else normalize_pattern(pattern)
    m = len(pat)
    steps = _Matcher(pat).steps
    states: list[dict[tuple[int, ...], int]] = [dict() for _ in range(m)]
    total = 0
    for a in word:
        for k in range(m - 1, 0, -1):
            seen, pos = steps[k]
            for state, count in states[k].items():
                if seen:
                    if state[pos] != a:
                        continue
                    ns = state
                else:
                    if not (
                        (pos == 0 or state[pos - 1] < a)
                        and (pos == len(state) or a < state[pos])
                    ):
                        continue
                    ns = state[:pos] + (a,) + state[pos:]
                if k == m - 1:
                    total += count
                else:
                    states[k + 1][ns] = states[k + 1].get(ns, 0) + count
        if m == 1:
            total += 1
        else:
            states[1][(a,)] = states[1].get((a,), 0) + 1
    return total


def _coerce_patterns(patterns) -> PatternSet:
    if isinstance(patterns, PatternSet):
        return patterns
    if isinstance(patterns, str):
        return PatternSet.parse(patterns)
    return PatternSet.of(*patterns)


def _prepare_walk(n: int, patterns: PatternSet, prefix: tuple[int, ...]):
    """Shared setup for the avoider DFS: matcher construction plus prefix
    replay.  Returns None when the prefix already contains a pattern.

    When 021 is among the patterns its avoidance is enforced structurally:
    a 021-avoider is exactly an ascent sequence whose positive letters are
    nondecreasing.  That keeps 021 out of the per-letter matcher work.
    """
    rest = [p for p in patterns if p.letters != PATTERN_021]
    native_021 = len(rest) < len(patterns)
    matchers = [_Matcher(p) for p in rest]
    word = list(prefix) + [0] * (n - len(prefix))
    asc = 0
    lastpos = 0
    for i, letter in enumerate(prefix):
        if any(m.completes(letter) for m in matchers):
            return None
        for m in matchers:
            m.push(letter)
        if i and letter > prefix[i - 1]:
            asc += 1
        if letter:
            lastpos = letter
    return matchers, native_021, word, asc, lastpos


def _candidates(native_021: bool, asc: int, lastpos: int) -> Iterable[int]:
    if not native_021:
        return range(asc + 2)
    if lastpos <= 1:
        return range(asc + 2)
    if lastpos > asc + 1:
        return (0,)
    return (0, *range(lastpos, asc + 2))


def _walk_avoiders(n, patterns: PatternSet, on_node, prefix=()) -> None:
    """DFS over avoider prefixes extending `prefix`, calling
    on_node(depth, word) at every node of depth len(prefix)..n; only
    word[:depth] is meaningful and the list must not be kept.  A branch is
    cut as soon as extending would complete any pattern (containment is
    monotone under extension).
    """
    setup = _prepare_walk(n, patterns, tuple(prefix))
    if setup is None:
        return
    matchers, native_021, word, asc0, lastpos0 = setup

    def rec(depth: int, asc: int, lastpos: int) -> None:
        on_node(depth, word)
        if depth == n:
            return
        prev = word[depth - 1] if depth else -1
        for letter in _candidates(native_021, asc, lastpos):
            if any(m.completes(letter) for m in matchers):
                continue
            word[depth] = letter
            tokens = [m.push(letter) for m in matchers]
            rec(
                depth + 1,
                asc + 1 if letter > prev else asc,
                letter if letter else lastpos,
            )
            for m, tok in zip(matchers, tokens):
                m.pop(tok)

    d0 = len(prefix)
    if d0 == 0:
        on_node(0, word)
        if n == 0:
            return
        if any(m.completes(0) for m in matchers):
            return
        word[0] = 0
        tokens = [m.push(0) for m in matchers]
        rec(1, 0, 0)
        for m, tok in zip(matchers, tokens):
            m.pop(tok)
    else:
        rec(d0, asc0, lastpos0)


def avoiders(
    n: int,
    patterns: PatternSet | Iterable[Word | str] | str,
    *,
    max_length: int = MAX_LENGTH,
) -> Iterator[tuple[int, ...]]:
    """Yield the length-n ascent sequences avoiding every given pattern,
    in lexicographic order.
    """
    _check_length(n, max_length)
    pats = _coerce_patterns(patterns)
    setup = _prepare_walk(n, pats, ())
    if setup is None:
        return
    matchers, native_021, word, _, _ = setup
    if n == 0:
        yield ()
        return
    if any(m.completes(0) for m in matchers):
        return

    def rec(depth: int, asc: int, lastpos: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(word)
            return
        prev = word[depth - 1]
        for letter in _candidates(native_021, asc, lastpos):
            if any(m.completes(letter) for m in matchers):
                continue
            word[depth] = letter
            tokens = [m.push(letter) for m in matchers]
            yield from rec(
                depth + 1,
                asc + 1 if letter > prev else asc,
                letter if letter else lastpos,
            )
            for m, tok in zip(matchers, tokens):
                m.pop(tok)

    word[0] = 0
    tokens = [m.push(0) for m in matchers]
    yield from rec(1, 0, 0)
    for m, tok in zip(matchers, tokens):
        m.pop(tok)


@dataclass(frozen=True)
class CountVector:
    """Avoider counts b_0..b_N for one pattern set."""

    pattern_set: PatternSet
    horizon: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.horizon + 1:
            raise ValueError("counts must cover 0..horizon")
        if self.counts[0] != 1:
            raise ValueError("the empty sequence avoids everything")

    def to_json_dict(self) -> dict:
        return {
            "patterns": [str(p) for p in self.pattern_set],
            "horizon": self.horizon,
            "counts": list(self.counts),
        }

    def to_bfile(self) -> str:
        return "".join(f"{n} {c}\n" for n, c in enumerate(self.counts))


def _count_below(args) -> list[int]:
    """Pool worker: finish the DFS below each prefix, tallying depths
    strictly beyond the prefix length.
    """
    n, pattern_strings, prefixes = args
    pats = PatternSet.of(*pattern_strings)
    counts = [0] * (n + 1)
    for prefix in prefixes:
        d = len(prefix)

        def on_node(depth, word, _d=d):
            if depth > _d:
                counts[depth] += 1

        _walk_avoiders(n, pats, on_node, prefix)
    return counts


def count_avoiders(
    patterns: PatternSet | Iterable[Word | str] | str,
    horizon: int,
    *,
    max_length: int = MAX_LENGTH,
    workers: int = 1,
) -> CountVector:
    """Count avoiders of every length up to the horizon in one pruned
    depth-first sweep (every avoider is a node of the search tree).

    With workers > 1 the tree is partitioned below depth-2 prefixes
    across a process pool; counts are identical for any worker count.
    """
    _check_length(horizon, max_length)
    pats = _coerce_patterns(patterns)
    counts = [0] * (horizon + 1)
    if workers <= 1 or horizon < 4:

        def on_node(depth, word):
            counts[depth] += 1

        _walk_avoiders(horizon, pats, on_node)
        return CountVector(pats, horizon, tuple(counts))

    split = 2
    prefixes: list[tuple[int, ...]] = []

    def collect(depth, word):
        if depth < split:
            counts[depth] += 1
        else:
            prefixes.append(tuple(word[:depth]))

    _walk_avoiders(split, pats, collect)
    counts[split] = len(prefixes)
    pattern_strings = tuple(str(p) for p in pats)
    chunks = [prefixes[i::workers] for i in range(workers)]
    jobs = [(horizon, pattern_strings, chunk) for chunk in chunks if chunk]
    if jobs:
        with multiprocessing.get_context("fork").Pool(len(jobs)) as pool:
            for part in pool.map(_count_below, jobs):
                for depth in range(split + 1, horizon + 1):
                    counts[depth] += part[depth]
    return CountVector(pats, horizon, tuple(counts))


def all_patterns(length: int) -> list[Pattern]:
    """All normalized patterns of the given length, lexicographically."""
    if length < 1:
        raise ValueError("pattern length must be positive")
    out: list[Pattern] = []
    word: list[int] = []
    used = [False] * length

    def extend(top: int, missing: int) -> None:
        slots = length - len(word)
        if slots == 0:
            if missing == 0:
                out.append(Pattern(tuple(word)))
            return
        for letter in range(length):
            # A letter above top opens a gap of unseen values below it; a
            # previously unseen letter at or below top closes one.
            if letter > top:
                new_missing = missing + (letter - top - 1)
            elif not used[letter]:
                new_missing = missing - 1
            else:
                new_missing = missing
            if new_missing > slots - 1:
                continue
            was_used = used[letter]
            used[letter] = True
            word.append(letter)
            extend(max(top, letter), new_missing)
            word.pop()
            used[letter] = was_used

    extend(-1, 0)
    return out


def catalan(n: int) -> int:
    """The n-th Catalan number, which counts 021-avoiders of length n."""
    from math import comb

    return comb(2 * n, n) // (n + 1)

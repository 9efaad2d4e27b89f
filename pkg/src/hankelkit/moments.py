"""Moment sequences: the indexed rational inputs to every determinant here.

A sequence only promises deterministic indexed access to exact rationals.
Generators are provided for Catalan numbers, explicit lists, seeded random
rationals and index shifts. Identity-level code additionally assumes term 0
equals 1; that is checked there, not enforced by the sequence type, so the
determinant layer stays usable for arbitrary sequences.
"""

import json
import math
import random
from fractions import Fraction

from .errors import IndexBeyondKnownMoments
from .scalars import as_rational


class MomentSequence:
    """Deterministic map index -> Fraction, optionally of known finite length.

    Instances never mutate after construction: finite kinds hold a
    materialized tuple and unbounded kinds use a pure function of the index,
    so concurrent reads are safe.
    """

    __slots__ = ("name", "kind", "length", "_fetch")

    def __init__(self, name, fetch, length=None, kind="custom"):
        self.name = name
        self.kind = kind
        self.length = length
        self._fetch = fetch

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"moment index must be >= 0, got {n}")
        if self.length is not None and n >= self.length:
            raise IndexBeyondKnownMoments(
                f"{self.name!r} defines moments 0..{self.length - 1}, index {n} requested"
            )
        return self._fetch(n)

    def prefix(self, count: int) -> tuple:
        """The first `count` terms as a tuple."""
        return tuple(self(i) for i in range(count))

    def __repr__(self):
        span = "unbounded" if self.length is None else f"{self.length} terms"
        return f"MomentSequence({self.name!r}, {span})"


def catalan(n: int) -> Fraction:
    """n-th Catalan number binom(2n, n)/(n+1), always integer-valued."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    return Fraction(math.comb(2 * n, n), n + 1)


def catalan_sequence() -> MomentSequence:
    """The unbounded sequence 1, 1, 2, 5, 14, 42, ..."""
    return MomentSequence("catalan", catalan, kind="catalan")


def from_list(values, name="list") -> MomentSequence:
    """Finite sequence over explicit values; indexing past the end raises."""
    terms = tuple(as_rational(v) for v in values)
    if not terms:
        raise ValueError("a moment sequence needs at least one term")
    return MomentSequence(name, terms.__getitem__, length=len(terms), kind="explicit-list")


def random_moments(seed: int, count: int, bound: int) -> MomentSequence:
    """Seeded random rational moments with term 0 pinned to 1.

    Each of terms 1..count-1 draws a nonzero numerator uniformly from
    [-bound, bound] and a denominator uniformly from [1, bound], then
    reduces. The same (seed, count, bound) always yields the same terms.
    """
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    if bound < 1:
        raise ValueError(f"need bound >= 1, got {bound}")
    rng = random.Random(seed)
    terms = [Fraction(1)]
    for _ in range(count - 1):
        num = 0
        while num == 0:
            num = rng.randint(-bound, bound)
        terms.append(Fraction(num, rng.randint(1, bound)))
    return MomentSequence(
        f"random:{seed}:{count}:{bound}",
        tuple(terms).__getitem__,
        length=count,
        kind="seeded-random",
    )


def shift(seq: MomentSequence, k: int) -> MomentSequence:
    """The sequence i -> seq(i + k). Index errors of `seq` pass through."""
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    length = None if seq.length is None else max(seq.length - k, 0)
    return MomentSequence(
        f"shift({seq.name},{k})", lambda i: seq(i + k), length=length, kind="shifted"
    )


def sequence_from_doc(doc) -> MomentSequence:
    """Build a sequence from the document {"name": str, "moments": ["p/q", ...]}."""
    if not isinstance(doc, dict):
        raise ValueError("sequence document must be a JSON object")
    name = doc.get("name")
    moments = doc.get("moments")
    if not isinstance(name, str) or not isinstance(moments, list) or not moments:
        raise ValueError('sequence document needs a "name" and a nonempty "moments" list')
    terms = []
    for entry in moments:
        if isinstance(entry, float) or not isinstance(entry, (str, int)):
            raise ValueError(f"moments must be rational literals, got {entry!r}")
        terms.append(as_rational(entry))
    return from_list(terms, name=name)


def load_sequence(path) -> MomentSequence:
    """Read a sequence document from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        return sequence_from_doc(json.load(fh))


def required_moment_count(m: int, n: int) -> int:
    """Number of moments an (m, n) identity check can touch: indices 0..2(m+n)-2.

    The division-free form reads indices up to 2(m+n-1)-1 on its left side
    and up to 2m+n-1 on its right; the original form needs 2(m+n-1)-1 for
    its largest coefficient block and 2m+n-2 for its right side. The
    maximum over both forms and every n >= 1 is 2(m+n)-2, so a sequence
    with 2(m+n)-1 terms always suffices.
    """
    return 2 * (m + n) - 1

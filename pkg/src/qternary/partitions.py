"""Brute-force enumeration of the partitions counted by A_{k,m}(n).

No series arithmetic is used here; this is the ground truth the generating
functions are checked against.

A partition qualifies for profile ``k >= 1`` when

* every part t < k appears two or three times,
* the part k appears once or twice,
* parts in (k, 2k] appear any number of times (``m`` counts them), and
* no part exceeds 2k.

The part k must appear at least once.  The prose rule "k appears at most
twice" would also admit zero copies, but the generating function carries a
mandatory factor q^k and B(2) = -1 rules the extra partitions out.

For ``k = 0`` only the empty partition of 0 qualifies, with sign +1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    multiplicities: tuple  # sorted ((part, multiplicity), ...)
    total: int = field(init=False)
    num_parts: int = field(init=False)

    def __post_init__(self):
        for part, mult in self.multiplicities:
            if part < 1 or mult < 1:
                raise ValueError(f"bad part/multiplicity {part}x{mult}")
        object.__setattr__(self, "total", sum(p * m for p, m in self.multiplicities))
        object.__setattr__(self, "num_parts", sum(m for _, m in self.multiplicities))

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        return cls(tuple(sorted(Counter(parts).items())))

    def parts(self) -> tuple:
        return tuple(p for p, m in self.multiplicities for _ in range(m))

    def multiplicity(self, part: int) -> int:
        return dict(self.multiplicities).get(part, 0)

    def __repr__(self):
        return "{" + ",".join(map(str, self.parts())) + "}"


@dataclass(frozen=True)
class QualifyingProfile:
    k: int

    def admits(self, p: Partition) -> bool:
        k = self.k
        if k == 0:
            return p.total == 0
        mult = dict(p.multiplicities)
        if any(part > 2 * k for part in mult):
            return False
        if any(mult.get(t, 0) not in (2, 3) for t in range(1, k)):
            return False
        return mult.get(k, 0) in (1, 2)

    def m_of(self, p: Partition) -> int:
        return sum(m for part, m in p.multiplicities if part > self.k)

    def sign_of(self, p: Partition) -> int:
        small = sum(m for part, m in p.multiplicities if part <= self.k)
        return 1 if small % 2 else -1


def _large_multisets(lo: int, hi: int, target: int) -> Iterator[tuple]:
    """Multisets of parts in [lo, hi] summing to target, as (part, mult) tuples."""
    if target == 0:
        yield ()
        return
    if lo > hi or lo > target:
        return
    for mult in range(target // lo + 1):
        for rest in _large_multisets(lo + 1, hi, target - mult * lo):
            yield ((lo, mult),) + rest if mult else rest


def enumerate_partitions(k: int, n: int) -> list[tuple[Partition, int, int]]:
    """All qualifying partitions of n for profile k, as (partition, m, sign)."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be non-negative")
    profile = QualifyingProfile(k)
    if k == 0:
        return [(Partition(()), 0, 1)] if n == 0 else []
    if k * k > n:
        # lightest qualifying partition is 1+1+2+2+...+(k-1)+(k-1)+k = k^2
        return []
    out = []
    choices = [(2, 3)] * (k - 1) + [(1, 2)]
    for mults in product(*choices):
        small = tuple((t, mu) for t, mu in zip(range(1, k + 1), mults))
        rest = n - sum(t * mu for t, mu in small)
        if rest < 0:
            continue
        for large in _large_multisets(k + 1, 2 * k, rest):
            p = Partition(small + large)
            assert profile.admits(p) and p.total == n, p
            out.append((p, profile.m_of(p), profile.sign_of(p)))
    out.sort(key=lambda t: (t[1], t[0].multiplicities))
    return out


# public alias; ``enumerate`` would shadow the builtin
enumerate_qualifying = enumerate_partitions


@lru_cache(maxsize=None)
def _cells(k: int, n: int) -> dict:
    signed: dict[int, int] = {}
    plain: dict[int, int] = {}
    for _, m, sign in enumerate_partitions(k, n):
        signed[m] = signed.get(m, 0) + sign
        plain[m] = plain.get(m, 0) + 1
    return {"signed": signed, "plain": plain}


def abar_count(k: int, m: int, n: int) -> int:
    """Abar_{k,m}(n): odd-minus-even count by the number of parts <= k."""
    return _cells(k, n)["signed"].get(m, 0)


def a_count(k: int, m: int, n: int) -> int:
    return _cells(k, n)["plain"].get(m, 0)


def _ks(n: int):
    k = 0
    while k * k <= n:
        yield k
        k += 1


def b_oracle(n: int) -> int:
    return sum(sum(_cells(k, n)["signed"].values()) for k in _ks(n))


def bbar_oracle(n: int) -> int:
    return sum(
        (-1) ** (m + k) * v for k in _ks(n) for m, v in _cells(k, n)["signed"].items()
    )

"""Rewriting system for path-algebra ideals over F2.

Polynomials are finite sets of words (tuples of arrow names); addition is
symmetric difference.  Words are compared in deglex order: length first,
then the fixed arrow alphabet.  Completion resolves all overlaps of
leading words, giving a confluent system whose irreducible ("normal")
words form a basis of the quotient algebra.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .words import ARROW_INDEX

Word = Tuple[str, ...]
Poly = FrozenSet[Word]


class CapExceeded(RuntimeError):
    """A rewriting word exceeded the hard length cap."""


def word_key(w: Word):
    return (len(w), tuple(ARROW_INDEX[a] for a in w))


def leading(poly: Poly) -> Word:
    return max(poly, key=word_key)


def _find_factor(w: Word, lead: Word) -> Optional[int]:
    n, m = len(w), len(lead)
    for i in range(n - m + 1):
        if w[i : i + m] == lead:
            return i
    return None


class RewriteSystem:
    """A set of rules lead -> tail (tail a set of strictly smaller words)."""

    def __init__(self, hard_cap: int):
        self.rules: List[Tuple[Word, Poly]] = []
        self.hard_cap = hard_cap

    def reduce(self, poly: Iterable[Word]) -> Poly:
        terms: Set[Word] = set()
        for w in poly:
            terms ^= {w}
        changed = True
        while changed:
            changed = False
            for w in sorted(terms, key=word_key, reverse=True):
                for lead, tail in self.rules:
                    i = _find_factor(w, lead)
                    if i is None:
                        continue
                    pre, post = w[:i], w[i + len(lead):]
                    terms ^= {w}
                    for t in tail:
                        terms ^= {pre + t + post}
                    changed = True
                    break
                if changed:
                    break
        return frozenset(terms)

    def _add_rule(self, poly: Poly) -> bool:
        poly = self.reduce(poly)
        if not poly:
            return False
        lead = leading(poly)
        if len(lead) > self.hard_cap:
            raise CapExceeded(f"rule lead length {len(lead)} exceeds cap")
        self.rules.append((lead, poly - {lead}))
        return True

    def complete(self, generators: Iterable[Iterable[Word]]):
        # FIFO keeps short generators from being starved behind overlap
        # chains that they would reduce away
        pending = deque(frozenset(g) for g in generators)
        processed_pairs = 0
        while pending:
            poly = pending.popleft()
            if not self._add_rule(poly):
                continue
            new = len(self.rules) - 1
            u, _ = self.rules[new]
            for idx in range(len(self.rules)):
                v, _ = self.rules[idx]
                for s in self._spolys(new, idx) + self._spolys(idx, new):
                    pending.append(s)
                processed_pairs += 1
                if processed_pairs > 200000:
                    raise CapExceeded("completion did not terminate")
        self._interreduce()

    def _spolys(self, i: int, j: int) -> List[Poly]:
        """Obligations from lead(i) against lead(j): containments of
        lead(j) inside lead(i) and proper overlaps suffix(i)=prefix(j)."""
        u, ftail = self.rules[i]
        v, gtail = self.rules[j]
        out: List[Poly] = []
        # containment: u = pre + v + post (skip the identical trivial case)
        if not (i == j):
            start = 0
            while True:
                k = _find_factor(u[start:], v)
                if k is None:
                    break
                k += start
                pre, post = u[:k], u[k + len(v):]
                s: Set[Word] = set(ftail)
                for t in gtail:
                    s ^= {pre + t + post}
                out.append(frozenset(s))
                start = k + 1
        # proper overlap: u = p + s, v = s + q with 0 < |s| < min
        for k in range(1, min(len(u), len(v))):
            if u[-k:] == v[:k]:
                q = v[k:]
                p = u[:-k]
                s = set()
                for t in ftail:
                    s ^= {t + q}
                for t in gtail:
                    s ^= {p + t}
                out.append(frozenset(s))
        return out

    def _interreduce(self):
        changed = True
        while changed:
            changed = False
            for idx in range(len(self.rules)):
                lead, tail = self.rules[idx]
                others = RewriteSystem(self.hard_cap)
                others.rules = self.rules[:idx] + self.rules[idx + 1:]
                poly = others.reduce({lead} | set(tail))
                if not poly:
                    self.rules.pop(idx)
                    changed = True
                    break
                new_lead = leading(poly)
                if (new_lead, poly - {new_lead}) != (lead, tail):
                    self.rules[idx] = (new_lead, poly - {new_lead})
                    changed = True
        self.rules.sort(key=lambda r: word_key(r[0]))

    def is_normal(self, w: Word) -> bool:
        return all(_find_factor(w, lead) is None for lead, _ in self.rules)

"""
Minimum prime covers with explicit tie-breaking.

The covering step of Quine-McCluskey: pick a minimum-cost set of primes
covering every minterm. Essential primes are taken first; the rest is an
exact branch and bound. Several covers usually share the minimum cost, so
the tie-break decides which one is returned. Primes are ranked by a
candidate order (canonical, reversed, or a seeded shuffle) and the cover
whose sorted rank vector is lexicographically smallest wins.
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from loguru import logger

from model.errors import CapExceededError
from qm.terms import ClassDnf, DnfKind

DEFAULT_FEATURE_CAP = 20


class CostModel(str, Enum):
    TERMS_THEN_LITERALS = "terms"
    LITERALS_THEN_TERMS = "literals"


@dataclass(frozen=True)
class TieBreak:
    mode: str
    seed: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> 'TieBreak':
        """`lexlow`, `lexhigh` or `seeded:<n>`."""
        token = str(text).strip().lower()
        if token in ("lexlow", "lexhigh"):
            return cls(token)
        if token.startswith("seeded:"):
            try:
                return cls("seeded", int(token.split(":", 1)[1]))
            except ValueError:
                pass
        raise ValueError(f"unknown tie-break {text!r} (expected lexlow, lexhigh or seeded:<n>)")

    def order(self, primes: list) -> list:
        """Primes in candidate order; `primes` must already be canonical."""
        ranked = list(primes)
        if self.mode == "lexhigh":
            ranked.reverse()
        elif self.mode == "seeded":
            random.Random(self.seed).shuffle(ranked)
        return ranked

    def __str__(self) -> str:
        return f"seeded:{self.seed}" if self.mode == "seeded" else self.mode


LEX_LOW = TieBreak("lexlow")
LEX_HIGH = TieBreak("lexhigh")


class CoverProblem:
    """Minterms of a class predicate and the primes covering them.

    `primes` is in candidate order; `coverage[i]` is the set of minterms
    prime i covers.
    """

    def __init__(self, dnf: ClassDnf, order: TieBreak = LEX_LOW,
                 cost_model: CostModel = CostModel.TERMS_THEN_LITERALS,
                 feature_cap: int = DEFAULT_FEATURE_CAP):
        if dnf.n_features > feature_cap:
            raise CapExceededError(
                f"minterm covering over {dnf.n_features} features is above the cap of {feature_cap}")
        self.dnf = dnf
        self.cost_model = cost_model
        self.primes = order.order(dnf.terms)
        self.coverage = [frozenset(p.minterms(dnf.n_features)) for p in self.primes]
        self.minterms = sorted(set().union(*self.coverage)) if self.coverage else []
        self.coverers: dict = {m: [] for m in self.minterms}
        for i, covered in enumerate(self.coverage):
            for m in covered:
                self.coverers[m].append(i)

    def cost(self, chosen) -> tuple:
        terms = len(chosen)
        literals = sum(self.primes[i].size for i in chosen)
        if self.cost_model == CostModel.LITERALS_THEN_TERMS:
            return literals, terms
        return terms, literals

    def essential(self) -> list:
        return sorted({c[0] for c in self.coverers.values() if len(c) == 1})

    def _bound(self, chosen: list, uncovered: set, allowed: list) -> tuple:
        widest = max((len(self.coverage[i] & uncovered) for i in allowed), default=1) or 1
        extra = -(-len(uncovered) // widest)
        cheapest = min((self.primes[i].size for i in allowed), default=0)
        terms = len(chosen) + extra
        literals = sum(self.primes[i].size for i in chosen) + extra * cheapest
        if self.cost_model == CostModel.LITERALS_THEN_TERMS:
            return literals, terms
        return terms, literals

    def search(self, collect_all: bool = False) -> list:
        """Minimum-cost covers as sorted tuples of prime indices.

        Returns only the tie-break winner unless `collect_all` is set.
        """
        base = self.essential()
        uncovered = set(self.minterms)
        for i in base:
            uncovered -= self.coverage[i]
        best_cost = [None]
        found: list = []

        def record(chosen: list) -> None:
            cover = tuple(sorted(chosen))
            cost = self.cost(cover)
            if best_cost[0] is None or cost < best_cost[0]:
                best_cost[0] = cost
                found[:] = [cover]
            elif cost == best_cost[0]:
                if collect_all:
                    found.append(cover)
                elif cover < found[0]:
                    found[0] = cover

        def visit(chosen: list, uncovered: set, excluded: frozenset) -> None:
            if not uncovered:
                record(chosen)
                return
            allowed = [i for i in range(len(self.primes))
                       if i not in excluded and i not in chosen and self.coverage[i] & uncovered]
            if best_cost[0] is not None and self._bound(chosen, uncovered, allowed) > best_cost[0]:
                return
            options = {m: [i for i in self.coverers[m] if i not in excluded] for m in uncovered}
            pivot = min(options, key=lambda m: (len(options[m]), m))
            tried = set()
            for i in options[pivot]:
                visit(chosen + [i], uncovered - self.coverage[i], excluded | tried)
                tried.add(i)

        visit(list(base), uncovered, frozenset())
        return sorted(set(found))

    def solution(self, indices) -> ClassDnf:
        return self.dnf.with_terms((self.primes[i] for i in indices), DnfKind.MINIMIZED)


def minimize(dnf: ClassDnf, tie_break: TieBreak = LEX_LOW,
             cost_model: CostModel = CostModel.TERMS_THEN_LITERALS,
             feature_cap: int = DEFAULT_FEATURE_CAP) -> ClassDnf:
    """Exact minimum-cost prime cover of `dnf`'s minterms (pass a BCF).

    Raises:
        CapExceededError: more features than `feature_cap`.
    """
    problem = CoverProblem(dnf, tie_break, cost_model, feature_cap)
    if not problem.minterms:
        return dnf.with_terms((), DnfKind.MINIMIZED)
    cover = problem.search()[0]
    result = problem.solution(cover)
    logger.debug(f"class {dnf.label}: {len(dnf.terms)} primes -> {len(result.terms)}-term cover ({tie_break})")
    return result


def all_minimum_covers(dnf: ClassDnf, cost_model: CostModel = CostModel.TERMS_THEN_LITERALS,
                       feature_cap: int = DEFAULT_FEATURE_CAP) -> list:
    """Every minimum-cost prime cover, each as a minimized ClassDnf."""
    problem = CoverProblem(dnf, LEX_LOW, cost_model, feature_cap)
    if not problem.minterms:
        return [dnf.with_terms((), DnfKind.MINIMIZED)]
    return [problem.solution(cover) for cover in problem.search(collect_all=True)]


def count_minimum_covers(dnf: ClassDnf, cost_model: CostModel = CostModel.TERMS_THEN_LITERALS,
                         feature_cap: int = DEFAULT_FEATURE_CAP) -> int:
    return len(all_minimum_covers(dnf, cost_model, feature_cap))

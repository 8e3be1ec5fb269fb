"""Rigged configurations and the box-adding/box-removing bijection.

The forward map processes tensor factors left to right, letters 2 before
letters 1 within a factor.  A letter 2 at in-factor position i (0-based)
extends one of the longest singular rows of width >= i, judged against the
vacancy numbers *before* the new quantum-space box is added; the extended
row is then re-rigged to be singular in the updated configuration.  The
inverse map mirrors this box by box from the last factor backwards.

Unrestricted riggings (possibly negative) are the default; ``strict=True``
enforces the nonnegative window everywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .crystal import Box


class InvalidRiggedConfigurationError(ValueError):
    pass


@dataclass(frozen=True)
class RiggedConfiguration:
    """Quantum space lambda plus rigged rows (mu_i, r_i).

    Pairs are kept in the canonical order: mu descending, rigging ascending.
    """

    quantum_space: tuple
    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "quantum_space", tuple(self.quantum_space))
        object.__setattr__(
            self, "pairs", canonical_pairs(self.pairs)
        )
        if any(l < 1 for l in self.quantum_space):
            raise InvalidRiggedConfigurationError("quantum space rows must be positive")
        if any(mu < 1 for mu, _ in self.pairs):
            raise InvalidRiggedConfigurationError("mu rows must be positive")

    def vacancy(self, j: int) -> int:
        return vacancy_number(self, j)

    def to_json(self) -> str:
        return json.dumps(
            {"quantum_space": list(self.quantum_space),
             "pairs": [list(p) for p in self.pairs]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "RiggedConfiguration":
        data = json.loads(text)
        return cls(tuple(data["quantum_space"]),
                   tuple((mu, r) for mu, r in data["pairs"]))


def canonical_pairs(pairs) -> tuple:
    return tuple(sorted(((mu, r) for mu, r in pairs), key=lambda p: (-p[0], p[1])))


def vacancy_number(rc: RiggedConfiguration, j: int) -> int:
    """p_j = sum_k min(j, lambda_k) - 2 sum_k min(j, mu_k)."""
    q0 = sum(min(j, l) for l in rc.quantum_space)
    q1 = sum(min(j, mu) for mu, _ in rc.pairs)
    return q0 - 2 * q1


def validate(rc: RiggedConfiguration, strict: bool = False) -> None:
    """Raise unless rc is a valid (un)restricted rigged configuration."""
    for mu, r in rc.pairs:
        p = vacancy_number(rc, mu)
        if r > p:
            raise InvalidRiggedConfigurationError(
                f"rigging {r} exceeds vacancy number {p} for width {mu}"
            )
        lower = 0 if strict else -mu
        if r < lower:
            raise InvalidRiggedConfigurationError(
                f"rigging {r} below {lower} for width {mu}"
            )
        if strict and p < 0:
            raise InvalidRiggedConfigurationError(
                f"negative vacancy number {p} for width {mu}"
            )


def _vacancy(lam, rows, j):
    q0 = sum(l if l < j else j for l in lam)
    q1 = sum(row[0] if row[0] < j else j for row in rows)
    return q0 - 2 * q1


def _add_letter2(lam, rows, i):
    """One letter-2 step of the box-adding map; mutates lam and rows."""
    vac = {}
    best = None
    for idx, (width, rig) in enumerate(rows):
        if width < i:
            continue
        p = vac.get(width)
        if p is None:
            p = vac[width] = _vacancy(lam, rows, width)
        if rig == p and (best is None or width > rows[best][0]):
            best = idx
    lam[-1] += 1
    if best is None:
        rows.append([1, None])
        best = len(rows) - 1
    else:
        rows[best][0] += 1
    rows[best][1] = _vacancy(lam, rows, rows[best][0])


def phi(path: Sequence[Box]) -> RiggedConfiguration:
    """Box-adding map from an arbitrary path (highest or not)."""
    lam: list = []
    rows: list = []      # [width, rigging] in creation order
    for site in path:
        lam.append(0)
        for i in range(site.x2):
            _add_letter2(lam, rows, i)
        lam[-1] += site.x1
    return RiggedConfiguration(tuple(lam), tuple((w, r) for w, r in rows))


def phi_trace(path: Sequence[Box]):
    """Yield the intermediate configuration after every added box.

    Zero-width quantum rows (a factor whose letters are not started yet)
    are dropped from the snapshots.
    """
    lam: list = []
    rows: list = []
    for site in path:
        lam.append(0)
        for i in range(site.x2):
            _add_letter2(lam, rows, i)
            yield RiggedConfiguration(
                tuple(l for l in lam if l), tuple((w, r) for w, r in rows)
            )
        for _ in range(site.x1):
            lam[-1] += 1
            yield RiggedConfiguration(
                tuple(l for l in lam if l), tuple((w, r) for w, r in rows)
            )


def phi_inverse(rc: RiggedConfiguration, strict: bool = False) -> tuple:
    """Box-removing map; inverse of phi on valid rigged configurations."""
    validate(rc, strict=strict)
    lam = list(rc.quantum_space)
    rows = [[mu, r] for mu, r in rc.pairs]
    factors = []
    for pos in range(len(lam) - 1, -1, -1):
        x1 = x2 = 0
        for col in range(lam[pos], 0, -1):
            vac = {}
            best = None
            for idx, (width, rig) in enumerate(rows):
                if width < col:
                    continue
                p = vac.get(width)
                if p is None:
                    p = vac[width] = _vacancy(lam, rows, width)
                if rig == p and (best is None or width < rows[best][0]):
                    best = idx
            lam[pos] -= 1
            if best is None:
                x1 += 1
            else:
                x2 += 1
                rows[best][0] -= 1
                if rows[best][0] == 0:
                    del rows[best]
                else:
                    rows[best][1] = _vacancy(lam, rows, rows[best][0])
        factors.append(Box(x1, x2))
        lam.pop()
    if rows:
        raise InvalidRiggedConfigurationError(
            "removal finished with rigged rows left over; not in the image of phi"
        )
    return tuple(reversed(factors))


def prepend_ones_shift(rc: RiggedConfiguration, count: int) -> RiggedConfiguration:
    """Image of phi(1^(x)count (x) b) when rc = phi(b): widths keep, riggings +count."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    return RiggedConfiguration(
        (1,) * count + rc.quantum_space,
        tuple((mu, r + count) for mu, r in rc.pairs),
    )

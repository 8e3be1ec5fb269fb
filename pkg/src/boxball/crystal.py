"""Rank-one crystals of one-row tableaux and the combinatorial R-matrix.

A site holds ``x1`` copies of letter 1 and ``x2`` copies of letter 2 and is
rendered as the nondecreasing digit string, e.g. ``Box(2, 1) -> "112"``.
Paths are plain tuples of boxes; all operations are pure.

Index conventions: the operator index ``i`` lives in Z_2, so component
subscripts wrap (x_0 means x_2).
"""

from __future__ import annotations

import re as _re
from typing import NamedTuple, Sequence


class Box(NamedTuple):
    """One-row semistandard tableau (x1, x2) of capacity x1 + x2."""

    x1: int
    x2: int

    @property
    def capacity(self) -> int:
        return self.x1 + self.x2

    @property
    def weight(self) -> int:
        return self.x1 - self.x2

    def as_string(self) -> str:
        if self.x1 < 0 or self.x2 < 0:
            raise ValueError(f"negative multiplicities in {self!r}")
        if self.x1 + self.x2 == 0:
            raise ValueError("empty box is an internal sentinel, not serializable")
        return "1" * self.x1 + "2" * self.x2

    def __str__(self) -> str:
        return self.as_string()


class AffineBox(NamedTuple):
    """Box with an integer spectral mode, rendered like "112[3]"."""

    box: Box
    mode: int

    def as_string(self) -> str:
        return f"{self.box.as_string()}[{self.mode}]"

    def __str__(self) -> str:
        return self.as_string()


Path = tuple  # tuple of Box


def box_from_string(token: str) -> Box:
    """Parse a site token; rejects empty, decreasing or non-{1,2} tokens."""
    if not token:
        raise ValueError("empty site token")
    x1 = x2 = 0
    seen2 = False
    for ch in token:
        if ch == "1":
            if seen2:
                raise ValueError(f"decreasing site token {token!r}")
            x1 += 1
        elif ch == "2":
            seen2 = True
            x2 += 1
        else:
            raise ValueError(f"invalid letter {ch!r} in site token {token!r}")
    return Box(x1, x2)


def parse_path(text: str) -> Path:
    """Parse a path like "122.112.111" (separators: "." or whitespace).

    Doubled, leading or trailing separators leave an empty token, which is
    rejected along with decreasing tokens.
    """
    t = _re.sub(r"\s*\.\s*", ".", text.strip())
    t = _re.sub(r"\s+", ".", t)
    if not t:
        raise ValueError("empty path")
    return tuple(box_from_string(token) for token in t.split("."))


def render_path(path: Sequence[Box], sep: str = ".") -> str:
    return sep.join(b.as_string() for b in path)


def highest_box(l: int) -> Box:
    """The all-ones element u_l = (l, 0)."""
    if l < 0:
        raise ValueError("capacity must be nonnegative")
    return Box(l, 0)


def weight(b) -> int:
    """Coefficient of the path weight in units of the fundamental weight."""
    if isinstance(b, Box):
        return b.weight
    return sum(x.weight for x in b)


def capacities(path: Sequence[Box]) -> tuple:
    return tuple(b.capacity for b in path)


# ---------------------------------------------------------------------------
# Kashiwara operators via the signature rule.

def _box_eps_phi(b: Box, i: int):
    if i == 1:
        return b.x2, b.x1
    return b.x1, b.x2


def _signature(path: Sequence[Box], i: int):
    """Reduced i-signature bookkeeping in one linear pass.

    Returns (minus_owners, plus_owners): factor indices owning each
    surviving "-" and "+", left to right.  "+-" cancellation only ever
    removes the most recently surviving "+", so a stack suffices.
    """
    minus_owners: list = []
    plus_owners: list = []
    for idx, b in enumerate(path):
        eps, phi = _box_eps_phi(b, i)
        while eps and plus_owners:
            plus_owners.pop()
            eps -= 1
        minus_owners.extend([idx] * eps)
        plus_owners.extend([idx] * phi)
    return minus_owners, plus_owners


def eps_phi(b, i: int):
    """(epsilon_i, phi_i) of a box or a path, by the reduced i-signature."""
    if i not in (0, 1):
        raise ValueError("operator index must be 0 or 1")
    if isinstance(b, Box):
        return _box_eps_phi(b, i)
    minus, plus = _signature(b, i)
    return len(minus), len(plus)


def _box_f(b: Box, i: int):
    if i == 1:
        nb = Box(b.x1 - 1, b.x2 + 1)
    else:
        nb = Box(b.x1 + 1, b.x2 - 1)
    return nb if nb.x1 >= 0 and nb.x2 >= 0 else None


def _box_e(b: Box, i: int):
    if i == 1:
        nb = Box(b.x1 + 1, b.x2 - 1)
    else:
        nb = Box(b.x1 - 1, b.x2 + 1)
    return nb if nb.x1 >= 0 and nb.x2 >= 0 else None


def kashiwara_f(path: Sequence[Box], i: int):
    """Lowering operator on a tensor product; None when annihilated."""
    if i not in (0, 1):
        raise ValueError("operator index must be 0 or 1")
    _, plus = _signature(path, i)
    if not plus:
        return None
    idx = plus[0]
    out = list(path)
    out[idx] = _box_f(out[idx], i)
    return tuple(out)


def kashiwara_e(path: Sequence[Box], i: int):
    """Raising operator on a tensor product; None when annihilated."""
    if i not in (0, 1):
        raise ValueError("operator index must be 0 or 1")
    minus, _ = _signature(path, i)
    if not minus:
        return None
    idx = minus[-1]
    out = list(path)
    out[idx] = _box_e(out[idx], i)
    return tuple(out)


def weyl_s(path: Sequence[Box], i: int) -> Path:
    """Involutive Weyl reflection: f_i^(phi-eps) or e_i^(eps-phi)."""
    eps, phi = eps_phi(path, i)
    b = tuple(path)
    if phi >= eps:
        for _ in range(phi - eps):
            b = kashiwara_f(b, i)
    else:
        for _ in range(eps - phi):
            b = kashiwara_e(b, i)
    return b


def omega(b):
    """Letter swap 1 <-> 2 at every site (diagram automorphism)."""
    if isinstance(b, Box):
        return Box(b.x2, b.x1)
    return tuple(Box(x.x2, x.x1) for x in b)


def is_highest(path: Sequence[Box]) -> bool:
    """True iff the raising operator e_1 annihilates the path."""
    minus, _ = _signature(path, 1)
    return not minus


# ---------------------------------------------------------------------------
# Combinatorial R-matrix.

def combinatorial_r(x: Box, y: Box):
    """Map x (x) y to (y~, x~, H) under B_k (x) B_l ~ B_l (x) B_k.

    Closed form: Q0 = min(x1, y2), Q1 = min(x2, y1), H = Q0,
    x~_i = x_i + Q_i - Q_{i-1} and y~_i = y_i + Q_{i-1} - Q_i (indices in Z_2).
    Capacities travel with the symbols: y~ has y's capacity, x~ has x's.
    """
    q0 = x.x1 if x.x1 < y.x2 else y.x2
    q1 = x.x2 if x.x2 < y.x1 else y.x1
    ytilde = Box(y.x1 + q0 - q1, y.x2 + q1 - q0)
    xtilde = Box(x.x1 + q1 - q0, x.x2 + q0 - q1)
    return ytilde, xtilde, q0


def energy_h(x: Box, y: Box) -> int:
    """Local energy H(x (x) y) = Q0 = min(x1, y2)."""
    return x.x1 if x.x1 < y.x2 else y.x2


def affine_r(a: AffineBox, b: AffineBox):
    """Affine R: modes transform as (d, e) -> (e - H, d + H)."""
    ytilde, xtilde, h = combinatorial_r(a.box, b.box)
    return AffineBox(ytilde, b.mode - h), AffineBox(xtilde, a.mode + h)

"""Local energy tables and the soliton-grouping route to rigged configurations.

The table row l records H(u_l^(j-1) (x) b_j) along the path for the carrier
started at u_l; rows grow until they stop changing.  Grouping the 1s of the
difference table (top-down or bottom-up) identifies the solitons, and the
closed rigging formula turns each group into a rigged row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .crystal import Box, combinatorial_r, highest_box
from .kkr import RiggedConfiguration


class MalformedTableError(ValueError):
    """Grouping could not consume every 1; upstream table is inconsistent."""


@dataclass(frozen=True)
class EnergyTable:
    """Cumulative local energies E[l][j] with the carriers that built them.

    ``values[l-1][j-1]`` holds E_{l,j}; ``carriers[l-1][j]`` holds u_l^{(j)}
    with the initial carrier at index 0.  Row 0 (all zeros) is implicit.
    """

    shape: tuple
    values: tuple
    carriers: tuple

    @property
    def rows(self) -> int:
        return len(self.values)

    @property
    def columns(self) -> int:
        return len(self.shape)

    def energy(self, l: int, j: int) -> int:
        """E_{l,j}; rows beyond the stored ones repeat the last row."""
        if l <= 0:
            return 0
        return self.values[min(l, self.rows) - 1][j - 1]

    def row_sum(self, l: int) -> int:
        return sum(self.values[min(l, self.rows) - 1]) if l > 0 else 0

    def difference(self, l: int, j: int) -> int:
        return self.energy(l, j) - self.energy(l - 1, j)

    def difference_rows(self) -> list:
        return [
            [self.difference(l, j) for j in range(1, self.columns + 1)]
            for l in range(1, self.rows + 1)
        ]


def local_energy_table(path: Sequence[Box], l_max: int | None = None) -> EnergyTable:
    """Build the table, auto-extending until two difference rows vanish."""
    shape = tuple(b.capacity for b in path)
    cap = sum(shape)
    values = []
    carriers = []
    zero_rows = 0
    l = 0
    while l < cap and (zero_rows < 2 or (l_max is not None and l < l_max)):
        l += 1
        u = highest_box(l)
        row = []
        row_carriers = [u]
        for b in path:
            _, u, h = combinatorial_r(u, b)
            row.append(h)
            row_carriers.append(u)
        values.append(tuple(row))
        carriers.append(tuple(row_carriers))
        prev = values[-2] if len(values) > 1 else (0,) * len(shape)
        zero_rows = zero_rows + 1 if tuple(row) == tuple(prev) else 0
    return EnergyTable(shape, tuple(values), tuple(carriers))


def _ones(table: EnergyTable):
    ones = set()
    for l in range(1, table.rows + 1):
        for j in range(1, table.columns + 1):
            d = table.difference(l, j)
            if d not in (0, 1):
                raise MalformedTableError(f"difference {d} at ({l},{j})")
            if d:
                ones.add((l, j))
    return ones


def group_solitons(table: EnergyTable, rule: str = "top_down") -> list:
    """Partition the 1s of the difference table into solitons.

    Returns [(mu_k, j_k)] where j_k is the column of the deepest 1 of
    group k.  ``rule`` is "top_down" (start at the rightmost 1 of row one,
    walk weakly right downwards) or "bottom_up" (start at a lowest 1, walk
    to the nearest weakly-left 1 upwards).
    """
    ones = _ones(table)
    n_groups = table.row_sum(1)
    out = []
    if rule == "top_down":
        for _ in range(n_groups):
            row1 = [j for (l, j) in ones if l == 1]
            if not row1:
                raise MalformedTableError("ran out of starting 1s")
            j = max(row1)
            group = [(1, j)]
            l = 1
            while True:
                nxt = [jj for (ll, jj) in ones if ll == l + 1 and jj >= j]
                if not nxt:
                    break
                j = min(nxt)
                l += 1
                group.append((l, j))
            ones -= set(group)
            out.append((l, j))
    elif rule == "bottom_up":
        while ones:
            bottom = max(l for (l, _) in ones)
            j = min(jj for (ll, jj) in ones if ll == bottom)
            group = [(bottom, j)]
            for l in range(bottom - 1, 0, -1):
                cands = [jj for (ll, jj) in ones if ll == l and jj <= j]
                if not cands:
                    raise MalformedTableError(
                        f"no weakly-left 1 in row {l} below ({l + 1},{j})"
                    )
                j = max(cands)
                group.append((l, j))
            ones -= set(group)
            out.append((bottom, group[0][1]))
    else:
        raise ValueError(f"unknown grouping rule {rule!r}")
    if ones:
        raise MalformedTableError("grouping left 1s unconsumed")
    if len(out) != n_groups:
        raise MalformedTableError("group count disagrees with the first row sum")
    return out


def rigging_of_group(path: Sequence[Box], table: EnergyTable, mu: int, j: int) -> int:
    """r = sum_{i<j} min(mu, shape_i) + E_{mu,j} - 2 sum_{i<=j} E_{mu,i}."""
    shape = table.shape
    head = sum(min(mu, shape[i]) for i in range(j - 1))
    return head + table.energy(mu, j) - 2 * sum(
        table.energy(mu, i) for i in range(1, j + 1)
    )


def phi_via_energy(path: Sequence[Box], rule: str = "top_down") -> RiggedConfiguration:
    """Rigged configuration of a path through the energy-table route."""
    table = local_energy_table(path)
    groups = group_solitons(table, rule)
    pairs = tuple(
        (mu, rigging_of_group(path, table, mu, j)) for mu, j in groups
    )
    return RiggedConfiguration(table.shape, pairs)

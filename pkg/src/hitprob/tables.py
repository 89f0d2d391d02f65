"""Golden reference data: the published dimension table for five variables
in degrees 4(2^d - 1), the 100/620 split, the per-degree counts of
all-positive admissibles, and the parametric 21-monomial basis of the
four-variable quotient in those degrees.

Every exponent of the 21 templates has the form m * 2^(d-1) - 1 with
multiplier m in {1, 2, 3, 4}; the data file stores the multipliers.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List

from hitprob.monomials import Monomial

GOLDEN_SHA256 = "e5204d3bd06159f2958da80ca6af6135788d6ad5bb1b58ba2f38c09be63baee4"


@dataclass(frozen=True)
class GoldenTable:
    main_dims: Dict[int, int]  # d -> dim, with the d >= 5 plateau under key -1
    qp50_bar: int
    b_counts: Dict[int, int]  # d -> |B5+(omega_bar)|, plateau under key -1
    v_multipliers: tuple

    def main_dim(self, d: int) -> int:
        return self.main_dims.get(d, self.main_dims[-1])

    def b_count(self, d: int) -> int:
        return self.b_counts.get(d, self.b_counts[-1])


def _parse_plateau(raw: Dict[str, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for key, value in raw.items():
        out[-1 if key.endswith("+") else int(key)] = value
    return out


def load_golden() -> GoldenTable:
    blob = resources.files("hitprob.data").joinpath("golden.json").read_bytes()
    digest = hashlib.sha256(blob).hexdigest()
    if digest != GOLDEN_SHA256:
        raise RuntimeError(f"golden data checksum mismatch: {digest}")
    data = json.loads(blob)
    table = GoldenTable(
        main_dims=_parse_plateau(data["main_dims"]),
        qp50_bar=data["qp50_bar"],
        b_counts=_parse_plateau(data["b_counts"]),
        v_multipliers=tuple(tuple(row) for row in data["v_family_halved_multipliers"]),
    )
    _check_consistency(table)
    return table


def qp_omega_dim(k: int, d: int) -> int:
    """Closed form for the top-weight block: sum_{t=1..min(k,d)} C(k,t)."""
    return sum(math.comb(k, t) for t in range(1, min(k, d) + 1))


def _check_consistency(table: GoldenTable) -> None:
    """total(d) = top-block + zero-part + all-positive count, d >= 2."""
    for d in (2, 3, 4, 5):
        total = table.main_dim(d)
        expected = qp_omega_dim(5, d) + table.qp50_bar + table.b_count(d)
        if total != expected:
            raise RuntimeError(f"golden table inconsistent at d={d}")


def instantiate_v(d: int, table: GoldenTable | None = None) -> List[Monomial]:
    """The 21 four-variable admissible monomials of degree 4(2^d - 1)."""
    if d < 1:
        raise ValueError("d must be positive")
    if table is None:
        table = load_golden()
    half = 1 << (d - 1)
    out = [tuple(m * half - 1 for m in row) for row in table.v_multipliers]
    for mono in out:
        assert sum(mono) == 4 * ((1 << d) - 1)
    return out


def golden_bundle(d: int, table: GoldenTable | None = None) -> dict:
    """Expected dims for degree 4(2^d - 1) at k = 5."""
    if d < 1:
        raise ValueError("d must be positive")
    if table is None:
        table = load_golden()
    return {
        "total": table.main_dim(d),
        "qp_omega": qp_omega_dim(5, d),
        "qp0_bar": table.qp50_bar if d >= 2 else None,
        "b": table.b_count(d),
    }

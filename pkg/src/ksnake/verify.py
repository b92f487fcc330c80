"""Independent snake validation.

Checks a snake against the definitions only, never against construction
internals: the codewords are re-derived from the initial permutation and
transition sequence, and full-distance mode brute-forces the pairwise
Kendall distance over all codeword pairs instead of trusting the
odd-index argument it also checks.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .perms import Perm, is_even
from .snake import Snake


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class VerificationReport:
    mode: str
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        lines = [f"verification mode={self.mode}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"  {status}  {c.name}{suffix}")
        return "\n".join(lines) + "\n"


def verify_snake(snake: Snake, mode: str = "structural") -> VerificationReport:
    """Run the checks in order; a failure always carries a concrete witness."""
    if mode not in ("structural", "full"):
        raise ValueError(f"unknown mode {mode!r}")
    checks: list[CheckResult] = []
    rows, closing = _kernels.walk_codewords(snake.initial, snake.transitions)

    closed = tuple(int(v) for v in closing) == snake.initial
    checks.append(
        CheckResult(
            "cyclic closure",
            closed,
            None if closed else f"walk ends at {tuple(int(v) for v in closing)}",
        )
    )

    seen: dict[bytes, int] = {}
    dup = None
    for idx, row in enumerate(rows):
        k = row.tobytes()
        if k in seen and tuple(rows[seen[k]]) == tuple(row):
            dup = (seen[k], idx)
            break
        seen[k] = idx
    checks.append(
        CheckResult(
            "codewords distinct",
            dup is None,
            None if dup is None else f"positions {dup[0]} and {dup[1]} repeat a codeword",
        )
    )

    odd_ok = True
    witness = None
    for k, t in enumerate(snake.transitions):
        if t % 2 == 0:
            odd_ok, witness = False, f"transition {k} has even index t_{t}"
            break
    checks.append(CheckResult("transition indices odd", odd_ok, witness))

    inv = _kernels.inversion_counts(rows)
    odd_rows = np.nonzero(inv % 2 == 1)[0]
    checks.append(
        CheckResult(
            "codewords even",
            odd_rows.size == 0,
            None if odd_rows.size == 0 else f"codeword {int(odd_rows[0])} is odd",
        )
    )

    declared = snake.declared_size if snake.declared_size is not None else snake.size
    checks.append(
        CheckResult(
            "declared size matches",
            declared == len(rows),
            None if declared == len(rows) else f"declared {declared}, walked {len(rows)}",
        )
    )

    if mode == "full":
        d, i, j = _kernels.pairwise_min_kendall(rows)
        ok = d >= 2 or d == -1
        checks.append(
            CheckResult(
                "pairwise distance >= 2",
                ok,
                None if ok else f"codewords {i} and {j} at distance {d}",
            )
        )
    return VerificationReport(mode=mode, checks=checks)


def missing_codewords(snake: Snake) -> set[Perm]:
    """Even permutations of the ambient width not covered by the snake."""
    have = set(snake.codewords())
    w = snake.width
    out = set()
    for p in itertools.permutations(range(1, w + 1)):
        if p not in have and is_even(p):
            out.add(p)
    return out


def check_upper_bounds(snake: Snake) -> VerificationReport:
    """Size sanity bounds: |A_w| always, and the stricter even-index bound."""
    w = snake.width
    half = math.factorial(w) // 2
    checks = [
        CheckResult(
            "size <= |S_w|/2",
            snake.size <= half,
            None if snake.size <= half else f"{snake.size} > {half}",
        )
    ]
    if any(t % 2 == 0 for t in snake.transitions):
        bound = half - math.comb(w // 2 - 1, 2) / (w - 1)
        ok = snake.size <= bound
        checks.append(
            CheckResult(
                "even-index size bound",
                ok,
                None if ok else f"{snake.size} > {bound:.2f}",
            )
        )
    else:
        checks.append(CheckResult("even-index size bound (vacuous: odd-only)", True))
    return VerificationReport(mode="bounds", checks=checks)

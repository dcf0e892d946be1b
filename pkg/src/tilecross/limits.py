"""Explicit constants of the convergence theorem and certified bounds on c(T).

Every constant is an exact Fraction (ceilings are exact integers), so no
threshold depends on floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb
from typing import Callable

from .crossing import CrossingResult, SolveOptions, c_n, t_n
from .multigraph import SearchBudgetExceeded, is_connected
from .reduce import NotWeaklyLinkable, is_linked, limit_decomposition
from .tile import Tile, big_m


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _ceil(x: Fraction) -> int:
    return ceil(x)  # exact for Fraction


def lemma_upper_constants(t: Tile, eps) -> tuple[Fraction, Fraction]:
    """(n2, a0): n >= n2 and m >= a0*n give c_m/m <= c_n/n + eps."""
    eps = _frac(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    k, M = t.width, big_m(t)
    n2 = 2 * ((8 * k + 1) * M + comb(2 * k, 2)) / eps
    a0 = 2 * M / eps
    return n2, a0


def nearc_overhead(t: Tile, s: int) -> int:
    """Extra crossings allowed when turning a drawing of cyc(T^n) into a tile drawing."""
    if s < 1:
        raise ValueError(f"s must be at least 1, got {s}")
    k = t.width
    return (8 * k + 1) * big_m(t) * s + comb(2 * k, 2)


@dataclass(frozen=True)
class LboundConstants:
    beta: Fraction
    c: Fraction
    Q0: Fraction
    n0: int
    Q: Fraction
    n1: int


def lbound_constants(t: Tile, eps, alpha) -> LboundConstants:
    eps, alpha = _frac(eps), _frac(alpha)
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return _lbound(t.width, t.graph.edge_count, eps, alpha)


def _lbound(k: int, e: int, eps: Fraction, alpha: Fraction) -> LboundConstants:
    beta = eps / (8 * alpha)
    c = (comb(k, 2) + alpha) / beta
    Q0 = 2 * k * (2 * e + 2 * c + 4 * k) * (1 + beta) + 4 * k * k + 2 * alpha
    n0 = _ceil(2 * Q0 / eps)
    Q = 8 * c * (n0 + 1) * (1 + beta) + 4 * k * k * (n0 + 2) ** 2 + 2 * comb(k, 2)
    n1 = _ceil(2 * Q / eps)
    return LboundConstants(beta, c, Q0, n0, Q, n1)


@dataclass(frozen=True)
class ConstantLedger:
    epsilon: Fraction
    epsilon1: Fraction
    k: int
    edges: int
    M: int
    n2: Fraction
    a0: Fraction
    alpha_d: Fraction
    alpha_u: Fraction
    beta_d: Fraction
    beta_u: Fraction
    c_d: Fraction
    c_u: Fraction
    Q0_d: Fraction
    Q0_u: Fraction
    n0_d: int
    n0_u: int
    Q_u: Fraction
    n1_u: int
    N: int
    halvings: int
    # width 0: n0_d stays at 2 for every eps1, so n0_d >= n2 may be unreachable
    condition_met: bool = True
    notes: tuple[str, ...] = ()

    def rows(self) -> list[tuple[str, Fraction | int | bool]]:
        names = [
            "epsilon", "epsilon1", "k", "edges", "M", "n2", "a0",
            "alpha_d", "alpha_u", "beta_d", "beta_u", "c_d", "c_u",
            "Q0_d", "Q0_u", "n0_d", "n0_u", "Q_u", "n1_u", "N",
            "halvings", "condition_met",
        ]
        return [(name, getattr(self, name)) for name in names]


def _ledger_at(t: Tile, eps: Fraction, eps1: Fraction) -> dict:
    k, e, M = t.width, t.graph.edge_count, big_m(t)
    n2, a0 = lemma_upper_constants(t, eps / 2)
    alpha_d = eps1 / 2
    alpha_u = M + eps1 / 2
    beta_d = eps1 / (8 * alpha_u)
    beta_u = eps1 / (8 * alpha_d)
    c_d = (comb(k, 2) + alpha_d) / beta_u
    c_u = (comb(k, 2) + alpha_u) / beta_d
    Q0_d = 2 * k * (2 * e + 2 * c_d + 4 * k) * (1 + beta_d) + 4 * k * k + 2 * alpha_d
    Q0_u = 2 * k * (2 * e + 2 * c_u + 4 * k) * (1 + beta_u) + 4 * k * k + 2 * alpha_u
    n0_d = _ceil(2 * Q0_d / eps1)
    n0_u = _ceil(2 * Q0_u / eps1)
    Q_u = 8 * c_u * (n0_u + 1) * (1 + beta_u) + 4 * k * k * (n0_u + 2) ** 2 + 2 * comb(k, 2)
    n1_u = _ceil(2 * Q_u / eps1)
    return dict(
        epsilon=eps, epsilon1=eps1, k=k, edges=e, M=M, n2=n2, a0=a0,
        alpha_d=alpha_d, alpha_u=alpha_u, beta_d=beta_d, beta_u=beta_u,
        c_d=c_d, c_u=c_u, Q0_d=Q0_d, Q0_u=Q0_u, n0_d=n0_d, n0_u=n0_u,
        Q_u=Q_u, n1_u=n1_u, N=_ceil(a0 * n1_u),
    )


class NotReducedError(ValueError):
    pass


def theorem_N(t: Tile, eps, check: bool = True) -> ConstantLedger:
    """Ledger of the theorem's constants; for n >= N, |c_n(T)/n - c(T)| <= eps.

    eps1 starts at eps/2 and halves until n0_d >= n2.
    """
    eps = _frac(eps)
    if not 0 < eps <= 1:
        raise ValueError(f"eps must lie in (0, 1], got {eps}")
    if check:
        if not is_connected(t.graph):
            raise NotReducedError("tile is not connected; run `reduce`/`decompose` and use its subtiles")
        if not is_linked(t):
            raise NotReducedError("tile is not linked; run `reduce`/`decompose` and use its subtiles")
    eps1 = eps / 2
    halvings = 0
    if t.width == 0:
        values = _ledger_at(t, eps, eps1)
        met = values["n0_d"] >= values["n2"]
        note = () if met else ("width 0: n0_d = 2 for every eps1, so eps1 stays at eps/2",)
        return ConstantLedger(**values, halvings=0, condition_met=met, notes=note)
    while True:
        values = _ledger_at(t, eps, eps1)
        if values["n0_d"] >= values["n2"]:
            return ConstantLedger(**values, halvings=halvings)
        eps1 /= 2
        halvings += 1


@dataclass
class BoundRow:
    n: int
    c_n: CrossingResult | None = None
    t_n: CrossingResult | None = None


@dataclass
class LowerCandidate:
    n: int
    epsilon: Fraction | None
    value: Fraction | None
    binding: bool
    condition: str


@dataclass
class BoundReport:
    name: str
    rows: list[BoundRow]
    certified_upper: Fraction | None
    upper_from: str
    lower_candidates: list[LowerCandidate]
    exact: Fraction | None
    notes: list[str] = field(default_factory=list)


def _upper_from_rows(rows: list[BoundRow]) -> Fraction | None:
    ratios = [Fraction(r.t_n.value, r.n) for r in rows if r.t_n is not None and r.t_n.optimal]
    return min(ratios) if ratios else None


def _largest_eps(t: Tile, n: int) -> Fraction | None:
    """Largest eps in (0, 1] with N(eps) <= n, or None.

    N is nonincreasing in eps, so the answer is 1 or nothing.
    """
    return Fraction(1) if theorem_N(t, 1, check=False).N <= n else None


def estimate(
    t: Tile,
    n_max: int,
    opts: SolveOptions | None = None,
    name: str = "tile",
    solve_subtiles: bool = True,
    progress: Callable[[str], None] | None = None,
) -> BoundReport:
    """Solve c_n and t_n for n <= n_max and certify what they imply about c(T).

    Any t_n/n bounds c(T) from above because t_n is subadditive.  Lower
    candidates c_n/n - eps need n >= N(eps), which is reported honestly.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    opts = opts or SolveOptions()
    rows = []
    notes: list[str] = []
    for n in range(1, n_max + 1):
        row = BoundRow(n, c_n(t, n, opts), t_n(t, n, opts))
        for label, res in (("c", row.c_n), ("t", row.t_n)):
            if not res.optimal:
                notes.append(f"{label}_{n}: solver stopped ({res.status}), verdict {res.verdict()}")
        rows.append(row)
        if progress:
            progress(f"n={n} c={row.c_n.verdict()} t={row.t_n.verdict()}")
    upper = _upper_from_rows(rows)
    upper_from = "min t_n/n"

    reduced = False
    try:
        reduced = is_connected(t.graph) and is_linked(t)
    except SearchBudgetExceeded:
        notes.append("linkedness undecided within the path-search budget")

    if solve_subtiles and not reduced:
        try:
            dec = limit_decomposition(t)
        except NotWeaklyLinkable as exc:
            dec = None
            notes.append(f"no decomposition: {exc}")
        if dec is not None:
            parts = []
            for i, sub in enumerate(dec.subtiles):
                sub_rows = [BoundRow(n, None, t_n(sub, n, opts)) for n in range(1, n_max + 1)]
                parts.append(_upper_from_rows(sub_rows))
            if all(p is not None for p in parts):
                agg = dec.combine(parts)
                notes.append(f"decomposition: m={dec.m}, r={dec.r}, sum of subtile bounds / m = {agg}")
                if upper is None or agg < upper:
                    upper, upper_from = agg, "decomposition"
            else:
                notes.append("decomposition: some subtile solves stopped early")

    lowers = []
    for row in rows:
        if row.c_n is None or not row.c_n.optimal:
            continue
        if not reduced:
            lowers.append(LowerCandidate(row.n, None, None, False, "tile is not connected and linked"))
            continue
        eps = _largest_eps(t, row.n)
        if eps is None:
            N1 = theorem_N(t, 1, check=False).N
            lowers.append(LowerCandidate(row.n, None, None, False, f"needs n >= N(1) = {N1}"))
        else:
            lowers.append(LowerCandidate(row.n, eps, Fraction(row.c_n.value, row.n) - eps, True, f"n >= N({eps})"))

    exact = Fraction(0) if upper == 0 else None
    return BoundReport(name, rows, upper, upper_from, lowers, exact, notes)

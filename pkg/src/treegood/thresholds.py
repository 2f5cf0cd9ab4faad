"""Closed-form Ramsey values, minimum-degree thresholds and parameter windows.

Everything here is exact integer arithmetic; ceilings go through floor
division on negated numerators, never through floats.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from .errors import OutOfRegimeError, PreconditionError


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class Regime(str, enum.Enum):
    """Residue class of the star size: ``A`` means l = t(n-1)+1, ``B`` means l = t(n-1)+2."""

    A = "A"
    B = "B"

    @property
    def offset(self) -> int:
        return 1 if self is Regime.A else 2


def star_size(n: int, t: int, regime: Regime | str) -> int:
    return t * (n - 1) + Regime(regime).offset


@dataclass(frozen=True)
class Params:
    """The tuple (n, m, t, N) with its window (t+1)(n-1)(m-1)+1 <= N <= (t+2)(n-1)(m-1)."""

    n: int
    m: int
    t: int
    N: int

    def __post_init__(self):
        if self.m < 2 or self.n < 1 or self.t < 0:
            raise PreconditionError(f"need n >= 1, m >= 2, t >= 0; got {self}")

    @property
    def window(self) -> tuple[int, int]:
        span = (self.n - 1) * (self.m - 1)
        return (self.t + 1) * span + 1, (self.t + 2) * span

    @property
    def in_window(self) -> bool:
        lo, hi = self.window
        return lo <= self.N <= hi

    def require_window(self) -> None:
        if not self.in_window:
            lo, hi = self.window
            raise PreconditionError(f"N={self.N} outside window [{lo}, {hi}] for n={self.n}, m={self.m}, t={self.t}")

    def ell(self, regime: Regime | str) -> int:
        return star_size(self.n, self.t, regime)


def chvatal_r(n: int, m: int) -> int:
    """r(T_n, K_m) for any tree on n vertices."""
    if n < 1 or m < 1:
        raise PreconditionError("n and m must be positive")
    return (n - 1) * (m - 1) + 1


def regime_of(ell: int, n: int) -> Regime | None:
    if n < 2:
        return None
    if n == 2:
        # every l is both 1 and 2 mod 1; regime A is the one with a formula for stars
        return Regime.A
    r = (ell - 1) % (n - 1)
    if r == 0 and ell >= 1:
        return Regime.A
    if r == 1 and ell >= 2:
        return Regime.B
    return None


def _check_regime(ell: int, n: int, regime: Regime) -> int:
    if n < 2:
        raise PreconditionError("tree needs at least 2 vertices")
    t, r = divmod(ell - regime.offset, n - 1)
    if r or t < 0:
        raise OutOfRegimeError(f"l={ell} is not t(n-1)+{regime.offset} for n={n}")
    return t


def burr_r2(ell: int, n: int, regime: Regime | str) -> int:
    """r(K_{1,l}, T_n): l+n-1 in regime A, l+n-2 in regime B (B needs a non-star tree)."""
    regime = Regime(regime)
    _check_regime(ell, n, regime)
    return ell + n - 1 if regime is Regime.A else ell + n - 2


def r3_formula(n: int, m: int, t: int, regime: Regime | str) -> int:
    """r(K_{1,l}, T_n, K_m) with l = t(n-1)+1 (A) or t(n-1)+2 (B)."""
    regime = Regime(regime)
    if m < 2 or n < 2 or t < 0:
        raise PreconditionError("need n >= 2, m >= 2, t >= 0")
    ell = star_size(n, t, regime)
    if regime is Regime.A:
        value = (ell + n - 2) * (m - 1) + 1
    else:
        if (m - 2) % (n - 1) == 0:
            raise OutOfRegimeError(f"m-2={m - 2} is divisible by n-1={n - 1}")
        value = (ell + n - 3) * (m - 1) + 1
    assert value == (t + 1) * (n - 1) * (m - 1) + 1
    return value


def thm13_threshold(N: int, n: int, t: int) -> int:
    return N - t * (n - 1) - 1


def thm34_threshold(N: int, n: int, t: int) -> int:
    return N - t * (n - 1) - 2


def conj12_threshold(N: int, m: int, t: int) -> int:
    if m <= 1:
        raise PreconditionError("m must be at least 2")
    return N - ceil_div((t + 1) * ceil_div(N, m - 1), t + 2)


def conj14_threshold(N: int, m: int, t: int, max_deg: int, eps: int) -> int:
    if eps not in (1, 2):
        raise PreconditionError("epsilon must be 1 or 2")
    if m <= 1:
        raise PreconditionError("m must be at least 2")
    part = ceil_div(N, m - 1)
    return N - part + max(max_deg - eps + 1, part // (t + 2))


def construction1_min_degree(N: int, m: int, t: int) -> int:
    """Minimum degree of the clique-union colouring: one below the conjectured three-colour threshold."""
    return N - ceil_div((t + 1) * ceil_div(N, m - 1), t + 2) - 1


def construction2_min_degree(N: int, m: int, max_deg: int, eps: int) -> int:
    return N - ceil_div(N, m - 1) + max_deg - eps


def t_range(N: int, n: int, m: int) -> int | None:
    """The unique t >= 0 whose window contains N, or None below r(T_n, K_m)."""
    if n < 2 or m < 2:
        raise PreconditionError("need n, m >= 2")
    span = (n - 1) * (m - 1)
    if N <= span:
        return None
    return (N - 1) // span - 1


def remark_window_check(n: int, m: int, t: int, N: int) -> bool:
    """Whether (n, m, t, N) lies in the narrow range where the conjectured threshold follows from the degree-condition bound."""
    if not 3 <= n <= t + 4 or m < 2:
        return False
    if (m - 2) % (n - 1) == 0:
        return False
    base = (t + 1) * (n - 1) * (m - 1)
    return base + 1 <= N <= base + m - 1


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    m: int
    t: int
    N: int
    in_window: bool
    chvatal: int
    ell_a: int
    ell_b: int
    r2_a: int
    r2_b: int
    r3_a: int
    r3_b: int | None
    thm13: int
    thm34: int
    conj12: int
    construction1_delta: int
    remark_window: bool

    FIELDS = (
        "n", "m", "t", "N", "in_window", "chvatal", "ell_a", "ell_b", "r2_a", "r2_b",
        "r3_a", "r3_b", "thm13", "thm34", "conj12", "construction1_delta", "remark_window",
    )

    def row(self) -> dict:
        return asdict(self)


def threshold_report(n: int, m: int, t: int, N: int) -> ThresholdReport:
    p = Params(n, m, t, N)
    ell_a, ell_b = p.ell(Regime.A), p.ell(Regime.B)
    try:
        r3_b = r3_formula(n, m, t, Regime.B)
    except OutOfRegimeError:
        r3_b = None
    return ThresholdReport(
        n=n, m=m, t=t, N=N,
        in_window=p.in_window,
        chvatal=chvatal_r(n, m),
        ell_a=ell_a,
        ell_b=ell_b,
        r2_a=burr_r2(ell_a, n, Regime.A),
        r2_b=burr_r2(ell_b, n, Regime.B),
        r3_a=r3_formula(n, m, t, Regime.A),
        r3_b=r3_b,
        thm13=thm13_threshold(N, n, t),
        thm34=thm34_threshold(N, n, t),
        conj12=conj12_threshold(N, m, t),
        construction1_delta=construction1_min_degree(N, m, t),
        remark_window=remark_window_check(n, m, t, N),
    )
